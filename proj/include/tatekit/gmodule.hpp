#pragma once

#include "tatekit/group.hpp"

namespace tatekit {

/* A G-module: a finitely generated abelian group together with one
   automorphism per group element.  Homomorphy is checked on all pairs. */
class GModule {
public:
    GModule() = default;
    GModule(FiniteGroup g, FgAbGroup m, std::vector<IntMatrix> action, bool check = true)
        : g_(std::move(g)), m_(std::move(m)), act_(std::move(action)) {
        if (static_cast<int>(act_.size()) != g_.order())
            fail("BadShape", "one action matrix per group element required");
        for (const auto& a : act_)
            if (a.rows() != m_.gens() || a.cols() != m_.gens())
                fail("BadShape", "action matrix shape mismatch");
        if (check) validate();
    }

    const FiniteGroup& group() const { return g_; }
    const FgAbGroup& ab() const { return m_; }
    int gens() const { return m_.gens(); }
    const IntMatrix& action(int sigma) const { return act_[sigma]; }

    std::vector<Int> act(int sigma, const std::vector<Int>& x) const {
        return act_[sigma].apply(x);
    }

    bool is_trivial_module() const { return m_.is_trivial(); }

    /* the same abelian group with the action forgotten down to a subgroup,
       re-indexed over the subgroup's own element numbering */
    GModule restrict_to(const Subgroup& h) const {
        std::vector<IntMatrix> a;
        for (int i = 0; i < h.order(); ++i) a.push_back(act_[h.to_parent(i)]);
        return GModule(h.as_group(), m_, std::move(a), false);
    }

    static GModule trivial(const FiniteGroup& g, const FgAbGroup& m) {
        std::vector<IntMatrix> a(g.order(), IntMatrix::identity(m.gens()));
        return GModule(g, m, std::move(a), false);
    }
    static GModule trivial_z(const FiniteGroup& g) {
        return trivial(g, FgAbGroup::free_group(1));
    }
    static GModule zero(const FiniteGroup& g) { return trivial(g, FgAbGroup::zero()); }

private:
    void validate() {
        const int n = g_.order();
        for (int s = 0; s < n; ++s) {
            AbHom h(m_, m_, act_[s]); // checks well-definedness
            if (!is_isomorphism(h))
                fail("NotInvertible", "action of " + g_.name(s) + " is not an automorphism");
        }
        const IntMatrix& idm = act_[g_.identity()];
        if (!AbHom(m_, m_, idm, false).equal_map(AbHom::identity(m_)))
            fail("NotHomomorphic", "identity element must act as the identity");
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t) {
                IntMatrix st = act_[s] * act_[t];
                if (!AbHom(m_, m_, st, false).equal_map(AbHom(m_, m_, act_[g_.mul(s, t)], false)))
                    fail("NotHomomorphic",
                         "action(" + g_.name(s) + "*" + g_.name(t) + ") != action(" +
                             g_.name(s) + ") o action(" + g_.name(t) + ")");
            }
    }

    FiniteGroup g_;
    FgAbGroup m_;
    std::vector<IntMatrix> act_;
};

inline GModule build_gmodule(const FiniteGroup& g, const FgAbGroup& m,
                             const std::vector<IntMatrix>& action) {
    return GModule(g, m, action);
}

/* complete an action given on generators of the group: words are found by
   breadth-first products */
inline GModule gmodule_from_generators(const FiniteGroup& g, const FgAbGroup& m,
                                       const std::map<int, IntMatrix>& gen_action) {
    std::vector<IntMatrix> act(g.order(), IntMatrix(0, 0));
    std::vector<char> have(g.order(), 0);
    act[g.identity()] = IntMatrix::identity(m.gens());
    have[g.identity()] = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int x = 0; x < g.order(); ++x) {
            if (!have[x]) continue;
            for (const auto& [s, ms] : gen_action) {
                int y = g.mul(s, x);
                if (!have[y]) {
                    act[y] = ms * act[x];
                    have[y] = 1;
                    grew = true;
                }
            }
        }
    }
    for (int x = 0; x < g.order(); ++x)
        if (!have[x]) fail("NotGenerating", "given elements do not generate the group");
    return GModule(g, m, act);
}

/* An equivariant map between modules over the same group. */
class GHom {
public:
    GHom() = default;
    GHom(GModule src, GModule dst, IntMatrix m, bool check = true)
        : src_(std::move(src)), dst_(std::move(dst)),
          hom_(src_.ab(), dst_.ab(), std::move(m), check) {
        if (check && !equivariant()) fail("NotEquivariant", "map does not commute with the action");
    }

    const GModule& source() const { return src_; }
    const GModule& target() const { return dst_; }
    const AbHom& hom() const { return hom_; }
    const IntMatrix& matrix() const { return hom_.matrix(); }
    std::vector<Int> apply(const std::vector<Int>& x) const { return hom_.apply(x); }

    bool equivariant() const {
        for (int s = 0; s < src_.group().order(); ++s) {
            IntMatrix a = dst_.action(s) * hom_.matrix();
            IntMatrix b = hom_.matrix() * src_.action(s);
            if (!AbHom(src_.ab(), dst_.ab(), a, false).equal_map(AbHom(src_.ab(), dst_.ab(), b, false)))
                return false;
        }
        return true;
    }

    GHom compose(const GHom& inner) const {
        return GHom(inner.source(), dst_, hom_.matrix() * inner.matrix(), false);
    }

    static GHom zero(const GModule& src, const GModule& dst) {
        return GHom(src, dst, IntMatrix(dst.gens(), src.gens()), false);
    }
    static GHom identity(const GModule& m) {
        return GHom(m, m, IntMatrix::identity(m.gens()), false);
    }

private:
    GModule src_, dst_;
    AbHom hom_;
};

/* kernel of an equivariant map, as a module with its inclusion */
struct GKernel {
    GModule module;
    GHom incl;
};

inline GKernel gmodule_kernel(const GHom& f) {
    HomKio k = hom_kio(f.hom());
    const IntMatrix& b = k.kernel_incl.matrix();
    /* induce the action: solve action_s * B = B * X_s through the inclusion */
    std::vector<IntMatrix> act;
    for (int s = 0; s < f.source().group().order(); ++s) {
        AbHom g(k.kernel, f.source().ab(), f.source().action(s) * b, false);
        auto x = factor_through(AbHom(k.kernel, f.source().ab(), b, false), g);
        if (!x) fail("Internal", "kernel is not action-stable");
        act.push_back(x->matrix());
    }
    GModule km(f.source().group(), k.kernel, act, false);
    return {km, GHom(km, f.source(), b, false)};
}

/* quotient of a module by the image of an equivariant map (target/image) */
struct GQuotient {
    GModule module;
    GHom proj;
};

inline GQuotient gmodule_cokernel(const GHom& f) {
    HomKio k = hom_kio(f.hom());
    std::vector<IntMatrix> act;
    for (int s = 0; s < f.target().group().order(); ++s) act.push_back(f.target().action(s));
    GModule qm(f.target().group(), k.cokernel, act, false);
    return {qm, GHom(f.target(), qm, IntMatrix::identity(f.target().gens()), false)};
}

/* Ind(B) = Z[G] (x) B with G permuting the left factor; generator layout is
   (sigma, j) -> sigma * gens + j */
struct InducedModule {
    GModule module;
    int block_size = 0;
    GHom embed;  // A -> Ind(A), a |-> sum_s s (x) s^{-1} a   (equivariant monomorphism)
    GHom surj;   // Ind(A) -> A, s (x) a |-> s * a            (equivariant epimorphism)
};

inline GModule induced_module_plain(const FiniteGroup& g, const FgAbGroup& b) {
    const int n = g.order(), r = b.gens();
    std::vector<std::vector<Int>> rel;
    for (int s = 0; s < n; ++s)
        for (int j = 0; j < b.relations().cols(); ++j) {
            std::vector<Int> c(n * r, Int(0));
            for (int i = 0; i < r; ++i) c[s * r + i] = b.relations().at(i, j);
            rel.push_back(std::move(c));
        }
    FgAbGroup underlying(n * r, IntMatrix::from_cols(n * r, rel));
    std::vector<IntMatrix> act;
    for (int t = 0; t < n; ++t) {
        IntMatrix a(n * r, n * r);
        for (int s = 0; s < n; ++s) {
            int ts = g.mul(t, s);
            for (int i = 0; i < r; ++i) a.at(ts * r + i, s * r + i) = 1;
        }
        act.push_back(std::move(a));
    }
    return GModule(g, underlying, std::move(act), false);
}

inline InducedModule induced_module(const GModule& a) {
    const FiniteGroup& g = a.group();
    const int n = g.order(), r = a.gens();
    InducedModule out;
    out.module = induced_module_plain(g, a.ab());
    out.block_size = r;

    IntMatrix emb(n * r, r);
    for (int s = 0; s < n; ++s) {
        const IntMatrix& m = a.action(g.inv(s));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) emb.at(s * r + i, j) = m.at(i, j);
    }
    out.embed = GHom(a, out.module, emb);

    IntMatrix sur(r, n * r);
    for (int s = 0; s < n; ++s) {
        const IntMatrix& m = a.action(s);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) sur.at(i, s * r + j) = m.at(i, j);
    }
    out.surj = GHom(out.module, a, sur);
    return out;
}

/* 0 -> I_G -> Z[G] -> Z -> 0 */
struct AugmentationSequence {
    GModule regular;      // Z[G]
    GModule trivial;      // Z
    GModule aug_ideal;    // I_G
    GHom inclusion;       // I_G -> Z[G]
    GHom augmentation;    // Z[G] -> Z
};

inline AugmentationSequence augmentation_sequence(const FiniteGroup& g) {
    AugmentationSequence out;
    out.trivial = GModule::trivial_z(g);
    InducedModule ind = induced_module(out.trivial);
    out.regular = ind.module;
    out.augmentation = ind.surj; // sum of coefficients
    GKernel k = gmodule_kernel(out.augmentation);
    out.aug_ideal = k.module;
    out.inclusion = k.incl;
    return out;
}

} // namespace tatekit
