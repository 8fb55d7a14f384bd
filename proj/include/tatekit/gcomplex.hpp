#pragma once

#include "tatekit/gmodule.hpp"

#include <map>

namespace tatekit {

/* A bounded complex of G-modules with equivariant differentials d^q from
   degree q to q+1, d o d = 0.  Absent degrees are the zero module. */
class GComplex {
public:
    GComplex() = default;
    GComplex(FiniteGroup g, std::map<int, GModule> terms, std::map<int, GHom> diffs,
             bool check = true)
        : g_(std::move(g)), terms_(std::move(terms)), diff_(std::move(diffs)) {
        drop_zero_terms();
        if (check) validate();
    }

    static GComplex concentrated(const GModule& m, int degree) {
        std::map<int, GModule> t;
        if (!m.ab().is_trivial()) t[degree] = m;
        return GComplex(m.group(), std::move(t), {}, false);
    }

    const FiniteGroup& group() const { return g_; }
    bool is_zero() const { return terms_.empty(); }
    int lowest_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int top_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    bool has_term(int q) const { return terms_.count(q) > 0; }
    const GModule& term(int q) const {
        auto it = terms_.find(q);
        if (it == terms_.end()) fail("NoSuchDegree", "zero term requested as module");
        return it->second;
    }
    GModule term_or_zero(int q) const {
        auto it = terms_.find(q);
        return it == terms_.end() ? GModule::zero(g_) : it->second;
    }
    const std::map<int, GModule>& terms() const { return terms_; }

    bool has_diff(int q) const { return diff_.count(q) > 0; }
    const GHom& diff(int q) const { return diff_.at(q); }
    /* differential matrix from degree q to q+1, zero-filled when absent */
    IntMatrix diff_matrix(int q) const {
        auto it = diff_.find(q);
        if (it != diff_.end()) return it->second.matrix();
        int src = has_term(q) ? term(q).gens() : 0;
        int dst = has_term(q + 1) ? term(q + 1).gens() : 0;
        return IntMatrix(dst, src);
    }

    /* number of degrees carrying a nonzero module */
    int length() const { return static_cast<int>(terms_.size()); }

    /* total generator count, the budget the shifting machinery guards */
    int total_gens() const {
        int n = 0;
        for (const auto& [q, m] : terms_) n += m.gens();
        return n;
    }

private:
    void drop_zero_terms() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->second.ab().is_trivial()) {
                diff_.erase(it->first);
                diff_.erase(it->first - 1);
                it = terms_.erase(it);
            } else {
                ++it;
            }
        }
        for (auto it = diff_.begin(); it != diff_.end();) {
            if (!terms_.count(it->first) || !terms_.count(it->first + 1) ||
                it->second.matrix().is_zero())
                it = diff_.erase(it);
            else
                ++it;
        }
    }
    void validate() {
        for (const auto& [q, m] : terms_)
            if (!(m.group() == g_)) fail("GroupMismatch", "terms over different groups");
        for (const auto& [q, d] : diff_) {
            if (!(d.source().ab() == term(q).ab()) || !(d.target().ab() == term(q + 1).ab()))
                fail("BadShape", "differential endpoints do not match terms");
            if (!d.equivariant()) fail("NotEquivariant", "differential is not equivariant");
        }
        for (const auto& [q, d] : diff_)
            if (diff_.count(q + 1)) {
                IntMatrix dd = diff_.at(q + 1).matrix() * d.matrix();
                AbHom z(term(q).ab(), term(q + 2).ab(), dd, false);
                if (!z.is_zero_map()) fail("NotComplex", "d o d != 0");
            }
    }

    FiniteGroup g_;
    std::map<int, GModule> terms_;
    std::map<int, GHom> diff_;
};

/* two-term helper: [A -> B] with A at `low`, B at low+1 */
inline GComplex two_term_complex(const GHom& d, int low) {
    std::map<int, GModule> t;
    t[low] = d.source();
    t[low + 1] = d.target();
    std::map<int, GHom> df;
    df[low] = d;
    return GComplex(d.source().group(), std::move(t), std::move(df));
}

/* H^q(C) = ker d^q / im d^{q-1} as a module with the induced action */
inline GModule complex_homology(const GComplex& c, int q) {
    if (!c.has_term(q)) return GModule::zero(c.group());
    const GModule& mid = c.term(q);

    GModule above = c.term_or_zero(q + 1);
    GHom dq(mid, above, c.diff_matrix(q), false);
    GKernel ker = gmodule_kernel(dq);

    /* factor d^{q-1} through the kernel inclusion, then take the cokernel */
    GModule below = c.term_or_zero(q - 1);
    GHom dprev(below, mid, c.diff_matrix(q - 1), false);
    auto lifted = factor_through(ker.incl.hom(), dprev.hom());
    if (!lifted) fail("Internal", "image of d is not contained in the kernel");
    GHom into_kernel(below, ker.module, lifted->matrix(), false);
    return gmodule_cokernel(into_kernel).module;
}

/* canonical truncation: degrees < n unchanged, degree n becomes ker d^n,
   everything above vanishes */
inline GComplex truncate_complex(const GComplex& c, int n) {
    std::map<int, GModule> terms;
    std::map<int, GHom> diffs;
    for (const auto& [q, m] : c.terms())
        if (q < n) terms[q] = m;
    for (int q = c.lowest_degree(); q + 1 < n; ++q)
        if (c.has_diff(q)) diffs[q] = c.diff(q);
    if (c.has_term(n)) {
        GModule above = c.term_or_zero(n + 1);
        GHom dn(c.term(n), above, c.diff_matrix(n), false);
        GKernel k = gmodule_kernel(dn);
        if (!k.module.ab().is_trivial()) {
            terms[n] = k.module;
            if (c.has_term(n - 1)) {
                GHom dprev(c.term(n - 1), c.term(n), c.diff_matrix(n - 1), false);
                auto lifted = factor_through(k.incl.hom(), dprev.hom());
                if (!lifted) fail("Internal", "truncation lift failed");
                diffs[n - 1] = GHom(c.term(n - 1), k.module, lifted->matrix(), false);
            }
        }
    }
    return GComplex(c.group(), std::move(terms), std::move(diffs), false);
}

/* shift: C[k]^q = C^{q+k}, differentials pick up the sign (-1)^k */
inline GComplex shift_complex(const GComplex& c, int k) {
    std::map<int, GModule> terms;
    std::map<int, GHom> diffs;
    for (const auto& [q, m] : c.terms()) terms[q - k] = m;
    for (const auto& [q, m] : c.terms()) {
        IntMatrix d = c.diff_matrix(q);
        if (c.has_term(q + 1) && !d.is_zero()) {
            if (k % 2 != 0) d = -d;
            diffs[q - k] = GHom(c.term(q), c.term(q + 1), d, false);
        }
    }
    return GComplex(c.group(), std::move(terms), std::move(diffs), false);
}

/* A chain map between complexes over the same group. */
struct ComplexMap {
    const GComplex* src;
    const GComplex* dst;
    std::map<int, IntMatrix> components; // per degree

    IntMatrix component(int q) const {
        auto it = components.find(q);
        if (it != components.end()) return it->second;
        int a = src->has_term(q) ? src->term(q).gens() : 0;
        int b = dst->has_term(q) ? dst->term(q).gens() : 0;
        return IntMatrix(b, a);
    }

    bool is_chain_map() const {
        int lo = std::min(src->lowest_degree(), dst->lowest_degree()) - 1;
        int hi = std::max(src->top_degree(), dst->top_degree()) + 1;
        for (int q = lo; q <= hi; ++q) {
            if (!src->has_term(q)) continue;
            /* dst_d^q o f^q = f^{q+1} o src_d^q */
            IntMatrix lhs = dst->diff_matrix(q) * component(q);
            IntMatrix rhs = component(q + 1) * src->diff_matrix(q);
            FgAbGroup tgt = dst->has_term(q + 1) ? dst->term(q + 1).ab() : FgAbGroup::zero();
            if (!AbHom(src->term(q).ab(), tgt, lhs, false)
                     .equal_map(AbHom(src->term(q).ab(), tgt, rhs, false)))
                return false;
        }
        return true;
    }
};

/* the map induced by a chain map on degree-q homology */
inline AbHom induced_on_homology(const ComplexMap& f, int q, const GModule& hsrc,
                                 const GModule& hdst) {
    /* both homologies were built by complex_homology: generators of hsrc are
       kernel-lattice generators expressed in term coordinates; recover those
       inclusions the same way here */
    auto kernel_cols = [&](const GComplex& c, int deg) {
        GModule above = c.term_or_zero(deg + 1);
        GHom dq(c.term(deg), above, c.diff_matrix(deg), false);
        return gmodule_kernel(dq).incl.matrix();
    };
    IntMatrix bs = kernel_cols(*f.src, q);      // src term coords of hsrc gens
    IntMatrix bd = kernel_cols(*f.dst, q);      // dst term coords of hdst gens
    IntMatrix moved = f.component(q) * bs;      // images inside dst term
    /* express each column through bd modulo boundaries and dst relations */
    IntMatrix bound = f.dst->diff_matrix(q - 1);
    IntMatrix ambient_rel = IntMatrix::hcat(bound, f.dst->term(q).ab().relations());
    IntMatrix stacked = IntMatrix::hcat(bd, ambient_rel);
    SmithForm s = smith_normal_form(stacked);
    IntMatrix m(hdst.gens(), hsrc.gens());
    for (int j = 0; j < moved.cols(); ++j) {
        auto sol = solve(s, moved.col(j));
        if (!sol) fail("Internal", "induced map does not land in homology");
        for (int i = 0; i < hdst.gens(); ++i) m.at(i, j) = (*sol)[i];
    }
    return AbHom(hsrc.ab(), hdst.ab(), m, false);
}

inline bool is_quasi_isomorphism(const ComplexMap& f) {
    if (!f.is_chain_map()) return false;
    int lo = std::min(f.src->lowest_degree(), f.dst->lowest_degree());
    int hi = std::max(f.src->top_degree(), f.dst->top_degree());
    for (int q = lo; q <= hi; ++q) {
        GModule hs = complex_homology(*f.src, q);
        GModule hd = complex_homology(*f.dst, q);
        if (!f.src->has_term(q)) {
            if (!hd.ab().is_trivial()) return false;
            continue;
        }
        if (!f.dst->has_term(q)) {
            if (!hs.ab().is_trivial()) return false;
            continue;
        }
        if (!is_isomorphism(induced_on_homology(f, q, hs, hd))) return false;
    }
    return true;
}

} // namespace tatekit
