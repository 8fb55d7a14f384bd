#pragma once

#include "tatekit/smith.hpp"

#include <optional>
#include <sstream>
#include <string>

namespace tatekit {

/* A finitely generated abelian group presented as Z^n / (column span of rel).
   The Smith form of the relation matrix is computed once at construction and
   acts as the canonical-form witness for every later reduction; groups are
   never re-presented behind the caller's back. */
class FgAbGroup {
public:
    FgAbGroup() : gens_(0), rel_(0, 0) { canonicalize(); }
    explicit FgAbGroup(int gens) : gens_(gens), rel_(gens, 0) { canonicalize(); }
    FgAbGroup(int gens, IntMatrix rel) : gens_(gens), rel_(std::move(rel)) {
        if (rel_.rows() != gens_) fail("BadShape", "relation matrix must have one row per generator");
        canonicalize();
    }

    int gens() const { return gens_; }
    const IntMatrix& relations() const { return rel_; }
    const SmithForm& snf() const { return snf_; }

    /* nontrivial invariant factors d1 | d2 | ... (entries > 1) */
    const std::vector<Int>& invariant_factors() const { return invf_; }
    int free_rank() const { return free_rank_; }

    bool is_trivial() const { return free_rank_ == 0 && invf_.empty(); }
    bool same_invariants(const FgAbGroup& o) const {
        return free_rank_ == o.free_rank_ && invf_ == o.invf_;
    }

    /* order of the group; 0 means infinite */
    Int order() const {
        if (free_rank_ > 0) return 0;
        Int n = 1;
        for (const Int& d : invf_) n *= d;
        return n;
    }

    /* canonical coordinates: y = U x with y_i reduced mod d_i on torsion rows */
    std::vector<Int> reduce(const std::vector<Int>& x) const {
        if (static_cast<int>(x.size()) != gens_) fail("BadShape", "coordinate length mismatch");
        std::vector<Int> y = snf_.u.apply(x);
        for (int i = 0; i < snf_.rank; ++i) y[i] = mod_floor(y[i], snf_.diag(i));
        return y;
    }

    bool is_zero(const std::vector<Int>& x) const { return vec_is_zero(reduce(x)); }
    bool equal(const std::vector<Int>& a, const std::vector<Int>& b) const {
        return reduce(a) == reduce(b);
    }

    /* additive order of [x]; 0 means infinite */
    Int element_order(const std::vector<Int>& x) const {
        std::vector<Int> y = reduce(x);
        Int n = 1;
        for (int i = 0; i < gens_; ++i) {
            if (y[i] == 0) continue;
            if (i >= snf_.rank) return 0;
            Int d = snf_.diag(i);
            n = lcm(n, d / gcd(d, y[i]));
        }
        return n;
    }

    /* membership of x in the subgroup generated by the columns of gens;
       returns witness coefficients (one per generator column) on success */
    std::optional<std::vector<Int>> solve_in_subgroup(const IntMatrix& sub,
                                                      const std::vector<Int>& x) const {
        IntMatrix m = IntMatrix::hcat(sub, rel_);
        auto sol = solve(m, x);
        if (!sol) return std::nullopt;
        return std::vector<Int>(sol->begin(), sol->begin() + sub.cols());
    }

    std::string decomposition_string() const {
        std::ostringstream os;
        bool first = true;
        if (free_rank_ > 0) {
            os << "Z^" << free_rank_;
            first = false;
        }
        for (const Int& d : invf_) {
            if (!first) os << " + ";
            os << "Z/" << d;
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }

    bool operator==(const FgAbGroup& o) const { return gens_ == o.gens_ && rel_ == o.rel_; }
    bool operator!=(const FgAbGroup& o) const { return !(*this == o); }

    static FgAbGroup cyclic(const Int& n) {
        IntMatrix r(1, 1);
        r.at(0, 0) = n;
        return FgAbGroup(1, r);
    }
    static FgAbGroup free_group(int rank) { return FgAbGroup(rank); }
    static FgAbGroup zero() { return FgAbGroup(0); }

private:
    void canonicalize() {
        snf_ = smith_normal_form(rel_);
        free_rank_ = gens_ - snf_.rank;
        invf_.clear();
        for (int i = 0; i < snf_.rank; ++i)
            if (snf_.diag(i) > 1) invf_.push_back(snf_.diag(i));
    }

    int gens_;
    IntMatrix rel_;
    SmithForm snf_;
    std::vector<Int> invf_;
    int free_rank_ = 0;
};

struct AbElement {
    const FgAbGroup* group = nullptr;
    std::vector<Int> coords;
};

/* A homomorphism between presented groups, as a matrix on generator
   coordinates.  Well-definedness (source relations land in the target
   relation span) is checked at construction. */
class AbHom {
public:
    AbHom() = default;
    AbHom(FgAbGroup src, FgAbGroup dst, IntMatrix m, bool check = true)
        : src_(std::move(src)), dst_(std::move(dst)), m_(std::move(m)) {
        if (m_.rows() != dst_.gens() || m_.cols() != src_.gens())
            fail("BadShape", "hom matrix shape mismatch");
        if (check && !well_defined()) fail("NotWellDefined", "matrix does not respect relations");
    }

    const FgAbGroup& source() const { return src_; }
    const FgAbGroup& target() const { return dst_; }
    const IntMatrix& matrix() const { return m_; }

    bool well_defined() const {
        const IntMatrix& r = src_.relations();
        for (int j = 0; j < r.cols(); ++j)
            if (!dst_.is_zero(m_.apply(r.col(j)))) return false;
        return true;
    }

    std::vector<Int> apply(const std::vector<Int>& x) const { return m_.apply(x); }

    AbHom compose(const AbHom& inner) const { // (*this) o inner
        return AbHom(inner.source(), dst_, m_ * inner.matrix(), false);
    }
    AbHom operator+(const AbHom& o) const { return AbHom(src_, dst_, m_ + o.m_, false); }
    AbHom operator-(const AbHom& o) const { return AbHom(src_, dst_, m_ - o.m_, false); }

    static AbHom identity(const FgAbGroup& g) {
        return AbHom(g, g, IntMatrix::identity(g.gens()), false);
    }
    static AbHom zero(const FgAbGroup& src, const FgAbGroup& dst) {
        return AbHom(src, dst, IntMatrix(dst.gens(), src.gens()), false);
    }

    bool is_zero_map() const {
        for (int j = 0; j < m_.cols(); ++j)
            if (!dst_.is_zero(m_.col(j))) return false;
        return true;
    }
    bool equal_map(const AbHom& o) const {
        for (int j = 0; j < m_.cols(); ++j)
            if (!dst_.equal(m_.col(j), o.m_.col(j))) return false;
        return true;
    }

private:
    FgAbGroup src_, dst_;
    IntMatrix m_;
};

/* the lattice { x : M x lies in the column span of rel }, as a basis matrix */
inline IntMatrix preimage_lattice(const IntMatrix& m, const IntMatrix& rel) {
    IntMatrix stacked = IntMatrix::hcat(m, rel);
    IntMatrix k = kernel_basis(stacked);
    IntMatrix proj(m.cols(), k.cols());
    for (int i = 0; i < m.cols(); ++i)
        for (int j = 0; j < k.cols(); ++j) proj.at(i, j) = k.at(i, j);
    /* the projection of a kernel basis generates the lattice but need not be
       independent; extract an honest basis */
    return column_lattice_basis(proj);
}

struct HomKio {
    FgAbGroup kernel;     // presented on its own generators
    AbHom kernel_incl;    // kernel -> source
    FgAbGroup image;      // presented on source generators
    AbHom image_incl;     // image -> target
    AbHom image_proj;     // source -> image (coordinate identity)
    FgAbGroup cokernel;   // presented on target generators
    AbHom coker_proj;     // target -> cokernel (coordinate identity)
};

inline HomKio hom_kio(const AbHom& f) {
    HomKio out;
    const FgAbGroup& a = f.source();
    const FgAbGroup& b = f.target();

    /* x maps to zero iff M x is in the relation span of the target */
    IntMatrix klat = preimage_lattice(f.matrix(), b.relations());
    IntMatrix krel = preimage_lattice(klat, a.relations());
    out.kernel = FgAbGroup(klat.cols(), krel);
    out.kernel_incl = AbHom(out.kernel, a, klat, false);

    /* image on the source generators; its relation lattice is exactly klat */
    out.image = FgAbGroup(a.gens(), klat);
    out.image_incl = AbHom(out.image, b, f.matrix(), false);
    out.image_proj = AbHom(a, out.image, IntMatrix::identity(a.gens()), false);

    out.cokernel = FgAbGroup(b.gens(), IntMatrix::hcat(f.matrix(), b.relations()));
    out.coker_proj = AbHom(b, out.cokernel, IntMatrix::identity(b.gens()), false);
    return out;
}

inline bool is_isomorphism(const AbHom& f) {
    HomKio k = hom_kio(f);
    return k.kernel.is_trivial() && k.cokernel.is_trivial();
}

/* factor g through an inclusion incl (both into the same target):
   find h with incl o h = g.  Works column by column. */
inline std::optional<AbHom> factor_through(const AbHom& incl, const AbHom& g) {
    const FgAbGroup& mid = incl.source();
    IntMatrix m(mid.gens(), g.source().gens());
    IntMatrix stacked = IntMatrix::hcat(incl.matrix(), incl.target().relations());
    SmithForm s = smith_normal_form(stacked);
    for (int j = 0; j < g.source().gens(); ++j) {
        auto sol = solve(s, g.matrix().col(j));
        if (!sol) return std::nullopt;
        for (int i = 0; i < mid.gens(); ++i) m.at(i, j) = (*sol)[i];
    }
    return AbHom(g.source(), mid, m, false);
}

/* subgroup equality inside an ambient group, both given by generator columns */
inline bool same_subgroup(const FgAbGroup& ambient, const IntMatrix& gens1, const IntMatrix& gens2) {
    for (int j = 0; j < gens2.cols(); ++j)
        if (!ambient.solve_in_subgroup(gens1, gens2.col(j))) return false;
    for (int j = 0; j < gens1.cols(); ++j)
        if (!ambient.solve_in_subgroup(gens2, gens1.col(j))) return false;
    return true;
}

} // namespace tatekit
