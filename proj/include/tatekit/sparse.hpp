#pragma once

#include "tatekit/abelian.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace tatekit {

/* Sparse column: entries sorted by row, no zeros stored. */
using SparseVec = std::vector<std::pair<int, Int>>;

inline SparseVec sparse_axpy(const SparseVec& x, const Int& k, const SparseVec& y) {
    // x + k*y
    SparseVec r;
    r.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j >= y.size() || (i < x.size() && x[i].first < y[j].first)) {
            r.push_back(x[i++]);
        } else if (i >= x.size() || y[j].first < x[i].first) {
            Int v = k * y[j].second;
            if (v != 0) r.emplace_back(y[j].first, v);
            ++j;
        } else {
            Int v = x[i].second + k * y[j].second;
            if (v != 0) r.emplace_back(x[i].first, v);
            ++i; ++j;
        }
    }
    return r;
}

inline SparseVec sparse_combine(const Int& a, const SparseVec& x, const Int& b, const SparseVec& y) {
    SparseVec r;
    r.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j >= y.size() || (i < x.size() && x[i].first < y[j].first)) {
            Int v = a * x[i].second;
            if (v != 0) r.emplace_back(x[i].first, v);
            ++i;
        } else if (i >= x.size() || y[j].first < x[i].first) {
            Int v = b * y[j].second;
            if (v != 0) r.emplace_back(y[j].first, v);
            ++j;
        } else {
            Int v = a * x[i].second + b * y[j].second;
            if (v != 0) r.emplace_back(x[i].first, v);
            ++i; ++j;
        }
    }
    return r;
}

inline const Int* sparse_get(const SparseVec& v, int row) {
    auto it = std::lower_bound(v.begin(), v.end(), row,
                               [](const std::pair<int, Int>& e, int r) { return e.first < r; });
    if (it != v.end() && it->first == row) return &it->second;
    return nullptr;
}

struct SparseMatrix {
    int rows = 0;
    std::vector<SparseVec> cols;

    int ncols() const { return static_cast<int>(cols.size()); }
    void add_col(SparseVec c) { cols.push_back(std::move(c)); }
    void add_entry(int col, int row, const Int& v) {
        // assembly helper; entries may arrive unsorted and duplicated
        cols[col].emplace_back(row, v);
    }
    void normalize() {
        for (auto& c : cols) {
            std::sort(c.begin(), c.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            SparseVec out;
            for (auto& e : c) {
                if (!out.empty() && out.back().first == e.first)
                    out.back().second += e.second;
                else
                    out.push_back(e);
            }
            out.erase(std::remove_if(out.begin(), out.end(),
                                     [](const auto& e) { return e.second == 0; }),
                      out.end());
            c = std::move(out);
        }
    }
    std::vector<Int> col_dense(int j) const {
        std::vector<Int> d(rows, Int(0));
        for (const auto& e : cols[j]) d[e.first] = e.second;
        return d;
    }
    static SparseMatrix from_dense(const IntMatrix& m) {
        SparseMatrix s;
        s.rows = m.rows();
        s.cols.resize(m.cols());
        for (int j = 0; j < m.cols(); ++j)
            for (int i = 0; i < m.rows(); ++i)
                if (m.at(i, j) != 0) s.cols[j].emplace_back(i, m.at(i, j));
        return s;
    }
    IntMatrix to_dense() const {
        IntMatrix m(rows, ncols());
        for (int j = 0; j < ncols(); ++j)
            for (const auto& e : cols[j]) m.at(e.first, j) = e.second;
        return m;
    }
};

/* Row-ordered integer column echelon with kernel and solve support.
   Rows are cleared in increasing order; active columns therefore only ever
   carry entries at rows not yet processed, which bounds fill-in and makes
   the procedure a single deterministic sweep.  The transform is carried as
   extra rows appended below the matrix (row m+j tracks e_j). */
class ColumnEchelon {
public:
    explicit ColumnEchelon(const SparseMatrix& m) : m_(m.rows), n_(m.ncols()) {
        std::vector<SparseVec> work(n_);
        rowidx_.resize(m_);
        for (int j = 0; j < n_; ++j) {
            work[j] = m.cols[j];
            work[j].emplace_back(m_ + j, Int(1)); // transform tail
            for (const auto& e : m.cols[j])
                if (e.second != 0) rowidx_[e.first].push_back(j);
        }
        eliminate(work);
    }

    int rank() const { return static_cast<int>(pivots_.size()); }

    /* basis of the kernel lattice, one sparse n-vector per column */
    const std::vector<SparseVec>& kernel() const { return kernel_; }

    /* solve M w = b; returns w (length n) if solvable */
    std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const {
        std::vector<Int> y = b;
        std::vector<std::pair<int, Int>> used; // (pivot slot, coefficient)
        for (const auto& [r, slot] : pivots_) {
            if (y[r] == 0) continue;
            const Int& pv = *sparse_get(store_[slot], r);
            if (y[r] % pv != 0) return std::nullopt;
            Int c = y[r] / pv;
            for (const auto& e : store_[slot]) {
                if (e.first >= m_) break;
                y[e.first] -= c * e.second;
            }
            used.emplace_back(slot, c);
        }
        if (!vec_is_zero(y)) return std::nullopt;
        std::vector<Int> w(n_, Int(0));
        for (const auto& [slot, c] : used)
            for (const auto& e : store_[slot])
                if (e.first >= m_) w[e.first - m_] += c * e.second;
        return w;
    }

private:
    void eliminate(std::vector<SparseVec>& work) {
        std::vector<char> live(n_, 1);
        auto top_row = [&](int j) { return work[j].empty() ? m_ : work[j][0].first; };
        for (int r = 0; r < m_; ++r) {
            /* columns whose leading entry sits at row r; registrations may be
               stale or duplicated, so filter and dedupe */
            std::vector<int> here;
            for (int j : rowidx_[r])
                if (live[j] && top_row(j) == r) here.push_back(j);
            std::sort(here.begin(), here.end());
            here.erase(std::unique(here.begin(), here.end()), here.end());
            rowidx_[r].clear();
            rowidx_[r].shrink_to_fit();
            if (here.empty()) continue;
            /* fold everything into one pivot column; smallest |value| leads */
            std::sort(here.begin(), here.end(), [&](int a, int b) {
                Int va = abs_int(work[a][0].second), vb = abs_int(work[b][0].second);
                if (va != vb) return va < vb;
                return a < b;
            });
            int a = here[0];
            for (size_t t = 1; t < here.size(); ++t) {
                int b = here[t];
                const Int& pa = work[a][0].second;
                const Int& pb = work[b][0].second;
                if (pb % pa == 0) {
                    work[b] = sparse_axpy(work[b], -(pb / pa), work[a]);
                } else {
                    Int x, y;
                    Int g = xgcd(pa, pb, x, y);
                    SparseVec na = sparse_combine(x, work[a], y, work[b]);
                    SparseVec nb = sparse_combine(pa / g, work[b], -(pb / g), work[a]);
                    work[a] = std::move(na);
                    work[b] = std::move(nb);
                }
                /* b is now clear at row r; its new leading row is below r */
                if (!work[b].empty() && work[b][0].first < m_)
                    rowidx_[work[b][0].first].push_back(b);
            }
            live[a] = 0;
            int slot = static_cast<int>(store_.size());
            store_.push_back(std::move(work[a]));
            work[a].clear();
            pivots_.emplace_back(r, slot);
        }
        for (int j = 0; j < n_; ++j) {
            if (!live[j]) continue;
            /* fully reduced column: the transform tail is a kernel vector */
            SparseVec k;
            for (const auto& e : work[j]) k.emplace_back(e.first - m_, e.second);
            kernel_.push_back(std::move(k));
        }
    }

    int m_, n_;
    std::vector<std::vector<int>> rowidx_;
    std::vector<std::pair<int, int>> pivots_; // (row, slot), ascending rows
    std::vector<SparseVec> store_;
    std::vector<SparseVec> kernel_;
};

/* Kernel of a sparse matrix as sparse columns (projection helpers below). */
inline std::vector<SparseVec> sparse_kernel(const SparseMatrix& m) {
    return ColumnEchelon(m).kernel();
}

/* Presentation simplification for Z^gens / cols(X) when gens is large.
   Unit pivots are substituted away with an operation log so that coordinate
   vectors can be pushed forward (old -> reduced) and generators lifted back
   (reduced -> old).  The surviving core is handed to FgAbGroup. */
class QuotientPresentation {
public:
    /* annihilator n > 0 asserts n * (every element) = 0, which holds for Tate
       groups with n = |H|; the implied relations n*e_i are adjoined and every
       entry is kept in balanced residue form, so coefficients never grow */
    QuotientPresentation(int gens, const std::vector<SparseVec>& relations,
                         Int annihilator = 0) {
        build(gens, relations, std::move(annihilator));
    }

    const FgAbGroup& group() const { return group_; }

    /* old coordinates (length gens) -> canonical coordinates in group() */
    std::vector<Int> reduce(std::vector<Int> x) const {
        for (const auto& op : ops_)
            if (x[op.gen] != 0) {
                for (const auto& [l, c] : op.subst) x[l] += c * x[op.gen];
                x[op.gen] = 0;
            }
        std::vector<Int> y(surviving_.size());
        for (size_t i = 0; i < surviving_.size(); ++i) y[i] = x[surviving_[i]];
        return group_.reduce(y);
    }

    /* representative of the i-th core generator in old coordinates */
    std::vector<Int> lift(const std::vector<Int>& core_coords) const {
        std::vector<Int> x(ngens_, Int(0));
        for (size_t i = 0; i < surviving_.size(); ++i) x[surviving_[i]] = core_coords[i];
        return x; // eliminated generators carry zero; valid modulo relations
    }

    int old_gens() const { return ngens_; }

private:
    struct SubstOp {
        int gen;                                  // eliminated generator
        std::vector<std::pair<int, Int>> subst;   // e_gen = sum c * e_l
    };

    void build(int gens, const std::vector<SparseVec>& relations, Int ann) {
        ngens_ = gens;
        std::vector<SparseVec> rel = relations;
        std::vector<char> gen_live(gens, 1);
        std::vector<std::vector<int>> byrow(gens);
        std::vector<std::pair<int, int>> unit_queue; // candidate (gen, rel) unit pivots
        size_t qhead = 0;

        auto rebalance = [&](SparseVec& v) {
            if (ann == 0) return;
            SparseVec out;
            for (auto& [i, c] : v) {
                Int r = mod_floor(c, ann);
                if (2 * r > ann) r -= ann;
                if (r != 0) out.emplace_back(i, r);
            }
            v = std::move(out);
        };
        auto register_col = [&](int j) {
            for (const auto& e : rel[j]) {
                byrow[e.first].push_back(j);
                if (e.second == 1 || e.second == -1) unit_queue.emplace_back(e.first, j);
            }
        };

        for (auto& c : rel) rebalance(c);
        if (ann > 0)
            for (int i = 0; i < gens; ++i) rel.push_back(SparseVec{{i, ann}});
        std::vector<char> rel_live(rel.size(), 1);
        for (size_t j = 0; j < rel.size(); ++j) register_col(static_cast<int>(j));

        for (;;) {
            while (qhead < unit_queue.size()) {
                auto [pi, pj] = unit_queue[qhead++];
                if (!gen_live[pi] || !rel_live[pj]) continue;
                const Int* pv = sparse_get(rel[pj], pi);
                if (!pv || (*pv != 1 && *pv != -1)) continue; // stale candidate
                Int unit = *pv;
                /* clear row pi from the other relations using column ops */
                for (int j : byrow[pi]) {
                    if (!rel_live[j] || j == pj) continue;
                    const Int* v = sparse_get(rel[j], pi);
                    if (!v || *v == 0) continue;
                    Int k = -(*v) / unit;
                    rel[j] = sparse_axpy(rel[j], k, rel[pj]);
                    rebalance(rel[j]);
                    register_col(j);
                }
                /* record the substitution e_pi = -unit^{-1} * (rest of column pj) */
                SubstOp op;
                op.gen = pi;
                for (const auto& [l, c] : rel[pj])
                    if (l != pi) op.subst.emplace_back(l, -c * unit); // 1/unit == unit
                ops_.push_back(std::move(op));
                gen_live[pi] = 0;
                rel_live[pj] = 0;
            }
            if (ann == 0) break;
            /* no units left: manufacture one from an entry coprime to the
               annihilator, using the adjoined relation ann*e_i */
            bool upgraded = false;
            for (size_t j = 0; j < rel.size() && !upgraded; ++j) {
                if (!rel_live[j]) continue;
                for (const auto& [i, v] : rel[j]) {
                    if (!gen_live[i]) continue;
                    if (gcd(v, ann) != 1) continue;
                    Int x, y;
                    xgcd(v, ann, x, y);
                    SparseVec combo = sparse_axpy(SparseVec{{i, y * ann}}, x, rel[j]);
                    rebalance(combo);
                    rel.push_back(std::move(combo));
                    rel_live.push_back(1);
                    register_col(static_cast<int>(rel.size()) - 1);
                    upgraded = true;
                    break;
                }
            }
            if (!upgraded) break;
        }

        surviving_.clear();
        std::vector<int> newindex(gens, -1);
        for (int i = 0; i < gens; ++i)
            if (gen_live[i]) {
                newindex[i] = static_cast<int>(surviving_.size());
                surviving_.push_back(i);
            }
        std::vector<std::vector<Int>> cols;
        for (size_t j = 0; j < rel.size(); ++j) {
            if (!rel_live[j]) continue;
            std::vector<Int> c(surviving_.size(), Int(0));
            bool nz = false;
            for (const auto& e : rel[j]) {
                if (newindex[e.first] < 0) continue; // stale entry on a dead row
                c[newindex[e.first]] = e.second;
                if (e.second != 0) nz = true;
            }
            if (nz) cols.push_back(std::move(c));
        }
        group_ = FgAbGroup(static_cast<int>(surviving_.size()),
                           IntMatrix::from_cols(static_cast<int>(surviving_.size()), cols));
    }

    int ngens_ = 0;
    std::vector<SubstOp> ops_;
    std::vector<int> surviving_;
    FgAbGroup group_;
};

} // namespace tatekit
