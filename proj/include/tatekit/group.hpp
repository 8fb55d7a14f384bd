#pragma once

#include "tatekit/abelian.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace tatekit {

inline constexpr int kMaxGroupOrder = 16;

/* A finite group given by its multiplication table.  Axioms are checked
   exhaustively at construction; the first violated triple is reported. */
class FiniteGroup {
public:
    FiniteGroup() = default;
    FiniteGroup(std::vector<std::string> names, std::vector<std::vector<int>> table)
        : names_(std::move(names)), table_(std::move(table)) {
        validate();
    }
    explicit FiniteGroup(std::vector<std::vector<int>> table) : table_(std::move(table)) {
        names_.resize(table_.size());
        for (size_t i = 0; i < names_.size(); ++i) names_[i] = "g" + std::to_string(i);
        validate();
    }

    int order() const { return static_cast<int>(table_.size()); }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    int identity() const { return id_; }
    const std::string& name(int a) const { return names_[a]; }
    const std::vector<std::vector<int>>& table() const { return table_; }

    int pow(int a, int n) const {
        int r = id_;
        if (n < 0) { a = inv(a); n = -n; }
        for (int i = 0; i < n; ++i) r = mul(r, a);
        return r;
    }

    int element_order(int a) const {
        int r = a, n = 1;
        while (r != id_) { r = mul(r, a); ++n; }
        return n;
    }

    bool is_abelian() const {
        for (int a = 0; a < order(); ++a)
            for (int b = 0; b < order(); ++b)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }

    /* stable identity for caching: the table serialized */
    std::string table_key() const {
        std::string k;
        for (const auto& row : table_)
            for (int v : row) { k += std::to_string(v); k += ','; }
        return k;
    }

    bool operator==(const FiniteGroup& o) const { return table_ == o.table_; }

    static FiniteGroup cyclic(int n) {
        std::vector<std::vector<int>> t(n, std::vector<int>(n));
        std::vector<std::string> names(n);
        for (int i = 0; i < n; ++i) {
            names[i] = i == 0 ? "1" : "s" + std::to_string(i);
            for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
        }
        return FiniteGroup(names, t);
    }

    /* C2 x C2 */
    static FiniteGroup klein_four() {
        std::vector<std::vector<int>> t = {
            {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        return FiniteGroup({"1", "a", "b", "ab"}, t);
    }

    /* symmetric group on 3 letters, elements as permutations of {0,1,2} */
    static FiniteGroup symmetric3() {
        std::vector<std::array<int, 3>> perms = {
            {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
        auto compose = [&](int a, int b) { // (a o b)(x) = a(b(x))
            std::array<int, 3> c{};
            for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
            for (size_t k = 0; k < perms.size(); ++k)
                if (perms[k] == c) return static_cast<int>(k);
            return -1;
        };
        std::vector<std::vector<int>> t(6, std::vector<int>(6));
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b) t[a][b] = compose(a, b);
        return FiniteGroup({"1", "r", "r2", "t01", "t12", "t02"}, t);
    }

private:
    void validate() {
        const int n = order();
        if (n == 0) fail("NoIdentity", "empty multiplication table");
        if (static_cast<int>(names_.size()) != n) fail("BadShape", "name count mismatch");
        for (const auto& row : table_) {
            if (static_cast<int>(row.size()) != n) fail("BadShape", "table is not square");
            for (int v : row)
                if (v < 0 || v >= n) fail("BadShape", "table entry out of range");
        }
        if (n > kMaxGroupOrder) fail("GroupTooLarge", "order exceeds exhaustive validation bound");
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                        fail("NonAssociative",
                             "(" + names_[a] + "*" + names_[b] + ")*" + names_[c] +
                                 " != " + names_[a] + "*(" + names_[b] + "*" + names_[c] + ")");
        id_ = -1;
        for (int e = 0; e < n; ++e) {
            bool ok = true;
            for (int a = 0; a < n; ++a)
                if (table_[e][a] != a || table_[a][e] != a) { ok = false; break; }
            if (ok) { id_ = e; break; }
        }
        if (id_ < 0) fail("NoIdentity", "no two-sided identity element");
        inv_.assign(n, -1);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b)
                if (table_[a][b] == id_ && table_[b][a] == id_) { inv_[a] = b; break; }
            if (inv_[a] < 0) fail("NoInverse", "element " + names_[a] + " has no inverse");
        }
    }

    std::vector<std::string> names_;
    std::vector<std::vector<int>> table_;
    std::vector<int> inv_;
    int id_ = 0;
};

inline FiniteGroup build_finite_group(const std::vector<std::vector<int>>& table) {
    return FiniteGroup(table);
}

/* A subgroup as an element subset, with deterministic left-coset
   representatives (minimal element index per coset). */
class Subgroup {
public:
    Subgroup() = default;
    Subgroup(const FiniteGroup& parent, std::vector<int> elements)
        : parent_(&parent), elems_(std::move(elements)) {
        std::sort(elems_.begin(), elems_.end());
        elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
        validate();
        build_cosets();
        build_local();
    }

    const FiniteGroup& parent() const { return *parent_; }
    const std::vector<int>& elements() const { return elems_; }
    int order() const { return static_cast<int>(elems_.size()); }
    int index() const { return parent_->order() / order(); }
    bool contains(int g) const {
        return std::binary_search(elems_.begin(), elems_.end(), g);
    }

    /* the subgroup as a group in its own right; local index <-> parent index */
    const FiniteGroup& as_group() const { return local_; }
    int to_parent(int local) const { return elems_[local]; }
    int to_local(int parent_elt) const {
        auto it = std::lower_bound(elems_.begin(), elems_.end(), parent_elt);
        if (it == elems_.end() || *it != parent_elt) fail("NotInSubgroup", "element not in subgroup");
        return static_cast<int>(it - elems_.begin());
    }

    /* left cosets gH; reps sorted, rep of H itself first */
    const std::vector<int>& coset_reps() const { return coset_reps_; }
    int coset_rep_of(int g) const { return rep_of_[g]; }

    bool is_normal() const {
        for (int g = 0; g < parent_->order(); ++g)
            for (int h : elems_)
                if (!contains(parent_->mul(parent_->mul(g, h), parent_->inv(g)))) return false;
        return true;
    }

    Subgroup conjugate(int g) const {
        std::vector<int> c;
        for (int h : elems_) c.push_back(parent_->mul(parent_->mul(g, h), parent_->inv(g)));
        return Subgroup(*parent_, std::move(c));
    }

    bool subset_of(const Subgroup& bigger) const {
        for (int h : elems_)
            if (!bigger.contains(h)) return false;
        return true;
    }

    bool operator==(const Subgroup& o) const { return elems_ == o.elems_; }
    bool operator<(const Subgroup& o) const {
        if (order() != o.order()) return order() < o.order();
        return elems_ < o.elems_;
    }

private:
    void validate() {
        if (elems_.empty() || !contains(parent_->identity()))
            fail("NotSubgroup", "missing identity");
        for (int a : elems_)
            for (int b : elems_)
                if (!contains(parent_->mul(a, b))) fail("NotSubgroup", "not closed under product");
        for (int a : elems_)
            if (!contains(parent_->inv(a))) fail("NotSubgroup", "not closed under inverse");
        if (parent_->order() % order() != 0) fail("NotSubgroup", "order does not divide");
    }
    void build_cosets() {
        const int n = parent_->order();
        rep_of_.assign(n, -1);
        for (int g = 0; g < n; ++g) { // ascending: first hit is the minimal rep
            if (rep_of_[g] >= 0) continue;
            for (int h : elems_) rep_of_[parent_->mul(g, h)] = g;
            coset_reps_.push_back(g);
        }
    }
    void build_local() {
        const int m = order();
        std::vector<std::vector<int>> t(m, std::vector<int>(m));
        std::vector<std::string> names(m);
        for (int i = 0; i < m; ++i) {
            names[i] = parent_->name(elems_[i]);
            for (int j = 0; j < m; ++j) t[i][j] = to_local(parent_->mul(elems_[i], elems_[j]));
        }
        local_ = FiniteGroup(names, t);
    }

    const FiniteGroup* parent_ = nullptr;
    std::vector<int> elems_;
    std::vector<int> coset_reps_;
    std::vector<int> rep_of_;
    FiniteGroup local_;
};

inline Subgroup trivial_subgroup(const FiniteGroup& g) {
    return Subgroup(g, {g.identity()});
}
inline Subgroup full_subgroup(const FiniteGroup& g) {
    std::vector<int> all(g.order());
    for (int i = 0; i < g.order(); ++i) all[i] = i;
    return Subgroup(g, std::move(all));
}

inline std::vector<int> closure(const FiniteGroup& g, std::vector<int> gens) {
    std::set<int> s(gens.begin(), gens.end());
    s.insert(g.identity());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(s.begin(), s.end());
        for (int a : cur)
            for (int b : cur)
                if (s.insert(g.mul(a, b)).second) grew = true;
        for (int a : cur)
            if (s.insert(g.inv(a)).second) grew = true;
    }
    return std::vector<int>(s.begin(), s.end());
}

struct SubgroupInfo {
    Subgroup subgroup;
    std::vector<int> sylow_primes; // primes p for which this is a Sylow p-subgroup
};

/* all subgroups, by closing generated sets one generator at a time */
inline std::vector<SubgroupInfo> enumerate_subgroups(const FiniteGroup& g) {
    if (g.order() > kMaxGroupOrder) fail("GroupTooLarge", "subgroup enumeration bound exceeded");
    std::set<std::vector<int>> found;
    std::vector<std::vector<int>> frontier;
    std::vector<int> triv = {g.identity()};
    found.insert(triv);
    frontier.push_back(triv);
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& h : frontier)
            for (int x = 0; x < g.order(); ++x) {
                if (std::binary_search(h.begin(), h.end(), x)) continue;
                std::vector<int> gens = h;
                gens.push_back(x);
                auto c = closure(g, gens);
                if (found.insert(c).second) next.push_back(c);
            }
        frontier = std::move(next);
    }
    std::vector<SubgroupInfo> out;
    for (const auto& e : found) out.push_back({Subgroup(g, e), {}});
    std::sort(out.begin(), out.end(),
              [](const SubgroupInfo& a, const SubgroupInfo& b) { return a.subgroup < b.subgroup; });
    /* Sylow flags */
    for (auto& info : out) {
        int h = info.subgroup.order();
        for (int p = 2; p <= g.order(); ++p) {
            bool prime = p >= 2;
            for (int d = 2; d * d <= p; ++d)
                if (p % d == 0) { prime = false; break; }
            if (!prime || g.order() % p != 0) continue;
            int pk = 1;
            while (g.order() % (pk * p) == 0) pk *= p;
            if (h == pk) info.sylow_primes.push_back(p);
        }
    }
    return out;
}

inline std::vector<SubgroupInfo> sylow_subgroups(const FiniteGroup& g) {
    std::vector<SubgroupInfo> out;
    for (auto& s : enumerate_subgroups(g))
        if (!s.sylow_primes.empty()) out.push_back(s);
    return out;
}

/* quotient G/N for normal N, with the projection on element indices */
struct QuotientGroup {
    FiniteGroup group;
    std::vector<int> proj;       // parent index -> quotient index
    std::vector<int> section;    // quotient index -> coset rep in parent
};

inline QuotientGroup quotient_group(const FiniteGroup& g, const Subgroup& n) {
    if (!n.is_normal()) fail("NotNormal", "quotient by a non-normal subgroup");
    const auto& reps = n.coset_reps();
    const int m = static_cast<int>(reps.size());
    std::map<int, int> rep_index;
    for (int i = 0; i < m; ++i) rep_index[reps[i]] = i;
    QuotientGroup q;
    q.section = reps;
    q.proj.resize(g.order());
    for (int x = 0; x < g.order(); ++x) q.proj[x] = rep_index.at(n.coset_rep_of(x));
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    std::vector<std::string> names(m);
    for (int i = 0; i < m; ++i) {
        names[i] = g.name(reps[i]) + "N";
        for (int j = 0; j < m; ++j) t[i][j] = q.proj[g.mul(reps[i], reps[j])];
    }
    q.group = FiniteGroup(names, t);
    return q;
}

/* abelianization of a finite group as Z^{|G|} / (relations from the table),
   with the projection on element indices */
struct GroupAbelianization {
    FgAbGroup group;
    std::vector<std::vector<Int>> of_element; // element index -> coordinates
};

inline GroupAbelianization group_abelianization(const FiniteGroup& g) {
    const int n = g.order();
    std::vector<std::vector<Int>> cols;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<Int> c(n, Int(0));
            c[a] += 1;
            c[b] += 1;
            c[g.mul(a, b)] -= 1;
            if (!vec_is_zero(c)) cols.push_back(std::move(c));
        }
    GroupAbelianization out;
    out.group = FgAbGroup(n, IntMatrix::from_cols(n, cols));
    for (int a = 0; a < n; ++a) out.of_element.push_back(unit_vec(n, a));
    return out;
}

} // namespace tatekit
