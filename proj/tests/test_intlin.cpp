#include "tatekit/abelian.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <random>

using namespace tatekit;

static IntMatrix mat(int r, int c, std::initializer_list<int> vals) {
    IntMatrix m(r, c);
    auto it = vals.begin();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = *it++;
    return m;
}

TEST_CASE("smith normal form on pinned instances") {
    SECTION("zero 2x2") {
        SmithForm s = smith_normal_form(IntMatrix(2, 2));
        REQUIRE(s.d.is_zero());
        REQUIRE(s.rank == 0);
    }
    SECTION("3x3 identity") {
        SmithForm s = smith_normal_form(IntMatrix::identity(3));
        REQUIRE(s.d == IntMatrix::identity(3));
        REQUIRE(s.rank == 3);
    }
    SECTION("[[2,4],[6,8]] has D = diag(2,4)") {
        /* oracle: d1 = gcd of entries = 2, d1*d2 = |det| = |16-24| = 8 */
        IntMatrix m = mat(2, 2, {2, 4, 6, 8});
        SmithForm s = smith_normal_form(m);
        REQUIRE(s.diag(0) == 2);
        REQUIRE(s.diag(1) == 4);
        REQUIRE(s.u * m * s.v == s.d);
    }
}

TEST_CASE("smith normal form properties on random matrices") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<int> dim(0, 6), entry(-9, 9);
    for (int trial = 0; trial < 60; ++trial) {
        int r = dim(rng), c = dim(rng);
        IntMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.at(i, j) = entry(rng);
        SmithForm s = smith_normal_form(m);
        REQUIRE(s.u * m * s.v == s.d);
        REQUIRE(abs_int(det(s.u)) == 1);
        REQUIRE(abs_int(det(s.v)) == 1);
        REQUIRE(s.u * s.uinv == IntMatrix::identity(r));
        REQUIRE(s.v * s.vinv == IntMatrix::identity(c));
        for (int i = 0; i + 1 < s.rank; ++i) REQUIRE(s.diag(i + 1) % s.diag(i) == 0);
        for (int i = 0; i < std::min(r, c); ++i)
            for (int j = 0; j < std::min(r, c); ++j)
                if (i != j) REQUIRE(s.d.at(i, j) == 0);
        /* kernel columns really lie in the kernel and are independent */
        IntMatrix k = kernel_basis(s);
        for (int j = 0; j < k.cols(); ++j) REQUIRE(vec_is_zero(m.apply(k.col(j))));
    }
}

TEST_CASE("presentation independence of invariant factors") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> entry(-4, 4), small(-2, 2);
    for (int trial = 0; trial < 20; ++trial) {
        IntMatrix rel(3, 4);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 4; ++j) rel.at(i, j) = entry(rng);
        FgAbGroup g1(3, rel);
        /* change basis by a recorded unimodular matrix (product of shears) */
        IntMatrix p = IntMatrix::identity(3);
        for (int k = 0; k < 4; ++k) {
            IntMatrix e = IntMatrix::identity(3);
            int i = static_cast<int>(rng() % 3), j = static_cast<int>(rng() % 3);
            if (i != j) e.at(i, j) = small(rng);
            p = p * e;
        }
        FgAbGroup g2(3, p * rel);
        REQUIRE(g1.invariant_factors() == g2.invariant_factors());
        REQUIRE(g1.free_rank() == g2.free_rank());
    }
}

TEST_CASE("fgab reduction and element order") {
    /* Z/4 x Z */
    IntMatrix rel(2, 1);
    rel.at(0, 0) = 4;
    FgAbGroup g(2, rel);
    REQUIRE(g.invariant_factors() == std::vector<Int>{4});
    REQUIRE(g.free_rank() == 1);
    REQUIRE(g.element_order({Int(2), Int(0)}) == 2);
    REQUIRE(g.element_order({Int(0), Int(1)}) == 0);
    REQUIRE(g.equal({Int(5), Int(0)}, {Int(1), Int(0)}));
    REQUIRE(g.decomposition_string() == "Z^1 + Z/4");
}

TEST_CASE("hom kernel image cokernel") {
    FgAbGroup z(1);
    SECTION("times 2 on Z") {
        AbHom f(z, z, mat(1, 1, {2}));
        HomKio k = hom_kio(f);
        REQUIRE(k.kernel.is_trivial());
        REQUIRE(k.image.free_rank() == 1);
        REQUIRE(k.image.invariant_factors().empty());
        REQUIRE(k.cokernel.invariant_factors() == std::vector<Int>{2});
        REQUIRE(k.cokernel.free_rank() == 0);
    }
    SECTION("(a,b) -> a+b on Z^2") {
        FgAbGroup z2(2);
        AbHom f(z2, z, mat(1, 2, {1, 1}));
        HomKio k = hom_kio(f);
        REQUIRE(k.kernel.free_rank() == 1);
        REQUIRE(k.cokernel.is_trivial());
        /* inclusion then f is zero */
        IntMatrix comp = f.matrix() * k.kernel_incl.matrix();
        REQUIRE(AbHom(k.kernel, z, comp, false).is_zero_map());
    }
    SECTION("reduction Z/4 -> Z/2") {
        FgAbGroup z4 = FgAbGroup::cyclic(4), z2g = FgAbGroup::cyclic(2);
        AbHom f(z4, z2g, mat(1, 1, {1}));
        HomKio k = hom_kio(f);
        /* finite enumeration oracle: kernel {0,2} = Z/2, image = Z/2, coker 0 */
        REQUIRE(k.kernel.invariant_factors() == std::vector<Int>{2});
        REQUIRE(k.kernel.free_rank() == 0);
        REQUIRE(k.image.invariant_factors() == std::vector<Int>{2});
        REQUIRE(k.cokernel.is_trivial());
    }
}

TEST_CASE("hom_kio exactness properties on random maps") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> entry(-3, 3), dims(1, 3), relv(0, 6);
    for (int trial = 0; trial < 25; ++trial) {
        int a = dims(rng), b = dims(rng);
        IntMatrix relb(b, 1);
        for (int i = 0; i < b; ++i) relb.at(i, 0) = relv(rng);
        FgAbGroup src(a), dst(b, relb);
        IntMatrix m(b, a);
        for (int i = 0; i < b; ++i)
            for (int j = 0; j < a; ++j) m.at(i, j) = entry(rng);
        AbHom f(src, dst, m); // free source: always well-defined
        HomKio k = hom_kio(f);
        REQUIRE(k.kernel.free_rank() + k.image.free_rank() == src.free_rank());
        /* cokernel invariants match the SNF of [matrix | target relations] */
        FgAbGroup direct(b, IntMatrix::hcat(m, relb));
        REQUIRE(k.cokernel.same_invariants(direct));
        /* image == source/kernel: compare orders of torsion + rank */
        IntMatrix comp = f.matrix() * k.kernel_incl.matrix();
        REQUIRE(AbHom(k.kernel, dst, comp, false).is_zero_map());
    }
}

TEST_CASE("membership with witness") {
    FgAbGroup z(1);
    SECTION("zero is in any subgroup") {
        IntMatrix s = mat(1, 1, {5});
        auto w = z.solve_in_subgroup(s, {Int(0)});
        REQUIRE(w.has_value());
    }
    SECTION("1 not in <2> in Z") {
        IntMatrix s = mat(1, 1, {2});
        REQUIRE(!z.solve_in_subgroup(s, {Int(1)}).has_value());
    }
    SECTION("2 in <6,10> with verifying witness") {
        IntMatrix s = mat(1, 2, {6, 10});
        auto w = z.solve_in_subgroup(s, {Int(2)});
        REQUIRE(w.has_value());
        REQUIRE((*w)[0] * 6 + (*w)[1] * 10 == 2);
    }
}

TEST_CASE("factor through inclusion") {
    FgAbGroup z(1), z2(2);
    AbHom incl(z, z2, mat(2, 1, {2, 4}));
    AbHom g(z, z2, mat(2, 1, {6, 12}));
    auto h = factor_through(incl, g);
    REQUIRE(h.has_value());
    REQUIRE(h->matrix().at(0, 0) == 3);
    AbHom bad(z, z2, mat(2, 1, {1, 1}));
    REQUIRE(!factor_through(incl, bad).has_value());
}
