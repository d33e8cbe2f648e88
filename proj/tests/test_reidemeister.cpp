#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "rinf/reidemeister.hpp"
#include "test_helpers.hpp"

using namespace rinf;

namespace {

// (Z/m)^n as an explicit group table with automorphism v -> M*v mod m.
template <std::size_t N>
FiniteGroupSpec torus_quotient(const std::array<std::array<Int, N>, N>& mat,
                               long m) {
    const std::size_t n = [&] {
        std::size_t p = 1;
        for (std::size_t i = 0; i < N; ++i) p *= static_cast<std::size_t>(m);
        return p;
    }();
    auto digits = [&](std::size_t i) {
        std::array<long, N> v{};
        for (std::size_t j = 0; j < N; ++j) {
            v[j] = static_cast<long>(i % m);
            i /= static_cast<std::size_t>(m);
        }
        return v;
    };
    auto index = [&](const std::array<long, N>& v) {
        std::size_t i = 0;
        for (std::size_t j = N; j-- > 0;)
            i = i * static_cast<std::size_t>(m) + static_cast<std::size_t>(v[j]);
        return i;
    };
    FiniteGroupSpec g;
    g.n = n;
    g.table.assign(n, std::vector<std::size_t>(n));
    g.aut.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto vi = digits(i);
        for (std::size_t j = 0; j < n; ++j) {
            auto vj = digits(j);
            for (std::size_t k = 0; k < N; ++k) vj[k] = (vj[k] + vi[k]) % m;
            g.table[i][j] = index(vj);
        }
        std::array<long, N> w{};
        for (std::size_t r = 0; r < N; ++r) {
            Int acc = 0;
            for (std::size_t c = 0; c < N; ++c) acc += mat[r][c] * vi[c];
            Int red = acc % m;
            if (red < 0) red += m;
            w[r] = static_cast<long>(red);
        }
        g.aut[i] = index(w);
    }
    return g;
}

FiniteGroupSpec cyclic5(std::size_t multiplier) {
    FiniteGroupSpec g;
    g.n = 5;
    g.table.assign(5, std::vector<std::size_t>(5));
    g.aut.assign(5, 0);
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; j < 5; ++j) g.table[i][j] = (i + j) % 5;
        g.aut[i] = (multiplier * i) % 5;
    }
    return g;
}

FiniteGroupSpec sym3() {
    // permutations of {0,1,2} in lexicographic order
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    FiniteGroupSpec g;
    g.n = 6;
    g.table.assign(6, std::vector<std::size_t>(6));
    g.aut.assign(6, 0);
    for (std::size_t i = 0; i < 6; ++i) {
        g.aut[i] = i;
        for (std::size_t j = 0; j < 6; ++j) {
            std::array<int, 3> c;
            for (int x = 0; x < 3; ++x) c[x] = perms[i][perms[j][x]];
            g.table[i][j] = static_cast<std::size_t>(
                std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    }
    return g;
}

// random unimodular 3x3 matrix built from row operations and swaps
Mat3 random_gl3(std::mt19937_64& rng, int ops) {
    Mat3 m = Mat3::identity();
    for (int t = 0; t < ops; ++t) {
        const std::size_t i = rng() % 3;
        std::size_t j = rng() % 3;
        if (i == j) j = (j + 1) % 3;
        if (rng() % 4 == 0) {
            for (std::size_t c = 0; c < 3; ++c) std::swap(m(i, c), m(j, c));
            for (std::size_t c = 0; c < 3; ++c) m(i, c) = -m(i, c);
        } else {
            const Int f = (rng() % 2 == 0) ? 1 : -1;
            for (std::size_t c = 0; c < 3; ++c) m(i, c) += f * m(j, c);
        }
    }
    return m;
}

}  // namespace

TEST_CASE("reidemeister_lattice fixed values") {
    CHECK(reidemeister_lattice(Mat2{0, -1, 1, 0}) == CokernelOrder::finite(2));
    CHECK(reidemeister_lattice(Mat2::identity()).infinite);
    const Mat3 phi_prime{{{{0, 1, 0}, {0, 0, -1}, {1, 0, 0}}}};
    CHECK(reidemeister_lattice(phi_prime) == CokernelOrder::finite(2));
}

TEST_CASE("reidemeister_lattice equals |det(I - M)|") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const Mat2 m = testing::random_gl2(rng, 6, 3);
        const Int d = (Mat2::identity() - m).det();
        const CokernelOrder r = reidemeister_lattice(m);
        if (d == 0)
            CHECK(r.infinite);
        else
            CHECK(r == CokernelOrder::finite(abs(d)));
    }
}

TEST_CASE("reidemeister_sol addition formula") {
    const Mat2 A0{2, 1, 1, 1};
    const Mat2 J{0, -1, 1, 0};
    SUBCASE("symmetric base with J gives 4") {
        const CokernelOrder r = reidemeister_sol({J, -1, A0});
        CHECK(r == CokernelOrder::finite(4));
    }
    SUBCASE("eps = +1 is always infinite") {
        CHECK(reidemeister_sol({Mat2::identity(), 1, A0}).infinite);
        CHECK(reidemeister_sol({A0, 1, A0}).infinite);
    }
    SUBCASE("S0*X0 construction: both terms equal 2") {
        // X0 = (1 1; 2 1) has det -1 and squares to the B0-form
        // A = (3 2; 4 3); S = S0*X0 is a det +1 reverser of A.
        const Mat2 X0{1, 1, 2, 1};
        const Mat2 A = X0 * X0;
        CHECK(A == Mat2{3, 2, 4, 3});
        const Mat2 S = Mat2{1, 0, 0, -1} * X0;
        CHECK(S.det() == 1);
        CHECK(reidemeister_lattice(S) == CokernelOrder::finite(2));
        CHECK(reidemeister_lattice(A * S) == CokernelOrder::finite(2));
        CHECK(reidemeister_sol({S, -1, A}) == CokernelOrder::finite(4));
    }
    SUBCASE("rejects a non-automorphism") {
        CHECK_THROWS_AS(reidemeister_sol({J, 1, A0}), precondition_error);
        CHECK_THROWS_AS(reidemeister_sol({Mat2::identity(), -1, A0}),
                        precondition_error);
        CHECK_THROWS_AS(reidemeister_sol({Mat2{2, 0, 0, 2}, -1, A0}),
                        precondition_error);
    }
}

TEST_CASE("twisted_classes_finite") {
    SUBCASE("trivial group") {
        FiniteGroupSpec g;
        g.n = 1;
        g.table = {{0}};
        g.aut = {0};
        CHECK(twisted_classes_finite(g) == 1);
    }
    SUBCASE("Z/5 with identity has 5 classes") {
        CHECK(twisted_classes_finite(cyclic5(1)) == 5);
    }
    SUBCASE("Z/5 with x -> 2x has 1 class") {
        CHECK(twisted_classes_finite(cyclic5(2)) == 1);
    }
    SUBCASE("identity automorphism counts conjugacy classes of S3") {
        CHECK(twisted_classes_finite(sym3()) == 3);
    }
    SUBCASE("malformed input is rejected") {
        FiniteGroupSpec bad;
        bad.n = 2;
        bad.table = {{0, 1}, {1, 1}};  // second row not a permutation
        bad.aut = {0, 1};
        CHECK_THROWS_AS(twisted_classes_finite(bad), precondition_error);
        FiniteGroupSpec not_mult = cyclic5(1);
        not_mult.aut = {1, 0, 2, 3, 4};  // bijective, not multiplicative
        CHECK_THROWS_AS(twisted_classes_finite(not_mult), precondition_error);
    }
}

TEST_CASE("finite quotient oracle for Sol automorphisms") {
    const Mat2 A0{2, 1, 1, 1};
    const Mat2 J{0, -1, 1, 0};
    const SolAut phi{J, -1, A0};
    SUBCASE("regression fixture at the smallest valid modulus") {
        const auto m = smallest_valid_quotient(A0, phi);
        REQUIRE(m);
        CHECK(*m == 2);
        // (Z/2)^2 x| Z/3 with the descended twist of J
        CHECK(finite_quotient_sol_oracle(A0, phi, *m) == 2);
        CHECK(finite_quotient_sol_oracle(A0, phi, 4) == 2);
    }
    SUBCASE("base congruent to I mod 2 collapses to the abelian count") {
        const Mat2 B{3, 2, 4, 3};
        const Mat2 S{1, 1, -2, -1};
        // (Z/2)^2 with v -> S*v: image of I-S mod 2 has order 2
        CHECK(finite_quotient_sol_oracle(B, {S, -1, B}, 2) == 2);
    }
    SUBCASE("trivial automorphism counts ordinary classes") {
        // S = I descends with eps = +1; A0 mod 2 has order 3, so the
        // quotient is (Z/2)^2 x| Z/3 = A4 with 4 conjugacy classes
        CHECK(finite_quotient_sol_oracle(A0, {Mat2::identity(), 1, A0}, 2) ==
              4);
    }
    SUBCASE("descent is checked") {
        // T*A0 and A0^-1*T already differ mod 3
        CHECK_THROWS_AS(finite_quotient_sol_oracle(A0, {{1, 1, 0, 1}, -1, A0}, 3),
                        precondition_error);
    }
}

TEST_CASE("lattice value matches the finite-quotient class count") {
    std::mt19937_64 rng(17);
    int done2 = 0, done3 = 0;
    while (done2 < 70) {
        const Mat2 m = testing::random_gl2(rng, 4, 3);
        const Int d = abs((Mat2::identity() - m).det());
        if (d == 0 || d > 8) continue;
        const long mod = static_cast<long>(d);
        const FiniteGroupSpec g =
            torus_quotient<2>({{{m.a, m.b}, {m.c, m.d}}}, mod);
        CHECK(twisted_classes_finite(g) == static_cast<std::size_t>(d));
        CHECK(reidemeister_lattice(m) == CokernelOrder::finite(d));
        ++done2;
    }
    while (done3 < 30) {
        const Mat3 m = random_gl3(rng, 5);
        const Int d = abs((Mat3::identity() - m).det());
        if (d == 0 || d > 5) continue;
        std::array<std::array<Int, 3>, 3> grid;
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c) grid[r][c] = m(r, c);
        const FiniteGroupSpec g = torus_quotient<3>(grid, static_cast<long>(d));
        CHECK(twisted_classes_finite(g) == static_cast<std::size_t>(d));
        CHECK(reidemeister_lattice(m) == CokernelOrder::finite(d));
        ++done3;
    }
}

TEST_CASE("R-values are conjugation invariant") {
    std::mt19937_64 rng(23);
    const Mat2 A0{2, 1, 1, 1};
    const Mat2 J{0, -1, 1, 0};
    for (int i = 0; i < 50; ++i) {
        const Mat2 p = testing::random_gl2(rng, 4, 2);
        const Mat2 pinv = inverse_unimodular(p);
        CHECK(reidemeister_lattice(p * A0 * pinv) == reidemeister_lattice(A0));
        CHECK(reidemeister_sol({p * J * pinv, -1, p * A0 * pinv}) ==
              CokernelOrder::finite(4));
    }
}

TEST_CASE("flat case 6 report") {
    const Case6Report r = verify_case6();
    CHECK(r.phi_value == 2);
    for (const Int& v : r.lift_values) CHECK(v == 2);
    CHECK_FALSE(r.total.infinite);
    CHECK(r.total.value == 8);
    // the sign matrices all have det +1, so every lift shares phi's det
    for (const Mat3& l : r.lifts) CHECK(l.det() == r.phi_prime.det());
}
