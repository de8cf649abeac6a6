#include <doctest.h>

#include "gridwlp/field.hpp"
#include "gridwlp/geometry.hpp"
#include "gridwlp/lefschetz.hpp"
#include "gridwlp/predictor.hpp"
#include "support.hpp"

using namespace gridwlp;

namespace {

const PrimeField F(kDefaultPrime);

struct Measured {
    std::vector<std::array<std::uint64_t, 4>> pts;
    std::array<std::uint64_t, 4> ell;
};

Measured measure(int a, int b) {
    const auto g = seeded_grid(F, a, b, RandomSeed{31});
    return {{g.points().begin(), g.points().end()}, generic_form(F, RandomSeed{31}, 0)};
}

}  // namespace

TEST_CASE("extended binomials") {
    CHECK(ext_binom(4, 2) == 6);
    CHECK(ext_binom(-1, 2) == 0);
    CHECK(ext_binom(1, 2) == 0);
    CHECK(ext_binom(5, 0) == 1);
    CHECK(ext_binom(30, 15) == 155117520);
    CHECK_THROWS(ext_binom(3, -1));
    for (int n = 1; n <= 20; ++n) {
        for (int k = 1; k <= n; ++k) CHECK(ext_binom(n, k) == ext_binom(n - 1, k - 1) + ext_binom(n - 1, k));
    }
}

TEST_CASE("division parameters") {
    const auto s = SquareGridParams::make(3, 5);
    CHECK(s.q == 2);
    CHECK(s.r == 1);
    const auto n = NonSquareParams::make(3, 6, 5);
    CHECK(n.q_prime == 2);
    CHECK(n.r_prime == 1);
    CHECK(n.q == 1);
    CHECK(n.r == 0);
    // r' is never 0
    const auto m = NonSquareParams::make(3, 5, 4);
    CHECK(m.q_prime == 1);
    CHECK(m.r_prime == 2);
    CHECK_THROWS(SquareGridParams::make(1, 3));
}

TEST_CASE("cokernel formula") {
    CHECK(coker_formula_geproci(3, 3, 3, 0) == 2);
    CHECK(coker_formula_geproci(3, 3, 4, 1) == 0);
    CHECK(coker_formula_geproci(3, 6, 5, 1) == 1);
    CHECK_FALSE(coker_formula_geproci(3, 3, 7, 0).has_value());
}

TEST_CASE("cokernel formula against brute-force ranks") {
    for (auto [a, b] : {std::pair{2, 3}, std::pair{3, 3}, std::pair{3, 4}}) {
        const auto m = measure(a, b);
        for (int d = 1; d <= 5; ++d) {
            for (int t = 0; t <= 2; ++t) {
                const auto f = coker_formula_geproci(a, b, d, t);
                if (!f) continue;
                INFO("a=" << a << " b=" << b << " d=" << d << " t=" << t);
                CHECK(brute::coker(m.pts, d, m.ell, d + t) == *f);
            }
        }
    }
}

TEST_CASE("square grid predictions") {
    const auto p33 = square_coker_and_delta(SquareGridParams::make(3, 3));
    CHECK(p33.coker == 2);
    CHECK(p33.delta_critical == 1);
    CHECK(p33.delta_critical < p33.coker);
    CHECK_FALSE(p33.delta_below.has_value());

    const auto p34 = square_coker_and_delta(SquareGridParams::make(3, 4));
    CHECK(p34.coker == 0);
    CHECK(p34.delta_critical == -6);
    CHECK(p34.delta_below == 6);

    const auto p46 = square_coker_and_delta(SquareGridParams::make(4, 6));
    CHECK(p46.coker == 0);
    CHECK(p46.delta_critical == -12);
    CHECK(p46.delta_below == 12);
}

TEST_CASE("square grid predictions against brute force") {
    for (int a = 3; a <= 4; ++a) {
        const auto m = measure(a, a);
        for (int d = a - 1; d <= 2 * (a - 1) + 1; ++d) {
            const auto p = SquareGridParams::make(a, d);
            const auto pred = square_coker_and_delta(p);
            const int crit = d + p.q - 1;
            INFO("a=" << a << " d=" << d);
            CHECK(brute::coker(m.pts, d, m.ell, crit) == pred.coker);
            CHECK(brute::quotient_dim(m.pts, d, crit) - brute::quotient_dim(m.pts, d, crit - 1) == pred.delta_critical);
            if (pred.delta_below) {
                CHECK(brute::quotient_dim(m.pts, d, crit - 1) - brute::quotient_dim(m.pts, d, crit - 2) ==
                      *pred.delta_below);
            }
        }
    }
}

TEST_CASE("non-square cokernel") {
    CHECK(nonsquare_coker(NonSquareParams::make(3, 6, 5)) == 1);
    CHECK(nonsquare_coker(NonSquareParams::make(2, 3, 2)) == 1);
    const auto m = measure(2, 3);
    CHECK(brute::coker(m.pts, 2, m.ell, 2) == 1);
    // b - a >= r' + 1 leaves only the first term
    for (int d = 2; d <= 6; ++d) {
        const auto p = NonSquareParams::make(2, 5, d);
        CHECK(nonsquare_coker(p) == ext_binom(p.r_prime + 1, 2));
    }
}

TEST_CASE("verdicts and low degrees") {
    CHECK(wlp_verdict_theorem_a(3, 4));
    CHECK_FALSE(wlp_verdict_theorem_a(3, 3));
    CHECK(wlp_verdict_theorem_a(5, 4));
    CHECK(low_degree_ideal_dim(3, 3, 4, 5) == 36);
    CHECK(low_degree_ideal_dim(3, 3, 4, 4) == 9);
    CHECK(low_degree_ideal_dim(3, 6, 5, 5) == 18);
    CHECK_FALSE(low_degree_ideal_dim(3, 6, 5, 6).has_value());
    const auto m = measure(3, 4);
    for (int d = 3; d <= 7; ++d) {
        for (int t = d; t <= d + 3; ++t) {
            if (const auto v = low_degree_ideal_dim(3, 4, d, t)) CHECK(brute::powers_ideal_dim(m.pts, d, t) == *v);
        }
    }
}

TEST_CASE("compressed Gorenstein sequences") {
    CHECK(compressed_gorenstein_hf(1) == std::vector<long long>{1, 4, 1});
    CHECK(compressed_gorenstein_hf(2) == std::vector<long long>{1, 4, 10, 4, 1});
    CHECK(compressed_gorenstein_hf(3) == std::vector<long long>{1, 4, 10, 20, 10, 4, 1});
}
