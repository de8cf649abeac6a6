#include <doctest.h>

#include "gridwlp/field.hpp"
#include "gridwlp/geometry.hpp"
#include "gridwlp/ideals.hpp"
#include "gridwlp/matrix.hpp"
#include "gridwlp/subspace.hpp"
#include "support.hpp"

using namespace gridwlp;

namespace {

const PrimeField F(kDefaultPrime);
using M = DenseMatrix<PrimeField>;

// rows x cols of rank at most r: a product of random r-wide factors
M low_rank(RandomStream& rng, std::size_t rows, std::size_t cols, std::size_t r) {
    M a(F, rows, r), b(F, r, cols), out(F, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < r; ++k) a(i, k) = rng.uniform(0, kDefaultPrime - 1);
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t j = 0; j < cols; ++j) b(k, j) = rng.uniform(0, kDefaultPrime - 1);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t k = 0; k < r; ++k) out(i, j) = F.add(out(i, j), F.mul(a(i, k), b(k, j)));
    return out;
}

std::vector<std::vector<std::uint64_t>> to_rows(const M& m) {
    std::vector<std::vector<std::uint64_t>> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) rows.emplace_back(m.row(i).begin(), m.row(i).end());
    return rows;
}

std::vector<std::uint64_t> coeffs(const Point4<PrimeField>& p) { return {p.begin(), p.end()}; }

}  // namespace

TEST_CASE("rank basics") {
    CHECK(rank(F, identity_matrix(F, 5)) == 5);
    CHECK(rank(F, M(F, 4, 6)) == 0);
    CHECK(kernel_dim(F, identity_matrix(F, 4)) == 0);
    CHECK(kernel_dim(F, M(F, 3, 7)) == 7);
}

TEST_CASE("rank agrees with schoolbook elimination") {
    RandomStream rng(RandomSeed{}, "rank");
    for (std::size_t r : {0u, 1u, 3u, 7u, 12u}) {
        for (auto [rows, cols] : {std::pair{12u, 15u}, std::pair{20u, 9u}, std::pair{15u, 15u}}) {
            const auto m = low_rank(rng, rows, cols, r);
            const auto expect = brute::rank(to_rows(m));
            CHECK(rank(F, m) == expect);
            CHECK(expect == std::min({r, std::size_t{rows}, std::size_t{cols}}));
        }
    }
}

TEST_CASE("incremental and column-wise RREF coincide") {
    RandomStream rng(RandomSeed{}, "rref");
    for (int trial = 0; trial < 10; ++trial) {
        auto a = low_rank(rng, 25, 18, static_cast<std::size_t>(trial + 2));
        // repeat a row and zero another to hit the degenerate paths
        for (std::size_t j = 0; j < a.cols(); ++j) {
            a(3, j) = a(0, j);
            a(5, j) = 0;
        }
        auto b = a;
        const auto full = row_reduce(F, a, Reduction::Full);
        const auto inc = row_reduce_incremental(F, b);
        REQUIRE(full.rank == inc.rank);
        CHECK(full.pivot_cols == inc.pivot_cols);
        CHECK(b.rows() == inc.rank);
        for (std::size_t i = 0; i < inc.rank; ++i) {
            for (std::size_t j = 0; j < a.cols(); ++j) REQUIRE(a(i, j) == b(i, j));
        }
    }
}

TEST_CASE("kernel basis") {
    RandomStream rng(RandomSeed{}, "kernel");
    const auto m = low_rank(rng, 9, 14, 5);
    const auto k = kernel_basis(F, m);
    CHECK(k.rows() == 9);
    CHECK(rank(F, k) == 9);
    for (std::size_t v = 0; v < k.rows(); ++v) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            std::uint64_t s = 0;
            for (std::size_t j = 0; j < m.cols(); ++j) s = F.add(s, F.mul(m(i, j), k(v, j)));
            REQUIRE(s == 0);
        }
    }
}

TEST_CASE("rational and prime ranks agree on small integer matrices") {
    const RationalField Q;
    RandomStream rng(RandomSeed{}, "qq");
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t rows = 6, cols = 8;
        DenseMatrix<RationalField> q(Q, rows, cols);
        M p(F, rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                const auto v = static_cast<std::int64_t>(rng.uniform(0, 6)) - 3;
                q(i, j) = Q.from_int(v);
                p(i, j) = F.from_int(v);
            }
        }
        // force dependencies
        for (std::size_t j = 0; j < cols; ++j) {
            q(4, j) = q(0, j) + 2 * q(1, j);
            p(4, j) = F.add(p(0, j), F.mul(2, p(1, j)));
        }
        CHECK(rank(Q, q) == rank(F, p));
    }
}

TEST_CASE("span dimensions of powers") {
    RandomStream rng(RandomSeed{}, "grid");
    const auto grid = make_grid(F, 3, 3, rng);
    std::vector<PolyVector<PrimeField>> squares;
    for (const auto& p : grid.points()) squares.push_back(linear_power(F, std::span<const std::uint64_t>(p), 2));
    squares.push_back(squares.front());
    CHECK(squares.size() == 10);
    CHECK(span_dim(F, std::span<const PolyVector<PrimeField>>(squares)) == 9);

    // points A + sB on a line
    const Point4<PrimeField> a{1, 2, 3, 4}, b{5, 6, 7, 9};
    auto collinear = [&](int n, int d) {
        std::vector<PolyVector<PrimeField>> powers;
        for (int s = 0; s < n; ++s) {
            Point4<PrimeField> p;
            for (int i = 0; i < 4; ++i) p[i] = F.add(a[i], F.mul(static_cast<std::uint64_t>(s), b[i]));
            powers.push_back(linear_power(F, std::span<const std::uint64_t>(p), d));
        }
        return span_dim(F, std::span<const PolyVector<PrimeField>>(powers));
    };
    CHECK(collinear(5, 3) == 4);
    CHECK(collinear(3, 3) == 3);
    CHECK(span_dim(F, std::span<const PolyVector<PrimeField>>(squares.data(), 1)) == 1);
}

TEST_CASE("union and intersection") {
    const Ambient amb{GradingSpec::total(4), Degree{2}};
    M e3(F, 3, 10), e4(F, 4, 10);
    for (std::size_t i = 0; i < 3; ++i) e3(i, i) = 1;
    for (std::size_t i = 0; i < 4; ++i) e4(i, 3 + i) = 1;
    const auto a = SubspaceBasis<PrimeField>::span_of(F, amb, e3);
    const auto b = SubspaceBasis<PrimeField>::span_of(F, amb, e4);
    CHECK(union_dim(F, a, a) == 3);
    CHECK(union_dim(F, a, b) == 7);
    CHECK(intersection_dim(F, a, b) == 0);

    RandomStream rng(RandomSeed{}, "union");
    for (int trial = 0; trial < 10; ++trial) {
        const auto shared = low_rank(rng, 3, 20, 2);
        auto x = low_rank(rng, 6, 20, 4), y = low_rank(rng, 7, 20, 5);
        for (std::size_t i = 0; i < 3; ++i) {
            x.append_row(shared.row(i));
            y.append_row(shared.row(i));
        }
        const Ambient amb3{GradingSpec::total(4), Degree{3}};
        const auto sx = SubspaceBasis<PrimeField>::span_of(F, amb3, x);
        const auto sy = SubspaceBasis<PrimeField>::span_of(F, amb3, y);
        CHECK(union_dim(F, sx, sy) + intersection_dim(F, sx, sy) == sx.dim() + sy.dim());
        CHECK(intersection_dim(F, sx, sy) >= 2);
    }
}

TEST_CASE("normal forms") {
    RandomStream rng(RandomSeed{}, "nf");
    const Ambient amb{GradingSpec::total(4), Degree{3}};
    const auto rows = low_rank(rng, 8, 20, 8);
    const auto s = SubspaceBasis<PrimeField>::span_of(F, amb, rows);
    CHECK(s.codim() == 12);
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        CHECK(s.contains(F, rows.row(i)));
        const auto nf = s.normal_form(F, rows.row(i));
        CHECK(std::all_of(nf.begin(), nf.end(), [](auto x) { return x == 0; }));
    }
    // v and v + (element of s) have the same normal form
    std::vector<std::uint64_t> v(20);
    for (auto& x : v) x = rng.uniform(0, kDefaultPrime - 1);
    auto w = v;
    for (std::size_t j = 0; j < 20; ++j) w[j] = F.add(w[j], F.mul(7, rows(2, j)));
    CHECK(s.normal_form(F, v) == s.normal_form(F, w));
    CHECK_FALSE(s.contains(F, v));
}

TEST_CASE("multiplication by a general form onto R_5 for a 3x3 grid, d=4") {
    RandomStream rng(RandomSeed{}, "grid");
    const auto grid = make_grid(F, 3, 3, rng);
    const auto lam = powers_ideal_piece(F, grid, 4, 5);
    RandomStream form(RandomSeed{}, "form");
    Point4<PrimeField> l;
    for (auto& c : l) c = F.random_nonzero(form);
    const auto lp = linear_form(F, std::span<const std::uint64_t>(l));
    const Ambient r5{GradingSpec::total(4), Degree{5}};
    M rows(F, 0, r5.dim());
    for (const auto& m : graded_basis(GradingSpec::total(4), Degree{4})) {
        const auto prod = poly_mul(F, lp, poly_from_terms(F, GradingSpec::total(4), Degree{4}, {{m, 1}}));
        rows.append_row(std::span<const std::uint64_t>(prod.coeffs));
    }
    const auto multiples = SubspaceBasis<PrimeField>::span_of(F, r5, rows);
    CHECK(union_dim(F, lam, multiples) == 56);
}

TEST_CASE("contraction of Q^2 has no kernel on R_2") {
    const auto q = poly_from_terms(F, GradingSpec::total(4), Degree{2},
                                   {{Monomial{{1, 0, 0, 1}}, 1}, {Monomial{{0, 1, 1, 0}}, -1}});
    const auto q2 = poly_mul(F, q, q);
    const auto m = derivation_matrix(F, q2, 2);
    CHECK(m.rows() == 10);
    CHECK(kernel_dim(F, m.transpose()) == 0);
    CHECK(brute::rank(to_rows(m)) == 10);
}

TEST_CASE("dimension cap guard") {
    CHECK_THROWS_AS(check_ambient(kMaxAmbientColumns + 1), DimensionCapExceeded);
    CHECK_NOTHROW(check_ambient(kMaxAmbientColumns));
}
