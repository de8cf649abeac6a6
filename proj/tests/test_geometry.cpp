#include <doctest.h>

#include "gridwlp/field.hpp"
#include "gridwlp/geometry.hpp"

using namespace gridwlp;

namespace {

const PrimeField F(kDefaultPrime);
using Pt = Point4<PrimeField>;

std::uint64_t pair_with(const Pt& form, const Pt& p) {
    return pairing<PrimeField>(F, std::span<const std::uint64_t>(form), std::span<const std::uint64_t>(p));
}

int planes_through(const GridConfig<PrimeField>& g, const Pt& p) {
    int n = 0;
    for (int i = 0; i < g.a(); ++i)
        for (int j = 0; j < g.b(); ++j) n += pair_with(g.tangent_plane(i, j), p) == 0;
    return n;
}

GridConfig<PrimeField> grid33() { return seeded_grid(F, 3, 3, RandomSeed{}); }

}  // namespace

TEST_CASE("grid construction") {
    const auto g = make_grid(F, std::vector<std::int64_t>{1, 2, 3}, std::vector<std::int64_t>{1, 2, 3});
    CHECK(g.points().size() == 9);
    const auto h = seeded_grid(F, 3, 6, RandomSeed{});
    CHECK(h.points().size() == 18);
    CHECK(h.a() + h.b() == 9);
    for (const auto* grid : {&g, &h}) {
        for (const auto& p : grid->points()) CHECK(F.sub(F.mul(p[0], p[3]), F.mul(p[1], p[2])) == 0);
    }
    // swapped rulings are normalised to a <= b
    const auto w = make_grid(F, std::vector<std::int64_t>{1, 2, 3, 4}, std::vector<std::int64_t>{5, 6});
    CHECK(w.a() == 2);
    CHECK(w.b() == 4);
    CHECK_THROWS(make_grid(F, std::vector<std::int64_t>{1, 1}, std::vector<std::int64_t>{2, 3}));
    CHECK_THROWS_AS(make_grid(PrimeField(101), std::vector<std::int64_t>{1, 2, 3}, std::vector<std::int64_t>{4, 5, 6}),
                    FieldError);
}

TEST_CASE("tangent planes cut out the two ruling lines") {
    const auto g = seeded_grid(F, 3, 4, RandomSeed{7});
    for (int i = 0; i < g.a(); ++i) {
        for (int j = 0; j < g.b(); ++j) {
            for (int k = 0; k < g.a(); ++k) {
                for (int l = 0; l < g.b(); ++l) {
                    const bool on_ruling = k == i || l == j;
                    REQUIRE((pair_with(g.tangent_plane(i, j), g.point(k, l)) == 0) == on_ruling);
                }
            }
        }
    }
}

TEST_CASE("seeded grids are reproducible") {
    const auto a = seeded_grid(F, 3, 5, RandomSeed{11});
    const auto b = seeded_grid(F, 3, 5, RandomSeed{11});
    const auto c = seeded_grid(F, 3, 5, RandomSeed{12});
    CHECK(a.u() == b.u());
    CHECK(a.v() == b.v());
    CHECK(a.u() != c.u());
}

TEST_CASE("locus syntax") {
    for (const char* text : {"generic", "plane:1,2", "lambda:3", "mu:1", "chord:1,2,2,1"}) {
        CHECK(Locus::parse(text).to_string() == text);
    }
    CHECK(Locus::parse("plane:1,2").j == 1);
    CHECK_THROWS(Locus::parse("plane:0,1"));
    CHECK_THROWS(Locus::parse("ruling"));
}

TEST_CASE("sampled special forms lie on their locus") {
    const auto g = grid33();
    RandomStream rng(RandomSeed{}, "sample");
    const auto plane = sample_form(F, g, Locus::plane(0, 0), rng);
    CHECK(pair_with(g.tangent_plane(0, 0), plane) == 0);
    CHECK(planes_through(g, plane) == 1);

    const auto chord = sample_form(F, g, Locus::chord(0, 1, 1, 0), rng);
    CHECK(on_line(F, chord, g.point(0, 1), g.point(1, 0)));
    CHECK(planes_through(g, chord) == 2);
    CHECK(pair_with(g.tangent_plane(0, 0), chord) == 0);
    CHECK(pair_with(g.tangent_plane(1, 1), chord) == 0);

    const auto lam = sample_form(F, g, Locus::lambda(0), rng);
    const auto [p, q] = g.lambda(0);
    CHECK(on_line(F, lam, p, q));
    CHECK(planes_through(g, lam) == g.b());

    const auto gen = sample_form(F, g, Locus::generic(), rng);
    CHECK(planes_through(g, gen) == 0);
}

TEST_CASE("projections of a 3x3 grid") {
    const auto g = grid33();
    RandomStream rng(RandomSeed{}, "project");
    const auto generic = project_from_point(F, g, sample_form(F, g, Locus::generic(), rng));
    CHECK(generic.points.size() == 9);
    CHECK(is_ci_hilbert(F, generic, 3, 3));

    const auto chord = project_from_point(F, g, sample_form(F, g, Locus::chord(0, 1, 1, 0), rng));
    CHECK(chord.points.size() == 8);
    REQUIRE(chord.collisions.size() == 1);
    CHECK(chord.image_of[0 * 3 + 1] == chord.image_of[1 * 3 + 0]);

    const auto lam = project_from_point(F, g, sample_form(F, g, Locus::lambda(0), rng));
    CHECK(lam.points.size() == 7);
    CHECK(lam.image_of[0] == lam.image_of[1]);
    CHECK(lam.image_of[1] == lam.image_of[2]);

    const auto plane = project_from_point(F, g, sample_form(F, g, Locus::plane(0, 0), rng));
    CHECK(plane.points.size() == 9);
    CHECK_FALSE(is_ci_hilbert(F, plane, 3, 3));

    CHECK_THROWS(project_from_point(F, g, g.point(1, 1)));
}

TEST_CASE("nine general plane points are not a complete intersection") {
    RandomStream rng(RandomSeed{}, "plane points");
    PlanePointSet<PrimeField> pts;
    for (std::size_t i = 0; i < 9; ++i) {
        pts.points.push_back({1, rng.uniform(1, kDefaultPrime - 1), rng.uniform(1, kDefaultPrime - 1)});
        pts.image_of.push_back(i);
    }
    CHECK(plane_points_hilbert(F, pts, 2) == 6);
    CHECK(plane_points_hilbert(F, pts, 3) == 9);
    CHECK_FALSE(is_ci_hilbert(F, pts, 3, 3));
}

TEST_CASE("plane Hilbert function of a projected grid") {
    const auto g = seeded_grid(F, 3, 4, RandomSeed{});
    RandomStream rng(RandomSeed{}, "hf");
    const auto img = project_from_point(F, g, sample_form(F, g, Locus::generic(), rng));
    // complete intersection of type (3, 4): 1, 3, 6, 9, 11, 12, 12, ...
    const std::vector<long long> expect{1, 3, 6, 9, 11, 12, 12};
    for (int t = 0; t < 7; ++t) CHECK(plane_points_hilbert(F, img, t) == expect[static_cast<std::size_t>(t)]);
    CHECK(is_ci_hilbert(F, img, 3, 4));
}

TEST_CASE("plane centres never give a complete intersection") {
    for (auto [a, b] : {std::pair{2, 3}, std::pair{3, 4}, std::pair{4, 4}}) {
        const auto g = seeded_grid(F, a, b, RandomSeed{3});
        RandomStream rng(RandomSeed{}, "planes", static_cast<std::uint64_t>(a * 8 + b));
        CHECK(is_ci_hilbert(F, project_from_point(F, g, sample_form(F, g, Locus::generic(), rng)), a, b));
        CHECK(is_ci_hilbert(F, project_from_point(F, g, sample_form(F, g, Locus::generic(), rng)), b, a));
        for (int i = 0; i < a; ++i) {
            for (int j = 0; j < b; ++j) {
                const auto img = project_from_point(F, g, sample_form(F, g, Locus::plane(i, j), rng));
                CHECK_FALSE(is_ci_hilbert(F, img, a, b));
            }
        }
    }
}

TEST_CASE("the image Hilbert function does not depend on the target plane") {
    const auto g = seeded_grid(F, 3, 4, RandomSeed{5});
    RandomStream rng(RandomSeed{}, "reparam");
    const auto proj = projection_from(F, sample_form(F, g, Locus::chord(0, 1, 1, 0), rng));
    const std::array<std::array<std::uint64_t, 3>, 3> m{{{2, 1, 0}, {0, 3, 1}, {5, 0, 1}}};
    const auto moved = reparametrize(F, proj, m);
    const auto x = project_from_point(F, g, proj), y = project_from_point(F, g, moved);
    CHECK(x.points.size() == y.points.size());
    CHECK(x.image_of == y.image_of);
    for (int t = 0; t <= 6; ++t) CHECK(plane_points_hilbert(F, x, t) == plane_points_hilbert(F, y, t));
}
