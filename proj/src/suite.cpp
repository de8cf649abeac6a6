#include "gridwlp/suite.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "gridwlp/geometry.hpp"
#include "gridwlp/ideals.hpp"
#include "gridwlp/lefschetz.hpp"
#include "gridwlp/predictor.hpp"

namespace gridwlp {

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
using GridSource = std::function<GridConfig<F>(int, int)>;

std::string join_ints(const std::vector<int>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s + "]";
}

std::string join_ll(const std::vector<long long>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s + "]";
}

CheckResult make_check(int id, std::string name) {
    CheckResult c;
    c.id = id;
    c.name = std::move(name);
    return c;
}

long long dim_r(int t) { return static_cast<long long>(count_monomials(4, t)); }

// Collects mismatches while a criterion sweeps its cases.
struct Tally {
    int cases = 0;
    int bad = 0;
    std::string first_bad;
    std::ostringstream fp;

    void record(bool ok, const std::string& label) {
        ++cases;
        if (!ok && bad++ == 0) first_bad = label;
    }
    std::string summary() const {
        std::string s = std::to_string(cases - bad) + "/" + std::to_string(cases) + " agree";
        if (bad) s += "; first mismatch " + first_bad;
        return s;
    }
};

template <class F>
class Criteria {
public:
    Criteria(const F& field, GridSource<F> grid, const SuiteOptions& opt, RandomSeed seed)
        : field_(field), grid_(std::move(grid)), opt_(opt), seed_(seed) {}

    std::vector<CheckResult> run(const std::function<void(const CheckResult&)>& report) {
        std::vector<CheckResult> out;
        auto timed = [&](CheckResult (Criteria::*fn)()) {
            const auto start = Clock::now();
            CheckResult r = (this->*fn)();
            r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
            if (report) report(r);
            out.push_back(std::move(r));
        };
        timed(&Criteria::square_sweep);
        timed(&Criteria::worked_example);
        timed(&Criteria::gorenstein);
        timed(&Criteria::cokernel_formula);
        timed(&Criteria::macaulay_duality);
        timed(&Criteria::independent_conditions);
        timed(&Criteria::no_syzygy_window);
        timed(&Criteria::non_lefschetz_probes);
        timed(&Criteria::ci_powers);
        timed(&Criteria::recursion_identity);
        return out;
    }

private:
    // Best rank over the trial forms at degree t.
    MultMapReport best_map(const GradedQuotient<F>& q, int t) const {
        MultMapReport best;
        for (int i = 0; i < opt_.trials; ++i) {
            auto r = mult_map_report(q, generic_form(field_, seed_, i), t);
            if (i == 0 || r.rank > best.rank) best = r;
            if (best.maximal) break;
        }
        return best;
    }

    CheckResult square_sweep() {
        auto c = make_check(1, "Square grid WLP sweep");
        Tally tally;
        for (int a = 3; a <= std::min(5, opt_.a_max); ++a) {
            const auto grid = grid_(a, a);
            for (int d = 1; d <= 3 * (a - 1); ++d) {
                const auto r = wlp_test(field_, grid, d, opt_.trials, seed_);
                const bool expected = wlp_verdict_theorem_a(a, d);
                tally.record(r.verdict == expected, "a=" + std::to_string(a) + " d=" + std::to_string(d));
                tally.fp << a << ',' << d << ':' << r.verdict << join_ints(r.failing) << ';';
            }
        }
        c.expected = "WLP iff d <= a-1 or (a-1) | d";
        c.computed = tally.summary();
        c.pass = tally.bad == 0 && tally.cases > 0;
        c.fingerprint = tally.fp.str();
        return c;
    }

    CheckResult worked_example() {
        auto c = make_check(2, "3x6 grid, d=5");
        const auto grid = grid_(3, 6);
        const auto x1 = grid_fat_points(grid, 1);
        const long long ix4 = fat_points_dim(field_, x1, 4);
        const long long ix5 = fat_points_dim(field_, x1, 5);
        const long long z2 = bigraded_fat_points_dim(field_, grid_bigraded_fat_points(grid, 2), Degree{6, 6});
        const auto q = powers_quotient(field_, grid, 5);
        const long long delta6 = hilbert_table(*q).delta(6);
        const long long coker6 = best_map(*q, 6).coker;
        const auto wlp = wlp_test(*q, opt_.trials, seed_);
        const bool fails6 = std::count(wlp.failing.begin(), wlp.failing.end(), 6) == 1;

        c.expected = "I_X(4)=17 I_X(5)=38 I_Z2(6,6)=10 dh(6)=-11 coker(6)=1 fails at 6";
        std::ostringstream s;
        s << "I_X(4)=" << ix4 << " I_X(5)=" << ix5 << " I_Z2(6,6)=" << z2 << " dh(6)=" << delta6
          << " coker(6)=" << coker6 << " failing=" << join_ints(wlp.failing);
        c.computed = s.str();
        c.fingerprint = s.str();
        const bool rest = ix5 == 38 && z2 == 10 && delta6 == -11 && coker6 == 1 && fails6;
        c.pass = rest && ix4 == 17;
        if (!c.pass && rest && ix4 == 20) {
            // Each of the three lines of the first ruling holds six grid points,
            // which impose only five conditions on quartics.
            const long long hx4 = dim_r(4) - ix4;
            const auto x2_piece = fat_points_piece(field_, grid_fat_points(grid, 2), 6);
            const long long image = restriction_image_dim(field_, x2_piece);
            const long long x2 = static_cast<long long>(x2_piece.dim());
            if (hx4 == 15 && x2 == ix4 + image && z2 - image == 3 && x2 - ix5 == -11) {
                c.known_deviation = true;
                c.note = "dim[I_X]_4 is 20, not 17: the 6 collinear points on each of the 3 lines impose 5 "
                         "conditions on quartics, so h_X(4)=15. dh(6)=-11 still holds because "
                         "dim[I_X^(2)]_6 = 27 = 20 + 7, the restriction to the quadric reaching only 7 of the 10 "
                         "dimensions of [I_Z^(2)]_(6,6).";
            }
        }
        return c;
    }

    CheckResult gorenstein() {
        auto c = make_check(3, "Gorenstein and apolarity");
        Tally tally;
        const auto quadric = poly_from_terms(field_, GradingSpec::total(4), Degree{2},
                                             {{Monomial{{1, 0, 0, 1}}, 1}, {Monomial{{0, 1, 1, 0}}, -1}});
        auto power = poly_from_terms(field_, GradingSpec::total(4), Degree{0}, {{Monomial{}, 1}});
        for (int t = 1; t <= 3 && t + 2 <= std::max(3, opt_.a_max); ++t) {
            power = poly_mul(field_, power, quadric);
            const auto q = perp_quotient(field_, power);
            auto hf = hilbert_table(*q).dims;
            while (!hf.empty() && hf.back() == 0) hf.pop_back();
            tally.record(hf == compressed_gorenstein_hf(t), "HF of (Q^" + std::to_string(t) + ")^perp");
            for (auto h : hf) tally.fp << h << ',';
            const auto grid = grid_(t + 2, t + 2);
            for (int s = 0; s <= 2 * t + 1; ++s) {
                const auto lam = powers_ideal_piece(field_, grid, t + 1, s).dim();
                const auto perp = perp_piece(field_, power, s).dim();
                tally.record(lam == perp, "t=" + std::to_string(t) + " s=" + std::to_string(s));
                tally.fp << t << ',' << s << ':' << lam << '/' << perp << ';';
            }
        }
        c.expected = "compressed HF; dim[Lambda_Y,t+1]_s = dim[(Q^t)^perp]_s";
        c.computed = tally.summary();
        c.pass = tally.bad == 0 && tally.cases > 0;
        c.fingerprint = tally.fp.str();
        return c;
    }

    CheckResult cokernel_formula() {
        auto c = make_check(4, "Cokernel formula");
        Tally tally;
        for (int a = 3; a <= std::min(4, opt_.a_max); ++a) {
            const auto grid = grid_(a, a);
            for (int d = a - 1; d <= 3 * (a - 1); ++d) {
                const auto q = powers_quotient(field_, grid, d);
                const int qd = d / (a - 1);
                for (int t = 0; t <= qd; ++t) {
                    const auto predicted = coker_formula_geproci(a, a, d, t);
                    if (!predicted) continue;
                    const long long measured = best_map(*q, d + t).coker;
                    tally.record(measured == *predicted, "a=" + std::to_string(a) + " d=" + std::to_string(d) +
                                                             " t=" + std::to_string(t));
                    tally.fp << a << ',' << d << ',' << t << ':' << measured << ';';
                }
            }
        }
        c.expected = "measured coker = formula (exponent t+1)";
        c.computed = tally.summary();
        c.pass = tally.bad == 0 && tally.cases > 0;
        c.fingerprint = tally.fp.str();
        return c;
    }

    CheckResult macaulay_duality() {
        auto c = make_check(5, "Macaulay duality");
        Tally tally;
        for (int a = 2; a <= std::min(4, opt_.a_max); ++a) {
            for (int b = a; b <= 4; ++b) {
                const auto grid = grid_(a, b);
                for (int d = 1; d <= 6; ++d) {
                    for (int t = d; t <= d + 3; ++t) {
                        const auto r = macaulay_dual_check(field_, grid, d, t);
                        tally.record(r.equal(), std::to_string(a) + "x" + std::to_string(b) + " d=" +
                                                    std::to_string(d) + " t=" + std::to_string(t));
                        tally.fp << r.lhs << '/' << r.rhs << ';';
                    }
                }
            }
        }
        c.expected = "dim[R/Lambda]_t = dim[I_X^(t-d+1)]_t";
        c.computed = tally.summary();
        c.pass = tally.bad == 0 && tally.cases > 0;
        c.fingerprint = tally.fp.str();
        return c;
    }

    CheckResult independent_conditions() {
        auto c = make_check(6, "Independent conditions");
        Tally tally;
        for (int a = 2; a <= std::min(4, opt_.a_max); ++a) {
            for (int b = a; b <= 4; ++b) {
                const auto grid = grid_(a, b);
                for (int d = 1; d <= 3; ++d) {
                    const int t = b * d - 1;
                    const long long hx = dim_r(t) - fat_points_dim(field_, grid_fat_points(grid, d), t);
                    const long long hz =
                        static_cast<long long>(basis_size(GradingSpec::bigraded(), Degree{t, t})) -
                        bigraded_fat_points_dim(field_, grid_bigraded_fat_points(grid, d), Degree{t, t});
                    const std::string label =
                        std::to_string(a) + "x" + std::to_string(b) + " d=" + std::to_string(d);
                    tally.record(hx == a * b * ext_binom(d + 2, 3), label + " (P3)");
                    tally.record(hz == a * b * ext_binom(d + 1, 2), label + " (P1xP1)");
                    tally.fp << hx << '/' << hz << ';';
                }
            }
        }
        c.expected = "h_X(d)(bd-1) = ab C(d+2,3), h_Z(d)(bd-1,bd-1) = ab C(d+1,2)";
        c.computed = tally.summary();
        c.pass = tally.bad == 0 && tally.cases > 0;
        c.fingerprint = tally.fp.str();
        return c;
    }

    CheckResult no_syzygy_window() {
        auto c = make_check(7, "No-syzygy window and socle");
        const auto grid = grid_(3, 3);
        const auto q = powers_quotient(field_, grid, 4);
        const long long i4 = q->ideal_dim(4);
        const long long i5 = q->ideal_dim(5);
        const auto socle = socle_dims(*q, 0, 4);
        const bool socle_zero = std::all_of(socle.begin(), socle.end(), [](long long s) { return s == 0; });
        std::ostringstream s;
        s << "I_4=" << i4 << " I_5=" << i5 << " socle(0..4)=";
        for (auto x : socle) s << x << ',';
        c.expected = "I_4=9 I_5=36 socle(0..4)=0";
        c.computed = s.str();
        c.fingerprint = s.str();
        c.pass = i4 == 9 * ext_binom(3, 3) && i5 == 9 * ext_binom(4, 3) && socle_zero;
        return c;
    }

    CheckResult non_lefschetz_probes() {
        auto c = make_check(8, "Non-Lefschetz probes, a=3");
        const auto grid = grid_(3, 3);
        Tally tally;
        std::vector<Locus> all{Locus::generic()};
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) all.push_back(Locus::plane(i, j));
            all.push_back(Locus::lambda(i));
            all.push_back(Locus::mu(i));
        }
        const std::vector<Locus> chords{Locus::chord(0, 1, 1, 0), Locus::chord(0, 0, 1, 1), Locus::chord(0, 0, 2, 2),
                                        Locus::chord(1, 2, 2, 0)};
        all.insert(all.end(), chords.begin(), chords.end());
        auto probe = [&](int d, const Locus& l) {
            auto r = non_lefschetz_probe(field_, grid, d, l, opt_.trials, seed_);
            tally.fp << d << ' ' << r.locus << ':' << join_ints(r.failing) << ';';
            return r;
        };
        for (int d = 1; d <= 2; ++d) {
            for (const auto& l : all) {
                const auto r = probe(d, l);
                const bool maximal = std::all_of(r.degrees.begin(), r.degrees.end(),
                                                 [](const ProbeDegree& p) { return p.special.maximal; });
                tally.record(maximal, "d=" + std::to_string(d) + " " + l.to_string());
            }
        }
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                const auto r = probe(4, Locus::plane(i, j));
                tally.record(!r.in_locus(), "d=4 " + r.locus);
            }
        }
        // The chord value 9 is checked separately: the failure of surjectivity
        // is the claim, the number is compared against the plane oracle.
        int chord_nine = 0;
        std::vector<long long> chord_cokers;
        for (std::size_t k = 0; k < chords.size(); ++k) {
            const auto r = probe(4, chords[k]);
            const auto at5 = std::find_if(r.degrees.begin(), r.degrees.end(), [](const auto& p) { return p.t == 5; });
            if (at5 == r.degrees.end()) {
                tally.record(false, "d=4 " + r.locus + " has no degree 5");
                continue;
            }
            const long long coker = at5->special.coker;
            chord_cokers.push_back(coker);
            RandomStream rng(seed_, "oracle", k);
            const auto center = sample_form(field_, grid, chords[k], rng);
            const auto image = project_from_point(field_, grid, center);
            FatPointsSpec<F> doubled{{}, 2};
            for (const auto& p : image.points) doubled.points.emplace_back(p.begin(), p.end());
            const long long oracle = fat_points_dim(field_, doubled, 5);
            tally.record(at5->generic_rank == at5->special.dim_to && coker > 0 && coker == oracle,
                         "d=4 " + r.locus + " coker " + std::to_string(coker) + " vs plane oracle " +
                             std::to_string(oracle));
            if (coker == 9) ++chord_nine;
        }
        for (int i = 0; i < 3; ++i) {
            tally.record(probe(4, Locus::lambda(i)).in_locus(), "d=4 lambda");
            tally.record(probe(4, Locus::mu(i)).in_locus(), "d=4 mu");
        }
        const auto r6 = probe(6, Locus::plane(0, 0));
        tally.record(std::count(r6.failing.begin(), r6.failing.end(), 8) == 1, "d=6 plane:1,1 at t=8");
        c.expected = "d<=2 all maximal; d=4 planes ok, chords coker 9 at t=5, rulings fail; d=6 plane fails at t=8";
        c.computed = tally.summary() + "; chord cokers at t=5 " + join_ll(chord_cokers);
        c.fingerprint = tally.fp.str();
        const bool nine = chord_nine == static_cast<int>(chords.size());
        c.pass = tally.bad == 0 && nine;
        if (tally.bad == 0 && !nine) {
            c.known_deviation = true;
            c.note = "Surjectivity fails at t=5 for every chord, but the cokernel is dim[I_Y^2]_5 for the 8 "
                     "distinct projected points Y, not 9. The 9 = 3*3 counts [I_W^2]_5 for a 2x2 complete "
                     "intersection W, which is not the image of the projection when a=3.";
        }
        return c;
    }

    CheckResult ci_powers() {
        auto c = make_check(9, "CI powers");
        Tally tally;
        for (auto [a, b] : {std::pair{3, 3}, std::pair{3, 4}}) {
            if (a > opt_.a_max) continue;
            const auto grid = grid_(a, b);
            RandomStream rng(seed_, "center", static_cast<std::uint64_t>(a * 16 + b));
            const auto center = sample_form(field_, grid, Locus::generic(), rng);
            const auto proj = projection_from(field_, center);
            // The images of the ruling lines are a lines and b lines whose
            // products cut out the projected grid.
            auto image = [&](const Point4<F>& p) {
                Point3<F> out;
                for (int r = 0; r < 3; ++r) out[r] = pairing<F>(field_, proj.forms[r], p);
                return out;
            };
            auto line_through = [&](const Point4<F>& p, const Point4<F>& q) {
                const auto x = image(p);
                const auto y = image(q);
                std::array<typename F::Element, 3> l;
                for (int k = 0; k < 3; ++k) {
                    const int i = (k + 1) % 3, j = (k + 2) % 3;
                    l[k] = field_.sub(field_.mul(x[i], y[j]), field_.mul(x[j], y[i]));
                }
                return linear_form(field_, std::span<const typename F::Element>(l));
            };
            auto f = poly_from_terms(field_, GradingSpec::total(3), Degree{0}, {{Monomial{}, 1}});
            auto g = f;
            for (int i = 0; i < grid.a(); ++i) {
                const auto [p, q] = grid.lambda(i);
                f = poly_mul(field_, f, line_through(p, q));
            }
            for (int j = 0; j < grid.b(); ++j) {
                const auto [p, q] = grid.mu(j);
                g = poly_mul(field_, g, line_through(p, q));
            }
            for (int m = 1; m <= 3; ++m) {
                for (int t = 0; t <= 12; ++t) {
                    const auto dim = static_cast<long long>(ci_power_piece(field_, f, g, m, t).dim());
                    const auto formula = ci_power_dim_formula(grid.a(), grid.b(), m, t);
                    tally.record(dim == formula, "(" + std::to_string(a) + "," + std::to_string(b) +
                                                     ") m=" + std::to_string(m) + " t=" + std::to_string(t));
                    tally.fp << dim << ';';
                }
            }
        }
        c.expected = "dim[(f,g)^m]_t = resolution formula";
        c.computed = tally.summary();
        c.pass = tally.bad == 0 && tally.cases > 0;
        c.fingerprint = tally.fp.str();
        return c;
    }

    CheckResult recursion_identity() {
        auto c = make_check(10, "Recursion identity");
        Tally paper;
        Tally corrected;
        for (int a = 2; a <= std::min(3, opt_.a_max); ++a) {
            for (int b = a; b <= 6; ++b) {
                const auto grid = grid_(a, b);
                for (int alpha = 1; alpha <= 3; ++alpha) {
                    for (int t = 0; t <= 8; ++t) {
                        const auto piece = fat_points_piece(field_, grid_fat_points(grid, alpha), t);
                        const auto lhs = static_cast<long long>(piece.dim());
                        const long long below =
                            alpha == 1 ? dim_r(t - 2) : fat_points_dim(field_, grid_fat_points(grid, alpha - 1), t - 2);
                        const long long z =
                            bigraded_fat_points_dim(field_, grid_bigraded_fat_points(grid, alpha), Degree{t, t});
                        const long long image = restriction_image_dim(field_, piece);
                        const std::string label = std::to_string(a) + "x" + std::to_string(b) + " alpha=" +
                                                  std::to_string(alpha) + " t=" + std::to_string(t) + ": " +
                                                  std::to_string(lhs) + " vs " + std::to_string(below) + "+" +
                                                  std::to_string(z);
                        paper.record(lhs == below + z, label);
                        corrected.record(lhs == below + image && image <= z, label);
                        paper.fp << lhs << ',' << below << ',' << z << ',' << image << ';';
                    }
                }
            }
        }
        c.expected = "dim[I_X^(a)]_t = dim[I_X^(a-1)]_(t-2) + dim[I_Z^(a)]_(t,t)";
        c.computed = paper.summary();
        c.pass = paper.bad == 0 && paper.cases > 0;
        c.fingerprint = paper.fp.str();
        if (!c.pass && corrected.bad == 0) {
            c.known_deviation = true;
            c.note = "Only the left half of the sequence 0 -> I_X^(a-1)(-2) -> I_X^(a) -> I_Z^(a) is exact on "
                     "global sections. In every case lhs = dim[I_X^(a-1)]_(t-2) + dim(restriction image), "
                     "and the " + std::to_string(paper.bad) + " failures are exactly where the restriction "
                     "to the quadric is not onto [I_Z^(a)]_(t,t).";
        }
        return c;
    }

    const F& field_;
    GridSource<F> grid_;
    const SuiteOptions& opt_;
    RandomSeed seed_;
};

template <class F>
GridSource<F> random_grids(const F& field, RandomSeed seed) {
    return [field, seed](int a, int b) { return seeded_grid(field, a, b, seed); };
}

template <class F>
GridSource<F> reference_grids(const F& field) {
    return [field](int a, int b) { return make_grid(field, reference_u(a), reference_v(b)); };
}

template <class F>
std::vector<CheckResult> run_criteria(const F& field, GridSource<F> grids, const SuiteOptions& opt, RandomSeed seed,
                                      const std::function<void(const CheckResult&)>& report) {
    return Criteria<F>(field, std::move(grids), opt, seed).run(report);
}

// Index of the first check whose outcome or computed numbers differ.
int first_difference(const std::vector<CheckResult>& x, const std::vector<CheckResult>& y) {
    if (x.size() != y.size()) return 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].pass != y[i].pass || x[i].fingerprint != y[i].fingerprint) return x[i].id;
    }
    return -1;
}

}  // namespace

std::vector<std::int64_t> reference_u(int a) {
    static const std::vector<std::int64_t> u{2, 5, 11, 17, 31};
    if (a < 1 || a > static_cast<int>(u.size())) throw std::invalid_argument("no reference grid of that size");
    return {u.begin(), u.begin() + a};
}

std::vector<std::int64_t> reference_v(int b) {
    static const std::vector<std::int64_t> v{3, 7, 13, 19, 23, 29};
    if (b < 1 || b > static_cast<int>(v.size())) throw std::invalid_argument("no reference grid of that size");
    return {v.begin(), v.begin() + b};
}

bool SuiteResult::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

bool SuiteResult::acceptable() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass || c.known_deviation; });
}

SuiteResult run_acceptance_suite(const SuiteOptions& opt) {
    const auto start = Clock::now();
    SuiteResult result;
    const PrimeField prime(opt.prime);
    const RationalField rational;
    auto main_run = [&](RandomSeed seed, const std::function<void(const CheckResult&)>& report) {
        if (opt.rational) return run_criteria(rational, random_grids(rational, seed), opt, seed, report);
        return run_criteria(prime, random_grids(prime, seed), opt, seed, report);
    };
    result.checks = main_run(opt.seed, opt.on_check);

    if (opt.cross_checks) {
        const auto c11_start = Clock::now();
        auto c = make_check(11, "Determinism and mode agreement");
        const auto again = main_run(opt.second_seed, nullptr);
        const int seed_diff = first_difference(result.checks, again);

        SuiteOptions small = opt;
        small.a_max = 3;
        const auto in_prime = run_criteria(prime, reference_grids(prime), small, opt.seed, nullptr);
        const auto in_rational = run_criteria(rational, reference_grids(rational), small, opt.seed, nullptr);
        const int mode_diff = first_difference(in_prime, in_rational);

        c.expected = "same outcomes and numbers for two seeds; same numbers in QQ and F_p for a=3";
        c.computed = std::string(seed_diff < 0 ? "seeds agree" : "seeds differ at check " + std::to_string(seed_diff)) +
                     "; " +
                     (mode_diff < 0 ? "QQ and F_p agree" : "QQ and F_p differ at check " + std::to_string(mode_diff));
        c.pass = seed_diff < 0 && mode_diff < 0;
        for (const auto& r : in_prime) c.fingerprint += r.fingerprint;
        c.seconds = std::chrono::duration<double>(Clock::now() - c11_start).count();
        if (opt.on_check) opt.on_check(c);
        result.checks.push_back(std::move(c));
    }
    result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return result;
}

}  // namespace gridwlp
