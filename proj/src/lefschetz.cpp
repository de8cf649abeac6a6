#include "gridwlp/lefschetz.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <thread>

#include "gridwlp/field.hpp"

namespace gridwlp {

namespace {

// fn(i) for i in [0, n), results in index order. Threads only help when the
// machine has more than one core; the work items share nothing mutable.
template <class Fn>
auto parallel_map(std::size_t n, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
    using R = decltype(fn(std::size_t{}));
    std::vector<R> out;
    out.reserve(n);
    if (std::thread::hardware_concurrency() <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) out.push_back(fn(i));
        return out;
    }
    std::vector<std::future<R>> jobs;
    jobs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) jobs.push_back(std::async(std::launch::async, fn, i));
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

template <class F>
std::vector<std::pair<Monomial, typename F::Element>> power_terms(const F& field, const Point4<F>& ell, int k) {
    const auto p = linear_power(field, std::span<const typename F::Element>(ell), k);
    const auto basis = graded_basis(p.grading, p.degree);
    std::vector<std::pair<Monomial, typename F::Element>> out;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!field.is_zero(p.coeffs[i])) out.emplace_back(basis[i], p.coeffs[i]);
    }
    return out;
}

template <class F>
bool is_zero_form(const F& field, const Point4<F>& ell) {
    return std::all_of(ell.begin(), ell.end(), [&](const auto& x) { return field.is_zero(x); });
}

template <class F>
std::uint64_t prime_of(const F& field) {
    if constexpr (F::is_rational) {
        return 0;
    } else {
        return field.modulus();
    }
}

}  // namespace

MultMapReport MultMapReport::from_rank(int t, int power, long long dim_from, long long dim_to, long long rank) {
    MultMapReport r;
    r.t = t;
    r.power = power;
    r.dim_from = dim_from;
    r.dim_to = dim_to;
    r.rank = rank;
    r.kernel = dim_from - rank;
    r.coker = dim_to - rank;
    r.maximal = rank == std::min(dim_from, dim_to);
    return r;
}

void MultMapReport::check_identities() const {
    const bool ok = rank == dim_from - kernel && rank == dim_to - coker && kernel >= 0 && coker >= 0 &&
                    maximal == (kernel == expected_kernel()) && maximal == (coker == expected_coker());
    if (!ok) throw std::logic_error("multiplication map report violates the rank identities at t=" + std::to_string(t));
}

template <class F>
GridSummary summarize(const F& field, const GridConfig<F>& grid) {
    GridSummary s{grid.a(), grid.b(), {}, {}};
    for (const auto& x : grid.u()) s.u.push_back(field.format(x));
    for (const auto& x : grid.v()) s.v.push_back(field.format(x));
    return s;
}

template <class F>
MultMapReport mult_map_report(const GradedQuotient<F>& q, const Point4<F>& ell, int t, int k) {
    const F& field = q.field();
    if (k < 1) throw std::invalid_argument("multiplication by ell^k needs k >= 1");
    if (is_zero_form(field, ell)) throw std::invalid_argument("multiplication by the zero form");
    const long long from = q.dim(t - k);
    const long long to = q.dim(t);
    if (from == 0 || to == 0) return MultMapReport::from_rank(t, k, from, to, 0);

    const GradingSpec spec = GradingSpec::total(4);
    const auto& src = q.ideal(t - k);
    const auto& dst = q.ideal(t);
    const auto basis = graded_basis(spec, Degree{t - k});
    const auto terms = power_terms(field, ell, k);
    DenseMatrix<F> m(field, 0, static_cast<std::size_t>(to));
    std::vector<std::pair<std::size_t, typename F::Element>> image;
    for (std::size_t col : src.free_columns()) {
        image.clear();
        for (const auto& [beta, c] : terms) {
            Monomial prod = basis[col];
            for (int v = 0; v < 4; ++v) prod.exp[v] += beta.exp[v];
            image.emplace_back(monomial_index(spec, Degree{t}, prod), c);
        }
        dst.accumulate_normal_form(field, image, m.append_row(field));
    }
    auto report = MultMapReport::from_rank(t, k, from, to, static_cast<long long>(rank(field, m)));
    report.check_identities();
    return report;
}

template <class F>
MultMapReport mult_map_analysis(const F& field, const GridConfig<F>& grid, int d, const Point4<F>& ell, int t) {
    if (t < 1) throw std::invalid_argument("mult_map_analysis needs t >= 1");
    if (is_zero_form(field, ell)) throw std::invalid_argument("multiplication by the zero form");
    const GradingSpec spec = GradingSpec::total(4);
    const auto dim_r = [](int e) { return static_cast<long long>(count_monomials(4, e)); };
    const auto lambda_t = powers_ideal_piece(field, grid, d, t);
    const long long from = dim_r(t - 1) - static_cast<long long>(powers_ideal_piece(field, grid, d, t - 1).dim());
    const long long to = dim_r(t) - static_cast<long long>(lambda_t.dim());

    // ell * R_{t-1} spelled out row by row.
    const auto basis = graded_basis(spec, Degree{t - 1});
    DenseMatrix<F> rows(field, basis.size(), static_cast<std::size_t>(dim_r(t)));
    for (std::size_t r = 0; r < basis.size(); ++r) {
        for (int v = 0; v < 4; ++v) {
            Monomial prod = basis[r];
            ++prod.exp[v];
            rows(r, monomial_index(spec, Degree{t}, prod)) = ell[v];
        }
    }
    const auto multiples = SubspaceBasis<F>::span_of(field, lambda_t.ambient(), std::move(rows));
    const long long coker = dim_r(t) - static_cast<long long>(union_dim(field, lambda_t, multiples));
    auto report = MultMapReport::from_rank(t, 1, from, to, to - coker);
    report.check_identities();
    return report;
}

template <class F>
Point4<F> generic_form(const F& field, RandomSeed seed, int trial) {
    RandomStream rng(seed, "form", static_cast<std::uint64_t>(trial));
    Point4<F> ell;
    for (auto& x : ell) x = field.random_nonzero(rng);
    return ell;
}

template <class F>
WlpReport wlp_test(const GradedQuotient<F>& q, int trials, RandomSeed seed, int k) {
    if (trials < 1) throw std::invalid_argument("wlp_test needs trials >= 1");
    const F& field = q.field();
    std::vector<Point4<F>> forms;
    for (int i = 0; i < trials; ++i) forms.push_back(generic_form(field, seed, i));

    std::vector<int> degrees;
    for (int t = k; q.dim(t) > 0; ++t) degrees.push_back(t);

    WlpReport report;
    report.power = k;
    report.prime = prime_of(field);
    report.trials = trials;
    report.degrees = parallel_map(degrees.size(), [&](std::size_t i) {
        MultMapReport best;
        for (int trial = 0; trial < trials; ++trial) {
            auto r = mult_map_report(q, forms[static_cast<std::size_t>(trial)], degrees[i], k);
            if (trial == 0 || r.rank > best.rank) best = r;
            if (best.maximal) break;
        }
        return best;
    });
    for (const auto& r : report.degrees) {
        if (!r.maximal) report.failing.push_back(r.t);
    }
    report.verdict = report.failing.empty();
    return report;
}

template <class F>
WlpReport wlp_test(const F& field, const GridConfig<F>& grid, int d, int trials, RandomSeed seed, int k) {
    const auto q = powers_quotient(field, grid, d);
    auto report = wlp_test(*q, trials, seed, k);
    report.grid = summarize(field, grid);
    report.d = d;
    return report;
}

bool surjective_degrees_form_upset(const WlpReport& report) {
    bool seen = false;
    for (const auto& r : report.degrees) {
        if (seen && !r.surjective()) return false;
        if (r.t > report.d && r.surjective()) seen = true;
    }
    return true;
}

bool injective_degrees_form_downset(const WlpReport& report) {
    bool failed = false;
    for (const auto& r : report.degrees) {
        if (failed && r.injective()) return false;
        if (!r.injective()) failed = true;
    }
    return true;
}

template <class F>
ProbeReport non_lefschetz_probe(const F& field, const GridConfig<F>& grid, int d, const Locus& locus, int trials,
                                RandomSeed seed) {
    const int a = grid.a();
    if (grid.a() != grid.b()) throw std::invalid_argument("non-Lefschetz probes are defined for square grids");
    if (!(d <= a - 1 || d % (a - 1) == 0)) {
        throw std::invalid_argument("non-Lefschetz probes need d <= a-1 or (a-1) | d");
    }
    if (trials < 1) throw std::invalid_argument("probe needs trials >= 1");
    const auto q = powers_quotient(field, grid, d);
    std::vector<Point4<F>> generic, special;
    for (int i = 0; i < trials; ++i) {
        generic.push_back(generic_form(field, seed, i));
        RandomStream rng(seed, "locus", static_cast<std::uint64_t>(i));
        special.push_back(sample_form(field, grid, locus, rng));
    }
    const int q_div = d % (a - 1) == 0 ? d / (a - 1) : -1;

    ProbeReport report;
    report.grid = summarize(field, grid);
    report.d = d;
    report.locus = locus.to_string();
    report.prime = prime_of(field);
    report.trials = trials;
    for (int t = 1; q->dim(t) > 0; ++t) {
        auto best_of = [&](const std::vector<Point4<F>>& forms) {
            MultMapReport best;
            for (std::size_t i = 0; i < forms.size(); ++i) {
                auto r = mult_map_report(*q, forms[i], t);
                if (i == 0 || r.rank > best.rank) best = r;
                if (best.maximal) break;
            }
            return best;
        };
        ProbeDegree pd;
        pd.t = t;
        pd.generic_rank = best_of(generic).rank;
        pd.special = best_of(special);
        pd.critical = q_div > 0 && (t == a * q_div - 2 || t == a * q_div - 1);
        if (!pd.keeps_generic_rank()) report.failing.push_back(t);
        report.degrees.push_back(pd);
    }
    return report;
}

template <class F>
WlpReport slp_probe(const F& field, const GridConfig<F>& grid, int d, int k, int trials, RandomSeed seed) {
    if (k < 1) throw std::invalid_argument("slp_probe needs k >= 1");
    return wlp_test(field, grid, d, trials, seed, k);
}

std::string BxSequence::to_string() const {
    std::string s;
    for (int bit : bits) s.push_back(bit ? '1' : '0');
    return s;
}

template <class F>
BxSequence bx_sequence(const F& field, int a, int b, int d_max, int trials, RandomSeed seed) {
    if (d_max < 1) throw std::invalid_argument("bx_sequence needs dmax >= 1");
    const auto grid = seeded_grid(field, a, b, seed);
    BxSequence out{grid.a(), grid.b(), d_max, {}};
    for (int d = 1; d <= d_max; ++d) out.bits.push_back(wlp_test(field, grid, d, trials, seed).verdict ? 1 : 0);
    return out;
}

#define GRIDWLP_INSTANTIATE(F)                                                                                  \
    template GridSummary summarize<F>(const F&, const GridConfig<F>&);                                          \
    template MultMapReport mult_map_report<F>(const GradedQuotient<F>&, const Point4<F>&, int, int);            \
    template MultMapReport mult_map_analysis<F>(const F&, const GridConfig<F>&, int, const Point4<F>&, int);    \
    template Point4<F> generic_form<F>(const F&, RandomSeed, int);                                              \
    template WlpReport wlp_test<F>(const GradedQuotient<F>&, int, RandomSeed, int);                             \
    template WlpReport wlp_test<F>(const F&, const GridConfig<F>&, int, int, RandomSeed, int);                  \
    template ProbeReport non_lefschetz_probe<F>(const F&, const GridConfig<F>&, int, const Locus&, int,         \
                                                RandomSeed);                                                    \
    template WlpReport slp_probe<F>(const F&, const GridConfig<F>&, int, int, int, RandomSeed);                 \
    template BxSequence bx_sequence<F>(const F&, int, int, int, int, RandomSeed);

GRIDWLP_INSTANTIATE(PrimeField)
GRIDWLP_INSTANTIATE(RationalField)

#undef GRIDWLP_INSTANTIATE

}  // namespace gridwlp
