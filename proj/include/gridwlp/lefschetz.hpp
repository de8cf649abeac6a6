#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gridwlp/geometry.hpp"
#include "gridwlp/ideals.hpp"
#include "gridwlp/random.hpp"

namespace gridwlp {

/// Multiplication by ell^k from A_{t-k} to A_t.
struct MultMapReport {
    int t = 0;
    int power = 1;
    long long dim_from = 0;
    long long dim_to = 0;
    long long rank = 0;
    long long kernel = 0;
    long long coker = 0;
    bool maximal = false;

    long long expected_coker() const { return dim_to > dim_from ? dim_to - dim_from : 0; }
    long long expected_kernel() const { return dim_from > dim_to ? dim_from - dim_to : 0; }
    bool injective() const { return kernel == 0; }
    bool surjective() const { return coker == 0; }

    /// Builds a report from the dimensions and the rank.
    static MultMapReport from_rank(int t, int power, long long dim_from, long long dim_to, long long rank);
    /// Throws std::logic_error unless rank = dimFrom - ker = dimTo - coker and
    /// maximal matches both expectations.
    void check_identities() const;
};

/// Description of the grid that produced a report.
struct GridSummary {
    int a = 0;
    int b = 0;
    std::vector<std::string> u;
    std::vector<std::string> v;
};

template <class F>
GridSummary summarize(const F& field, const GridConfig<F>& grid);

struct WlpReport {
    GridSummary grid;
    int d = 0;
    int power = 1;
    std::uint64_t prime = 0;  // 0 in rational mode
    int trials = 0;
    std::vector<MultMapReport> degrees;
    bool verdict = true;
    std::vector<int> failing;
};

/// The map A_{t-k} -> A_t by ell^k, computed in the standard-monomial
/// coordinates of the quotient.
template <class F>
MultMapReport mult_map_report(const GradedQuotient<F>& q, const Point4<F>& ell, int t, int k = 1);

/// A_{t-1} -> A_t for R/Lambda_{X,d}, with the cokernel read off the union
/// [Lambda]_t + ell R_{t-1} inside R_t. Independent of mult_map_report.
template <class F>
MultMapReport mult_map_analysis(const F& field, const GridConfig<F>& grid, int d, const Point4<F>& ell, int t);

/// A general form for trial `trial`: its own named substream of `seed`.
template <class F>
Point4<F> generic_form(const F& field, RandomSeed seed, int trial);

/// Sweeps t = k, k+1, ... until A_t = 0, keeping the best rank over `trials`
/// general forms in every degree.
template <class F>
WlpReport wlp_test(const F& field, const GridConfig<F>& grid, int d, int trials, RandomSeed seed, int k = 1);

/// Same sweep for an arbitrary quotient.
template <class F>
WlpReport wlp_test(const GradedQuotient<F>& q, int trials, RandomSeed seed, int k = 1);

/// True iff every degree after the first surjective one above d is surjective.
bool surjective_degrees_form_upset(const WlpReport& report);

/// True iff the injective degrees before the first failure form a down-set.
bool injective_degrees_form_downset(const WlpReport& report);

struct ProbeDegree {
    int t = 0;
    long long generic_rank = 0;
    MultMapReport special;
    bool critical = false;
    bool keeps_generic_rank() const { return special.rank == generic_rank; }
};

struct ProbeReport {
    GridSummary grid;
    int d = 0;
    std::string locus;
    std::uint64_t prime = 0;
    int trials = 0;
    std::vector<ProbeDegree> degrees;
    std::vector<int> failing;  // degrees where the special form loses rank
    bool in_locus() const { return !failing.empty(); }
};

/// Tests forms from `locus` against general forms in every degree. Only
/// defined when R/Lambda_{X,d} has the WLP for square grids (d <= a-1 or
/// (a-1) | d); degrees aq-2 and aq-1 are flagged critical.
template <class F>
ProbeReport non_lefschetz_probe(const F& field, const GridConfig<F>& grid, int d, const Locus& locus, int trials,
                                RandomSeed seed);

/// wlp_test with ell^k, k >= 2.
template <class F>
WlpReport slp_probe(const F& field, const GridConfig<F>& grid, int d, int k, int trials, RandomSeed seed);

struct BxSequence {
    int a = 0;
    int b = 0;
    int d_max = 0;
    std::vector<int> bits;  // bits[d-1] = 1 iff Lambda_{X,d} has the WLP
    std::string to_string() const;
};

/// The grid is seeded_grid(field, a, b, seed).
template <class F>
BxSequence bx_sequence(const F& field, int a, int b, int d_max, int trials, RandomSeed seed);

}  // namespace gridwlp
