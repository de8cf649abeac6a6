#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gridwlp/geometry.hpp"
#include "gridwlp/subspace.hpp"

namespace gridwlp {

/// Fat points in P^{n-1}: each point has n coordinates, all with multiplicity m.
template <class F>
struct FatPointsSpec {
    std::vector<std::vector<typename F::Element>> points;
    int m = 1;
};

/// Fat points in P1 x P1 given by affine parameters ((1:x), (1:y)).
template <class F>
struct BigradedFatPointsSpec {
    std::vector<std::pair<typename F::Element, typename F::Element>> points;
    int m = 1;
};

template <class F>
FatPointsSpec<F> grid_fat_points(const GridConfig<F>& grid, int m);

template <class F>
BigradedFatPointsSpec<F> grid_bigraded_fat_points(const GridConfig<F>& grid, int m);

/// [I^{(m)}]_t: forms of degree t vanishing to order >= m at every point.
template <class F>
SubspaceBasis<F> fat_points_piece(const F& field, const FatPointsSpec<F>& spec, int t);

template <class F>
long long fat_points_dim(const F& field, const FatPointsSpec<F>& spec, int t);

template <class F>
SubspaceBasis<F> bigraded_fat_points_piece(const F& field, const BigradedFatPointsSpec<F>& spec, Degree deg);

template <class F>
long long bigraded_fat_points_dim(const F& field, const BigradedFatPointsSpec<F>& spec, Degree deg);

/// Span of { m * ell^d : deg m = t - d } in R_t, one ell per coefficient vector.
template <class F>
SubspaceBasis<F> powers_ideal_piece(const F& field, std::span<const Point4<F>> forms, int d, int t);

/// Same for the forms dual to the grid points.
template <class F>
SubspaceBasis<F> powers_ideal_piece(const F& field, const GridConfig<F>& grid, int d, int t);

/// [(f, g)^m]_t for forms f, g in three variables. Throws std::invalid_argument
/// when (f, g) fails the Koszul dimension count, i.e. is not a regular sequence.
template <class F>
SubspaceBasis<F> ci_power_piece(const F& field, const PolyVector<F>& f, const PolyVector<F>& g, int m, int t);

/// dim [(f,g)^m]_t for a complete intersection of type (a, b) in P2, read off
/// the resolution 0 -> F (x) Sym^{m-1} G -> Sym^m G.
long long ci_power_dim_formula(int a, int b, int m, int t);

/// [F^perp]_s: operators of degree s annihilating F. Everything for s > deg F.
template <class F>
SubspaceBasis<F> perp_piece(const F& field, const PolyVector<F>& f, int s);

/// f(x0 y0, x0 y1, x1 y0, x1 y1): a degree-t form restricted to the quadric
/// through the Segre map, as a form of bidegree (t, t).
template <class F>
PolyVector<F> restrict_to_quadric(const F& field, const PolyVector<F>& f);

/// Dimension of the image of a subspace of R_t in bidegree (t, t).
template <class F>
long long restriction_image_dim(const F& field, const SubspaceBasis<F>& piece);

/// An artinian quotient R/I in four variables with a lazily filled cache of
/// ideal pieces. Safe to share between threads.
template <class F>
class GradedQuotient {
public:
    using PieceFn = std::function<SubspaceBasis<F>(int)>;

    GradedQuotient(F field, PieceFn piece, int degree_cap, std::string label);

    const F& field() const { return field_; }
    /// Every degree above this one is zero.
    int degree_cap() const { return degree_cap_; }
    const std::string& label() const { return label_; }

    const SubspaceBasis<F>& ideal(int t) const;
    long long ideal_dim(int t) const;
    /// dim A_t; zero for t < 0 and t > degree_cap().
    long long dim(int t) const;

private:
    F field_;
    PieceFn piece_;
    int degree_cap_;
    std::string label_;
    mutable std::mutex mutex_;
    mutable std::map<int, std::shared_ptr<const SubspaceBasis<F>>> cache_;
};

/// R / Lambda_{X,d}. The cap 4(d-1) comes from the four independent d-th powers
/// inside the ideal.
template <class F>
std::shared_ptr<GradedQuotient<F>> powers_quotient(const F& field, const GridConfig<F>& grid, int d);

template <class F>
std::shared_ptr<GradedQuotient<F>> powers_quotient(const F& field, std::vector<Point4<F>> forms, int d);

/// R / F^perp, a Gorenstein algebra with socle degree deg F.
template <class F>
std::shared_ptr<GradedQuotient<F>> perp_quotient(const F& field, PolyVector<F> f);

/// Dimensions of A_t (quotient) or I_t over consecutive degrees from `first`.
struct HilbertTable {
    bool quotient = true;
    int first = 0;
    std::vector<long long> dims;

    int last() const { return first + static_cast<int>(dims.size()) - 1; }
    long long at(int t) const;
    /// h(t) - h(t-1), with h = 0 before `first` when first == 0.
    long long delta(int t) const;
    std::string to_csv() const;
};

/// Hilbert function of the quotient from degree 0 through the first degree with
/// A_t = 0 (or the cap).
template <class F>
HilbertTable hilbert_table(const GradedQuotient<F>& q);

/// Dimensions of [I_X^{(m)}]_t for t in [first, last].
template <class F>
HilbertTable hilbert_table(const F& field, const FatPointsSpec<F>& spec, int first, int last);

/// dim of {a in A_t : x_i a = 0 for all i}, for t in [first, last].
template <class F>
std::vector<long long> socle_dims(const GradedQuotient<F>& q, int first, int last);

struct DualityCheck {
    long long lhs = 0;
    long long rhs = 0;
    bool equal() const { return lhs == rhs; }
};

/// dim [R/Lambda_{X,d}]_t against dim [I_X^{(t-d+1)}]_t. Requires t >= d.
template <class F>
DualityCheck macaulay_dual_check(const F& field, const GridConfig<F>& grid, int d, int t);

}  // namespace gridwlp
