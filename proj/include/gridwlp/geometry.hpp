#pragma once

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gridwlp/poly.hpp"
#include "gridwlp/random.hpp"

namespace gridwlp {

template <class F>
using Point4 = std::array<typename F::Element, 4>;

template <class F>
using Point3 = std::array<typename F::Element, 3>;

class GeometryError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An a x b grid on the quadric Q = x1*x4 - x2*x3.
///
/// Rows are indexed by the first-ruling parameter u_i, columns by v_j, and the
/// point P_ij = (1, v_j, u_i, u_i*v_j) is the Segre image of ((1:u_i),(1:v_j)).
/// The linear form dual to P_ij has the same coefficient vector. Indices are
/// 0-based here; the CLI and the locus syntax use 1-based indices.
template <class F>
class GridConfig {
public:
    using Element = typename F::Element;

    /// Normalises to a <= b by swapping the rulings.
    GridConfig(const F& field, std::vector<Element> u, std::vector<Element> v);

    int a() const { return static_cast<int>(u_.size()); }
    int b() const { return static_cast<int>(v_.size()); }
    const std::vector<Element>& u() const { return u_; }
    const std::vector<Element>& v() const { return v_; }

    const Point4<F>& point(int i, int j) const { return points_[static_cast<std::size_t>(i * b() + j)]; }
    /// All points, row-major in (i, j).
    const std::vector<Point4<F>>& points() const { return points_; }

    /// Tangent plane to Q at P_ij: u_i v_j x1 - u_i x2 - v_j x3 + x4. It is the
    /// span of the ruling lines through P_ij.
    const Point4<F>& tangent_plane(int i, int j) const { return planes_[static_cast<std::size_t>(i * b() + j)]; }

    const PolyVector<F>& quadric() const { return quadric_; }

    /// Two grid points spanning the ruling line with u = u_i (resp. v = v_j).
    std::pair<Point4<F>, Point4<F>> lambda(int i) const { return {point(i, 0), point(i, 1)}; }
    std::pair<Point4<F>, Point4<F>> mu(int j) const { return {point(0, j), point(1, j)}; }

    /// The bi-projective parameters of the grid in P1 x P1.
    std::vector<std::pair<Element, Element>> segre_parameters() const;

private:
    std::vector<Element> u_;
    std::vector<Element> v_;
    std::vector<Point4<F>> points_;
    std::vector<Point4<F>> planes_;
    PolyVector<F> quadric_;
};

/// Grid with distinct random parameters drawn from the field.
template <class F>
GridConfig<F> make_grid(const F& field, int a, int b, RandomStream& rng);

/// The random a x b grid of a run: drawn from the "grid" substream of `seed`
/// indexed by the shape, so grids of different shapes are independent.
template <class F>
GridConfig<F> seeded_grid(const F& field, int a, int b, RandomSeed seed);

/// Grid from explicit integer parameters. In prime mode p must exceed
/// 2 * max|param|^4 so that distinct integer grids stay distinct mod p.
template <class F>
GridConfig<F> make_grid(const F& field, const std::vector<std::int64_t>& u, const std::vector<std::int64_t>& v);

/// Where a special linear form is sampled from.
struct Locus {
    enum class Kind { Generic, Plane, Lambda, Mu, Chord };
    Kind kind = Kind::Generic;
    // 0-based; Plane uses (i, j), Lambda i, Mu j, Chord (i, j) -- (k, l).
    int i = 0, j = 0, k = 0, l = 0;

    static Locus generic() { return {}; }
    static Locus plane(int i, int j) { return {Kind::Plane, i, j}; }
    static Locus lambda(int i) { return {Kind::Lambda, i}; }
    static Locus mu(int j) { return {Kind::Mu, 0, j}; }
    static Locus chord(int i, int j, int k, int l) { return {Kind::Chord, i, j, k, l}; }

    /// Parses "generic", "plane:1,1", "lambda:1", "mu:2", "chord:1,2,2,1" (1-based).
    static Locus parse(const std::string& text);
    std::string to_string() const;
};

/// Coefficients of a linear form dual to a random point of `locus`.
template <class F>
Point4<F> sample_form(const F& field, const GridConfig<F>& grid, const Locus& locus, RandomStream& rng);

template <class F>
typename F::Element pairing(const F& field, std::span<const typename F::Element> form,
                         std::span<const typename F::Element> point);

/// True iff the points are projectively equal (all 2x2 minors vanish).
template <class F>
bool proportional(const F& field, std::span<const typename F::Element> p, std::span<const typename F::Element> q);

/// True iff p lies on the line through a and b.
template <class F>
bool on_line(const F& field, const Point4<F>& p, const Point4<F>& a, const Point4<F>& b);

/// Three independent linear forms vanishing at the centre: a projection
/// P3 --> P2 from the centre onto the plane they coordinatise.
template <class F>
struct Projection {
    Point4<F> center;
    std::array<Point4<F>, 3> forms;
};

template <class F>
Projection<F> projection_from(const F& field, const Point4<F>& center);

/// Change of coordinates on the target plane: forms' = M * forms, M invertible.
template <class F>
Projection<F> reparametrize(const F& field, const Projection<F>& proj,
                            const std::array<std::array<typename F::Element, 3>, 3>& m);

template <class F>
struct PlanePointSet {
    std::vector<Point3<F>> points;          // distinct images
    std::vector<std::size_t> image_of;      // source index -> position in points
    std::vector<std::pair<std::size_t, std::size_t>> collisions;  // source pairs with equal image
};

template <class F>
PlanePointSet<F> project_points(const F& field, std::span<const Point4<F>> points, const Projection<F>& proj);

/// Projects the grid from `center`; throws if the centre is a grid point.
template <class F>
PlanePointSet<F> project_from_point(const F& field, const GridConfig<F>& grid, const Point4<F>& center);

template <class F>
PlanePointSet<F> project_from_point(const F& field, const GridConfig<F>& grid, const Projection<F>& proj);

/// Hilbert function of the reduced plane point set in degree t.
template <class F>
long long plane_points_hilbert(const F& field, const PlanePointSet<F>& pts, int t);

/// Whether the reduced point set is a complete intersection of type (a, b):
/// ab points, the Hilbert function of one in every degree t <= a + b - 2, and
/// forms of degrees a and b in its ideal that meet properly.
template <class F>
bool is_ci_hilbert(const F& field, const PlanePointSet<F>& pts, int a, int b);

}  // namespace gridwlp
