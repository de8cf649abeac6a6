#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gridwlp/matrix.hpp"
#include "gridwlp/monomial.hpp"

namespace gridwlp {

class GradingMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A homogeneous polynomial as coefficients over the ordered monomial basis of
/// its graded piece.
template <class F>
struct PolyVector {
    using Element = typename F::Element;

    GradingSpec grading;
    Degree degree;
    std::vector<Element> coeffs;
};

template <class F>
PolyVector<F> zero_poly(const F& field, GradingSpec spec, Degree deg) {
    return {spec, deg, std::vector<typename F::Element>(basis_size(spec, deg), field.zero())};
}

/// Builds a polynomial from (monomial, integer coefficient) terms.
template <class F>
PolyVector<F> poly_from_terms(const F& field, GradingSpec spec, Degree deg,
                              const std::vector<std::pair<Monomial, std::int64_t>>& terms);

template <class F>
bool is_zero_poly(const F& field, const PolyVector<F>& f);

template <class F>
bool poly_equal(const F& field, const PolyVector<F>& f, const PolyVector<F>& g);

template <class F>
PolyVector<F> poly_add(const F& field, const PolyVector<F>& f, const PolyVector<F>& g);

template <class F>
PolyVector<F> poly_scale(const F& field, const PolyVector<F>& f, const typename F::Element& c);

template <class F>
PolyVector<F> poly_mul(const F& field, const PolyVector<F>& f, const PolyVector<F>& g);

/// The linear form sum coeffs[i] * x_{i+1} in coeffs.size() variables.
template <class F>
PolyVector<F> linear_form(const F& field, std::span<const typename F::Element> coeffs);

/// Multinomial expansion of ell^d, ell given by its coefficients.
template <class F>
PolyVector<F> linear_power(const F& field, std::span<const typename F::Element> ell, int d);

/// G applied to F as a constant-coefficient differential operator (each
/// variable of G acts as the matching partial derivative). Degree deg F - deg G.
template <class F>
PolyVector<F> diff_action(const F& field, const PolyVector<F>& f, const PolyVector<F>& g);

template <class F>
typename F::Element evaluate(const F& field, const PolyVector<F>& f,
                             std::span<const typename F::Element> point);

/// Rows of functionals on the degree-t piece: row beta maps a form G to
/// (d^beta G)(point), for every |beta| = order in graded-basis order.
/// Standard grading only; point has nvars coordinates.
template <class F>
DenseMatrix<F> partial_functionals(const F& field, GradingSpec spec, int t,
                                   std::span<const typename F::Element> point, int order);

/// Rows of functionals on the bidegree-(u,v) piece of k[x0,x1,y0,y1]: in the
/// affine chart x0 = y0 = 1 with x = x1, y = y1, row (i,j) maps G to
/// (d_x^i d_y^j G)(x, y) for all i + j < m.
template <class F>
DenseMatrix<F> bigraded_partial_functionals(const F& field, Degree deg, const typename F::Element& x,
                                            const typename F::Element& y, int m);

/// Values at `point` of the partial derivatives of F of order exactly m - 1
/// (clamped to deg F). For homogeneous F these all vanish iff F vanishes to
/// order >= m at the point (Euler's relation), giving C(m+2,3) conditions in
/// four variables and C(m+1,2) in three.
template <class F>
std::vector<typename F::Element> partials_at_point(const F& field, const PolyVector<F>& f,
                                                   std::span<const typename F::Element> point, int m);

/// Bigraded analogue: all d_x^i d_y^j with i + j < m in the affine chart.
template <class F>
std::vector<typename F::Element> bigraded_partials_at_point(const F& field, const PolyVector<F>& f,
                                                            const typename F::Element& x,
                                                            const typename F::Element& y, int m);

/// The contraction matrix of F: row k is d(F)/d(M_k) for the k-th monomial M_k
/// of degree s, expressed over the degree (deg F - s) basis.
template <class F>
DenseMatrix<F> derivation_matrix(const F& field, const PolyVector<F>& f, int s);

}  // namespace gridwlp
