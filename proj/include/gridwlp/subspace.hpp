#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gridwlp/matrix.hpp"
#include "gridwlp/monomial.hpp"
#include "gridwlp/poly.hpp"

namespace gridwlp {

/// A graded piece, identified by its grading and degree.
struct Ambient {
    GradingSpec grading;
    Degree degree;

    std::size_t dim() const { return basis_size(grading, degree); }
    friend bool operator==(const Ambient&, const Ambient&) = default;
};

class AmbientMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A subspace of a graded piece held in reduced row echelon form.
///
/// Columns without a pivot index the standard monomials: the quotient of the
/// ambient space by this subspace has them as a basis, and `normal_form`
/// expresses any vector in those coordinates.
template <class F>
class SubspaceBasis {
public:
    using Element = typename F::Element;

    SubspaceBasis() = default;

    /// Span of the rows of `rows` (consumed).
    static SubspaceBasis span_of(const F& field, Ambient ambient, DenseMatrix<F> rows);

    /// {v : conditions * v = 0}.
    static SubspaceBasis kernel_of(const F& field, Ambient ambient, const DenseMatrix<F>& conditions);

    static SubspaceBasis zero(const F& field, Ambient ambient);
    static SubspaceBasis whole(const F& field, Ambient ambient);

    const Ambient& ambient() const { return ambient_; }
    std::size_t dim() const { return pivots_.size(); }
    std::size_t codim() const { return free_.size(); }
    const DenseMatrix<F>& rref() const { return rref_; }
    const std::vector<std::size_t>& pivot_columns() const { return pivots_; }
    const std::vector<std::size_t>& free_columns() const { return free_; }

    /// Coordinates of v modulo the subspace on the free columns.
    std::vector<Element> normal_form(const F& field, std::span<const Element> v) const;

    /// Same for a sparse vector given as (column, value) terms; accumulates
    /// into `out` (length codim()).
    void accumulate_normal_form(const F& field, std::span<const std::pair<std::size_t, Element>> terms,
                                std::span<Element> out) const;

    bool contains(const F& field, std::span<const Element> v) const;

private:
    void index_columns(const F& field);

    Ambient ambient_{};
    DenseMatrix<F> rref_;
    std::vector<std::size_t> pivots_;
    std::vector<std::size_t> free_;
    // column -> pivot row (if pivot) or free position, tagged by is_pivot_
    std::vector<std::size_t> slot_;
    std::vector<bool> is_pivot_;
    // rref restricted to free columns, rank x codim
    DenseMatrix<F> reducer_;
};

/// Dimension of the linear span of same-degree polynomials.
template <class F>
std::size_t span_dim(const F& field, std::span<const PolyVector<F>> polys);

template <class F>
std::size_t union_dim(const F& field, const SubspaceBasis<F>& a, const SubspaceBasis<F>& b);

/// dim(A intersect B), computed independently of union_dim as the kernel of the
/// stacked system x*A - y*B = 0.
template <class F>
std::size_t intersection_dim(const F& field, const SubspaceBasis<F>& a, const SubspaceBasis<F>& b);

}  // namespace gridwlp
