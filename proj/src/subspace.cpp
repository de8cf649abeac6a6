#include "gridwlp/subspace.hpp"

#include "gridwlp/field.hpp"

namespace gridwlp {

template <class F>
void SubspaceBasis<F>::index_columns(const F& field) {
    const std::size_t n = ambient_.dim();
    slot_.assign(n, 0);
    is_pivot_.assign(n, false);
    free_.clear();
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        is_pivot_[pivots_[r]] = true;
        slot_[pivots_[r]] = r;
    }
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot_[c]) continue;
        slot_[c] = free_.size();
        free_.push_back(c);
    }
    reducer_ = DenseMatrix<F>(field, pivots_.size(), free_.size());
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        for (std::size_t k = 0; k < free_.size(); ++k) reducer_(r, k) = rref_(r, free_[k]);
    }
}

template <class F>
SubspaceBasis<F> SubspaceBasis<F>::span_of(const F& field, Ambient ambient, DenseMatrix<F> rows) {
    check_ambient(ambient.dim());
    if (rows.cols() != ambient.dim()) throw AmbientMismatch("span_of: row length differs from ambient dimension");
    SubspaceBasis out;
    out.ambient_ = ambient;
    const auto ech = row_reduce_incremental(field, rows);
    out.rref_ = std::move(rows);
    out.pivots_ = ech.pivot_cols;
    out.index_columns(field);
    return out;
}

template <class F>
SubspaceBasis<F> SubspaceBasis<F>::kernel_of(const F& field, Ambient ambient, const DenseMatrix<F>& conditions) {
    check_ambient(ambient.dim());
    if (conditions.cols() != ambient.dim()) throw AmbientMismatch("kernel_of: condition length differs from ambient");
    return span_of(field, ambient, kernel_basis(field, conditions));
}

template <class F>
SubspaceBasis<F> SubspaceBasis<F>::zero(const F& field, Ambient ambient) {
    return span_of(field, ambient, DenseMatrix<F>(field, 0, ambient.dim()));
}

template <class F>
SubspaceBasis<F> SubspaceBasis<F>::whole(const F& field, Ambient ambient) {
    return span_of(field, ambient, identity_matrix(field, ambient.dim()));
}

template <class F>
std::vector<typename F::Element> SubspaceBasis<F>::normal_form(const F& field, std::span<const Element> v) const {
    if (v.size() != ambient_.dim()) throw AmbientMismatch("normal_form: vector length differs from ambient");
    std::vector<std::pair<std::size_t, Element>> terms;
    for (std::size_t c = 0; c < v.size(); ++c) {
        if (!field.is_zero(v[c])) terms.emplace_back(c, v[c]);
    }
    std::vector<Element> out(free_.size(), field.zero());
    accumulate_normal_form(field, terms, out);
    return out;
}

template <class F>
void SubspaceBasis<F>::accumulate_normal_form(const F& field, std::span<const std::pair<std::size_t, Element>> terms,
                                              std::span<Element> out) const {
    for (const auto& [col, val] : terms) {
        if (is_pivot_[col]) {
            // v[col] * e_col is congruent to -v[col] * (rest of the pivot row).
            field.sub_scaled(out, val, reducer_.row(slot_[col]));
        } else {
            auto& o = out[slot_[col]];
            o = field.add(o, val);
        }
    }
}

template <class F>
bool SubspaceBasis<F>::contains(const F& field, std::span<const Element> v) const {
    for (const auto& x : normal_form(field, v)) {
        if (!field.is_zero(x)) return false;
    }
    return true;
}

template <class F>
std::size_t span_dim(const F& field, std::span<const PolyVector<F>> polys) {
    if (polys.empty()) return 0;
    const auto& first = polys.front();
    DenseMatrix<F> m(field, 0, first.coeffs.size());
    for (const auto& p : polys) {
        if (!(p.grading == first.grading) || !(p.degree == first.degree)) {
            throw GradingMismatch("span_dim: polynomials of mixed degree");
        }
        m.append_row(p.coeffs);
    }
    return rank(field, m);
}

template <class F>
std::size_t union_dim(const F& field, const SubspaceBasis<F>& a, const SubspaceBasis<F>& b) {
    if (!(a.ambient() == b.ambient())) throw AmbientMismatch("union_dim: different ambient spaces");
    DenseMatrix<F> m(field, 0, a.ambient().dim());
    for (std::size_t r = 0; r < a.dim(); ++r) m.append_row(a.rref().row(r));
    for (std::size_t r = 0; r < b.dim(); ++r) m.append_row(b.rref().row(r));
    return rank(field, m);
}

template <class F>
std::size_t intersection_dim(const F& field, const SubspaceBasis<F>& a, const SubspaceBasis<F>& b) {
    if (!(a.ambient() == b.ambient())) throw AmbientMismatch("intersection_dim: different ambient spaces");
    // Unknowns (x, y) with sum x_i a_i - sum y_j b_j = 0; the bases are
    // independent so the solution space is isomorphic to A intersect B.
    const std::size_t n = a.ambient().dim();
    DenseMatrix<F> sys(field, n, a.dim() + b.dim());
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t i = 0; i < a.dim(); ++i) sys(c, i) = a.rref()(i, c);
        for (std::size_t j = 0; j < b.dim(); ++j) sys(c, a.dim() + j) = field.neg(b.rref()(j, c));
    }
    return kernel_dim(field, sys);
}

#define GRIDWLP_INSTANTIATE(F)                                                                 \
    template class SubspaceBasis<F>;                                                           \
    template std::size_t span_dim<F>(const F&, std::span<const PolyVector<F>>);                \
    template std::size_t union_dim<F>(const F&, const SubspaceBasis<F>&, const SubspaceBasis<F>&); \
    template std::size_t intersection_dim<F>(const F&, const SubspaceBasis<F>&, const SubspaceBasis<F>&);

GRIDWLP_INSTANTIATE(PrimeField)
GRIDWLP_INSTANTIATE(RationalField)

#undef GRIDWLP_INSTANTIATE

}  // namespace gridwlp
