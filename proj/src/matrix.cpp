#include "gridwlp/matrix.hpp"

#include <algorithm>

#include "gridwlp/field.hpp"

namespace gridwlp {

template <class F>
void DenseMatrix<F>::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(entries_.begin() + static_cast<std::ptrdiff_t>(a * cols_),
                     entries_.begin() + static_cast<std::ptrdiff_t>((a + 1) * cols_),
                     entries_.begin() + static_cast<std::ptrdiff_t>(b * cols_));
}

template <class F>
DenseMatrix<F> DenseMatrix<F>::transpose() const {
    DenseMatrix<F> t;
    t.rows_ = cols_;
    t.cols_ = rows_;
    t.entries_.resize(entries_.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = entries_[r * cols_ + c];
    }
    return t;
}

template <class F>
EchelonForm row_reduce(const F& field, DenseMatrix<F>& m, Reduction mode) {
    EchelonForm out;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    for (std::size_t c = 0; c < cols && out.rank < rows; ++c) {
        std::size_t piv = out.rank;
        while (piv < rows && field.is_zero(m(piv, c))) ++piv;
        if (piv == rows) continue;
        m.swap_rows(piv, out.rank);

        auto prow = m.row(out.rank).subspan(c);
        if (!field.equal(prow[0], field.one())) field.scale(prow, field.inv(prow[0]));

        const std::size_t first = mode == Reduction::Full ? 0 : out.rank + 1;
        for (std::size_t r = first; r < rows; ++r) {
            if (r == out.rank) continue;
            auto f = m(r, c);
            if (field.is_zero(f)) continue;
            field.sub_scaled(m.row(r).subspan(c), f, prow);
        }
        out.pivot_cols.push_back(c);
        ++out.rank;
    }
    return out;
}

namespace {

// dst[j] -= f * src[j] for j in idx.
template <class F>
void sub_scaled_at(const F& field, std::span<typename F::Element> dst, const typename F::Element& f,
                   std::span<const typename F::Element> src, const std::vector<std::size_t>& idx) {
    if constexpr (F::is_rational) {
        for (std::size_t j : idx) {
            if (sgn(src[j]) != 0) dst[j] -= f * src[j];
        }
    } else {
        const auto g = field.neg(f);
        for (std::size_t j : idx) dst[j] = field.reduce(dst[j] + g * src[j]);
    }
}

}  // namespace

template <class F>
EchelonForm row_reduce_incremental(const F& field, DenseMatrix<F>& m) {
    const std::size_t cols = m.cols();
    DenseMatrix<F> basis(field, 0, cols);
    std::vector<std::size_t> pivot_of;  // pivot column of basis row i
    std::vector<std::size_t> free(cols);
    for (std::size_t c = 0; c < cols; ++c) free[c] = c;
    std::vector<typename F::Element> v(cols);

    for (std::size_t r = 0; r < m.rows() && !free.empty(); ++r) {
        const auto src = m.row(r);
        std::copy(src.begin(), src.end(), v.begin());
        // Basis rows vanish on every other pivot column, so the order of
        // these eliminations is irrelevant and no pivot entry is refilled.
        for (std::size_t i = 0; i < pivot_of.size(); ++i) {
            auto& x = v[pivot_of[i]];
            if (field.is_zero(x)) continue;
            const auto f = x;
            sub_scaled_at(field, std::span(v), f, basis.row(i), free);
            x = field.zero();
        }
        auto lead = std::find_if(free.begin(), free.end(), [&](std::size_t c) { return !field.is_zero(v[c]); });
        if (lead == free.end()) continue;
        const std::size_t c = *lead;
        const auto inv = field.inv(v[c]);
        for (std::size_t j : free) v[j] = field.mul(v[j], inv);
        for (std::size_t i = 0; i < pivot_of.size(); ++i) {
            auto row = basis.row(i);
            if (field.is_zero(row[c])) continue;
            const auto f = row[c];
            sub_scaled_at(field, row, f, std::span<const typename F::Element>(v), free);
        }
        free.erase(lead);
        basis.append_row(v);
        pivot_of.push_back(c);
    }

    std::vector<std::size_t> order(pivot_of.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return pivot_of[x] < pivot_of[y]; });
    DenseMatrix<F> out(field, 0, cols);
    EchelonForm ech;
    for (std::size_t i : order) {
        out.append_row(basis.row(i));
        ech.pivot_cols.push_back(pivot_of[i]);
    }
    ech.rank = order.size();
    m = std::move(out);
    return ech;
}

namespace {

// Fraction-free (Bareiss) rank over Z after clearing row denominators. Every
// intermediate entry is a minor of the input, so divisions are exact and no
// gcd normalisation is needed.
std::size_t bareiss_rank(const DenseMatrix<RationalField>& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<mpz_class> a(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        mpz_class den = 1;
        for (std::size_t c = 0; c < cols; ++c) {
            const auto& x = m(r, c);
            if (sgn(x) != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        }
        for (std::size_t c = 0; c < cols; ++c) {
            const auto& x = m(r, c);
            if (sgn(x) != 0) a[r * cols + c] = x.get_num() * (den / x.get_den());
        }
    }
    auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return a[r * cols + c]; };

    mpz_class prev = 1;
    mpz_class t;
    std::size_t k = 0;
    for (std::size_t c = 0; c < cols && k < rows; ++c) {
        std::size_t piv = k;
        while (piv < rows && sgn(at(piv, c)) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != k) {
            for (std::size_t j = c; j < cols; ++j) std::swap(at(piv, j), at(k, j));
        }
        for (std::size_t i = k + 1; i < rows; ++i) {
            const mpz_class f = at(i, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                auto& x = at(i, j);
                x *= at(k, c);
                if (sgn(f) != 0) {
                    t = f * at(k, j);
                    x -= t;
                }
                if (prev != 1) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, c) = 0;
        }
        prev = at(k, c);
        ++k;
    }
    return k;
}

}  // namespace

template <class F>
std::size_t rank(const F& field, const DenseMatrix<F>& m) {
    if constexpr (F::is_rational) {
        return bareiss_rank(m);
    } else {
        DenseMatrix<F> copy = m;
        return row_reduce(field, copy, Reduction::Echelon).rank;
    }
}

template <class F>
DenseMatrix<F> kernel_basis(const F& field, const DenseMatrix<F>& m) {
    DenseMatrix<F> r = m;
    const auto ech = row_reduce_incremental(field, r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : ech.pivot_cols) is_pivot[c] = true;

    DenseMatrix<F> out(field, 0, m.cols());
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        auto v = out.append_row(field);
        v[f] = field.one();
        for (std::size_t i = 0; i < ech.rank; ++i) v[ech.pivot_cols[i]] = field.neg(r(i, f));
    }
    return out;
}

#define GRIDWLP_INSTANTIATE(F)                                                     \
    template class DenseMatrix<F>;                                                 \
    template EchelonForm row_reduce<F>(const F&, DenseMatrix<F>&, Reduction);      \
    template EchelonForm row_reduce_incremental<F>(const F&, DenseMatrix<F>&);     \
    template std::size_t rank<F>(const F&, const DenseMatrix<F>&);                 \
    template DenseMatrix<F> kernel_basis<F>(const F&, const DenseMatrix<F>&);

GRIDWLP_INSTANTIATE(PrimeField)
GRIDWLP_INSTANTIATE(RationalField)

#undef GRIDWLP_INSTANTIATE

}  // namespace gridwlp
