#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridwlp {

/// Ambient dimensions above this are refused rather than risking an OOM.
inline constexpr std::size_t kMaxAmbientColumns = 20000;

class DimensionCapExceeded : public std::runtime_error {
public:
    explicit DimensionCapExceeded(std::size_t cols)
        : std::runtime_error("ambient dimension " + std::to_string(cols) + " exceeds cap " +
                             std::to_string(kMaxAmbientColumns)),
          columns(cols) {}
    std::size_t columns;
};

inline void check_ambient(std::size_t cols) {
    if (cols > kMaxAmbientColumns) throw DimensionCapExceeded(cols);
}

/// Dense row-major matrix over a field.
template <class F>
class DenseMatrix {
public:
    using Element = typename F::Element;

    DenseMatrix() = default;
    DenseMatrix(const F& field, std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, field.zero()) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Element& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Element& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<Element> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
    std::span<const Element> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

    /// Appends a zero row and returns it.
    std::span<Element> append_row(const F& field) {
        entries_.resize(entries_.size() + cols_, field.zero());
        ++rows_;
        return row(rows_ - 1);
    }

    void append_row(std::span<const Element> values) {
        if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
        entries_.insert(entries_.end(), values.begin(), values.end());
        ++rows_;
    }

    /// Keeps the first n rows.
    void truncate_rows(std::size_t n) {
        if (n >= rows_) return;
        entries_.resize(n * cols_);
        rows_ = n;
    }

    void swap_rows(std::size_t a, std::size_t b);

    DenseMatrix transpose() const;

    const std::vector<Element>& entries() const { return entries_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Element> entries_;
};

struct EchelonForm {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;  // pivot of row i, increasing
};

enum class Reduction {
    Echelon,  // zeros below pivots only
    Full,     // reduced row echelon form: unit pivots, zeros above and below
};

/// In-place Gaussian elimination with first-nonzero pivoting. Afterwards rows
/// [0, rank) hold the echelon form and the remaining rows are zero.
template <class F>
EchelonForm row_reduce(const F& field, DenseMatrix<F>& m, Reduction mode);

/// Reduced row echelon form built one row at a time. Reducing a row against
/// a fully reduced basis only touches the free columns, which is much cheaper
/// than column-wise elimination when there are many more rows than the rank.
/// Afterwards `m` holds exactly the rank nonzero rows, in RREF.
template <class F>
EchelonForm row_reduce_incremental(const F& field, DenseMatrix<F>& m);

/// Row rank over the field. Works on a private copy.
template <class F>
std::size_t rank(const F& field, const DenseMatrix<F>& m);

template <class F>
std::size_t kernel_dim(const F& field, const DenseMatrix<F>& m) {
    return m.cols() - rank(field, m);
}

/// Basis of {x : m x = 0}, one vector per row of the result.
template <class F>
DenseMatrix<F> kernel_basis(const F& field, const DenseMatrix<F>& m);

template <class F>
DenseMatrix<F> identity_matrix(const F& field, std::size_t n) {
    DenseMatrix<F> m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
}

}  // namespace gridwlp
