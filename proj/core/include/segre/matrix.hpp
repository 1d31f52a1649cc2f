#ifndef SEGRE_MATRIX_HPP
#define SEGRE_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "segre/errors.hpp"

namespace segre {

/// Dense row-major matrix over an exact field. F is a field object
/// (FpField, RatField) supplying zero/one and zero tests; the elements
/// carry the arithmetic.
template <class F>
struct Matrix {
    using Elem = typename F::Elem;

    std::size_t rows = 0, cols = 0;
    std::vector<Elem> a;

    Matrix(std::size_t r, std::size_t c, const F& fld)
        : rows(r), cols(c), a(r * c, fld.zero()) {}

    Elem& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Elem& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/// In-place reduced row echelon form; returns the pivot columns.
template <class F>
std::vector<std::size_t> rref_in_place(Matrix<F>& m, const F& fld) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t sel = row;
        while (sel < m.rows && fld.is_zero(m.at(sel, col))) ++sel;
        if (sel == m.rows) continue;
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(row, j), m.at(sel, j));
        auto inv = fld.one() / m.at(row, col);
        for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) = m.at(row, j) * inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row || fld.is_zero(m.at(i, col))) continue;
            auto factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(i, j) = m.at(i, j) - factor * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m, const F& fld) {
    return rref_in_place(m, fld).size();
}

/// Basis of the right null space, each vector scaled so its first nonzero
/// entry is 1. Size equals cols - rank.
template <class F>
std::vector<std::vector<typename F::Elem>> kernel_basis(Matrix<F> m, const F& fld) {
    using Elem = typename F::Elem;
    auto pivots = rref_in_place(m, fld);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Elem>> basis;
    for (std::size_t free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Elem> v(m.cols, fld.zero());
        v[free_col] = fld.one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = fld.zero() - m.at(r, free_col);
        // normalize first nonzero entry to 1
        for (auto& e : v) {
            if (!fld.is_zero(e)) {
                auto inv = fld.one() / e;
                for (auto& x : v) x = x * inv;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Incremental reduced echelon span: supports rank queries, membership
/// tests, and residual reduction without rebuilding a matrix per insert.
template <class F>
class RowSpace {
public:
    using Elem = typename F::Elem;

    explicit RowSpace(std::size_t dim, const F& fld) : dim_(dim), fld_(fld) {}

    std::size_t dimension() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }

    /// Reduces v against the stored rows; the residual is zero iff v lies
    /// in the span.
    std::vector<Elem> reduce(std::vector<Elem> v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const auto& coeff = v[lead_[r]];
            if (fld_.is_zero(coeff)) continue;
            auto factor = coeff;
            for (std::size_t j = lead_[r]; j < dim_; ++j)
                v[j] = v[j] - factor * rows_[r][j];
        }
        return v;
    }

    bool contains(const std::vector<Elem>& v) const {
        auto r = reduce(v);
        for (const auto& e : r)
            if (!fld_.is_zero(e)) return false;
        return true;
    }

    /// Inserts v if independent; returns true when the rank grew.
    bool insert(std::vector<Elem> v) {
        v = reduce(std::move(v));
        std::size_t lead = dim_;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (!fld_.is_zero(v[j])) {
                lead = j;
                break;
            }
        }
        if (lead == dim_) return false;
        auto inv = fld_.one() / v[lead];
        for (std::size_t j = lead; j < dim_; ++j) v[j] = v[j] * inv;
        // back-substitute into existing rows to keep the form reduced
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            auto factor = rows_[r][lead];
            if (fld_.is_zero(factor)) continue;
            for (std::size_t j = lead; j < dim_; ++j)
                rows_[r][j] = rows_[r][j] - factor * v[j];
        }
        // keep rows sorted by leading index
        std::size_t pos = 0;
        while (pos < lead_.size() && lead_[pos] < lead) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        lead_.insert(lead_.begin() + pos, lead);
        return true;
    }

    const std::vector<std::size_t>& leads() const { return lead_; }

private:
    std::size_t dim_;
    F fld_;
    std::vector<std::vector<Elem>> rows_;
    std::vector<std::size_t> lead_;
};

}  // namespace segre

#endif
