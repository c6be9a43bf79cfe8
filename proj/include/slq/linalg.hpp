#pragma once

// Dense exact linear algebra over Q(λ).

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "slq/cyclo.hpp"
#include "slq/error.hpp"

namespace slq {

/// Row-major rectangular grid.  Used with Cyclotomic entries (ScalarMatrix)
/// and with algebra elements (corepresentation matrices).
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    const std::vector<T>& data() const noexcept { return data_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using ScalarMatrix = Matrix<Cyclotomic>;
using ScalarVector = std::vector<Cyclotomic>;

inline ScalarMatrix zero_matrix(std::size_t rows, std::size_t cols, int ell) {
    return ScalarMatrix(rows, cols, Cyclotomic(ell));
}

inline ScalarMatrix identity_matrix(std::size_t n, int ell) {
    ScalarMatrix m = zero_matrix(n, n, ell);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Cyclotomic(ell, 1);
    return m;
}

inline ScalarMatrix from_rows(const std::vector<ScalarVector>& rows, std::size_t cols, int ell) {
    ScalarMatrix m = zero_matrix(rows.size(), cols, ell);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw usage_error("from_rows: ragged input");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

inline ScalarMatrix transpose(const ScalarMatrix& m) {
    ScalarMatrix t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            t(j, i) = m(i, j);
    return t;
}

inline ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.cols() != b.rows())
        throw usage_error("matrix product: dimension mismatch");
    ScalarMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Cyclotomic& x = a(i, k);
            if (x.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero())
                    out(i, j) += x * b(k, j);
        }
    return out;
}

inline ScalarMatrix operator+(ScalarMatrix a, const ScalarMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw usage_error("matrix sum: dimension mismatch");
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            a(i, j) += b(i, j);
    return a;
}

inline ScalarMatrix operator-(ScalarMatrix a, const ScalarMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw usage_error("matrix difference: dimension mismatch");
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            a(i, j) -= b(i, j);
    return a;
}

inline ScalarMatrix operator*(const Cyclotomic& s, ScalarMatrix m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(i, j) = s * m(i, j);
    return m;
}

/// Kronecker product; row (i, r) ↦ i * b.rows() + r.
inline ScalarMatrix kron(const ScalarMatrix& a, const ScalarMatrix& b) {
    ScalarMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero())
                continue;
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t s = 0; s < b.cols(); ++s)
                    out(i * b.rows() + r, j * b.cols() + s) = a(i, j) * b(r, s);
        }
    return out;
}

inline bool is_zero(const ScalarMatrix& m) {
    return std::all_of(m.data().begin(), m.data().end(), [](const Cyclotomic& x) { return x.is_zero(); });
}

/// Exact equality treating unattached zeros as zero.
inline bool equal(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    for (std::size_t i = 0; i < a.data().size(); ++i)
        if (!(a.data()[i] == b.data()[i]))
            return false;
    return true;
}

/// Row vector times matrix.
inline ScalarVector apply_row(std::span<const Cyclotomic> v, const ScalarMatrix& m) {
    if (v.size() != m.rows())
        throw usage_error("apply_row: dimension mismatch");
    ScalarVector out(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i].is_zero())
            continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero())
                out[j] += v[i] * m(i, j);
    }
    return out;
}

struct RrefResult {
    ScalarMatrix reduced;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form, pivoting on the first nonzero entry.
inline RrefResult rref(ScalarMatrix m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero())
            ++p;
        if (p == m.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(r, j));
        Cyclotomic inv = m(r, c).inv();
        for (std::size_t j = c; j < m.cols(); ++j)
            if (!m(r, j).is_zero())
                m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero())
                continue;
            Cyclotomic f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero())
                    m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const ScalarMatrix& m) { return rref(m).pivots.size(); }

namespace detail {

inline int ell_of(const ScalarMatrix& m) {
    for (const auto& x : m.data())
        if (x.attached())
            return x.ell();
    return 0;
}

inline std::vector<ScalarVector> kernel_from_rref(const RrefResult& rr, std::size_t cols, int ell) {
    std::vector<bool> is_pivot(cols, false);
    for (auto p : rr.pivots)
        is_pivot[p] = true;
    std::vector<ScalarVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        ScalarVector v(cols, ell ? Cyclotomic(ell) : Cyclotomic());
        v[free] = ell ? Cyclotomic(ell, 1) : Cyclotomic();
        for (std::size_t i = 0; i < rr.pivots.size(); ++i)
            v[rr.pivots[i]] = -rr.reduced(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace detail

/// Basis of {x : M x = 0}.  `ell` is only needed when M carries no attached
/// entries (e.g. an all-zero matrix built from default scalars).
inline std::vector<ScalarVector> kernel(const ScalarMatrix& m, int ell = 0) {
    int e = detail::ell_of(m);
    if (e == 0)
        e = ell;
    if (e == 0)
        throw usage_error("kernel: cannot infer ell from an unattached matrix");
    auto rr = rref(m);
    return detail::kernel_from_rref(rr, m.cols(), e);
}

/// Basis of {x : x M = 0} (row vectors).
inline std::vector<ScalarVector> left_kernel(const ScalarMatrix& m, int ell = 0) {
    return kernel(transpose(m), ell);
}

/// Some x with M x = b, or nullopt when the system is inconsistent.
inline std::optional<ScalarVector> solve(const ScalarMatrix& m, std::span<const Cyclotomic> b) {
    if (b.size() != m.rows())
        throw usage_error("solve: right-hand side has wrong length");
    ScalarMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto rr = rref(std::move(aug));
    if (!rr.pivots.empty() && rr.pivots.back() == m.cols())
        return std::nullopt;
    ScalarVector x(m.cols());
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
        x[rr.pivots[i]] = rr.reduced(i, m.cols());
    int e = detail::ell_of(m);
    if (e)
        for (auto& v : x)
            v += Cyclotomic(e);
    return x;
}

inline ScalarMatrix inverse(const ScalarMatrix& m) {
    if (!m.square())
        throw usage_error("inverse: matrix is not square");
    const std::size_t n = m.rows();
    int e = detail::ell_of(m);
    if (e == 0)
        throw singular_matrix("inverse: zero matrix");
    ScalarMatrix aug = zero_matrix(n, 2 * n, e);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = Cyclotomic(e, 1);
    }
    auto rr = rref(std::move(aug));
    if (rr.pivots.size() < n || rr.pivots[n - 1] != n - 1)
        throw singular_matrix("inverse: matrix is singular");
    ScalarMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) = rr.reduced(i, n + j);
    return out;
}

inline bool is_invertible(const ScalarMatrix& m) { return m.square() && rank(m) == m.rows(); }

/// Incremental Gaussian elimination for tall sparse systems A x = 0 with a
/// modest number of unknowns.  Rows are reduced against the current pivots
/// as they arrive, so memory stays proportional to the rank.
class SparseEchelon {
public:
    using Row = std::map<std::size_t, Cyclotomic>;

    SparseEchelon(std::size_t unknowns, int ell) : n_(unknowns), ell_(ell) {}

    std::size_t unknowns() const noexcept { return n_; }
    std::size_t rank() const noexcept { return pivots_.size(); }
    bool full() const noexcept { return pivots_.size() == n_; }

    /// Returns true when the row increased the rank.
    bool add(Row row) {
        prune(row);
        while (!row.empty()) {
            auto lead = row.begin();
            auto it = pivots_.find(lead->first);
            if (it == pivots_.end()) {
                Cyclotomic inv = lead->second.inv();
                for (auto& [c, v] : row)
                    v = v * inv;
                pivots_.emplace(lead->first, std::move(row));
                return true;
            }
            Cyclotomic f = lead->second;
            for (const auto& [c, v] : it->second) {
                auto [pos, inserted] = row.try_emplace(c, Cyclotomic(ell_));
                pos->second -= f * v;
                if (pos->second.is_zero())
                    row.erase(pos);
            }
        }
        return false;
    }

    /// Basis of the solution space of all rows added so far.
    std::vector<ScalarVector> kernel() const {
        // Back-substitute into reduced form, highest pivot first.
        std::map<std::size_t, Row> reduced(pivots_.begin(), pivots_.end());
        for (auto it = reduced.rbegin(); it != reduced.rend(); ++it) {
            const std::size_t p = it->first;
            for (auto& [q, row] : reduced) {
                if (q >= p)
                    break;
                auto hit = row.find(p);
                if (hit == row.end())
                    continue;
                Cyclotomic f = hit->second;
                for (const auto& [c, v] : it->second) {
                    auto [pos, inserted] = row.try_emplace(c, Cyclotomic(ell_));
                    pos->second -= f * v;
                    if (pos->second.is_zero())
                        row.erase(pos);
                }
            }
        }
        std::vector<ScalarVector> basis;
        for (std::size_t free = 0; free < n_; ++free) {
            if (reduced.count(free))
                continue;
            ScalarVector v(n_, Cyclotomic(ell_));
            v[free] = Cyclotomic(ell_, 1);
            for (const auto& [p, row] : reduced)
                if (auto hit = row.find(free); hit != row.end())
                    v[p] = -hit->second;
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    std::size_t n_;
    int ell_;
    std::map<std::size_t, Row> pivots_;

    static void prune(Row& row) {
        for (auto it = row.begin(); it != row.end();)
            it = it->second.is_zero() ? row.erase(it) : std::next(it);
    }
};

} // namespace slq
