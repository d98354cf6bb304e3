#pragma once

#include <cmath>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qdet/errors.hpp"
#include "qdet/quaternion.hpp"
#include "qdet/ring.hpp"

namespace qdet {

/// Dense rectangular matrix over a ring, row-major, entry indices 0-based.
/// A square Mat is itself a RingElement (zero = zero matrix, one = identity),
/// so matrices of matrices run through every algorithm unchanged. Products
/// keep the left-to-right factor order everywhere; row operations in the
/// inverse use left multiplication only, which is what makes the elimination
/// valid over noncommutative scalars.
template <RingElement R>
class Mat {
public:
    Mat(int rows, int cols, std::vector<R> entries) : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (rows_ < 1 || cols_ < 1)
            throw DimensionMismatch("matrix dimensions must be positive");
        if (static_cast<int>(entries_.size()) != rows_ * cols_)
            throw DimensionMismatch("entry count does not match " + std::to_string(rows_) + "x" +
                                    std::to_string(cols_));
    }

    static Mat filled(int rows, int cols, const R& value) {
        return Mat(rows, cols, std::vector<R>(static_cast<std::size_t>(rows) * cols, value));
    }

    static Mat zero(int rows, int cols, const R& proto) { return filled(rows, cols, proto.zero_like()); }

    static Mat identity(int n, const R& proto) {
        Mat m = zero(n, n, proto);
        const R one = proto.one_like();
        for (int i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    static Mat from_rows(const std::vector<std::vector<R>>& rows) {
        if (rows.empty() || rows.front().empty())
            throw DimensionMismatch("matrix dimensions must be positive");
        const int nc = static_cast<int>(rows.front().size());
        std::vector<R> entries;
        entries.reserve(rows.size() * nc);
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != nc)
                throw DimensionMismatch("ragged row in matrix literal");
            for (const auto& x : row) entries.push_back(x);
        }
        return Mat(static_cast<int>(rows.size()), nc, std::move(entries));
    }

    template <typename F>
    static Mat generate(int rows, int cols, F f) {
        std::vector<R> entries;
        entries.reserve(static_cast<std::size_t>(rows) * cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) entries.push_back(f(i, j));
        return Mat(rows, cols, std::move(entries));
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const R& at(int i, int j) const {
        check_index(i, j);
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }
    R& at(int i, int j) {
        check_index(i, j);
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }

    /// Copy of the rectangle with upper-left (r0, c0), nr x nc entries.
    Mat sub(int r0, int c0, int nr, int nc) const {
        if (r0 < 0 || c0 < 0 || nr < 1 || nc < 1 || r0 + nr > rows_ || c0 + nc > cols_)
            throw IndexOutOfRange("sub-matrix rectangle out of range");
        return generate(nr, nc, [&](int i, int j) { return at(r0 + i, c0 + j); });
    }

    Mat operator+(const Mat& o) const {
        require_same_shape(o, "matrix addition");
        return generate(rows_, cols_, [&](int i, int j) { return at(i, j) + o.at(i, j); });
    }

    Mat operator-(const Mat& o) const {
        require_same_shape(o, "matrix subtraction");
        return generate(rows_, cols_, [&](int i, int j) { return at(i, j) - o.at(i, j); });
    }

    Mat operator-() const {
        return generate(rows_, cols_, [&](int i, int j) { return -at(i, j); });
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_)
            throw DimensionMismatch("matrix product needs " + std::to_string(cols_) + " rows on the right, got " +
                                    std::to_string(o.rows_));
        Mat out = zero(rows_, o.cols_, entries_.front());
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) {
                const R& a = at(i, j);
                // Exact zeros contribute nothing; skipping them is only safe
                // when is_zero means exactly zero.
                if constexpr (!NumericPolicy<R>::approximate) {
                    if (a.is_zero()) continue;
                }
                for (int k = 0; k < o.cols_; ++k) {
                    out.at(i, k) = out.at(i, k) + a * o.at(j, k);
                }
            }
        }
        return out;
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : entries_)
            if (!x.is_zero()) return false;
        return true;
    }

    Mat zero_like() const { return zero(rows_, cols_, entries_.front()); }

    Mat one_like() const {
        if (!is_square())
            throw DimensionMismatch("identity of a non-square matrix");
        return identity(rows_, entries_.front());
    }

    std::optional<Mat> try_invert() const {
        long bad_col = 0;
        return invert_impl(bad_col);
    }

    /// Two-sided inverse by Gauss-Jordan elimination with left-multiplication
    /// row operations. Pivots: exact mode takes the first ring-invertible
    /// entry scanning downward; float mode the largest norm above tolerance.
    /// Complete over skew-field scalars; for general ring elements a failed
    /// pivot search is reported as such, not as a proof of singularity.
    Mat invert() const {
        long bad_col = 0;
        auto inv = invert_impl(bad_col);
        if (!inv)
            throw NotInvertible("no invertible pivot found in column " + std::to_string(bad_col), {bad_col});
        return *inv;
    }

private:
    void check_index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw IndexOutOfRange("entry (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range",
                                  {i, j});
    }

    void require_same_shape(const Mat& o, const std::string& what) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionMismatch(what + " shape mismatch: " + std::to_string(rows_) + "x" +
                                    std::to_string(cols_) + " vs " + std::to_string(o.rows_) + "x" +
                                    std::to_string(o.cols_));
    }

    std::optional<Mat> invert_impl(long& bad_col) const {
        if (!is_square())
            throw DimensionMismatch("matrix inverse requires a square matrix");
        const int n = rows_;
        const int w = 2 * n;
        // Augmented [A | I], eliminated in place.
        std::vector<R> aug;
        aug.reserve(static_cast<std::size_t>(n) * w);
        const R zero = entries_.front().zero_like();
        const R one = entries_.front().one_like();
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) aug.push_back(at(i, j));
            for (int j = 0; j < n; ++j) aug.push_back(i == j ? one : zero);
        }
        auto e = [&](int i, int j) -> R& { return aug[static_cast<std::size_t>(i) * w + j]; };

        for (int col = 0; col < n; ++col) {
            int pivot = -1;
            std::optional<R> pivot_inv;
            if constexpr (NumericPolicy<R>::approximate) {
                double best = 0.0;
                for (int r = col; r < n; ++r) {
                    if (e(r, col).is_zero()) continue;
                    const double m = NumericPolicy<R>::magnitude(e(r, col));
                    if (pivot < 0 || m > best) {
                        pivot = r;
                        best = m;
                    }
                }
                if (pivot >= 0) pivot_inv = e(pivot, col).try_invert();
            } else {
                for (int r = col; r < n; ++r) {
                    if (auto inv = e(r, col).try_invert()) {
                        pivot = r;
                        pivot_inv = std::move(inv);
                        break;
                    }
                }
            }
            if (pivot < 0 || !pivot_inv) {
                bad_col = col + 1;
                return std::nullopt;
            }
            if (pivot != col)
                for (int j = 0; j < w; ++j) std::swap(e(pivot, j), e(col, j));
            // Normalize: row <- pivot^{-1} * row.
            for (int j = col; j < w; ++j) e(col, j) = *pivot_inv * e(col, j);
            // Eliminate: row_r <- row_r - factor * pivot_row.
            for (int r = 0; r < n; ++r) {
                if (r == col) continue;
                const R factor = e(r, col);
                if (factor.is_zero()) continue;
                for (int j = col; j < w; ++j) e(r, j) = e(r, j) - factor * e(col, j);
            }
        }

        std::vector<R> out;
        out.reserve(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out.push_back(e(i, n + j));
        return Mat(n, n, std::move(out));
    }

    int rows_;
    int cols_;
    std::vector<R> entries_;
};

template <RingElement R>
Mat<R> hconcat(std::span<const Mat<R>> parts) {
    if (parts.empty()) throw DimensionMismatch("hconcat of no matrices");
    int cols = 0;
    for (const auto& p : parts) {
        if (p.rows() != parts.front().rows())
            throw DimensionMismatch("hconcat row-count mismatch");
        cols += p.cols();
    }
    std::vector<R> entries;
    entries.reserve(static_cast<std::size_t>(parts.front().rows()) * cols);
    for (int i = 0; i < parts.front().rows(); ++i)
        for (const auto& p : parts)
            for (int j = 0; j < p.cols(); ++j) entries.push_back(p.at(i, j));
    return Mat<R>(parts.front().rows(), cols, std::move(entries));
}

template <RingElement R>
Mat<R> vconcat(std::span<const Mat<R>> parts) {
    if (parts.empty()) throw DimensionMismatch("vconcat of no matrices");
    int rows = 0;
    for (const auto& p : parts) {
        if (p.cols() != parts.front().cols())
            throw DimensionMismatch("vconcat column-count mismatch");
        rows += p.rows();
    }
    std::vector<R> entries;
    entries.reserve(static_cast<std::size_t>(rows) * parts.front().cols());
    for (const auto& p : parts)
        for (int i = 0; i < p.rows(); ++i)
            for (int j = 0; j < p.cols(); ++j) entries.push_back(p.at(i, j));
    return Mat<R>(rows, parts.front().cols(), std::move(entries));
}

template <RingElement R>
Mat<R> hconcat(const std::vector<Mat<R>>& parts) {
    return hconcat(std::span<const Mat<R>>(parts));
}

template <RingElement R>
Mat<R> vconcat(const std::vector<Mat<R>>& parts) {
    return vconcat(std::span<const Mat<R>>(parts));
}

template <typename S>
double frobenius_norm(const Mat<Quaternion<S>>& m) {
    double sum = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) sum += detail::scalar_to_double(m.at(i, j).norm_sq());
    return std::sqrt(sum);
}

/// Frobenius distance of a against b, scaled by max(1, |b|_F). Used for the
/// float-mode agreement checks where exact equality is meaningless.
template <typename S, typename T>
double relative_distance(const Mat<Quaternion<S>>& a, const Mat<Quaternion<T>>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("relative distance of different shapes");
    double diff = 0.0;
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            const Quaternion<double> da(detail::scalar_to_double(a.at(i, j).a()),
                                        detail::scalar_to_double(a.at(i, j).b()),
                                        detail::scalar_to_double(a.at(i, j).c()),
                                        detail::scalar_to_double(a.at(i, j).d()));
            const Quaternion<double> db(detail::scalar_to_double(b.at(i, j).a()),
                                        detail::scalar_to_double(b.at(i, j).b()),
                                        detail::scalar_to_double(b.at(i, j).c()),
                                        detail::scalar_to_double(b.at(i, j).d()));
            diff += (da - db).norm_sq();
        }
    }
    return std::sqrt(diff) / std::max(1.0, frobenius_norm(b));
}

inline Mat<FloatQuaternion> to_float(const Mat<ExactQuaternion>& m) {
    return Mat<FloatQuaternion>::generate(m.rows(), m.cols(),
                                          [&](int i, int j) { return to_float(m.at(i, j)); });
}

template <RingElement R>
std::ostream& operator<<(std::ostream& os, const Mat<R>& m) {
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        os << (i == 0 ? "[" : " [");
        for (int j = 0; j < m.cols(); ++j) os << (j == 0 ? "" : ", ") << m.at(i, j);
        os << "]" << (i + 1 == m.rows() ? "" : "\n");
    }
    return os << "]";
}

}  // namespace qdet
