#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qdet/block.hpp"
#include "qdet/errors.hpp"
#include "qdet/matrix.hpp"
#include "qdet/solve.hpp"

namespace qdet {

/// Quasideterminant of the 2-by-2 block split [[M11, M12], [M21, M22]] with
/// block index (1,2): M12 - M11 * M21^{-1} * M22. M21 must be square and
/// invertible; the remaining shapes must conform.
template <RingElement R>
Mat<R> qdet_2x2(const Mat<R>& m11, const Mat<R>& m12, const Mat<R>& m21, const Mat<R>& m22) {
    if (!m21.is_square()) throw DimensionMismatch("pivot block M21 must be square");
    if (m11.cols() != m21.rows() || m21.cols() != m22.rows() || m11.rows() != m12.rows() ||
        m22.cols() != m12.cols())
        throw DimensionMismatch("2x2 quasideterminant blocks do not conform");
    auto inv = m21.try_invert();
    if (!inv) throw NotInvertible("pivot block M21 is not invertible");
    return m12 - m11 * (*inv * m22);
}

/// Block upper Hessenberg grid of n block rows and n block columns. Grid row
/// r holds what a 0-based Hessenberg labelling calls row r-1, so the
/// invertible subdiagonal blocks sit at grid positions (c+1, c); everything
/// below them is zero. Column c of the grid has the width of grid row c+1
/// (the subdiagonal blocks are square); the first row height and last column
/// width are unconstrained, so the flat matrix may be rectangular.
template <RingElement R>
class HessenbergGrid {
public:
    static HessenbergGrid create(PartitionedMatrix<R> grid) {
        const int n = grid.n_block_rows();
        if (grid.n_block_cols() != n)
            throw ShapeError("Hessenberg grid must have as many block columns as block rows");
        for (int c = 1; c + 1 <= n; ++c) {
            if (grid.row_partition().size(c + 1) != grid.col_partition().size(c))
                throw ShapeError("subdiagonal block (" + std::to_string(c + 1) + ", " + std::to_string(c) +
                                     ") is not square",
                                 {c + 1, c});
        }
        for (int r = 1; r <= n; ++r)
            for (int c = 1; c + 1 < r; ++c)
                if (!grid.block(r, c).is_zero())
                    throw TriangularityError("block (" + std::to_string(r) + ", " + std::to_string(c) +
                                                 ") below the first subdiagonal is nonzero",
                                             {r, c});
        return HessenbergGrid(std::move(grid));
    }

    int size() const { return grid_.n_block_rows(); }
    const PartitionedMatrix<R>& grid() const { return grid_; }
    Mat<R> block(int r, int c) const { return grid_.block(r, c); }

    /// Height of the result block.
    int top_rows() const { return grid_.row_partition().size(1); }
    /// Width of the result block.
    int last_cols() const { return grid_.col_partition().size(size()); }

private:
    explicit HessenbergGrid(PartitionedMatrix<R> grid) : grid_(std::move(grid)) {}

    PartitionedMatrix<R> grid_;
};

/// Hessenberg quasideterminant: the top-right block minus the top border
/// times the inverse of the inner triangular core times the right border.
/// The core inverse is applied through block back-substitution, never formed
/// densely. A 1-grid evaluates to its lone block.
template <RingElement R>
Mat<R> hessenberg_qdet(const HessenbergGrid<R>& h) {
    const int n = h.size();
    if (n == 1) return h.block(1, 1);
    PartitionedMatrix<R> inner = h.grid().sub_grid(2, 1, n - 1, n - 1);
    Mat<R> rhs = h.grid().sub_grid(2, n, n - 1, 1).data();
    Mat<R> x = solve_block_upper_triangular(inner, rhs);
    Mat<R> top = h.grid().sub_grid(1, 1, 1, n - 1).data();
    return h.block(1, n) - top * x;
}

/// Left-scale each grid row r >= 2 by the inverse of its subdiagonal block,
/// making every subdiagonal block an identity. Preserves the
/// quasideterminant.
template <RingElement R>
HessenbergGrid<R> normalize_diamond(const HessenbergGrid<R>& h) {
    const int n = h.size();
    if (n == 1) return h;
    std::vector<Mat<R>> scaled_rows;
    scaled_rows.reserve(static_cast<std::size_t>(n));
    scaled_rows.push_back(h.grid().sub_grid(1, 1, 1, n).data());
    for (int r = 2; r <= n; ++r) {
        auto inv = h.block(r, r - 1).try_invert();
        if (!inv)
            throw NotInvertible("subdiagonal block (" + std::to_string(r) + ", " + std::to_string(r - 1) +
                                    ") is not invertible",
                                {r, r - 1});
        scaled_rows.push_back(*inv * h.grid().sub_grid(r, 1, 1, n).data());
    }
    PartitionedMatrix<R> grid(vconcat(scaled_rows), h.grid().row_partition(), h.grid().col_partition());
    return HessenbergGrid<R>::create(std::move(grid));
}

/// Expansion of the quasideterminant as the alternating sum over increasing
/// index chains: top-right block plus, for every chain c_1 < ... < c_t below
/// n, (-1)^t times the product top(c_1) * diag(c_1)^{-1} * hop(c_1, c_2) *
/// ... * diag(c_t)^{-1} * right(c_t). Exponentially many terms; this is the
/// cross-check route, capped by `cap`.
template <RingElement R>
Mat<R> hessenberg_qdet_expansion(const HessenbergGrid<R>& h, int cap = 14) {
    const int n = h.size();
    if (n > cap)
        throw CapExceeded("expansion over " + std::to_string(n) + " block rows exceeds cap " +
                          std::to_string(cap));
    if (n == 1) return h.block(1, 1);

    std::vector<Mat<R>> diag_inv;
    diag_inv.reserve(static_cast<std::size_t>(n) - 1);
    for (int c = 1; c <= n - 1; ++c) {
        auto inv = h.block(c + 1, c).try_invert();
        if (!inv)
            throw NotInvertible("subdiagonal block (" + std::to_string(c + 1) + ", " + std::to_string(c) +
                                    ") is not invertible",
                                {c + 1, c});
        diag_inv.push_back(std::move(*inv));
    }

    Mat<R> acc = h.block(1, n);
    const unsigned long masks = 1ul << (n - 1);
    std::vector<int> chain;
    for (unsigned long mask = 1; mask < masks; ++mask) {
        chain.clear();
        for (int c = 1; c <= n - 1; ++c)
            if (mask & (1ul << (c - 1))) chain.push_back(c);
        Mat<R> term = h.block(1, chain.front());
        for (std::size_t t = 0; t < chain.size(); ++t) {
            term = term * diag_inv[static_cast<std::size_t>(chain[t]) - 1];
            const int next_col = (t + 1 < chain.size()) ? chain[t + 1] : n;
            term = term * h.block(chain[t] + 1, next_col);
        }
        acc = (chain.size() % 2 == 1) ? acc - term : acc + term;
    }
    return acc;
}

/// Two-term factorization: after unit-normalizing the subdiagonal, the
/// quasideterminant splits as |H with second row and first column deleted|
/// minus the top-left block times |H with first row and first column
/// deleted|. Needs at least two block rows.
template <RingElement R>
Mat<R> qdet_row_split(const HessenbergGrid<R>& h) {
    if (h.size() < 2) throw DegenerateResult("row split needs at least two block rows");
    HessenbergGrid<R> d = normalize_diamond(h);
    Mat<R> keep_top = hessenberg_qdet(HessenbergGrid<R>::create(d.grid().delete_row_col(2, 1)));
    Mat<R> drop_top = hessenberg_qdet(HessenbergGrid<R>::create(d.grid().delete_row_col(1, 1)));
    return keep_top - d.block(1, 1) * drop_top;
}

/// General split factorization at position j in 1..n: the quasideterminant
/// equals the double sum over l < j <= k of lead_l * M(l, k) * trail_k,
/// where lead_0 and trail_n are negated identities, lead_l is the leading
/// l-grid quasideterminant times the l-th subdiagonal inverse, and trail_k is
/// the k-th subdiagonal inverse times the trailing (n-k)-grid
/// quasideterminant. The value is independent of j.
template <RingElement R>
Mat<R> qdet_factor_split(const HessenbergGrid<R>& h, int j) {
    const int n = h.size();
    if (j < 1 || j > n)
        throw IndexOutOfRange("split position " + std::to_string(j) + " outside 1.." + std::to_string(n), {j});

    auto subdiag_inv = [&](int c) {
        auto inv = h.block(c + 1, c).try_invert();
        if (!inv)
            throw NotInvertible("subdiagonal block (" + std::to_string(c + 1) + ", " + std::to_string(c) +
                                    ") is not invertible",
                                {c + 1, c});
        return *inv;
    };

    const Mat<R> proto = h.block(1, n);
    // lead[l], l = 0..j-1; lead[0] = -I of the top row height.
    std::vector<Mat<R>> lead;
    lead.reserve(static_cast<std::size_t>(j));
    lead.push_back(-Mat<R>::identity(h.top_rows(), proto.at(0, 0)));
    for (int l = 1; l <= j - 1; ++l) {
        Mat<R> q = hessenberg_qdet(HessenbergGrid<R>::create(h.grid().leading_sub_grid(l)));
        lead.push_back(q * subdiag_inv(l));
    }
    // trail[k - j], k = j..n; trail for k = n is -I of the last column width.
    std::vector<Mat<R>> trail;
    trail.reserve(static_cast<std::size_t>(n - j + 1));
    for (int k = j; k <= n - 1; ++k) {
        Mat<R> q = hessenberg_qdet(HessenbergGrid<R>::create(h.grid().square_sub_grid(k + 1, k + 1, n - k)));
        trail.push_back(subdiag_inv(k) * q);
    }
    trail.push_back(-Mat<R>::identity(h.last_cols(), proto.at(0, 0)));

    Mat<R> acc = Mat<R>::zero(h.top_rows(), h.last_cols(), proto.at(0, 0));
    for (int l = 0; l <= j - 1; ++l) {
        for (int k = j; k <= n; ++k) {
            Mat<R> mid = h.block(l + 1, k);
            if constexpr (!NumericPolicy<R>::approximate) {
                if (mid.is_zero()) continue;
            }
            acc = acc + lead[static_cast<std::size_t>(l)] * mid * trail[static_cast<std::size_t>(k - j)];
        }
    }
    return acc;
}

}  // namespace qdet
