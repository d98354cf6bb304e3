#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qdet/block.hpp"
#include "qdet/errors.hpp"
#include "qdet/matrix.hpp"
#include "qdet/quasidet.hpp"

namespace qdet {

/// Square block matrix with equal row/column partitions and zero blocks below
/// the diagonal. Diagonal invertibility is a precondition of the inversion
/// algorithms and is reported there, with the offending index, rather than
/// probed at construction.
template <RingElement R>
class BlockTriangularMatrix {
public:
    static BlockTriangularMatrix create(PartitionedMatrix<R> p) {
        if (p.row_partition() != p.col_partition())
            throw ShapeError("block triangular matrix needs equal row and column partitions");
        for (int j = 2; j <= p.n_block_rows(); ++j)
            for (int k = 1; k < j; ++k)
                if (!p.block(j, k).is_zero())
                    throw TriangularityError("block (" + std::to_string(j) + ", " + std::to_string(k) +
                                                 ") below the diagonal is nonzero",
                                             {j, k});
        return BlockTriangularMatrix(std::move(p));
    }

    static BlockTriangularMatrix create(Mat<R> data, BlockPartition partition) {
        return create(PartitionedMatrix<R>(std::move(data), std::move(partition)));
    }

    int n() const { return grid_.n_block_rows(); }
    const BlockPartition& partition() const { return grid_.row_partition(); }
    const PartitionedMatrix<R>& grid() const { return grid_; }
    Mat<R> block(int j, int k) const { return grid_.block(j, k); }

    BlockTriangularMatrix with_block(int j, int k, const Mat<R>& b) const {
        return create(grid_.with_block(j, k, b));
    }

private:
    explicit BlockTriangularMatrix(PartitionedMatrix<R> grid) : grid_(std::move(grid)) {}

    PartitionedMatrix<R> grid_;
};

/// The inverse of a block triangular matrix, stored blockwise: upper blocks
/// computed, diagonal blocks the inverses of the input's diagonal, lower
/// blocks structurally zero.
template <RingElement R>
class BlockInverse {
public:
    BlockInverse(BlockPartition partition, std::vector<Mat<R>> blocks)
        : partition_(std::move(partition)), blocks_(std::move(blocks)) {
        const int n = partition_.count();
        if (static_cast<int>(blocks_.size()) != n * n)
            throw ShapeError("block inverse needs a full n-by-n block grid");
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                const Mat<R>& b = at(j, k);
                if (b.rows() != partition_.size(j) || b.cols() != partition_.size(k))
                    throw ShapeError("block (" + std::to_string(j) + ", " + std::to_string(k) +
                                         ") has the wrong shape",
                                     {j, k});
            }
    }

    int n() const { return partition_.count(); }
    const BlockPartition& partition() const { return partition_; }

    const Mat<R>& block(int j, int k) const {
        if (j < 1 || j > n() || k < 1 || k > n())
            throw IndexOutOfRange("block (" + std::to_string(j) + ", " + std::to_string(k) + ") outside " +
                                      std::to_string(n()) + "x" + std::to_string(n()),
                                  {j, k});
        return at(j, k);
    }

    Mat<R> assemble() const {
        return PartitionedMatrix<R>::assemble(partition_, partition_,
                                              [&](int j, int k) { return at(j, k); })
            .data();
    }

    bool operator==(const BlockInverse& o) const {
        return partition_ == o.partition_ && blocks_ == o.blocks_;
    }
    bool operator!=(const BlockInverse& o) const { return !(*this == o); }

private:
    const Mat<R>& at(int j, int k) const {
        return blocks_[static_cast<std::size_t>(j - 1) * n() + (k - 1)];
    }

    BlockPartition partition_;
    std::vector<Mat<R>> blocks_;
};

namespace detail {

template <RingElement R>
Mat<R> diagonal_inverse(const BlockTriangularMatrix<R>& m, int k) {
    auto inv = m.block(k, k).try_invert();
    if (!inv)
        throw NotInvertible("diagonal block (" + std::to_string(k) + ", " + std::to_string(k) +
                                ") is not invertible",
                            {k, k});
    return *inv;
}

}  // namespace detail

/// One block of the inverse, straight from the closed form: for j < k it is
/// -M_jj^{-1} * |sub-grid with rows j..k-1, cols j+1..k| * M_kk^{-1}; the
/// diagonal gives M_kk^{-1}; below the diagonal, zero. The sub-grid is block
/// upper Hessenberg with the input's diagonal blocks on its subdiagonal, so
/// block (j,k) of the inverse depends on nothing outside rows/cols j..k.
template <RingElement R>
Mat<R> inverse_block_explicit(const BlockTriangularMatrix<R>& m, int j, int k) {
    const int n = m.n();
    if (j < 1 || j > n || k < 1 || k > n)
        throw IndexOutOfRange("block (" + std::to_string(j) + ", " + std::to_string(k) + ") outside " +
                                  std::to_string(n) + "x" + std::to_string(n),
                              {j, k});
    if (j > k) return Mat<R>::zero(m.partition().size(j), m.partition().size(k), m.block(1, 1).at(0, 0));
    if (j == k) return detail::diagonal_inverse(m, k);
    Mat<R> dj = detail::diagonal_inverse(m, j);
    Mat<R> dk = detail::diagonal_inverse(m, k);
    auto grid = HessenbergGrid<R>::create(m.grid().sub_grid(j, j + 1, k - j, k - j));
    return -(dj * hessenberg_qdet(grid) * dk);
}

/// All blocks of the inverse via the explicit quasideterminant form.
template <RingElement R>
BlockInverse<R> inverse_explicit(const BlockTriangularMatrix<R>& m) {
    const int n = m.n();
    std::vector<Mat<R>> diag;
    diag.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) diag.push_back(detail::diagonal_inverse(m, k));

    const R proto = m.block(1, 1).at(0, 0);
    std::vector<Mat<R>> blocks;
    blocks.reserve(static_cast<std::size_t>(n) * n);
    for (int j = 1; j <= n; ++j) {
        for (int k = 1; k <= n; ++k) {
            if (j > k) {
                blocks.push_back(Mat<R>::zero(m.partition().size(j), m.partition().size(k), proto));
            } else if (j == k) {
                blocks.push_back(diag[static_cast<std::size_t>(k) - 1]);
            } else {
                auto grid = HessenbergGrid<R>::create(m.grid().sub_grid(j, j + 1, k - j, k - j));
                blocks.push_back(-(diag[static_cast<std::size_t>(j) - 1] * hessenberg_qdet(grid) *
                                   diag[static_cast<std::size_t>(k) - 1]));
            }
        }
    }
    return BlockInverse<R>(m.partition(), std::move(blocks));
}

/// Inversion by iterated two-block splitting: starting from the trailing
/// diagonal block, repeatedly apply
/// [[A, B], [0, C]]^{-1} = [[A^{-1}, -A^{-1} B C^{-1}], [0, C^{-1}]]
/// with C the already-inverted trailing part. Uses nothing but matrix
/// products and scalar-level Gaussian inversion, which makes it the
/// independent cross-check for the other two methods.
template <RingElement R>
BlockInverse<R> inverse_iterative(const BlockTriangularMatrix<R>& m) {
    const int n = m.n();
    const BlockPartition& part = m.partition();
    const R proto = m.block(1, 1).at(0, 0);

    Mat<R> tail_inv = detail::diagonal_inverse(m, n);
    for (int j = n - 1; j >= 1; --j) {
        Mat<R> dj = detail::diagonal_inverse(m, j);
        Mat<R> row = m.grid().sub_grid(j, j + 1, 1, n - j).data();
        Mat<R> corrected = -(dj * (row * tail_inv));
        Mat<R> zeros = Mat<R>::zero(tail_inv.rows(), dj.cols(), proto);
        tail_inv = vconcat<R>({hconcat<R>({std::move(dj), std::move(corrected)}),
                               hconcat<R>({std::move(zeros), std::move(tail_inv)})});
    }

    std::vector<Mat<R>> blocks;
    blocks.reserve(static_cast<std::size_t>(n) * n);
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
            blocks.push_back(tail_inv.sub(part.offset(j), part.offset(k), part.size(j), part.size(k)));
    return BlockInverse<R>(part, std::move(blocks));
}

/// Chooses the recursion split for inverse block (j, k); must return a value
/// in 1..k-j.
using SplitChoice = std::function<int(int j, int k)>;

/// Constant split c, clamped into the valid range for each block.
inline SplitChoice constant_split(int c) {
    return [c](int j, int k) {
        const int span = k - j;
        return c < 1 ? 1 : (c > span ? span : c);
    };
}

/// Recurrence form: with the diagonal inverses in place, each block (j, k)
/// with k > j is minus the sum over p in 0..l-1, q in l..k-j of
/// inv(j, j+p) * M(j+p, j+q) * inv(j+q, k), for any split l in 1..k-j.
/// Blocks are filled by increasing span k-j, so every referenced block is
/// already available. The result does not depend on the split choice.
template <RingElement R>
BlockInverse<R> inverse_recursive(const BlockTriangularMatrix<R>& m, const SplitChoice& choice = constant_split(1)) {
    const int n = m.n();
    const BlockPartition& part = m.partition();
    const R proto = m.block(1, 1).at(0, 0);

    std::vector<Mat<R>> blocks;
    blocks.reserve(static_cast<std::size_t>(n) * n);
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
            blocks.push_back(j == k ? detail::diagonal_inverse(m, k)
                                    : Mat<R>::zero(part.size(j), part.size(k), proto));
    auto at = [&](int j, int k) -> Mat<R>& {
        return blocks[static_cast<std::size_t>(j - 1) * n + (k - 1)];
    };

    for (int span = 1; span <= n - 1; ++span) {
        for (int j = 1; j + span <= n; ++j) {
            const int k = j + span;
            const int l = choice(j, k);
            if (l < 1 || l > span)
                throw InvalidSplit("split " + std::to_string(l) + " for block (" + std::to_string(j) + ", " +
                                       std::to_string(k) + ") outside 1.." + std::to_string(span),
                                   {j, k});
            Mat<R> acc = Mat<R>::zero(part.size(j), part.size(k), proto);
            for (int p = 0; p <= l - 1; ++p) {
                for (int q = l; q <= span; ++q) {
                    Mat<R> mid = m.block(j + p, j + q);
                    if constexpr (!NumericPolicy<R>::approximate) {
                        if (mid.is_zero()) continue;
                    }
                    acc = acc + at(j, j + p) * mid * at(j + q, k);
                }
            }
            at(j, k) = -acc;
        }
    }
    return BlockInverse<R>(part, std::move(blocks));
}

/// Additive perturbation confined to the off-diagonal rectangle with block
/// rows 1..l and block columns l+1..n of a block triangular matrix. Block
/// (j, k) of the perturbation, in its own 1-based indexing, has the shape
/// s_j x s_{l+k} of the target rectangle.
template <RingElement R>
class PerturbationBlock {
public:
    static PerturbationBlock create(PartitionedMatrix<R> e, int split, const BlockPartition& target) {
        const int n = target.count();
        if (split < 1 || split > n - 1)
            throw InvalidSplit("perturbation split " + std::to_string(split) + " outside 1.." +
                                   std::to_string(n - 1),
                               {split});
        if (e.row_partition() != target.slice(1, split) ||
            e.col_partition() != target.slice(split + 1, n - split))
            throw DimensionMismatch("perturbation partitions do not match the target rectangle at split " +
                                        std::to_string(split),
                                    {split});
        return PerturbationBlock(std::move(e), split);
    }

    int split() const { return split_; }
    const PartitionedMatrix<R>& grid() const { return grid_; }

private:
    PerturbationBlock(PartitionedMatrix<R> e, int split) : grid_(std::move(e)), split_(split) {}

    PartitionedMatrix<R> grid_;
    int split_;
};

/// Change of inverse block (j, k) under the perturbation: zero outside the
/// rectangle j <= l < k; inside it, minus the row of inverse blocks
/// (j, j..l) times the matching perturbation rectangle times the column of
/// inverse blocks (l+1..k, k).
template <RingElement R>
Mat<R> perturbation_delta(const BlockInverse<R>& minv, const PerturbationBlock<R>& e, int j, int k) {
    const int n = minv.n();
    if (j < 1 || j > n || k < 1 || k > n)
        throw IndexOutOfRange("block (" + std::to_string(j) + ", " + std::to_string(k) + ") outside " +
                                  std::to_string(n) + "x" + std::to_string(n),
                              {j, k});
    const int l = e.split();
    if (e.grid().row_partition() != minv.partition().slice(1, l) ||
        e.grid().col_partition() != minv.partition().slice(l + 1, n - l))
        throw DimensionMismatch("perturbation partitions do not match the inverse partition");
    const R proto = minv.block(1, 1).at(0, 0);
    if (j > l || k < l + 1)
        return Mat<R>::zero(minv.partition().size(j), minv.partition().size(k), proto);

    std::vector<Mat<R>> row;
    row.reserve(static_cast<std::size_t>(l - j) + 1);
    for (int p = j; p <= l; ++p) row.push_back(minv.block(j, p));
    std::vector<Mat<R>> col;
    col.reserve(static_cast<std::size_t>(k - l));
    for (int q = l + 1; q <= k; ++q) col.push_back(minv.block(q, k));
    Mat<R> rect = e.grid().sub_grid(j, 1, l - j + 1, k - l).data();
    return -(hconcat(row) * rect * vconcat(col));
}

/// The perturbed matrix itself: the rectangle added onto a copy of M.
template <RingElement R>
BlockTriangularMatrix<R> apply_perturbation(const BlockTriangularMatrix<R>& m, const PerturbationBlock<R>& e) {
    const int l = e.split();
    PartitionedMatrix<R> grid = m.grid();
    for (int r = 1; r <= e.grid().n_block_rows(); ++r)
        for (int c = 1; c <= e.grid().n_block_cols(); ++c)
            grid = grid.with_block(r, l + c, grid.block(r, l + c) + e.grid().block(r, c));
    return BlockTriangularMatrix<R>::create(std::move(grid));
}

/// Inverse of the perturbed matrix assembled as explicit inverse plus
/// deltas; equals inverting the perturbed matrix directly.
template <RingElement R>
BlockInverse<R> perturbed_inverse(const BlockTriangularMatrix<R>& m, const PerturbationBlock<R>& e) {
    BlockInverse<R> base = inverse_explicit(m);
    const int n = base.n();
    const int l = e.split();
    std::vector<Mat<R>> blocks;
    blocks.reserve(static_cast<std::size_t>(n) * n);
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
            if (j <= l && k >= l + 1)
                blocks.push_back(base.block(j, k) + perturbation_delta(base, e, j, k));
            else
                blocks.push_back(base.block(j, k));
        }
    return BlockInverse<R>(base.partition(), std::move(blocks));
}

}  // namespace qdet
