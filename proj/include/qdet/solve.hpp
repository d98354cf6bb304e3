#pragma once

#include <vector>

#include "qdet/block.hpp"
#include "qdet/errors.hpp"
#include "qdet/matrix.hpp"

namespace qdet {

/// Solve T X = B for block upper triangular T by block back-substitution,
/// top block row last. T is never inverted densely; only its diagonal blocks
/// are. Throws NotInvertible (with the block index) when a diagonal block has
/// no inverse.
template <RingElement R>
Mat<R> solve_block_upper_triangular(const PartitionedMatrix<R>& t, const Mat<R>& b) {
    if (t.row_partition() != t.col_partition())
        throw DimensionMismatch("triangular solve needs equal row and column partitions");
    if (b.rows() != t.row_partition().total())
        throw DimensionMismatch("right-hand side has " + std::to_string(b.rows()) + " rows, expected " +
                                std::to_string(t.row_partition().total()));
    if (!is_block_upper_triangular(t))
        throw TriangularityError("matrix is not block upper triangular");

    const BlockPartition& part = t.row_partition();
    const int n = part.count();
    std::vector<Mat<R>> x(static_cast<std::size_t>(n), b);  // placeholders, overwritten bottom-up
    for (int i = n; i >= 1; --i) {
        Mat<R> acc = b.sub(part.offset(i), 0, part.size(i), b.cols());
        for (int j = i + 1; j <= n; ++j) {
            Mat<R> tij = t.block(i, j);
            if constexpr (!NumericPolicy<R>::approximate) {
                if (tij.is_zero()) continue;
            }
            acc = acc - tij * x[static_cast<std::size_t>(j) - 1];
        }
        Mat<R> diag = t.block(i, i);
        auto inv = diag.try_invert();
        if (!inv) throw NotInvertible("diagonal block " + std::to_string(i) + " is not invertible", {i});
        x[static_cast<std::size_t>(i) - 1] = *inv * acc;
    }
    return vconcat(x);
}

}  // namespace qdet
