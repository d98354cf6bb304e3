#pragma once

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "qdet/errors.hpp"
#include "qdet/matrix.hpp"
#include "qdet/ring.hpp"

namespace qdet {

/// Ordered list of positive block sizes s_1..s_n. Block indices are 1-based
/// throughout the block-level API, matching the serialized form.
class BlockPartition {
public:
    explicit BlockPartition(std::vector<int> sizes) : sizes_(std::move(sizes)) {
        if (sizes_.empty()) throw ShapeError("partition must have at least one block");
        offsets_.reserve(sizes_.size() + 1);
        offsets_.push_back(0);
        for (int s : sizes_) {
            if (s < 1) throw ShapeError("partition sizes must be positive");
            offsets_.push_back(offsets_.back() + s);
        }
    }

    int count() const { return static_cast<int>(sizes_.size()); }
    int total() const { return offsets_.back(); }

    int size(int j) const {
        check(j);
        return sizes_[static_cast<std::size_t>(j) - 1];
    }

    /// Entry offset of the first row/column of block j.
    int offset(int j) const {
        check(j);
        return offsets_[static_cast<std::size_t>(j) - 1];
    }

    /// Partition made of blocks from..from+count-1.
    BlockPartition slice(int from, int count) const {
        if (from < 1 || count < 1 || from + count - 1 > this->count())
            throw IndexOutOfRange("partition slice out of range", {from, count});
        return BlockPartition(std::vector<int>(sizes_.begin() + (from - 1), sizes_.begin() + (from - 1) + count));
    }

    BlockPartition erased(int j) const {
        check(j);
        if (count() < 2) throw DegenerateResult("cannot drop the only block of a partition");
        std::vector<int> s = sizes_;
        s.erase(s.begin() + (j - 1));
        return BlockPartition(std::move(s));
    }

    const std::vector<int>& sizes() const { return sizes_; }

    bool operator==(const BlockPartition& o) const { return sizes_ == o.sizes_; }
    bool operator!=(const BlockPartition& o) const { return !(*this == o); }

private:
    void check(int j) const {
        if (j < 1 || j > count())
            throw IndexOutOfRange("block index " + std::to_string(j) + " outside 1.." + std::to_string(count()),
                                  {j});
    }

    std::vector<int> sizes_;
    std::vector<int> offsets_;
};

/// A dense matrix together with row and column block partitions: block (j,k)
/// is the contiguous s_j x s_k sub-matrix. Block accessors copy; values are
/// immutable once built.
template <RingElement R>
class PartitionedMatrix {
public:
    PartitionedMatrix(Mat<R> data, BlockPartition row_partition, BlockPartition col_partition)
        : data_(std::move(data)), rowp_(std::move(row_partition)), colp_(std::move(col_partition)) {
        if (rowp_.total() != data_.rows() || colp_.total() != data_.cols())
            throw ShapeError("partition totals " + std::to_string(rowp_.total()) + "x" +
                             std::to_string(colp_.total()) + " do not match matrix " +
                             std::to_string(data_.rows()) + "x" + std::to_string(data_.cols()));
    }

    PartitionedMatrix(Mat<R> data, BlockPartition square_partition)
        : PartitionedMatrix(std::move(data), square_partition, square_partition) {}

    int n_block_rows() const { return rowp_.count(); }
    int n_block_cols() const { return colp_.count(); }
    const BlockPartition& row_partition() const { return rowp_; }
    const BlockPartition& col_partition() const { return colp_; }
    const Mat<R>& data() const { return data_; }

    Mat<R> block(int j, int k) const {
        check_block(j, k);
        return data_.sub(rowp_.offset(j), colp_.offset(k), rowp_.size(j), colp_.size(k));
    }

    /// Block sub-grid with rows v..v+j-1 and columns w..w+k-1, carrying the
    /// induced partitions.
    PartitionedMatrix sub_grid(int v, int w, int j, int k) const {
        if (v < 1 || w < 1 || j < 1 || k < 1 || v + j - 1 > n_block_rows() || w + k - 1 > n_block_cols())
            throw IndexOutOfRange("sub-grid rows " + std::to_string(v) + "+" + std::to_string(j) +
                                      " cols " + std::to_string(w) + "+" + std::to_string(k) + " out of range",
                                  {v, w, j, k});
        BlockPartition rp = rowp_.slice(v, j);
        BlockPartition cp = colp_.slice(w, k);
        Mat<R> sub = data_.sub(rowp_.offset(v), colp_.offset(w), rp.total(), cp.total());
        return PartitionedMatrix(std::move(sub), std::move(rp), std::move(cp));
    }

    /// The square k-by-k block grid anchored at (v, w).
    PartitionedMatrix square_sub_grid(int v, int w, int k) const { return sub_grid(v, w, k, k); }

    /// Leading k-by-k block grid.
    PartitionedMatrix leading_sub_grid(int k) const { return sub_grid(1, 1, k, k); }

    /// Grid with block row j and block column k removed.
    PartitionedMatrix delete_row_col(int j, int k) const {
        check_block(j, k);
        if (n_block_rows() < 2 || n_block_cols() < 2)
            throw DegenerateResult("deletion from a single block row or column");
        BlockPartition rp = rowp_.erased(j);
        BlockPartition cp = colp_.erased(k);
        const int r0 = rowp_.offset(j);
        const int r1 = r0 + rowp_.size(j);
        const int c0 = colp_.offset(k);
        const int c1 = c0 + colp_.size(k);
        Mat<R> sub = Mat<R>::generate(rp.total(), cp.total(), [&](int i, int c) {
            const int src_i = i < r0 ? i : i + (r1 - r0);
            const int src_c = c < c0 ? c : c + (c1 - c0);
            return data_.at(src_i, src_c);
        });
        return PartitionedMatrix(std::move(sub), std::move(rp), std::move(cp));
    }

    std::vector<Mat<R>> block_row(int j) const {
        check_block(j, 1);
        std::vector<Mat<R>> out;
        out.reserve(n_block_cols());
        for (int k = 1; k <= n_block_cols(); ++k) out.push_back(block(j, k));
        return out;
    }

    std::vector<Mat<R>> block_col(int k) const {
        check_block(1, k);
        std::vector<Mat<R>> out;
        out.reserve(n_block_rows());
        for (int j = 1; j <= n_block_rows(); ++j) out.push_back(block(j, k));
        return out;
    }

    /// Copy with block (j,k) replaced.
    PartitionedMatrix with_block(int j, int k, const Mat<R>& b) const {
        check_block(j, k);
        if (b.rows() != rowp_.size(j) || b.cols() != colp_.size(k))
            throw ShapeError("replacement block shape mismatch at (" + std::to_string(j) + ", " +
                                 std::to_string(k) + ")",
                             {j, k});
        Mat<R> data = data_;
        for (int i = 0; i < b.rows(); ++i)
            for (int c = 0; c < b.cols(); ++c) data.at(rowp_.offset(j) + i, colp_.offset(k) + c) = b.at(i, c);
        return PartitionedMatrix(std::move(data), rowp_, colp_);
    }

    /// Assemble from a block getter f(j, k) -> Mat.
    template <typename F>
    static PartitionedMatrix assemble(const BlockPartition& rowp, const BlockPartition& colp, F f) {
        Mat<R> first = f(1, 1);
        Mat<R> data = Mat<R>::zero(rowp.total(), colp.total(), first.at(0, 0));
        for (int j = 1; j <= rowp.count(); ++j) {
            for (int k = 1; k <= colp.count(); ++k) {
                Mat<R> b = (j == 1 && k == 1) ? first : f(j, k);
                if (b.rows() != rowp.size(j) || b.cols() != colp.size(k))
                    throw ShapeError("assembled block shape mismatch at (" + std::to_string(j) + ", " +
                                         std::to_string(k) + ")",
                                     {j, k});
                for (int i = 0; i < b.rows(); ++i)
                    for (int c = 0; c < b.cols(); ++c) data.at(rowp.offset(j) + i, colp.offset(k) + c) = b.at(i, c);
            }
        }
        return PartitionedMatrix(std::move(data), rowp, colp);
    }

    bool operator==(const PartitionedMatrix& o) const {
        return rowp_ == o.rowp_ && colp_ == o.colp_ && data_ == o.data_;
    }
    bool operator!=(const PartitionedMatrix& o) const { return !(*this == o); }

private:
    void check_block(int j, int k) const {
        if (j < 1 || j > n_block_rows() || k < 1 || k > n_block_cols())
            throw IndexOutOfRange("block (" + std::to_string(j) + ", " + std::to_string(k) + ") outside " +
                                      std::to_string(n_block_rows()) + "x" + std::to_string(n_block_cols()),
                                  {j, k});
    }

    Mat<R> data_;
    BlockPartition rowp_;
    BlockPartition colp_;
};

/// Structural predicate: every block strictly below the diagonal is zero
/// (exactly, or within tolerance for approximate rings). Requires equal row
/// and column partitions so the diagonal is well defined.
template <RingElement R>
bool is_block_upper_triangular(const PartitionedMatrix<R>& p) {
    if (p.row_partition() != p.col_partition())
        throw DimensionMismatch("triangularity needs equal row and column partitions");
    for (int j = 2; j <= p.n_block_rows(); ++j)
        for (int k = 1; k < j; ++k)
            if (!p.block(j, k).is_zero()) return false;
    return true;
}

inline PartitionedMatrix<FloatQuaternion> to_float(const PartitionedMatrix<ExactQuaternion>& p) {
    return PartitionedMatrix<FloatQuaternion>(to_float(p.data()), p.row_partition(), p.col_partition());
}

}  // namespace qdet
