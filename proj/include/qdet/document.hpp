#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qdet/block.hpp"
#include "qdet/errors.hpp"
#include "qdet/matrix.hpp"
#include "qdet/quaternion.hpp"

namespace qdet {

enum class RingTag { quaternion_rational, quaternion_float };

std::string to_string(RingTag tag);

/// Parsed matrix document: ring tag, row partition, column partition (equal
/// to the row partition when the document omits it), and the present blocks
/// keyed by 1-based (row, col). Omitted blocks are zero.
template <typename Q>
struct TypedDocument {
    BlockPartition rows;
    BlockPartition cols;
    bool explicit_col_partition = false;
    std::map<std::pair<int, int>, Mat<Q>> blocks;

    TypedDocument(BlockPartition r, BlockPartition c, bool explicit_cols)
        : rows(std::move(r)), cols(std::move(c)), explicit_col_partition(explicit_cols) {}

    /// Dense grid with zeros in place of omitted blocks.
    PartitionedMatrix<Q> to_grid() const {
        const Q zero{};
        Mat<Q> data = Mat<Q>::zero(rows.total(), cols.total(), zero);
        for (const auto& [key, b] : blocks)
            for (int i = 0; i < b.rows(); ++i)
                for (int c = 0; c < b.cols(); ++c)
                    data.at(rows.offset(key.first) + i, cols.offset(key.second) + c) = b.at(i, c);
        return PartitionedMatrix<Q>(std::move(data), rows, cols);
    }

    static TypedDocument from_grid(const PartitionedMatrix<Q>& grid, bool include_zero_blocks = false) {
        TypedDocument doc(grid.row_partition(), grid.col_partition(),
                          grid.row_partition() != grid.col_partition());
        for (int j = 1; j <= grid.n_block_rows(); ++j)
            for (int k = 1; k <= grid.n_block_cols(); ++k) {
                Mat<Q> b = grid.block(j, k);
                if (include_zero_blocks || !b.is_zero()) doc.blocks.emplace(std::make_pair(j, k), std::move(b));
            }
        return doc;
    }
};

using ExactDocument = TypedDocument<ExactQuaternion>;
using FloatDocument = TypedDocument<FloatQuaternion>;
using Document = std::variant<ExactDocument, FloatDocument>;

RingTag ring_tag(const Document& doc);

/// Parse a JSON matrix document. Exact documents take integer or "p/q"
/// string components; float documents take JSON numbers. A representation
/// inconsistent with the ring tag is rejected.
Document parse_document(const std::string& text);

/// Canonical serialization: 2-space indented JSON, keys in a fixed order,
/// block keys in (row, col) order, each block a row-major array of 4-element
/// component arrays, exact components as reduced "p/q" (or "p") strings.
std::string serialize_document(const ExactDocument& doc);
std::string serialize_document(const FloatDocument& doc);

/// Canonical compact form of a single block, as it appears inside a
/// serialized document.
std::string serialize_block(const Mat<ExactQuaternion>& block);
std::string serialize_block(const Mat<FloatQuaternion>& block);

}  // namespace qdet
