#pragma once

// The worked 8x8 quaternion example: a 5-block upper triangular matrix with
// partition (1, 2, 1, 3, 1), its known inverse blocks, and the off-diagonal
// perturbation at split 3 with its known effect on block (1,5).

#include <map>
#include <utility>
#include <vector>

#include "qdet/block.hpp"
#include "qdet/inverse.hpp"
#include "qdet/matrix.hpp"
#include "qdet/quaternion.hpp"
#include "qdet/rational.hpp"

namespace fixtures {

using qdet::BlockPartition;
using qdet::BlockTriangularMatrix;
using qdet::ExactQuaternion;
using qdet::Mat;
using qdet::PartitionedMatrix;
using qdet::PerturbationBlock;
using qdet::Rational;

inline Rational frac(long p, long q) { return Rational(p, q); }

inline ExactQuaternion q(Rational a, Rational b, Rational c, Rational d) {
    return ExactQuaternion(std::move(a), std::move(b), std::move(c), std::move(d));
}

using QMat = Mat<ExactQuaternion>;

inline QMat qrow(std::vector<ExactQuaternion> entries) {
    const int n = static_cast<int>(entries.size());
    return QMat(1, n, std::move(entries));
}

inline QMat qcol(std::vector<ExactQuaternion> entries) {
    const int n = static_cast<int>(entries.size());
    return QMat(n, 1, std::move(entries));
}

inline BlockTriangularMatrix<ExactQuaternion> example_matrix() {
    const BlockPartition part({1, 2, 1, 3, 1});
    const ExactQuaternion zero;
    std::map<std::pair<int, int>, QMat> blocks;
    blocks.emplace(std::make_pair(1, 1), qrow({q(0, 1, 0, 1)}));
    blocks.emplace(std::make_pair(1, 2), qrow({q(1, 1, -2, 1), q(2, -1, 0, 0)}));
    blocks.emplace(std::make_pair(1, 3), qrow({q(2, -3, 0, 4)}));
    blocks.emplace(std::make_pair(1, 4), qrow({q(3, 2, -5, -1), q(2, 0, -1, 0), q(4, 0, 0, 0)}));
    blocks.emplace(std::make_pair(1, 5), qrow({q(2, 0, 0, 1)}));
    blocks.emplace(std::make_pair(2, 2), QMat::from_rows({{q(0, 1, 0, 0), q(0, 0, 1, 0)},
                                                          {q(1, 0, 0, 0), q(0, 0, 0, 1)}}));
    blocks.emplace(std::make_pair(2, 3), qcol({q(1, 0, 0, 1), q(3, -1, 1, 0)}));
    blocks.emplace(std::make_pair(2, 4),
                   QMat::from_rows({{q(0, 1, -1, 0), q(5, 1, 0, -1), q(4, -1, 0, 0)},
                                    {q(4, 0, 2, 1), q(4, 0, 0, 0), q(2, -3, 1, 2)}}));
    blocks.emplace(std::make_pair(2, 5), qcol({q(3, 0, 1, 0), q(1, 0, 1, -1)}));
    blocks.emplace(std::make_pair(3, 3), qrow({q(2, 1, 0, -1)}));
    blocks.emplace(std::make_pair(3, 4), qrow({q(0, 0, -1, 2), q(0, 3, -1, 2), q(6, 0, 0, -4)}));
    blocks.emplace(std::make_pair(3, 5), qrow({q(1, 1, 0, 0)}));
    blocks.emplace(std::make_pair(4, 4),
                   QMat::from_rows({{q(1, 0, 0, 0), ExactQuaternion(), q(0, 1, 0, 0)},
                                    {q(1, 0, 0, -1), q(0, 0, 1, 0), ExactQuaternion()},
                                    {q(0, 0, 0, 1), ExactQuaternion(), ExactQuaternion()}}));
    blocks.emplace(std::make_pair(4, 5), qcol({q(2, 0, 1, 0), q(1, -1, 0, 0), q(0, 0, 0, 5)}));
    blocks.emplace(std::make_pair(5, 5), qrow({q(1, 2, 1, -1)}));

    auto grid = PartitionedMatrix<ExactQuaternion>::assemble(part, part, [&](int j, int k) {
        auto it = blocks.find({j, k});
        if (it != blocks.end()) return it->second;
        return QMat::zero(part.size(j), part.size(k), zero);
    });
    return BlockTriangularMatrix<ExactQuaternion>::create(std::move(grid));
}

/// Known blocks of the example inverse.
inline std::map<std::pair<int, int>, QMat> example_inverse_blocks() {
    std::map<std::pair<int, int>, QMat> expect;
    expect.emplace(std::make_pair(1, 1), qrow({q(0, frac(-1, 2), 0, frac(-1, 2))}));
    expect.emplace(std::make_pair(2, 2),
                   QMat::from_rows({{q(0, frac(-1, 2), 0, 0), q(frac(1, 2), 0, 0, 0)},
                                    {q(0, 0, frac(-1, 2), 0), q(0, 0, 0, frac(-1, 2))}}));
    expect.emplace(std::make_pair(3, 3), qrow({q(frac(1, 3), frac(-1, 6), 0, frac(1, 6))}));
    expect.emplace(std::make_pair(4, 4),
                   QMat::from_rows({{ExactQuaternion(), ExactQuaternion(), q(0, 0, 0, -1)},
                                    {ExactQuaternion(), q(0, 0, -1, 0), q(0, -1, -1, 0)},
                                    {q(0, -1, 0, 0), ExactQuaternion(), q(0, 0, 1, 0)}}));
    expect.emplace(std::make_pair(5, 5), qrow({q(frac(1, 7), frac(-2, 7), frac(-1, 7), frac(1, 7))}));
    expect.emplace(std::make_pair(1, 2),
                   qrow({q(frac(1, 2), 1, 0, frac(-1, 2)), q(0, 1, frac(1, 2), frac(-1, 2))}));
    expect.emplace(std::make_pair(4, 5),
                   qcol({q(frac(-5, 7), frac(10, 7), frac(5, 7), frac(-5, 7)),
                         q(frac(5, 7), frac(2, 7), frac(-11, 7), frac(-12, 7)),
                         q(-1, frac(-2, 7), frac(1, 7), frac(4, 7))}));
    expect.emplace(std::make_pair(1, 3),
                   qrow({q(frac(-17, 12), frac(-19, 12), frac(-13, 12), frac(-3, 4))}));
    expect.emplace(std::make_pair(1, 5),
                   qrow({q(frac(-1033, 84), frac(1051, 84), frac(193, 84), frac(701, 28))}));
    return expect;
}

/// The perturbation at split 3: rows cover blocks 1..3, columns blocks 4..5.
inline PerturbationBlock<ExactQuaternion> example_perturbation() {
    const ExactQuaternion i = q(0, 1, 0, 0);
    const ExactQuaternion j = q(0, 0, 1, 0);
    const ExactQuaternion k = q(0, 0, 0, 1);
    const ExactQuaternion ijk = q(0, 1, 1, 1);
    Mat<ExactQuaternion> data = QMat::from_rows({{i, i, i, i},
                                                 {j, j, j, j},
                                                 {ijk, ijk, ijk, ijk},
                                                 {k, k, k, k}});
    PartitionedMatrix<ExactQuaternion> grid(std::move(data), BlockPartition({1, 2, 1}),
                                            BlockPartition({3, 1}));
    return PerturbationBlock<ExactQuaternion>::create(std::move(grid), 3, BlockPartition({1, 2, 1, 3, 1}));
}

inline ExactQuaternion expected_delta_15() {
    return q(frac(10, 21), frac(1, 7), frac(-11, 21), frac(20, 21));
}

}  // namespace fixtures
