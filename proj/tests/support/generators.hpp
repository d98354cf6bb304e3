#pragma once

// Seeded random instances for property and acceptance tests: rational
// quaternions with small components, invertible square matrices (rejection
// sampled), block triangular matrices, and Hessenberg grids.

#include <random>
#include <vector>

#include "qdet/block.hpp"
#include "qdet/inverse.hpp"
#include "qdet/matrix.hpp"
#include "qdet/quasidet.hpp"
#include "qdet/quaternion.hpp"
#include "qdet/rational.hpp"

namespace gen {

using qdet::BlockPartition;
using qdet::BlockTriangularMatrix;
using qdet::ExactQuaternion;
using qdet::HessenbergGrid;
using qdet::Mat;
using qdet::PartitionedMatrix;
using qdet::PerturbationBlock;
using qdet::Rational;

using Rng = std::mt19937_64;

inline Rational rnd_rational(Rng& rng) {
    std::uniform_int_distribution<long> num(-2, 2);
    std::uniform_int_distribution<long> den(1, 3);
    return Rational(num(rng), den(rng));
}

inline ExactQuaternion rnd_quat(Rng& rng) {
    return ExactQuaternion(rnd_rational(rng), rnd_rational(rng), rnd_rational(rng), rnd_rational(rng));
}

inline ExactQuaternion rnd_nonzero_quat(Rng& rng) {
    for (;;) {
        ExactQuaternion q = rnd_quat(rng);
        if (!q.is_zero()) return q;
    }
}

inline Mat<ExactQuaternion> rnd_mat(Rng& rng, int rows, int cols) {
    return Mat<ExactQuaternion>::generate(rows, cols, [&](int, int) { return rnd_quat(rng); });
}

inline Mat<ExactQuaternion> rnd_invertible(Rng& rng, int size) {
    for (;;) {
        Mat<ExactQuaternion> m = rnd_mat(rng, size, size);
        if (m.try_invert()) return m;
    }
}

inline BlockPartition rnd_partition(Rng& rng, int max_blocks = 8, int max_size = 3) {
    std::uniform_int_distribution<int> nblocks(1, max_blocks);
    std::uniform_int_distribution<int> bsize(1, max_size);
    const int n = nblocks(rng);
    std::vector<int> sizes;
    sizes.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) sizes.push_back(bsize(rng));
    return BlockPartition(std::move(sizes));
}

/// Random block triangular matrix: invertible diagonal blocks, random upper
/// blocks with some forced to zero to exercise sparsity in the formulas.
inline BlockTriangularMatrix<ExactQuaternion> rnd_triangular(Rng& rng, const BlockPartition& part) {
    std::bernoulli_distribution zero_block(0.15);
    const ExactQuaternion zero;
    auto grid = PartitionedMatrix<ExactQuaternion>::assemble(part, part, [&](int j, int k) {
        if (j > k || (j < k && zero_block(rng)))
            return Mat<ExactQuaternion>::zero(part.size(j), part.size(k), zero);
        if (j == k) return rnd_invertible(rng, part.size(j));
        return rnd_mat(rng, part.size(j), part.size(k));
    });
    return BlockTriangularMatrix<ExactQuaternion>::create(std::move(grid));
}

inline BlockTriangularMatrix<ExactQuaternion> rnd_triangular(Rng& rng, int max_blocks = 8, int max_size = 3) {
    return rnd_triangular(rng, rnd_partition(rng, max_blocks, max_size));
}

/// Random Hessenberg grid with n block rows: heights (s_0..s_{n-1}), widths
/// (s_1..s_n), invertible square subdiagonal blocks, zeros below them.
inline HessenbergGrid<ExactQuaternion> rnd_hessenberg(Rng& rng, int n, int max_size = 3) {
    std::uniform_int_distribution<int> bsize(1, max_size);
    std::vector<int> s;  // s_0..s_n
    s.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) s.push_back(bsize(rng));
    BlockPartition rows(std::vector<int>(s.begin(), s.end() - 1));
    BlockPartition cols(std::vector<int>(s.begin() + 1, s.end()));
    const ExactQuaternion zero;
    auto grid = PartitionedMatrix<ExactQuaternion>::assemble(rows, cols, [&](int r, int c) {
        if (r > c + 1) return Mat<ExactQuaternion>::zero(rows.size(r), cols.size(c), zero);
        if (r == c + 1) return rnd_invertible(rng, cols.size(c));
        return rnd_mat(rng, rows.size(r), cols.size(c));
    });
    return HessenbergGrid<ExactQuaternion>::create(std::move(grid));
}

/// Random perturbation for a matrix with the given partition; split drawn
/// uniformly from 1..n-1. Requires at least two blocks.
inline PerturbationBlock<ExactQuaternion> rnd_perturbation(Rng& rng, const BlockPartition& part) {
    const int n = part.count();
    std::uniform_int_distribution<int> split_dist(1, n - 1);
    const int l = split_dist(rng);
    BlockPartition rows = part.slice(1, l);
    BlockPartition cols = part.slice(l + 1, n - l);
    PartitionedMatrix<ExactQuaternion> grid(rnd_mat(rng, rows.total(), cols.total()), rows, cols);
    return PerturbationBlock<ExactQuaternion>::create(std::move(grid), l, part);
}

}  // namespace gen
