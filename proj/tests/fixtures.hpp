#pragma once

#include "equispec/matrix.hpp"
#include "equispec/partition.hpp"

namespace fixtures {

using equispec::Matrix;
using equispec::Partition;

// 4x4 with an equitable 2-cell partition whose quotient misses 11 and -15.
inline Matrix counterexample() {
    return Matrix{{10, -1, -1, -4}, {-1, 10, -1, -4}, {6, 6, -14, 1}, {6, 6, 1, -14}};
}

inline Matrix three_by_three() { return Matrix{{1, -4, -4}, {4, 9, 4}, {4, 4, 9}}; }

inline Matrix k23_adjacency() {
    return Matrix{{0, 0, 1, 1, 1}, {0, 0, 1, 1, 1}, {1, 1, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 1, 0, 0, 0}};
}

inline Matrix block_diagonal() {
    return Matrix{{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 1.5, -0.5}, {0, 0, -0.5, 1.5}};
}

inline Partition pairs() { return Partition(4, {{0, 1}, {2, 3}}); }

}  // namespace fixtures
