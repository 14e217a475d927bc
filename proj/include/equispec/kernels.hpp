#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "equispec/matrix.hpp"

namespace equispec {

/// Selects between the OpenMP kernels and their serial references.
enum class Execution { serial, parallel };

/// Calls body(i) for i in [0, count). With Execution::parallel the calls are
/// spread over OpenMP threads; the first exception thrown is rethrown.
void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body,
                    Execution exec = Execution::parallel);

/// table(r, c) = sum of m(r, j) over j with labels[j] == c.
Matrix block_row_sums(const Matrix& m, const std::vector<std::size_t>& labels, std::size_t label_count,
                      Execution exec = Execution::parallel);

inline constexpr int kUnreachable = -1;

/// Breadth-first distances from every vertex; kUnreachable marks no path.
std::vector<std::vector<int>> all_pairs_distances(const std::vector<std::vector<std::size_t>>& adjacency,
                                                  Execution exec = Execution::parallel);

int max_threads() noexcept;

}  // namespace equispec
