#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "equispec/matrix.hpp"

namespace equispec {

/// Set partition of {0, ..., n-1}. Indices are 0-based in the API and
/// 1-based in every text format.
///
/// Cells are kept canonical: each cell sorted ascending, cells ordered by
/// their smallest element.
class Partition {
public:
    using Cell = std::vector<std::size_t>;

    Partition() = default;
    /// Throws InvalidPartition unless `cells` is a partition of {0..n-1}.
    Partition(std::size_t n, std::vector<Cell> cells);

    static Partition trivial(std::size_t n);
    static Partition discrete(std::size_t n);
    /// Builds from a block label per element (labels need not be contiguous).
    static Partition from_labels(const std::vector<std::size_t>& labels);

    std::size_t size() const noexcept { return n_; }
    std::size_t cell_count() const noexcept { return cells_.size(); }
    const std::vector<Cell>& cells() const noexcept { return cells_; }
    const Cell& cell(std::size_t i) const { return cells_.at(i); }
    std::size_t cell_of(std::size_t element) const { return owner_.at(element); }
    bool is_discrete() const noexcept { return cells_.size() == n_; }

    /// "{1} {2 3 4}" with 1-based indices.
    std::string to_string() const;

    bool operator==(const Partition& other) const { return n_ == other.n_ && cells_ == other.cells_; }
    std::strong_ordering operator<=>(const Partition& other) const;

private:
    std::size_t n_ = 0;
    std::vector<Cell> cells_;
    std::vector<std::size_t> owner_;
};

/// n x k 0/1 matrix whose column j is the indicator of cell j.
Matrix characteristic_matrix(const Partition& p);

struct QuotientResult {
    Matrix quotient;
    bool equitable = false;
    double max_row_sum_deviation = 0.0;
    /// row_sum_table[i][j]: block row sums of every row of cell i into cell j.
    std::vector<std::vector<std::vector<double>>> row_sum_table;
    double tolerance = 0.0;
};

inline constexpr double kDefaultEquitableScale = 1e-8;

/// 1e-8 * max(1, ||m||_inf).
double default_equitable_tolerance(const Matrix& m);

/// Averaged row-sum quotient; `tol == 0` selects the default.
QuotientResult quotient(const Matrix& m, const Partition& p, double tol = 0.0);

/// One signature sweep: splits every cell by the rows' sums into the current cells.
Partition refine_once(const Matrix& m, const Partition& p, double tol = 0.0);

/// Iterates refine_once to its fixed point.
Partition coarsest_equitable_refinement(const Matrix& m, const Partition& seed, double tol = 0.0);

/// Replaces cell `cell_index` by {element} and the rest of the cell.
Partition split_cell(const Partition& p, std::size_t cell_index, std::size_t element);

/// True iff every cell of p lies inside a cell of q.
bool refines(const Partition& p, const Partition& q);

inline constexpr std::size_t kMaxEnumerationOrder = 10;

std::uint64_t bell_number(std::size_t n);

/// Lazily yields every set partition of {0..n-1} once, in restricted growth
/// string order. Throws OrderTooLarge for n > 10.
class PartitionEnumerator {
public:
    explicit PartitionEnumerator(std::size_t n);
    std::optional<Partition> next();

private:
    std::size_t n_;
    std::vector<std::size_t> rgs_;
    std::vector<std::size_t> prefix_max_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<Partition> enumerate_partitions(std::size_t n);

}  // namespace equispec
