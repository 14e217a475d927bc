#include "equispec/partition.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "equispec/kernels.hpp"

namespace equispec {

Partition::Partition(std::size_t n, std::vector<Cell> cells) : n_(n), cells_(std::move(cells)) {
    if (n_ == 0) throw Error(ErrorCode::InvalidPartition, "partition of an empty set");
    owner_.assign(n_, n_);
    for (auto& c : cells_) {
        if (c.empty()) throw Error(ErrorCode::InvalidPartition, "empty cell");
        std::sort(c.begin(), c.end());
    }
    std::sort(cells_.begin(), cells_.end(), [](const Cell& a, const Cell& b) { return a.front() < b.front(); });
    for (std::size_t k = 0; k < cells_.size(); ++k) {
        for (std::size_t e : cells_[k]) {
            if (e >= n_) {
                throw Error(ErrorCode::InvalidPartition,
                            "index " + std::to_string(e + 1) + " outside 1.." + std::to_string(n_));
            }
            if (owner_[e] != n_) {
                throw Error(ErrorCode::InvalidPartition, "index " + std::to_string(e + 1) + " appears twice");
            }
            owner_[e] = k;
        }
    }
    for (std::size_t e = 0; e < n_; ++e) {
        if (owner_[e] == n_) throw Error(ErrorCode::InvalidPartition, "index " + std::to_string(e + 1) + " missing");
    }
}

Partition Partition::trivial(std::size_t n) {
    Cell all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    return Partition(n, {all});
}

Partition Partition::discrete(std::size_t n) {
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < n; ++i) cells.push_back({i});
    return Partition(n, std::move(cells));
}

Partition Partition::from_labels(const std::vector<std::size_t>& labels) {
    std::map<std::size_t, Cell> groups;
    for (std::size_t i = 0; i < labels.size(); ++i) groups[labels[i]].push_back(i);
    std::vector<Cell> cells;
    for (auto& [label, cell] : groups) cells.push_back(std::move(cell));
    return Partition(labels.size(), std::move(cells));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < cells_.size(); ++k) {
        if (k) os << ' ';
        os << '{';
        for (std::size_t i = 0; i < cells_[k].size(); ++i) os << (i ? " " : "") << cells_[k][i] + 1;
        os << '}';
    }
    return os.str();
}

std::strong_ordering Partition::operator<=>(const Partition& other) const {
    if (auto c = n_ <=> other.n_; c != 0) return c;
    return cells_ <=> other.cells_;
}

Matrix characteristic_matrix(const Partition& p) {
    Matrix out(p.size(), p.cell_count());
    for (std::size_t k = 0; k < p.cell_count(); ++k)
        for (std::size_t e : p.cell(k)) out(e, k) = 1.0;
    return out;
}

double default_equitable_tolerance(const Matrix& m) { return kDefaultEquitableScale * std::max(1.0, norm_inf(m)); }

namespace {

void require_same_order(const Matrix& m, const Partition& p) {
    require_valid_square(m, "partition analysis");
    if (p.size() != m.rows()) {
        throw Error(ErrorCode::DimensionMismatch, "partition covers " + std::to_string(p.size()) +
                                                      " indices but the matrix has order " + std::to_string(m.rows()));
    }
}

std::vector<std::size_t> labels_of(const Partition& p) {
    std::vector<std::size_t> labels(p.size());
    for (std::size_t e = 0; e < p.size(); ++e) labels[e] = p.cell_of(e);
    return labels;
}

double resolve(const Matrix& m, double tol) { return tol > 0.0 ? tol : default_equitable_tolerance(m); }

}  // namespace

QuotientResult quotient(const Matrix& m, const Partition& p, double tol) {
    require_same_order(m, p);
    tol = resolve(m, tol);
    const std::size_t k = p.cell_count();
    const Matrix sums = block_row_sums(m, labels_of(p), k, Execution::serial);

    QuotientResult out;
    out.tolerance = tol;
    out.quotient = Matrix(k, k);
    out.row_sum_table.assign(k, std::vector<std::vector<double>>(k));
    for (std::size_t i = 0; i < k; ++i) {
        const auto& cell = p.cell(i);
        for (std::size_t j = 0; j < k; ++j) {
            auto& entry = out.row_sum_table[i][j];
            double total = 0.0;
            for (std::size_t r : cell) {
                entry.push_back(sums(r, j));
                total += sums(r, j);
                // deviation is measured against the cell's first row, the same anchor refinement uses
                out.max_row_sum_deviation = std::max(out.max_row_sum_deviation, std::abs(sums(r, j) - sums(cell.front(), j)));
            }
            out.quotient(i, j) = total / static_cast<double>(cell.size());
        }
    }
    out.equitable = out.max_row_sum_deviation <= tol;
    return out;
}

Partition refine_once(const Matrix& m, const Partition& p, double tol) {
    require_same_order(m, p);
    tol = resolve(m, tol);
    const std::size_t k = p.cell_count();
    const Matrix sums = block_row_sums(m, labels_of(p), k, Execution::serial);

    std::vector<Partition::Cell> cells;
    for (const auto& cell : p.cells()) {
        std::vector<Partition::Cell> groups;
        for (std::size_t r : cell) {
            auto match = std::find_if(groups.begin(), groups.end(), [&](const Partition::Cell& g) {
                const std::size_t anchor = g.front();
                for (std::size_t j = 0; j < k; ++j)
                    if (std::abs(sums(r, j) - sums(anchor, j)) > tol) return false;
                return true;
            });
            if (match == groups.end()) {
                groups.push_back({r});
            } else {
                match->push_back(r);
            }
        }
        for (auto& g : groups) cells.push_back(std::move(g));
    }
    return Partition(p.size(), std::move(cells));
}

Partition coarsest_equitable_refinement(const Matrix& m, const Partition& seed, double tol) {
    Partition current = seed;
    for (;;) {
        Partition next = refine_once(m, current, tol);
        if (next.cell_count() == current.cell_count()) return next;
        current = std::move(next);
    }
}

Partition split_cell(const Partition& p, std::size_t cell_index, std::size_t element) {
    if (cell_index >= p.cell_count()) {
        throw Error(ErrorCode::ElementNotInCell, "cell " + std::to_string(cell_index + 1) + " does not exist");
    }
    const auto& cell = p.cell(cell_index);
    if (!std::binary_search(cell.begin(), cell.end(), element)) {
        throw Error(ErrorCode::ElementNotInCell, "element " + std::to_string(element + 1) + " is not in cell " +
                                                     std::to_string(cell_index + 1));
    }
    if (cell.size() < 2) throw Error(ErrorCode::CellTooSmall, "cannot split a singleton cell");
    std::vector<Partition::Cell> cells;
    for (std::size_t k = 0; k < p.cell_count(); ++k) {
        if (k != cell_index) {
            cells.push_back(p.cell(k));
            continue;
        }
        Partition::Cell rest;
        for (std::size_t e : cell)
            if (e != element) rest.push_back(e);
        cells.push_back({element});
        cells.push_back(std::move(rest));
    }
    return Partition(p.size(), std::move(cells));
}

bool refines(const Partition& p, const Partition& q) {
    if (p.size() != q.size()) {
        throw Error(ErrorCode::SizeMismatch,
                    "partitions of " + std::to_string(p.size()) + " and " + std::to_string(q.size()) + " elements");
    }
    for (const auto& cell : p.cells()) {
        const std::size_t home = q.cell_of(cell.front());
        for (std::size_t e : cell)
            if (q.cell_of(e) != home) return false;
    }
    return true;
}

std::uint64_t bell_number(std::size_t n) {
    // Bell triangle
    std::vector<std::uint64_t> row{1};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::uint64_t> next{row.back()};
        for (std::uint64_t v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.front();
}

PartitionEnumerator::PartitionEnumerator(std::size_t n) : n_(n) {
    if (n == 0) throw Error(ErrorCode::InvalidParams, "enumeration needs n >= 1");
    if (n > kMaxEnumerationOrder) {
        throw Error(ErrorCode::OrderTooLarge, "enumeration supports n <= " + std::to_string(kMaxEnumerationOrder) +
                                                  ", got " + std::to_string(n));
    }
    rgs_.assign(n_, 0);
    prefix_max_.assign(n_, 0);
}

std::optional<Partition> PartitionEnumerator::next() {
    if (done_) return std::nullopt;
    if (started_) {
        // rightmost position that can still grow: rgs[i] <= max(rgs[0..i-1])
        std::size_t i = n_;
        while (i-- > 1) {
            if (rgs_[i] <= prefix_max_[i - 1]) break;
        }
        if (i == 0 || i >= n_) {
            done_ = true;
            return std::nullopt;
        }
        ++rgs_[i];
        prefix_max_[i] = std::max(prefix_max_[i - 1], rgs_[i]);
        for (std::size_t j = i + 1; j < n_; ++j) {
            rgs_[j] = 0;
            prefix_max_[j] = prefix_max_[i];
        }
    }
    started_ = true;
    return Partition::from_labels(rgs_);
}

std::vector<Partition> enumerate_partitions(std::size_t n) {
    PartitionEnumerator it(n);
    std::vector<Partition> out;
    while (auto p = it.next()) out.push_back(std::move(*p));
    return out;
}

}  // namespace equispec
