#include "equispec/kernels.hpp"

#include <deque>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace equispec {

int max_threads() noexcept {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body, Execution exec) {
    if (exec == Execution::serial || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::exception_ptr failure;
    std::mutex guard;
    const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard<std::mutex> lock(guard);
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
}

namespace {

void row_sums_into(const Matrix& m, const std::vector<std::size_t>& labels, Matrix& table, std::size_t r) {
    auto out = table.row(r);
    const auto in = m.row(r);
    for (std::size_t j = 0; j < in.size(); ++j) out[labels[j]] += in[j];
}

std::vector<int> bfs_from(const std::vector<std::vector<std::size_t>>& adjacency, std::size_t source) {
    std::vector<int> dist(adjacency.size(), kUnreachable);
    std::deque<std::size_t> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t w : adjacency[v]) {
            if (dist[w] != kUnreachable) continue;
            dist[w] = dist[v] + 1;
            queue.push_back(w);
        }
    }
    return dist;
}

}  // namespace

Matrix block_row_sums(const Matrix& m, const std::vector<std::size_t>& labels, std::size_t label_count,
                      Execution exec) {
    if (labels.size() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "one label per column required");
    Matrix table(m.rows(), label_count);
    const auto rows = static_cast<long long>(m.rows());
    if (exec == Execution::serial) {
        for (long long r = 0; r < rows; ++r) row_sums_into(m, labels, table, static_cast<std::size_t>(r));
        return table;
    }
#pragma omp parallel for schedule(static)
    for (long long r = 0; r < rows; ++r) row_sums_into(m, labels, table, static_cast<std::size_t>(r));
    return table;
}

std::vector<std::vector<int>> all_pairs_distances(const std::vector<std::vector<std::size_t>>& adjacency,
                                                  Execution exec) {
    const std::size_t n = adjacency.size();
    std::vector<std::vector<int>> dist(n);
    if (exec == Execution::serial) {
        for (std::size_t s = 0; s < n; ++s) dist[s] = bfs_from(adjacency, s);
        return dist;
    }
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long long s = 0; s < count; ++s) dist[static_cast<std::size_t>(s)] = bfs_from(adjacency, static_cast<std::size_t>(s));
    return dist;
}

}  // namespace equispec
