#include <doctest.h>

#include <atomic>
#include <random>

#include "equispec/graph.hpp"
#include "equispec/kernels.hpp"

using namespace equispec;

TEST_CASE("for_each_index visits every index once") {
    for (auto exec : {Execution::serial, Execution::parallel}) {
        std::vector<std::atomic<int>> hits(257);
        for_each_index(hits.size(), [&](std::size_t i) { hits[i]++; }, exec);
        for (const auto& h : hits) CHECK(h.load() == 1);
    }
    for_each_index(0, [](std::size_t) { FAIL("no calls expected"); });
}

TEST_CASE("for_each_index rethrows") {
    for (auto exec : {Execution::serial, Execution::parallel}) {
        CHECK_THROWS_AS(for_each_index(
                            50,
                            [](std::size_t i) {
                                if (i == 17) throw Error(ErrorCode::InvalidParams, "boom");
                            },
                            exec),
                        Error);
    }
}

TEST_CASE("block row sums match between serial and parallel") {
    std::mt19937 rng(12);
    std::normal_distribution<double> d;
    for (std::size_t n : {1u, 5u, 33u, 120u}) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
        std::vector<std::size_t> labels(n);
        for (std::size_t j = 0; j < n; ++j) labels[j] = (j * 7) % 4;
        const Matrix serial = block_row_sums(m, labels, 4, Execution::serial);
        const Matrix parallel = block_row_sums(m, labels, 4, Execution::parallel);
        CHECK(serial == parallel);
        for (std::size_t r = 0; r < n; ++r) {
            double total = 0.0, row = 0.0;
            for (std::size_t c = 0; c < 4; ++c) total += serial(r, c);
            for (std::size_t j = 0; j < n; ++j) row += m(r, j);
            CHECK(total == doctest::Approx(row));
        }
    }
    CHECK_THROWS_AS(block_row_sums(Matrix(2, 2), {0}, 1), Error);
}

TEST_CASE("all pairs distances match between serial and parallel") {
    for (int a = 2; a <= 20; a += 3) {
        const Graph g = pendant_k3(a);
        const auto serial = all_pairs_distances(g.neighbours(), Execution::serial);
        CHECK(serial == all_pairs_distances(g.neighbours(), Execution::parallel));
        CHECK(serial[0][3] == 1);
        CHECK(serial[3][g.order() - 1] == 3);
        CHECK(serial[3][4] == 2);
    }
    const std::vector<std::vector<std::size_t>> split{{1}, {0}, {}};
    const auto d = all_pairs_distances(split);
    CHECK(d[0][2] == kUnreachable);
    CHECK(d[2][2] == 0);
    CHECK(max_threads() >= 1);
}
