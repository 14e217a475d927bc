#include <doctest.h>

#include <random>
#include <set>

#include "equispec/constructions.hpp"
#include "equispec/graph.hpp"
#include "equispec/partition.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace equispec;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an equispec::Error");
    return ErrorCode::ParseError;
}

Matrix random_integer_matrix(std::mt19937& rng, std::size_t n, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
    return m;
}

// Random matrix with a planted equitable partition, so refinement has nontrivial structure to find.
Matrix planted_matrix(std::mt19937& rng, const Partition& p) {
    const std::size_t n = p.size();
    std::uniform_int_distribution<int> d(0, 3);
    Matrix m(n, n);
    for (const auto& ci : p.cells())
        for (const auto& cj : p.cells()) {
            // each row of ci gets the same multiset of entries into cj, shuffled
            std::vector<int> pattern(cj.size());
            for (auto& v : pattern) v = d(rng);
            for (std::size_t r : ci) {
                std::shuffle(pattern.begin(), pattern.end(), rng);
                for (std::size_t k = 0; k < cj.size(); ++k) m(r, cj[k]) = pattern[k];
            }
        }
    return m;
}

}  // namespace

TEST_CASE("partition construction and canonical order") {
    const Partition p(4, {{3, 2}, {1, 0}});
    CHECK(p.cells() == std::vector<Partition::Cell>{{0, 1}, {2, 3}});
    CHECK(p.to_string() == "{1 2} {3 4}");
    CHECK(p.cell_of(3) == 1);
    CHECK(Partition::from_labels({7, 3, 7, 3}) == Partition(4, {{0, 2}, {1, 3}}));
    CHECK(Partition::trivial(3).cell_count() == 1);
    CHECK(Partition::discrete(3).is_discrete());

    CHECK(code_of([] { Partition(3, {{0, 1}}); }) == ErrorCode::InvalidPartition);
    CHECK(code_of([] { Partition(3, {{0, 1}, {1, 2}}); }) == ErrorCode::InvalidPartition);
    CHECK(code_of([] { Partition(3, {{0, 1, 2}, {}}); }) == ErrorCode::InvalidPartition);
    CHECK(code_of([] { Partition(2, {{0, 5}}); }) == ErrorCode::InvalidPartition);
}

TEST_CASE("characteristic matrix examples") {
    CHECK(characteristic_matrix(fixtures::pairs()) == Matrix{{1, 0}, {1, 0}, {0, 1}, {0, 1}});
    CHECK(characteristic_matrix(Partition::discrete(5)) == Matrix::identity(5));
    const Matrix p3 = characteristic_matrix(Partition(4, {{0}, {1}, {2, 3}}));
    CHECK(p3 == Matrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 1}});
}

TEST_CASE("quotient examples") {
    const auto q = quotient(fixtures::counterexample(), fixtures::pairs());
    CHECK(q.equitable);
    CHECK(q.quotient == Matrix{{9, -5}, {12, -13}});
    CHECK(q.max_row_sum_deviation == 0.0);

    const auto mp = family_m_prime(5);
    const auto q5 = quotient(mp.matrix, Partition(5, {{0}, {1, 2, 3, 4}}));
    CHECK(q5.equitable);
    CHECK(q5.quotient == Matrix{{1, -8}, {2, 11}});

    const Matrix uneven{{1, 2}, {3, 5}};
    const auto q1 = quotient(uneven, Partition::trivial(2));
    CHECK_FALSE(q1.equitable);
    CHECK(q1.quotient == Matrix{{5.5}});
    CHECK(q1.max_row_sum_deviation == doctest::Approx(5.0));
}

TEST_CASE("quotient row sum table") {
    const auto q = quotient(fixtures::counterexample(), fixtures::pairs());
    REQUIRE(q.row_sum_table.size() == 2);
    CHECK(q.row_sum_table[1][0] == std::vector<double>{12, 12});
    CHECK(q.row_sum_table[0][1] == std::vector<double>{-5, -5});
}

TEST_CASE("quotient tolerance is honoured") {
    const Matrix m{{1, 1e-9}, {1, 0}};
    CHECK(quotient(m, Partition::trivial(2)).equitable);
    CHECK_FALSE(quotient(m, Partition::trivial(2), 1e-12).equitable);
    CHECK(code_of([] { quotient(Matrix::identity(3), Partition::trivial(2)); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("coarsest refinement examples") {
    for (int n = 3; n <= 9; ++n) {
        const auto mp = family_m_prime(n);
        std::vector<std::size_t> rest;
        for (int i = 1; i < n; ++i) rest.push_back(static_cast<std::size_t>(i));
        CHECK(coarsest_equitable_refinement(mp.matrix, Partition::trivial(n)) ==
              Partition(static_cast<std::size_t>(n), {{0}, rest}));
    }

    for (int a = 2; a <= 5; ++a) {
        const Graph g = pendant_k3(a);
        const Matrix adj = graph_matrix(g, GraphMatrixKind::adjacency);
        CHECK(coarsest_equitable_refinement(adj, Partition::trivial(g.order())) == designated_partition(g));
    }

    CHECK(coarsest_equitable_refinement(Matrix::identity(6), Partition::trivial(6)) == Partition::trivial(6));
}

TEST_CASE("split_cell examples") {
    const Partition p(4, {{0}, {1, 2, 3}});
    CHECK(split_cell(p, 1, 1) == Partition(4, {{0}, {1}, {2, 3}}));
    CHECK(split_cell(fixtures::pairs(), 0, 0) == Partition(4, {{0}, {1}, {2, 3}}));

    const Graph g = pendant_k3(4);
    const Partition seed = designated_partition(g);
    const Partition enlarged = split_cell(seed, 3, 3);
    CHECK(enlarged.to_string() == "{1} {2} {3} {4} {5 6 7} {8}");

    CHECK(code_of([&] { split_cell(p, 1, 0); }) == ErrorCode::ElementNotInCell);
    CHECK(code_of([&] { split_cell(p, 0, 0); }) == ErrorCode::CellTooSmall);
}

TEST_CASE("refines examples") {
    CHECK(refines(Partition::discrete(3), Partition(3, {{0, 1}, {2}})));
    CHECK_FALSE(refines(Partition(3, {{0, 1}, {2}}), Partition(3, {{0}, {1, 2}})));
    const Partition p(5, {{0, 3}, {1}, {2, 4}});
    CHECK(refines(p, p));
    CHECK(code_of([] { refines(Partition::trivial(2), Partition::trivial(3)); }) == ErrorCode::SizeMismatch);
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate_partitions(1) == std::vector<Partition>{Partition::trivial(1)});
    CHECK(enumerate_partitions(3).size() == 5);
    CHECK(enumerate_partitions(4).size() == 15);
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto all = enumerate_partitions(n);
        CHECK(all.size() == bell_number(n));
        CHECK(std::set<Partition>(all.begin(), all.end()).size() == all.size());
    }
    CHECK(bell_number(10) == 115975);
    CHECK(code_of([] { PartitionEnumerator(11); }) == ErrorCode::OrderTooLarge);
}

TEST_CASE("equitable quotient satisfies MP = PQ") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t n = 2 + trial % 7;
        const Partition planted = oracle::random_partition(rng, n);
        const Matrix m = planted_matrix(rng, planted);
        const auto q = quotient(m, planted);
        REQUIRE(q.equitable);
        CHECK(oracle::equitable(m, planted, 1e-12));
        const Matrix p = characteristic_matrix(planted);
        CHECK(norm_inf(m * p - p * q.quotient) <= q.tolerance);
    }
}

TEST_CASE("discrete quotient is the matrix itself") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix m = random_integer_matrix(rng, 1 + trial % 6, -9, 9);
        const auto q = quotient(m, Partition::discrete(m.rows()));
        CHECK(q.equitable);
        CHECK(q.quotient == m);
    }
}

TEST_CASE("split_cell refines and adds one cell") {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + trial % 8;
        const Partition p = oracle::random_partition(rng, n);
        for (std::size_t c = 0; c < p.cell_count(); ++c) {
            if (p.cell(c).size() < 2) continue;
            for (std::size_t e : p.cell(c)) {
                const Partition s = split_cell(p, c, e);
                CHECK(refines(s, p));
                CHECK(s.cell_count() == p.cell_count() + 1);
            }
        }
    }
}

TEST_CASE("coarsest refinement agrees with brute force") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 1 + trial % 7;
        const Partition seed = trial % 3 == 0 ? Partition::trivial(n) : oracle::random_partition(rng, n);
        const Matrix m = trial % 2 ? planted_matrix(rng, oracle::random_partition(rng, n))
                                   : random_integer_matrix(rng, n, 0, 1);
        const double tol = default_equitable_tolerance(m);
        const Partition r = coarsest_equitable_refinement(m, seed);
        CHECK(refines(r, seed));
        CHECK(quotient(m, r).equitable);
        CHECK(refine_once(m, r) == r);
        CHECK(r == oracle::brute_force_coarsest(m, seed, tol));
        for (const auto& other : oracle::equitable_refining(m, seed, tol)) CHECK(refines(other, r));
    }
}
