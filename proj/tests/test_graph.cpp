#include <doctest.h>

#include <sstream>

#include "equispec/capture.hpp"
#include "equispec/graph.hpp"
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

std::size_t count_near(const std::vector<Complex>& values, double target, double tol = 1e-7) {
    return static_cast<std::size_t>(
        std::count_if(values.begin(), values.end(), [&](Complex z) { return std::abs(z - target) <= tol; }));
}

bool has_root(const Matrix& m, double target, double tol = 1e-7) { return count_near(oracle::eigenvalues(m), target, tol) > 0; }

void require_poly(const std::vector<double>& got, const std::vector<double>& want, double tol = 1e-8) {
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i)
        CHECK_MESSAGE(std::abs(got[i] - want[i]) <= tol, "coefficient " << i << ": " << got[i] << " vs " << want[i]);
}

Matrix pendant_quotient(int a, GraphMatrixKind kind) {
    const Graph g = pendant_k3(a);
    return quotient(graph_matrix(g, kind), designated_partition(g)).quotient;
}

}  // namespace

TEST_CASE("family sizes") {
    const Graph p = pendant_k3(2);
    CHECK(p.order() == 6);
    CHECK(p.edge_count() == 6);
    CHECK(p.labels() == std::vector<std::string>{"u", "v", "w", "a1", "a2", "b"});
    CHECK(p.connected());

    CHECK(complete_bipartite(2, 3).edge_count() == 6);
    CHECK(complete_split(3, 2).edge_count() == 9);
    CHECK(complete_graph(5).edge_count() == 10);
    for (int w = 1; w <= 5; ++w)
        for (int a = 1; a <= 5; ++a) CHECK(complete_split(w, a).edge_count() == std::size_t(w * (w - 1) / 2 + w * a));

    CHECK(build_graph("pendant_k3", {{"a", 3}}).order() == 7);
    CHECK(code_of([] { build_graph("pendant_k3", {{"a", 1}}); }) == ErrorCode::InvalidParams);
    CHECK(code_of([] { build_graph("pendant_k3", {{"a", 2}, {"b", 1}}); }) == ErrorCode::InvalidParams);
    CHECK(code_of([] { build_graph("petersen", {}); }) == ErrorCode::InvalidParams);
    CHECK(code_of([] { Graph(3, {{0, 0}}); }) == ErrorCode::InvalidParams);
    CHECK(code_of([] { Graph(3, {{0, 1}, {1, 0}}); }) == ErrorCode::InvalidParams);
    CHECK(code_of([] { Graph(3, {{0, 3}}); }) == ErrorCode::InvalidParams);
}

TEST_CASE("designated partitions") {
    const auto p17 = designated_partition(pendant_k3(17));
    REQUIRE(p17.cell_count() == 5);
    std::vector<std::size_t> sizes;
    for (const auto& c : p17.cells()) sizes.push_back(c.size());
    CHECK(sizes == std::vector<std::size_t>{1, 1, 1, 17, 1});

    CHECK(designated_partition(complete_bipartite(2, 3)) == Partition(5, {{0, 1}, {2, 3, 4}}));
    CHECK(designated_partition(complete_split(3, 2)) == Partition(5, {{0, 1, 2}, {3, 4}}));
    CHECK(code_of([] { designated_partition(Graph(2, {{0, 1}})); }) == ErrorCode::NoDesignatedPartition);
}

TEST_CASE("pendant triangle adjacency golden") {
    const Graph g = pendant_k3(2);
    const Matrix a = graph_matrix(g, GraphMatrixKind::adjacency);
    const auto q = quotient(a, designated_partition(g));
    CHECK(q.equitable);
    CHECK(q.quotient == Matrix{{0, 1, 1, 2, 0}, {1, 0, 1, 0, 1}, {1, 1, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}});

    const auto got = symmetric_eigenvalues(a);
    const double want[] = {2.44579, 0.796815, 0, 0, -1.37033, -1.87228};
    REQUIRE(got.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) CHECK(std::abs(got[i] - want[i]) <= 1e-4);
    CHECK(analyze_capture(a, designated_partition(g)).full_capture);
}

TEST_CASE("pendant triangle quotient characteristic polynomials") {
    for (int a = 2; a <= 6; ++a) {
        const double x = a;
        require_poly(char_poly(pendant_quotient(a, GraphMatrixKind::adjacency)), {1, 0, -(x + 4), -2, 2 * x + 1, 0});
        // x (x^4 - (a+9)x^3 + (6a+27)x^2 - (9a+31)x + 3a+12)
        const Matrix lq = pendant_quotient(a, GraphMatrixKind::laplacian);
        require_poly(char_poly(lq), {1, -(x + 9), 6 * x + 27, -(9 * x + 31), 3 * x + 12, 0});
        CHECK_FALSE(has_root(lq, 1.0));
        const Matrix sq = pendant_quotient(a, GraphMatrixKind::signless_laplacian);
        require_poly(char_poly(sq), {1, -(x + 9), 6 * x + 27, -(9 * x + 35), 3 * x + 20, -4});
        CHECK_FALSE(has_root(sq, 1.0));
    }
}

TEST_CASE("builder invariants on the pendant triangle") {
    for (int a = 2; a <= 8; ++a) {
        const Graph g = pendant_k3(a);
        const std::size_t n = g.order();
        const Matrix adj = graph_matrix(g, GraphMatrixKind::adjacency);
        const Matrix lap = graph_matrix(g, GraphMatrixKind::laplacian);
        const Matrix sl = graph_matrix(g, GraphMatrixKind::signless_laplacian);
        const Matrix dist = graph_matrix(g, GraphMatrixKind::distance);
        const Matrix dl = graph_matrix(g, GraphMatrixKind::distance_laplacian);
        const Matrix dq = graph_matrix(g, GraphMatrixKind::distance_signless_laplacian);
        for (const Matrix* m : {&adj, &lap, &sl, &dist, &dl, &dq}) CHECK(asymmetry(*m) == 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            double lrow = 0.0, dlrow = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                lrow += lap(i, j);
                dlrow += dl(i, j);
                if (i != j) {
                    CHECK(dist(i, j) >= 1.0);
                    CHECK(dq(i, j) == dist(i, j));
                }
            }
            CHECK(lrow == 0.0);
            CHECK(dlrow == 0.0);
            CHECK(lap(i, i) == double(g.degree(i)));
            CHECK(sl(i, i) == double(g.degree(i)));
            CHECK(dist(i, i) == 0.0);
        }
        CHECK(count_near(oracle::eigenvalues(adj), 0.0) >= std::size_t(a - 1));
        CHECK(count_near(oracle::eigenvalues(lap), 1.0) == std::size_t(a - 1));
        CHECK(count_near(oracle::eigenvalues(sl), 1.0) == std::size_t(a - 1));
        CHECK(symmetric_eigenvalues(lap).back() == doctest::Approx(0.0).scale(1.0).epsilon(1e-10));
    }
}

TEST_CASE("capture across matrix kinds of the pendant triangle") {
    for (int a = 2; a <= 8; ++a) {
        const Graph g = pendant_k3(a);
        const Partition p = designated_partition(g);
        for (const auto& phi : weight_presets()) {
            const Matrix m = graph_matrix(g, GraphMatrixKind::weighted_adjacency, phi);
            const auto r = analyze_capture(m, p);
            CHECK_MESSAGE(r.equitable, phi.name);
            CHECK_MESSAGE(r.full_capture, phi.name << " a=" << a);
        }
        CHECK_FALSE(analyze_capture(graph_matrix(g, GraphMatrixKind::laplacian), p).full_capture);
        CHECK_FALSE(analyze_capture(graph_matrix(g, GraphMatrixKind::signless_laplacian), p).full_capture);
        CHECK_FALSE(analyze_capture(graph_matrix(g, GraphMatrixKind::distance), p).full_capture);
    }
}

TEST_CASE("distance Laplacian of the pendant triangle misses 2a + 8") {
    for (int a = 2; a <= 8; ++a) {
        const Graph g = pendant_k3(a);
        const Matrix dl = graph_matrix(g, GraphMatrixKind::distance_laplacian);
        const double target = 2.0 * a + 8.0;
        CHECK(has_root(dl, target));
        const auto r = analyze_capture(dl, designated_partition(g));
        CHECK(r.equitable);
        CHECK_FALSE(r.full_capture);
        const auto missing = r.missing();
        CHECK(std::any_of(missing.begin(), missing.end(), [&](Complex z) { return std::abs(z - target) < 1e-7; }));
        CHECK_FALSE(has_root(r.quotient.quotient, target));
    }
}

TEST_CASE("distance signless Laplacian of the pendant triangle") {
    // a = 2 is the exception: every distinct eigenvalue is captured there
    const Graph g2 = pendant_k3(2);
    CHECK(analyze_capture(graph_matrix(g2, GraphMatrixKind::distance_signless_laplacian), designated_partition(g2))
              .full_capture);
    for (int a = 3; a <= 8; ++a) {
        const Graph g = pendant_k3(a);
        const Matrix dq = graph_matrix(g, GraphMatrixKind::distance_signless_laplacian);
        const double target = 2.0 * a + 4.0;
        CHECK(count_near(oracle::eigenvalues(dq), target) == std::size_t(a - 1));
        const auto r = analyze_capture(dq, designated_partition(g));
        CHECK_FALSE(r.full_capture);
        CHECK_FALSE(has_root(r.quotient.quotient, target));
    }
}

TEST_CASE("weight presets") {
    CHECK(weight_preset("sombor").rule(2, 2) == doctest::Approx(std::sqrt(8.0)));
    CHECK(weight_preset("zagreb1").rule(2, 3) == 5.0);
    CHECK(weight_preset("geometric_arithmetic").rule(3, 3) == doctest::Approx(1.0));
    CHECK(weight_preset("abc").rule(1, 3) == doctest::Approx(std::sqrt(2.0 / 3.0)));
    CHECK(code_of([] { weight_preset("randic"); }) == ErrorCode::InvalidParams);
    for (const auto& w : weight_presets())
        for (double x = 1; x <= 6; ++x)
            for (double y = 1; y <= 6; ++y) CHECK(w.rule(x, y) == w.rule(y, x));

    const Graph g = complete_split(3, 4);
    CHECK(graph_matrix(g, GraphMatrixKind::weighted_adjacency, weight_preset("unit")) ==
          graph_matrix(g, GraphMatrixKind::adjacency));
    CHECK(code_of([&] { graph_matrix(g, GraphMatrixKind::weighted_adjacency); }) == ErrorCode::MissingPhi);
}

TEST_CASE("complete bipartite Laplacian quotient") {
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 5; ++b) {
            const Graph g = complete_bipartite(a, b);
            const auto q = quotient(graph_matrix(g, GraphMatrixKind::laplacian), designated_partition(g));
            CHECK(q.equitable);
            CHECK(has_root(q.quotient, 0.0));
            CHECK(has_root(q.quotient, a + b));
        }
}

TEST_CASE("complete split distance signless Laplacian") {
    for (int w = 2; w <= 6; ++w)
        for (int a = 2; a <= 6; ++a) {
            const Graph g = complete_split(w, a);
            const Matrix dq = graph_matrix(g, GraphMatrixKind::distance_signless_laplacian);
            const auto q = quotient(dq, designated_partition(g));
            CHECK(q.equitable);
            const double root = std::sqrt(9.0 * a * a - 2.0 * a * w - 12.0 * a + w * w + 4.0 * w + 4.0);
            const double hi = 0.5 * (5.0 * a + 3.0 * w - 6.0 + root);
            const double lo = 0.5 * (5.0 * a + 3.0 * w - 6.0 - root);
            CHECK(has_root(q.quotient, hi, 1e-8));
            CHECK(has_root(q.quotient, lo, 1e-8));

            // clique block (w + a - 2) I + J
            for (int i = 0; i < w; ++i)
                for (int j = 0; j < w; ++j) CHECK(dq(i, j) == (i == j ? w + a - 2 + 1 : 1));

            const Partition enlarged = split_cell(split_cell(designated_partition(g), 0, 0), 2, std::size_t(w));
            REQUIRE(enlarged.cell_count() == 4);
            const auto q4 = quotient(dq, enlarged);
            CHECK(q4.equitable);
            CHECK(has_root(q4.quotient, a + w - 2, 1e-8));
            CHECK(has_root(q4.quotient, 2 * a + w - 4, 1e-8));
        }
}

TEST_CASE("distance kinds need connectivity") {
    const Graph g(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(g.connected());
    CHECK(code_of([&] { graph_matrix(g, GraphMatrixKind::distance); }) == ErrorCode::Disconnected);
    CHECK(code_of([&] { distance_table(g); }) == ErrorCode::Disconnected);
    CHECK_NOTHROW(graph_matrix(g, GraphMatrixKind::laplacian));
}

TEST_CASE("matrix kind names round trip") {
    for (auto k : {GraphMatrixKind::adjacency, GraphMatrixKind::weighted_adjacency, GraphMatrixKind::laplacian,
                   GraphMatrixKind::signless_laplacian, GraphMatrixKind::distance, GraphMatrixKind::distance_laplacian,
                   GraphMatrixKind::distance_signless_laplacian})
        CHECK(parse_matrix_kind(std::string(to_string(k))) == k);
    CHECK(code_of([] { parse_matrix_kind("normalized"); }) == ErrorCode::InvalidParams);
}

TEST_CASE("edge list parsing") {
    std::istringstream ok("# triangle with a tail\n1 2\n2 3\n\n1 3  # closing edge\n3 4\n");
    const Graph g = parse_edge_list(ok);
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 4);
    CHECK(g.family() == "custom");

    auto line_of = [](const std::string& text) -> std::size_t {
        std::istringstream in(text);
        try {
            parse_edge_list(in);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 999;
    };
    CHECK(line_of("1 2\n2 x\n") == 2);
    CHECK(line_of("1 2\n\n3\n") == 3);
    CHECK(line_of("1 2\n0 1\n") == 2);
    CHECK(line_of("1 2\n2 2\n") == 2);
    CHECK(line_of("1 2\n2 1\n") == 0);
    CHECK(line_of("# nothing\n") == 0);
}

TEST_CASE("custom graphs refine to an equitable partition") {
    std::istringstream in("1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n");
    const Graph c6 = parse_edge_list(in);
    const Matrix a = graph_matrix(c6, GraphMatrixKind::adjacency);
    CHECK(coarsest_equitable_refinement(a, Partition::trivial(6)) == Partition::trivial(6));
    CHECK(distance_table(c6, Execution::serial) == distance_table(c6, Execution::parallel));
}
