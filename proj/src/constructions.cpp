#include "equispec/constructions.hpp"

#include <algorithm>
#include <cmath>

namespace equispec {

namespace {

struct Expected {
    std::vector<Complex> values;
    std::vector<int> mult;

    void add(Complex v, int m) {
        if (m <= 0) return;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (std::abs(values[i] - v) <= 1e-9 * std::max(1.0, std::abs(v))) {
                mult[i] += m;
                return;
            }
        }
        values.push_back(v);
        mult.push_back(m);
    }
};

double scale_of(const std::vector<Complex>& values) {
    double s = 1.0;
    for (const auto& z : values) s = std::max(s, std::abs(z));
    return s;
}

// Spectrum of the quotient with alpha located in it; returns the remaining eigenvalues.
std::vector<Complex> locate_alpha(const Matrix& q, double alpha, double tol) {
    auto values = eigenvalues(q);
    const double scale = scale_of(values);
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j)
            if (std::abs(values[i] - values[j]) <= tol * scale) {
                throw Error(ErrorCode::DegenerateQuotient, "quotient has a repeated eigenvalue near " +
                                                               std::to_string(values[i].real()));
            }
    auto hit = std::min_element(values.begin(), values.end(), [&](Complex a, Complex b) {
        return std::abs(a - alpha) < std::abs(b - alpha);
    });
    if (std::abs(*hit - alpha) > tol * scale) {
        throw Error(ErrorCode::AlphaNotEigenvalue,
                    "alpha = " + std::to_string(alpha) + " is not an eigenvalue of the quotient");
    }
    values.erase(hit);
    return values;
}

// The other eigenvalue of a 2x2 quotient, taken from the trace.
double other_root(double c11, double c22, double alpha) { return c11 + c22 - alpha; }

ConstructedMatrix finish(Matrix m, Partition p, const Expected& e, std::string family,
                         std::map<std::string, double> params) {
    if (!quotient(m, p).equitable) {
        throw Error(ErrorCode::InvalidParams, family + ": designated partition is not equitable");
    }
    ConstructedMatrix out;
    out.matrix = std::move(m);
    out.designated_partition = std::move(p);
    out.expected_distinct = e.values;
    out.expected_multiplicities = e.mult;
    out.family_name = std::move(family);
    out.params = std::move(params);
    return out;
}

Partition head_and_tail(std::size_t n, std::size_t head) {
    std::vector<Partition::Cell> cells;
    for (std::size_t i = 0; i < head; ++i) cells.push_back({i});
    Partition::Cell rest;
    for (std::size_t i = head; i < n; ++i) rest.push_back(i);
    cells.push_back(rest);
    return Partition(n, std::move(cells));
}

void require_at_least(int value, int bound, const char* name) {
    if (value < bound) {
        throw Error(ErrorCode::InvalidParams,
                    std::string(name) + " must be at least " + std::to_string(bound) + ", got " + std::to_string(value));
    }
}

}  // namespace

ConstructedMatrix construct_3x3(double c11, double c12, double c21, double c22, double alpha, double tol) {
    locate_alpha(Matrix{{c11, c12}, {c21, c22}}, alpha, tol);
    const double beta = other_root(c11, c22, alpha);
    Matrix m{{c11, c12 / 2, c12 / 2},
             {c21, (c22 + alpha) / 2, (c22 - alpha) / 2},
             {c21, (c22 - alpha) / 2, (c22 + alpha) / 2}};
    Expected e;
    e.add(alpha, 2);
    e.add(beta, 1);
    return finish(std::move(m), head_and_tail(3, 1), e, "m3",
                  {{"c11", c11}, {"c12", c12}, {"c21", c21}, {"c22", c22}, {"alpha", alpha}});
}

ConstructedMatrix construct_4x4_triple(double c11, double c12, double c21, double c22, double alpha, double tol) {
    locate_alpha(Matrix{{c11, c12}, {c21, c22}}, alpha, tol);
    const double beta = other_root(c11, c22, alpha);
    const double d = (2 * alpha + c22) / 3;
    const double o = (c22 - alpha) / 3;
    Matrix m{{c11, c12 / 3, c12 / 3, c12 / 3}, {c21, d, o, o}, {c21, o, d, o}, {c21, o, o, d}};
    Expected e;
    e.add(alpha, 3);
    e.add(beta, 1);
    return finish(std::move(m), head_and_tail(4, 1), e, "m4triple",
                  {{"c11", c11}, {"c12", c12}, {"c21", c21}, {"c22", c22}, {"alpha", alpha}});
}

ConstructedMatrix construct_4x4_double(double c11, double c12, double c21, double c22, double alpha, double beta,
                                       double tol) {
    const Matrix q{{c11, c12}, {c21, c22}};
    const auto values = eigenvalues(q);
    const double scale = scale_of(values);
    if (std::abs(alpha - beta) <= tol * scale || std::abs(values[0] - values[1]) <= tol * scale) {
        throw Error(ErrorCode::DegenerateQuotient, "alpha and beta must be distinct");
    }
    const bool direct = std::abs(values[0] - alpha) <= tol * scale && std::abs(values[1] - beta) <= tol * scale;
    const bool swapped = std::abs(values[1] - alpha) <= tol * scale && std::abs(values[0] - beta) <= tol * scale;
    if (!direct && !swapped) {
        throw Error(ErrorCode::EigenvalueMismatch, "{alpha, beta} is not the spectrum of the quotient");
    }
    Matrix m{{(c11 + alpha) / 2, (c11 - alpha) / 2, c12 / 2, c12 / 2},
             {(c11 - alpha) / 2, (c11 + alpha) / 2, c12 / 2, c12 / 2},
             {c21 / 2, c21 / 2, (c22 + beta) / 2, (c22 - beta) / 2},
             {c21 / 2, c21 / 2, (c22 - beta) / 2, (c22 + beta) / 2}};
    Expected e;
    e.add(alpha, 2);
    e.add(beta, 2);
    return finish(std::move(m), Partition(4, {{0, 1}, {2, 3}}), e, "m4double",
                  {{"c11", c11}, {"c12", c12}, {"c21", c21}, {"c22", c22}, {"alpha", alpha}, {"beta", beta}});
}

ConstructedMatrix construct_4x4_three(const Matrix& c, double alpha, double tol) {
    if (c.rows() != 3 || c.cols() != 3) throw Error(ErrorCode::DimensionMismatch, "expected a 3x3 quotient");
    require_valid_square(c, "construct_4x4_three");
    const auto rest = locate_alpha(c, alpha, tol);
    Matrix m{{c(0, 0), c(0, 1), c(0, 2) / 2, c(0, 2) / 2},
             {c(1, 0), c(1, 1), c(1, 2) / 2, c(1, 2) / 2},
             {c(2, 0), c(2, 1), (c(2, 2) + alpha) / 2, (c(2, 2) - alpha) / 2},
             {c(2, 0), c(2, 1), (c(2, 2) - alpha) / 2, (c(2, 2) + alpha) / 2}};
    Expected e;
    e.add(alpha, 2);
    for (const auto& z : rest) e.add(z, 1);
    std::map<std::string, double> params{{"alpha", alpha}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            params["c" + std::to_string(i + 1) + std::to_string(j + 1)] = c(i, j);
    return finish(std::move(m), Partition(4, {{0}, {1}, {2, 3}}), e, "m4three", std::move(params));
}

ConstructedMatrix construct_n_two(double c11, double c12, double c21, double c22, double alpha, int n, double tol) {
    require_at_least(n, 3, "n");
    locate_alpha(Matrix{{c11, c12}, {c21, c22}}, alpha, tol);
    const double beta = other_root(c11, c22, alpha);
    const auto size = static_cast<std::size_t>(n);
    const double k = n - 1;
    Matrix m(size, size);
    m(0, 0) = c11;
    for (std::size_t j = 1; j < size; ++j) m(0, j) = c12 / k;
    for (std::size_t i = 1; i < size; ++i) {
        m(i, 0) = c21;
        for (std::size_t j = 1; j < size; ++j) m(i, j) = (i == j ? alpha : 0.0) + (c22 - alpha) / k;
    }
    Expected e;
    e.add(alpha, n - 1);
    e.add(beta, 1);
    return finish(std::move(m), head_and_tail(size, 1), e, "mn2",
                  {{"c11", c11}, {"c12", c12}, {"c21", c21}, {"c22", c22}, {"alpha", alpha}, {"n", n}});
}

ConstructedMatrix family_ab(int n, double a, double b) {
    require_at_least(n, 3, "n");
    const auto size = static_cast<std::size_t>(n);
    Matrix m(size, size);
    m(0, 0) = 1.0;
    for (std::size_t j = 1; j < size; ++j) {
        m(0, j) = -a;
        m(j, 0) = a;
    }
    for (std::size_t i = 1; i < size; ++i)
        for (std::size_t j = 1; j < size; ++j) m(i, j) = i == j ? b : a;

    // quotient [[1, -(n-1)a], [a, b + (n-2)a]]
    const double tr = 1.0 + b + (n - 2) * a;
    const double det = b + (n - 2) * a + (n - 1) * a * a;
    const Complex disc = std::sqrt(Complex(tr * tr - 4.0 * det, 0.0));
    Expected e;
    e.add((tr + disc) / 2.0, 1);
    e.add((tr - disc) / 2.0, 1);
    e.add(b - a, n - 2);
    return finish(std::move(m), head_and_tail(size, 1), e, "mab", {{"n", n}, {"a", a}, {"b", b}});
}

ConstructedMatrix family_m_prime(int n) {
    require_at_least(n, 3, "n");
    auto out = family_ab(n, 2.0, 5.0);
    out.family_name = "mprime";
    out.params = {{"n", n}};
    return out;
}

ConstructedMatrix family_alpha_block(int a, int b, double alpha) {
    if (alpha == 0.0) throw Error(ErrorCode::AlphaZero, "alpha must be nonzero");
    require_at_least(a, 1, "a");
    require_at_least(b, 1, "b");
    const auto ua = static_cast<std::size_t>(a);
    const auto n = static_cast<std::size_t>(a + b);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const bool left = i < ua, top = j < ua;
            m(i, j) = left && top ? 1.0 / alpha : (!left && !top ? alpha : 1.0);
        }
    Expected e;
    e.add((a + alpha * alpha * b) / alpha, 1);
    e.add(0.0, a + b - 1);
    std::vector<Partition::Cell> cells(2);
    for (std::size_t i = 0; i < n; ++i) cells[i < ua ? 0 : 1].push_back(i);
    return finish(std::move(m), Partition(n, std::move(cells)), e, "alphablock",
                  {{"a", a}, {"b", b}, {"alpha", alpha}});
}

ConstructedMatrix family_atik(int n) {
    require_at_least(n, 2, "n");
    const auto size = static_cast<std::size_t>(n + 2);
    const double x = n;
    Matrix m(size, size);
    m(0, 0) = 4 * x - 2;
    m(0, 1) = -(2 * x - 2);
    m(1, 0) = -1;
    m(1, 1) = 4 * x + 1;
    for (std::size_t j = 2; j < size; ++j) {
        m(0, j) = -2;
        m(1, j) = -4;
    }
    for (std::size_t i = 2; i < size; ++i) {
        m(i, 0) = -1;
        m(i, 1) = -2 * (2 * x - 2);
        for (std::size_t j = 2; j < size; ++j) m(i, j) = i == j ? 8 * x - 7 : -4;
    }
    Expected e;
    e.add(8 * x - 3, n);
    e.add(4 * x - 1, 1);
    e.add(0.0, 1);
    return finish(std::move(m), head_and_tail(size, 2), e, "atik", {{"n", n}});
}

namespace {

double need(const std::map<std::string, double>& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) throw Error(ErrorCode::InvalidParams, "missing parameter '" + key + "'");
    return it->second;
}

int need_int(const std::map<std::string, double>& params, const std::string& key) {
    const double v = need(params, key);
    if (v != std::floor(v) || std::abs(v) > 1e6) {
        throw Error(ErrorCode::InvalidParams, "parameter '" + key + "' must be an integer");
    }
    return static_cast<int>(v);
}

void allow_only(const std::map<std::string, double>& params, std::initializer_list<const char*> keys) {
    for (const auto& [k, v] : params) {
        if (k == "tol") continue;
        if (std::none_of(keys.begin(), keys.end(), [&](const char* x) { return k == x; })) {
            throw Error(ErrorCode::InvalidParams, "unknown parameter '" + k + "'");
        }
    }
}

}  // namespace

std::vector<std::string> family_names() {
    return {"m3", "m4triple", "m4double", "m4three", "mn2", "mprime", "mab", "alphablock", "atik"};
}

ConstructedMatrix construct_family(const std::string& family, const std::map<std::string, double>& p) {
    const double tol = p.count("tol") ? p.at("tol") : kDefaultParameterTolerance;
    if (family == "m3" || family == "m4triple") {
        allow_only(p, {"c11", "c12", "c21", "c22", "alpha"});
        auto f = family == "m3" ? construct_3x3 : construct_4x4_triple;
        return f(need(p, "c11"), need(p, "c12"), need(p, "c21"), need(p, "c22"), need(p, "alpha"), tol);
    }
    if (family == "m4double") {
        allow_only(p, {"c11", "c12", "c21", "c22", "alpha", "beta"});
        return construct_4x4_double(need(p, "c11"), need(p, "c12"), need(p, "c21"), need(p, "c22"), need(p, "alpha"),
                                    need(p, "beta"), tol);
    }
    if (family == "m4three") {
        allow_only(p, {"c11", "c12", "c13", "c21", "c22", "c23", "c31", "c32", "c33", "alpha"});
        Matrix c(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) c(i, j) = need(p, "c" + std::to_string(i + 1) + std::to_string(j + 1));
        return construct_4x4_three(c, need(p, "alpha"), tol);
    }
    if (family == "mn2") {
        allow_only(p, {"c11", "c12", "c21", "c22", "alpha", "n"});
        return construct_n_two(need(p, "c11"), need(p, "c12"), need(p, "c21"), need(p, "c22"), need(p, "alpha"),
                               need_int(p, "n"), tol);
    }
    if (family == "mprime") {
        allow_only(p, {"n"});
        return family_m_prime(need_int(p, "n"));
    }
    if (family == "mab") {
        allow_only(p, {"n", "a", "b"});
        return family_ab(need_int(p, "n"), need(p, "a"), need(p, "b"));
    }
    if (family == "alphablock") {
        allow_only(p, {"a", "b", "alpha"});
        return family_alpha_block(need_int(p, "a"), need_int(p, "b"), need(p, "alpha"));
    }
    if (family == "atik") {
        allow_only(p, {"n"});
        return family_atik(need_int(p, "n"));
    }
    throw Error(ErrorCode::InvalidParams, "unknown family '" + family + "'");
}

}  // namespace equispec
