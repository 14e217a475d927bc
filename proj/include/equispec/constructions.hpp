#pragma once

#include <map>
#include <string>
#include <vector>

#include "equispec/partition.hpp"
#include "equispec/spectra.hpp"

namespace equispec {

struct ConstructedMatrix {
    Matrix matrix;
    Partition designated_partition;
    std::vector<Complex> expected_distinct;
    std::vector<int> expected_multiplicities;
    std::string family_name;
    std::map<std::string, double> params;
};

inline constexpr double kDefaultParameterTolerance = 1e-8;

/// {alpha^2, beta} with partition {{1},{2,3}}.
ConstructedMatrix construct_3x3(double c11, double c12, double c21, double c22, double alpha,
                                double tol = kDefaultParameterTolerance);

/// {alpha^3, beta} with partition {{1},{2,3,4}}.
ConstructedMatrix construct_4x4_triple(double c11, double c12, double c21, double c22, double alpha,
                                       double tol = kDefaultParameterTolerance);

/// {alpha^2, beta^2} with partition {{1,2},{3,4}}; both eigenvalues supplied and cross-checked.
ConstructedMatrix construct_4x4_double(double c11, double c12, double c21, double c22, double alpha, double beta,
                                       double tol = kDefaultParameterTolerance);

/// {alpha^2, beta, gamma} with partition {{1},{2},{3,4}}.
ConstructedMatrix construct_4x4_three(const Matrix& c, double alpha, double tol = kDefaultParameterTolerance);

/// {alpha^(n-1), beta} with partition {{1},{2..n}}.
ConstructedMatrix construct_n_two(double c11, double c12, double c21, double c22, double alpha, int n,
                                  double tol = kDefaultParameterTolerance);

ConstructedMatrix family_m_prime(int n);

ConstructedMatrix family_ab(int n, double a, double b);

ConstructedMatrix family_alpha_block(int a, int b, double alpha);

ConstructedMatrix family_atik(int n);

/// Dispatches on the CLI family names (m3, m4triple, m4double, m4three, mn2,
/// mprime, mab, alphablock, atik). Throws InvalidParams on unknown or missing keys.
ConstructedMatrix construct_family(const std::string& family, const std::map<std::string, double>& params);

std::vector<std::string> family_names();

}  // namespace equispec
