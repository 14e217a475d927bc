#pragma once

#include <cstddef>
#include <vector>

#include "equispec/matrix.hpp"

namespace equispec {

struct Eigenvalue {
    Complex value;
    int multiplicity = 1;
};

/// Distinct eigenvalues of a square matrix with algebraic multiplicities.
///
/// Values are ordered by descending real part, then descending imaginary part.
/// Any two listed values are further apart than `cluster_tolerance`.
struct SpectrumSummary {
    std::vector<Eigenvalue> eigenvalues;
    double cluster_tolerance = 0.0;
    double spectral_radius = 0.0;

    int total_multiplicity() const;
    /// Every eigenvalue repeated by its multiplicity, in summary order.
    std::vector<Complex> expanded() const;
};

/// Linearly independent (orthonormal when produced here) vectors spanning a
/// subspace of C^ambient_dim, one vector per column.
class SubspaceBasis {
public:
    SubspaceBasis() = default;
    SubspaceBasis(std::size_t ambient_dim, CMatrix columns);

    static SubspaceBasis from_real_columns(const Matrix& columns);

    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return vectors_.cols(); }
    const CMatrix& vectors() const noexcept { return vectors_; }

private:
    std::size_t ambient_ = 0;
    CMatrix vectors_;
};

inline constexpr double kDefaultClusterScale = 1e-6;
inline constexpr double kDefaultRankScale = 1e-10;
inline constexpr double kSymmetryScale = 1e-12;

/// Cluster tolerance used when the caller passes 0: 1e-6 * max(1, rho).
double default_cluster_tolerance(double spectral_radius);

bool is_numerically_symmetric(const Matrix& m);

/// All n eigenvalues (with repetition), unordered.
///
/// Symmetric inputs go through Householder tridiagonalisation and implicit QL;
/// everything else through balancing, Hessenberg reduction and Francis
/// double-shift QR. Throws NonConvergence after 100*n sweeps.
std::vector<Complex> eigenvalues(const Matrix& m);

/// Real eigenvalues of a symmetric matrix in descending order.
std::vector<double> symmetric_eigenvalues(const Matrix& m);

/// Eigenvalues clustered into distinct values. `tol == 0` selects the default.
SpectrumSummary eigen_decompose(const Matrix& m, double tol = 0.0);

/// Groups raw eigenvalues into a summary (exposed for the quotient spectra,
/// which are clustered at the parent's tolerance).
SpectrumSummary summarize(const std::vector<Complex>& values, double tol);

/// Monic coefficients of det(xI - m), highest degree first (size n + 1).
/// Faddeev-LeVerrier on a scaled copy; throws OrderTooLarge for n > 16.
std::vector<double> char_poly(const Matrix& m);

Complex evaluate_poly(const std::vector<double>& coeffs, Complex x);

/// Singular values of a (possibly rectangular) complex matrix, descending.
std::vector<double> singular_values(const CMatrix& a);

/// Numerical rank with threshold rank_tol; 0 selects 1e-10 * max(1, sigma_max).
std::size_t numerical_rank(const CMatrix& a, double rank_tol = 0.0);

/// Orthonormal basis of ker(m - shift * I).
SubspaceBasis nullspace(const Matrix& m, Complex shift, double rank_tol = 0.0);

/// Basis of the eigenspace at a computed eigenvalue. Never empty: when rounding
/// leaves no singular value under the threshold, the least singular direction is used.
SubspaceBasis eigenspace(const Matrix& m, Complex lambda, double rank_tol = 0.0);

/// Orthonormal basis of ker(a) for a rectangular complex matrix.
SubspaceBasis nullspace(const CMatrix& a, double rank_tol = 0.0);

/// dim(U intersect V) = dim U + dim V - rank([U | V]).
std::size_t intersection_dim(const SubspaceBasis& u, const SubspaceBasis& v, double rank_tol = 0.0);

}  // namespace equispec
