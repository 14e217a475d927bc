#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "equispec/kernels.hpp"
#include "equispec/partition.hpp"
#include "equispec/spectra.hpp"

namespace equispec {

/// Zero in any field selects that module's default.
struct Tolerances {
    double equitable = 0.0;
    double cluster = 0.0;
    double rank = 0.0;
};

struct EigenvalueCapture {
    Complex value;
    int multiplicity = 1;
    bool in_quotient = false;
    std::size_t eigenspace_dim = 0;
    std::size_t intersection_dim = 0;
};

struct CaptureReport {
    SpectrumSummary parent_spectrum;
    SpectrumSummary quotient_spectrum;
    std::vector<EigenvalueCapture> per_eigenvalue;
    bool full_capture = false;
    Partition partition;
    bool equitable = false;
    /// sigma(Q) sits inside sigma(M) as a multiset (expected whenever equitable).
    bool quotient_contained = false;
    QuotientResult quotient;

    std::vector<Complex> missing() const;
};

CaptureReport analyze_capture(const Matrix& m, const Partition& p, const Tolerances& tol = {});

/// Basis of W = im P with normalised indicator columns.
SubspaceBasis partition_subspace(const Partition& p);

struct Membership {
    bool member = false;
    std::size_t intersection_dim = 0;
};

/// Decides value in sigma(Q) through dim(E_value cap W). Throws NotEquitable.
Membership criterion_membership(const Matrix& m, const Partition& p, Complex value, const Tolerances& tol = {});

struct InterlacingReport {
    std::vector<double> parent_sorted;
    std::vector<double> quotient_sorted;
    bool interlaces = false;
    bool tight = false;
    std::optional<std::size_t> tight_split_k;
    double tolerance = 0.0;
};

/// Throws NotSymmetric. `tol == 0` selects 1e-8 * max(1, rho(M)).
InterlacingReport check_interlacing(const Matrix& m, const Partition& p, double tol = 0.0);

/// |rho(M) - rho(Q)| <= tol * max(1, rho(M)); tol == 0 selects 1e-6. Throws NotEquitable.
bool spectral_radius_coincides(const Matrix& m, const Partition& p, double tol = 0.0,
                               double equitable_tol = 0.0);

struct Enlargement {
    Partition partition;
    std::size_t splits = 0;
    CaptureReport report;
};

inline constexpr std::size_t kDefaultMaxSplits = 2;

/// Breadth-first search over singleton splits of an equitable seed. Returns
/// every full-capture partition at the smallest depth that has one, sorted.
std::vector<Enlargement> search_enlargement(const Matrix& m, const Partition& seed, std::size_t max_splits,
                                            const Tolerances& tol = {}, Execution exec = Execution::parallel);

/// Elements of `cell` that are not interchangeable with a smaller member
/// (swapping two twins leaves M unchanged, so their splits are equivalent).
std::vector<std::size_t> split_representatives(const Matrix& m, const Partition::Cell& cell, double tol);

}  // namespace equispec
