#include "equispec/capture.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace equispec {

namespace {

void require_order(const Matrix& m, const Partition& p) {
    require_valid_square(m, "capture analysis");
    if (p.size() != m.rows()) {
        throw Error(ErrorCode::DimensionMismatch, "partition covers " + std::to_string(p.size()) +
                                                      " indices but the matrix has order " + std::to_string(m.rows()));
    }
}

QuotientResult require_equitable(const Matrix& m, const Partition& p, double tol) {
    require_order(m, p);
    auto q = quotient(m, p, tol);
    if (!q.equitable) {
        throw Error(ErrorCode::NotEquitable, "partition " + p.to_string() + " is not equitable (deviation " +
                                                 std::to_string(q.max_row_sum_deviation) + ")");
    }
    return q;
}

// Index of the nearest value within tol, or npos.
std::size_t nearest(const std::vector<Eigenvalue>& values, Complex z, double tol) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double d = std::abs(values[i].value - z);
        if (d <= tol && d < best_d) {
            best = i;
            best_d = d;
        }
    }
    return best;
}

bool multiset_contained(const SpectrumSummary& inner, const SpectrumSummary& outer, double tol) {
    std::vector<int> room;
    for (const auto& e : outer.eigenvalues) room.push_back(e.multiplicity);
    for (const auto& e : inner.eigenvalues) {
        int need = e.multiplicity;
        // nearest first, then spill into other values still within tol
        std::vector<std::size_t> order(outer.eigenvalues.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return std::abs(outer.eigenvalues[a].value - e.value) < std::abs(outer.eigenvalues[b].value - e.value);
        });
        for (std::size_t i : order) {
            if (need == 0 || std::abs(outer.eigenvalues[i].value - e.value) > tol) break;
            const int take = std::min(need, room[i]);
            room[i] -= take;
            need -= take;
        }
        if (need > 0) return false;
    }
    return true;
}

}  // namespace

std::vector<Complex> CaptureReport::missing() const {
    std::vector<Complex> out;
    for (const auto& e : per_eigenvalue)
        if (!e.in_quotient) out.push_back(e.value);
    return out;
}

SubspaceBasis partition_subspace(const Partition& p) {
    CMatrix basis(p.size(), p.cell_count());
    for (std::size_t k = 0; k < p.cell_count(); ++k) {
        const double w = 1.0 / std::sqrt(static_cast<double>(p.cell(k).size()));
        for (std::size_t e : p.cell(k)) basis(e, k) = w;
    }
    return SubspaceBasis(p.size(), std::move(basis));
}

CaptureReport analyze_capture(const Matrix& m, const Partition& p, const Tolerances& tol) {
    require_order(m, p);
    CaptureReport r;
    r.partition = p;
    r.parent_spectrum = eigen_decompose(m, tol.cluster);
    r.quotient = quotient(m, p, tol.equitable);
    r.equitable = r.quotient.equitable;
    const double ctol = r.parent_spectrum.cluster_tolerance;
    r.quotient_spectrum = summarize(eigenvalues(r.quotient.quotient), ctol);
    r.quotient_contained = multiset_contained(r.quotient_spectrum, r.parent_spectrum, ctol);

    const SubspaceBasis w = partition_subspace(p);
    r.full_capture = true;
    for (const auto& e : r.parent_spectrum.eigenvalues) {
        EigenvalueCapture row;
        row.value = e.value;
        row.multiplicity = e.multiplicity;
        row.in_quotient = nearest(r.quotient_spectrum.eigenvalues, e.value, ctol) != std::numeric_limits<std::size_t>::max();
        const SubspaceBasis space = eigenspace(m, e.value, tol.rank);
        row.eigenspace_dim = space.dim();
        row.intersection_dim = intersection_dim(space, w, tol.rank);
        r.full_capture = r.full_capture && row.in_quotient;
        r.per_eigenvalue.push_back(row);
    }
    return r;
}

Membership criterion_membership(const Matrix& m, const Partition& p, Complex value, const Tolerances& tol) {
    require_equitable(m, p, tol.equitable);
    const SpectrumSummary parent = eigen_decompose(m, tol.cluster);
    const std::size_t at = nearest(parent.eigenvalues, value, parent.cluster_tolerance);
    if (at == std::numeric_limits<std::size_t>::max()) return {};
    const SubspaceBasis space = eigenspace(m, parent.eigenvalues[at].value, tol.rank);
    const std::size_t dim = intersection_dim(space, partition_subspace(p), tol.rank);
    return {dim >= 1, dim};
}

InterlacingReport check_interlacing(const Matrix& m, const Partition& p, double tol) {
    require_order(m, p);
    if (asymmetry(m) > kSymmetryScale * std::max(1.0, norm_inf(m))) {
        throw Error(ErrorCode::NotSymmetric, "interlacing needs a symmetric matrix (asymmetry " +
                                                 std::to_string(asymmetry(m)) + ")");
    }
    InterlacingReport r;
    r.parent_sorted = symmetric_eigenvalues(m);
    const double rho = std::max(std::abs(r.parent_sorted.front()), std::abs(r.parent_sorted.back()));
    r.tolerance = tol > 0.0 ? tol : 1e-8 * std::max(1.0, rho);

    // D^{-1/2} P^T M P D^{-1/2} is symmetric and similar to the averaged quotient
    const std::size_t k = p.cell_count();
    Matrix s(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            double total = 0.0;
            for (std::size_t a : p.cell(i))
                for (std::size_t b : p.cell(j)) total += m(a, b);
            s(i, j) = total / std::sqrt(static_cast<double>(p.cell(i).size() * p.cell(j).size()));
        }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) s(i, j) = s(j, i) = 0.5 * (s(i, j) + s(j, i));
    r.quotient_sorted = symmetric_eigenvalues(s);

    const auto& par = r.parent_sorted;
    const auto& quo = r.quotient_sorted;
    const std::size_t n = par.size();
    const double t = r.tolerance;
    r.interlaces = true;
    for (std::size_t i = 0; i < k; ++i) {
        if (par[i] + t < quo[i] || quo[i] < par[n - k + i] - t) r.interlaces = false;
    }
    if (r.interlaces) {
        for (std::size_t split = 0; split <= k && !r.tight; ++split) {
            bool ok = true;
            for (std::size_t i = 0; i < k && ok; ++i) {
                const double target = i < split ? par[i] : par[n - k + i];
                ok = std::abs(quo[i] - target) <= t;
            }
            if (ok) {
                r.tight = true;
                r.tight_split_k = split;
            }
        }
    }
    return r;
}

bool spectral_radius_coincides(const Matrix& m, const Partition& p, double tol, double equitable_tol) {
    const QuotientResult q = require_equitable(m, p, equitable_tol);
    if (tol <= 0.0) tol = 1e-6;
    double rho_m = 0.0, rho_q = 0.0;
    for (const auto& z : eigenvalues(m)) rho_m = std::max(rho_m, std::abs(z));
    for (const auto& z : eigenvalues(q.quotient)) rho_q = std::max(rho_q, std::abs(z));
    return std::abs(rho_m - rho_q) <= tol * std::max(1.0, rho_m);
}

std::vector<std::size_t> split_representatives(const Matrix& m, const Partition::Cell& cell, double tol) {
    auto twins = [&](std::size_t i, std::size_t j) {
        if (std::abs(m(i, i) - m(j, j)) > tol || std::abs(m(i, j) - m(j, i)) > tol) return false;
        for (std::size_t k = 0; k < m.rows(); ++k) {
            if (k == i || k == j) continue;
            if (std::abs(m(i, k) - m(j, k)) > tol || std::abs(m(k, i) - m(k, j)) > tol) return false;
        }
        return true;
    };
    std::vector<std::size_t> reps;
    for (std::size_t e : cell) {
        const bool covered = std::any_of(reps.begin(), reps.end(), [&](std::size_t r) { return twins(r, e); });
        if (!covered) reps.push_back(e);
    }
    return reps;
}

std::vector<Enlargement> search_enlargement(const Matrix& m, const Partition& seed, std::size_t max_splits,
                                            const Tolerances& tol, Execution exec) {
    if (max_splits < 1 || max_splits > 3) {
        throw Error(ErrorCode::InvalidParams, "max_splits must be 1, 2 or 3, got " + std::to_string(max_splits));
    }
    const QuotientResult seed_q = require_equitable(m, seed, tol.equitable);
    CaptureReport seed_report = analyze_capture(m, seed, tol);
    if (seed_report.full_capture) return {Enlargement{seed, 0, std::move(seed_report)}};

    const double twin_tol = seed_q.tolerance;
    std::set<Partition> visited{seed};
    std::vector<Partition> frontier{seed};
    for (std::size_t depth = 1; depth <= max_splits; ++depth) {
        std::vector<Partition> candidates;
        for (const auto& p : frontier) {
            for (std::size_t c = 0; c < p.cell_count(); ++c) {
                if (p.cell(c).size() < 2) continue;
                for (std::size_t e : split_representatives(m, p.cell(c), twin_tol)) {
                    Partition next = split_cell(p, c, e);
                    if (visited.insert(next).second) candidates.push_back(std::move(next));
                }
            }
        }
        std::sort(candidates.begin(), candidates.end());

        std::vector<std::optional<CaptureReport>> reports(candidates.size());
        for_each_index(
            candidates.size(),
            [&](std::size_t i) {
                if (!quotient(m, candidates[i], tol.equitable).equitable) return;
                reports[i] = analyze_capture(m, candidates[i], tol);
            },
            exec);

        std::vector<Enlargement> found;
        std::vector<Partition> next_frontier;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (!reports[i]) continue;
            if (reports[i]->full_capture) {
                found.push_back({candidates[i], depth, std::move(*reports[i])});
            } else {
                next_frontier.push_back(candidates[i]);
            }
        }
        if (!found.empty()) return found;
        frontier = std::move(next_frontier);
        if (frontier.empty()) break;
    }
    return {};
}

}  // namespace equispec
