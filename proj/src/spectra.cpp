#include "equispec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace equispec {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// 1-based square work array, the natural indexing for the Hessenberg QR sweeps.
class Work {
public:
    explicit Work(const Matrix& m) : n_(static_cast<int>(m.rows())), a_((n_ + 1) * (n_ + 1), 0.0) {
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) (*this)(i, j) = m(i - 1, j - 1);
    }
    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * (n_ + 1) + j)]; }
    int n() const { return n_; }

private:
    int n_;
    std::vector<double> a_;
};

void balance(Work& a) {
    constexpr double radix = 2.0;
    constexpr double sqrdx = radix * radix;
    const int n = a.n();
    bool done = false;
    while (!done) {
        done = true;
        for (int i = 1; i <= n; ++i) {
            double r = 0.0, c = 0.0;
            for (int j = 1; j <= n; ++j) {
                if (j == i) continue;
                c += std::abs(a(j, i));
                r += std::abs(a(i, j));
            }
            if (c == 0.0 || r == 0.0) continue;
            double g = r / radix;
            double f = 1.0;
            const double s = c + r;
            while (c < g) {
                f *= radix;
                c *= sqrdx;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= sqrdx;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                const double inv = 1.0 / f;
                for (int j = 1; j <= n; ++j) a(i, j) *= inv;
                for (int j = 1; j <= n; ++j) a(j, i) *= f;
            }
        }
    }
}

// Householder reduction to upper Hessenberg form.
void to_hessenberg(Work& a) {
    const int n = a.n();
    std::vector<double> v(static_cast<std::size_t>(n + 1));
    for (int k = 1; k <= n - 2; ++k) {
        double scale = 0.0;
        for (int i = k + 1; i <= n; ++i) scale += std::abs(a(i, k));
        if (scale == 0.0) continue;
        double h = 0.0;
        for (int i = k + 1; i <= n; ++i) {
            v[i] = a(i, k) / scale;
            h += v[i] * v[i];
        }
        const double g = v[k + 1] > 0 ? -std::sqrt(h) : std::sqrt(h);
        h -= v[k + 1] * g;
        v[k + 1] -= g;
        // H = I - v v^T / h applied from the left, then from the right.
        for (int j = k; j <= n; ++j) {
            double f = 0.0;
            for (int i = k + 1; i <= n; ++i) f += v[i] * a(i, j);
            f /= h;
            for (int i = k + 1; i <= n; ++i) a(i, j) -= f * v[i];
        }
        for (int i = 1; i <= n; ++i) {
            double f = 0.0;
            for (int j = k + 1; j <= n; ++j) f += a(i, j) * v[j];
            f /= h;
            for (int j = k + 1; j <= n; ++j) a(i, j) -= f * v[j];
        }
        for (int i = k + 2; i <= n; ++i) a(i, k) = 0.0;
    }
}

// Francis double-shift QR on an upper Hessenberg matrix.
std::vector<Complex> hessenberg_qr(Work& a) {
    const int n = a.n();
    std::vector<double> wr(static_cast<std::size_t>(n + 1)), wi(static_cast<std::size_t>(n + 1));
    double anorm = 0.0;
    for (int i = 1; i <= n; ++i)
        for (int j = std::max(i - 1, 1); j <= n; ++j) anorm += std::abs(a(i, j));

    const long budget = 100L * n;
    long sweeps = 0;
    int nn = n;
    double t = 0.0;
    int l = 1;
    while (nn >= 1) {
        int its = 0;
        do {
            for (l = nn; l >= 2; --l) {
                double s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
                if (s == 0.0) s = anorm;
                if (std::abs(a(l, l - 1)) + s == s) {
                    a(l, l - 1) = 0.0;
                    break;
                }
            }
            if (l < 1) l = 1;
            double x = a(nn, nn);
            if (l == nn) {
                wr[nn] = x + t;
                wi[nn--] = 0.0;
            } else {
                double y = a(nn - 1, nn - 1);
                double w = a(nn, nn - 1) * a(nn - 1, nn);
                if (l == nn - 1) {
                    const double p = 0.5 * (y - x);
                    const double q = p * p + w;
                    double z = std::sqrt(std::abs(q));
                    x += t;
                    if (q >= 0.0) {
                        z = p + std::copysign(z, p);
                        wr[nn - 1] = wr[nn] = x + z;
                        if (z != 0.0) wr[nn] = x - w / z;
                        wi[nn - 1] = wi[nn] = 0.0;
                    } else {
                        wr[nn - 1] = wr[nn] = x + p;
                        wi[nn - 1] = -(wi[nn] = z);
                    }
                    nn -= 2;
                } else {
                    if (++sweeps > budget) {
                        throw Error(ErrorCode::NonConvergence,
                                    "Hessenberg QR exceeded " + std::to_string(budget) + " sweeps");
                    }
                    if (its > 0 && its % 10 == 0) {
                        // exceptional shift
                        t += x;
                        for (int i = 1; i <= nn; ++i) a(i, i) -= x;
                        const double s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
                        y = x = 0.75 * s;
                        w = -0.4375 * s * s;
                    }
                    ++its;
                    int m = nn - 2;
                    double p = 0.0, q = 0.0, r = 0.0, z = 0.0;
                    for (; m >= l; --m) {
                        z = a(m, m);
                        r = x - z;
                        double s = y - z;
                        p = (r * s - w) / a(m + 1, m) + a(m, m + 1);
                        q = a(m + 1, m + 1) - z - r - s;
                        r = a(m + 2, m + 1);
                        s = std::abs(p) + std::abs(q) + std::abs(r);
                        p /= s;
                        q /= s;
                        r /= s;
                        if (m == l) break;
                        const double u = std::abs(a(m, m - 1)) * (std::abs(q) + std::abs(r));
                        const double v = std::abs(p) * (std::abs(a(m - 1, m - 1)) + std::abs(z) + std::abs(a(m + 1, m + 1)));
                        if (u + v == v) break;
                    }
                    for (int i = m + 2; i <= nn; ++i) {
                        a(i, i - 2) = 0.0;
                        if (i != m + 2) a(i, i - 3) = 0.0;
                    }
                    for (int k = m; k <= nn - 1; ++k) {
                        if (k != m) {
                            p = a(k, k - 1);
                            q = a(k + 1, k - 1);
                            r = 0.0;
                            if (k != nn - 1) r = a(k + 2, k - 1);
                            if ((x = std::abs(p) + std::abs(q) + std::abs(r)) != 0.0) {
                                p /= x;
                                q /= x;
                                r /= x;
                            }
                        }
                        const double s = std::copysign(std::sqrt(p * p + q * q + r * r), p);
                        if (s == 0.0) continue;
                        if (k == m) {
                            if (l != m) a(k, k - 1) = -a(k, k - 1);
                        } else {
                            a(k, k - 1) = -s * x;
                        }
                        p += s;
                        x = p / s;
                        y = q / s;
                        z = r / s;
                        q /= p;
                        r /= p;
                        for (int j = k; j <= nn; ++j) {
                            p = a(k, j) + q * a(k + 1, j);
                            if (k != nn - 1) {
                                p += r * a(k + 2, j);
                                a(k + 2, j) -= p * z;
                            }
                            a(k + 1, j) -= p * y;
                            a(k, j) -= p * x;
                        }
                        const int mmin = nn < k + 3 ? nn : k + 3;
                        for (int i = l; i <= mmin; ++i) {
                            p = x * a(i, k) + y * a(i, k + 1);
                            if (k != nn - 1) {
                                p += z * a(i, k + 2);
                                a(i, k + 2) -= p * r;
                            }
                            a(i, k + 1) -= p * q;
                            a(i, k) -= p;
                        }
                    }
                }
            }
        } while (l < nn - 1);
    }
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) out.emplace_back(wr[i], wi[i]);
    return out;
}

// Householder tridiagonalisation of a symmetric matrix; returns diagonal and
// sub-diagonal (offdiag[i] couples i and i+1, last entry 0).
void tridiagonalize(Matrix a, std::vector<double>& diag, std::vector<double>& offdiag) {
    const std::size_t n = a.rows();
    std::vector<double> v(n), p(n), w(n);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double norm = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) norm += a(i, k) * a(i, k);
        norm = std::sqrt(norm);
        if (norm == 0.0) continue;
        const double alpha = a(k + 1, k) > 0 ? -norm : norm;
        double vnorm = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            v[i] = a(i, k);
            if (i == k + 1) v[i] -= alpha;
            vnorm += v[i] * v[i];
        }
        vnorm = std::sqrt(vnorm);
        if (vnorm == 0.0) continue;
        for (std::size_t i = k + 1; i < n; ++i) v[i] /= vnorm;
        // A22 <- A22 - v w^T - w v^T with w = 2p - 2(v.p)v, p = A22 v
        double vp = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) s += a(i, j) * v[j];
            p[i] = s;
            vp += v[i] * s;
        }
        for (std::size_t i = k + 1; i < n; ++i) w[i] = 2.0 * p[i] - 2.0 * vp * v[i];
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= v[i] * w[j] + w[i] * v[j];
        a(k + 1, k) = a(k, k + 1) = alpha;
        for (std::size_t i = k + 2; i < n; ++i) a(i, k) = a(k, i) = 0.0;
    }
    diag.assign(n, 0.0);
    offdiag.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i);
    for (std::size_t i = 0; i + 1 < n; ++i) offdiag[i] = a(i + 1, i);
}

// Implicit QL with Wilkinson-style shifts on a symmetric tridiagonal matrix.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e) {
    const int n = static_cast<int>(d.size());
    const long budget = 100L * std::max(n, 1);
    long sweeps = 0;
    for (int l = 0; l < n; ++l) {
        int m = l;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= kEps * dd) break;
            }
            if (m == l) break;
            if (++sweeps > budget) {
                throw Error(ErrorCode::NonConvergence,
                            "tridiagonal QL exceeded " + std::to_string(budget) + " sweeps");
            }
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool underflow = false;
            for (int i = m - 1; i >= l; --i) {
                const double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        } while (m != l);
    }
}

// One-sided (Hestenes) Jacobi: A V = W with orthogonal columns in W.
struct JacobiResult {
    std::vector<double> sigma;  // descending
    CMatrix v;                  // right singular vectors, columns match sigma
};

JacobiResult jacobi_svd(CMatrix w) {
    const std::size_t m = w.rows();
    const std::size_t n = w.cols();
    CMatrix v = CMatrix::identity(n);
    constexpr int max_sweeps = 80;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double alpha = 0.0, beta = 0.0;
                Complex gamma{};
                for (std::size_t i = 0; i < m; ++i) {
                    alpha += std::norm(w(i, p));
                    beta += std::norm(w(i, q));
                    gamma += std::conj(w(i, p)) * w(i, q);
                }
                const double g = std::abs(gamma);
                if (g == 0.0 || g <= kEps * std::sqrt(alpha * beta)) continue;
                rotated = true;
                const Complex phase = std::conj(gamma / g);
                const double zeta = (beta - alpha) / (2.0 * g);
                const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t i = 0; i < m; ++i) {
                    const Complex xp = w(i, p);
                    const Complex xq = w(i, q) * phase;
                    w(i, p) = c * xp - s * xq;
                    w(i, q) = s * xp + c * xq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex xp = v(i, p);
                    const Complex xq = v(i, q) * phase;
                    v(i, p) = c * xp - s * xq;
                    v(i, q) = s * xp + c * xq;
                }
            }
        }
        if (!rotated) break;
    }
    std::vector<double> norms(n);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += std::norm(w(i, j));
        norms[j] = std::sqrt(s);
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return norms[a] > norms[b]; });
    JacobiResult out;
    out.v = CMatrix(n, n);
    out.sigma.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.sigma.push_back(norms[order[k]]);
        for (std::size_t i = 0; i < n; ++i) out.v(i, k) = v(i, order[k]);
    }
    return out;
}

CMatrix conjugate_transpose(const CMatrix& a) {
    CMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = std::conj(a(i, j));
    return t;
}

double resolve_rank_tol(double rank_tol, const std::vector<double>& sigma) {
    if (rank_tol > 0.0) return rank_tol;
    const double top = sigma.empty() ? 0.0 : sigma.front();
    return kDefaultRankScale * std::max(1.0, top);
}

bool spectral_order(const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
}

}  // namespace

int SpectrumSummary::total_multiplicity() const {
    int total = 0;
    for (const auto& e : eigenvalues) total += e.multiplicity;
    return total;
}

std::vector<Complex> SpectrumSummary::expanded() const {
    std::vector<Complex> out;
    for (const auto& e : eigenvalues) out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), e.value);
    return out;
}

SubspaceBasis::SubspaceBasis(std::size_t ambient_dim, CMatrix columns)
    : ambient_(ambient_dim), vectors_(std::move(columns)) {
    if (vectors_.cols() > 0 && vectors_.rows() != ambient_) {
        throw Error(ErrorCode::DimensionMismatch, "basis vectors do not match ambient dimension");
    }
    if (vectors_.cols() == 0) vectors_ = CMatrix(ambient_, 0);
}

SubspaceBasis SubspaceBasis::from_real_columns(const Matrix& columns) {
    return SubspaceBasis(columns.rows(), to_complex(columns));
}

double default_cluster_tolerance(double spectral_radius) {
    return kDefaultClusterScale * std::max(1.0, spectral_radius);
}

bool is_numerically_symmetric(const Matrix& m) {
    if (!m.is_square()) return false;
    return asymmetry(m) <= kSymmetryScale * norm_inf(m);
}

std::vector<double> symmetric_eigenvalues(const Matrix& m) {
    require_valid_square(m, "symmetric_eigenvalues");
    std::vector<double> d, e;
    tridiagonalize(m, d, e);
    tridiagonal_ql(d, e);
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

std::vector<Complex> eigenvalues(const Matrix& m) {
    require_valid_square(m, "eigenvalues");
    if (is_numerically_symmetric(m)) {
        const auto d = symmetric_eigenvalues(m);
        return {d.begin(), d.end()};
    }
    Work a(m);
    balance(a);
    to_hessenberg(a);
    return hessenberg_qr(a);
}

SpectrumSummary summarize(const std::vector<Complex>& values, double tol) {
    std::vector<Complex> sorted = values;
    std::sort(sorted.begin(), sorted.end(), spectral_order);
    double rho = 0.0;
    for (const auto& z : sorted) rho = std::max(rho, std::abs(z));
    if (tol <= 0.0) tol = default_cluster_tolerance(rho);

    // single-linkage clustering in the complex plane
    const std::size_t n = sorted.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(sorted[i] - sorted[j]) <= tol) parent[find(j)] = find(i);

    struct Cluster {
        Complex sum{};
        int count = 0;
    };
    std::vector<Cluster> clusters;
    std::vector<long> slot(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = find(i);
        if (slot[root] < 0) {
            slot[root] = static_cast<long>(clusters.size());
            clusters.emplace_back();
        }
        auto& c = clusters[static_cast<std::size_t>(slot[root])];
        c.sum += sorted[i];
        ++c.count;
    }
    SpectrumSummary out;
    out.cluster_tolerance = tol;
    for (const auto& c : clusters) {
        Complex mean = c.sum / static_cast<double>(c.count);
        // rounding residue far below the tolerance, e.g. 1e-16 for an exact zero
        const double snap = 1e-3 * tol;
        if (std::abs(mean.real()) <= snap) mean.real(0.0);
        if (std::abs(mean.imag()) <= snap) mean.imag(0.0);
        out.eigenvalues.push_back({mean, c.count});
    }
    // cluster means of a long chain can still sit within tol of each other
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < out.eigenvalues.size() && !merged; ++i)
            for (std::size_t j = i + 1; j < out.eigenvalues.size() && !merged; ++j) {
                auto& a = out.eigenvalues[i];
                const auto& b = out.eigenvalues[j];
                if (std::abs(a.value - b.value) <= tol) {
                    a.value = (a.value * static_cast<double>(a.multiplicity) +
                               b.value * static_cast<double>(b.multiplicity)) /
                              static_cast<double>(a.multiplicity + b.multiplicity);
                    a.multiplicity += b.multiplicity;
                    out.eigenvalues.erase(out.eigenvalues.begin() + static_cast<long>(j));
                    merged = true;
                }
            }
    }
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end(),
              [](const Eigenvalue& a, const Eigenvalue& b) { return spectral_order(a.value, b.value); });
    for (const auto& e : out.eigenvalues) out.spectral_radius = std::max(out.spectral_radius, std::abs(e.value));
    return out;
}

SpectrumSummary eigen_decompose(const Matrix& m, double tol) {
    if (tol < 0.0) throw Error(ErrorCode::InvalidParams, "cluster tolerance must be nonnegative");
    return summarize(eigenvalues(m), tol);
}

std::vector<double> char_poly(const Matrix& m) {
    require_valid_square(m, "char_poly");
    const std::size_t n = m.rows();
    if (n > 16) throw Error(ErrorCode::OrderTooLarge, "char_poly supports n <= 16, got " + std::to_string(n));

    using Real = long double;
    const Real scale = std::max<Real>(1.0L, norm_inf(m));
    std::vector<Real> a(n * n);
    for (std::size_t i = 0; i < n * n; ++i) a[i] = m.entries()[i] / scale;

    // coeff[k] multiplies x^(n-k)
    std::vector<Real> coeff(n + 1, 0.0L);
    coeff[0] = 1.0L;
    std::vector<Real> mk(n * n, 0.0L), amk(n * n, 0.0L);
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i < n * n; ++i) mk[i] = amk[i];
        for (std::size_t i = 0; i < n; ++i) mk[i * n + i] += coeff[k - 1];
        std::fill(amk.begin(), amk.end(), 0.0L);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                const Real ail = a[i * n + l];
                if (ail == 0.0L) continue;
                for (std::size_t j = 0; j < n; ++j) amk[i * n + j] += ail * mk[l * n + j];
            }
        Real tr = 0.0L;
        for (std::size_t i = 0; i < n; ++i) tr += amk[i * n + i];
        coeff[k] = -tr / static_cast<Real>(k);
    }
    std::vector<double> out(n + 1);
    Real power = 1.0L;
    for (std::size_t k = 0; k <= n; ++k) {
        out[k] = static_cast<double>(coeff[k] * power) + 0.0;
        power *= scale;
    }
    return out;
}

Complex evaluate_poly(const std::vector<double>& coeffs, Complex x) {
    Complex acc{};
    for (double c : coeffs) acc = acc * x + c;
    return acc;
}

std::vector<double> singular_values(const CMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return {};
    if (a.cols() > a.rows()) return jacobi_svd(conjugate_transpose(a)).sigma;
    return jacobi_svd(a).sigma;
}

std::size_t numerical_rank(const CMatrix& a, double rank_tol) {
    const auto sigma = singular_values(a);
    const double tol = resolve_rank_tol(rank_tol, sigma);
    return static_cast<std::size_t>(std::count_if(sigma.begin(), sigma.end(), [&](double s) { return s > tol; }));
}

SubspaceBasis nullspace(const CMatrix& a, double rank_tol) {
    const std::size_t n = a.cols();
    if (n == 0) return SubspaceBasis(0, CMatrix());
    CMatrix work = a;
    if (work.rows() < n) {
        // pad with zero rows so the column count never exceeds the row count
        CMatrix padded(n, n);
        for (std::size_t i = 0; i < work.rows(); ++i)
            for (std::size_t j = 0; j < n; ++j) padded(i, j) = work(i, j);
        work = std::move(padded);
    }
    const auto svd = jacobi_svd(std::move(work));
    const double tol = resolve_rank_tol(rank_tol, svd.sigma);
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < n; ++k)
        if (svd.sigma[k] <= tol) keep.push_back(k);
    CMatrix basis(n, keep.size());
    for (std::size_t c = 0; c < keep.size(); ++c)
        for (std::size_t i = 0; i < n; ++i) basis(i, c) = svd.v(i, keep[c]);
    return SubspaceBasis(n, std::move(basis));
}

SubspaceBasis nullspace(const Matrix& m, Complex shift, double rank_tol) {
    require_valid_square(m, "nullspace");
    CMatrix shifted = to_complex(m);
    for (std::size_t i = 0; i < m.rows(); ++i) shifted(i, i) -= shift;
    return nullspace(shifted, rank_tol);
}

SubspaceBasis eigenspace(const Matrix& m, Complex lambda, double rank_tol) {
    auto basis = nullspace(m, lambda, rank_tol);
    if (basis.dim() > 0) return basis;
    CMatrix shifted = to_complex(m);
    for (std::size_t i = 0; i < m.rows(); ++i) shifted(i, i) -= lambda;
    const auto svd = jacobi_svd(std::move(shifted));
    const std::size_t n = m.rows();
    CMatrix v(n, 1);
    for (std::size_t i = 0; i < n; ++i) v(i, 0) = svd.v(i, n - 1);
    return SubspaceBasis(n, std::move(v));
}

std::size_t intersection_dim(const SubspaceBasis& u, const SubspaceBasis& v, double rank_tol) {
    if (u.ambient_dim() != v.ambient_dim()) {
        throw Error(ErrorCode::DimensionMismatch, "subspaces live in different ambient spaces (" +
                                                      std::to_string(u.ambient_dim()) + " vs " +
                                                      std::to_string(v.ambient_dim()) + ")");
    }
    if (u.dim() == 0 || v.dim() == 0) return 0;
    const std::size_t n = u.ambient_dim();
    CMatrix stacked(n, u.dim() + v.dim());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < u.dim(); ++j) stacked(i, j) = u.vectors()(i, j);
        for (std::size_t j = 0; j < v.dim(); ++j) stacked(i, u.dim() + j) = v.vectors()(i, j);
    }
    const std::size_t rank = numerical_rank(stacked, rank_tol);
    const std::size_t total = u.dim() + v.dim();
    const std::size_t dim = total - std::min(rank, total);
    return std::min({dim, u.dim(), v.dim()});
}

}  // namespace equispec
