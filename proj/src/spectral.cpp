#include "ndl/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ndl {

namespace {

constexpr double kOffDiagonalTarget = 1e-13;
constexpr int kMaxSweeps = 60;

double off_diagonal_norm(const std::vector<double>& w, int n) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double a = w[static_cast<std::size_t>(i) * n + j];
            sum += 2.0 * a * a;
        }
    return std::sqrt(sum);
}

}  // namespace

SymmetricMatrix::SymmetricMatrix(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("matrix order must be at least 1");
    a_.assign(static_cast<std::size_t>(n) * n, 0.0);
}

void SymmetricMatrix::set(int i, int j, double value) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("matrix index out of range");
    a_[static_cast<std::size_t>(i) * n_ + j] = value;
    a_[static_cast<std::size_t>(j) * n_ + i] = value;
}

double SymmetricMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const double a : a_) sum += a * a;
    return std::sqrt(sum);
}

SymmetricMatrix build_ndl(const DistanceData& dd) {
    const int n = dd.n;
    if (n < 2)
        throw std::invalid_argument("the normalized distance Laplacian needs at least 2 vertices");
    std::vector<double> root_t(n);
    for (int i = 0; i < n; ++i) {
        if (dd.transmission[i] <= 0)
            throw std::invalid_argument(
                "zero transmission at vertex " + std::to_string(i) +
                " (single vertex or disconnected input)");
        root_t[i] = std::sqrt(static_cast<double>(dd.transmission[i]));
    }

    SymmetricMatrix m(n);
    for (int i = 0; i < n; ++i) {
        m.set(i, i, 1.0);
        for (int j = i + 1; j < n; ++j)
            m.set(i, j, -dd.distance(i, j) / (root_t[i] * root_t[j]));
    }
    return m;
}

Spectrum eigen_decompose(const SymmetricMatrix& a) {
    const int n = a.order();
    std::vector<double> w(a.data().begin(), a.data().end());
    std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;

    const double target = kOffDiagonalTarget * std::max(1.0, a.frobenius_norm());

    int sweeps = 0;
    while (off_diagonal_norm(w, n) > target) {
        if (sweeps++ == kMaxSweeps)
            throw std::runtime_error("Jacobi eigensolver failed to converge in " +
                                     std::to_string(kMaxSweeps) + " sweeps");
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = w[static_cast<std::size_t>(p) * n + q];
                if (apq == 0.0) continue;

                const double app = w[static_cast<std::size_t>(p) * n + p];
                const double aqq = w[static_cast<std::size_t>(q) * n + q];
                const double theta = (aqq - app) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e154) {
                    t = 1.0 / (2.0 * theta);
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = w[static_cast<std::size_t>(k) * n + p];
                    const double akq = w[static_cast<std::size_t>(k) * n + q];
                    w[static_cast<std::size_t>(k) * n + p] =
                        w[static_cast<std::size_t>(p) * n + k] = c * akp - s * akq;
                    w[static_cast<std::size_t>(k) * n + q] =
                        w[static_cast<std::size_t>(q) * n + k] = s * akp + c * akq;
                }
                w[static_cast<std::size_t>(p) * n + p] = app - t * apq;
                w[static_cast<std::size_t>(q) * n + q] = aqq + t * apq;
                w[static_cast<std::size_t>(p) * n + q] =
                    w[static_cast<std::size_t>(q) * n + p] = 0.0;

                for (int k = 0; k < n; ++k) {
                    const double vkp = v[static_cast<std::size_t>(k) * n + p];
                    const double vkq = v[static_cast<std::size_t>(k) * n + q];
                    v[static_cast<std::size_t>(k) * n + p] = c * vkp - s * vkq;
                    v[static_cast<std::size_t>(k) * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return w[static_cast<std::size_t>(i) * n + i] < w[static_cast<std::size_t>(j) * n + j];
    });

    Spectrum spec;
    spec.n = n;
    spec.eigenvalues.resize(n);
    spec.vectors.resize(static_cast<std::size_t>(n) * n);
    for (int k = 0; k < n; ++k) {
        const int src = order[k];
        spec.eigenvalues[k] = w[static_cast<std::size_t>(src) * n + src];
        double* column = spec.vectors.data() + static_cast<std::size_t>(k) * n;
        for (int i = 0; i < n; ++i) column[i] = v[static_cast<std::size_t>(i) * n + src];
        // sign convention: first non-negligible component positive
        for (int i = 0; i < n; ++i) {
            if (std::abs(column[i]) > 1e-12) {
                if (column[i] < 0.0)
                    for (int r = 0; r < n; ++r) column[r] = -column[r];
                break;
            }
        }
    }
    return spec;
}

NdlSpectrum ndl_spectrum(const Graph& g) {
    DistanceData dd = all_pairs_distances(g);
    const SymmetricMatrix m = build_ndl(dd);
    Spectrum spec = eigen_decompose(m);

    if (std::abs(spec.eigenvalues.front()) > 1e-9)
        throw std::runtime_error("bottom eigenvalue deviates from 0 beyond tolerance");
    if (kernel_residual(m, dd) > 1e-10)
        throw std::runtime_error("sqrt-transmission vector is not in the kernel within tolerance");

    return {std::move(spec), std::move(dd)};
}

HarmonicVector harmonic(const Spectrum& spec, const DistanceData& dd, int index) {
    if (index < 0 || index >= spec.n) throw std::out_of_range("eigenvalue index out of range");

    HarmonicVector h;
    h.eigenvalue = spec.eigenvalues[index];
    h.values.resize(spec.n);
    const auto x = spec.eigenvector(index);
    for (int i = 0; i < spec.n; ++i)
        h.values[i] = x[i] / std::sqrt(static_cast<double>(dd.transmission[i]));
    return h;
}

double kernel_residual(const SymmetricMatrix& m, const DistanceData& dd) {
    const int n = m.order();
    double u_norm2 = 0.0;
    std::vector<double> u(n);
    for (int i = 0; i < n; ++i) {
        u[i] = std::sqrt(static_cast<double>(dd.transmission[i]));
        u_norm2 += u[i] * u[i];
    }
    double r_norm2 = 0.0;
    for (int i = 0; i < n; ++i) {
        double r = 0.0;
        for (int j = 0; j < n; ++j) r += m(i, j) * u[j];
        r_norm2 += r * r;
    }
    return std::sqrt(r_norm2 / u_norm2);
}

}  // namespace ndl
