#pragma once

#include <span>
#include <vector>

#include "ndl/graph.hpp"

namespace ndl {

/// Dense real symmetric matrix; set() writes both (i,j) and (j,i).
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(int n);

    int order() const noexcept { return n_; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, double value);

    double frobenius_norm() const;
    std::span<const double> data() const { return a_; }

private:
    int n_ = 0;
    std::vector<double> a_;
};

/// Eigenvalues in ascending order with matching orthonormal eigenvectors
/// (column-major; each column's first non-negligible entry is positive).
struct Spectrum {
    int n = 0;
    std::vector<double> eigenvalues;
    std::vector<double> vectors;  // column-major n*n

    std::span<const double> eigenvector(int k) const {
        return {vectors.data() + static_cast<std::size_t>(k) * n, static_cast<std::size_t>(n)};
    }
};

/// Eigenvector rescaled entrywise by 1/sqrt(transmission).
struct HarmonicVector {
    std::vector<double> values;
    double eigenvalue = 0.0;
};

/// I - T^{-1/2} D T^{-1/2}: unit diagonal, entry (i,j) equal to
/// -dist(i,j)/sqrt(transmission_i * transmission_j).
SymmetricMatrix build_ndl(const DistanceData& dd);

/// Cyclic Jacobi diagonalization. Iterates full sweeps until the off-diagonal
/// Frobenius mass drops below 1e-13 * max(1, ||A||_F); deterministic sweep
/// order and tie handling.
Spectrum eigen_decompose(const SymmetricMatrix& a);

struct NdlSpectrum {
    Spectrum spectrum;
    DistanceData distances;
};

/// all_pairs_distances -> build_ndl -> eigen_decompose, with sanity checks
/// that the bottom eigenvalue is 0 and sqrt(transmission) spans the kernel.
NdlSpectrum ndl_spectrum(const Graph& g);

HarmonicVector harmonic(const Spectrum& spec, const DistanceData& dd, int index);

/// ||M u|| / ||u|| for u = entrywise sqrt(transmission).
double kernel_residual(const SymmetricMatrix& m, const DistanceData& dd);

}  // namespace ndl
