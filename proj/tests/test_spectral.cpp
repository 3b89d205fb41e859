#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "ndl/graph.hpp"
#include "ndl/spectral.hpp"

using namespace ndl;

namespace {

// Brute-force oracle for 3x3 symmetric eigenvalues: evaluate det(A - xI)
// directly and bisect the sign changes of the characteristic polynomial.
// Only valid when the three roots are distinct.
double char_poly_3(const SymmetricMatrix& a, double x) {
    const double m00 = a(0, 0) - x, m11 = a(1, 1) - x, m22 = a(2, 2) - x;
    const double m01 = a(0, 1), m02 = a(0, 2), m12 = a(1, 2);
    return m00 * (m11 * m22 - m12 * m12) - m01 * (m01 * m22 - m12 * m02) +
           m02 * (m01 * m12 - m11 * m02);
}

std::array<double, 3> oracle_eigen_3(const SymmetricMatrix& a) {
    double lo = -10.0, hi = 10.0;
    std::array<double, 3> roots{};
    int found = 0;
    const int grid = 200000;
    double prev_x = lo, prev_f = char_poly_3(a, lo);
    for (int i = 1; i <= grid && found < 3; ++i) {
        const double x = lo + (hi - lo) * i / grid;
        const double f = char_poly_3(a, x);
        if ((prev_f < 0) != (f < 0)) {
            double l = prev_x, r = x;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (l + r);
                if ((char_poly_3(a, l) < 0) != (char_poly_3(a, mid) < 0))
                    r = mid;
                else
                    l = mid;
            }
            roots[found++] = 0.5 * (l + r);
        }
        prev_x = x;
        prev_f = f;
    }
    REQUIRE(found == 3);
    return roots;
}

void check_spectrum_contract(const SymmetricMatrix& a, const Spectrum& spec) {
    const int n = a.order();
    REQUIRE(spec.n == n);
    REQUIRE(static_cast<int>(spec.eigenvalues.size()) == n);

    for (int k = 1; k < n; ++k) CHECK(spec.eigenvalues[k - 1] <= spec.eigenvalues[k]);

    // sign convention: first non-negligible component positive
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            if (std::abs(spec.eigenvector(k)[i]) > 1e-12) {
                CHECK(spec.eigenvector(k)[i] > 0.0);
                break;
            }
        }
    }

    // orthonormality: max |Q^T Q - I|
    double ortho = 0.0;
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            double dot = 0.0;
            for (int i = 0; i < n; ++i) dot += spec.eigenvector(k)[i] * spec.eigenvector(l)[i];
            ortho = std::max(ortho, std::abs(dot - (k == l ? 1.0 : 0.0)));
        }
    CHECK(ortho <= 1e-10);

    // reconstruction: ||A - Q L Q^T||_F
    double err2 = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double rec = 0.0;
            for (int k = 0; k < n; ++k)
                rec += spec.eigenvalues[k] * spec.eigenvector(k)[i] * spec.eigenvector(k)[j];
            const double diff = a(i, j) - rec;
            err2 += diff * diff;
        }
    CHECK(std::sqrt(err2) <= 1e-10 * std::max(1.0, a.frobenius_norm()));
}

SymmetricMatrix random_symmetric(std::mt19937_64& rng, int n, double scale) {
    SymmetricMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            a.set(i, j, scale * (static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5));
    return a;
}

}  // namespace

TEST_CASE("normalized distance Laplacian entries") {
    const SymmetricMatrix k3 = build_ndl(all_pairs_distances(make_complete(3)));
    for (int i = 0; i < 3; ++i) CHECK(k3(i, i) == 1.0);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) CHECK(k3(i, j) == doctest::Approx(-0.5).epsilon(1e-14));

    const SymmetricMatrix p3 = build_ndl(all_pairs_distances(make_path(3)));
    CHECK(p3(0, 1) == doctest::Approx(-1.0 / std::sqrt(6.0)).epsilon(1e-14));
    CHECK(p3(0, 2) == doctest::Approx(-2.0 / 3.0).epsilon(1e-14));
    CHECK(p3(1, 2) == doctest::Approx(-1.0 / std::sqrt(6.0)).epsilon(1e-14));

    const SymmetricMatrix k2 = build_ndl(all_pairs_distances(make_complete(2)));
    CHECK(k2(0, 0) == 1.0);
    CHECK(k2(0, 1) == -1.0);

    DistanceData single;
    single.n = 1;
    single.dist = {0};
    single.transmission = {0};
    CHECK_THROWS_AS(build_ndl(single), std::invalid_argument);
}

TEST_CASE("eigenvalues of the smallest graphs") {
    const Spectrum k2 = eigen_decompose(build_ndl(all_pairs_distances(make_complete(2))));
    CHECK(std::abs(k2.eigenvalues[0]) <= 1e-13);
    CHECK(k2.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-13));

    const Spectrum k4 = eigen_decompose(build_ndl(all_pairs_distances(make_complete(4))));
    CHECK(std::abs(k4.eigenvalues[0]) < 1e-12);
    for (int k = 1; k < 4; ++k)
        CHECK(k4.eigenvalues[k] == doctest::Approx(4.0 / 3.0).epsilon(1e-12));

    SUBCASE("path on 3 vertices against the characteristic polynomial oracle") {
        const SymmetricMatrix m = build_ndl(all_pairs_distances(make_path(3)));
        const auto oracle = oracle_eigen_3(m);
        CHECK(std::abs(oracle[0]) <= 1e-9);
        CHECK(oracle[1] == doctest::Approx(4.0 / 3.0).epsilon(1e-9));
        CHECK(oracle[2] == doctest::Approx(5.0 / 3.0).epsilon(1e-9));

        const Spectrum spec = eigen_decompose(m);
        for (int k = 0; k < 3; ++k)
            CHECK(spec.eigenvalues[k] == doctest::Approx(oracle[k]).epsilon(1e-9));
    }
}

TEST_CASE("decomposition contract on random inputs") {
    std::mt19937_64 rng(991);
    for (int iter = 0; iter < 25; ++iter) {
        const int n = 2 + static_cast<int>(rng() % 12);
        const SymmetricMatrix a = random_symmetric(rng, n, 4.0);
        check_spectrum_contract(a, eigen_decompose(a));
    }
    for (int iter = 0; iter < 25; ++iter) {
        const Graph g = random_connected(2 + static_cast<int>(rng() % 14), 0.4, rng());
        const SymmetricMatrix a = build_ndl(all_pairs_distances(g));
        check_spectrum_contract(a, eigen_decompose(a));
    }
}

TEST_CASE("decomposition is deterministic") {
    std::mt19937_64 rng(5);
    const SymmetricMatrix a = random_symmetric(rng, 9, 2.0);
    const Spectrum first = eigen_decompose(a);
    const Spectrum second = eigen_decompose(a);
    CHECK(first.eigenvalues == second.eigenvalues);
    CHECK(first.vectors == second.vectors);
}

TEST_CASE("diagonal matrices pass through") {
    SymmetricMatrix a(4);
    a.set(0, 0, 3.0);
    a.set(1, 1, -1.0);
    a.set(2, 2, 0.5);
    a.set(3, 3, 0.5);
    const Spectrum spec = eigen_decompose(a);
    CHECK(spec.eigenvalues == std::vector<double>{-1.0, 0.5, 0.5, 3.0});
}

TEST_CASE("spectrum pipeline") {
    const auto k5 = ndl_spectrum(make_complete(5));
    CHECK(k5.spectrum.eigenvalues.back() == doctest::Approx(5.0 / 4.0).epsilon(1e-12));

    const auto p3 = ndl_spectrum(make_path(3));
    CHECK(p3.spectrum.eigenvalues[1] == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
    CHECK(p3.spectrum.eigenvalues[1] <= 1.5);
    CHECK(p3.spectrum.eigenvalues[2] >= 1.5);
    CHECK(p3.spectrum.eigenvalues[2] == doctest::Approx(5.0 / 3.0).epsilon(1e-12));

    const auto star = ndl_spectrum(parse_edge_list("0 1\n0 2\n0 3"));
    CHECK(std::abs(star.spectrum.eigenvalues.front()) <= 1e-9);
}

TEST_CASE("kernel, trace and eigenvalue bounds on random graphs") {
    std::mt19937_64 rng(333);
    for (int iter = 0; iter < 40; ++iter) {
        const int n = 2 + static_cast<int>(rng() % 20);
        const Graph g = random_connected(n, 0.3 + 0.7 * (static_cast<double>(rng() >> 11) * 0x1.0p-53),
                                         rng());
        const DistanceData dd = all_pairs_distances(g);
        const SymmetricMatrix m = build_ndl(dd);
        const Spectrum spec = eigen_decompose(m);

        CHECK(kernel_residual(m, dd) <= 1e-10);

        double trace = 0.0;
        for (const double ev : spec.eigenvalues) trace += ev;
        CHECK(trace == doctest::Approx(n).epsilon(1e-8));

        const double ratio = static_cast<double>(n) / (n - 1);
        CHECK(spec.eigenvalues.front() >= -1e-9);
        CHECK(spec.eigenvalues[1] <= ratio + 1e-9);
        CHECK(spec.eigenvalues.back() >= ratio - 1e-9);
        CHECK(spec.eigenvalues.back() <= 2.0 + 1e-9);
    }
}

TEST_CASE("harmonic eigenvectors") {
    SUBCASE("top of the two-vertex graph") {
        const auto [spec, dd] = ndl_spectrum(make_complete(2));
        const HarmonicVector h = harmonic(spec, dd, 1);
        const double r = 1.0 / std::sqrt(2.0);
        CHECK(h.values[0] == doctest::Approx(r).epsilon(1e-12));
        CHECK(h.values[1] == doctest::Approx(-r).epsilon(1e-12));
        CHECK(std::abs(h.values[0] * dd.transmission[0] + h.values[1] * dd.transmission[1]) <=
              1e-12);
    }
    SUBCASE("kernel index gives a constant vector") {
        const auto [spec, dd] = ndl_spectrum(make_barbell({3, 2, 3}));
        const HarmonicVector h = harmonic(spec, dd, 0);
        for (int i = 1; i < dd.n; ++i)
            CHECK(h.values[i] == doctest::Approx(h.values[0]).epsilon(1e-10));
    }
    SUBCASE("nonzero eigenvalues are transmission-orthogonal") {
        const auto [spec, dd] = ndl_spectrum(make_complete(4));
        const double max_t = 3.0;
        for (int k = 1; k < 4; ++k) {
            const HarmonicVector h = harmonic(spec, dd, k);
            double dot = 0.0, norm2 = 0.0;
            for (int i = 0; i < 4; ++i) {
                dot += h.values[i] * static_cast<double>(dd.transmission[i]);
                norm2 += h.values[i] * h.values[i];
            }
            CHECK(std::abs(dot) <= 1e-8 * std::sqrt(norm2) * max_t);
        }
    }
    SUBCASE("index range is enforced") {
        const auto [spec, dd] = ndl_spectrum(make_complete(3));
        CHECK_THROWS_AS(harmonic(spec, dd, 3), std::out_of_range);
        CHECK_THROWS_AS(harmonic(spec, dd, -1), std::out_of_range);
    }
}
