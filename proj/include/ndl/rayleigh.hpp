#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ndl/graph.hpp"

namespace ndl {

/// Vertex split by harmonic-vector sign (zeros land on the positive side),
/// together with a fixed diameter-realizing geodesic and its restriction to
/// the two sides.
struct SignPartition {
    std::vector<int> positive;            // ascending vertex indices
    std::vector<int> negative;            // ascending vertex indices
    std::vector<int> geodesic;            // path order, diameter+1 vertices
    std::vector<int> geodesic_positive;   // geodesic vertices on the positive side
    std::vector<int> geodesic_negative;
    std::vector<std::uint8_t> side;       // per vertex: 1 positive, 0 negative
};

struct ObjectiveReport {
    double obj0 = 0.0;
    double obj1 = 0.0;
    double obj2 = 0.0;
    double obj3 = 0.0;
    std::vector<std::int64_t> transmission_positive;
    std::vector<std::int64_t> transmission_negative;
};

/// Outcome of the three eigenvector balance conditions at a given epsilon,
/// with the attained minimum fractions so callers can report margins.
struct ConditionCheck {
    double epsilon = 0.0;
    bool mass_balanced = false;      // both sign classes hold >= eps of the squared mass
    bool geodesic_balanced = false;  // both geodesic restrictions hold >= eps*diam vertices
    bool partial_balanced = false;   // both partial transmissions hold >= eps*t(v) everywhere
    double min_mass_fraction = 0.0;
    double min_geodesic_fraction = 0.0;
    double min_partial_fraction = 0.0;
};

inline constexpr double kDefaultConditionEpsilon = 0.05;

/// sum_{i<j} d(i,j)(y_i - y_j)^2 / sum_i y_i^2 t(i); equals the matrix
/// Rayleigh quotient of the normalized distance Laplacian at x = T^{1/2} y.
double rayleigh_sos(const DistanceData& dd, const std::vector<double>& y);

/// sum_{i<j} d(i,j)(y_i + y_j)^2 / sum_i y_i^2 t(i); complements rayleigh_sos
/// to exactly 2.
double obj0(const DistanceData& dd, const std::vector<double>& y);

/// sum_{i<j} (y_i + y_j)^2 / (n * diam * sum_i y_i^2).
double obj1(const DistanceData& dd, const std::vector<double>& y);

SignPartition sign_partition(const Graph& g, const DistanceData& dd,
                             const std::vector<double>& y);

/// Same-sign pair terms only; y must respect the partition's signs.
double obj2(const DistanceData& dd, const SignPartition& part, const std::vector<double>& y);

/// (|P'|^2/8) mass on the positive side plus (|N'|^2/8) mass on the negative
/// side, over sum_i y_i^2 t(i); y must respect the partition's signs.
double obj3(const DistanceData& dd, const SignPartition& part, const std::vector<double>& y);

/// Distance sums restricted to each side; the two vectors add up to the
/// transmissions exactly.
std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>
partial_transmissions(const DistanceData& dd, const SignPartition& part);

ConditionCheck condition_check(const Graph& g, const DistanceData& dd,
                               const std::vector<double>& y, double epsilon);

/// sum_{i<j} (z_i + z_j)^2 by direct summation (n >= 2).
double pair_sum_direct(const std::vector<double>& z);

/// (n-2)||z||^2 + (sum z)^2, the closed form of pair_sum_direct.
double pair_sum_closed_form(const std::vector<double>& z);

ObjectiveReport evaluate_objectives(const DistanceData& dd, const SignPartition& part,
                                    const std::vector<double>& y);

}  // namespace ndl
