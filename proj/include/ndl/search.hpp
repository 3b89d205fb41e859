#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ndl/graph.hpp"

namespace ndl {

/// Result of sweeping the spectral bounds over a family of graphs. The
/// violation lists stay empty when the solver is correct; any entry is a
/// graph6 token of an offending graph.
struct EnumerationSummary {
    int n = 0;  // 0 when the input mixes orders
    std::uint64_t graphs_checked = 0;
    double max_spectral_radius = 0.0;
    std::string argmax_graph6;
    double min_second_eigenvalue = 0.0;
    std::string argmin_graph6;
    std::vector<std::string> uniqueness_violations;
    std::vector<std::string> bound_violations;

    bool operator==(const EnumerationSummary&) const = default;
};

using ProgressFn = std::function<void(std::uint64_t done_masks, std::uint64_t total_masks)>;

/// Checks every labeled connected graph on n vertices (2 <= n <= 8) against
/// the spectral sandwich around n/(n-1), the explicit diameter upper bound,
/// and uniqueness of the complete graph at the lower extreme. Partitions the
/// bitmask space over `threads` workers (0 = machine parallelism); results
/// are independent of the thread count.
EnumerationSummary enumerate_verify(int n, double tol = 1e-9, int threads = 0,
                                    const ProgressFn& progress = {});

/// Same per-graph checks over an explicit corpus (e.g. graph6 files).
EnumerationSummary verify_graphs(const std::vector<Graph>& graphs, double tol = 1e-9);

enum class SweepMode { PaperFamily, AllCompositions };

struct SweepRecord {
    int n = 0;
    int k1 = 0;
    int p = 0;
    int k2 = 0;
    double spectral_radius = 0.0;
    double gap = 0.0;         // 2 - spectral_radius
    double scaled_gap = 0.0;  // gap * sqrt(n)
    int diameter = 0;

    bool operator==(const SweepRecord&) const = default;
};

/// Balanced barbell with round((n - round(sqrt(2n)))/2) vertices per clique.
BarbellParams paper_family_params(int n);

/// Spectral radius of barbell graphs on n vertices: either the single
/// square-root-sized family member or all compositions k1 >= k2 >= 1,
/// p >= 0. Records are sorted by spectral radius, largest first.
std::vector<SweepRecord> barbell_sweep(int n, SweepMode mode);

/// (n, gap * sqrt(n)) series from sweep records spanning >= 3 distinct n.
std::vector<std::pair<int, double>> fit_gap_constant(const std::vector<SweepRecord>& records);

struct BoundAuditReport {
    int n = 0;
    int diameter = 0;
    double spectral_radius = 0.0;
    double bound = 0.0;   // 2 - (n-2)/(n*diam)
    double margin = 0.0;  // bound - spectral_radius, nonnegative up to tolerance
};

BoundAuditReport bound_audit(const Graph& g);

struct HillClimbResult {
    Graph graph;
    double spectral_radius = 0.0;
    double start_spectral_radius = 0.0;
    std::uint64_t steps = 0;     // attempted edge toggles
    std::uint64_t accepted = 0;
    std::uint64_t plateau = 0;   // consecutive rejections at stop
    std::uint64_t seed = 0;

    bool operator==(const HillClimbResult&) const = default;
};

/// Greedy single-edge-toggle ascent of the spectral radius from a random
/// connected start. Stops after max_steps toggles or n^2 consecutive
/// rejections; deterministic in (n, seed, max_steps).
HillClimbResult hill_climb(int n, std::uint64_t seed, std::uint64_t max_steps);

struct DiameterReportRow {
    std::string label;
    int n = 0;
    int diameter = 0;
    double diameter_ratio = 0.0;  // diam / sqrt(n)
    bool flagged = false;         // diam < 0.5 * sqrt(n)
};

/// Reports diam/sqrt(n) for candidate extremal graphs and flags candidates
/// whose diameter falls below 0.5*sqrt(n). Reporting only, never rejects.
std::vector<DiameterReportRow>
diameter_lower_bound_report(const std::vector<std::pair<std::string, Graph>>& candidates);

int resolve_threads(int requested);

}  // namespace ndl
