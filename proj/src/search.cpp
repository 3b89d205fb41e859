#include "ndl/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "ndl/spectral.hpp"

namespace ndl {

namespace {

double spectral_radius_of(const Graph& g) {
    return ndl_spectrum(g).spectrum.eigenvalues.back();
}

double explicit_diameter_bound(int n, int diameter) {
    return 2.0 - static_cast<double>(n - 2) / (static_cast<double>(n) * diameter);
}

void blank_extremes(EnumerationSummary& s) {
    s.max_spectral_radius = -std::numeric_limits<double>::infinity();
    s.min_second_eigenvalue = std::numeric_limits<double>::infinity();
}

// Runs the spectral bound checks on one graph and folds it into the summary.
void check_graph(const Graph& g, double tol, EnumerationSummary& s) {
    const int n = g.vertex_count();
    const DistanceData dd = all_pairs_distances(g);
    const Spectrum spec = eigen_decompose(build_ndl(dd));

    const double second = spec.eigenvalues[1];
    const double radius = spec.eigenvalues.back();
    const double ratio = static_cast<double>(n) / (n - 1);

    ++s.graphs_checked;
    if (radius > s.max_spectral_radius) {
        s.max_spectral_radius = radius;
        s.argmax_graph6 = encode_graph6(g);
    }
    if (second < s.min_second_eigenvalue) {
        s.min_second_eigenvalue = second;
        s.argmin_graph6 = encode_graph6(g);
    }

    if (second > ratio + tol || radius < ratio - tol ||
        radius > explicit_diameter_bound(n, dd.diameter) + tol)
        s.bound_violations.push_back(encode_graph6(g));

    if (std::abs(radius - ratio) <= tol && !g.is_complete())
        s.uniqueness_violations.push_back(encode_graph6(g));
}

void merge_into(EnumerationSummary& total, const EnumerationSummary& part) {
    total.graphs_checked += part.graphs_checked;
    if (part.max_spectral_radius > total.max_spectral_radius) {
        total.max_spectral_radius = part.max_spectral_radius;
        total.argmax_graph6 = part.argmax_graph6;
    }
    if (part.min_second_eigenvalue < total.min_second_eigenvalue) {
        total.min_second_eigenvalue = part.min_second_eigenvalue;
        total.argmin_graph6 = part.argmin_graph6;
    }
    total.uniqueness_violations.insert(total.uniqueness_violations.end(),
                                       part.uniqueness_violations.begin(),
                                       part.uniqueness_violations.end());
    total.bound_violations.insert(total.bound_violations.end(), part.bound_violations.begin(),
                                  part.bound_violations.end());
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

std::pair<int, int> pair_from_index(int n, std::uint64_t index) {
    for (int i = 0; i < n - 1; ++i) {
        const std::uint64_t row = static_cast<std::uint64_t>(n - 1 - i);
        if (index < row) return {i, i + 1 + static_cast<int>(index)};
        index -= row;
    }
    throw std::out_of_range("pair index out of range");
}

}  // namespace

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

EnumerationSummary enumerate_verify(int n, double tol, int threads, const ProgressFn& progress) {
    if (n < 2 || n > 8)
        throw std::invalid_argument("exhaustive verification supports orders 2 through 8");
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");

    const std::uint64_t total_masks = ConnectedGraphEnumerator::mask_count(n);
    const int workers = resolve_threads(threads);
    const std::uint64_t chunk =
        std::max<std::uint64_t>(1024, total_masks / (static_cast<std::uint64_t>(workers) * 16));
    const std::uint64_t chunks = (total_masks + chunk - 1) / chunk;

    std::vector<EnumerationSummary> parts(chunks);
    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<std::uint64_t> done_masks{0};
    std::mutex progress_mutex;

    auto worker = [&] {
        for (;;) {
            const std::uint64_t c = next_chunk.fetch_add(1);
            if (c >= chunks) return;
            const std::uint64_t lo = c * chunk;
            const std::uint64_t hi = std::min(total_masks, lo + chunk);
            EnumerationSummary local;
            local.n = n;
            blank_extremes(local);
            ConnectedGraphEnumerator en(n, lo, hi);
            while (auto g = en.next()) check_graph(*g, tol, local);
            parts[c] = std::move(local);
            const std::uint64_t done = done_masks.fetch_add(hi - lo) + (hi - lo);
            if (progress) {
                const std::lock_guard<std::mutex> lock(progress_mutex);
                progress(done, total_masks);
            }
        }
    };

    std::vector<std::thread> pool;
    for (int t = 1; t < workers; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    EnumerationSummary total;
    total.n = n;
    blank_extremes(total);
    for (const auto& part : parts) merge_into(total, part);
    return total;
}

EnumerationSummary verify_graphs(const std::vector<Graph>& graphs, double tol) {
    if (graphs.empty()) throw std::invalid_argument("corpus is empty");
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");

    EnumerationSummary total;
    blank_extremes(total);
    total.n = graphs.front().vertex_count();
    for (const auto& g : graphs) {
        if (g.vertex_count() < 2)
            throw std::invalid_argument("corpus graphs need at least 2 vertices");
        if (g.vertex_count() != total.n) total.n = 0;
        check_graph(g, tol, total);
    }
    return total;
}

BarbellParams paper_family_params(int n) {
    if (n < 5) throw std::invalid_argument("the barbell family starts at 5 vertices");
    const int path = static_cast<int>(std::llround(std::sqrt(2.0 * n)));
    const int k = static_cast<int>(std::llround((n - path) / 2.0));
    const int p = n - 2 * k;
    if (k < 1 || p < 0)
        throw std::invalid_argument("order too small for the square-root barbell family");
    return {k, p, k};
}

std::vector<SweepRecord> barbell_sweep(int n, SweepMode mode) {
    if (n < 5) throw std::invalid_argument("barbell sweeps start at 5 vertices");

    std::vector<BarbellParams> configs;
    if (mode == SweepMode::PaperFamily) {
        configs.push_back(paper_family_params(n));
    } else {
        for (int k1 = 1; k1 < n; ++k1)
            for (int k2 = 1; k2 <= k1; ++k2)
                if (n - k1 - k2 >= 0) configs.push_back({k1, n - k1 - k2, k2});
    }

    std::vector<SweepRecord> records;
    records.reserve(configs.size());
    for (const auto& params : configs) {
        const Graph g = make_barbell(params);
        const auto [spec, dd] = ndl_spectrum(g);
        const double radius = spec.eigenvalues.back();
        const double gap = 2.0 - radius;
        records.push_back({n, params.k1, params.p, params.k2, radius, gap,
                           gap * std::sqrt(static_cast<double>(n)), dd.diameter});
    }
    std::stable_sort(records.begin(), records.end(),
                     [](const SweepRecord& a, const SweepRecord& b) {
                         return a.spectral_radius > b.spectral_radius;
                     });
    return records;
}

std::vector<std::pair<int, double>> fit_gap_constant(const std::vector<SweepRecord>& records) {
    std::set<int> orders;
    for (const auto& r : records) orders.insert(r.n);
    if (orders.size() < 3)
        throw std::invalid_argument("gap series needs records from at least 3 distinct orders");

    std::vector<std::pair<int, double>> series;
    series.reserve(records.size());
    for (const auto& r : records) series.emplace_back(r.n, r.scaled_gap);
    std::stable_sort(series.begin(), series.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    return series;
}

BoundAuditReport bound_audit(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("bound audit needs at least 2 vertices");
    const auto [spec, dd] = ndl_spectrum(g);

    BoundAuditReport report;
    report.n = n;
    report.diameter = dd.diameter;
    report.spectral_radius = spec.eigenvalues.back();
    report.bound = explicit_diameter_bound(n, dd.diameter);
    report.margin = report.bound - report.spectral_radius;
    return report;
}

HillClimbResult hill_climb(int n, std::uint64_t seed, std::uint64_t max_steps) {
    if (n < 4) throw std::invalid_argument("hill climbing needs at least 4 vertices");
    if (max_steps < 1) throw std::invalid_argument("at least one step is required");

    HillClimbResult result;
    result.seed = seed;
    result.graph = random_connected(n, 0.5, seed);
    result.spectral_radius = spectral_radius_of(result.graph);
    result.start_spectral_radius = result.spectral_radius;

    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    const std::uint64_t plateau_cap = static_cast<std::uint64_t>(n) * n;

    while (result.steps < max_steps && result.plateau < plateau_cap) {
        ++result.steps;
        const auto [u, v] = pair_from_index(n, uniform_below(rng, pairs));
        const bool removing = result.graph.has_edge(u, v);
        result.graph.toggle_edge(u, v);

        bool improved = false;
        if (!removing || result.graph.connected()) {
            const double candidate = spectral_radius_of(result.graph);
            if (candidate > result.spectral_radius + 1e-12) {
                result.spectral_radius = candidate;
                improved = true;
            }
        }
        if (improved) {
            ++result.accepted;
            result.plateau = 0;
        } else {
            result.graph.toggle_edge(u, v);  // revert
            ++result.plateau;
        }
    }
    return result;
}

std::vector<DiameterReportRow>
diameter_lower_bound_report(const std::vector<std::pair<std::string, Graph>>& candidates) {
    if (candidates.empty()) throw std::invalid_argument("no candidate graphs given");

    std::vector<DiameterReportRow> rows;
    rows.reserve(candidates.size());
    for (const auto& [label, g] : candidates) {
        const DistanceData dd = all_pairs_distances(g);
        const double root_n = std::sqrt(static_cast<double>(g.vertex_count()));
        rows.push_back({label, g.vertex_count(), dd.diameter, dd.diameter / root_n,
                        dd.diameter < 0.5 * root_n});
    }
    return rows;
}

}  // namespace ndl
