// Command-line front end: graph ingestion, spectrum/verify/sweep/climb/
// audit/objectives dispatch, JSON/CSV emission.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ndl/graph.hpp"
#include "ndl/rayleigh.hpp"
#include "ndl/search.hpp"
#include "ndl/spectral.hpp"

using nlohmann::json;

namespace {

// Configuration problems detected after flag parsing; mapped to exit code 1.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Round to 12 significant digits so serialized reports are stable and short.
double sig12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

json sig12_list(const std::vector<double>& values) {
    json out = json::array();
    for (const double v : values) out.push_back(sig12(v));
    return out;
}

struct SourceOpts {
    std::string input;
    std::string graph6;
    int complete = 0;
    int path = 0;
    int cycle = 0;
    std::vector<int> barbell;
};

void add_source_flags(CLI::App* cmd, SourceOpts& src) {
    cmd->add_option("--input", src.input, "edge-list file or graph6 corpus (one token per line)");
    cmd->add_option("--graph6", src.graph6, "single graph6 token");
    cmd->add_option("--complete", src.complete, "complete graph on N vertices");
    cmd->add_option("--path", src.path, "path on N vertices");
    cmd->add_option("--cycle", src.cycle, "cycle on N vertices");
    cmd->add_option("--barbell", src.barbell, "barbell parameters K1,P,K2")->delimiter(',');
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool looks_like_edge_list(const std::string& text) {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream t(line);
        std::string a, b, extra;
        if (!(t >> a)) continue;  // blank line
        if (!(t >> b) || (t >> extra)) return false;
        if (a == "n") return true;
        char* end = nullptr;
        std::strtol(a.c_str(), &end, 10);
        return end != nullptr && *end == '\0';
    }
    return false;
}

std::vector<std::pair<std::string, ndl::Graph>> graphs_from_file(const std::string& path) {
    const std::string text = read_file(path);
    std::vector<std::pair<std::string, ndl::Graph>> graphs;
    if (looks_like_edge_list(text)) {
        graphs.emplace_back(path, ndl::parse_edge_list(text));
        return graphs;
    }
    std::istringstream lines(text);
    std::string token;
    while (lines >> token) graphs.emplace_back(token, ndl::parse_graph6(token));
    if (graphs.empty()) throw ndl::ParseError("input file '" + path + "' holds no graphs");
    return graphs;
}

std::vector<std::pair<std::string, ndl::Graph>> resolve_graphs(const SourceOpts& src) {
    int chosen = 0;
    chosen += !src.input.empty();
    chosen += !src.graph6.empty();
    chosen += src.complete > 0;
    chosen += src.path > 0;
    chosen += src.cycle > 0;
    chosen += !src.barbell.empty();
    if (chosen != 1)
        throw ConfigError(
            "exactly one graph source is required "
            "(--input, --graph6, --complete, --path, --cycle or --barbell)");

    std::vector<std::pair<std::string, ndl::Graph>> graphs;
    if (!src.input.empty()) return graphs_from_file(src.input);
    if (!src.graph6.empty()) {
        graphs.emplace_back(src.graph6, ndl::parse_graph6(src.graph6));
    } else if (src.complete > 0) {
        graphs.emplace_back("complete-" + std::to_string(src.complete),
                            ndl::make_complete(src.complete));
    } else if (src.path > 0) {
        graphs.emplace_back("path-" + std::to_string(src.path), ndl::make_path(src.path));
    } else if (src.cycle > 0) {
        graphs.emplace_back("cycle-" + std::to_string(src.cycle), ndl::make_cycle(src.cycle));
    } else {
        if (src.barbell.size() != 3)
            throw ConfigError("--barbell expects three comma-separated values K1,P,K2");
        const ndl::BarbellParams params{src.barbell[0], src.barbell[1], src.barbell[2]};
        graphs.emplace_back("barbell-" + std::to_string(params.k1) + "-" +
                                std::to_string(params.p) + "-" + std::to_string(params.k2),
                            ndl::make_barbell(params));
    }
    return graphs;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file '" + out_path + "'");
    out << text;
}

void require_json(const std::string& format, const char* command) {
    if (format != "json")
        throw ConfigError(std::string("csv output is only available for sweep; ") + command +
                          " emits json");
}

json summary_to_json(const ndl::EnumerationSummary& s, double tol) {
    return json{{"n", s.n},
                {"graphs_checked", s.graphs_checked},
                {"max_spectral_radius", sig12(s.max_spectral_radius)},
                {"argmax_graph6", s.argmax_graph6},
                {"min_second_eigenvalue", sig12(s.min_second_eigenvalue)},
                {"argmin_graph6", s.argmin_graph6},
                {"uniqueness_violations", s.uniqueness_violations},
                {"bound_violations", s.bound_violations},
                {"tolerance", tol}};
}

json condition_to_json(const ndl::ConditionCheck& c) {
    return json{{"epsilon", sig12(c.epsilon)},
                {"mass_balanced", c.mass_balanced},
                {"geodesic_balanced", c.geodesic_balanced},
                {"partial_balanced", c.partial_balanced},
                {"min_mass_fraction", sig12(c.min_mass_fraction)},
                {"min_geodesic_fraction", sig12(c.min_geodesic_fraction)},
                {"min_partial_fraction", sig12(c.min_partial_fraction)}};
}

int cmd_spectrum(const SourceOpts& src, const std::string& format, const std::string& out) {
    require_json(format, "spectrum");
    json graphs = json::array();
    for (const auto& [label, g] : resolve_graphs(src)) {
        const auto [spec, dd] = ndl::ndl_spectrum(g);
        const ndl::SymmetricMatrix m = ndl::build_ndl(dd);
        graphs.push_back({{"label", label},
                          {"n", g.vertex_count()},
                          {"diameter", dd.diameter},
                          {"eigenvalues", sig12_list(spec.eigenvalues)},
                          {"second_eigenvalue", sig12(spec.eigenvalues[1])},
                          {"spectral_radius", sig12(spec.eigenvalues.back())},
                          {"gap", sig12(2.0 - spec.eigenvalues.back())},
                          {"kernel_residual", sig12(ndl::kernel_residual(m, dd))}});
    }
    emit(json{{"graphs", graphs}}.dump(2) + "\n", out);
    return 0;
}

int cmd_verify(const std::string& input, int n, bool unsafe_large, double tol, int threads,
               const std::string& format, const std::string& out) {
    require_json(format, "verify");

    ndl::EnumerationSummary summary;
    if (!input.empty()) {
        std::vector<ndl::Graph> corpus;
        for (auto& [label, g] : graphs_from_file(input)) corpus.push_back(std::move(g));
        summary = ndl::verify_graphs(corpus, tol);
    } else {
        if (n < 2 || n > 8)
            throw ConfigError("--n must lie between 2 and 8");
        if (n == 8 && !unsafe_large)
            throw ConfigError("order 8 enumerates 2^28 graphs; pass --unsafe-large to confirm");
        const std::uint64_t total = ndl::ConnectedGraphEnumerator::mask_count(n);
        ndl::ProgressFn progress;
        if (total >= (1u << 20))
            progress = [](std::uint64_t done, std::uint64_t all) {
                std::fprintf(stderr, "verify: %llu/%llu masks\n",
                             static_cast<unsigned long long>(done),
                             static_cast<unsigned long long>(all));
            };
        summary = ndl::enumerate_verify(n, tol, threads, progress);
    }

    emit(summary_to_json(summary, tol).dump(2) + "\n", out);
    return summary.uniqueness_violations.empty() && summary.bound_violations.empty() ? 0 : 4;
}

json sweep_record_json(const ndl::SweepRecord& r) {
    return json{{"n", r.n},
                {"k1", r.k1},
                {"p", r.p},
                {"k2", r.k2},
                {"spectral_radius", sig12(r.spectral_radius)},
                {"gap", sig12(r.gap)},
                {"scaled_gap", sig12(r.scaled_gap)},
                {"diameter", r.diameter}};
}

int cmd_sweep(const std::vector<int>& orders, const std::string& family,
              const std::string& format, const std::string& out) {
    if (orders.empty()) throw ConfigError("sweep needs at least one --n");
    const ndl::SweepMode mode =
        family == "paper" ? ndl::SweepMode::PaperFamily : ndl::SweepMode::AllCompositions;

    std::vector<ndl::SweepRecord> records;
    std::vector<std::pair<std::string, ndl::Graph>> best_candidates;
    for (const int n : orders) {
        const auto batch = ndl::barbell_sweep(n, mode);
        const auto& best = batch.front();
        best_candidates.emplace_back("barbell-" + std::to_string(best.k1) + "-" +
                                         std::to_string(best.p) + "-" + std::to_string(best.k2),
                                     ndl::make_barbell({best.k1, best.p, best.k2}));
        records.insert(records.end(), batch.begin(), batch.end());
    }

    if (format == "csv") {
        std::string csv = "n,k1,p,k2,spectral_radius,gap,scaled_gap,diameter\n";
        char buf[160];
        for (const auto& r : records) {
            std::snprintf(buf, sizeof buf, "%d,%d,%d,%d,%.12g,%.12g,%.12g,%d\n", r.n, r.k1, r.p,
                          r.k2, r.spectral_radius, r.gap, r.scaled_gap, r.diameter);
            csv += buf;
        }
        emit(csv, out);
        return 0;
    }

    json doc;
    doc["records"] = json::array();
    for (const auto& r : records) doc["records"].push_back(sweep_record_json(r));

    std::set<int> distinct(orders.begin(), orders.end());
    if (mode == ndl::SweepMode::PaperFamily && distinct.size() >= 3) {
        json series = json::array();
        for (const auto& [n, scaled] : ndl::fit_gap_constant(records))
            series.push_back({n, sig12(scaled)});
        doc["scaled_series"] = series;
    }

    json rows = json::array();
    for (const auto& row : ndl::diameter_lower_bound_report(best_candidates))
        rows.push_back({{"label", row.label},
                        {"n", row.n},
                        {"diameter", row.diameter},
                        {"diameter_ratio", sig12(row.diameter_ratio)},
                        {"flagged", row.flagged}});
    doc["diameter_report"] = rows;

    emit(doc.dump(2) + "\n", out);
    return 0;
}

int cmd_climb(int n, std::uint64_t seed, std::uint64_t steps, const std::string& format,
              const std::string& out) {
    require_json(format, "climb");
    const ndl::HillClimbResult result = ndl::hill_climb(n, seed, steps);
    const auto report =
        ndl::diameter_lower_bound_report({{"climb", result.graph}}).front();

    emit(json{{"n", n},
              {"seed", seed},
              {"max_steps", steps},
              {"steps", result.steps},
              {"accepted", result.accepted},
              {"plateau", result.plateau},
              {"start_spectral_radius", sig12(result.start_spectral_radius)},
              {"spectral_radius", sig12(result.spectral_radius)},
              {"graph6", ndl::encode_graph6(result.graph)},
              {"edges", result.graph.edge_count()},
              {"diameter", report.diameter},
              {"diameter_ratio", sig12(report.diameter_ratio)},
              {"flagged_short_diameter", report.flagged}}
             .dump(2) +
         "\n",
         out);
    return 0;
}

int cmd_audit(const SourceOpts& src, const std::string& format, const std::string& out) {
    require_json(format, "audit");
    json graphs = json::array();
    for (const auto& [label, g] : resolve_graphs(src)) {
        const ndl::BoundAuditReport r = ndl::bound_audit(g);
        graphs.push_back({{"label", label},
                          {"graph6", ndl::encode_graph6(g)},
                          {"n", r.n},
                          {"diameter", r.diameter},
                          {"spectral_radius", sig12(r.spectral_radius)},
                          {"bound", sig12(r.bound)},
                          {"margin", sig12(r.margin)}});
    }
    emit(json{{"graphs", graphs}}.dump(2) + "\n", out);
    return 0;
}

int cmd_objectives(const SourceOpts& src, double epsilon, const std::string& format,
                   const std::string& out) {
    require_json(format, "objectives");
    json graphs = json::array();
    for (const auto& [label, g] : resolve_graphs(src)) {
        const auto [spec, dd] = ndl::ndl_spectrum(g);
        const int n = g.vertex_count();
        const ndl::HarmonicVector top = ndl::harmonic(spec, dd, n - 1);
        const ndl::SignPartition part = ndl::sign_partition(g, dd, top.values);
        const ndl::ObjectiveReport report = ndl::evaluate_objectives(dd, part, top.values);

        graphs.push_back(
            {{"label", label},
             {"n", n},
             {"spectral_radius", sig12(spec.eigenvalues.back())},
             {"harmonic_top", sig12_list(top.values)},
             {"rayleigh", sig12(ndl::rayleigh_sos(dd, top.values))},
             {"obj0", sig12(report.obj0)},
             {"obj1", sig12(report.obj1)},
             {"obj2", sig12(report.obj2)},
             {"obj3", sig12(report.obj3)},
             {"t_positive", report.transmission_positive},
             {"t_negative", report.transmission_negative},
             {"partition",
              {{"positive", part.positive},
               {"negative", part.negative},
               {"geodesic", part.geodesic},
               {"geodesic_positive", part.geodesic_positive},
               {"geodesic_negative", part.geodesic_negative}}},
             {"conditions", condition_to_json(ndl::condition_check(g, dd, top.values, epsilon))},
             {"conditions_sqrt_scale",
              condition_to_json(
                  ndl::condition_check(g, dd, top.values, 1.0 / std::sqrt(double(n))))}});
    }
    emit(json{{"graphs", graphs}}.dump(2) + "\n", out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"normalized distance Laplacian spectra: compute, verify, search"};
    app.require_subcommand(1);

    SourceOpts spectrum_src, audit_src, objectives_src;
    std::string format = "json";
    std::string out_path;
    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", out_path, "write the report to a file instead of stdout");
    };

    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of one or more graphs");
    add_source_flags(spectrum, spectrum_src);
    add_common(spectrum);

    int verify_n = 0;
    bool unsafe_large = false;
    double tol = 1e-9;
    int threads = 0;
    std::string verify_input;
    auto* verify = app.add_subcommand(
        "verify", "exhaustively check the spectral bounds over all connected graphs");
    verify->add_option("--n", verify_n, "graph order to enumerate (2..7; 8 with --unsafe-large)");
    verify->add_option("--input", verify_input, "check a graph6 corpus file instead");
    verify->add_flag("--unsafe-large", unsafe_large, "allow the 2^28-graph order-8 run");
    verify->add_option("--tol", tol, "comparison tolerance")->check(CLI::PositiveNumber);
    verify->add_option("--threads", threads, "worker threads (0 = machine parallelism)")
        ->envname("NDL_THREADS");
    add_common(verify);

    std::vector<int> sweep_orders;
    std::string family = "paper";
    auto* sweep = app.add_subcommand("sweep", "spectral radii of barbell graphs");
    sweep->add_option("--n", sweep_orders, "graph orders (repeatable)");
    sweep->add_option("--family", family, "barbell family: paper | all")
        ->check(CLI::IsMember({"paper", "all"}));
    add_common(sweep);

    int climb_n = 0;
    std::uint64_t seed = 0, steps = 1000;
    auto* climb = app.add_subcommand("climb", "greedy edge-toggle search for large spectral radius");
    climb->add_option("--n", climb_n, "graph order")->required();
    climb->add_option("--seed", seed, "random seed");
    climb->add_option("--steps", steps, "maximum toggle attempts");
    add_common(climb);

    auto* audit = app.add_subcommand("audit", "margin of the explicit diameter upper bound");
    add_source_flags(audit, audit_src);
    add_common(audit);

    double epsilon = ndl::kDefaultConditionEpsilon;
    auto* objectives =
        app.add_subcommand("objectives", "objective hierarchy at the top harmonic eigenvector");
    add_source_flags(objectives, objectives_src);
    objectives->add_option("--eps", epsilon, "balance-condition epsilon")
        ->check(CLI::PositiveNumber);
    add_common(objectives);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (spectrum->parsed()) return cmd_spectrum(spectrum_src, format, out_path);
        if (verify->parsed())
            return cmd_verify(verify_input, verify_n, unsafe_large, tol, threads, format,
                              out_path);
        if (sweep->parsed()) return cmd_sweep(sweep_orders, family, format, out_path);
        if (climb->parsed()) return cmd_climb(climb_n, seed, steps, format, out_path);
        if (audit->parsed()) return cmd_audit(audit_src, format, out_path);
        if (objectives->parsed()) return cmd_objectives(objectives_src, epsilon, format, out_path);
    } catch (const ndl::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ndl::DisconnectedGraphError& e) {
        std::cerr << "disconnected input: " << e.what() << "\n";
        return 3;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
