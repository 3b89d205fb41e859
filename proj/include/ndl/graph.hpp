#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ndl {

/// Thrown when text input (edge lists, graph6 tokens) cannot be decoded.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when an operation requires a connected graph and the input is not.
class DisconnectedGraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Undirected simple graph on vertices 0..n-1. Adjacency is kept symmetric
/// and loop-free by construction.
class Graph {
public:
    Graph() = default;  // empty placeholder; use Graph(n) for a real graph
    explicit Graph(int n);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return edges_; }

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);     // idempotent
    void remove_edge(int u, int v);  // idempotent
    void toggle_edge(int u, int v);

    bool connected() const;
    bool is_complete() const;
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    void check_pair(int u, int v) const;

    int n_ = 0;
    int edges_ = 0;
    std::vector<std::uint8_t> adj_;  // row-major n*n
};

/// All-pairs shortest-path data of a connected graph: distance matrix,
/// per-vertex transmissions (row sums) and the diameter.
struct DistanceData {
    int n = 0;
    std::vector<int> dist;  // row-major n*n
    std::vector<std::int64_t> transmission;
    int diameter = 0;

    int distance(int i, int j) const { return dist[static_cast<std::size_t>(i) * n + j]; }
};

/// Two cliques of k1 and k2 vertices joined by p internal path vertices.
/// The first path vertex is adjacent to all of clique 1 and the last to all
/// of clique 2; with p = 0 the cliques are joined by a single edge.
struct BarbellParams {
    int k1 = 1;
    int p = 0;
    int k2 = 1;
};

Graph parse_edge_list(std::string_view text);
Graph parse_graph6(std::string_view token);
std::string encode_graph6(const Graph& g);

Graph make_complete(int n);
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_barbell(const BarbellParams& params);

/// Clique-path-clique family where the path of n2 vertices shares its two
/// endpoints with the cliques, so the total vertex count is n1+n2+n3-2.
Graph make_kpk(int n1, int n2, int n3);

/// Erdos-Renyi sample, resampled until connected. Deterministic in the seed.
Graph random_connected(int n, double edge_probability, std::uint64_t seed);

DistanceData all_pairs_distances(const Graph& g);

/// Streams every labeled connected simple graph on n vertices (2 <= n <= 8)
/// exactly once, in increasing edge-bitmask order. A [first_mask, last_mask)
/// window allows partitioned parallel consumption.
class ConnectedGraphEnumerator {
public:
    explicit ConnectedGraphEnumerator(int n);
    ConnectedGraphEnumerator(int n, std::uint64_t first_mask, std::uint64_t last_mask);

    std::optional<Graph> next();

    static std::uint64_t mask_count(int n);  // 2^(n(n-1)/2)
    static Graph graph_from_mask(int n, std::uint64_t mask);

private:
    int n_ = 0;
    std::uint64_t next_mask_ = 0;
    std::uint64_t last_mask_ = 0;
};

}  // namespace ndl
