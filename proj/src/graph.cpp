#include "ndl/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <random>

namespace ndl {

namespace {

std::vector<int> bfs_from(const Graph& g, int src) {
    const int n = g.vertex_count();
    std::vector<int> dist(n, -1);
    std::vector<int> queue;
    queue.reserve(n);
    dist[src] = 0;
    queue.push_back(src);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        for (int v = 0; v < n; ++v) {
            if (dist[v] < 0 && g.has_edge(u, v)) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

int parse_int_token(std::string_view token, int line_no) {
    int value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError("line " + std::to_string(line_no) + ": non-integer token '" +
                         std::string(token) + "'");
    }
    return value;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

constexpr int kGraph6Offset = 63;
constexpr int kGraph6MaxOrder = 62;

}  // namespace

Graph::Graph(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("graph order must be at least 1");
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
}

void Graph::check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::out_of_range("vertex label out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
}

bool Graph::has_edge(int u, int v) const {
    return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
}

void Graph::add_edge(int u, int v) {
    check_pair(u, v);
    if (has_edge(u, v)) return;
    adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
    adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
    ++edges_;
}

void Graph::remove_edge(int u, int v) {
    check_pair(u, v);
    if (!has_edge(u, v)) return;
    adj_[static_cast<std::size_t>(u) * n_ + v] = 0;
    adj_[static_cast<std::size_t>(v) * n_ + u] = 0;
    --edges_;
}

void Graph::toggle_edge(int u, int v) {
    check_pair(u, v);
    if (has_edge(u, v))
        remove_edge(u, v);
    else
        add_edge(u, v);
}

bool Graph::connected() const {
    if (n_ == 0) return false;
    const auto dist = bfs_from(*this, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool Graph::is_complete() const {
    return edges_ == n_ * (n_ - 1) / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::vector<std::pair<int, int>> edges;
    int declared = -1;
    int max_label = -1;
    int line_no = 0;
    bool seen_content = false;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        const auto tokens = split_tokens(line);
        if (tokens.empty()) continue;

        if (!seen_content && tokens[0] == "n") {
            if (tokens.size() != 2)
                throw ParseError("line " + std::to_string(line_no) + ": malformed header");
            declared = parse_int_token(tokens[1], line_no);
            if (declared < 1)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": declared vertex count must be positive");
            seen_content = true;
            continue;
        }
        seen_content = true;

        if (tokens.size() != 2)
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected two vertex labels, got " + std::to_string(tokens.size()) +
                             " tokens");
        const int u = parse_int_token(tokens[0], line_no);
        const int v = parse_int_token(tokens[1], line_no);
        if (u < 0 || v < 0)
            throw ParseError("line " + std::to_string(line_no) + ": negative vertex label");
        if (u == v)
            throw ParseError("line " + std::to_string(line_no) + ": self-loop '" +
                             std::to_string(u) + " " + std::to_string(v) + "'");
        if (declared >= 0 && (u >= declared || v >= declared))
            throw ParseError("line " + std::to_string(line_no) + ": label " +
                             std::to_string(std::max(u, v)) + " exceeds declared vertex count " +
                             std::to_string(declared));
        max_label = std::max({max_label, u, v});
        edges.emplace_back(u, v);
    }

    const int n = declared >= 0 ? declared : max_label + 1;
    if (n < 1) throw ParseError("edge list is empty and carries no 'n <count>' header");

    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph parse_graph6(std::string_view token) {
    if (token.empty()) throw ParseError("empty graph6 token");
    for (const char c : token) {
        const int b = static_cast<unsigned char>(c);
        if (b < kGraph6Offset || b > 126)
            throw ParseError(std::string("graph6 byte '") + c + "' outside the printable range");
    }
    if (token[0] == '~')
        throw ParseError("graph6 orders above 62 are not supported");

    const int n = static_cast<unsigned char>(token[0]) - kGraph6Offset;
    if (n < 1) throw ParseError("graph6 token encodes an empty graph");

    const int bits = n * (n - 1) / 2;
    const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    if (token.size() - 1 < need) throw ParseError("truncated graph6 bit stream");
    if (token.size() - 1 > need) throw ParseError("graph6 token has trailing bytes");

    Graph g(n);
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const int byte = static_cast<unsigned char>(token[1 + bit / 6]) - kGraph6Offset;
            if (byte >> (5 - bit % 6) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

std::string encode_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("cannot encode an empty graph");
    if (n > kGraph6MaxOrder)
        throw std::invalid_argument("graph6 orders above 62 are not supported");

    const int bits = n * (n - 1) / 2;
    std::string out(1 + static_cast<std::size_t>((bits + 5) / 6),
                    static_cast<char>(kGraph6Offset));
    out[0] = static_cast<char>(n + kGraph6Offset);
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (g.has_edge(i, j))
                out[1 + bit / 6] += static_cast<char>(1 << (5 - bit % 6));
        }
    }
    return out;
}

Graph make_complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph make_path(int n) {
    Graph g(n);
    for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
    return g;
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
    Graph g = make_path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph make_barbell(const BarbellParams& params) {
    const auto [k1, p, k2] = params;
    if (k1 < 1 || k2 < 1) throw std::invalid_argument("barbell cliques must be nonempty");
    if (p < 0) throw std::invalid_argument("barbell path length must be nonnegative");

    const int n = k1 + p + k2;
    Graph g(n);
    for (int u = 0; u < k1; ++u)
        for (int v = u + 1; v < k1; ++v) g.add_edge(u, v);
    for (int u = k1 + p; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);

    if (p == 0) {
        g.add_edge(0, k1);
        return g;
    }
    for (int u = k1; u + 1 < k1 + p; ++u) g.add_edge(u, u + 1);
    for (int u = 0; u < k1; ++u) g.add_edge(u, k1);
    for (int v = k1 + p; v < n; ++v) g.add_edge(k1 + p - 1, v);
    return g;
}

Graph make_kpk(int n1, int n2, int n3) {
    if (n2 < 2) throw std::invalid_argument("the connecting path needs at least 2 vertices");
    return make_barbell({n1, n2 - 2, n3});
}

Graph random_connected(int n, double edge_probability, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("graph order must be at least 1");
    if (!(edge_probability > 0.0) || edge_probability > 1.0)
        throw std::invalid_argument("edge probability must lie in (0, 1]");

    std::mt19937_64 rng(seed);
    constexpr int kResampleCap = 10000;
    for (int attempt = 0; attempt < kResampleCap; ++attempt) {
        Graph g(n);
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                const double coin = static_cast<double>(rng() >> 11) * 0x1.0p-53;
                if (coin < edge_probability) g.add_edge(u, v);
            }
        }
        if (g.connected()) return g;
    }
    throw std::runtime_error("random_connected exhausted its resampling cap");
}

DistanceData all_pairs_distances(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("graph is empty");

    DistanceData dd;
    dd.n = n;
    dd.dist.assign(static_cast<std::size_t>(n) * n, 0);
    dd.transmission.assign(n, 0);
    dd.diameter = 0;

    for (int src = 0; src < n; ++src) {
        const auto dist = bfs_from(g, src);
        for (int v = 0; v < n; ++v) {
            if (dist[v] < 0)
                throw DisconnectedGraphError("vertices " + std::to_string(src) + " and " +
                                             std::to_string(v) + " are not connected");
            dd.dist[static_cast<std::size_t>(src) * n + v] = dist[v];
            dd.transmission[src] += dist[v];
            dd.diameter = std::max(dd.diameter, dist[v]);
        }
    }
    return dd;
}

namespace {

// Connectivity straight off the edge bitmask; avoids building a Graph for
// the (many) disconnected masks during enumeration.
bool mask_connected(int n, std::uint64_t mask) {
    std::array<std::uint32_t, 8> nb{};
    int bit = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++bit) {
            if (mask >> bit & 1) {
                nb[u] |= 1u << v;
                nb[v] |= 1u << u;
            }
        }
    }
    std::uint32_t visited = 1, frontier = 1;
    while (frontier != 0) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f != 0; f &= f - 1) {
            const unsigned v = static_cast<unsigned>(std::countr_zero(f));
            next |= nb[v];
        }
        frontier = next & ~visited;
        visited |= frontier;
    }
    return visited == (1u << n) - 1;
}

}  // namespace

ConnectedGraphEnumerator::ConnectedGraphEnumerator(int n)
    : ConnectedGraphEnumerator(n, 0, mask_count(n)) {}

ConnectedGraphEnumerator::ConnectedGraphEnumerator(int n, std::uint64_t first_mask,
                                                   std::uint64_t last_mask)
    : n_(n), next_mask_(first_mask), last_mask_(std::min(last_mask, mask_count(n))) {}

std::uint64_t ConnectedGraphEnumerator::mask_count(int n) {
    if (n < 2 || n > 8)
        throw std::invalid_argument("enumeration supports orders 2 through 8");
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph ConnectedGraphEnumerator::graph_from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) g.add_edge(u, v);
    return g;
}

std::optional<Graph> ConnectedGraphEnumerator::next() {
    while (next_mask_ < last_mask_) {
        const std::uint64_t mask = next_mask_++;
        if (mask_connected(n_, mask)) return graph_from_mask(n_, mask);
    }
    return std::nullopt;
}

}  // namespace ndl
