#include "giso/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace giso {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), adj_(n), degrees_(n, 0) {
    for (auto& [u, v] : edges) {
        if (u >= n || v >= n) {
            throw InputError("vertex index out of range in edge (" + std::to_string(u) + ", " +
                             std::to_string(v) + ")");
        }
        if (u == v) throw InputError("loop edge at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
        throw InputError("duplicate edge (" + std::to_string(dup->first) + ", " +
                         std::to_string(dup->second) + ")");
    }
    edges_ = std::move(edges);
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (std::size_t v = 0; v < n_; ++v) {
        std::sort(adj_[v].begin(), adj_[v].end());
        degrees_[v] = adj_[v].size();
    }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& row = adj_[u];
    return std::binary_search(row.begin(), row.end(), v);
}

Permutation::Permutation(std::vector<Vertex> map) : map_(std::move(map)) {
    std::vector<bool> seen(map_.size(), false);
    for (auto v : map_) {
        if (v >= map_.size() || seen[v]) throw std::invalid_argument("not a permutation");
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<Vertex> m(n);
    std::iota(m.begin(), m.end(), Vertex{0});
    return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
    std::vector<Vertex> inv(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = static_cast<Vertex>(i);
    return Permutation(std::move(inv));
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        auto pos = text.find('\n');
        auto line = text.substr(0, pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (pos == std::string_view::npos) break;
        text.remove_prefix(pos + 1);
    }
    return lines;
}

// Parses exactly two non-negative integers separated by whitespace.
bool parse_pair(std::string_view line, std::uint64_t& a, std::uint64_t& b) {
    auto skip_ws = [&](const char* p, const char* end) {
        while (p != end && (*p == ' ' || *p == '\t')) ++p;
        return p;
    };
    const char* p = line.data();
    const char* end = p + line.size();
    p = skip_ws(p, end);
    auto r1 = std::from_chars(p, end, a);
    if (r1.ec != std::errc{} || r1.ptr == end || (*r1.ptr != ' ' && *r1.ptr != '\t')) return false;
    p = skip_ws(r1.ptr, end);
    auto r2 = std::from_chars(p, end, b);
    if (r2.ec != std::errc{}) return false;
    return skip_ws(r2.ptr, end) == end;
}

bool blank(std::string_view s) {
    return s.find_first_not_of(" \t") == std::string_view::npos;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
    std::vector<std::string_view> lines;
    for (auto l : split_lines(text)) {
        if (!blank(l)) lines.push_back(l);
    }
    if (lines.empty()) throw InputError("empty edge list");
    std::uint64_t n = 0, m = 0;
    if (!parse_pair(lines[0], n, m)) throw InputError("malformed header line: '" + std::string(lines[0]) + "'");
    if (n == 0) throw InputError("graph must have at least one vertex");
    if (lines.size() - 1 != m) {
        throw InputError("header declares " + std::to_string(m) + " edges but " +
                         std::to_string(lines.size() - 1) + " edge lines follow");
    }
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::uint64_t u = 0, v = 0;
        if (!parse_pair(lines[i], u, v)) throw InputError("malformed edge line: '" + std::string(lines[i]) + "'");
        if (u >= n || v >= n) {
            throw InputError("vertex index out of range on line " + std::to_string(i + 1));
        }
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return Graph(n, std::move(edges));
}

std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    for (char c : text) {
        if (c < 63 || c > 126) throw InputError("graph6: character out of printable range");
    }
    std::size_t pos = 0;
    auto next = [&]() -> std::uint32_t {
        if (pos >= text.size()) throw InputError("graph6: truncated input");
        return static_cast<std::uint32_t>(text[pos++] - 63);
    };
    std::size_t n = next();
    if (n == 63) {
        if (pos < text.size() && text[pos] == 126) throw InputError("graph6: 8-byte size form unsupported");
        n = 0;
        for (int k = 0; k < 3; ++k) n = (n << 6) | next();
    }
    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes) throw InputError("graph6: bit stream length does not match vertex count");
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (std::size_t v = 1; v < n; ++v) {
        for (std::size_t u = 0; u < v; ++u, ++k) {
            auto word = static_cast<std::uint32_t>(text[pos + k / 6] - 63);
            if (word & (1u << (5 - k % 6))) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
    }
    return Graph(n, std::move(edges));
}

std::string to_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        throw InputError("graph6: too many vertices");
    }
    std::uint32_t word = 0;
    int filled = 0;
    for (std::size_t v = 1; v < n; ++v) {
        for (std::size_t u = 0; u < v; ++u) {
            word = (word << 1) | (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v)) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + word));
                word = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (word << (6 - filled))));
    return out;
}

bool is_connected(const Graph& g) {
    const auto n = g.order();
    if (n == 0) return false;
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

Graph permute(const Graph& g, const Permutation& p) {
    if (p.size() != g.order()) throw std::invalid_argument("permutation length does not match graph order");
    std::vector<Edge> edges;
    edges.reserve(g.size());
    for (auto [u, v] : g.edges()) edges.emplace_back(p(u), p(v));
    return Graph(g.order(), std::move(edges));
}

std::vector<std::size_t> degree_multiset(const Graph& g) {
    std::vector<std::size_t> d(g.degrees().begin(), g.degrees().end());
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace giso
