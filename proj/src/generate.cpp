#include "giso/generate.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <string>

namespace giso {

Graph random_connected(std::size_t n, double edge_prob, std::uint64_t seed) {
    Rng rng(seed);
    return random_connected(n, edge_prob, rng);
}

Graph random_connected(std::size_t n, double edge_prob, Rng& rng) {
    if (n == 0) throw InputError("random_connected: n must be positive");
    if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) throw InputError("random_connected: edge probability outside [0,1]");
    std::bernoulli_distribution coin(edge_prob);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (coin(rng)) edges.emplace_back(u, v);
        }
    }
    // Union-find over the sampled edges, then bridge components in a random order.
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (auto [u, v] : edges) parent[find(u)] = find(v);
    std::vector<std::vector<Vertex>> comps;
    {
        std::vector<int> slot(n, -1);
        for (Vertex v = 0; v < n; ++v) {
            auto r = find(v);
            if (slot[r] < 0) {
                slot[r] = static_cast<int>(comps.size());
                comps.emplace_back();
            }
            comps[static_cast<std::size_t>(slot[r])].push_back(v);
        }
    }
    std::shuffle(comps.begin(), comps.end(), rng);
    for (std::size_t c = 1; c < comps.size(); ++c) {
        const auto& prev = comps[std::uniform_int_distribution<std::size_t>(0, c - 1)(rng)];
        const auto& cur = comps[c];
        auto a = prev[std::uniform_int_distribution<std::size_t>(0, prev.size() - 1)(rng)];
        auto b = cur[std::uniform_int_distribution<std::size_t>(0, cur.size() - 1)(rng)];
        edges.emplace_back(a, b);
    }
    return Graph(n, std::move(edges));
}

Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
    if (n == 0 || d >= n || (n * d) % 2 != 0) {
        throw InputError("random_regular: infeasible parameters n=" + std::to_string(n) + " d=" + std::to_string(d));
    }
    Rng rng(seed);
    std::vector<Vertex> points;
    for (Vertex v = 0; v < n; ++v) points.insert(points.end(), d, v);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::shuffle(points.begin(), points.end(), rng);
        std::set<Edge> seen;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < points.size(); i += 2) {
            auto u = std::min(points[i], points[i + 1]);
            auto v = std::max(points[i], points[i + 1]);
            if (u == v || !seen.emplace(u, v).second) {
                ok = false;
                break;
            }
        }
        if (ok) return Graph(n, {seen.begin(), seen.end()});
    }
    throw InputError("random_regular: no simple pairing found");
}

Permutation random_permutation(std::size_t n, Rng& rng) {
    std::vector<Vertex> m(n);
    std::iota(m.begin(), m.end(), Vertex{0});
    std::shuffle(m.begin(), m.end(), rng);
    return Permutation(std::move(m));
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, std::move(e));
}

Graph path_graph(std::size_t n) {
    if (n == 0) throw InputError("path: n must be positive");
    std::vector<Edge> e;
    for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph(n, std::move(e));
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw InputError("cycle: n must be at least 3");
    std::vector<Edge> e;
    for (Vertex v = 0; v < n; ++v) e.emplace_back(v, static_cast<Vertex>((v + 1) % n));
    return Graph(n, std::move(e));
}

Graph petersen_graph() {
    std::vector<Edge> e;
    for (Vertex i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);          // outer cycle
        e.emplace_back(i, i + 5);                // spokes
        e.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return Graph(10, std::move(e));
}

Graph k33_graph() {
    std::vector<Edge> e;
    for (Vertex u = 0; u < 3; ++u)
        for (Vertex v = 3; v < 6; ++v) e.emplace_back(u, v);
    return Graph(6, std::move(e));
}

Graph prism_graph() {
    return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph rook44_graph() {
    std::vector<Edge> e;
    for (Vertex u = 0; u < 16; ++u) {
        for (Vertex v = u + 1; v < 16; ++v) {
            if (u / 4 == v / 4 || u % 4 == v % 4) e.emplace_back(u, v);
        }
    }
    return Graph(16, std::move(e));
}

Graph shrikhande_graph() {
    const int steps[3][2] = {{1, 0}, {0, 1}, {1, 1}};
    std::set<Edge> e;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            auto u = static_cast<Vertex>(4 * a + b);
            for (auto& s : steps) {
                auto v = static_cast<Vertex>(4 * ((a + s[0]) % 4) + (b + s[1]) % 4);
                e.emplace(std::min(u, v), std::max(u, v));
            }
        }
    }
    return Graph(16, {e.begin(), e.end()});
}

namespace {

std::size_t parse_size_arg(std::string_view name, std::string_view arg) {
    std::size_t n = 0;
    auto r = std::from_chars(arg.data(), arg.data() + arg.size(), n);
    if (r.ec != std::errc{} || r.ptr != arg.data() + arg.size()) {
        throw InputError("named graph '" + std::string(name) + "': bad size argument");
    }
    return n;
}

}  // namespace

Graph named_graph(std::string_view name) {
    auto colon = name.find(':');
    auto base = name.substr(0, colon);
    if (colon != std::string_view::npos) {
        auto n = parse_size_arg(name, name.substr(colon + 1));
        if (base == "path") return path_graph(n);
        if (base == "cycle") return cycle_graph(n);
        if (base == "complete") {
            if (n == 0) throw InputError("complete: n must be positive");
            return complete_graph(n);
        }
    } else {
        if (name == "k2") return complete_graph(2);
        if (name == "petersen") return petersen_graph();
        if (name == "k33") return k33_graph();
        if (name == "prism") return prism_graph();
        if (name == "rook44") return rook44_graph();
        if (name == "shrikhande") return shrikhande_graph();
    }
    throw InputError("unknown graph name '" + std::string(name) + "'");
}

}  // namespace giso
