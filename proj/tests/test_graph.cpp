#include <doctest.h>

#include "giso/generate.hpp"
#include "giso/graph.hpp"

using namespace giso;

TEST_CASE("parse_edge_list accepts well-formed input") {
    auto k2 = parse_edge_list("2 1\n0 1");
    CHECK(k2.order() == 2);
    CHECK(k2.size() == 1);
    CHECK(k2.adjacent(0, 1));

    auto c3 = parse_edge_list("3 3\n0 1\n1 2\n0 2\n");
    CHECK(c3 == complete_graph(3));

    auto crlf = parse_edge_list("3 2\r\n0 1\r\n2 1\r\n");
    CHECK(crlf == path_graph(3));
}

TEST_CASE("parse_edge_list rejects bad input") {
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n1 1"), InputError);       // loop
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n1 0"), InputError);       // duplicate
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 3"), InputError);            // out of range
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 x"), InputError);            // malformed
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1"), InputError);            // count mismatch
    CHECK_THROWS_AS(parse_edge_list(""), InputError);
    CHECK_THROWS_AS(parse_edge_list("3\n"), InputError);
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 1 5"), InputError);
}

TEST_CASE("graph6 decoding matches reference codec") {
    // Values cross-checked against networkx.
    CHECK(parse_graph6("A_") == complete_graph(2));
    CHECK(parse_graph6("Bw") == complete_graph(3));
    auto empty2 = parse_graph6("A?");
    CHECK(empty2.order() == 2);
    CHECK(empty2.size() == 0);
    CHECK_FALSE(is_connected(empty2));
    CHECK(to_graph6(petersen_graph()) == "IheA@GUAo");
    CHECK(to_graph6(path_graph(70)).substr(0, 4) == "~?@E");
    CHECK(parse_graph6(">>graph6<<Bw\n") == complete_graph(3));
}

TEST_CASE("graph6 rejects malformed codes") {
    CHECK_THROWS_AS(parse_graph6("B"), InputError);        // truncated
    CHECK_THROWS_AS(parse_graph6("Bww"), InputError);      // trailing bytes
    CHECK_THROWS_AS(parse_graph6("B w"), InputError);      // out of range char
    CHECK_THROWS_AS(parse_graph6(""), InputError);
}

TEST_CASE("graph6 round trip on generated graphs") {
    Rng rng(11);
    for (int t = 0; t < 60; ++t) {
        const auto n = std::uniform_int_distribution<std::size_t>(1, 80)(rng);
        auto g = random_connected(n, 0.3, rng);
        CHECK(parse_graph6(to_graph6(g)) == g);
        CHECK(parse_edge_list(to_edge_list(g)) == g);
    }
}

TEST_CASE("is_connected") {
    CHECK(is_connected(complete_graph(2)));
    CHECK(is_connected(path_graph(4)));
    CHECK(is_connected(Graph(1, {})));
    CHECK_FALSE(is_connected(Graph(2, {})));
    CHECK_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("permute") {
    auto k3 = complete_graph(3);
    CHECK(permute(k3, Permutation({2, 0, 1})) == k3);

    auto p3 = path_graph(3);
    CHECK(permute(p3, Permutation({2, 1, 0})) == p3);
    auto moved = permute(p3, Permutation({1, 0, 2}));  // centre becomes vertex 0
    CHECK(moved.degree(0) == 2);
    CHECK(moved.adjacent(0, 1));
    CHECK(moved.adjacent(0, 2));

    CHECK(permute(petersen_graph(), Permutation::identity(10)) == petersen_graph());
    CHECK_THROWS_AS(permute(p3, Permutation::identity(4)), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
}

TEST_CASE("permutation properties") {
    Rng rng(5);
    for (int t = 0; t < 100; ++t) {
        const auto n = std::uniform_int_distribution<std::size_t>(1, 40)(rng);
        auto g = random_connected(n, 0.25, rng);
        auto p = random_permutation(n, rng);
        auto h = permute(g, p);
        CHECK(degree_multiset(h) == degree_multiset(g));
        CHECK(permute(h, p.inverse()) == g);
        for (Vertex v = 0; v < n; ++v) CHECK(p.inverse()(p(v)) == v);
    }
}

TEST_CASE("random generators are deterministic and well-formed") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = random_connected(30, 0.05, seed);
        CHECK(is_connected(g));
        CHECK(g == random_connected(30, 0.05, seed));

        auto r = random_regular(12, 3, seed);
        for (auto d : r.degrees()) CHECK(d == 3);
        CHECK(r == random_regular(12, 3, seed));
    }
    CHECK_THROWS_AS(random_regular(5, 3, 1), InputError);
    CHECK_THROWS_AS(random_regular(4, 4, 1), InputError);
    CHECK_THROWS_AS(random_connected(0, 0.5, std::uint64_t{1}), InputError);
}

namespace {

bool is_regular(const Graph& g, std::size_t d) {
    for (auto x : g.degrees())
        if (x != d) return false;
    return true;
}

bool has_triangle(const Graph& g) {
    for (auto [u, v] : g.edges())
        for (auto w : g.neighbors(u))
            if (w != v && g.adjacent(v, w)) return true;
    return false;
}

// srg(n, k, lambda, mu) check by counting common neighbours of every pair.
bool strongly_regular(const Graph& g, std::size_t k, std::size_t lambda, std::size_t mu) {
    if (!is_regular(g, k)) return false;
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            std::size_t common = 0;
            for (auto w : g.neighbors(u)) common += g.adjacent(v, w) ? 1 : 0;
            if (common != (g.adjacent(u, v) ? lambda : mu)) return false;
        }
    }
    return true;
}

// Brute-force clique search over all vertex subsets of the given size.
bool has_clique(const Graph& g, std::size_t size) {
    const auto n = g.order();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != size) continue;
        bool ok = true;
        for (Vertex u = 0; u < n && ok; ++u)
            for (Vertex v = u + 1; v < n && ok; ++v)
                if ((mask >> u & 1) && (mask >> v & 1) && !g.adjacent(u, v)) ok = false;
        if (ok) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("named graphs match their standard definitions") {
    auto k33 = named_graph("k33");
    CHECK(k33.order() == 6);
    CHECK(k33.size() == 9);
    CHECK(is_regular(k33, 3));
    CHECK_FALSE(has_triangle(k33));

    auto prism = named_graph("prism");
    CHECK(prism.order() == 6);
    CHECK(prism.size() == 9);
    CHECK(is_regular(prism, 3));
    CHECK(has_triangle(prism));

    auto pet = named_graph("petersen");
    CHECK(pet.order() == 10);
    CHECK(pet.size() == 15);
    CHECK(strongly_regular(pet, 3, 0, 1));

    auto shrikhande = named_graph("shrikhande");
    auto rook = named_graph("rook44");
    CHECK(shrikhande.size() == 48);
    CHECK(rook.size() == 48);
    CHECK(strongly_regular(shrikhande, 6, 2, 2));
    CHECK(strongly_regular(rook, 6, 2, 2));
    CHECK(has_clique(rook, 4));
    CHECK_FALSE(has_clique(shrikhande, 4));

    CHECK(named_graph("k2") == complete_graph(2));
    CHECK(named_graph("path:5") == path_graph(5));
    CHECK(named_graph("cycle:3") == complete_graph(3));
    CHECK(named_graph("complete:4").size() == 6);
    CHECK_THROWS_AS(named_graph("dodecahedron"), InputError);
    CHECK_THROWS_AS(named_graph("cycle:2"), InputError);
    CHECK_THROWS_AS(named_graph("path:x"), InputError);
}
