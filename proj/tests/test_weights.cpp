#include <doctest.h>

#include "giso/generate.hpp"
#include "giso/weights.hpp"
#include "oracles.hpp"

using namespace giso;
using giso::test::q;

namespace {

std::vector<Rational> unit(std::size_t n, std::size_t j) {
    std::vector<Rational> e(n, 0);
    e[j] = 1;
    return e;
}

std::vector<Rational> relabel(const Permutation& p, const std::vector<Rational>& v) {
    std::vector<Rational> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[p(static_cast<Vertex>(i))] = v[i];
    return out;
}

}  // namespace

TEST_CASE("frozen solve_system values agree with the Cramer oracle") {
    auto k2 = complete_graph(2);
    auto c3 = complete_graph(3);
    const std::vector<Rational> ones2{1, 1}, ones3{1, 1, 1}, e1{1, 0};

    CHECK(test::cramer_solve(k2, ones2) == std::vector<Rational>{2, 2});
    CHECK(test::cramer_solve(k2, e1) == std::vector<Rational>{q(4, 3), q(2, 3)});
    CHECK(test::cramer_solve(c3, ones3) == std::vector<Rational>{3, 3, 3});

    CHECK(solve_system(k2, ones2) == std::vector<Rational>{2, 2});
    CHECK(solve_system(k2, e1) == std::vector<Rational>{q(4, 3), q(2, 3)});
    CHECK(solve_system(c3, ones3) == std::vector<Rational>{3, 3, 3});
    CHECK_THROWS_AS(solve_system(c3, ones2), std::invalid_argument);
}

TEST_CASE("solve_system matches Cramer on small random graphs with rational b") {
    Rng rng(3);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    for (int t = 0; t < 40; ++t) {
        const auto n = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
        auto g = random_connected(n, 0.4, rng);
        std::vector<Rational> b(n);
        for (auto& x : b) x = q(num(rng), den(rng));
        auto x = solve_system(g, b);
        CHECK(x == test::cramer_solve(g, b));
    }
}

TEST_CASE("frozen k-matrices") {
    auto k2 = k_matrix(complete_graph(2));
    CHECK(std::vector<Rational>(k2.entries().begin(), k2.entries().end()) ==
          std::vector<Rational>{q(4, 3), q(2, 3), q(2, 3), q(4, 3)});

    auto c3 = k_matrix(complete_graph(3));
    CHECK(std::vector<Rational>(c3.entries().begin(), c3.entries().end()) ==
          std::vector<Rational>{q(3, 2), q(3, 4), q(3, 4), q(3, 4), q(3, 2), q(3, 4), q(3, 4), q(3, 4), q(3, 2)});

    auto p3 = k_matrix(path_graph(3));
    CHECK(std::vector<Rational>(p3.entries().begin(), p3.entries().end()) ==
          std::vector<Rational>{q(5, 4), q(3, 4), q(1, 4), q(1, 2), q(3, 2), q(1, 2), q(1, 4), q(3, 4), q(5, 4)});

    auto single = k_matrix(Graph(1, {}));
    CHECK(single(0, 0) == 1);
}

TEST_CASE("k-matrix columns are solutions for unit vectors") {
    Rng rng(8);
    for (int t = 0; t < 25; ++t) {
        const auto n = std::uniform_int_distribution<std::size_t>(1, 20)(rng);
        auto g = random_connected(n, 0.3, rng);
        auto k = k_matrix(g);
        for (std::size_t j = 0; j < n; ++j) {
            auto e = unit(n, j);
            auto col = solve_system(g, e);
            CHECK(test::satisfies_system(g, col, e));
            for (std::size_t i = 0; i < n; ++i) CHECK(k(i, j) == col[i]);
        }
    }
}

TEST_CASE("parallel kernel equals the serial rational reference") {
    Rng rng(21);
    for (int t = 0; t < 12; ++t) {
        const auto n = std::uniform_int_distribution<std::size_t>(2, 48)(rng);
        auto g = random_connected(n, 0.2, rng);
        CHECK(k_matrix(g) == k_matrix_reference(g));
    }
}

TEST_CASE("fraction_free_solve thread count does not change the result") {
    auto g = random_connected(40, 0.2, std::uint64_t{4});
    const auto n = g.order();
    std::vector<BigInt> b(n * n, 0), rhs(n, 1);
    for (std::size_t i = 0; i < n; ++i) b[i * n + i] = static_cast<unsigned long>(g.degree(static_cast<Vertex>(i)) + 1);
    for (auto [u, v] : g.edges()) b[u * n + v] = b[v * n + u] = -1;
    auto one = fraction_free_solve(n, b, 1, rhs, 1);
    auto many = fraction_free_solve(n, b, 1, rhs, 4);
    CHECK(one.determinant == many.determinant);
    CHECK(one.scaled == many.scaled);
    CHECK_THROWS_AS(fraction_free_solve(2, {0, 1, 1, 0}, 1, {1, 1}), std::logic_error);
}

TEST_CASE("check_bounds") {
    CHECK(check_bounds(k_matrix(complete_graph(2))));
    CHECK(check_bounds(k_matrix(path_graph(3))));
    CHECK(check_bounds(k_matrix(Graph(1, {}))));
    // A matrix with an off-diagonal entry of exactly 1 fails.
    CHECK_FALSE(check_bounds(KMatrix(2, {q(3, 2), 1, q(1, 2), q(3, 2)}, {1, 1})));
    CHECK_FALSE(check_bounds(KMatrix(1, {q(3, 2)}, {0})));
    Rng rng(13);
    for (int t = 0; t < 40; ++t) {
        auto g = random_connected(std::uniform_int_distribution<std::size_t>(2, 30)(rng), 0.3, rng);
        CHECK(check_bounds(k_matrix(g)));
    }
}

TEST_CASE("topo_index") {
    CHECK(topo_index(complete_graph(2)) == std::vector<Rational>{2, 2});
    CHECK(topo_index(complete_graph(3)) == std::vector<Rational>{3, 3, 3});
    auto p3 = topo_index(path_graph(3));
    // Oracle: Cramer on the path with b = (1,1,1).
    auto x = test::cramer_solve(path_graph(3), std::vector<Rational>{1, 1, 1});
    CHECK(x[0] == x[2]);
    CHECK(x == std::vector<Rational>{q(9, 4), q(5, 2), q(9, 4)});
    CHECK(p3 == std::vector<Rational>{q(9, 4), q(9, 4), q(5, 2)});
    CHECK(p3.front() == p3[1]);
    CHECK(to_string(q(5, 2)) == "5/2");
    CHECK(to_string(Rational(2)) == "2/1");
}

TEST_CASE("permutation equivariance and relabeling invariance") {
    Rng rng(17);
    std::uniform_int_distribution<long> coef(-20, 20);
    for (int t = 0; t < 30; ++t) {
        const auto n = std::uniform_int_distribution<std::size_t>(2, 24)(rng);
        auto g = random_connected(n, 0.3, rng);
        auto p = random_permutation(n, rng);
        std::vector<Rational> b(n);
        for (auto& x : b) x = coef(rng);
        auto h = permute(g, p);
        CHECK(solve_system(h, relabel(p, b)) == relabel(p, solve_system(g, b)));
        CHECK(topo_index(h) == topo_index(g));
    }
}

TEST_CASE("linearity in the absolute term") {
    Rng rng(19);
    std::uniform_int_distribution<long> coef(-5, 5);
    for (int t = 0; t < 20; ++t) {
        const auto n = std::uniform_int_distribution<std::size_t>(1, 16)(rng);
        auto g = random_connected(n, 0.35, rng);
        std::vector<Rational> b1(n), b2(n), sum(n);
        for (std::size_t i = 0; i < n; ++i) {
            b1[i] = q(coef(rng), 3);
            b2[i] = q(coef(rng), 5);
            sum[i] = b1[i] + b2[i];
        }
        auto x1 = solve_system(g, b1), x2 = solve_system(g, b2), xs = solve_system(g, sum);
        for (std::size_t i = 0; i < n; ++i) CHECK(xs[i] == x1[i] + x2[i]);
    }
}

TEST_CASE("modular residues agree with exact k-values") {
    auto primes = random_primes62(2, 99);
    for (auto p : primes) {
        CHECK(is_prime_u64(p));
        CHECK(p >= (std::uint64_t{1} << 61));
    }
    CHECK(is_prime_u64(2305843009213693951ull));  // 2^61 - 1
    CHECK_FALSE(is_prime_u64(2305843009213693953ull));
    auto g = random_connected(20, 0.3, std::uint64_t{2});
    auto k = k_matrix(g);
    std::vector<std::uint64_t> residues;
    REQUIRE(k_matrix_mod(g, primes[0], residues));
    const BigInt p = static_cast<unsigned long>(primes[0]);
    for (std::size_t idx = 0; idx < residues.size(); ++idx) {
        const auto& v = k.entries()[idx];
        BigInt inv;
        mpz_invert(inv.get_mpz_t(), v.get_den_mpz_t(), p.get_mpz_t());
        BigInt expected = v.get_num() * inv % p;
        if (expected < 0) expected += p;
        CHECK(expected == BigInt(static_cast<unsigned long>(residues[idx])));
    }
}
