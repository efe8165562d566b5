#include "giso/matcher.hpp"

#include <bit>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace giso {

namespace {

struct RationalHash {
    std::size_t operator()(const Rational& r) const {
        auto mix = [](std::size_t h, mpz_srcptr z) {
            h ^= static_cast<std::size_t>(mpz_size(z)) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            for (std::size_t i = 0; i < mpz_size(z); ++i) {
                h ^= static_cast<std::size_t>(mpz_getlimbn(z, static_cast<mp_size_t>(i))) + 0x9e3779b97f4a7c15ull +
                     (h << 6) + (h >> 2);
            }
            return h;
        };
        return mix(mix(static_cast<std::size_t>(mpz_sgn(r.get_num_mpz_t()) + 1), r.get_num_mpz_t()),
                   r.get_den_mpz_t());
    }
};

}  // namespace

LabeledPair label_exact(const KMatrix& k, const KMatrix& k2) {
    if (k.order() != k2.order()) throw std::invalid_argument("label_exact: dimension mismatch");
    LabeledPair out;
    out.n = k.order();
    out.left_degree.assign(k.degrees().begin(), k.degrees().end());
    out.right_degree.assign(k2.degrees().begin(), k2.degrees().end());
    std::unordered_map<Rational, std::uint32_t, RationalHash> ids;
    auto intern = [&](const Rational& v) {
        auto [it, fresh] = ids.try_emplace(v, static_cast<std::uint32_t>(ids.size()));
        return it->second;
    };
    out.left.reserve(out.n * out.n);
    out.right.reserve(out.n * out.n);
    for (const auto& v : k.entries()) out.left.push_back(intern(v));
    for (const auto& v : k2.entries()) out.right.push_back(intern(v));
    out.classes = ids.size();
    return out;
}

LabeledPair label_fingerprint(const Graph& g, const Graph& g2, std::span<const std::uint64_t> primes) {
    if (g.order() != g2.order()) throw std::invalid_argument("label_fingerprint: dimension mismatch");
    const std::size_t n = g.order();
    const std::size_t cells = n * n;
    // residues[side][prime][cell]
    std::vector<std::vector<std::uint64_t>> left(primes.size()), right(primes.size());
    for (std::size_t t = 0; t < primes.size(); ++t) {
        if (!k_matrix_mod(g, primes[t], left[t]) || !k_matrix_mod(g2, primes[t], right[t])) {
            throw std::runtime_error("label_fingerprint: prime divides the system determinant");
        }
    }
    struct KeyHash {
        std::size_t operator()(const std::vector<std::uint64_t>& key) const {
            std::size_t h = 0;
            for (auto x : key) h ^= std::hash<std::uint64_t>{}(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            return h;
        }
    };
    std::unordered_map<std::vector<std::uint64_t>, std::uint32_t, KeyHash> ids;
    std::vector<std::uint64_t> key(primes.size());
    auto intern = [&](const std::vector<std::vector<std::uint64_t>>& side, std::size_t cell) {
        for (std::size_t t = 0; t < primes.size(); ++t) key[t] = side[t][cell];
        auto [it, fresh] = ids.try_emplace(key, static_cast<std::uint32_t>(ids.size()));
        return it->second;
    };
    LabeledPair out;
    out.n = n;
    out.left_degree.assign(g.degrees().begin(), g.degrees().end());
    out.right_degree.assign(g2.degrees().begin(), g2.degrees().end());
    out.left.resize(cells);
    out.right.resize(cells);
    for (std::size_t c = 0; c < cells; ++c) out.left[c] = intern(left, c);
    for (std::size_t c = 0; c < cells; ++c) out.right[c] = intern(right, c);
    out.classes = ids.size();
    return out;
}

Bigraph::Bigraph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

std::size_t Bigraph::edge_count() const {
    std::size_t c = 0;
    for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::size_t Bigraph::left_degree(std::size_t p) const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_; ++w) c += static_cast<std::size_t>(std::popcount(bits_[p * words_ + w]));
    return c;
}

std::size_t Bigraph::right_degree(std::size_t q) const {
    std::size_t c = 0;
    for (std::size_t p = 0; p < n_; ++p) c += has(p, q) ? 1 : 0;
    return c;
}

std::vector<std::uint32_t> Bigraph::row(std::size_t p) const {
    std::vector<std::uint32_t> out;
    for (std::size_t w = 0; w < words_; ++w) {
        auto bits = bits_[p * words_ + w];
        while (bits) {
            out.push_back(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Bigraph::edges() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::size_t p = 0; p < n_; ++p)
        for (auto q : row(p)) out.emplace_back(static_cast<std::uint32_t>(p), q);
    return out;
}

bool Bigraph::empty() const {
    for (auto w : bits_)
        if (w) return false;
    return true;
}

Bigraph& Bigraph::operator&=(const Bigraph& other) {
    if (other.n_ != n_) throw std::invalid_argument("Bigraph: dimension mismatch");
    for (std::size_t w = 0; w < bits_.size(); ++w) bits_[w] &= other.bits_[w];
    return *this;
}

Bigraph build_bigraph(const LabeledPair& labels, std::size_t i, std::size_t j) {
    const auto n = labels.n;
    if (i >= n || j >= n) throw std::invalid_argument("build_bigraph: anchor vertex out of range");
    // Bucket the left row by (k-value class, degree); probe with each right entry.
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets;
    buckets.reserve(n);
    auto key = [](std::uint32_t id, std::size_t deg) { return (std::uint64_t{id} << 32) | static_cast<std::uint32_t>(deg); };
    for (std::size_t p = 0; p < n; ++p) {
        buckets[key(labels.left_id(i, p), labels.left_degree[p])].push_back(static_cast<std::uint32_t>(p));
    }
    Bigraph h(n);
    for (std::size_t q = 0; q < n; ++q) {
        auto it = buckets.find(key(labels.right_id(j, q), labels.right_degree[q]));
        if (it == buckets.end()) continue;
        for (auto p : it->second) h.insert(p, q);
    }
    return h;
}

Bigraph build_bigraph(const KMatrix& k, const KMatrix& k2, std::size_t i, std::size_t j) {
    return build_bigraph(label_exact(k, k2), i, j);
}

Bigraph intersect(const Bigraph& a, const Bigraph& b) {
    Bigraph out = a;
    out &= b;
    return out;
}

std::optional<Mapping> transversal(const Bigraph& h) {
    const auto n = h.order();
    constexpr std::uint32_t none = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (std::size_t p = 0; p < n; ++p) {
        adj[p] = h.row(p);
        if (adj[p].empty()) return std::nullopt;
    }
    std::vector<std::uint32_t> match_left(n, none), match_right(n, none), dist(n);
    std::vector<std::size_t> cursor(n);
    std::vector<std::uint32_t> queue;
    queue.reserve(n);

    auto bfs = [&]() {
        queue.clear();
        bool found = false;
        for (std::uint32_t p = 0; p < n; ++p) {
            if (match_left[p] == none) {
                dist[p] = 0;
                queue.push_back(p);
            } else {
                dist[p] = none;
            }
        }
        for (std::size_t head = 0; head < queue.size(); ++head) {
            auto p = queue[head];
            for (auto q : adj[p]) {
                auto r = match_right[q];
                if (r == none) {
                    found = true;
                } else if (dist[r] == none) {
                    dist[r] = dist[p] + 1;
                    queue.push_back(r);
                }
            }
        }
        return found;
    };

    // Iterative layered DFS from a free left vertex.
    std::vector<std::uint32_t> stack;
    auto augment = [&](std::uint32_t root) {
        stack.clear();
        stack.push_back(root);
        while (!stack.empty()) {
            auto p = stack.back();
            bool advanced = false;
            while (cursor[p] < adj[p].size()) {
                auto q = adj[p][cursor[p]];
                auto r = match_right[q];
                if (r == none) {
                    // Flip the alternating path recorded on the stack.
                    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
                        auto v = *it;
                        auto target = adj[v][cursor[v]];
                        match_left[v] = target;
                        match_right[target] = v;
                    }
                    return true;
                }
                if (dist[r] == dist[p] + 1) {
                    stack.push_back(r);
                    advanced = true;
                    break;
                }
                ++cursor[p];
            }
            if (!advanced) {
                dist[p] = none;
                stack.pop_back();
                if (!stack.empty()) ++cursor[stack.back()];
            }
        }
        return false;
    };

    std::size_t matched = 0;
    while (bfs()) {
        std::fill(cursor.begin(), cursor.end(), 0);
        for (std::uint32_t p = 0; p < n; ++p) {
            if (match_left[p] == none && augment(p)) ++matched;
        }
    }
    if (matched != n) return std::nullopt;
    return match_left;
}

}  // namespace giso
