#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "tubings/error.hpp"
#include "tubings/simplicial.hpp"

using namespace tubings;
using Rational = boost::multiprecision::cpp_rational;

namespace {

std::vector<std::string> labels(std::size_t n) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back("v" + std::to_string(i));
    return v;
}

SimplicialComplex explicit_complex(std::size_t n, std::vector<std::vector<std::size_t>> facets) {
    return SimplicialComplex::from_facets(labels(n), std::move(facets));
}

SimplicialComplex random_flag(std::mt19937_64& rng, std::size_t n, double p) {
    std::vector<VertexSet> adj(n, VertexSet(n));
    std::bernoulli_distribution edge(p);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (edge(rng)) {
                adj[i].set(j);
                adj[j].set(i);
            }
    return SimplicialComplex::flag(labels(n), adj);
}

// Every clique by brute force over vertex subsets.
std::vector<std::vector<std::size_t>> cliques_oracle(const SimplicialComplex& k) {
    const auto adj = k.one_skeleton();
    std::vector<std::vector<std::size_t>> out;
    const std::size_t n = k.vertex_count();
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if ((m >> i) & 1u) s.push_back(i);
        bool ok = true;
        for (std::size_t a = 0; a < s.size() && ok; ++a)
            for (std::size_t b = a + 1; b < s.size() && ok; ++b) ok = adj[s[a]].test(s[b]);
        if (ok) out.push_back(s);
    }
    return out;
}

std::size_t rank_dense(std::vector<std::vector<Rational>> a) {
    std::size_t rank = 0;
    if (a.empty()) return 0;
    const std::size_t cols = a[0].size();
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
        std::size_t p = rank;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t i = rank + 1; i < a.size(); ++i) {
            const Rational f = a[i][c] / a[rank][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Reduced Betti numbers from dense boundary matrices over Q, no clearing.
std::vector<std::int64_t> betti_oracle(const SimplicialComplex& k) {
    const auto faces = cliques_oracle(k);
    std::vector<std::vector<std::vector<std::size_t>>> by_dim;
    for (const auto& f : faces) {
        if (by_dim.size() < f.size()) by_dim.resize(f.size());
        by_dim[f.size() - 1].push_back(f);
    }
    const std::size_t top = by_dim.size();
    std::vector<std::size_t> rank(top + 1, 0);
    if (top > 0) rank[0] = 1;
    for (std::size_t d = 1; d < top; ++d) {
        std::vector<std::vector<Rational>> m(by_dim[d - 1].size(), std::vector<Rational>(by_dim[d].size()));
        for (std::size_t j = 0; j < by_dim[d].size(); ++j)
            for (std::size_t drop = 0; drop <= d; ++drop) {
                auto f = by_dim[d][j];
                f.erase(f.begin() + static_cast<long>(drop));
                const auto it = std::find(by_dim[d - 1].begin(), by_dim[d - 1].end(), f);
                m[static_cast<std::size_t>(it - by_dim[d - 1].begin())][j] = (drop % 2 == 0) ? 1 : -1;
            }
        rank[d] = rank_dense(m);
    }
    std::vector<std::int64_t> b{1 - static_cast<std::int64_t>(rank[0])};
    for (std::size_t d = 0; d < top; ++d)
        b.push_back(static_cast<std::int64_t>(by_dim[d].size()) - static_cast<std::int64_t>(rank[d]) -
                    static_cast<std::int64_t>(rank[d + 1]));
    while (!b.empty() && b.back() == 0) b.pop_back();
    return b;
}

// Brute-force shellability: try every facet order.
bool shellable_oracle(std::vector<std::vector<std::size_t>> facets) {
    std::sort(facets.begin(), facets.end());
    do {
        if (is_shelling_order(facets)) return true;
    } while (std::next_permutation(facets.begin(), facets.end()));
    return false;
}

}  // namespace

TEST_CASE("small spheres and the empty complex") {
    CHECK(betti_reduced(SimplicialComplex()) == BettiVector{{1}});
    CHECK(euler_reduced(SimplicialComplex()) == -1);
    const SimplicialComplex s0 = explicit_complex(2, {{0}, {1}});
    CHECK(betti_reduced(s0) == BettiVector{{0, 1}});
    const SimplicialComplex point = explicit_complex(1, {{0}});
    CHECK(betti_reduced(point).all_zero());
    CHECK(euler_reduced(point) == 0);
    const SimplicialComplex triangle = explicit_complex(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(betti_reduced(triangle) == BettiVector{{0, 0, 1}});
    // boundary of the 4-simplex
    std::vector<std::vector<std::size_t>> facets;
    for (std::size_t drop = 0; drop < 5; ++drop) {
        std::vector<std::size_t> f;
        for (std::size_t i = 0; i < 5; ++i)
            if (i != drop) f.push_back(i);
        facets.push_back(f);
    }
    CHECK(betti_reduced(explicit_complex(5, facets)) == BettiVector{{0, 0, 0, 0, 1}});
}

TEST_CASE("torus and projective plane over the rationals") {
    // 7-vertex torus
    std::vector<std::vector<std::size_t>> torus;
    for (std::size_t i = 0; i < 7; ++i) {
        torus.push_back({i, (i + 1) % 7, (i + 3) % 7});
        torus.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    CHECK(betti_reduced(explicit_complex(7, torus)) == BettiVector{{0, 0, 2, 1}});
    // 6-vertex projective plane: rationally acyclic
    const std::vector<std::vector<std::size_t>> rp2 = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                                       {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}};
    CHECK(betti_reduced(explicit_complex(6, rp2)).all_zero());
    CHECK(euler_reduced(explicit_complex(6, rp2)) == 0);
}

TEST_CASE("flag faces match brute-force cliques") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const SimplicialComplex k = random_flag(rng, 1 + rng() % 9, 0.55);
        const FaceTable t = k.faces();
        auto oracle = cliques_oracle(k);
        std::size_t total = 0;
        for (std::size_t d = 0; d < t.dimension_count(); ++d) {
            std::vector<std::vector<std::size_t>> expected;
            for (const auto& f : oracle)
                if (f.size() == d + 1) expected.push_back(f);
            std::sort(expected.begin(), expected.end());
            REQUIRE(t.count(d) == expected.size());
            for (std::size_t j = 0; j < t.count(d); ++j) {
                std::vector<std::size_t> f(t.by_dim[d].begin() + static_cast<long>(j * (d + 1)),
                                           t.by_dim[d].begin() + static_cast<long>((j + 1) * (d + 1)));
                CHECK(f == expected[j]);
                CHECK(t.find(d, t.by_dim[d].data() + j * (d + 1)) == j);
            }
            total += expected.size();
        }
        CHECK(total == oracle.size());
        // maximal cliques
        std::vector<std::vector<std::size_t>> maximal;
        for (const auto& f : oracle) {
            bool dominated = false;
            for (const auto& g : oracle)
                if (g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end())) dominated = true;
            if (!dominated) maximal.push_back(f);
        }
        std::sort(maximal.begin(), maximal.end());
        CHECK(k.facets() == maximal);
    }
}

TEST_CASE("Betti numbers agree with a dense oracle and Euler characteristics") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 80; ++trial) {
        const SimplicialComplex k = random_flag(rng, 1 + rng() % 9, 0.3 + 0.05 * (trial % 10));
        const BettiVector b = betti_reduced(k);
        CHECK(b.values == betti_oracle(k));
        CHECK(alternating_sum(b) == euler_reduced(k));
    }
}

TEST_CASE("explicit and flag forms agree") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        const SimplicialComplex k = random_flag(rng, 2 + rng() % 7, 0.5);
        const SimplicialComplex e = SimplicialComplex::from_facets(k.vertex_names(), k.facets());
        CHECK(betti_reduced(k) == betti_reduced(e));
        CHECK(e.facets() == k.facets());
        std::vector<std::size_t> keep;
        for (std::size_t v = 0; v < k.vertex_count(); v += 2) keep.push_back(v);
        CHECK(betti_reduced(k.induced(keep)) == betti_reduced(e.induced(keep)));
    }
}

TEST_CASE("face budget is enforced") {
    std::vector<VertexSet> adj(12, VertexSet(12));
    for (std::size_t i = 0; i < 12; ++i) {
        adj[i].set();
        adj[i].reset(i);
    }
    const SimplicialComplex full = SimplicialComplex::flag(labels(12), adj);
    bool thrown = false;
    try {
        betti_reduced(full, 100);
    } catch (const Error& e) {
        thrown = e.kind() == ErrorKind::FaceBudgetExceeded;
    }
    CHECK(thrown);
    CHECK(betti_reduced(full).all_zero());
}

TEST_CASE("shellability") {
    const auto triangle = shellable(explicit_complex(3, {{0, 1}, {1, 2}, {0, 2}}));
    CHECK(triangle.status == ShellStatus::Yes);
    CHECK(is_shelling_order(triangle.order));
    CHECK(shellable(explicit_complex(4, {{0, 1}, {2, 3}})).status == ShellStatus::No);
    CHECK(shellable(explicit_complex(5, {{0, 1, 2}, {2, 3, 4}})).status == ShellStatus::No);
    // a triangle with a pendant edge: non-pure but shellable
    const auto pendant = shellable(explicit_complex(4, {{0, 1, 2}, {2, 3}}));
    CHECK(pendant.status == ShellStatus::Yes);
    CHECK(is_shelling_order(pendant.order));
    CHECK(!is_shelling_order({{2, 3}, {0, 1}}));
    CHECK(shellable(SimplicialComplex()).status == ShellStatus::Yes);
}

TEST_CASE("shellability agrees with trying every order") {
    std::mt19937_64 rng(13);
    int yes = 0, no = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 3 + rng() % 4;
        std::vector<std::vector<std::size_t>> facets;
        const std::size_t count = 2 + rng() % 4;
        for (std::size_t f = 0; f < count; ++f) {
            std::vector<std::size_t> s;
            for (std::size_t v = 0; v < n; ++v)
                if (rng() % 2) s.push_back(v);
            if (s.empty()) s.push_back(rng() % n);
            facets.push_back(s);
        }
        const SimplicialComplex k = explicit_complex(n, facets);
        const auto res = shellable(k);
        const bool oracle = shellable_oracle(k.facets());
        CHECK(res.status == (oracle ? ShellStatus::Yes : ShellStatus::No));
        if (res.status == ShellStatus::Yes) {
            CHECK(is_shelling_order(res.order));
            ++yes;
        } else {
            ++no;
        }
    }
    CHECK(yes > 10);
    CHECK(no > 10);
}

TEST_CASE("shelling budget reports unknown") {
    // many disjoint triangles are not shellable; a tiny budget cannot decide it
    std::vector<std::vector<std::size_t>> facets;
    for (std::size_t i = 0; i < 8; ++i) facets.push_back({3 * i, 3 * i + 1, 3 * i + 2});
    CHECK(shellable(explicit_complex(24, facets), 3).status == ShellStatus::Unknown);
}

TEST_CASE("joins") {
    const SimplicialComplex s0a = SimplicialComplex::from_facets({"a", "b"}, {{0}, {1}});
    const SimplicialComplex s0b = SimplicialComplex::from_facets({"c", "d"}, {{0}, {1}});
    const SimplicialComplex cyc = join(s0a, s0b);
    CHECK(cyc.vertex_count() == 4);
    CHECK(cyc.facets().size() == 4);
    CHECK(betti_reduced(cyc) == BettiVector{{0, 0, 1}});
    const SimplicialComplex x = explicit_complex(3, {{0, 1}, {2}});
    CHECK(betti_reduced(join(x, SimplicialComplex())) == betti_reduced(x));
    CHECK(join(x, SimplicialComplex()).facets() == x.facets());
    bool clash = false;
    try {
        join(s0a, s0a);
    } catch (const Error& e) {
        clash = e.kind() == ErrorKind::VertexClash;
    }
    CHECK(clash);
    // flag joins
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        SimplicialComplex a = random_flag(rng, 1 + rng() % 4, 0.5);
        std::vector<std::string> names;
        for (const auto& n : a.vertex_names()) names.push_back("x" + n);
        a = SimplicialComplex::from_facets(names, a.facets());
        const SimplicialComplex b = random_flag(rng, 1 + rng() % 4, 0.5);
        const BettiVector ja = betti_reduced(join(a, b));
        // reduced Künneth for joins: β̃_{k+1}(A*B) = Σ β̃_i(A) β̃_j(B), i + j = k
        const BettiVector ba = betti_reduced(a), bb = betti_reduced(b);
        for (int k = -1; k < 8; ++k) {
            std::int64_t s = 0;
            for (int i = -1; i <= k + 1; ++i) s += ba.at(i) * bb.at(k - i);
            CHECK(ja.at(k + 1) == s);
        }
    }
}
