#pragma once

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tubings/io.hpp"
#include "tubings/pseudograph.hpp"

#ifndef TUBINGS_TEST_DATA
#define TUBINGS_TEST_DATA "tests/data"
#endif

namespace testing_support {

using tubings::Collection;
using tubings::Edge;
using tubings::Pseudograph;

inline Pseudograph graph(const std::string& text) { return tubings::parse_graph(text).graph; }

inline std::string data_path(const std::string& name) { return std::string(TUBINGS_TEST_DATA) + "/" + name; }

inline Pseudograph fixture(const std::string& name) { return tubings::read_graph_file(data_path(name)).graph; }

inline Pseudograph fig2() { return fixture("fig2.graph"); }
inline Pseudograph fig1() { return fixture("fig1.graph"); }
inline Pseudograph house() { return fixture("house.graph"); }
inline Pseudograph fig11() { return fixture("fig11.graph"); }

/// "13ab"-style shorthand for tests on graphs with single-digit ids.
inline Collection coll(const std::string& s) {
    std::vector<int> nodes;
    std::vector<std::string> labels;
    for (char ch : s) {
        if (ch >= '0' && ch <= '9') nodes.push_back(ch - '0');
        else labels.emplace_back(1, ch);
    }
    return Collection(nodes, labels);
}

inline std::set<std::string> names(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

/// Connected simple graphs on nodes 1..n as edge lists.
inline std::vector<std::vector<std::pair<int, int>>> connected_simple_graphs(int n) {
    std::vector<std::pair<int, int>> all;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) all.emplace_back(a, b);
    std::vector<std::vector<std::pair<int, int>>> out;
    for (unsigned m = 0; m < (1u << all.size()); ++m) {
        std::vector<std::pair<int, int>> es;
        for (std::size_t i = 0; i < all.size(); ++i)
            if ((m >> i) & 1u) es.push_back(all[i]);
        // union-find connectivity
        std::vector<int> parent(n + 1);
        for (int i = 0; i <= n; ++i) parent[i] = i;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (auto [a, b] : es) parent[find(a)] = find(b);
        bool connected = true;
        for (int i = 2; i <= n; ++i) connected = connected && find(i) == find(1);
        if (connected) out.push_back(es);
    }
    return out;
}

/// Every labelled connected pseudograph with at most `max_nodes` nodes and at
/// most two bundles of two or three edges each.
inline std::vector<Pseudograph> small_pseudographs(int max_nodes) {
    static const std::vector<std::vector<std::string>> label_pool = {{"a", "b", "c"}, {"d", "e", "f"}};
    std::vector<Pseudograph> out;
    for (int n = 1; n <= max_nodes; ++n) {
        std::vector<int> nodes;
        for (int i = 1; i <= n; ++i) nodes.push_back(i);
        for (const auto& es : connected_simple_graphs(n)) {
            const std::size_t m = es.size();
            // bundle choice: each edge gets size 1 (plain), 2 or 3; at most two non-plain
            std::vector<int> size(m, 1);
            auto emit = [&] {
                std::vector<Edge> edges;
                std::size_t used = 0;
                for (std::size_t i = 0; i < m; ++i) {
                    if (size[i] == 1) {
                        edges.push_back({es[i].first, es[i].second, std::nullopt});
                        continue;
                    }
                    for (int j = 0; j < size[i]; ++j) edges.push_back({es[i].first, es[i].second, label_pool[used][j]});
                    ++used;
                }
                out.push_back(Pseudograph::validate(nodes, edges));
            };
            auto rec = [&](auto&& self, std::size_t i, int bundles) -> void {
                if (i == m) {
                    emit();
                    return;
                }
                size[i] = 1;
                self(self, i + 1, bundles);
                if (bundles < 2)
                    for (int s : {2, 3}) {
                        size[i] = s;
                        self(self, i + 1, bundles + 1);
                    }
                size[i] = 1;
            };
            rec(rec, 0, 0);
        }
    }
    return out;
}

/// Random connected pseudograph on nodes offset+1..offset+n with labels drawn
/// from `prefix` + counter.
inline Pseudograph random_pseudograph(std::mt19937_64& rng, int n, int offset, const std::string& prefix,
                                      int max_bundles = 2, double extra_edge_p = 0.4) {
    std::vector<int> nodes;
    for (int i = 1; i <= n; ++i) nodes.push_back(offset + i);
    std::vector<std::pair<int, int>> es;
    // random spanning tree plus extras
    for (int i = 2; i <= n; ++i) {
        const int j = std::uniform_int_distribution<int>(1, i - 1)(rng);
        es.emplace_back(offset + j, offset + i);
    }
    std::bernoulli_distribution extra(extra_edge_p);
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (std::find(es.begin(), es.end(), std::make_pair(offset + a, offset + b)) == es.end() && extra(rng))
                es.emplace_back(offset + a, offset + b);
    std::shuffle(es.begin(), es.end(), rng);
    std::vector<Edge> edges;
    int counter = 0;
    int bundles = 0;
    for (auto [a, b] : es) {
        const bool make_bundle = bundles < max_bundles && std::bernoulli_distribution(0.5)(rng);
        if (!make_bundle) {
            edges.push_back({a, b, std::nullopt});
            continue;
        }
        ++bundles;
        const int size = std::uniform_int_distribution<int>(2, 3)(rng);
        for (int j = 0; j < size; ++j) edges.push_back({a, b, prefix + std::to_string(counter++)});
    }
    return Pseudograph::validate(nodes, edges);
}

inline Pseudograph disjoint_union(const Pseudograph& x, const Pseudograph& y) {
    std::vector<int> nodes = x.nodes();
    nodes.insert(nodes.end(), y.nodes().begin(), y.nodes().end());
    std::vector<Edge> edges = x.edges();
    edges.insert(edges.end(), y.edges().begin(), y.edges().end());
    return Pseudograph::validate(nodes, edges);
}

}  // namespace testing_support
