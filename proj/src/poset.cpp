#include "tubings/poset.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "tubings/error.hpp"

namespace tubings {

FinitePoset::FinitePoset(std::vector<std::string> names, std::vector<VertexSet> less)
    : names_(std::move(names)), less_(std::move(less)) {
    if (less_.size() != names_.size()) throw std::invalid_argument("poset relation has the wrong size");
    for (std::size_t i = 0; i < less_.size(); ++i) {
        less_[i].resize(names_.size());
        if (less_[i].test(i)) throw std::invalid_argument("poset relation is not irreflexive");
    }
    for (std::size_t i = 0; i < less_.size(); ++i)
        for (auto j = less_[i].find_first(); j != VertexSet::npos; j = less_[i].find_next(j))
            if (!less_[j].is_subset_of(less_[i]) || less_[j].test(i))
                throw std::invalid_argument("poset relation is not a strict order");
}

FinitePoset FinitePoset::from_sets(std::vector<std::string> names, const std::vector<ElementSet>& sets) {
    const std::size_t n = sets.size();
    std::vector<VertexSet> less(n, VertexSet(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && sets[i] != sets[j] && sets[i].subset_of(sets[j])) less[i].set(j);
    return FinitePoset(std::move(names), std::move(less));
}

std::vector<std::size_t> FinitePoset::linear_extension() const {
    // the number of elements below is strictly increasing along the order
    std::vector<std::size_t> below(size(), 0);
    for (std::size_t i = 0; i < size(); ++i)
        for (auto j = less_[i].find_first(); j != VertexSet::npos; j = less_[i].find_next(j)) ++below[j];
    std::vector<std::size_t> order(size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return below[a] < below[b]; });
    return order;
}

ParityPoset s_parity_poset(const TubingComplex& k, const ElementSet& c, Parity p, ExcludeRule rule,
                           std::size_t budget) {
    const Pseudograph& g = k.graph();
    const auto vertices = parity_vertices(k, c, p);
    const std::size_t m = vertices.size();

    ElementSet excluded = c;
    if (rule == ExcludeRule::Gamma) {
        excluded = touched_nodes(g, c);
        for (std::size_t b = 0; b < g.bundle_count(); ++b)
            if (g.bundle_mask(b).intersects(c)) excluded |= g.bundle_mask(b);
    }

    // later[i]: tubes after i separated from it
    std::vector<std::vector<std::size_t>> later(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (g.separated(k.tubes()[vertices[i]], k.tubes()[vertices[j]])) later[i].push_back(j);

    std::vector<ElementSet> elements;
    std::vector<std::size_t> chosen;
    auto grow = [&](auto&& self, const ElementSet& acc, std::size_t from) -> void {
        for (std::size_t j = from; j < m; ++j) {
            bool ok = true;
            for (auto i : chosen)
                if (!std::binary_search(later[i].begin(), later[i].end(), j)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            const ElementSet next = acc | k.tubes()[vertices[j]];
            if (next != excluded) {
                if (elements.size() >= budget)
                    throw Error(ErrorKind::FaceBudgetExceeded, "poset has more than " + std::to_string(budget) + " elements");
                elements.push_back(next);
            }
            chosen.push_back(j);
            self(self, next, j + 1);
            chosen.pop_back();
        }
    };
    grow(grow, ElementSet{}, 0);

    std::vector<std::pair<std::vector<std::size_t>, ElementSet>> keyed;
    for (const auto& e : elements) {
        std::vector<std::size_t> nodes, labels;
        e.for_each([&](std::size_t x) { (g.is_node_element(x) ? nodes : labels).push_back(x); });
        std::vector<std::size_t> key{nodes.size()};
        key.insert(key.end(), nodes.begin(), nodes.end());
        key.push_back(std::numeric_limits<std::size_t>::max() - labels.size());
        key.insert(key.end(), labels.begin(), labels.end());
        keyed.emplace_back(std::move(key), e);
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    ParityPoset out;
    std::vector<std::string> names;
    for (const auto& [key, e] : keyed) {
        out.elements.push_back(e);
        names.push_back(g.name_of(e));
    }
    out.poset = FinitePoset::from_sets(std::move(names), out.elements);
    return out;
}

SimplicialComplex order_complex(const FinitePoset& p) {
    const std::size_t n = p.size();
    std::vector<VertexSet> adj(n, VertexSet(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (p.less(i, j)) {
                adj[i].set(j);
                adj[j].set(i);
            }
    return SimplicialComplex::flag(p.names(), std::move(adj));
}

std::int64_t mobius_euler(const FinitePoset& p) {
    // mu[x] = μ(0̂, x)
    std::vector<std::int64_t> mu(p.size(), 0);
    std::int64_t total = 1;  // μ(0̂, 0̂)
    for (auto x : p.linear_extension()) {
        std::int64_t s = 1;
        for (std::size_t y = 0; y < p.size(); ++y)
            if (p.less(y, x)) s += mu[y];
        mu[x] = -s;
        total += mu[x];
    }
    return -total;
}

}  // namespace tubings
