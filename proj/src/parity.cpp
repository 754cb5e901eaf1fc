#include "tubings/parity.hpp"

#include <algorithm>
#include <set>

#include "tubings/error.hpp"

namespace tubings {

Designation Designation::canonical(const Pseudograph& g) {
    Designation d;
    for (const auto& comp : g.components_of(g.universe())) {
        std::size_t last = 0;
        (comp & g.node_mask()).for_each([&](std::size_t i) { last = i; });
        d.last_node.push_back(last);
    }
    for (std::size_t b = 0; b < g.bundle_count(); ++b) {
        std::size_t last = 0;
        g.bundle_mask(b).for_each([&](std::size_t e) { last = e; });
        d.last_edge.push_back(last);
    }
    return d;
}

Designation Designation::random(const Pseudograph& g, std::mt19937_64& rng) {
    auto pick = [&](const ElementSet& s) {
        std::vector<std::size_t> v;
        s.for_each([&](std::size_t e) { v.push_back(e); });
        return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
    };
    Designation d;
    for (const auto& comp : g.components_of(g.universe())) d.last_node.push_back(pick(comp & g.node_mask()));
    for (std::size_t b = 0; b < g.bundle_count(); ++b) d.last_edge.push_back(pick(g.bundle_mask(b)));
    return d;
}

ElementSet r_set(const Pseudograph& g, const Designation& d) {
    ElementSet r = g.universe();
    for (auto e : d.last_node) r.reset(e);
    for (auto e : d.last_edge) r.reset(e);
    return r;
}

ElementSet r_set(const Pseudograph& g) { return r_set(g, Designation::canonical(g)); }

bool is_even(const Pseudograph& g, const ElementSet& c) {
    for (const auto& comp : g.components_of(g.universe()))
        if ((c & comp & g.node_mask()).odd()) return false;
    for (std::size_t b = 0; b < g.bundle_count(); ++b)
        if ((c & g.bundle_mask(b)).odd()) return false;
    return true;
}

ElementSet even_completion(const Pseudograph& g, const Designation& d, const ElementSet& r) {
    ElementSet c = r;
    const auto comps = g.components_of(g.universe());
    for (std::size_t i = 0; i < comps.size(); ++i)
        if ((r & comps[i] & g.node_mask()).odd()) c.set(d.last_node[i]);
    for (std::size_t b = 0; b < g.bundle_count(); ++b)
        if ((r & g.bundle_mask(b)).odd()) c.set(d.last_edge[b]);
    return c;
}

std::vector<ElementSet> even_collections(const Pseudograph& g, const Designation& d) {
    std::vector<std::size_t> free;
    r_set(g, d).for_each([&](std::size_t e) { free.push_back(e); });
    if (free.size() > 40) throw Error(ErrorKind::GraphTooLarge, "too many even collections");
    std::vector<ElementSet> out;
    out.reserve(std::size_t{1} << free.size());
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << free.size()); ++m) {
        ElementSet r;
        for (std::size_t j = 0; j < free.size(); ++j)
            if ((m >> j) & 1u) r.set(free[j]);
        out.push_back(even_completion(g, d, r));
    }
    return out;
}

std::vector<ElementSet> even_collections(const Pseudograph& g) { return even_collections(g, Designation::canonical(g)); }

Parity parity(const ElementSet& subgraph, const ElementSet& c) {
    return (subgraph & c).odd() ? Parity::Odd : Parity::Even;
}

Parity parity(const Tube& t, const Collection& c) { return parity(t.repr, t.host->mask_of(c)); }

std::vector<std::size_t> parity_vertices(const TubingComplex& k, const ElementSet& c, Parity p) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < k.size(); ++i)
        if (parity(k.tubes()[i], c) == p) out.push_back(i);
    return out;
}

std::vector<std::size_t> k_prime_vertices(const TubingComplex& k, const ElementSet& c) {
    const Pseudograph& g = k.graph();
    const ElementSet vc = touched_nodes(g, c);
    std::vector<std::size_t> out;
    for (auto i : parity_vertices(k, c, Parity::Odd))
        if ((k.tubes()[i] & g.node_mask()).subset_of(vc)) out.push_back(i);
    return out;
}

namespace {

// Bundles of Γ̃_G(C) that C misses: these collapse in Γ_G(C).
std::vector<std::size_t> collapsed_bundles(const Pseudograph& g, const ElementSet& c) {
    const ElementSet vc = touched_nodes(g, c);
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < g.bundle_count(); ++b) {
        auto [x, y] = g.bundle_endpoints(b);
        if (vc.test(x) && vc.test(y) && !g.bundle_mask(b).intersects(c)) out.push_back(b);
    }
    return out;
}

}  // namespace

std::vector<std::size_t> k_double_prime_vertices(const TubingComplex& k, const ElementSet& c) {
    const Pseudograph& g = k.graph();
    const auto collapsed = collapsed_bundles(g, c);
    std::vector<std::size_t> out;
    for (auto i : k_prime_vertices(k, c)) {
        const ElementSet& t = k.tubes()[i];
        bool ok = true;
        for (auto b : collapsed) {
            auto [x, y] = g.bundle_endpoints(b);
            if (t.test(x) && t.test(y) && !g.bundle_mask(b).subset_of(t)) ok = false;
        }
        if (ok) out.push_back(i);
    }
    return out;
}

SimplicialComplex k_odd(const TubingComplex& k, const ElementSet& c) {
    return k.induced(parity_vertices(k, c, Parity::Odd));
}
SimplicialComplex k_even(const TubingComplex& k, const ElementSet& c) {
    return k.induced(parity_vertices(k, c, Parity::Even));
}
SimplicialComplex k_prime(const TubingComplex& k, const ElementSet& c) { return k.induced(k_prime_vertices(k, c)); }
SimplicialComplex k_double_prime(const TubingComplex& k, const ElementSet& c) {
    return k.induced(k_double_prime_vertices(k, c));
}

std::vector<ElementSet> gamma_tilde_components(const Pseudograph& g, const ElementSet& c) {
    const ElementSet vc = touched_nodes(g, c);
    ElementSet whole = vc;
    for (std::size_t b = 0; b < g.bundle_count(); ++b) {
        auto [x, y] = g.bundle_endpoints(b);
        if (vc.test(x) && vc.test(y)) whole |= g.bundle_mask(b);
    }
    return g.components_of(whole);
}

bool is_even_star(const Pseudograph& g, const ElementSet& c) {
    if (!is_even(g, c)) throw Error(ErrorKind::NotEven, "collection " + g.name_of(c) + " is not even");
    for (const auto& comp : gamma_tilde_components(g, c))
        if ((comp & c).odd()) return false;
    return true;
}

bool is_admissible(const Pseudograph& h, const ElementSet& c) {
    if (!c.subset_of(h.universe()) || !is_even(h, c)) return false;
    ElementSet endpoints;
    for (std::size_t b = 0; b < h.bundle_count(); ++b) {
        auto [x, y] = h.bundle_endpoints(b);
        endpoints.set(x);
        endpoints.set(y);
        if (!h.bundle_mask(b).intersects(c)) return false;
    }
    return (h.node_mask() - endpoints).subset_of(c);
}

bool is_admissible(const Pseudograph& h, const Collection& c) {
    ElementSet m;
    try {
        m = h.mask_of(c);
    } catch (const Error&) {
        return false;
    }
    return is_admissible(h, m);
}

std::vector<ElementSet> admissible_collections(const Pseudograph& h) {
    std::vector<ElementSet> out;
    for (const auto& c : even_collections(h))
        if (is_admissible(h, c)) out.push_back(c);
    return out;
}

IsomorphismReport check_tilde_isomorphism(const TubingComplex& k, const ElementSet& c) {
    const Pseudograph& g = k.graph();
    const Collection coll = g.collection_of(c);
    const TubingComplex kg(gamma(g, coll));
    const Pseudograph& h = kg.graph();
    const ElementSet ch = h.mask_of(coll);
    const auto collapsed = collapsed_bundles(g, c);

    IsomorphismReport rep;
    const auto source = parity_vertices(kg, ch, Parity::Odd);
    const auto target = k_double_prime_vertices(k, c);
    if (source.size() != target.size()) {
        rep.detail = "vertex counts differ: " + std::to_string(source.size()) + " vs " + std::to_string(target.size());
        return rep;
    }
    std::vector<std::size_t> image;
    for (auto i : source) {
        Collection t = h.collection_of(kg.tubes()[i]);
        const std::set<int> ids(t.nodes.begin(), t.nodes.end());
        for (auto b : collapsed) {
            const Bundle& bd = g.bundles()[b];
            if (ids.count(bd.a) && ids.count(bd.b)) t.labels.insert(t.labels.end(), bd.labels.begin(), bd.labels.end());
        }
        const auto j = k.index_of(g.mask_of(Collection(t.nodes, t.labels)));
        if (!j || !std::binary_search(target.begin(), target.end(), *j)) {
            rep.detail = "tube " + kg.tube_name(i) + " does not expand to a vertex of K''";
            return rep;
        }
        image.push_back(*j);
    }
    auto sorted = image;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        rep.detail = "expansion map is not injective";
        return rep;
    }
    for (std::size_t x = 0; x < source.size(); ++x)
        for (std::size_t y = x + 1; y < source.size(); ++y) {
            const bool a = compatible(h, kg.tubes()[source[x]], kg.tubes()[source[y]]);
            const bool b = compatible(g, k.tubes()[image[x]], k.tubes()[image[y]]);
            if (a != b) {
                rep.detail = "edge " + kg.tube_name(source[x]) + "-" + kg.tube_name(source[y]) + " not preserved";
                return rep;
            }
        }
    rep.isomorphic = true;
    return rep;
}

}  // namespace tubings
