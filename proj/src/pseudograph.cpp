#include "tubings/pseudograph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <tuple>

#include "tubings/error.hpp"

namespace tubings {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::LoopEdge: return "LoopEdge";
        case ErrorKind::DuplicateLabel: return "DuplicateLabel";
        case ErrorKind::UnlabelledBundleEdge: return "UnlabelledBundleEdge";
        case ErrorKind::InvalidLabel: return "InvalidLabel";
        case ErrorKind::InvalidNode: return "InvalidNode";
        case ErrorKind::UnknownNode: return "UnknownNode";
        case ErrorKind::UnknownNodeInEdge: return "UnknownNodeInEdge";
        case ErrorKind::UnknownBundle: return "UnknownBundle";
        case ErrorKind::UnknownMember: return "UnknownMember";
        case ErrorKind::NotInAnyBundle: return "NotInAnyBundle";
        case ErrorKind::HostMismatch: return "HostMismatch";
        case ErrorKind::NotEven: return "NotEven";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::VertexClash: return "VertexClash";
        case ErrorKind::FaceBudgetExceeded: return "FaceBudgetExceeded";
        case ErrorKind::GraphTooLarge: return "GraphTooLarge";
        case ErrorKind::SyntaxError: return "SyntaxError";
    }
    return "Error";
}

namespace {

bool valid_label(const std::string& s) {
    if (s.empty()) return false;
    bool all_digits = true;
    for (unsigned char ch : s) {
        if (!std::isalnum(ch)) return false;
        if (!std::isdigit(ch)) all_digits = false;
    }
    return !all_digits;
}

}  // namespace

Collection::Collection(std::vector<int> node_ids, std::vector<std::string> edge_labels)
    : nodes(std::move(node_ids)), labels(std::move(edge_labels)) {
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
}

Pseudograph Pseudograph::validate(std::vector<int> nodes, std::vector<Edge> edges) {
    Pseudograph g;
    std::sort(nodes.begin(), nodes.end());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i] <= 0) throw Error(ErrorKind::InvalidNode, "node ids must be positive, got " + std::to_string(nodes[i]));
        if (i > 0 && nodes[i] == nodes[i - 1])
            throw Error(ErrorKind::InvalidNode, "duplicate node " + std::to_string(nodes[i]));
    }
    g.nodes_ = std::move(nodes);

    std::set<std::string> seen_labels;
    for (auto& e : edges) {
        if (e.a == e.b) throw Error(ErrorKind::LoopEdge, "edge " + std::to_string(e.a) + "-" + std::to_string(e.b));
        if (!std::binary_search(g.nodes_.begin(), g.nodes_.end(), e.a) ||
            !std::binary_search(g.nodes_.begin(), g.nodes_.end(), e.b))
            throw Error(ErrorKind::UnknownNode, "edge " + std::to_string(e.a) + "-" + std::to_string(e.b));
        if (e.a > e.b) std::swap(e.a, e.b);
        if (e.label) {
            if (!valid_label(*e.label)) throw Error(ErrorKind::InvalidLabel, "'" + *e.label + "'");
            if (!seen_labels.insert(*e.label).second) throw Error(ErrorKind::DuplicateLabel, "'" + *e.label + "'");
        }
    }
    std::sort(edges.begin(), edges.end());
    g.edges_ = std::move(edges);

    // group parallel edges
    std::map<std::pair<int, int>, std::vector<const Edge*>> groups;
    for (const auto& e : g.edges_) groups[{e.a, e.b}].push_back(&e);
    for (const auto& [ends, group] : groups) {
        if (group.size() < 2) continue;
        Bundle b{ends.first, ends.second, {}};
        for (const Edge* e : group) {
            if (!e->label)
                throw Error(ErrorKind::UnlabelledBundleEdge,
                            "edge " + std::to_string(ends.first) + "-" + std::to_string(ends.second));
            b.labels.push_back(*e->label);
        }
        std::sort(b.labels.begin(), b.labels.end());
        g.bundles_.push_back(std::move(b));
    }

    const std::size_t n = g.nodes_.size();
    std::vector<std::pair<std::string, std::size_t>> all;
    for (std::size_t bi = 0; bi < g.bundles_.size(); ++bi)
        for (const auto& l : g.bundles_[bi].labels) all.emplace_back(l, bi);
    std::sort(all.begin(), all.end());
    if (n + all.size() > ElementSet::kCapacity)
        throw Error(ErrorKind::GraphTooLarge, "at most " + std::to_string(ElementSet::kCapacity) +
                                                  " nodes plus bundle edges are supported");
    for (auto& [l, bi] : all) {
        g.bundle_labels_.push_back(l);
        g.label_bundle_.push_back(bi);
    }
    g.bundle_masks_.assign(g.bundles_.size(), ElementSet{});
    for (std::size_t j = 0; j < all.size(); ++j) g.bundle_masks_[g.label_bundle_[j]].set(n + j);
    for (const auto& b : g.bundles_) g.bundle_ends_.emplace_back(*g.node_index(b.a), *g.node_index(b.b));

    g.adjacency_.assign(n, ElementSet{});
    g.simple_adjacency_.assign(n, ElementSet{});
    for (const auto& [ends, group] : groups) {
        const auto i = *g.node_index(ends.first);
        const auto j = *g.node_index(ends.second);
        g.adjacency_[i].set(j);
        g.adjacency_[j].set(i);
        if (group.size() == 1) {
            g.simple_adjacency_[i].set(j);
            g.simple_adjacency_[j].set(i);
        }
    }

    for (int id : g.nodes_)
        if (id > 9) g.compact_names_ = false;
    for (const auto& l : g.bundle_labels_)
        if (l.size() != 1) g.compact_names_ = false;
    return g;
}

std::optional<std::size_t> Pseudograph::node_index(int id) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id);
    if (it == nodes_.end() || *it != id) return std::nullopt;
    return static_cast<std::size_t>(it - nodes_.begin());
}

std::optional<std::size_t> Pseudograph::label_element(std::string_view label) const {
    auto it = std::lower_bound(bundle_labels_.begin(), bundle_labels_.end(), label);
    if (it == bundle_labels_.end() || *it != label) return std::nullopt;
    return nodes_.size() + static_cast<std::size_t>(it - bundle_labels_.begin());
}

bool Pseudograph::has_edge_label(std::string_view label) const {
    return std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.label && *e.label == label; });
}

std::string Pseudograph::element_name(std::size_t e) const {
    return is_node_element(e) ? std::to_string(nodes_[e]) : element_label(e);
}

std::optional<std::size_t> Pseudograph::bundle_between(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    for (std::size_t b = 0; b < bundle_ends_.size(); ++b)
        if (bundle_ends_[b] == std::pair{i, j}) return b;
    return std::nullopt;
}

ElementSet Pseudograph::mask_of(const Collection& c) const {
    ElementSet s;
    for (int id : c.nodes) {
        auto i = node_index(id);
        if (!i) throw Error(ErrorKind::UnknownMember, "node " + std::to_string(id));
        s.set(*i);
    }
    for (const auto& l : c.labels) {
        auto e = label_element(l);
        if (!e) {
            if (has_edge_label(l)) throw Error(ErrorKind::NotInAnyBundle, "label '" + l + "'");
            throw Error(ErrorKind::UnknownMember, "label '" + l + "'");
        }
        s.set(*e);
    }
    return s;
}

Collection Pseudograph::collection_of(const ElementSet& s) const {
    Collection c;
    s.for_each([&](std::size_t e) {
        if (is_node_element(e)) c.nodes.push_back(nodes_[e]);
        else c.labels.push_back(element_label(e));
    });
    return c;
}

std::vector<int> Pseudograph::node_ids_of(const ElementSet& s) const {
    std::vector<int> out;
    (s & node_mask()).for_each([&](std::size_t e) { out.push_back(nodes_[e]); });
    return out;
}

std::vector<ElementSet> Pseudograph::components_of(const ElementSet& s) const {
    const ElementSet nodes_in = s & node_mask();
    // per node, the neighbours reachable inside s
    auto step = [&](std::size_t i) {
        ElementSet nb = simple_adjacency_[i] & nodes_in;
        for (std::size_t b = 0; b < bundles_.size(); ++b) {
            if (!bundle_masks_[b].intersects(s)) continue;
            auto [x, y] = bundle_ends_[b];
            if (x == i && nodes_in.test(y)) nb.set(y);
            if (y == i && nodes_in.test(x)) nb.set(x);
        }
        return nb;
    };
    std::vector<ElementSet> out;
    ElementSet todo = nodes_in;
    while (!todo.empty()) {
        ElementSet comp = ElementSet::single(todo.first());
        ElementSet frontier = comp;
        while (!frontier.empty()) {
            ElementSet next;
            frontier.for_each([&](std::size_t i) { next |= step(i); });
            next -= comp;
            comp |= next;
            frontier = next;
        }
        todo -= comp;
        // attach the labels living on this component's nodes
        for (std::size_t b = 0; b < bundles_.size(); ++b) {
            auto [x, y] = bundle_ends_[b];
            if (comp.test(x) && comp.test(y)) comp |= bundle_masks_[b] & s;
        }
        out.push_back(comp);
    }
    return out;
}

bool Pseudograph::is_connected_subgraph(const ElementSet& s) const {
    return components_of(s).size() == 1;
}

bool Pseudograph::separated(const ElementSet& a, const ElementSet& b) const {
    const ElementSet na = a & node_mask();
    const ElementSet nb = b & node_mask();
    if (na.intersects(nb)) return false;
    bool touching = false;
    na.for_each([&](std::size_t i) {
        if (adjacency_[i].intersects(nb)) touching = true;
    });
    return !touching;
}

std::string format_set(const std::vector<int>& nodes, const std::vector<std::string>& labels, bool compact) {
    std::string out;
    for (int id : nodes) {
        if (!compact && !out.empty()) out += ',';
        out += std::to_string(id);
    }
    for (const auto& l : labels) {
        if (!compact && !out.empty()) out += ',';
        out += l;
    }
    return out;
}

std::string Pseudograph::name_of(const ElementSet& s) const {
    const Collection c = collection_of(s);
    return format_set(c.nodes, c.labels, compact_names_);
}

bool operator==(const Pseudograph& x, const Pseudograph& y) {
    if (x.nodes_ != y.nodes_) return false;
    auto simple_pairs = [](const Pseudograph& g) {
        std::set<std::pair<int, int>> out;
        for (const auto& e : g.edges_) out.emplace(e.a, e.b);
        return out;
    };
    if (simple_pairs(x) != simple_pairs(y)) return false;
    auto bundle_edges = [](const Pseudograph& g) {
        std::set<std::tuple<std::string, int, int>> out;
        for (const auto& b : g.bundles_)
            for (const auto& l : b.labels) out.emplace(l, b.a, b.b);
        return out;
    };
    return bundle_edges(x) == bundle_edges(y);
}

Pseudograph underlying_simple_graph(const Pseudograph& g) {
    std::set<std::pair<int, int>> pairs;
    for (const auto& e : g.edges()) pairs.emplace(e.a, e.b);
    std::vector<Edge> edges;
    for (auto [a, b] : pairs) edges.push_back({a, b, std::nullopt});
    return Pseudograph::validate(g.nodes(), std::move(edges));
}

Pseudograph induced_subgraph(const Pseudograph& g, const std::vector<int>& node_ids) {
    for (int id : node_ids)
        if (!g.node_index(id)) throw Error(ErrorKind::UnknownNode, "node " + std::to_string(id));
    std::vector<int> keep(node_ids);
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (std::binary_search(keep.begin(), keep.end(), e.a) && std::binary_search(keep.begin(), keep.end(), e.b))
            edges.push_back(e);
    return Pseudograph::validate(std::move(keep), std::move(edges));
}

Pseudograph induced_subgraph(const Pseudograph& g, const ElementSet& node_bits) {
    return induced_subgraph(g, g.node_ids_of(node_bits));
}

std::vector<Pseudograph> connected_components(const Pseudograph& g) {
    std::vector<Pseudograph> out;
    for (const auto& comp : g.components_of(g.universe())) out.push_back(induced_subgraph(g, comp));
    return out;
}

Pseudograph partial_underlying(const Pseudograph& g, const std::vector<std::size_t>& bundle_indices) {
    std::set<std::pair<int, int>> collapse;
    for (auto bi : bundle_indices) {
        if (bi >= g.bundle_count()) throw Error(ErrorKind::UnknownBundle, "bundle #" + std::to_string(bi));
        collapse.emplace(g.bundles()[bi].a, g.bundles()[bi].b);
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (!collapse.count({e.a, e.b})) edges.push_back(e);
    for (auto [a, b] : collapse) edges.push_back({a, b, std::nullopt});
    return Pseudograph::validate(g.nodes(), std::move(edges));
}

Pseudograph partial_underlying(const Pseudograph& g, const std::vector<std::string>& bundle_labels) {
    std::vector<std::size_t> idx;
    for (const auto& l : bundle_labels) {
        auto e = g.label_element(l);
        if (!e) throw Error(ErrorKind::UnknownBundle, "label '" + l + "'");
        idx.push_back(g.bundle_of(*e));
    }
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return partial_underlying(g, idx);
}

std::vector<Pseudograph> enumerate_lessdot(const Pseudograph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::vector<std::size_t>> subsets;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if ((m >> i) & 1u) s.push_back(i);
        subsets.push_back(std::move(s));
    }
    std::sort(subsets.begin(), subsets.end(), [](const auto& x, const auto& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });

    std::vector<Pseudograph> out;
    for (const auto& s : subsets) {
        std::vector<int> ids;
        for (auto i : s) ids.push_back(g.node_id(i));
        Pseudograph induced = induced_subgraph(g, ids);
        const std::size_t k = induced.bundle_count();
        for (std::uint64_t cm = 0; cm < (std::uint64_t{1} << k); ++cm) {
            std::vector<std::size_t> collapse;
            for (std::size_t b = 0; b < k; ++b)
                if ((cm >> b) & 1u) collapse.push_back(b);
            out.push_back(collapse.empty() ? induced : partial_underlying(induced, collapse));
        }
    }
    return out;
}

ElementSet touched_nodes(const Pseudograph& g, const ElementSet& c) {
    ElementSet v = c & g.node_mask();
    for (std::size_t b = 0; b < g.bundle_count(); ++b) {
        if (!g.bundle_mask(b).intersects(c)) continue;
        auto [x, y] = g.bundle_endpoints(b);
        v.set(x);
        v.set(y);
    }
    return v;
}

Pseudograph gamma_tilde(const Pseudograph& g, const Collection& c) {
    return induced_subgraph(g, touched_nodes(g, g.mask_of(c)));
}

Pseudograph gamma(const Pseudograph& g, const Collection& c) {
    const Pseudograph gt = gamma_tilde(g, c);
    const ElementSet cm = gt.mask_of(c);
    std::vector<std::size_t> collapse;
    for (std::size_t b = 0; b < gt.bundle_count(); ++b)
        if (!gt.bundle_mask(b).intersects(cm)) collapse.push_back(b);
    return collapse.empty() ? gt : partial_underlying(gt, collapse);
}

}  // namespace tubings
