#include "tubings/tubes.hpp"

#include <algorithm>
#include <unordered_set>

#include "tubings/error.hpp"

namespace tubings {

namespace {

ElementSet node_neighbourhood(const Pseudograph& g, const ElementSet& nodes) {
    ElementSet nb;
    nodes.for_each([&](std::size_t i) { nb |= g.neighbours(i); });
    return nb - nodes;
}

// Connected node subsets of one component, grown one neighbour at a time.
std::vector<ElementSet> connected_node_sets(const Pseudograph& g, const ElementSet& component) {
    std::unordered_set<ElementSet, ElementSetHash> seen;
    std::vector<ElementSet> layer;
    component.for_each([&](std::size_t i) {
        if (!g.is_node_element(i)) return;
        ElementSet s = ElementSet::single(i);
        if (seen.insert(s).second) layer.push_back(s);
    });
    std::vector<ElementSet> out(layer);
    while (!layer.empty()) {
        std::vector<ElementSet> next;
        for (const auto& s : layer)
            node_neighbourhood(g, s).for_each([&](std::size_t v) {
                ElementSet t = s;
                t.set(v);
                if (seen.insert(t).second) next.push_back(t);
            });
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

struct TubeKey {
    std::vector<std::size_t> nodes;
    std::vector<std::size_t> labels;
};

TubeKey key_of(const Pseudograph& g, const ElementSet& s) {
    TubeKey k;
    s.for_each([&](std::size_t e) { (g.is_node_element(e) ? k.nodes : k.labels).push_back(e); });
    return k;
}

bool key_less(const TubeKey& x, const TubeKey& y) {
    if (x.nodes.size() != y.nodes.size()) return x.nodes.size() < y.nodes.size();
    if (x.nodes != y.nodes) return x.nodes < y.nodes;
    if (x.labels.size() != y.labels.size()) return x.labels.size() > y.labels.size();
    return x.labels < y.labels;
}

}  // namespace

std::vector<ElementSet> tube_sets(const Pseudograph& g) {
    std::vector<ElementSet> out;
    for (const ElementSet& comp : g.components_of(g.universe())) {
        const ElementSet comp_nodes = comp & g.node_mask();
        for (const ElementSet& s : connected_node_sets(g, comp_nodes)) {
            std::vector<std::size_t> inner;
            for (std::size_t b = 0; b < g.bundle_count(); ++b) {
                auto [x, y] = g.bundle_endpoints(b);
                if (s.test(x) && s.test(y)) inner.push_back(b);
            }
            // product of nonempty label subsets of each inner bundle
            std::vector<ElementSet> partial{s};
            for (auto b : inner) {
                std::vector<std::size_t> labels;
                g.bundle_mask(b).for_each([&](std::size_t e) { labels.push_back(e); });
                std::vector<ElementSet> grown;
                for (const auto& p : partial)
                    for (std::uint64_t m = 1; m < (std::uint64_t{1} << labels.size()); ++m) {
                        ElementSet t = p;
                        for (std::size_t j = 0; j < labels.size(); ++j)
                            if ((m >> j) & 1u) t.set(labels[j]);
                        grown.push_back(t);
                    }
                partial = std::move(grown);
            }
            for (const auto& t : partial)
                if (t != comp) out.push_back(t);
        }
    }
    std::vector<std::pair<TubeKey, ElementSet>> keyed;
    keyed.reserve(out.size());
    for (const auto& t : out) keyed.emplace_back(key_of(g, t), t);
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return key_less(x.first, y.first); });
    for (std::size_t i = 0; i < keyed.size(); ++i) out[i] = keyed[i].second;
    return out;
}

std::vector<Tube> enumerate_tubes(std::shared_ptr<const Pseudograph> g) {
    std::vector<Tube> out;
    for (const auto& s : tube_sets(*g)) out.push_back({g, s});
    return out;
}

bool is_tube(const Pseudograph& g, const ElementSet& s) {
    if (!s.subset_of(g.universe())) return false;
    const ElementSet nodes = s & g.node_mask();
    if (nodes.empty()) return false;
    for (std::size_t b = 0; b < g.bundle_count(); ++b) {
        auto [x, y] = g.bundle_endpoints(b);
        const bool inside = nodes.test(x) && nodes.test(y);
        if (inside != g.bundle_mask(b).intersects(s)) return false;
    }
    const auto comps = g.components_of(s);
    if (comps.size() != 1) return false;
    for (const auto& c : g.components_of(g.universe()))
        if (nodes.subset_of(c)) return s != c;
    return false;
}

ElementSet label_L(const Pseudograph& g, const ElementSet& tube) {
    ElementSet l = tube;
    for (std::size_t b = 0; b < g.bundle_count(); ++b)
        if (!g.bundle_mask(b).intersects(tube)) l |= g.bundle_mask(b);
    return l;
}

Collection label_L(const Tube& t) { return t.host->collection_of(label_L(*t.host, t.repr)); }

bool compatible(const Pseudograph& g, const ElementSet& a, const ElementSet& b) {
    if (a.subset_of(b) || b.subset_of(a)) return true;
    return g.separated(a, b);
}

namespace {

void require_same_host(const Tube& a, const Tube& b) {
    if (a.host != b.host && !(*a.host == *b.host))
        throw Error(ErrorKind::HostMismatch, "tubes " + a.name() + " and " + b.name() + " have different hosts");
}

}  // namespace

bool compatible(const Tube& a, const Tube& b) {
    require_same_host(a, b);
    return compatible(*a.host, a.repr, b.repr);
}

bool is_tubing(const std::vector<Tube>& ts) {
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j)
            if (ts[i].repr == ts[j].repr || !compatible(ts[i], ts[j])) return false;
    return true;
}

TubingComplex::TubingComplex(Pseudograph g) : host_(std::make_shared<const Pseudograph>(std::move(g))) { build(); }

TubingComplex::TubingComplex(std::shared_ptr<const Pseudograph> g) : host_(std::move(g)) { build(); }

void TubingComplex::build() {
    tubes_ = tube_sets(*host_);
    const std::size_t n = tubes_.size();
    std::vector<std::string> names;
    names.reserve(n);
    for (const auto& t : tubes_) names.push_back(host_->name_of(t));
    std::vector<VertexSet> adj(n, VertexSet(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (compatible(*host_, tubes_[i], tubes_[j])) {
                adj[i].set(j);
                adj[j].set(i);
            }
    complex_ = SimplicialComplex::flag(std::move(names), std::move(adj));
}

std::optional<std::size_t> TubingComplex::index_of(const ElementSet& s) const {
    auto it = std::find(tubes_.begin(), tubes_.end(), s);
    if (it == tubes_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - tubes_.begin());
}

std::size_t associahedron_dimension(const Pseudograph& g) {
    return g.universe_size() - g.components_of(g.universe()).size() - g.bundle_count();
}

}  // namespace tubings
