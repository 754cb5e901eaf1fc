#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tubings/element_set.hpp"

namespace tubings {

struct Edge {
    int a = 0;
    int b = 0;
    std::optional<std::string> label;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A maximal group of >= 2 parallel edges. Endpoints are node ids with a < b,
/// labels are sorted lexicographically.
struct Bundle {
    int a = 0;
    int b = 0;
    std::vector<std::string> labels;

    friend bool operator==(const Bundle&, const Bundle&) = default;
};

/// Host-independent set of node ids and bundle-edge labels (a subset of C_G
/// once resolved against a graph with Pseudograph::mask_of).
struct Collection {
    std::vector<int> nodes;
    std::vector<std::string> labels;

    Collection() = default;
    Collection(std::vector<int> node_ids, std::vector<std::string> edge_labels);

    bool empty() const { return nodes.empty() && labels.empty(); }
    std::size_t size() const { return nodes.size() + labels.size(); }

    friend bool operator==(const Collection&, const Collection&) = default;
};

/// Finite loopless pseudograph with labelled multiple edges.
///
/// Immutable after construction. Elements of C_G are indexed with nodes first
/// (ascending id) followed by every bundle-edge label in lexicographic order;
/// subgraphs and collections over one host are ElementSets in that indexing.
class Pseudograph {
public:
    Pseudograph() = default;

    /// Canonicalizes and validates. Throws Error on loops, duplicate or
    /// malformed labels, unlabelled bundle edges, unknown endpoints.
    static Pseudograph validate(std::vector<int> nodes, std::vector<Edge> edges);

    const std::vector<int>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Bundle>& bundles() const { return bundles_; }

    bool empty() const { return nodes_.empty(); }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t bundle_count() const { return bundles_.size(); }
    std::size_t universe_size() const { return nodes_.size() + bundle_labels_.size(); }

    std::optional<std::size_t> node_index(int id) const;
    int node_id(std::size_t index) const { return nodes_[index]; }
    /// Element index of a bundle-edge label, if the label names an edge of a bundle.
    std::optional<std::size_t> label_element(std::string_view label) const;
    /// True if any edge (bundled or not) carries the label.
    bool has_edge_label(std::string_view label) const;

    bool is_node_element(std::size_t e) const { return e < nodes_.size(); }
    const std::string& element_label(std::size_t e) const { return bundle_labels_[e - nodes_.size()]; }
    std::string element_name(std::size_t e) const;
    /// Bundle index containing the label element e.
    std::size_t bundle_of(std::size_t e) const { return label_bundle_[e - nodes_.size()]; }

    ElementSet node_mask() const { return ElementSet::prefix(nodes_.size()); }
    ElementSet universe() const { return ElementSet::prefix(universe_size()); }
    const ElementSet& bundle_mask(std::size_t b) const { return bundle_masks_[b]; }
    /// Node indices of a bundle's endpoints.
    std::pair<std::size_t, std::size_t> bundle_endpoints(std::size_t b) const { return bundle_ends_[b]; }
    /// Node bits adjacent to node i through any edge.
    const ElementSet& neighbours(std::size_t i) const { return adjacency_[i]; }
    /// Bundle index joining two nodes, if their edges form a bundle.
    std::optional<std::size_t> bundle_between(std::size_t i, std::size_t j) const;

    /// Resolves a collection; throws UnknownMember or NotInAnyBundle.
    ElementSet mask_of(const Collection& c) const;
    Collection collection_of(const ElementSet& s) const;
    std::vector<int> node_ids_of(const ElementSet& s) const;

    /// Splits the subgraph described by s (nodes of s, all non-bundle edges
    /// among them, bundle edges whose labels are in s) into connected pieces.
    std::vector<ElementSet> components_of(const ElementSet& s) const;
    bool is_connected_subgraph(const ElementSet& s) const;
    /// True if no edge of this graph joins a node of a to a node of b.
    bool separated(const ElementSet& a, const ElementSet& b) const;

    /// Set representation: nodes ascending, then labels. Concatenated
    /// ("12ab") when every node id is a single digit and every bundle label a
    /// single character, otherwise comma separated ("1,2,a,b").
    std::string name_of(const ElementSet& s) const;
    bool compact_names() const { return compact_names_; }

    /// Equality on (node set, simple adjacency, labelled bundle edges).
    friend bool operator==(const Pseudograph& x, const Pseudograph& y);

private:
    std::vector<int> nodes_;
    std::vector<Edge> edges_;
    std::vector<Bundle> bundles_;
    std::vector<std::string> bundle_labels_;
    std::vector<std::size_t> label_bundle_;
    std::vector<ElementSet> bundle_masks_;
    std::vector<std::pair<std::size_t, std::size_t>> bundle_ends_;
    std::vector<ElementSet> adjacency_;
    std::vector<ElementSet> simple_adjacency_;
    bool compact_names_ = true;
};

std::string format_set(const std::vector<int>& nodes, const std::vector<std::string>& labels, bool compact);

Pseudograph underlying_simple_graph(const Pseudograph& g);
std::vector<Pseudograph> connected_components(const Pseudograph& g);
Pseudograph induced_subgraph(const Pseudograph& g, const std::vector<int>& node_ids);
Pseudograph induced_subgraph(const Pseudograph& g, const ElementSet& node_bits);
/// Replaces the given bundles (by index into g.bundles()) with unlabelled simple edges.
Pseudograph partial_underlying(const Pseudograph& g, const std::vector<std::size_t>& bundle_indices);
/// Same, naming each bundle by any of its labels. Throws UnknownBundle.
Pseudograph partial_underlying(const Pseudograph& g, const std::vector<std::string>& bundle_labels);
/// All nonempty H ⋖ G: partial underlying pseudographs of induced subgraphs.
std::vector<Pseudograph> enumerate_lessdot(const Pseudograph& g);

/// Node bits of V_C: nodes in c plus endpoints of bundle edges in c.
ElementSet touched_nodes(const Pseudograph& g, const ElementSet& c);
Pseudograph gamma_tilde(const Pseudograph& g, const Collection& c);
Pseudograph gamma(const Pseudograph& g, const Collection& c);

}  // namespace tubings
