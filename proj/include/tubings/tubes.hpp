#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tubings/element_set.hpp"
#include "tubings/pseudograph.hpp"
#include "tubings/simplicial.hpp"

namespace tubings {

/// A tube in set representation over its host's element indexing.
struct Tube {
    std::shared_ptr<const Pseudograph> host;
    ElementSet repr;

    std::string name() const { return host->name_of(repr); }
    ElementSet nodes() const { return repr & host->node_mask(); }
};

/// All tubes of g as element sets: node count, then node ids, then more
/// bundle edges first, then labels.
std::vector<ElementSet> tube_sets(const Pseudograph& g);
std::vector<Tube> enumerate_tubes(std::shared_ptr<const Pseudograph> g);

/// True if s is a tube of g.
bool is_tube(const Pseudograph& g, const ElementSet& s);

/// L_I: the tube plus every bundle it does not meet.
ElementSet label_L(const Pseudograph& g, const ElementSet& tube);
Collection label_L(const Tube& t);

bool compatible(const Pseudograph& g, const ElementSet& a, const ElementSet& b);
/// Throws Error(HostMismatch) if the tubes live in different graphs.
bool compatible(const Tube& a, const Tube& b);
bool is_tubing(const std::vector<Tube>& ts);

/// The flag complex of tube compatibility, dual to the boundary of the
/// pseudograph associahedron. Vertex i is tubes()[i].
class TubingComplex {
public:
    explicit TubingComplex(Pseudograph g);
    explicit TubingComplex(std::shared_ptr<const Pseudograph> g);

    const Pseudograph& graph() const { return *host_; }
    const std::shared_ptr<const Pseudograph>& host() const { return host_; }
    const std::vector<ElementSet>& tubes() const { return tubes_; }
    std::size_t size() const { return tubes_.size(); }
    Tube tube(std::size_t i) const { return {host_, tubes_[i]}; }
    std::string tube_name(std::size_t i) const { return host_->name_of(tubes_[i]); }
    std::optional<std::size_t> index_of(const ElementSet& s) const;

    const SimplicialComplex& complex() const { return complex_; }
    /// Induced subcomplex on the listed tube indices, vertices named by tube.
    SimplicialComplex induced(const std::vector<std::size_t>& keep) const { return complex_.induced(keep); }
    /// Maximal tubings as sorted tube index lists.
    std::vector<std::vector<std::size_t>> maximal_tubings(std::size_t budget = kDefaultFaceBudget) const {
        return complex_.facets(budget);
    }

private:
    void build();

    std::shared_ptr<const Pseudograph> host_;
    std::vector<ElementSet> tubes_;
    SimplicialComplex complex_;
};

/// n + Σ b_i summed over components: the dimension of the associahedron.
std::size_t associahedron_dimension(const Pseudograph& g);

}  // namespace tubings
