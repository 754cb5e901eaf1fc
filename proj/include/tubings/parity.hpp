#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tubings/element_set.hpp"
#include "tubings/pseudograph.hpp"
#include "tubings/simplicial.hpp"
#include "tubings/tubes.hpp"

namespace tubings {

/// The designated "last" node of each component and "last" edge of each
/// bundle; R_G is everything else.
struct Designation {
    std::vector<std::size_t> last_node;  // element index, one per component
    std::vector<std::size_t> last_edge;  // element index, one per bundle

    /// Largest node id per component, lexicographically last label per bundle.
    static Designation canonical(const Pseudograph& g);
    /// Uniformly random choice of the designated elements.
    static Designation random(const Pseudograph& g, std::mt19937_64& rng);
};

ElementSet r_set(const Pseudograph& g, const Designation& d);
ElementSet r_set(const Pseudograph& g);

/// Node parity even on every component and every bundle met evenly.
bool is_even(const Pseudograph& g, const ElementSet& c);
/// The even collection whose R_G part is r (r must lie in R_G).
ElementSet even_completion(const Pseudograph& g, const Designation& d, const ElementSet& r);
/// Every even collection, ordered by the binary value of its R_G part.
/// Throws Error(GraphTooLarge) past 2^40 collections.
std::vector<ElementSet> even_collections(const Pseudograph& g, const Designation& d);
std::vector<ElementSet> even_collections(const Pseudograph& g);

enum class Parity { Odd, Even };
Parity parity(const ElementSet& subgraph, const ElementSet& c);
/// Throws UnknownMember if c is not over t's host.
Parity parity(const Tube& t, const Collection& c);

/// Tube indices of the given parity.
std::vector<std::size_t> parity_vertices(const TubingComplex& k, const ElementSet& c, Parity p);
/// Odd tubes whose nodes lie in V_C.
std::vector<std::size_t> k_prime_vertices(const TubingComplex& k, const ElementSet& c);
/// K′ vertices that contain every C-disjoint bundle of Γ̃_G(C) whose
/// endpoints they contain.
std::vector<std::size_t> k_double_prime_vertices(const TubingComplex& k, const ElementSet& c);

SimplicialComplex k_odd(const TubingComplex& k, const ElementSet& c);
SimplicialComplex k_even(const TubingComplex& k, const ElementSet& c);
SimplicialComplex k_prime(const TubingComplex& k, const ElementSet& c);
SimplicialComplex k_double_prime(const TubingComplex& k, const ElementSet& c);

/// Connected components of Γ̃_G(C) as element sets of g (nodes plus all
/// bundle labels inside).
std::vector<ElementSet> gamma_tilde_components(const Pseudograph& g, const ElementSet& c);
/// Throws Error(NotEven) unless c is even.
bool is_even_star(const Pseudograph& g, const ElementSet& c);
/// Componentwise conditions (a1)-(a3).
bool is_admissible(const Pseudograph& h, const ElementSet& c);
bool is_admissible(const Pseudograph& h, const Collection& c);
std::vector<ElementSet> admissible_collections(const Pseudograph& h);

struct IsomorphismReport {
    bool isomorphic = false;
    std::string detail;
};

/// For an even* collection, compares K″_{C,G} with K^odd of Γ_G(C) through
/// the map that expands each collapsed edge back into its full bundle.
IsomorphismReport check_tilde_isomorphism(const TubingComplex& k, const ElementSet& c);

}  // namespace tubings
