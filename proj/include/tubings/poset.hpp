#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tubings/element_set.hpp"
#include "tubings/parity.hpp"
#include "tubings/simplicial.hpp"
#include "tubings/tubes.hpp"

namespace tubings {

/// Finite poset stored as its strict order relation.
class FinitePoset {
public:
    FinitePoset() = default;
    /// less[i].test(j) means element i < element j. Must be a strict partial order.
    FinitePoset(std::vector<std::string> names, std::vector<VertexSet> less);
    /// Subsets ordered by proper inclusion.
    static FinitePoset from_sets(std::vector<std::string> names, const std::vector<ElementSet>& sets);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    bool less(std::size_t i, std::size_t j) const { return less_[i].test(j); }
    /// Elements sorted so that every element comes after everything below it.
    std::vector<std::size_t> linear_extension() const;

private:
    std::vector<std::string> names_;
    std::vector<VertexSet> less_;
};

/// Which element besides ∅ is left out of S^odd / S^even.
enum class ExcludeRule {
    Collection,  // the element whose set representation equals C
    Gamma,       // the element whose set representation equals Γ_G(C) as a subgraph of G
};

struct ParityPoset {
    FinitePoset poset;
    std::vector<ElementSet> elements;  // over the tubing complex's host
};

/// Unions of pairwise separated tubes of the given parity, minus ∅ and the
/// excluded element. Elements are sorted like tubes (size, then ids).
/// Throws Error(FaceBudgetExceeded) past `budget` elements.
ParityPoset s_parity_poset(const TubingComplex& k, const ElementSet& c, Parity p,
                           ExcludeRule rule = ExcludeRule::Collection, std::size_t budget = kDefaultFaceBudget);

/// Chains as faces.
SimplicialComplex order_complex(const FinitePoset& p);

/// μ(0̂, 1̂) after adjoining a bottom and a top.
std::int64_t mobius_euler(const FinitePoset& p);

}  // namespace tubings
