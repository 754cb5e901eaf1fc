#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tubings/polynomial.hpp"
#include "tubings/pseudograph.hpp"
#include "tubings/simplicial.hpp"

namespace tubings {

/// Σ_{i≥0} β̃_i t^i.
IntPolynomial reduced_poincare(const BettiVector& b);
/// Σ_{i≥-1} β̃_i t^{i+1}.
IntPolynomial shifted_poincare(const BettiVector& b);

struct RouteOptions {
    std::size_t face_budget = kDefaultFaceBudget;
    /// Worker threads; 0 picks the hardware concurrency.
    unsigned threads = 0;
    /// When set, the designated last node and edges are drawn at random from
    /// this seed instead of the canonical choice.
    std::optional<std::uint64_t> designation_seed;
};

/// Sum over admissible collections C of h of the reduced Poincaré polynomial of K^odd.
IntPolynomial a_polynomial(const Pseudograph& h, const RouteOptions& opt = {});
/// 1 + t Σ_{H⋖G} a_H(t).
IntPolynomial poincare_reduced(const Pseudograph& g, const RouteOptions& opt = {});
/// Σ over even C of the shifted reduced Poincaré polynomial of K^odd_{C,G}.
IntPolynomial poincare_brute(const Pseudograph& g, const RouteOptions& opt = {});

struct CrossCheckReport {
    bool pass = true;
    IntPolynomial reduced;
    IntPolynomial brute;
    std::size_t collections = 0;
    std::size_t even_star = 0;
    std::size_t lessdot = 0;
    std::size_t admissible_pairs = 0;
    std::vector<std::string> failures;
};

/// Both routes plus the per-collection identities linking them: equal Betti
/// numbers along K^odd, K′, K″ and K^odd of Γ_G(C); acyclic K″ off even*;
/// the expansion isomorphism on even*; even* iff admissible to Γ_G(C); and
/// Γ_G(C) = H for every C admissible to H ⋖ G.
CrossCheckReport cross_check(const Pseudograph& g, const RouteOptions& opt = {});

}  // namespace tubings
