#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "tubings/parity.hpp"
#include "tubings/polynomial.hpp"
#include "tubings/tubes.hpp"

namespace tubings {

struct IntMatrix {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<std::vector<std::int64_t>> rows;
};

struct BitMatrix {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<boost::dynamic_bitset<>> rows;
};

/// Rows R_G, columns C_G. Throws Error(Disconnected).
IntMatrix matrix_A(const Pseudograph& g, const Designation& d);
IntMatrix matrix_A(const Pseudograph& g);

/// Σ_{β∈I} A_β, indexed by R_G.
std::vector<std::int64_t> facet_normal(const IntMatrix& a, const Pseudograph& g, const ElementSet& tube);

/// Membership matrix Λ′: rows C_G, columns tubes.
BitMatrix lambda_prime(const TubingComplex& k);
/// λ_G from Λ′ by adding each designated row to its partners and deleting it.
/// Rows R_G, columns tubes. Throws Error(Disconnected).
BitMatrix lambda_matrix(const TubingComplex& k, const Designation& d);

struct DelzantReport {
    bool pass = false;
    std::size_t dimension = 0;        // |R_G| = n + Σ b_i
    std::size_t tubings_checked = 0;
    std::size_t min_tubing_size = 0;
    std::size_t max_tubing_size = 0;
    std::size_t lambda_rank = 0;      // over the two-element field
    bool lambda_matches_normals = false;
    std::string violation;            // first failure, empty if none
};

/// Checks that the facet normals of every maximal tubing form a lattice basis.
DelzantReport delzant_check(const TubingComplex& k, const Designation& d, std::size_t face_budget = kDefaultFaceBudget);
DelzantReport delzant_check(const TubingComplex& k, std::size_t face_budget = kDefaultFaceBudget);

/// Poincaré polynomial from Row(λ_G) directly: for every R ⊆ R_G, the reduced
/// homology of the full subcomplex on the support of Σ_{r∈R} λ_r. Works on
/// disconnected graphs by designating one node per component.
IntPolynomial poincare_lambda(const TubingComplex& k, const Designation& d, std::size_t face_budget = kDefaultFaceBudget);

}  // namespace tubings
