#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace tubings {

using VertexSet = boost::dynamic_bitset<std::uint64_t>;

inline constexpr std::size_t kDefaultFaceBudget = 5'000'000;
inline constexpr std::size_t kDefaultShellBudget = 1'000'000;

/// Faces of one complex grouped by dimension. by_dim[k] holds the k-faces as a
/// flat array with stride k + 1, each face sorted, the list lexicographically
/// sorted. The empty face is implicit.
struct FaceTable {
    std::vector<std::vector<std::uint32_t>> by_dim;

    std::size_t dimension_count() const { return by_dim.size(); }
    std::size_t count(std::size_t k) const { return k < by_dim.size() ? by_dim[k].size() / (k + 1) : 0; }
    std::size_t total() const;
    /// Index of a k-face in by_dim[k], or npos.
    std::size_t find(std::size_t k, const std::uint32_t* face) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Abstract simplicial complex on named vertices, in one of two forms:
/// flag (faces are the cliques of a symmetric adjacency relation) or
/// explicit (downward closure of a list of facets). The default-constructed
/// complex is the empty complex {∅}.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    static SimplicialComplex flag(std::vector<std::string> names, std::vector<VertexSet> adjacency);
    static SimplicialComplex from_facets(std::vector<std::string> names, std::vector<std::vector<std::size_t>> facets);

    std::size_t vertex_count() const { return names_.size(); }
    const std::vector<std::string>& vertex_names() const { return names_; }
    bool is_flag() const { return flag_; }
    bool empty() const { return names_.empty(); }
    /// Symmetric adjacency of a flag complex; for explicit complexes, the 1-skeleton.
    std::vector<VertexSet> one_skeleton() const;

    /// Induced subcomplex on the given vertices (listed in the order to keep).
    SimplicialComplex induced(const std::vector<std::size_t>& keep) const;

    /// Throws Error(FaceBudgetExceeded) once more than `budget` nonempty faces appear.
    FaceTable faces(std::size_t budget = kDefaultFaceBudget) const;
    /// Maximal faces, each sorted, in lexicographic order. {∅} gives one empty facet.
    std::vector<std::vector<std::size_t>> facets(std::size_t budget = kDefaultFaceBudget) const;

private:
    std::vector<std::string> names_;
    bool flag_ = true;
    std::vector<VertexSet> adjacency_;
    std::vector<std::vector<std::size_t>> facets_;
};

/// Reduced Betti numbers over Q, starting at index -1.
struct BettiVector {
    std::vector<std::int64_t> values;

    /// β̃_i for i >= -1; zero past the stored range.
    std::int64_t at(int i) const;
    bool all_zero() const { return values.empty(); }
    void trim();
    friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

BettiVector betti_reduced(const SimplicialComplex& k, std::size_t face_budget = kDefaultFaceBudget);
/// Σ_{i≥0} (-1)^i f_i - 1, from face counts alone.
std::int64_t euler_reduced(const SimplicialComplex& k, std::size_t face_budget = kDefaultFaceBudget);
/// Σ_{i≥-1} (-1)^i β̃_i.
std::int64_t alternating_sum(const BettiVector& b);

enum class ShellStatus { Yes, No, Unknown };

struct ShellResult {
    ShellStatus status = ShellStatus::Unknown;
    /// Witnessing facet order (vertex indices) when status is Yes.
    std::vector<std::vector<std::size_t>> order;
    std::size_t expansions = 0;
};

/// Searches for a (not necessarily pure) shelling. Facet orders are restricted
/// to non-increasing dimension, which loses no shellings, and failed prefix
/// sets are memoized. Unknown means the expansion budget ran out.
ShellResult shellable(const SimplicialComplex& k, std::size_t budget = kDefaultShellBudget);

/// True if `order` satisfies the shelling condition, checked face by face.
bool is_shelling_order(const std::vector<std::vector<std::size_t>>& order);

/// Join on disjoint vertex names; throws Error(VertexClash).
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace tubings
