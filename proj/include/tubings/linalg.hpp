#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace tubings {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse integer matrix stored by columns; each column sorted by row.
struct SparseColumns {
    std::size_t rows = 0;
    std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> columns;
};

struct RankResult {
    std::size_t rank = 0;
    /// pivot_rows[r] is true if row r is the lowest entry of some reduced column.
    std::vector<bool> pivot_rows;
    /// True if 64-bit arithmetic overflowed and the reduction was redone in BigInt.
    bool used_bigint = false;
};

/// Exact rank over Q by left-to-right fraction-free column reduction.
/// Columns flagged in `skip` are treated as already reduced to zero; callers
/// must only skip columns that lie in the span of earlier columns.
RankResult rank_over_rationals(const SparseColumns& m, const std::vector<bool>& skip = {});

/// Same reduction carried out entirely in arbitrary precision.
RankResult rank_over_rationals_bigint(const SparseColumns& m, const std::vector<bool>& skip = {});

/// Determinant of a square integer matrix (Bareiss elimination).
BigInt determinant(std::vector<std::vector<BigInt>> rows);

/// Rank over the two-element field; rows are bit vectors of equal length.
std::size_t rank_mod2(std::vector<boost::dynamic_bitset<>> rows);

/// True if v lies in the span (over the two-element field) of rows.
bool in_row_space_mod2(const std::vector<boost::dynamic_bitset<>>& rows, const boost::dynamic_bitset<>& v);

}  // namespace tubings
