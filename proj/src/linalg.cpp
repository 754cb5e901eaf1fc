#include "tubings/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tubings {

namespace {

struct Overflow {};

// Checked 64-bit arithmetic; BigInt never overflows.
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }

inline std::int64_t abs_of(std::int64_t a) {
    if (a == INT64_MIN) throw Overflow{};
    return a < 0 ? -a : a;
}
inline BigInt abs_of(const BigInt& a) { return abs(a); }

inline std::int64_t gcd_of(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline BigInt gcd_of(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

template <typename Int>
using Column = std::vector<std::pair<std::uint32_t, Int>>;

// out = ca * x - cp * y, dropping zeros
template <typename Int>
void combine(const Column<Int>& x, const Int& ca, const Column<Int>& y, const Int& cp, Column<Int>& out) {
    out.clear();
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.emplace_back(x[i].first, mul(ca, x[i].second));
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, sub(Int(0), mul(cp, y[j].second)));
            ++j;
        } else {
            Int v = sub(mul(ca, x[i].second), mul(cp, y[j].second));
            if (v != 0) out.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
}

template <typename Int>
void normalize(Column<Int>& c) {
    if (c.empty()) return;
    Int g = abs_of(c.front().second);
    for (const auto& [r, v] : c) {
        if (g == 1) break;
        g = gcd_of(g, abs_of(v));
    }
    if (g > 1)
        for (auto& [r, v] : c) v /= g;
}

template <typename Int>
RankResult reduce(const SparseColumns& m, const std::vector<bool>& skip) {
    RankResult res;
    res.pivot_rows.assign(m.rows, false);
    std::vector<std::int64_t> pivot_of_row(m.rows, -1);
    std::vector<Column<Int>> reduced(m.columns.size());
    Column<Int> work, scratch;
    for (std::size_t j = 0; j < m.columns.size(); ++j) {
        if (!skip.empty() && skip[j]) continue;
        work.clear();
        for (const auto& [r, v] : m.columns[j]) work.emplace_back(r, Int(v));
        while (!work.empty()) {
            const auto low = work.back().first;
            const auto p = pivot_of_row[low];
            if (p < 0) break;
            const Column<Int>& piv = reduced[static_cast<std::size_t>(p)];
            const Int a = work.back().second;
            const Int b = piv.back().second;
            const Int g = gcd_of(abs_of(a), abs_of(b));
            combine(work, Int(b / g), piv, Int(a / g), scratch);
            std::swap(work, scratch);
            normalize(work);
        }
        if (!work.empty()) {
            pivot_of_row[work.back().first] = static_cast<std::int64_t>(j);
            res.pivot_rows[work.back().first] = true;
            reduced[j] = work;
            ++res.rank;
        }
    }
    return res;
}

}  // namespace

RankResult rank_over_rationals(const SparseColumns& m, const std::vector<bool>& skip) {
    try {
        return reduce<std::int64_t>(m, skip);
    } catch (const Overflow&) {
        RankResult r = reduce<BigInt>(m, skip);
        r.used_bigint = true;
        return r;
    }
}

RankResult rank_over_rationals_bigint(const SparseColumns& m, const std::vector<bool>& skip) {
    RankResult r = reduce<BigInt>(m, skip);
    r.used_bigint = true;
    return r;
}

BigInt determinant(std::vector<std::vector<BigInt>> a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

std::size_t rank_mod2(std::vector<boost::dynamic_bitset<>> rows) {
    std::size_t rank = 0;
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && !rows[p].test(c)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[rank], rows[p]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != rank && rows[i].test(c)) rows[i] ^= rows[rank];
        ++rank;
    }
    return rank;
}

bool in_row_space_mod2(const std::vector<boost::dynamic_bitset<>>& rows, const boost::dynamic_bitset<>& v) {
    std::vector<boost::dynamic_bitset<>> with(rows);
    const std::size_t r = rank_mod2(with);
    with.push_back(v);
    return rank_mod2(std::move(with)) == r;
}

}  // namespace tubings
