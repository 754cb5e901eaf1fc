#include <doctest.h>

#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "tubings/linalg.hpp"

using namespace tubings;
using Rational = boost::multiprecision::cpp_rational;

namespace {

// Dense Gaussian elimination over exact rationals.
std::size_t rank_oracle(std::vector<std::vector<Rational>> a) {
    std::size_t rank = 0;
    if (a.empty()) return 0;
    const std::size_t cols = a[0].size();
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
        std::size_t p = rank;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t i = rank + 1; i < a.size(); ++i) {
            const Rational f = a[i][c] / a[rank][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Laplace expansion along the first row.
BigInt det_oracle(const std::vector<std::vector<BigInt>>& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    BigInt d = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<BigInt>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<BigInt> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(a[i][k]);
            minor.push_back(row);
        }
        const BigInt term = a[0][j] * det_oracle(minor);
        d += (j % 2 == 0) ? term : BigInt(-term);
    }
    return d;
}

SparseColumns to_sparse(const std::vector<std::vector<std::int64_t>>& dense_rows) {
    SparseColumns m;
    m.rows = dense_rows.size();
    const std::size_t cols = dense_rows.empty() ? 0 : dense_rows[0].size();
    m.columns.resize(cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < m.rows; ++i)
            if (dense_rows[i][j] != 0) m.columns[j].emplace_back(static_cast<std::uint32_t>(i), dense_rows[i][j]);
    return m;
}

}  // namespace

TEST_CASE("rank agrees with dense rational elimination") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
        std::uniform_int_distribution<int> entry(-3, 3);
        std::bernoulli_distribution zero(0.5);
        std::vector<std::vector<std::int64_t>> a(r, std::vector<std::int64_t>(c));
        std::vector<std::vector<Rational>> q(r, std::vector<Rational>(c));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                a[i][j] = zero(rng) ? 0 : entry(rng);
                q[i][j] = a[i][j];
            }
        const RankResult res = rank_over_rationals(to_sparse(a));
        CHECK(res.rank == rank_oracle(q));
        CHECK(rank_over_rationals_bigint(to_sparse(a)).rank == res.rank);
    }
}

TEST_CASE("overflow falls back to big integers") {
    const std::int64_t big = std::int64_t{1} << 40;
    // rank 2: two independent columns with huge coprime entries
    std::vector<std::vector<std::int64_t>> a = {{big + 1, big - 1, 2 * big}, {big - 3, big + 7, 2 * big + 4}};
    std::vector<std::vector<Rational>> q(2, std::vector<Rational>(3));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) q[i][j] = a[i][j];
    const RankResult res = rank_over_rationals(to_sparse(a));
    CHECK(res.used_bigint);
    CHECK(res.rank == rank_oracle(q));
}

TEST_CASE("pivot rows mark the lowest entries") {
    const std::vector<std::vector<std::int64_t>> a = {{1, 1}, {0, 0}, {1, 1}};
    const RankResult res = rank_over_rationals(to_sparse(a));
    CHECK(res.rank == 1);
    CHECK(res.pivot_rows == std::vector<bool>{false, false, true});
}

TEST_CASE("determinant agrees with cofactor expansion") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        std::uniform_int_distribution<int> entry(-4, 4);
        std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
        for (auto& row : a)
            for (auto& x : row) x = entry(rng);
        CHECK(determinant(a) == det_oracle(a));
    }
    CHECK(determinant({}) == 1);
    CHECK(determinant({{0, 1}, {1, 0}}) == -1);
}

TEST_CASE("mod 2 rank") {
    auto row = [](const std::string& s) { return boost::dynamic_bitset<>(s); };
    CHECK(rank_mod2({row("110"), row("011"), row("101")}) == 2);
    CHECK(rank_mod2({row("100"), row("010"), row("001")}) == 3);
    CHECK(in_row_space_mod2({row("110"), row("011")}, row("101")));
    CHECK(!in_row_space_mod2({row("110"), row("011")}, row("100")));
}
