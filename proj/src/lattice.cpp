#include "tubings/lattice.hpp"

#include <algorithm>

#include "tubings/error.hpp"
#include "tubings/linalg.hpp"
#include "tubings/poincare.hpp"

namespace tubings {

namespace {

void require_connected(const Pseudograph& g) {
    if (g.components_of(g.universe()).size() != 1)
        throw Error(ErrorKind::Disconnected, "lattice data needs a connected graph");
}

std::vector<std::size_t> elements_of(const ElementSet& s) {
    std::vector<std::size_t> v;
    s.for_each([&](std::size_t e) { v.push_back(e); });
    return v;
}

// The designated element each element of R_G is paired with.
std::vector<std::size_t> partners(const Pseudograph& g, const Designation& d) {
    std::vector<std::size_t> p(g.universe_size(), 0);
    const auto comps = g.components_of(g.universe());
    for (std::size_t i = 0; i < comps.size(); ++i)
        (comps[i] & g.node_mask()).for_each([&](std::size_t v) { p[v] = d.last_node[i]; });
    for (std::size_t b = 0; b < g.bundle_count(); ++b)
        g.bundle_mask(b).for_each([&](std::size_t e) { p[e] = d.last_edge[b]; });
    return p;
}

std::vector<boost::dynamic_bitset<>> lambda_rows(const TubingComplex& k, const Designation& d) {
    const Pseudograph& g = k.graph();
    const BitMatrix lp = lambda_prime(k);
    const auto partner = partners(g, d);
    std::vector<boost::dynamic_bitset<>> rows;
    for (auto r : elements_of(r_set(g, d))) rows.push_back(lp.rows[r] ^ lp.rows[partner[r]]);
    return rows;
}

}  // namespace

IntMatrix matrix_A(const Pseudograph& g, const Designation& d) {
    require_connected(g);
    const auto partner = partners(g, d);
    IntMatrix a;
    const auto rows = elements_of(r_set(g, d));
    for (std::size_t e = 0; e < g.universe_size(); ++e) a.col_labels.push_back(g.element_name(e));
    for (auto r : rows) {
        a.row_labels.push_back(g.element_name(r));
        std::vector<std::int64_t> row(g.universe_size(), 0);
        row[r] = -1;
        row[partner[r]] = 1;
        a.rows.push_back(std::move(row));
    }
    return a;
}

IntMatrix matrix_A(const Pseudograph& g) { return matrix_A(g, Designation::canonical(g)); }

std::vector<std::int64_t> facet_normal(const IntMatrix& a, const Pseudograph& g, const ElementSet& tube) {
    std::vector<std::int64_t> v(a.rows.size(), 0);
    tube.for_each([&](std::size_t beta) {
        if (beta >= g.universe_size()) return;
        for (std::size_t i = 0; i < a.rows.size(); ++i) v[i] += a.rows[i][beta];
    });
    return v;
}

BitMatrix lambda_prime(const TubingComplex& k) {
    const Pseudograph& g = k.graph();
    BitMatrix m;
    for (std::size_t e = 0; e < g.universe_size(); ++e) m.row_labels.push_back(g.element_name(e));
    for (std::size_t t = 0; t < k.size(); ++t) m.col_labels.push_back(k.tube_name(t));
    m.rows.assign(g.universe_size(), boost::dynamic_bitset<>(k.size()));
    for (std::size_t t = 0; t < k.size(); ++t) k.tubes()[t].for_each([&](std::size_t e) { m.rows[e].set(t); });
    return m;
}

BitMatrix lambda_matrix(const TubingComplex& k, const Designation& d) {
    const Pseudograph& g = k.graph();
    require_connected(g);
    BitMatrix m;
    for (auto r : elements_of(r_set(g, d))) m.row_labels.push_back(g.element_name(r));
    for (std::size_t t = 0; t < k.size(); ++t) m.col_labels.push_back(k.tube_name(t));
    m.rows = lambda_rows(k, d);
    return m;
}

DelzantReport delzant_check(const TubingComplex& k, const Designation& d, std::size_t face_budget) {
    const Pseudograph& g = k.graph();
    DelzantReport rep;
    const IntMatrix a = matrix_A(g, d);
    rep.dimension = a.rows.size();

    std::vector<std::vector<std::int64_t>> normals;
    for (const auto& t : k.tubes()) normals.push_back(facet_normal(a, g, t));

    const BitMatrix lam = lambda_matrix(k, d);
    rep.lambda_rank = rank_mod2(lam.rows);
    rep.lambda_matches_normals = true;
    for (std::size_t i = 0; i < lam.rows.size(); ++i)
        for (std::size_t t = 0; t < k.size(); ++t)
            if (lam.rows[i].test(t) != (normals[t][i] % 2 != 0)) rep.lambda_matches_normals = false;

    const auto tubings = k.maximal_tubings(face_budget);
    rep.min_tubing_size = tubings.empty() ? 0 : tubings.front().size();
    bool ok = rep.lambda_matches_normals && rep.lambda_rank == rep.dimension;
    if (!rep.lambda_matches_normals) rep.violation = "lambda differs from the normals mod 2";
    else if (rep.lambda_rank != rep.dimension) rep.violation = "lambda has deficient rank";
    for (const auto& t : tubings) {
        ++rep.tubings_checked;
        rep.min_tubing_size = std::min(rep.min_tubing_size, t.size());
        rep.max_tubing_size = std::max(rep.max_tubing_size, t.size());
        auto name = [&] {
            std::string s = "{";
            for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + k.tube_name(t[i]);
            return s + "}";
        };
        if (t.size() != rep.dimension) {
            if (ok) rep.violation = "maximal tubing " + name() + " has " + std::to_string(t.size()) + " tubes";
            ok = false;
            continue;
        }
        std::vector<std::vector<BigInt>> m(rep.dimension, std::vector<BigInt>(rep.dimension));
        for (std::size_t col = 0; col < t.size(); ++col)
            for (std::size_t row = 0; row < rep.dimension; ++row) m[row][col] = normals[t[col]][row];
        const BigInt det = determinant(std::move(m));
        if (det != 1 && det != -1) {
            if (ok) rep.violation = "maximal tubing " + name() + " has determinant " + det.str();
            ok = false;
        }
    }
    rep.pass = ok;
    return rep;
}

DelzantReport delzant_check(const TubingComplex& k, std::size_t face_budget) {
    return delzant_check(k, Designation::canonical(k.graph()), face_budget);
}

IntPolynomial poincare_lambda(const TubingComplex& k, const Designation& d, std::size_t face_budget) {
    const auto rows = lambda_rows(k, d);
    if (rows.size() > 40) throw Error(ErrorKind::GraphTooLarge, "row space too large");
    IntPolynomial total;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << rows.size()); ++m) {
        boost::dynamic_bitset<> omega(k.size());
        for (std::size_t j = 0; j < rows.size(); ++j)
            if ((m >> j) & 1u) omega ^= rows[j];
        std::vector<std::size_t> support;
        for (auto t = omega.find_first(); t != boost::dynamic_bitset<>::npos; t = omega.find_next(t))
            support.push_back(t);
        total += shifted_poincare(betti_reduced(k.induced(support), face_budget));
    }
    return total;
}

}  // namespace tubings
