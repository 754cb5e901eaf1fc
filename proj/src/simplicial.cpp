#include "tubings/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <unordered_set>

#include "tubings/error.hpp"
#include "tubings/linalg.hpp"

namespace tubings {

std::size_t FaceTable::total() const {
    std::size_t t = 0;
    for (std::size_t k = 0; k < by_dim.size(); ++k) t += count(k);
    return t;
}

std::size_t FaceTable::find(std::size_t k, const std::uint32_t* face) const {
    if (k >= by_dim.size()) return npos;
    const std::size_t stride = k + 1;
    const auto& flat = by_dim[k];
    std::size_t lo = 0, hi = flat.size() / stride;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        const std::uint32_t* m = flat.data() + mid * stride;
        if (std::lexicographical_compare(m, m + stride, face, face + stride)) lo = mid + 1;
        else hi = mid;
    }
    if (lo < flat.size() / stride && std::equal(face, face + stride, flat.data() + lo * stride)) return lo;
    return npos;
}

SimplicialComplex SimplicialComplex::flag(std::vector<std::string> names, std::vector<VertexSet> adjacency) {
    SimplicialComplex k;
    k.flag_ = true;
    k.names_ = std::move(names);
    k.adjacency_ = std::move(adjacency);
    for (std::size_t v = 0; v < k.adjacency_.size(); ++v) {
        k.adjacency_[v].resize(k.names_.size());
        k.adjacency_[v].reset(v);
    }
    return k;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> names,
                                                 std::vector<std::vector<std::size_t>> facets) {
    SimplicialComplex k;
    k.flag_ = false;
    k.names_ = std::move(names);
    std::vector<bool> covered(k.names_.size(), false);
    for (auto& f : facets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        for (auto v : f) covered.at(v) = true;
    }
    for (std::size_t v = 0; v < covered.size(); ++v)
        if (!covered[v]) facets.push_back({v});
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    // keep maximal ones only
    std::vector<std::vector<std::size_t>> maximal;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < facets.size() && !dominated; ++j)
            if (i != j && facets[j].size() > facets[i].size() &&
                std::includes(facets[j].begin(), facets[j].end(), facets[i].begin(), facets[i].end()))
                dominated = true;
        if (!dominated && !facets[i].empty()) maximal.push_back(facets[i]);
    }
    k.facets_ = std::move(maximal);
    return k;
}

std::vector<VertexSet> SimplicialComplex::one_skeleton() const {
    if (flag_) return adjacency_;
    std::vector<VertexSet> adj(names_.size(), VertexSet(names_.size()));
    for (const auto& f : facets_)
        for (auto u : f)
            for (auto v : f)
                if (u != v) adj[u].set(v);
    return adj;
}

SimplicialComplex SimplicialComplex::induced(const std::vector<std::size_t>& keep) const {
    std::vector<std::string> names;
    std::vector<std::size_t> new_index(names_.size(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < keep.size(); ++i) {
        new_index.at(keep[i]) = i;
        names.push_back(names_[keep[i]]);
    }
    if (flag_) {
        std::vector<VertexSet> adj(keep.size(), VertexSet(keep.size()));
        for (std::size_t i = 0; i < keep.size(); ++i)
            for (std::size_t j = 0; j < keep.size(); ++j)
                if (adjacency_[keep[i]].test(keep[j])) adj[i].set(j);
        return flag(std::move(names), std::move(adj));
    }
    std::vector<std::vector<std::size_t>> fs;
    for (const auto& f : facets_) {
        std::vector<std::size_t> g;
        for (auto v : f)
            if (new_index[v] != static_cast<std::size_t>(-1)) g.push_back(new_index[v]);
        if (!g.empty()) fs.push_back(std::move(g));
    }
    return from_facets(std::move(names), std::move(fs));
}

namespace {

void budget_exceeded(std::size_t budget) {
    throw Error(ErrorKind::FaceBudgetExceeded, "more than " + std::to_string(budget) + " faces");
}

// Depth-first clique extension in increasing vertex order; emits faces in
// lexicographic order within each dimension.
class CliqueWalker {
public:
    CliqueWalker(const std::vector<VertexSet>& adjacency, std::size_t budget)
        : budget_(budget) {
        const std::size_t n = adjacency.size();
        up_.reserve(n);
        for (std::size_t v = 0; v < n; ++v) {
            VertexSet u = adjacency[v];
            for (std::size_t w = 0; w <= v && w < n; ++w) u.reset(w);
            up_.push_back(std::move(u));
        }
        scratch_.assign(n + 1, VertexSet(n));
    }

    FaceTable run() {
        const std::size_t n = up_.size();
        for (std::size_t v = 0; v < n; ++v) {
            clique_.assign(1, static_cast<std::uint32_t>(v));
            emit();
            extend(up_[v], 1);
        }
        return std::move(table_);
    }

private:
    void emit() {
        if (++count_ > budget_) budget_exceeded(budget_);
        const std::size_t k = clique_.size() - 1;
        if (table_.by_dim.size() <= k) table_.by_dim.resize(k + 1);
        table_.by_dim[k].insert(table_.by_dim[k].end(), clique_.begin(), clique_.end());
    }

    void extend(const VertexSet& cand, std::size_t depth) {
        if (cand.none()) return;
        for (auto v = cand.find_first(); v != VertexSet::npos; v = cand.find_next(v)) {
            clique_.push_back(static_cast<std::uint32_t>(v));
            emit();
            scratch_[depth] = cand;
            scratch_[depth] &= up_[v];
            extend(scratch_[depth], depth + 1);
            clique_.pop_back();
        }
    }

    std::size_t budget_;
    std::size_t count_ = 0;
    std::vector<VertexSet> up_;
    std::vector<VertexSet> scratch_;
    std::vector<std::uint32_t> clique_;
    FaceTable table_;
};

void bron_kerbosch(const std::vector<VertexSet>& adj, std::vector<std::size_t>& r, VertexSet p, VertexSet x,
                   std::vector<std::vector<std::size_t>>& out, std::size_t budget) {
    if (p.none() && x.none()) {
        if (out.size() >= budget) budget_exceeded(budget);
        auto f = r;
        std::sort(f.begin(), f.end());
        out.push_back(std::move(f));
        return;
    }
    // pivot maximizing |P ∩ N(u)|
    std::size_t pivot = VertexSet::npos, best = 0;
    const VertexSet px = p | x;
    for (auto u = px.find_first(); u != VertexSet::npos; u = px.find_next(u)) {
        const std::size_t c = (p & adj[u]).count();
        if (pivot == VertexSet::npos || c > best) {
            pivot = u;
            best = c;
        }
    }
    const VertexSet cand = p - adj[pivot];
    for (auto v = cand.find_first(); v != VertexSet::npos; v = cand.find_next(v)) {
        r.push_back(v);
        bron_kerbosch(adj, r, p & adj[v], x & adj[v], out, budget);
        r.pop_back();
        p.reset(v);
        x.set(v);
    }
}

}  // namespace

FaceTable SimplicialComplex::faces(std::size_t budget) const {
    if (flag_) return CliqueWalker(adjacency_, budget).run();

    std::vector<std::set<std::vector<std::uint32_t>>> by_dim;
    std::size_t generated = 0;
    for (const auto& f : facets_) {
        const std::size_t m = f.size();
        if (m >= 31) budget_exceeded(budget);
        for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
            std::vector<std::uint32_t> face;
            for (std::size_t i = 0; i < m; ++i)
                if ((mask >> i) & 1u) face.push_back(static_cast<std::uint32_t>(f[i]));
            if (by_dim.size() < face.size()) by_dim.resize(face.size());
            if (by_dim[face.size() - 1].insert(std::move(face)).second && ++generated > budget)
                budget_exceeded(budget);
        }
    }
    FaceTable t;
    t.by_dim.resize(by_dim.size());
    for (std::size_t k = 0; k < by_dim.size(); ++k)
        for (const auto& face : by_dim[k]) t.by_dim[k].insert(t.by_dim[k].end(), face.begin(), face.end());
    return t;
}

std::vector<std::vector<std::size_t>> SimplicialComplex::facets(std::size_t budget) const {
    if (names_.empty()) return {{}};
    if (!flag_) return facets_;
    const std::size_t n = names_.size();
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> r;
    VertexSet p(n);
    p.set();
    bron_kerbosch(adjacency_, r, p, VertexSet(n), out, budget);
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t BettiVector::at(int i) const {
    const auto idx = static_cast<std::size_t>(i + 1);
    return (i >= -1 && idx < values.size()) ? values[idx] : 0;
}

void BettiVector::trim() {
    while (!values.empty() && values.back() == 0) values.pop_back();
}

namespace {

// Open-addressing hash from the k-faces of a table to their positions.
class FaceIndex {
public:
    FaceIndex(const FaceTable& t, std::size_t k) : flat_(t.by_dim[k].data()), stride_(k + 1) {
        const std::size_t n = t.count(k);
        std::size_t cap = 16;
        while (cap < 2 * n) cap <<= 1;
        mask_ = cap - 1;
        slots_.assign(cap, kEmpty);
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t h = hash(flat_ + i * stride_) & mask_;
            while (slots_[h] != kEmpty) h = (h + 1) & mask_;
            slots_[h] = static_cast<std::uint32_t>(i);
        }
    }

    std::size_t find(const std::uint32_t* face) const {
        for (std::size_t h = hash(face) & mask_; slots_[h] != kEmpty; h = (h + 1) & mask_)
            if (std::equal(face, face + stride_, flat_ + std::size_t{slots_[h]} * stride_)) return slots_[h];
        return FaceTable::npos;
    }

private:
    static constexpr std::uint32_t kEmpty = 0xFFFFFFFFu;

    std::size_t hash(const std::uint32_t* face) const {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (std::size_t i = 0; i < stride_; ++i) h = (h ^ face[i]) * 0x100000001b3ull;
        return static_cast<std::size_t>(h ^ (h >> 29));
    }

    const std::uint32_t* flat_;
    std::size_t stride_;
    std::size_t mask_ = 0;
    std::vector<std::uint32_t> slots_;
};

}  // namespace

BettiVector betti_reduced(const SimplicialComplex& k, std::size_t face_budget) {
    const FaceTable faces = k.faces(face_budget);
    const std::size_t top = faces.dimension_count();  // dims 0..top-1

    // rank[d] = rank of the boundary map C_d -> C_{d-1}; rank[0] is the augmentation
    std::vector<std::size_t> rank(top + 1, 0);
    if (top > 0) rank[0] = 1;
    std::vector<bool> cleared;
    for (std::size_t d = top; d-- > 1;) {
        SparseColumns m;
        m.rows = faces.count(d - 1);
        const std::size_t n = faces.count(d);
        m.columns.resize(n);
        const FaceIndex index(faces, d - 1);
        std::vector<std::uint32_t> facet(d);
        for (std::size_t j = 0; j < n; ++j) {
            if (j < cleared.size() && cleared[j]) continue;
            const std::uint32_t* s = faces.by_dim[d].data() + j * (d + 1);
            auto& col = m.columns[j];
            for (std::size_t drop = 0; drop <= d; ++drop) {
                std::size_t w = 0;
                for (std::size_t i = 0; i <= d; ++i)
                    if (i != drop) facet[w++] = s[i];
                const std::size_t row = index.find(facet.data());
                col.emplace_back(static_cast<std::uint32_t>(row), (drop % 2 == 0) ? 1 : -1);
            }
            std::sort(col.begin(), col.end());
        }
        RankResult r = rank_over_rationals(m, cleared);
        rank[d] = r.rank;
        // d-1 simplices that are lows of reduced d-columns reduce to zero next round
        cleared = std::move(r.pivot_rows);
    }

    BettiVector b;
    b.values.push_back(1 - static_cast<std::int64_t>(rank[0]));
    for (std::size_t d = 0; d < top; ++d)
        b.values.push_back(static_cast<std::int64_t>(faces.count(d)) - static_cast<std::int64_t>(rank[d]) -
                           static_cast<std::int64_t>(rank[d + 1]));
    b.trim();
    return b;
}

std::int64_t euler_reduced(const SimplicialComplex& k, std::size_t face_budget) {
    const FaceTable faces = k.faces(face_budget);
    std::int64_t chi = -1;
    for (std::size_t d = 0; d < faces.dimension_count(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(faces.count(d));
    return chi;
}

std::int64_t alternating_sum(const BettiVector& b) {
    std::int64_t s = 0;
    for (std::size_t idx = 0; idx < b.values.size(); ++idx) {
        const int i = static_cast<int>(idx) - 1;
        s += (i % 2 == 0 ? 1 : -1) * b.values[idx];
    }
    return s;
}

namespace {

struct WordsHash {
    std::size_t operator()(const std::vector<std::uint64_t>& w) const {
        std::size_t h = w.size();
        for (auto x : w) h = h * 0x9E3779B97F4A7C15ull ^ (x + (h << 6) + (h >> 2));
        return h;
    }
};

class ShellSearch {
public:
    ShellSearch(std::vector<std::vector<std::size_t>> facets, std::size_t vertices, std::size_t budget)
        : facets_(std::move(facets)), budget_(budget) {
        // non-increasing dimension
        std::stable_sort(facets_.begin(), facets_.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
        for (const auto& f : facets_) {
            VertexSet s(vertices);
            for (auto v : f) s.set(v);
            sets_.push_back(std::move(s));
        }
        placed_.assign((facets_.size() + 63) / 64, 0);
    }

    ShellResult run() {
        ShellResult res;
        if (facets_.empty()) {
            res.status = ShellStatus::Yes;
            return res;
        }
        const bool found = dfs();
        res.expansions = expansions_;
        if (found) {
            res.status = ShellStatus::Yes;
            for (auto i : order_) res.order.push_back(facets_[i]);
        } else {
            res.status = exhausted_ ? ShellStatus::Unknown : ShellStatus::No;
        }
        return res;
    }

private:
    bool is_placed(std::size_t i) const { return (placed_[i / 64] >> (i % 64)) & 1u; }
    void flip(std::size_t i) { placed_[i / 64] ^= std::uint64_t{1} << (i % 64); }

    // Björner–Wachs: the faces F shares with earlier facets form a pure
    // complex of dimension dim F - 1.
    bool attachable(std::size_t f) const {
        if (order_.empty()) return true;
        const VertexSet& F = sets_[f];
        const std::size_t want = facets_[f].size() - 1;
        std::vector<VertexSet> ridges;
        for (auto g : order_) {
            VertexSet x = F & sets_[g];
            if (x.count() == want) ridges.push_back(std::move(x));
        }
        if (ridges.empty()) return false;
        for (auto g : order_) {
            const VertexSet x = F & sets_[g];
            bool covered = false;
            for (const auto& r : ridges)
                if (x.is_subset_of(r)) {
                    covered = true;
                    break;
                }
            if (!covered) return false;
        }
        return true;
    }

    bool dfs() {
        if (order_.size() == facets_.size()) return true;
        if (failed_.count(placed_)) return false;
        // largest dimension still unplaced
        std::size_t dim_now = 0;
        for (std::size_t i = 0; i < facets_.size(); ++i)
            if (!is_placed(i)) {
                dim_now = facets_[i].size();
                break;
            }
        for (std::size_t i = 0; i < facets_.size(); ++i) {
            if (is_placed(i) || facets_[i].size() != dim_now) continue;
            if (++expansions_ > budget_) {
                exhausted_ = true;
                return false;
            }
            if (!attachable(i)) continue;
            flip(i);
            order_.push_back(i);
            if (dfs()) return true;
            order_.pop_back();
            flip(i);
            if (exhausted_) return false;
        }
        failed_.insert(placed_);
        return false;
    }

    std::vector<std::vector<std::size_t>> facets_;
    std::vector<VertexSet> sets_;
    std::size_t budget_;
    std::size_t expansions_ = 0;
    bool exhausted_ = false;
    std::vector<std::uint64_t> placed_;
    std::vector<std::size_t> order_;
    std::unordered_set<std::vector<std::uint64_t>, WordsHash> failed_;
};

}  // namespace

ShellResult shellable(const SimplicialComplex& k, std::size_t budget) {
    auto facets = k.facets();
    if (facets.size() == 1) {
        ShellResult r;
        r.status = ShellStatus::Yes;
        r.order = facets;
        return r;
    }
    return ShellSearch(std::move(facets), k.vertex_count(), budget).run();
}

bool is_shelling_order(const std::vector<std::vector<std::size_t>>& order) {
    for (std::size_t k = 1; k < order.size(); ++k) {
        const auto& fk = order[k];
        const std::size_t m = fk.size();
        if (m >= 31) return false;
        // every subset of F_k lying in an earlier facet
        std::vector<std::uint32_t> shared;
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            bool in_earlier = false;
            for (std::size_t i = 0; i < k && !in_earlier; ++i) {
                bool all = true;
                for (std::size_t b = 0; b < m && all; ++b)
                    if ((mask >> b) & 1u) all = std::binary_search(order[i].begin(), order[i].end(), fk[b]);
                in_earlier = all;
            }
            if (in_earlier) shared.push_back(mask);
        }
        // maximal shared faces must all have m - 1 vertices
        for (auto s : shared) {
            bool maximal = true;
            for (auto t : shared)
                if (t != s && (s & t) == s) {
                    maximal = false;
                    break;
                }
            if (maximal && static_cast<std::size_t>(std::popcount(s)) != m - 1) return false;
        }
    }
    return true;
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::set<std::string> names(a.vertex_names().begin(), a.vertex_names().end());
    for (const auto& n : b.vertex_names())
        if (names.count(n)) throw Error(ErrorKind::VertexClash, "vertex '" + n + "' in both complexes");
    std::vector<std::string> all(a.vertex_names());
    all.insert(all.end(), b.vertex_names().begin(), b.vertex_names().end());
    const std::size_t na = a.vertex_count(), n = all.size();

    if (a.is_flag() && b.is_flag()) {
        std::vector<VertexSet> adj(n, VertexSet(n));
        const auto aa = a.one_skeleton();
        const auto bb = b.one_skeleton();
        for (std::size_t i = 0; i < na; ++i) {
            for (std::size_t j = 0; j < na; ++j)
                if (aa[i].test(j)) adj[i].set(j);
            for (std::size_t j = na; j < n; ++j) {
                adj[i].set(j);
                adj[j].set(i);
            }
        }
        for (std::size_t i = na; i < n; ++i)
            for (std::size_t j = na; j < n; ++j)
                if (bb[i - na].test(j - na)) adj[i].set(j);
        return SimplicialComplex::flag(std::move(all), std::move(adj));
    }
    std::vector<std::vector<std::size_t>> fs;
    for (const auto& fa : a.facets())
        for (const auto& fb : b.facets()) {
            auto f = fa;
            for (auto v : fb) f.push_back(v + na);
            fs.push_back(std::move(f));
        }
    return SimplicialComplex::from_facets(std::move(all), std::move(fs));
}

}  // namespace tubings
