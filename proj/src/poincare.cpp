#include "tubings/poincare.hpp"

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <random>
#include <thread>

#include "tubings/error.hpp"
#include "tubings/parity.hpp"
#include "tubings/tubes.hpp"

namespace tubings {

IntPolynomial reduced_poincare(const BettiVector& b) {
    std::vector<std::int64_t> c;
    for (std::size_t idx = 1; idx < b.values.size(); ++idx) c.push_back(b.values[idx]);
    return IntPolynomial(std::move(c));
}

IntPolynomial shifted_poincare(const BettiVector& b) { return IntPolynomial(b.values); }

namespace {

// Runs f(0..n-1) on a small pool; the first exception wins and is rethrown.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& f) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; !failed && (i = next++) < n;) {
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard lock(mu);
                    if (!error) error = std::current_exception();
                    failed = true;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

Designation designation_for(const Pseudograph& g, const RouteOptions& opt, std::uint64_t salt) {
    if (!opt.designation_seed) return Designation::canonical(g);
    std::mt19937_64 rng(*opt.designation_seed ^ (salt * 0x9E3779B97F4A7C15ull));
    return Designation::random(g, rng);
}

BettiVector betti_for(const SimplicialComplex& k, const Pseudograph& g, const ElementSet& c, std::size_t budget) {
    try {
        return betti_reduced(k, budget);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::FaceBudgetExceeded) throw;
        throw Error(ErrorKind::FaceBudgetExceeded, std::string(e.what()) + " at collection {" + g.name_of(c) + "}");
    }
}

IntPolynomial a_polynomial_with(const Pseudograph& h, const Designation& d, std::size_t budget) {
    IntPolynomial a;
    const TubingComplex k(h);
    for (const auto& c : even_collections(h, d))
        if (is_admissible(h, c)) a += reduced_poincare(betti_for(k_odd(k, c), h, c, budget));
    return a;
}

}  // namespace

IntPolynomial a_polynomial(const Pseudograph& h, const RouteOptions& opt) {
    return a_polynomial_with(h, designation_for(h, opt, 0), opt.face_budget);
}

IntPolynomial poincare_reduced(const Pseudograph& g, const RouteOptions& opt) {
    const auto hs = enumerate_lessdot(g);
    std::vector<IntPolynomial> parts(hs.size());
    parallel_for(hs.size(), opt.threads, [&](std::size_t i) {
        parts[i] = a_polynomial_with(hs[i], designation_for(hs[i], opt, i + 1), opt.face_budget);
    });
    IntPolynomial sum;
    for (const auto& p : parts) sum += p;
    return IntPolynomial({1}) + sum.shifted(1);
}

IntPolynomial poincare_brute(const Pseudograph& g, const RouteOptions& opt) {
    const TubingComplex k(g);
    const auto cs = even_collections(g, designation_for(g, opt, 0));
    std::vector<IntPolynomial> parts(cs.size());
    parallel_for(cs.size(), opt.threads, [&](std::size_t i) {
        parts[i] = shifted_poincare(betti_for(k_odd(k, cs[i]), g, cs[i], opt.face_budget));
    });
    IntPolynomial sum;
    for (const auto& p : parts) sum += p;
    return sum;
}

namespace {

std::string betti_string(const BettiVector& b) {
    std::string s = "[";
    for (std::size_t i = 0; i < b.values.size(); ++i) s += (i ? "," : "") + std::to_string(b.values[i]);
    return s + "]";
}

}  // namespace

CrossCheckReport cross_check(const Pseudograph& g, const RouteOptions& opt) {
    CrossCheckReport rep;
    const TubingComplex k(g);
    const auto cs = even_collections(g, designation_for(g, opt, 0));
    rep.collections = cs.size();

    struct PerC {
        IntPolynomial term;
        bool even_star = false;
        std::vector<std::string> failures;
    };
    std::vector<PerC> per(cs.size());
    parallel_for(cs.size(), opt.threads, [&](std::size_t i) {
        const ElementSet& c = cs[i];
        PerC& out = per[i];
        const std::string cname = "{" + g.name_of(c) + "}";
        const BettiVector b_odd = betti_for(k_odd(k, c), g, c, opt.face_budget);
        const BettiVector b_prime = betti_for(k_prime(k, c), g, c, opt.face_budget);
        const BettiVector b_dprime = betti_for(k_double_prime(k, c), g, c, opt.face_budget);
        out.term = shifted_poincare(b_odd);
        if (!(b_odd == b_prime) || !(b_odd == b_dprime))
            out.failures.push_back("C=" + cname + ": Betti of K^odd " + betti_string(b_odd) + ", K' " +
                                   betti_string(b_prime) + ", K'' " + betti_string(b_dprime));

        const Collection coll = g.collection_of(c);
        const Pseudograph gam = gamma(g, coll);
        const bool admissible = is_admissible(gam, coll);
        out.even_star = is_even_star(g, c);
        if (out.even_star != admissible)
            out.failures.push_back("C=" + cname + ": even* is " + (out.even_star ? "true" : "false") +
                                   " but admissibility to Gamma is " + (admissible ? "true" : "false"));
        if (out.even_star) {
            const auto iso = check_tilde_isomorphism(k, c);
            if (!iso.isomorphic) out.failures.push_back("C=" + cname + ": " + iso.detail);
            const TubingComplex kg(gam);
            const BettiVector b_gamma = betti_for(k_odd(kg, gam.mask_of(coll)), gam, gam.mask_of(coll), opt.face_budget);
            if (!(b_gamma == b_odd))
                out.failures.push_back("C=" + cname + ": Betti of K^odd over Gamma " + betti_string(b_gamma) +
                                       " differs from " + betti_string(b_odd));
        } else if (!b_dprime.all_zero()) {
            out.failures.push_back("C=" + cname + ": odd component of Gamma~ but K'' has Betti " +
                                   betti_string(b_dprime));
        }
    });
    for (const auto& p : per) {
        rep.brute += p.term;
        if (p.even_star) ++rep.even_star;
        rep.failures.insert(rep.failures.end(), p.failures.begin(), p.failures.end());
    }

    const auto hs = enumerate_lessdot(g);
    rep.lessdot = hs.size();
    std::vector<IntPolynomial> parts(hs.size());
    std::vector<std::size_t> pairs(hs.size(), 0);
    std::vector<std::vector<std::string>> hfail(hs.size());
    parallel_for(hs.size(), opt.threads, [&](std::size_t i) {
        const Pseudograph& h = hs[i];
        const TubingComplex kh(h);
        for (const auto& c : even_collections(h, designation_for(h, opt, i + 1))) {
            if (!is_admissible(h, c)) continue;
            ++pairs[i];
            parts[i] += reduced_poincare(betti_for(k_odd(kh, c), h, c, opt.face_budget));
            const Collection coll = h.collection_of(c);
            if (!(gamma(g, coll) == h))
                hfail[i].push_back("C={" + h.name_of(c) + "} is admissible to a subgraph other than Gamma_G(C)");
        }
    });
    IntPolynomial sum;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        sum += parts[i];
        rep.admissible_pairs += pairs[i];
        rep.failures.insert(rep.failures.end(), hfail[i].begin(), hfail[i].end());
    }
    rep.reduced = IntPolynomial({1}) + sum.shifted(1);

    // the empty collection is even* and pairs with no nonempty H
    if (rep.admissible_pairs + 1 != rep.even_star)
        rep.failures.push_back("even* count " + std::to_string(rep.even_star) + " but " +
                               std::to_string(rep.admissible_pairs) + " admissible pairs");
    if (!(rep.reduced == rep.brute))
        rep.failures.push_back("routes differ: reduced " + rep.reduced.to_string() + ", brute " + rep.brute.to_string());
    rep.pass = rep.failures.empty();
    return rep;
}

}  // namespace tubings
