#include "tubings/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tubings/error.hpp"
#include "tubings/io.hpp"
#include "tubings/lattice.hpp"
#include "tubings/parity.hpp"
#include "tubings/poincare.hpp"
#include "tubings/poset.hpp"
#include "tubings/tubes.hpp"

namespace tubings {

namespace {

using Json = nlohmann::ordered_json;

struct Globals {
    bool json = false;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> face_budget;
    unsigned threads = 0;
};

struct CheckFailed {};

std::size_t face_budget_of(const Globals& g) {
    if (g.face_budget) return *g.face_budget;
    if (const char* env = std::getenv("TUBINGS_FACE_BUDGET")) {
        try {
            return static_cast<std::size_t>(std::stoull(env));
        } catch (const std::exception&) {
            throw Error(ErrorKind::SyntaxError, "TUBINGS_FACE_BUDGET must be an integer");
        }
    }
    return kDefaultFaceBudget;
}

RouteOptions route_options(const Globals& g) {
    RouteOptions opt;
    opt.face_budget = face_budget_of(g);
    opt.threads = g.threads;
    opt.designation_seed = g.seed;
    return opt;
}

Json polynomial_json(const IntPolynomial& p) { return Json(p.coefficients()); }
Json betti_json(const BettiVector& b) {
    // always starts at index -1, trimmed, never empty
    return b.values.empty() ? Json(std::vector<std::int64_t>{0}) : Json(b.values);
}

std::string betti_text(const BettiVector& b) {
    std::string s;
    const auto& v = b.values.empty() ? std::vector<std::int64_t>{0} : b.values;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

Json complex_json(const SimplicialComplex& k, std::size_t budget) {
    Json faces = Json::array();
    for (const auto& f : k.facets(budget)) {
        Json face = Json::array();
        for (auto v : f) face.push_back(k.vertex_names()[v]);
        faces.push_back(std::move(face));
    }
    return Json{{"vertices", k.vertex_names()}, {"maximal_faces", std::move(faces)}};
}

void print_complex(std::ostream& out, const SimplicialComplex& k, std::size_t budget) {
    out << "vertices (" << k.vertex_count() << "):";
    for (const auto& n : k.vertex_names()) out << ' ' << n;
    out << '\n';
    const auto facets = k.facets(budget);
    out << "maximal faces (" << (k.empty() ? 0 : facets.size()) << "):\n";
    if (k.empty()) return;
    for (const auto& f : facets) {
        out << "  {";
        for (std::size_t i = 0; i < f.size(); ++i) out << (i ? ", " : "") << k.vertex_names()[f[i]];
        out << "}\n";
    }
}

std::string shell_text(ShellStatus s) {
    switch (s) {
        case ShellStatus::Yes: return "yes";
        case ShellStatus::No: return "no";
        case ShellStatus::Unknown: return "unknown";
    }
    return "unknown";
}

struct Context {
    Globals globals;
    std::string graph_path;
    std::ostream& out;
    Pseudograph graph() const { return read_graph_file(graph_path).graph; }
    void emit(const Json& j) const { out << j.dump() << '\n'; }
};

void cmd_tubes(const Context& ctx) {
    const TubingComplex k(ctx.graph());
    if (ctx.globals.json) {
        Json tubes = Json::array();
        for (std::size_t i = 0; i < k.size(); ++i)
            tubes.push_back(Json{{"tube", k.tube_name(i)}, {"L", k.graph().name_of(label_L(k.graph(), k.tubes()[i]))}});
        ctx.emit(Json{{"count", k.size()}, {"dimension", associahedron_dimension(k.graph())}, {"tubes", tubes}});
        return;
    }
    ctx.out << k.size() << " tubes\n";
    for (std::size_t i = 0; i < k.size(); ++i)
        ctx.out << "  " << k.tube_name(i) << "  L=" << k.graph().name_of(label_L(k.graph(), k.tubes()[i])) << '\n';
}

void cmd_complex(const Context& ctx) {
    const TubingComplex k(ctx.graph());
    const std::size_t budget = face_budget_of(ctx.globals);
    if (ctx.globals.json) {
        Json j = complex_json(k.complex(), budget);
        j["dimension"] = associahedron_dimension(k.graph());
        ctx.emit(j);
        return;
    }
    ctx.out << "dimension " << associahedron_dimension(k.graph()) << '\n';
    print_complex(ctx.out, k.complex(), budget);
}

void cmd_betti(const Context& ctx, const std::string& coll_text, const std::string& variant) {
    const TubingComplex k(ctx.graph());
    const Pseudograph& g = k.graph();
    const ElementSet c = g.mask_of(parse_collection(coll_text, g));
    SimplicialComplex sc;
    if (variant == "odd") sc = k_odd(k, c);
    else if (variant == "even") sc = k_even(k, c);
    else if (variant == "prime") sc = k_prime(k, c);
    else sc = k_double_prime(k, c);
    const std::size_t budget = face_budget_of(ctx.globals);
    const BettiVector b = betti_reduced(sc, budget);
    if (ctx.globals.json) {
        ctx.emit(Json{{"collection", g.name_of(c)},
                      {"variant", variant},
                      {"betti", betti_json(b)},
                      {"complex", complex_json(sc, budget)}});
        return;
    }
    ctx.out << "collection " << (c.empty() ? "(empty)" : g.name_of(c)) << ", variant " << variant << '\n';
    print_complex(ctx.out, sc, budget);
    ctx.out << "reduced betti from index -1: " << betti_text(b) << '\n';
}

void cmd_apoly(const Context& ctx) {
    const Pseudograph g = ctx.graph();
    const RouteOptions opt = route_options(ctx.globals);
    const TubingComplex k(g);
    const auto admissible = admissible_collections(g);
    const IntPolynomial a = a_polynomial(g, opt);
    if (ctx.globals.json) {
        Json cs = Json::array();
        for (const auto& c : admissible)
            cs.push_back(Json{{"collection", g.name_of(c)},
                              {"poincare", polynomial_json(reduced_poincare(betti_reduced(k_odd(k, c), opt.face_budget)))}});
        ctx.emit(Json{{"a_polynomial", polynomial_json(a)}, {"admissible", cs}});
        return;
    }
    ctx.out << a.to_string() << '\n';
}

void cmd_poincare(const Context& ctx, const std::string& method) {
    const Pseudograph g = ctx.graph();
    const RouteOptions opt = route_options(ctx.globals);
    std::optional<IntPolynomial> reduced, brute;
    if (method != "brute") reduced = poincare_reduced(g, opt);
    if (method != "reduced") brute = poincare_brute(g, opt);
    const bool equal = !(reduced && brute) || *reduced == *brute;
    if (ctx.globals.json) {
        Json j = Json::object();
        if (reduced) j["reduced"] = polynomial_json(*reduced);
        if (brute) j["brute"] = polynomial_json(*brute);
        if (reduced && brute) j["equal"] = equal;
        ctx.emit(j);
    } else {
        if (reduced) ctx.out << "reduced: " << reduced->to_string() << '\n';
        if (brute) ctx.out << "brute:   " << brute->to_string() << '\n';
        if (reduced && brute) ctx.out << "equal:   " << (equal ? "yes" : "no") << '\n';
    }
    if (!equal) throw CheckFailed{};
}

void cmd_verify(const Context& ctx, std::optional<std::size_t> budget) {
    const Pseudograph g = ctx.graph();
    RouteOptions opt = route_options(ctx.globals);
    if (budget) opt.face_budget = *budget;
    const CrossCheckReport rep = cross_check(g, opt);
    const bool connected = g.components_of(g.universe()).size() == 1;
    std::optional<DelzantReport> dz;
    if (connected) dz = delzant_check(TubingComplex(g), opt.face_budget);
    const bool pass = rep.pass && (!dz || dz->pass);
    if (ctx.globals.json) {
        Json j{{"pass", pass},
               {"reduced", polynomial_json(rep.reduced)},
               {"brute", polynomial_json(rep.brute)},
               {"even_collections", rep.collections},
               {"even_star_collections", rep.even_star},
               {"lessdot", rep.lessdot},
               {"admissible_pairs", rep.admissible_pairs},
               {"failures", rep.failures}};
        if (dz)
            j["delzant"] = Json{{"pass", dz->pass},
                                {"dimension", dz->dimension},
                                {"maximal_tubings", dz->tubings_checked},
                                {"lambda_rank", dz->lambda_rank},
                                {"violation", dz->violation}};
        ctx.emit(j);
    } else {
        ctx.out << "reduced: " << rep.reduced.to_string() << "\nbrute:   " << rep.brute.to_string() << '\n'
                << "even collections " << rep.collections << ", even* " << rep.even_star << ", H<.G "
                << rep.lessdot << ", admissible pairs " << rep.admissible_pairs << '\n';
        if (dz)
            ctx.out << "delzant: " << (dz->pass ? "pass" : "FAIL " + dz->violation) << " (" << dz->tubings_checked
                    << " maximal tubings)\n";
        for (const auto& f : rep.failures) ctx.out << "failure: " << f << '\n';
        ctx.out << (pass ? "PASS" : "FAIL") << '\n';
    }
    if (!pass) throw CheckFailed{};
}

void cmd_order_complex(const Context& ctx, const std::string& coll_text, const std::string& parity_text,
                       bool want_shell, const std::string& exclude, std::size_t shell_budget) {
    const TubingComplex k(ctx.graph());
    const Pseudograph& g = k.graph();
    const ElementSet c = g.mask_of(parse_collection(coll_text, g));
    const std::size_t budget = face_budget_of(ctx.globals);
    const ParityPoset pp = s_parity_poset(k, c, parity_text == "odd" ? Parity::Odd : Parity::Even,
                                          exclude == "gamma" ? ExcludeRule::Gamma : ExcludeRule::Collection, budget);
    const SimplicialComplex oc = order_complex(pp.poset);
    const BettiVector b = betti_reduced(oc, budget);
    const std::int64_t mu = mobius_euler(pp.poset);
    std::optional<ShellResult> sh;
    if (want_shell) sh = shellable(oc, shell_budget);
    if (ctx.globals.json) {
        Json j{{"collection", g.name_of(c)},
               {"parity", parity_text},
               {"elements", pp.poset.names()},
               {"complex", complex_json(oc, budget)},
               {"betti", betti_json(b)},
               {"mobius", mu}};
        if (sh) j["shellable"] = shell_text(sh->status);
        ctx.emit(j);
        return;
    }
    ctx.out << "elements (" << pp.poset.size() << "):";
    for (const auto& n : pp.poset.names()) ctx.out << ' ' << n;
    ctx.out << "\nreduced betti from index -1: " << betti_text(b) << "\nmobius: " << mu << '\n';
    if (sh) ctx.out << "shellable: " << shell_text(sh->status) << '\n';
}

void cmd_delzant(const Context& ctx) {
    const TubingComplex k(ctx.graph());
    const DelzantReport rep = delzant_check(k, face_budget_of(ctx.globals));
    if (ctx.globals.json) {
        ctx.emit(Json{{"pass", rep.pass},
                      {"dimension", rep.dimension},
                      {"maximal_tubings", rep.tubings_checked},
                      {"min_tubing_size", rep.min_tubing_size},
                      {"max_tubing_size", rep.max_tubing_size},
                      {"lambda_rank", rep.lambda_rank},
                      {"lambda_matches_normals", rep.lambda_matches_normals},
                      {"violation", rep.violation}});
    } else {
        ctx.out << "dimension " << rep.dimension << ", " << rep.tubings_checked << " maximal tubings, lambda rank "
                << rep.lambda_rank << '\n'
                << (rep.pass ? "PASS" : "FAIL: " + rep.violation) << '\n';
    }
    if (!rep.pass) throw CheckFailed{};
}

void cmd_lessdot(const Context& ctx) {
    const Pseudograph g = ctx.graph();
    const RouteOptions opt = route_options(ctx.globals);
    const auto hs = enumerate_lessdot(g);
    Json list = Json::array();
    for (const auto& h : hs) {
        const IntPolynomial a = a_polynomial(h, opt);
        if (ctx.globals.json) list.push_back(Json{{"graph", h.name_of(h.universe())}, {"a_polynomial", polynomial_json(a)}});
        else ctx.out << h.name_of(h.universe()) << "  a = " << a.to_string() << '\n';
    }
    if (ctx.globals.json) ctx.emit(Json{{"count", hs.size()}, {"graphs", list}});
    else ctx.out << hs.size() << " graphs\n";
}

int report_error(const Globals& gl, std::ostream& out, std::ostream& err, const std::string& kind,
                 const std::string& message, int code) {
    if (gl.json) out << Json{{"error", Json{{"kind", kind}, {"message", message}}}}.dump() << '\n';
    err << "error: " << message << '\n';
    return code;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pseudograph associahedra: tubings, parity complexes and Betti numbers of real toric manifolds",
                 "tubings"};
    app.fallthrough();
    app.require_subcommand(1);
    Globals gl;
    std::uint64_t seed = 0;
    std::size_t face_budget = 0;
    app.add_flag("--json", gl.json, "Emit one JSON document");
    auto* seed_opt = app.add_option("--seed", seed, "Seed for randomly designated last node and edges");
    auto* budget_opt = app.add_option("--face-budget", face_budget, "Maximum number of faces to enumerate");
    app.add_option("--threads", gl.threads, "Worker threads (0 = all cores)");

    std::string graph_path, coll_text, variant = "odd", method = "both", parity_text, exclude = "collection";
    bool want_shell = false;
    std::size_t verify_budget = 0, shell_budget = kDefaultShellBudget;
    std::function<void(const Context&)> action;

    auto with_graph = [&](CLI::App* sub) {
        sub->add_option("graph", graph_path, "Graph file")->required();
        return sub;
    };
    with_graph(app.add_subcommand("tubes", "List the tubes and their labels L_I"))->callback([&] {
        action = cmd_tubes;
    });
    with_graph(app.add_subcommand("complex", "Maximal tubings of the tubing complex"))->callback([&] {
        action = cmd_complex;
    });
    auto* betti = with_graph(app.add_subcommand("betti", "Reduced Betti numbers of a parity subcomplex"));
    betti->add_option("--collection", coll_text, "Collection, e.g. 1,3,a,b")->required();
    betti->add_option("--variant", variant, "odd, even, prime or dprime")
        ->check(CLI::IsMember({"odd", "even", "prime", "dprime"}));
    betti->callback([&] { action = [&](const Context& c) { cmd_betti(c, coll_text, variant); }; });
    with_graph(app.add_subcommand("apoly", "The a-polynomial"))->callback([&] { action = cmd_apoly; });
    auto* poin = with_graph(app.add_subcommand("poincare", "Poincare polynomial of the real toric manifold"));
    poin->add_option("--method", method, "reduced, brute or both")
        ->check(CLI::IsMember({"reduced", "brute", "both"}));
    poin->callback([&] { action = [&](const Context& c) { cmd_poincare(c, method); }; });
    auto* verify = with_graph(app.add_subcommand("verify", "Cross-check both routes and the lattice data"));
    auto* vb = verify->add_option("--budget", verify_budget, "Face budget for the check");
    verify->callback([&] {
        action = [&, vb](const Context& c) {
            cmd_verify(c, vb->count() ? std::optional<std::size_t>(verify_budget) : std::nullopt);
        };
    });
    auto* oc = with_graph(app.add_subcommand("order-complex", "Order complex of the parity poset"));
    oc->add_option("--collection", coll_text, "Collection, e.g. 1,2,3,4,a,b")->required();
    oc->add_option("--parity", parity_text, "odd or even")->required()->check(CLI::IsMember({"odd", "even"}));
    oc->add_flag("--shellable", want_shell, "Search for a shelling");
    oc->add_option("--shell-budget", shell_budget, "Shelling search expansions");
    oc->add_option("--exclude", exclude, "Excluded top element: collection or gamma")
        ->check(CLI::IsMember({"collection", "gamma"}));
    oc->callback([&] {
        action = [&](const Context& c) { cmd_order_complex(c, coll_text, parity_text, want_shell, exclude, shell_budget); };
    });
    with_graph(app.add_subcommand("delzant-check", "Unimodularity of the normals at every vertex"))->callback([&] {
        action = cmd_delzant;
    });
    with_graph(app.add_subcommand("lessdot", "Every H obtained by inducing and collapsing bundles"))->callback([&] {
        action = cmd_lessdot;
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        return report_error(gl, out, err, "UsageError", e.what(), kExitInputError);
    }
    if (seed_opt->count()) gl.seed = seed;
    if (budget_opt->count()) gl.face_budget = face_budget;

    try {
        action(Context{gl, graph_path, out});
        return kExitOk;
    } catch (const CheckFailed&) {
        return kExitCheckFailed;
    } catch (const Error& e) {
        const int code = e.kind() == ErrorKind::FaceBudgetExceeded ? kExitBudget : kExitInputError;
        return report_error(gl, out, err, std::string(to_string(e.kind())), e.what(), code);
    } catch (const std::exception& e) {
        return report_error(gl, out, err, "InputError", e.what(), kExitInputError);
    }
}

}  // namespace tubings
