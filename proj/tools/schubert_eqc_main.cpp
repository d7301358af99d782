// schubert-eqc: presentations, Pfaffian Giambelli polynomials, products and
// structure-constant tables for the equivariant quantum cohomology of the
// maximal isotropic Grassmannians, plus the oracle verification suites.
//
// Exit codes: 0 success, 1 usage error, 2 verification failure, 3 violated
// internal invariant (exact-division or unitriangularity failures).

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "eqc/cache.hpp"
#include "eqc/qh_ring.hpp"
#include "eqc/spoly_io.hpp"
#include "eqc/verify.hpp"

namespace {

using namespace eqc;

struct Request {
    std::string type = "D";  // B, C or D; B routes through D plus the t1 = 0 reduction
    unsigned n = 2;
    std::string lambda_text;
    std::string mu_text;
    std::string format = "text";
    std::string cache_dir;
    std::string suite = "all";
    std::string mode;  // specialize
    bool q0 = false;

    bool type_b() const { return type == "B"; }
    LieType lie_type() const { return type == "C" ? LieType::C : LieType::D; }
};

std::string cache_directory(const Request& req) {
    if (!req.cache_dir.empty()) return req.cache_dir;
    if (const char* env = std::getenv("SCHUBERT_EQC_CACHE_DIR")) return env;
    return "cache";
}

void warn_rank(const Request& req) {
    if (req.n > 6)
        std::cerr << "note: rank n=" << req.n
                  << " is beyond the desk-scale bound of 6; expect large computations\n";
}

SPoly type_b_poly(const SPoly& p) {
    std::map<VarId, SPoly> bind{{VarId::t(1), SPoly::zero()}};
    return p.substitute(bind).rename([](VarId v) {
        return v.fam() == Fam::T ? VarId::t(v.index() - 1) : v;
    });
}

std::string grassmannian_name(const Request& req) {
    switch (req.type[0]) {
        case 'C': return "LG(" + std::to_string(req.n) + ")";
        case 'B': return "OG(" + std::to_string(req.n) + ", odd orthogonal)";
        default: return "OG(" + std::to_string(req.n) + ")";
    }
}

int cmd_present(const Request& req) {
    warn_rank(req);
    RingContext ctx = build_context(req.lie_type(), req.n);
    std::vector<SPoly> rels = ctx.relations;
    if (req.q0) {
        std::map<VarId, SPoly> bind{{VarId::q(), SPoly::zero()}};
        for (auto& r : rels) r = r.substitute(bind);
    }
    if (req.type_b())
        for (auto& r : rels) r = type_b_poly(r);

    unsigned t_vars = req.type_b() ? ctx.t_trunc - 1 : ctx.t_trunc;
    if (req.format == "json") {
        nlohmann::json gens = nlohmann::json::array();
        for (unsigned i = 1; i <= ctx.n; ++i)
            gens.push_back({{"name", "X" + std::to_string(i)}, {"degree", i}});
        nlohmann::json jrels = nlohmann::json::array();
        for (size_t i = 0; i < rels.size(); ++i)
            jrels.push_back({{"name", "R" + std::to_string(i + 1)},
                             {"text", to_string(rels[i])},
                             {"terms", to_json(rels[i])}});
        nlohmann::json out = {{"type", req.type},          {"n", ctx.n},
                              {"deg_q", ctx.deg_q},        {"t_variables", t_vars},
                              {"q0", req.q0},              {"generators", gens},
                              {"relations", jrels}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "Equivariant quantum cohomology presentation, type " << req.type << ", "
              << grassmannian_name(req) << "\n";
    std::cout << "  coefficients: Z[t1..t" << t_vars << "][q], deg q = " << ctx.deg_q
              << (req.q0 ? "  (specialized at q = 0)" : "") << "\n";
    std::cout << "  generators:";
    for (unsigned i = 1; i <= ctx.n; ++i) std::cout << " X" << i << " (deg " << i << ")";
    std::cout << "\n  relations:\n";
    for (size_t i = 0; i < rels.size(); ++i)
        std::cout << "    R" << (i + 1) << " = " << to_string(rels[i]) << "\n";
    return 0;
}

int cmd_giambelli(const Request& req) {
    warn_rank(req);
    RingContext ctx = build_context(req.lie_type(), req.n);
    StrictPartition lambda = StrictPartition::parse(req.lambda_text);
    SPoly cls = giambelli_class(lambda, ctx);
    if (req.type_b()) cls = type_b_poly(cls);
    if (req.format == "json") {
        nlohmann::json out = {{"type", req.type},
                              {"n", req.n},
                              {"lambda", lambda.parts()},
                              {"text", to_string(cls)},
                              {"terms", to_json(cls)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << to_string(cls) << "\n";
    }
    return 0;
}

nlohmann::json mult_json(const Request& req, const StrictPartition& lambda,
                         const StrictPartition& mu, const ClassExpansion& exp) {
    return {{"type", req.type},
            {"n", req.n},
            {"lambda", lambda.parts()},
            {"mu", mu.parts()},
            {"terms", expansion_terms_json(exp)}};
}

void print_expansion(const ClassExpansion& exp) {
    if (exp.coeff.empty()) {
        std::cout << "0\n";
        return;
    }
    bool first = true;
    for (const auto& [nu, d, coeff] : exp.terms()) {
        std::string piece;
        if (d > 0) piece += "q" + std::string(d > 1 ? "^" + std::to_string(d) : "") + "*";
        std::string c = coeff_to_string(coeff);
        if (c != "1") piece += (coeff.term_count() > 1 ? "(" + c + ")" : c) + "*";
        piece += "sigma(" + nu.to_string() + ")";
        std::cout << (first ? "" : " + ") << piece;
        first = false;
    }
    std::cout << "\n";
}

int cmd_mult(const Request& req, std::optional<SpecializeMode> mode = std::nullopt) {
    warn_rank(req);
    RingContext ctx = build_context(req.lie_type(), req.n);
    StrictPartition lambda = StrictPartition::parse(req.lambda_text);
    StrictPartition mu = StrictPartition::parse(req.mu_text);
    ClassExpansion exp = schubert_product(lambda, mu, ctx);
    if (req.type_b()) exp = specialize(exp, SpecializeMode::TypeB, ctx);
    if (mode) exp = specialize(exp, *mode, ctx);
    if (req.format == "json")
        std::cout << mult_json(req, lambda, mu, exp).dump(2) << "\n";
    else
        print_expansion(exp);
    return 0;
}

int cmd_table(const Request& req) {
    warn_rank(req);
    RingContext ctx = build_context(req.lie_type(), req.n);
    std::filesystem::path dir = cache_directory(req);
    std::filesystem::path file = table_path(dir, ctx, req.type_b());
    if (std::filesystem::exists(file)) {
        validate_table_file(file, ctx, req.type_b());
        std::cout << "validated existing table " << file.string() << "\n";
        return 0;
    }
    write_table_file(dir, ctx, req.type_b());
    std::cout << "wrote " << file.string() << " (" << ctx.basis.size() * ctx.basis.size()
              << " products)\n";
    return 0;
}

int cmd_verify(const Request& req) {
    std::vector<std::string> names;
    if (req.suite == "all")
        names = suite_names();
    else
        names.push_back(req.suite);
    bool all_pass = true;
    nlohmann::json report = nlohmann::json::array();
    for (const auto& name : names) {
        SuiteResult result = run_suite(name);
        all_pass = all_pass && result.pass();
        if (req.format == "json") {
            report.push_back(suite_to_json(result));
        } else {
            std::cout << "suite " << result.suite << ":\n";
            for (const auto& c : result.checks)
                std::cout << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name
                          << (c.detail.empty() ? "" : " -- " + c.detail) << "\n";
        }
    }
    if (req.format == "json") std::cout << report.dump(2) << "\n";
    std::cout << (all_pass ? "verification passed\n" : "verification FAILED\n");
    return all_pass ? 0 : 2;
}

int cmd_specialize(const Request& req) {
    SpecializeMode mode;
    if (req.mode == "q0")
        mode = SpecializeMode::Q0;
    else if (req.mode == "t0")
        mode = SpecializeMode::T0;
    else if (req.mode == "typeB")
        mode = SpecializeMode::TypeB;
    else
        throw CLI::ValidationError("--mode must be one of q0, t0, typeB");
    return cmd_mult(req, mode);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact equivariant quantum Schubert calculus for LG(n) and OG(n)"};
    app.require_subcommand(1);

    Request req;
    auto add_common = [&](CLI::App* sub, bool needs_lambda, bool needs_mu) {
        sub->add_option("--type", req.type, "Lie type (B, C or D)")
            ->check(CLI::IsMember({"B", "C", "D"}));
        sub->add_option("--n", req.n, "rank")->required();
        auto* l = sub->add_option("--lambda", req.lambda_text,
                                  "strict partition, comma separated (empty for the unit class)");
        auto* m = sub->add_option("--mu", req.mu_text, "second strict partition");
        if (needs_lambda) l->required();
        if (needs_mu) m->required();
        sub->add_option("--format", req.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--cache", req.cache_dir,
                        "cache directory (default: $SCHUBERT_EQC_CACHE_DIR or ./cache)");
        return sub;
    };

    auto* present = add_common(app.add_subcommand("present", "print the ring presentation"),
                               false, false);
    present->add_flag("--q0", req.q0, "specialize the relations at q = 0");
    add_common(app.add_subcommand("giambelli", "Pfaffian polynomial of a Schubert class"), true,
               false);
    add_common(app.add_subcommand("mult", "product of two Schubert classes"), true, true);
    add_common(app.add_subcommand("table", "compute and persist all products"), false, false);
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", req.suite,
                       "suite name (oracle-identities, chevalley, associativity, positivity, all)");
    verify->add_option("--format", req.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    auto* spec = add_common(app.add_subcommand("specialize", "specialize a product expansion"),
                            true, true);
    spec->add_option("--mode", req.mode, "specialization: q0, t0 or typeB")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand("present")) return cmd_present(req);
        if (app.got_subcommand("giambelli")) return cmd_giambelli(req);
        if (app.got_subcommand("mult")) return cmd_mult(req);
        if (app.got_subcommand("table")) return cmd_table(req);
        if (app.got_subcommand("verify")) return cmd_verify(req);
        if (app.got_subcommand("specialize")) return cmd_specialize(req);
    } catch (const eqc::internal_error& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.get_name() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
