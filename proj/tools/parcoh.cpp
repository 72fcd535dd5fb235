#include "parcoh/corpus.hpp"
#include "parcoh/exel.hpp"
#include "parcoh/globalization.hpp"
#include "parcoh/json_io.hpp"
#include "parcoh/module.hpp"
#include "parcoh/resolution.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using parcoh::Json;

struct RunConfig {
    std::string command;
    std::string group_arg;   /* file path or family string */
    std::string action_path;
    std::string cocycle_path;
    std::string field_text = "rational";
    int degree = 1;
    long long guard_dim = 200000;
    std::uint64_t seed = 12345;
    std::string output_path;
    bool permuted = false;
};

Json config_json(const RunConfig& c) {
    Json j;
    j["command"] = c.command;
    if (!c.group_arg.empty()) j["group"] = c.group_arg;
    if (!c.action_path.empty()) j["action"] = c.action_path;
    if (!c.cocycle_path.empty()) j["cocycle"] = c.cocycle_path;
    j["field"] = c.field_text;
    j["degree"] = c.degree;
    j["guard_dim"] = c.guard_dim;
    j["seed"] = c.seed;
    j["transversal_permutation"] = c.permuted;
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    return j;
}

parcoh::GroupTable load_group(const std::string& arg) {
    if (std::ifstream probe(arg); probe.good()) return parcoh::group_from_json(load_json_file(arg));
    return parcoh::GroupTable::named(arg); /* family string given inline */
}

struct LoadedAction {
    std::unique_ptr<parcoh::GroupTable> group;
    parcoh::PartialActionSpec spec;
};

LoadedAction load_action(const RunConfig& c) {
    LoadedAction out;
    parcoh::Field f = parcoh::Field::parse(c.field_text);
    out.spec = parcoh::action_from_json(load_json_file(c.action_path), out.group, f);
    parcoh::ValidationIssue issue = parcoh::validate(out.spec);
    if (!issue.ok()) throw std::runtime_error("invalid action: " + issue.message);
    return out;
}

void guard_degree(const parcoh::PartialActionSpec& spec, int degree, long long guard) {
    double tuples = 1;
    for (int i = 0; i <= degree + 1; ++i) tuples *= spec.group->order();
    if (tuples * spec.algebra.dim > static_cast<double>(guard))
        throw std::runtime_error(
            "guard exceeded: degree-" + std::to_string(degree) + " cochain tables need " +
            std::to_string(static_cast<long long>(tuples * spec.algebra.dim)) +
            " coordinates; lower --degree or raise --guard-dim");
}

/* ---- human-readable rendering (reads the report, computes nothing) ---- */

void render_dims(std::ostream& os, const Json& d) {
    os << "  C^n " << d.at("cochain") << "  Z^n " << d.at("cocycle") << "  B^n "
       << d.at("coboundary") << "  H^n " << d.at("h") << "\n";
}

void render(std::ostream& os, const Json& report) {
    const std::string cmd = report.at("config").at("command").get<std::string>();
    os << "== " << cmd << " ==\n";
    if (cmd == "semigroup") {
        os << "group: " << report.at("group_description").get<std::string>()
           << " (order " << report.at("group_order") << ")\n";
        os << "|S(G)| = " << report.at("size") << ", idempotents: "
           << report.at("idempotent_count") << "\n";
        os << "axioms: " << (report.at("axioms_ok").get<bool>() ? "pass" : "FAIL") << "\n";
        for (const auto& e : report.at("elements")) os << "  " << e.get<std::string>() << "\n";
    } else if (cmd == "cohomology") {
        os << "degree " << report.at("degree") << " over " << report.at("config").at("field").get<std::string>() << "\n";
        render_dims(os, report.at("dims"));
        if (report.contains("h0_invariants_dim"))
            os << "  invariant cross-check dim " << report.at("h0_invariants_dim") << "\n";
        if (report.contains("bar_oracle_h_dim"))
            os << "  global bar-complex oracle H^n " << report.at("bar_oracle_h_dim") << "\n";
        int i = 0;
        for (const auto& rep : report.at("representatives")) {
            os << "  class " << i++ << ":";
            for (const auto& [k, v] : rep.at("entries").items()) os << "  (" << k << ") -> " << v.dump();
            os << "\n";
        }
    } else if (cmd == "globalize") {
        const Json& c = report.at("certificates");
        for (const auto& [k, v] : c.items())
            if (v.is_boolean()) os << "  " << k << ": " << (v.get<bool>() ? "pass" : "FAIL") << "\n";
    } else if (cmd == "envelope") {
        os << "model blocks: " << report.at("model").at("blocks") << ", dim "
           << report.at("model").at("dim") << "\n";
        for (const auto& o : report.at("orbits"))
            os << "  orbit base " << o.at("base") << ": H " << o.at("stabilizer").dump()
               << " lambda' " << o.at("lambda_prime").dump() << " lambda " << o.at("lambda").dump()
               << "\n";
        for (const auto& [k, v] : report.at("certificates").items())
            if (v.is_boolean()) os << "  " << k << ": " << (v.get<bool>() ? "pass" : "FAIL") << "\n";
    } else if (cmd == "verify") {
        for (const auto& [k, v] : report.items()) {
            if (!v.is_object() || !v.contains("passed")) continue;
            os << "  " << k << ": " << (v.at("passed").get<bool>() ? "pass" : "FAIL");
            if (v.contains("detail") && !v.at("detail").get<std::string>().empty())
                os << "  [" << v.at("detail").get<std::string>() << "]";
            os << "\n";
        }
    }
    os << (report.at("all_passed").get<bool>() ? "ALL PASSED" : "FAILED") << "\n";
}

int emit(const RunConfig& c, const Json& report) {
    std::string text = report.dump(2) + "\n";
    if (!c.output_path.empty()) {
        std::ofstream out(c.output_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + c.output_path);
        out << text;
        render(std::cout, report);
    } else {
        std::cout << text;
    }
    return report.at("all_passed").get<bool>() ? 0 : 1;
}

/* ---- commands ---- */

int cmd_semigroup(const RunConfig& c) {
    parcoh::GroupTable g = load_group(c.group_arg);
    parcoh::ExelSemigroup s(g);
    if (s.size() > c.guard_dim)
        throw std::runtime_error("guard exceeded: |S(G)| = " + std::to_string(s.size()));

    bool ok = true;
    std::string detail;
    /* defining relations, exhaustively */
    for (int x = 0; x < g.order() && ok; ++x)
        for (int h = 0; h < g.order(); ++h) {
            auto gx = s.generator(x), gh = s.generator(h);
            auto gxi = s.generator(g.inv(x)), ghi = s.generator(g.inv(h));
            if (s.multiply(s.multiply(gxi, gx), gh) != s.multiply(gxi, s.generator(g.mul(x, h))) ||
                s.multiply(s.multiply(gx, gh), ghi) != s.multiply(s.generator(g.mul(x, h)), ghi) ||
                s.multiply(gx, s.generator(0)) != gx) {
                ok = false;
                detail = "defining relation fails at (" + g.name(x) + ", " + g.name(h) + ")";
                break;
            }
        }
    /* inverse-semigroup axioms on the enumeration */
    for (const auto& a : s.elements()) {
        auto ai = s.inverse(a);
        if (s.multiply(s.multiply(a, ai), a) != a) { ok = false; detail = "s s^-1 s != s"; }
    }
    for (const auto& a : s.idempotents())
        for (const auto& b : s.idempotents())
            if (s.multiply(a, b) != s.multiply(b, a)) { ok = false; detail = "idempotents do not commute"; }

    Json report;
    report["config"] = config_json(c);
    report["group_order"] = g.order();
    report["group_description"] = g.description();
    report["size"] = s.size();
    report["idempotent_count"] = static_cast<int>(s.idempotents().size());
    Json els = Json::array();
    for (const auto& e : s.elements()) els.push_back(s.to_string(e));
    report["elements"] = std::move(els);
    report["axioms_ok"] = ok;
    report["detail"] = detail;
    report["all_passed"] = ok;
    return emit(c, report);
}

int cmd_cohomology(const RunConfig& c) {
    LoadedAction a = load_action(c);
    guard_degree(a.spec, c.degree, c.guard_dim);
    parcoh::KParModule pm = parcoh::KParModule::induced(a.spec);
    parcoh::CohomologyResult r = parcoh::cohomology(pm, c.degree);

    Json report;
    report["config"] = config_json(c);
    report["degree"] = c.degree;
    report["dims"] = Json{{"cochain", r.cochain_dim},
                          {"cocycle", r.cocycle_dim},
                          {"coboundary", r.coboundary_dim},
                          {"h", r.h_dim}};
    Json reps = Json::array();
    for (const auto& w : r.representatives) reps.push_back(parcoh::cochain_to_json(a.spec, w));
    report["representatives"] = std::move(reps);

    bool passed = true;
    if (c.degree == 0) {
        /* invariants a with alpha_g(1_{g^-1} a) = 1_g a, straight from the
           definition */
        std::vector<parcoh::Vec> rows;
        parcoh::Field f = a.spec.algebra.field;
        int d = a.spec.algebra.dim;
        parcoh::Matrix m(f, d * a.spec.group->order(), d);
        for (int x = 0; x < a.spec.group->order(); ++x)
            for (int j = 0; j < d; ++j) {
                parcoh::Vec e = parcoh::vec_unit(f, d, j);
                parcoh::Vec diff = parcoh::vec_sub(
                    a.spec.alpha_partial(x, e),
                    parcoh::vec_mul(a.spec.domain_idempotent(x), e));
                for (int i = 0; i < d; ++i) m.at(x * d + i, j) = diff[i];
            }
        int inv_dim = parcoh::kernel(m).dim();
        report["h0_invariants_dim"] = inv_dim;
        passed = passed && inv_dim == r.h_dim;
    }
    if (a.spec.is_global()) {
        /* independent oracle: the bar complex of A as an honest G-module */
        std::vector<parcoh::Matrix> gens;
        for (int x = 0; x < a.spec.group->order(); ++x) {
            parcoh::Matrix b(a.spec.algebra.field, a.spec.algebra.dim, a.spec.algebra.dim);
            for (int j = 0; j < a.spec.algebra.dim; ++j) {
                parcoh::Vec col =
                    a.spec.alpha(x, parcoh::vec_unit(a.spec.algebra.field, a.spec.algebra.dim, j));
                for (int i = 0; i < a.spec.algebra.dim; ++i) b.at(i, j) = col[i];
            }
            gens.push_back(std::move(b));
        }
        parcoh::GModule gm(*a.spec.group, a.spec.algebra.field, gens);
        parcoh::BarCohomologyResult oracle = parcoh::classical_cohomology(gm, c.degree);
        report["bar_oracle_h_dim"] = oracle.h_dim;
        passed = passed && oracle.h_dim == r.h_dim;
    }
    report["all_passed"] = passed;
    return emit(c, report);
}

int cmd_globalize(const RunConfig& c) {
    LoadedAction a = load_action(c);
    guard_degree(a.spec, c.degree, c.guard_dim);
    parcoh::PartialCochain w = parcoh::cochain_from_json(a.spec, load_json_file(c.cocycle_path));
    if (w.n != c.degree)
        throw std::runtime_error("cocycle file has degree " + std::to_string(w.n) +
                                 " but --degree is " + std::to_string(c.degree));

    Json report;
    report["config"] = config_json(c);

    parcoh::KParModule pm = parcoh::KParModule::induced(a.spec);
    parcoh::PartialCochain dw = parcoh::coboundary_apply(pm, w);
    parcoh::TupleIndexer ix(a.spec.group->order(), w.n + 1);
    Json residual = Json::object();
    for (long long t = 0; t < ix.count(); ++t)
        if (!parcoh::vec_is_zero(dw.values[t])) {
            std::vector<int> tuple = ix.tuple(t);
            std::string key;
            for (std::size_t i = 0; i < tuple.size(); ++i)
                key += (i ? "," : "") + std::to_string(tuple[i]);
            residual[key] = parcoh::vec_to_json(dw.values[t]);
        }
    if (!residual.empty()) {
        report["error"] = "input is not a cocycle";
        report["residual"] = std::move(residual);
        report["all_passed"] = false;
        return emit(c, report);
    }

    parcoh::Envelope env(a.spec, c.permuted);
    parcoh::Globalization gl = parcoh::globalize(env, w);
    parcoh::PartialActionSpec model_spec = env.model_action();

    Json certs;
    const auto& g = gl.certs;
    certs["input_is_cocycle"] = g.input_is_cocycle;
    certs["reduction"] = g.reduction;
    certs["quasi_cocycle"] = g.quasi_cocycle;
    certs["extendible"] = g.extendible;
    certs["tilde_restricts"] = g.tilde_restricts;
    certs["u_matches_tilde"] = g.u_matches_tilde;
    certs["u_cocycle_in_F"] = g.u_cocycle_in_F;
    certs["u_multiplier"] = g.u_multiplier;
    certs["u_preserves_b"] = g.u_preserves_b;
    certs["u_restricts"] = g.u_restricts;
    certs["model_cocycle"] = g.model_cocycle;
    certs["model_matches_u"] = g.model_matches_u;
    certs["model_restricts"] = g.model_restricts;
    certs["detail"] = g.detail;
    report["certificates"] = std::move(certs);

    report["w_prime"] = parcoh::cochain_to_json(a.spec, gl.reduction.w_prime);
    report["epsilon"] = parcoh::cochain_to_json(a.spec, gl.reduction.eps);
    Json tilde = Json::object();
    {
        parcoh::TupleIndexer ixn(a.spec.group->order(), w.n);
        for (long long t = 0; t < ixn.count(); ++t) {
            if (parcoh::vec_is_zero(gl.w_tilde[t])) continue;
            std::vector<int> tuple = ixn.tuple(t);
            std::string key;
            for (std::size_t i = 0; i < tuple.size(); ++i)
                key += (i ? "," : "") + std::to_string(tuple[i]);
            tilde[key] = parcoh::vec_to_json(gl.w_tilde[t]);
        }
    }
    report["w_tilde"] = Json{{"n", w.n}, {"entries", std::move(tilde)}};
    report["u"] = parcoh::cochain_to_json(model_spec, parcoh::PartialCochain{gl.u_model.n, gl.u_model.values});
    report["model_block_dims"] = env.model().block_dims;
    report["all_passed"] = gl.certs.ok();
    return emit(c, report);
}

int cmd_envelope(const RunConfig& c) {
    LoadedAction a = load_action(c);
    parcoh::Envelope env(a.spec, c.permuted);
    parcoh::EnvelopeReport er = parcoh::certify_envelope(env);

    Json report;
    report["config"] = config_json(c);
    Json orbits = Json::array();
    for (const auto& o : env.orbit_data().orbits)
        orbits.push_back(Json{{"blocks", o.blocks},
                              {"base", o.base},
                              {"stabilizer", o.stabilizer},
                              {"lambda_prime", o.lambda_prime},
                              {"lambda", o.lambda}});
    report["orbits"] = std::move(orbits);
    report["model"] =
        Json{{"blocks", env.model().blocks()}, {"dim", env.model().dim},
             {"block_dims", env.model().block_dims}};
    Json certs;
    certs["multiplicative"] = er.multiplicative;
    certs["embed_injective"] = er.embed_injective;
    certs["image_is_b"] = er.image_is_b;
    certs["beta_preserves_b"] = er.beta_preserves_b;
    certs["intertwines"] = er.intertwines;
    certs["algebra_map"] = er.algebra_map;
    certs["unital"] = er.unital;
    certs["phi_injective"] = er.phi_injective;
    certs["phi_morphism"] = er.phi_morphism;
    certs["model_is_group_action"] = er.model_is_group_action;
    certs["global_collapse"] = er.global_collapse;
    certs["detail"] = er.detail;
    report["certificates"] = std::move(certs);
    report["all_passed"] = er.ok();
    return emit(c, report);
}

int cmd_verify(const RunConfig& c) {
    LoadedAction a = load_action(c);
    const parcoh::PartialActionSpec& spec = a.spec;
    Json report;
    report["config"] = config_json(c);
    bool all = true;

    auto section = [&](const std::string& name, bool passed, const std::string& detail) {
        report[name] = Json{{"passed", passed}, {"detail", detail}};
        all = all && passed;
    };

    {
        parcoh::ValidationIssue vi = parcoh::validate(spec);
        section("action_axioms", vi.ok(), vi.message);
    }
    {
        parcoh::KParModule pm = parcoh::KParModule::induced(spec);
        parcoh::ValidationIssue vi = pm.validate();
        section("partial_representation", vi.ok(), vi.message);
    }
    {
        int levels = std::min(c.degree, 2);
        std::string detail;
        bool ok = true;
        try {
            parcoh::Resolution res(*spec.group, spec.algebra.field, levels, c.guard_dim);
            parcoh::ValidationIssue vi = res.certify();
            ok = vi.ok();
            detail = vi.message;
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        section("resolution", ok, detail);
    }

    parcoh::KParModule pm = parcoh::KParModule::induced(spec);
    Json dims = Json::array();
    {
        bool ok = true;
        std::string detail;
        for (int n = 0; n <= c.degree; ++n) {
            guard_degree(spec, n, c.guard_dim);
            parcoh::CohomologyResult r = parcoh::cohomology(pm, n);
            dims.push_back(Json{{"n", n},
                                {"cochain", r.cochain_dim},
                                {"cocycle", r.cocycle_dim},
                                {"coboundary", r.coboundary_dim},
                                {"h", r.h_dim}});
        }
        section("cohomology_computed", ok, detail);
    }
    report["dims"] = std::move(dims);

    {
        parcoh::DerivationSpaces ds = parcoh::derivation_spaces(pm);
        section("h1_derivations", ds.identities_hold(),
                ds.identities_hold() ? ""
                                     : "dim D " + std::to_string(ds.d_dim) + ", PD " +
                                           std::to_string(ds.pd_dim) + ", Der " +
                                           std::to_string(ds.der_dim) + ", H^1 " +
                                           std::to_string(ds.h1_dim));
    }
    if (spec.algebra.field.is_prime_field()) {
        parcoh::H0Comparison h0 = parcoh::h0_comparison(spec, c.guard_dim);
        section("h0_units", h0.ok(), h0.ok() ? "" : "unit groups differ");
    }

    bool multiplicative = spec.is_multiplicative();
    if (multiplicative) {
        parcoh::Envelope env(spec, c.permuted);
        {
            parcoh::EnvelopeReport er = parcoh::certify_envelope(env);
            section("envelope", er.ok(), er.detail);
        }
        {
            bool ok = true;
            std::string detail;
            for (int n = 1; n <= c.degree && ok; ++n) {
                parcoh::CohomologyResult r = parcoh::cohomology(pm, n);
                parcoh::CochainSpace cs(pm, n);
                for (const parcoh::Vec& z : r.cocycles.basis()) {
                    parcoh::PartialCochain w{n, cs.unpack(z)};
                    parcoh::LemmaReport lr = parcoh::verify_reduction_lemmas(env, w, c.seed);
                    if (!lr.ok()) {
                        ok = false;
                        detail = "degree " + std::to_string(n) + ":" + lr.detail;
                        break;
                    }
                    parcoh::TransversalComparison tc = parcoh::compare_transversals(spec, w);
                    if (!tc.differ_by_coboundary) {
                        ok = false;
                        detail = "transversal change not a coboundary at degree " + std::to_string(n);
                        break;
                    }
                }
            }
            section("reduction_lemmas", ok, detail);
        }
        {
            bool ok = true;
            std::string detail;
            for (int n = 0; n <= c.degree; ++n) {
                parcoh::IsoReport ir = parcoh::verify_iso(env, n);
                if (!ir.ok()) {
                    ok = false;
                    detail = "degree " + std::to_string(n) + ":" + ir.detail;
                    break;
                }
            }
            section("isomorphism", ok, detail);
        }
    } else {
        section("envelope", true, "skipped: action is not multiplicative");
    }

    report["all_passed"] = all;
    return emit(c, report);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact partial group cohomology and globalization certificates"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--field", cfg.field_text, "rational | q | prime p");
        sub->add_option("--seed", cfg.seed, "seed recorded in the report and used for sampled checks");
        sub->add_option("--guard-dim", cfg.guard_dim, "largest table the run may build")
            ->check(CLI::PositiveNumber);
        sub->add_option("--output,-o", cfg.output_path, "write the JSON report here");
    };

    CLI::App* sg = app.add_subcommand("semigroup", "enumerate S(G) and check its axioms");
    sg->add_option("--group", cfg.group_arg, "group JSON file or family string")->required();
    add_common(sg);

    CLI::App* coh = app.add_subcommand("cohomology", "partial cohomology of an action");
    coh->add_option("--action", cfg.action_path, "action JSON file")->required();
    coh->add_option("--degree,-n", cfg.degree, "degree n")->check(CLI::NonNegativeNumber);
    add_common(coh);

    CLI::App* gl = app.add_subcommand("globalize", "globalize a partial cocycle");
    gl->add_option("--action", cfg.action_path, "action JSON file")->required();
    gl->add_option("--cocycle", cfg.cocycle_path, "cocycle JSON file")->required();
    gl->add_option("--degree,-n", cfg.degree, "degree n")->check(CLI::NonNegativeNumber);
    gl->add_flag("--transversal-permutation", cfg.permuted, "use the permuted coset transversal");
    add_common(gl);

    CLI::App* env = app.add_subcommand("envelope", "build and certify the enveloping action");
    env->add_option("--action", cfg.action_path, "action JSON file")->required();
    env->add_flag("--transversal-permutation", cfg.permuted, "use the permuted coset transversal");
    add_common(env);

    CLI::App* ver = app.add_subcommand("verify", "full certificate bundle up to --degree");
    ver->add_option("--action", cfg.action_path, "action JSON file")->required();
    ver->add_option("--degree,-n", cfg.degree, "largest degree checked")->check(CLI::NonNegativeNumber);
    ver->add_flag("--transversal-permutation", cfg.permuted, "use the permuted coset transversal");
    add_common(ver);

    CLI11_PARSE(app, argc, argv);

    try {
        if (sg->parsed()) { cfg.command = "semigroup"; return cmd_semigroup(cfg); }
        if (coh->parsed()) { cfg.command = "cohomology"; return cmd_cohomology(cfg); }
        if (gl->parsed()) { cfg.command = "globalize"; return cmd_globalize(cfg); }
        if (env->parsed()) { cfg.command = "envelope"; return cmd_envelope(cfg); }
        if (ver->parsed()) { cfg.command = "verify"; return cmd_verify(cfg); }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
