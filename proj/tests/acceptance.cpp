/* Acceptance gate: ten certified criteria, one pass/fail line each.
   Usage: acceptance <path-to-parcoh-cli>
   Exit code 0 iff every criterion passes inside its runtime budget. */

#include "parcoh/classical.hpp"
#include "parcoh/corpus.hpp"
#include "parcoh/globalization.hpp"
#include "parcoh/json_io.hpp"
#include "parcoh/resolution.hpp"
#include "parcoh/rng.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace parcoh;

namespace {

/* ---- independent closure oracle for S(G): pairs (E, g), {1,g} <= E <= G,
   (E,g)(F,h) = (E u gF, gh) ---- */
using Pair = std::pair<std::set<int>, int>;

Pair oracle_mul(const GroupTable& g, const Pair& a, const Pair& b) {
    std::set<int> e = a.first;
    for (int h : b.first) e.insert(g.mul(a.second, h));
    return {std::move(e), g.mul(a.second, b.second)};
}

std::set<Pair> oracle_closure(const GroupTable& g) {
    std::set<Pair> done;
    std::vector<Pair> frontier;
    for (int x = 0; x < g.order(); ++x) {
        Pair gen{{0, x}, x};
        if (done.insert(gen).second) frontier.push_back(gen);
    }
    while (!frontier.empty()) {
        Pair a = frontier.back();
        frontier.pop_back();
        for (const Pair& b : std::set<Pair>(done))
            for (const Pair& p : {oracle_mul(g, a, b), oracle_mul(g, b, a)})
                if (done.insert(p).second) frontier.push_back(p);
    }
    return done;
}

Pair to_pair(const GroupTable& g, const ExelElement& s) {
    std::set<int> e{0, s.tail};
    for (int h = 0; h < g.order(); ++h)
        if (s.idem >> h & 1) e.insert(h);
    return {std::move(e), s.tail};
}

bool fail(std::string& why, const std::string& msg) {
    if (why.empty()) why = msg;
    return false;
}

/* ---- criterion bodies ---- */

bool semigroup_suite(std::string& why) {
    struct Row {
        GroupTable g;
        int expected;
    };
    std::vector<Row> rows;
    rows.push_back({GroupTable::cyclic(2), 3});
    rows.push_back({GroupTable::cyclic(3), 8});
    rows.push_back({GroupTable::cyclic(4), 20});
    rows.push_back({GroupTable::product(GroupTable::cyclic(2), GroupTable::cyclic(2)), 20});
    rows.push_back({GroupTable::symmetric(3), 112});
    for (const Row& r : rows) {
        ExelSemigroup s(r.g);
        if (s.size() != r.expected) return fail(why, r.g.description() + ": size");
        std::set<Pair> oracle = oracle_closure(r.g);
        std::set<Pair> mapped;
        for (const ExelElement& e : s.elements()) mapped.insert(to_pair(r.g, e));
        if (mapped != oracle) return fail(why, r.g.description() + ": element sets differ");
        /* inverse-semigroup axioms, exhaustively */
        for (const ExelElement& a : s.elements()) {
            ExelElement ai = s.inverse(a);
            if (s.multiply(s.multiply(a, ai), a) != a) return fail(why, "s s^-1 s != s");
            if (s.multiply(s.multiply(ai, a), ai) != ai) return fail(why, "s^-1 s s^-1 != s^-1");
        }
        for (const ExelElement& e : s.idempotents())
            for (const ExelElement& f : s.idempotents())
                if (s.multiply(e, f) != s.multiply(f, e)) return fail(why, "idempotents do not commute");
        /* defining relations of the generators */
        for (int g = 0; g < r.g.order(); ++g) {
            if (s.multiply(s.generator(g), s.generator(0)) != s.generator(g))
                return fail(why, "[g][1] != [g]");
            for (int h = 0; h < r.g.order(); ++h) {
                ExelElement gi = s.generator(r.g.inv(g)), gg = s.generator(g), hh = s.generator(h);
                ExelElement gh = s.generator(r.g.mul(g, h)), hi = s.generator(r.g.inv(h));
                if (s.multiply(s.multiply(gi, gg), hh) != s.multiply(gi, gh))
                    return fail(why, "[g^-1][g][h] != [g^-1][gh]");
                if (s.multiply(s.multiply(gg, hh), hi) != s.multiply(gh, hi))
                    return fail(why, "[g][h][h^-1] != [gh][h^-1]");
            }
        }
    }
    return true;
}

bool resolution_suite(std::string& why) {
    Field q = Field::rationals();
    Rng rng(20260814);
    for (const auto& g : small_groups()) {
        Resolution res(*g, q, 3); /* certifies n <= 2 homotopy and boundary^2 */
        ValidationIssue issue = res.certify();
        if (!issue.ok()) return fail(why, g->description() + ": " + issue.message);
        PartialActionSpec spec = restrict_global(regular_global(*g, q), {0});
        KParModule m = KParModule::induced(spec);
        int count = 0;
        for (int n = 0; n <= 2; ++n) {
            CochainSpace cn(m, n);
            for (int trial = 0; trial < 7; ++trial) {
                PartialCochain f{n, cn.unpack(rng.vec(q, cn.dim()))};
                ValidationIssue t = res.certify_hom_transport(m, f);
                if (!t.ok()) return fail(why, g->description() + ": " + t.message);
                ++count;
            }
        }
        if (count < 20) return fail(why, "not enough transport samples");
    }
    return true;
}

bool complex_suite(std::string& why) {
    for (const CorpusEntry& e : cohomology_corpus()) {
        KParModule m = KParModule::induced(e.spec);
        int top = e.spec.group->order() <= 4 ? 3 : 2;
        std::vector<CochainSpace> spaces;
        for (int n = 0; n <= top + 1; ++n) spaces.emplace_back(m, n);
        for (int n = 0; n <= top; ++n) {
            for (int j = 0; j < spaces[n].dim(); ++j) {
                PartialCochain f{n, spaces[n].unpack(vec_unit(m.field(), spaces[n].dim(), j))};
                PartialCochain df = coboundary_apply(m, f);
                if (!spaces[n + 1].pack(df.values).has_value())
                    return fail(why, e.name + ": delta escapes the constraint subspace");
                for (const Vec& v : coboundary_apply(m, df).values)
                    if (!vec_is_zero(v)) return fail(why, e.name + ": delta delta != 0");
            }
        }
    }
    return true;
}

bool degeneracy_oracle(std::string& why) {
    for (const CorpusEntry& e : global_corpus()) {
        KParModule m = KParModule::induced(e.spec);
        std::vector<Matrix> betas;
        for (int g = 0; g < e.spec.group->order(); ++g) betas.push_back(m.pi(g));
        GModule gm(*e.spec.group, m.field(), std::move(betas));
        if (!gm.validate().ok()) return fail(why, e.name + ": oracle module invalid");
        std::vector<int> par_dims;
        for (int n = 0; n <= 3; ++n) {
            int hp = cohomology(m, n).h_dim;
            int hc = classical_cohomology(gm, n).h_dim;
            if (hp != hc) return fail(why, e.name + ": partial/bar dims differ at n=" + std::to_string(n));
            par_dims.push_back(hp);
        }
        if (e.name == "z2-trivial-f2" && par_dims != std::vector<int>{1, 1, 1, 1})
            return fail(why, "Z/2 on F_2 should give (1,1,1,1)");
        if (e.name == "z2-trivial-q" && par_dims != std::vector<int>{1, 0, 0, 0})
            return fail(why, "Z/2 on Q should give (1,0,0,0)");
    }
    return true;
}

bool h1_interpretation(std::string& why) {
    for (const CorpusEntry& e : cohomology_corpus()) {
        KParModule m = KParModule::induced(e.spec);
        DerivationSpaces d = derivation_spaces(m);
        if (d.d_dim - d.pd_dim != d.h1_dim) return fail(why, e.name + ": dim D - dim PD != dim H^1");
        if (d.der_dim != d.d_dim) return fail(why, e.name + ": dim Der != dim D");
        if (d.h1_dim != cohomology(m, 1).h_dim) return fail(why, e.name + ": H^1 mismatch");
    }
    return true;
}

bool h0_units(std::string& why) {
    for (const CorpusEntry& e : finite_field_corpus()) {
        H0Comparison c = h0_comparison(e.spec);
        if (!c.ok()) return fail(why, e.name + ": unit comparison failed");
    }
    return true;
}

std::vector<PartialCochain> kernel_cocycles(const KParModule& m, int n) {
    CohomologyResult r = cohomology(m, n);
    CochainSpace cn(m, n);
    std::vector<PartialCochain> out;
    for (const Vec& z : r.cocycles.basis()) out.push_back({n, cn.unpack(z)});
    return out;
}

std::vector<const CorpusEntry*> transitive_entries(const std::vector<CorpusEntry>& corpus) {
    std::vector<const CorpusEntry*> out;
    for (const CorpusEntry& e : corpus)
        if (orbit_data(e.spec).transitive()) out.push_back(&e);
    return out;
}

bool reduction_theorem(std::string& why, const std::vector<CorpusEntry>& corpus) {
    for (const CorpusEntry* e : transitive_entries(corpus)) {
        KParModule m = KParModule::induced(e->spec);
        Envelope env(e->spec);
        for (int n = 1; n <= 3; ++n) {
            std::vector<PartialCochain> zs = kernel_cocycles(m, n);
            for (const PartialCochain& w : zs) {
                ReductionData red = build_w_prime_epsilon(env, w);
                if (!red.reduction_holds) return fail(why, e->name + ": w != delta eps + w'");
                LemmaReport lem = verify_reduction_lemmas(env, w, 20260814);
                if (!lem.ok()) return fail(why, e->name + ": " + lem.detail);
            }
            if (n <= 2 && !zs.empty()) {
                TransversalComparison tc = compare_transversals(e->spec, zs.front());
                if (!tc.w_prime_identical || !tc.differ_by_coboundary)
                    return fail(why, e->name + ": transversal dependence detected");
            }
        }
    }
    return true;
}

bool globalization_suite(std::string& why, const std::vector<CorpusEntry>& corpus) {
    Rng rng(424242);
    for (const CorpusEntry* e : transitive_entries(corpus)) {
        KParModule m = KParModule::induced(e->spec);
        Envelope env(e->spec);
        GModule gm = env.model_module();
        for (int n = 0; n <= 3; ++n) {
            std::vector<PartialCochain> zs = kernel_cocycles(m, n);
            for (const PartialCochain& w : zs) {
                Globalization g = globalize(env, w);
                if (!g.certs.ok()) return fail(why, e->name + ": " + g.certs.detail);
            }
            if (n == 0 || zs.empty()) continue;
            /* cohomologous inputs globalize to cohomologous outputs */
            CochainSpace prev(m, n - 1);
            PartialCochain xi{n - 1, prev.unpack(rng.vec(m.field(), prev.dim()))};
            PartialCochain dxi = coboundary_apply(m, xi);
            PartialCochain w2{n, zs.front().values};
            for (std::size_t t = 0; t < w2.values.size(); ++t)
                w2.values[t] = vec_add(w2.values[t], dxi.values[t]);
            BarCochain u1 = globalize(env, zs.front()).u_model;
            BarCochain u2 = globalize(env, w2).u_model;
            if (!cohomologous(gm, u1, u2).has_value())
                return fail(why, e->name + ": globalizations not cohomologous at n=" + std::to_string(n));
            ConstructiveWitness cw = cohomologous_constructive(env, u1, u2, &xi);
            if (!cw.ok()) return fail(why, e->name + ": constructive witness failed");
        }
    }
    return true;
}

bool main_isomorphism(std::string& why, const std::vector<CorpusEntry>& corpus) {
    auto find = [&](const std::string& name) -> const CorpusEntry* {
        for (const CorpusEntry& e : corpus)
            if (e.name == name) return &e;
        return nullptr;
    };
    struct Case {
        const char* name;
        int top;
        std::vector<int> pinned; /* empty = dims not pinned here */
    };
    for (const Case& c : {Case{"z2-empty-q", 3, {1, 0, 0, 0}},
                          Case{"z3-oneblock-f2", 2, {}},
                          Case{"z2-two-orbit-q", 3, {}}}) {
        const CorpusEntry* e = find(c.name);
        if (!e) return fail(why, std::string(c.name) + " missing from corpus");
        Envelope env(e->spec);
        for (int n = 0; n <= c.top; ++n) {
            IsoReport iso = verify_iso(env, n);
            if (!iso.ok()) return fail(why, std::string(c.name) + " n=" + std::to_string(n) + ": " + iso.detail);
            if (iso.h_par != iso.h_classical)
                return fail(why, std::string(c.name) + ": dims differ at n=" + std::to_string(n));
            if (!c.pinned.empty() && iso.h_par != c.pinned[n])
                return fail(why, std::string(c.name) + ": unexpected dim at n=" + std::to_string(n));
        }
    }
    return true;
}

bool determinism(std::string& why, const std::string& cli, const std::vector<CorpusEntry>& corpus) {
    if (cli.empty()) return fail(why, "usage: acceptance <path-to-parcoh-cli>");
    const CorpusEntry* e = nullptr;
    for (const CorpusEntry& c : corpus)
        if (c.name == "z2-two-orbit-q") e = &c;
    if (!e) return fail(why, "corpus entry missing");
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "parcoh-acceptance";
    fs::create_directories(dir);
    fs::path action = dir / "action.json";
    {
        std::ofstream out(action);
        out << action_to_json(e->spec).dump(2) << "\n";
    }
    auto read = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    std::string reports[2];
    for (int run = 0; run < 2; ++run) {
        fs::path out = dir / ("report" + std::to_string(run) + ".json");
        std::string cmd = "'" + cli + "' verify --action '" + action.string() +
                          "' --degree 2 --seed 90210 --output '" + out.string() + "' > /dev/null 2>&1";
        int rc = std::system(cmd.c_str());
        if (rc != 0) return fail(why, "verify exited nonzero on run " + std::to_string(run));
        reports[run] = read(out);
        if (reports[run].empty()) return fail(why, "empty report on run " + std::to_string(run));
    }
    if (reports[0] != reports[1]) return fail(why, "reports differ byte-for-byte");
    return true;
}

} // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";
    std::vector<CorpusEntry> corpus = globalization_corpus();

    struct Criterion {
        int id;
        const char* label;
        double budget;
        std::function<bool(std::string&)> run;
    };
    std::vector<Criterion> criteria = {
        {1, "semigroup enumeration matches the closure oracle", 10.0, semigroup_suite},
        {2, "resolution boundaries, homotopy, and hom transport", 60.0, resolution_suite},
        {3, "partial coboundary squares to zero", 30.0, complex_suite},
        {4, "global actions match the bar-complex oracle", 30.0, degeneracy_oracle},
        {5, "derivation spaces compute H^1", 30.0, h1_interpretation},
        {6, "H^0 units match the invariant units", 10.0, h0_units},
        {7, "reduction theorem and lemma identities", 120.0,
         [&](std::string& why) { return reduction_theorem(why, corpus); }},
        {8, "globalization certificates and uniqueness", 120.0,
         [&](std::string& why) { return globalization_suite(why, corpus); }},
        {9, "partial cohomology isomorphic to the model's", 180.0,
         [&](std::string& why) { return main_isomorphism(why, corpus); }},
        {10, "byte-identical verify reports for one seed", 60.0,
         [&](std::string& why) { return determinism(why, cli, corpus); }},
    };

    bool all = true;
    for (const Criterion& c : criteria) {
        std::string why;
        bool ok = false;
        auto start = std::chrono::steady_clock::now();
        try {
            ok = c.run(why);
        } catch (const std::exception& ex) {
            why = std::string("exception: ") + ex.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs >= c.budget) {
            ok = false;
            if (why.empty()) why = "over budget";
        }
        std::ostringstream line;
        line << (ok ? "PASS" : "FAIL") << ": criterion " << c.id << " — " << c.label << " ["
             << std::fixed << std::setprecision(2) << secs << "s / " << std::setprecision(0)
             << c.budget << "s]";
        if (!ok && !why.empty()) line << " — " << why;
        std::cout << line.str() << "\n";
        all = all && ok;
    }
    return all ? 0 : 1;
}
