#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "parcoh/corpus.hpp"
#include "parcoh/globalization.hpp"
#include "parcoh/rng.hpp"

#include <stdexcept>

using namespace parcoh;

namespace {

std::vector<PartialCochain> kernel_cocycles(const KParModule& m, int n) {
    CohomologyResult r = cohomology(m, n);
    CochainSpace cn(m, n);
    std::vector<PartialCochain> out;
    for (const Vec& z : r.cocycles.basis()) out.push_back({n, cn.unpack(z)});
    return out;
}

BarCochain bar_sub(const GModule& gm, const BarCochain& a, const BarCochain& b) {
    BarCochain out{a.n, a.values};
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = vec_sub(out.values[i], b.values[i]);
    (void)gm;
    return out;
}

} // namespace

TEST_CASE("envelope certifies for every multiplicative corpus action") {
    for (const CorpusEntry& e : globalization_corpus()) {
        CAPTURE(e.name);
        for (bool permuted : {false, true}) {
            Envelope env(e.spec, permuted);
            EnvelopeReport rep = certify_envelope(env);
            CHECK_MESSAGE(rep.ok(), e.name, ": ", rep.detail);
            /* the model really is a global action and an honest G-module */
            CHECK(env.model_action().is_global());
            CHECK(validate(env.model_action()).ok());
            CHECK(env.model_module().validate().ok());
        }
    }
}

TEST_CASE("model shapes: one base-block copy per coset representative") {
    Field q = Field::rationals();
    Field f2 = Field::prime(2);
    GroupTable z2 = GroupTable::cyclic(2);
    GroupTable z3 = GroupTable::cyclic(3);

    PartialActionSpec empty_spec = empty_domains(z2, q, 1);
    Envelope empty(empty_spec);
    CHECK(empty.model().blocks() == 2); /* Lambda' = G over the trivial stabilizer */
    CHECK(empty.model().dim == 2);

    PartialActionSpec oneblock_spec = restrict_global(regular_global(z3, f2), {0});
    Envelope oneblock(oneblock_spec);
    CHECK(oneblock.model().blocks() == 3);

    /* a global action collapses: B = phi(A) */
    PartialActionSpec swap_spec = scaled_swap(z2, q, Scalar::one(q));
    Envelope swap(swap_spec);
    CHECK(swap.model().dim == 2);
    CHECK(certify_envelope(swap).global_collapse);
}

TEST_CASE("non-multiplicative actions are rejected up front") {
    GroupTable z2 = GroupTable::cyclic(2);
    Field q = Field::rationals();
    PartialActionSpec scaled = scaled_swap(z2, q, Scalar(q, 2));
    REQUIRE(validate(scaled).ok());
    REQUIRE_FALSE(scaled.is_multiplicative());
    CHECK_THROWS_AS(Envelope{scaled}, std::invalid_argument);
}

TEST_CASE("globalize rejects a non-cocycle with its residual") {
    GroupTable z2 = GroupTable::cyclic(2);
    Field q = Field::rationals();
    PartialActionSpec spec = scaled_swap(z2, q, Scalar::one(q));
    Envelope env(spec);
    PartialCochain w{1, {vec_zero(q, 2), vec_unit(q, 2, 0)}}; /* delta w (r,r) = (1,1) */
    CHECK_THROWS_AS(globalize(env, w), std::invalid_argument);
}

TEST_CASE("phi and the embedding invert where the theorems promise") {
    GroupTable z3 = GroupTable::cyclic(3);
    Field q = Field::rationals();
    PartialActionSpec spec = restrict_global(regular_global(z3, q), {0, 1});
    Envelope env(spec);
    Rng rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        Vec a = rng.vec(q, spec.algebra.dim);
        Vec back = env.restrict_element(env.phi_model().apply(a));
        CHECK(back == a);
        /* T^{-1} T = id on the model */
        Vec mvec = rng.vec(q, env.model().dim);
        CHECK(env.model_from_F(env.embed_apply(mvec)) == mvec);
    }
    /* beta_F shifts slots: (beta_g f)(t) = f(g^{-1} t) */
    Vec f = rng.vec(q, env.f_dim());
    Vec shifted = env.beta_F(1, f);
    int d = spec.algebra.dim;
    for (int t = 0; t < 3; ++t) {
        int s = z3.mul(z3.inv(1), t);
        for (int i = 0; i < d; ++i) CHECK(shifted[t * d + i] == f[s * d + i]);
    }
}

TEST_CASE("reduction theorem and lemma pack on every kernel cocycle") {
    for (const CorpusEntry& e : globalization_corpus()) {
        CAPTURE(e.name);
        KParModule m = KParModule::induced(e.spec);
        Envelope env(e.spec);
        int top = e.spec.group->order() <= 4 ? 2 : 2;
        for (int n = 1; n <= top; ++n) {
            for (const PartialCochain& w : kernel_cocycles(m, n)) {
                ReductionData red = build_w_prime_epsilon(env, w);
                CHECK(red.reduction_holds);
                TildeData tilde = build_w_tilde(env, w, red);
                CHECK(tilde.quasi_cocycle);
                CHECK(tilde.extendible);
                CHECK(tilde.restricts);
                LemmaReport lem = verify_reduction_lemmas(env, w, 2026);
                CHECK_MESSAGE(lem.ok(), e.name, ": ", lem.detail);
                TransversalComparison tc = compare_transversals(e.spec, w);
                CHECK(tc.w_prime_identical);
                CHECK(tc.differ_by_coboundary);
            }
        }
    }
}

TEST_CASE("globalize certifies end to end on cohomology representatives") {
    for (const CorpusEntry& e : globalization_corpus()) {
        CAPTURE(e.name);
        KParModule m = KParModule::induced(e.spec);
        Envelope env(e.spec);
        for (int n = 0; n <= 2; ++n) {
            for (const PartialCochain& w : cohomology(m, n).representatives) {
                Globalization g = globalize(env, w);
                CHECK_MESSAGE(g.certs.ok(), e.name, ": ", g.certs.detail);
                /* the returned model cochain restricts back to w */
                PartialCochain back = restrict_cochain(env, g.u_model);
                REQUIRE(back.values.size() == w.values.size());
                for (std::size_t t = 0; t < w.values.size(); ++t)
                    CHECK(back.values[t] == w.values[t]);
            }
        }
    }
}

TEST_CASE("degree zero takes the literal route") {
    GroupTable z2 = GroupTable::cyclic(2);
    Field q = Field::rationals();
    PartialActionSpec spec = scaled_swap(z2, q, Scalar::one(q));
    KParModule m = KParModule::induced(spec);
    Envelope env(spec);
    CohomologyResult h0 = cohomology(m, 0);
    REQUIRE(h0.h_dim == 1); /* the diagonal */
    Globalization g = globalize(env, h0.representatives[0]);
    CHECK(g.certs.ok());
    CHECK(g.u_model.n == 0);
    IsoReport iso = verify_iso(env, 0);
    CHECK_MESSAGE(iso.ok(), iso.detail);
    CHECK(iso.h_par == 1);
    CHECK(iso.h_classical == 1);
}

TEST_CASE("cohomologous globalizations and the constructive witness") {
    GroupTable z3 = GroupTable::cyclic(3);
    Field q = Field::rationals();
    PartialActionSpec spec = restrict_global(regular_global(z3, q), {0, 1});
    KParModule m = KParModule::induced(spec);
    Envelope env(spec);
    GModule gm = env.model_module();

    CochainSpace c0(m, 0), c1(m, 1);
    Rng rng(31337);
    std::vector<PartialCochain> zs = kernel_cocycles(m, 1);
    REQUIRE_FALSE(zs.empty());
    const PartialCochain& w1 = zs.front();

    /* w2 = w1 + delta xi globalizes to a cohomologous cocycle */
    PartialCochain xi{0, c0.unpack(rng.vec(q, c0.dim()))};
    PartialCochain dxi = coboundary_apply(m, xi);
    PartialCochain w2{1, w1.values};
    for (std::size_t t = 0; t < w2.values.size(); ++t)
        w2.values[t] = vec_add(w2.values[t], dxi.values[t]);

    Globalization g1 = globalize(env, w1);
    Globalization g2 = globalize(env, w2);
    REQUIRE(g1.certs.ok());
    REQUIRE(g2.certs.ok());

    std::optional<BarCochain> lin = cohomologous(gm, g1.u_model, g2.u_model);
    REQUIRE(lin.has_value());

    ConstructiveWitness cw = cohomologous_constructive(env, g1.u_model, g2.u_model, &xi);
    CHECK(cw.ok());
    /* the witness is exact: u2 - u1 = bar-delta xi */
    BarCochain diff = bar_sub(gm, g2.u_model, g1.u_model);
    BarCochain dxi_bar = bar_coboundary_apply(gm, cw.xi);
    REQUIRE(dxi_bar.values.size() == diff.values.size());
    for (std::size_t t = 0; t < diff.values.size(); ++t)
        CHECK(dxi_bar.values[t] == diff.values[t]);

    /* same cocycle twice: the witness is a bar cocycle of degree zero */
    ConstructiveWitness same = cohomologous_constructive(env, g1.u_model, g1.u_model);
    CHECK(same.ok());
    for (const Vec& v : bar_coboundary_apply(gm, same.xi).values) CHECK(vec_is_zero(v));
}

TEST_CASE("the restriction map is an isomorphism degree by degree") {
    for (const CorpusEntry& e : globalization_corpus()) {
        CAPTURE(e.name);
        Envelope env(e.spec);
        int top = e.spec.group->order() <= 2 ? 3 : 2;
        for (int n = 0; n <= top; ++n) {
            IsoReport iso = verify_iso(env, n);
            CHECK_MESSAGE(iso.ok(), e.name, " n=", n, ": ", iso.detail);
            CHECK(iso.h_par == iso.h_classical);
        }
    }
}

TEST_CASE("two-orbit actions globalize orbitwise") {
    GroupTable z2 = GroupTable::cyclic(2);
    Field q = Field::rationals();
    PartialActionSpec spec = direct_sum(scaled_swap(z2, q, Scalar::one(q)),
                                        empty_domains(z2, q, 1));
    Envelope env(spec);
    REQUIRE(env.orbit_data().orbits.size() == 2);
    CHECK(env.model().blocks() == 4); /* two coset copies per orbit */
    KParModule m = KParModule::induced(spec);
    CHECK(cohomology(m, 0).h_dim == 2);
    IsoReport iso = verify_iso(env, 1);
    CHECK_MESSAGE(iso.ok(), iso.detail);
}
