#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "parcoh/corpus.hpp"
#include "parcoh/resolution.hpp"
#include "parcoh/rng.hpp"

using namespace parcoh;

TEST_CASE("resolution certifies for every group of order <= 4") {
    for (const auto& g : small_groups()) {
        CAPTURE(g->description());
        for (Field f : {Field::rationals(), Field::prime(2)}) {
            Resolution res(*g, f, 2);
            ValidationIssue issue = res.certify();
            CHECK_MESSAGE(issue.ok(), issue.message);
        }
    }
}

TEST_CASE("level bases grow with the semigroup, not the free module") {
    GroupTable g = GroupTable::cyclic(4);
    Resolution res(g, Field::rationals(), 2);
    /* level 0 basis = one generator () per idempotent-compatible s: all of S */
    CHECK(res.basis_size(0) == 20);
    CHECK(res.basis_size(-1) == 8); /* idempotents of S(Z/4) */
    /* level 1 keeps only s(g) with s e_{(g)} = s; strictly below |S| * |G| */
    CHECK(res.basis_size(1) < 20 * 4);
    for (const auto& b : res.basis(1)) {
        CHECK(static_cast<int>(b.tuple.size()) == 1);
        CHECK(res.canonicalize(b.s, b.tuple) == b);
    }
}

TEST_CASE("boundary of boundary vanishes coefficientwise") {
    GroupTable g = GroupTable::symmetric(3);
    Field f = Field::prime(3);
    Resolution res(g, f, 2);
    for (int idx = 0; idx < res.basis_size(2); ++idx) {
        Resolution::Chain acc;
        for (const auto& [mid, c] : res.boundary(2, idx))
            for (const auto& [low, d] : res.boundary(1, mid)) {
                auto [it, fresh] = acc.emplace(low, c * d);
                if (!fresh) it->second = it->second + c * d;
            }
        for (const auto& [low, c] : acc) CHECK(c.is_zero());
    }
}

TEST_CASE("hom transport intertwines pullback with the boundary") {
    Rng rng(4711);
    for (const CorpusEntry& e : cohomology_corpus()) {
        if (e.spec.group->order() > 4) continue;
        CAPTURE(e.name);
        KParModule m = KParModule::induced(e.spec);
        Resolution res(*e.spec.group, m.field(), 2);
        for (int n = 0; n <= 1; ++n) {
            CochainSpace cn(m, n);
            for (int trial = 0; trial < 3; ++trial) {
                PartialCochain f{n, cn.unpack(rng.vec(m.field(), cn.dim()))};
                ValidationIssue issue = res.certify_hom_transport(m, f);
                CHECK_MESSAGE(issue.ok(), issue.message);
            }
        }
    }
}
