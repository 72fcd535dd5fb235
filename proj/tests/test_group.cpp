#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "parcoh/group.hpp"

using namespace parcoh;

TEST_CASE("families have the right shape") {
    CHECK(GroupTable::cyclic(4).order() == 4);
    CHECK(GroupTable::dihedral(3).order() == 6);
    CHECK(GroupTable::symmetric(3).order() == 6);
    GroupTable v = GroupTable::product(GroupTable::cyclic(2), GroupTable::cyclic(2));
    CHECK(v.order() == 4);
    for (int x = 0; x < 4; ++x) CHECK(v.mul(x, x) == 0); /* Klein: every element an involution */

    GroupTable s3 = GroupTable::symmetric(3);
    bool abelian = true;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) abelian = abelian && s3.mul(a, b) == s3.mul(b, a);
    CHECK_FALSE(abelian);
}

TEST_CASE("named family strings parse") {
    CHECK(GroupTable::named("cyclic(6)").order() == 6);
    CHECK(GroupTable::named("dihedral(4)").order() == 8);
    CHECK(GroupTable::named("product(cyclic(2),cyclic(3))").order() == 6);
    CHECK_THROWS(GroupTable::named("sporadic(1)"));
}

TEST_CASE("from_table validates and normalizes") {
    /* Z/2 written with the identity at position 1 gets relabeled to 0 */
    GroupTable g = GroupTable::from_table({{0, 1}, {1, 0}}, {"e", "t"});
    CHECK(g.mul(0, 0) == 0);
    CHECK(g.inv(1) == 1);
    CHECK_THROWS(GroupTable::from_table({{0, 1}, {0, 1}}));       /* no inverses */
    CHECK_THROWS(GroupTable::from_table({{0, 1}, {1, 2}}));       /* out of range */
}

TEST_CASE("group axioms hold on every family") {
    for (const GroupTable& g : {GroupTable::cyclic(5), GroupTable::dihedral(3),
                                GroupTable::symmetric(3)}) {
        for (int a = 0; a < g.order(); ++a) {
            CHECK(g.mul(a, g.inv(a)) == 0);
            CHECK(g.mul(0, a) == a);
            for (int b = 0; b < g.order(); ++b)
                for (int c = 0; c < g.order(); ++c)
                    CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
        }
    }
}

TEST_CASE("word products") {
    GroupTable g = GroupTable::cyclic(5);
    CHECK(g.word({}) == 0);
    CHECK(g.word({2, 3}) == 0);
    CHECK(g.word({1, 1, 1}) == 3);
}

TEST_CASE("subgroups close and reject non-subgroups") {
    GroupTable s3 = GroupTable::symmetric(3);
    Subgroup whole = Subgroup::whole(s3);
    CHECK(whole.order() == 6);
    CHECK(Subgroup::trivial(s3).order() == 1);
    /* the three-cycles and identity form A_3 */
    Subgroup a3 = Subgroup::generated(s3, {s3.mul(2, 1)});
    bool found = false;
    for (int x = 0; x < 6 && !found; ++x) {
        Subgroup gen = Subgroup::generated(s3, {x});
        found = gen.order() == 3;
    }
    CHECK(found);
    /* a three-cycle together with the identity alone is not closed */
    int c3 = 0;
    for (int x = 1; x < 6; ++x)
        if (s3.mul(x, x) != 0) c3 = x;
    CHECK_THROWS(Subgroup(s3, {0, c3}));
    (void)a3;
}

TEST_CASE("transversal reps, bar, eta") {
    GroupTable s3 = GroupTable::symmetric(3);
    int three_cycle = -1;
    for (int x = 1; x < 6; ++x)
        if (s3.mul(x, s3.mul(x, x)) == 0 && x != 0) { three_cycle = x; break; }
    REQUIRE(three_cycle > 0);
    Subgroup a3 = Subgroup::generated(s3, {three_cycle});
    REQUIRE(a3.order() == 3);

    for (bool permuted : {false, true}) {
        Transversal t(a3, permuted);
        CHECK(t.reps().size() == 2);
        CHECK(t.reps()[0] == 0); /* H itself is always represented by 1 */
        for (int x = 0; x < 6; ++x) {
            CHECK(t.bar(t.bar(x)) == t.bar(x));
            int e = t.eta(x);
            CHECK(a3.contains(e));
            CHECK(s3.mul(x, e) == t.bar(x)); /* x * eta(x) = bar(x) */
        }
    }
}

TEST_CASE("tuple indexer is a bijection, g1 most significant") {
    TupleIndexer ix(3, 2);
    CHECK(ix.count() == 9);
    CHECK(ix.index({0, 0}) == 0);
    CHECK(ix.index({0, 1}) == 1);
    CHECK(ix.index({1, 0}) == 3);
    for (long long t = 0; t < ix.count(); ++t) CHECK(ix.index(ix.tuple(t)) == t);
    TupleIndexer ix0(4, 0);
    CHECK(ix0.count() == 1);
    CHECK(ix0.tuple(0).empty());
}
