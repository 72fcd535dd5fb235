#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "parcoh/corpus.hpp"
#include "parcoh/json_io.hpp"

#include <memory>
#include <stdexcept>

using namespace parcoh;

TEST_CASE("scalars travel as exact strings") {
    Field q = Field::rationals();
    Scalar half = Scalar(q, 1) / Scalar(q, -2);
    Json j = scalar_to_json(half);
    CHECK(j.get<std::string>() == "-1/2");
    CHECK(scalar_from_json(q, j) == half);
    CHECK(scalar_from_json(q, Json(7)) == Scalar(q, 7)); /* bare integers accepted */
    Field f5 = Field::prime(5);
    CHECK(scalar_from_json(f5, Json("13")) == Scalar(f5, 3));
    CHECK_THROWS_AS(scalar_from_json(q, Json("1/0")), std::domain_error);
    CHECK_THROWS(scalar_from_json(q, Json("pi")));
}

TEST_CASE("groups round-trip through tables and family strings") {
    for (const char* family : {"cyclic(4)", "symmetric(3)", "dihedral(4)",
                               "product(cyclic(2),cyclic(2))"}) {
        GroupTable g = group_from_json(Json(family));
        GroupTable back = group_from_json(group_to_json(g));
        REQUIRE(back.order() == g.order());
        for (int a = 0; a < g.order(); ++a)
            for (int b = 0; b < g.order(); ++b) CHECK(back.mul(a, b) == g.mul(a, b));
    }
    CHECK_THROWS_AS(group_from_json(Json("sporadic(1)")), std::invalid_argument);
    Json bad = {{"order", 2}, {"mul", {{0, 1}, {1, 1}}}};
    CHECK_THROWS(group_from_json(bad)); /* not a group table */
}

TEST_CASE("element lookup by index or by name") {
    GroupTable g = GroupTable::cyclic(3);
    CHECK(element_from_string(g, "2") == 2);
    CHECK(element_from_string(g, "r2") == 2);
    CHECK(element_from_string(g, "1") == 1); /* digits win over the name "1" */
    CHECK_THROWS_AS(element_from_string(g, "5"), std::invalid_argument);
    CHECK_THROWS_AS(element_from_string(g, "nope"), std::invalid_argument);
}

TEST_CASE("actions round-trip through JSON") {
    for (const CorpusEntry& e : cohomology_corpus()) {
        CAPTURE(e.name);
        Json j = action_to_json(e.spec);
        std::unique_ptr<GroupTable> g;
        PartialActionSpec back = action_from_json(j, g, e.spec.algebra.field);
        REQUIRE(validate(back).ok());
        CHECK(back.algebra.block_dims == e.spec.algebra.block_dims);
        CHECK(back.domain == e.spec.domain);
        CHECK(back.block_map == e.spec.block_map);
        for (int x = 0; x < e.spec.group->order(); ++x)
            CHECK(back.matrix_map[x] == e.spec.matrix_map[x]);
        /* serialization is deterministic */
        CHECK(action_to_json(back).dump() == j.dump());
    }
}

TEST_CASE("action parsing reports usable errors") {
    GroupTable z2 = GroupTable::cyclic(2);
    Field q = Field::rationals();
    Json j = action_to_json(scaled_swap(z2, q, Scalar::one(q)));
    std::unique_ptr<GroupTable> g;

    Json missing = j;
    missing.erase("blocks");
    CHECK_THROWS_AS(action_from_json(missing, g, q), std::exception);

    Json badblock = j;
    badblock["domains"]["1"] = Json::array({5});
    CHECK_THROWS_AS(action_from_json(badblock, g, q), std::invalid_argument);

    /* wrong matrix shapes parse but fail the axiom check */
    Json badshape = j;
    badshape["maps"]["1"]["0"] = Json::array({Json::array({"1", "0"})});
    PartialActionSpec parsed = action_from_json(badshape, g, q);
    ValidationIssue issue = validate(parsed);
    CHECK_FALSE(issue.ok());
    CHECK(issue.message.find("shape") != std::string::npos);
}

TEST_CASE("cochains round-trip sparsely") {
    GroupTable z2 = GroupTable::cyclic(2);
    Field q = Field::rationals();
    PartialActionSpec spec = scaled_swap(z2, q, Scalar::one(q));

    Json j = {{"n", 1}, {"entries", {{"1", {"-1", "1"}}}}};
    PartialCochain w = cochain_from_json(spec, j);
    REQUIRE(w.n == 1);
    REQUIRE(w.values.size() == 2);
    CHECK(vec_is_zero(w.values[0])); /* omitted tuple */
    CHECK(w.values[1] == Vec{Scalar(q, -1), Scalar(q, 1)});

    Json back = cochain_to_json(spec, w);
    CHECK(back["entries"].size() == 1); /* zero tuples stay omitted */
    CHECK(cochain_from_json(spec, back).values == w.values);

    /* names work as tuple keys too */
    Json named = {{"n", 1}, {"entries", {{"r", {"-1", "1"}}}}};
    CHECK(cochain_from_json(spec, named).values == w.values);

    /* degree zero uses the empty key */
    Json zero = {{"n", 0}, {"entries", {{"", {"2", "3"}}}}};
    PartialCochain w0 = cochain_from_json(spec, zero);
    CHECK(w0.values == std::vector<Vec>{Vec{Scalar(q, 2), Scalar(q, 3)}});

    CHECK_THROWS_AS(cochain_from_json(spec, Json{{"n", 1}, {"entries", {{"1,1", {"1", "0"}}}}}),
                    std::invalid_argument); /* arity mismatch */
    CHECK_THROWS_AS(cochain_from_json(spec, Json{{"n", 1}, {"entries", {{"1", {"1"}}}}}),
                    std::invalid_argument); /* wrong length */
}
