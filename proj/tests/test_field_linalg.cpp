#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "parcoh/field.hpp"
#include "parcoh/matrix.hpp"
#include "parcoh/rng.hpp"

using namespace parcoh;

TEST_CASE("rational scalars are exact") {
    Field q = Field::rationals();
    Scalar a = Scalar::fraction(q, 1, 3);
    Scalar b = Scalar::fraction(q, 1, 6);
    CHECK(a + b == Scalar::fraction(q, 1, 2));
    CHECK(a - a == Scalar::zero(q));
    CHECK(a * Scalar(q, 3) == Scalar::one(q));
    CHECK(a.inverse() == Scalar(q, 3));
    CHECK((a / b) == Scalar(q, 2));
    CHECK(Scalar::fraction(q, 2, 4) == Scalar::fraction(q, 1, 2));
    CHECK(Scalar::fraction(q, -1, 2).to_string() == "-1/2");
    /* 1/3 has no finite binary expansion; summing it 3 times must hit 1 */
    Scalar third = Scalar::fraction(q, 1, 3);
    CHECK(third + third + third == Scalar::one(q));
}

TEST_CASE("prime field arithmetic wraps") {
    Field f5 = Field::prime(5);
    Scalar a(f5, 3), b(f5, 4);
    CHECK(a + b == Scalar(f5, 2));
    CHECK(a * b == Scalar(f5, 2));
    CHECK((a - b) == Scalar(f5, 4));
    CHECK(a.inverse() * a == Scalar::one(f5));
    CHECK(Scalar(f5, -1) == Scalar(f5, 4));
    CHECK_THROWS(Scalar::zero(f5).inverse());
}

TEST_CASE("field parsing") {
    CHECK(Field::parse("rational") == Field::rationals());
    CHECK(Field::parse("q") == Field::rationals());
    CHECK(Field::parse("7") == Field::prime(7));
    CHECK_THROWS(Field::parse("6")); /* not prime */
    CHECK(Scalar::parse(Field::rationals(), "-3/4") ==
          Scalar::fraction(Field::rationals(), -3, 4));
    CHECK(Scalar::parse(Field::prime(3), "5") == Scalar(Field::prime(3), 2));
}

TEST_CASE("matrix algebra and rref") {
    Field q = Field::rationals();
    Matrix m(q, 2, 3);
    m.at(0, 0) = Scalar(q, 1);
    m.at(0, 1) = Scalar(q, 2);
    m.at(0, 2) = Scalar(q, 3);
    m.at(1, 0) = Scalar(q, 2);
    m.at(1, 1) = Scalar(q, 4);
    m.at(1, 2) = Scalar(q, 6);
    CHECK(rref(m).rank() == 1); /* second row is a multiple of the first */

    Matrix id = Matrix::identity(q, 3);
    CHECK(id.is_identity());
    CHECK((id + id).apply(vec_unit(q, 3, 1)) == vec_scale(Scalar(q, 2), vec_unit(q, 3, 1)));
    CHECK(m.transpose().rows() == 3);
}

TEST_CASE("kernel and image are complementary in dimension") {
    Field f3 = Field::prime(3);
    Matrix m(f3, 3, 4);
    int v = 1;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 4; ++c) m.at(r, c) = Scalar(f3, v++);
    int rank = rref(m).rank();
    CHECK(kernel(m).dim() + rank == 4);
    CHECK(image(m).dim() == rank);
    Subspace ker = kernel(m);
    for (const Vec& k : ker.basis()) CHECK(vec_is_zero(m.apply(k)));
}

TEST_CASE("subspace membership, coordinates, sums, quotients") {
    Field q = Field::rationals();
    Vec v1 = {Scalar(q, 1), Scalar(q, 0), Scalar(q, 1)};
    Vec v2 = {Scalar(q, 0), Scalar(q, 1), Scalar(q, 1)};
    Subspace s = Subspace::span(q, 3, {v1, v2, vec_add(v1, v2)});
    CHECK(s.dim() == 2);
    CHECK(s.contains(vec_sub(v1, v2)));
    CHECK_FALSE(s.contains(vec_unit(q, 3, 0)));
    auto coords = s.coordinates(vec_add(v1, v1));
    REQUIRE(coords.has_value());
    CHECK(s.from_coordinates(*coords) == vec_add(v1, v1));

    Subspace whole = Subspace::span(q, 3, {v1, v2, vec_unit(q, 3, 0)});
    CHECK(whole.dim() == 3);
    CHECK(whole.contains_subspace(s));
    CHECK(quotient_dim(whole, s) == 1);
    CHECK_THROWS(quotient_dim(s, whole));
}

TEST_CASE("solver finds exact preimages") {
    Field q = Field::rationals();
    Matrix m(q, 3, 2);
    m.at(0, 0) = Scalar(q, 2);
    m.at(1, 1) = Scalar::fraction(q, 1, 2);
    m.at(2, 0) = Scalar(q, 1);
    m.at(2, 1) = Scalar(q, 1);
    Solver s(m);
    Vec b = m.apply({Scalar(q, 5), Scalar(q, -4)});
    auto x = s.solve(b);
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == b);
    CHECK_FALSE(s.solve(vec_unit(q, 3, 0)).has_value()); /* off the image */
}

TEST_CASE("rng is deterministic per seed and respects the field") {
    Rng r1(99), r2(99), r3(100);
    Field q = Field::rationals(), f5 = Field::prime(5);
    Vec a = r1.vec(q, 6), b = r2.vec(q, 6);
    CHECK(a == b);
    CHECK(r1.vec(f5, 4) == r2.vec(f5, 4));
    CHECK(a != r3.vec(q, 6));
    for (const Scalar& s : r1.vec(f5, 20)) CHECK(s.residue() < 5);
}
