#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace parcoh {

using Rational = boost::multiprecision::cpp_rational;

/* Exact coefficient field: the rationals, or a prime field F_p with p < 2^31. */
struct Field {
    std::int64_t p = 0; /* 0 = rationals, otherwise the prime */

    static Field rationals() { return Field{0}; }
    static Field prime(std::int64_t p);
    static Field parse(const std::string& text); /* "rational" | "q" | decimal prime */

    bool is_prime_field() const { return p != 0; }
    bool operator==(const Field&) const = default;
    std::string to_string() const { return p == 0 ? "rational" : "F" + std::to_string(p); }
};

/* One exact field element. Prime-field values live in [0,p) as int64 residues;
   rational values are kept canonical (lowest terms, positive denominator) by
   cpp_rational itself. */
class Scalar {
public:
    Scalar() = default; /* zero over Q; attach a field before mixing */
    explicit Scalar(Field f) : field_(f) {}
    Scalar(Field f, std::int64_t n); /* n mod p, or n/1 */
    Scalar(Field f, const Rational& q); /* rationals only */

    static Scalar zero(Field f) { return Scalar(f, 0); }
    static Scalar one(Field f) { return Scalar(f, 1); }
    /* n/d in whichever field (d inverted mod p for prime fields) */
    static Scalar fraction(Field f, std::int64_t n, std::int64_t d);

    Field field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; /* division by zero throws */
    Scalar inverse() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    /* total order within one field, used only for deterministic normal forms */
    bool operator<(const Scalar& o) const;

    std::int64_t residue() const { return ip_; }
    const Rational& rational() const { return q_; }

    std::string to_string() const; /* "3", "-1/2" */
    static Scalar parse(Field f, const std::string& text);

private:
    Field field_;
    std::int64_t ip_ = 0; /* residue when prime field */
    Rational q_;          /* value when rationals */

    void check_same(const Scalar& o) const;
};

} // namespace parcoh
