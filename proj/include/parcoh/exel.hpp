#pragma once

#include "parcoh/field.hpp"
#include "parcoh/group.hpp"
#include "parcoh/matrix.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace parcoh {

/* Element of the universal inverse monoid generated by one symbol [g] per
   group element, subject to
     [g^{-1}][g][h] = [g^{-1}][gh],  [g][h][h^{-1}] = [gh][h^{-1}],  [g][1] = [g].
   Normal form: a product of distinct idempotents e_h = [h][h^{-1}] with
   h not in {1, tail}, times one generator [tail]. `idem` is the bitmask of
   the h's, so group order is capped at 64. */
struct ExelElement {
    std::uint64_t idem = 0;
    int tail = 0;

    bool operator==(const ExelElement&) const = default;
    bool operator<(const ExelElement& o) const {
        return tail != o.tail ? tail < o.tail : idem < o.idem;
    }
};

struct ExelElementHash {
    std::size_t operator()(const ExelElement& s) const {
        return std::hash<std::uint64_t>()(s.idem * 1315423911u + static_cast<std::uint64_t>(s.tail));
    }
};

/* The semigroup S(G) for one finite group: normal-form arithmetic plus the
   deterministic enumeration that indexes the K-basis of the partial group
   algebra. */
class ExelSemigroup {
public:
    explicit ExelSemigroup(const GroupTable& g);

    const GroupTable& group() const { return *g_; }

    ExelElement generator(int g) const;        /* [g] */
    ExelElement identity() const { return generator(0); }
    ExelElement idempotent_e(int g) const;     /* e_g = [g][g^{-1}] */
    ExelElement idempotent_set(std::uint64_t hs) const; /* prod of e_h, 1 excluded */
    /* e_{(g_1..g_n)} = e_{g_1} e_{g_1 g_2} ... e_{g_1...g_n} */
    ExelElement tuple_idempotent(const std::vector<int>& tuple) const;

    ExelElement multiply(const ExelElement& s, const ExelElement& t) const;
    ExelElement inverse(const ExelElement& s) const;
    ExelElement epsilon(const ExelElement& s) const { return multiply(s, inverse(s)); }
    bool is_idempotent(const ExelElement& s) const { return s.tail == 0; }
    /* order e <= f on idempotents: ef = e */
    bool idem_leq(const ExelElement& e, const ExelElement& f) const;
    /* conjugation action s . e = s e s^{-1} on K E(S(G)) */
    ExelElement conj(const ExelElement& s, const ExelElement& e) const;

    /* all of S(G), sorted by (tail, idempotent mask); size
       2^{n-1} + (n-1) 2^{n-2} for |G| = n */
    const std::vector<ExelElement>& elements() const { return elements_; }
    int size() const { return static_cast<int>(elements_.size()); }
    int index_of(const ExelElement& s) const;

    /* the 2^{n-1} idempotents, in enumeration order */
    std::vector<ExelElement> idempotents() const;

    std::string to_string(const ExelElement& s) const; /* "e_{g1} e_{g3} [g2]" */

private:
    const GroupTable* g_;
    std::vector<ExelElement> elements_;
    std::unordered_map<ExelElement, int, ExelElementHash> index_;

    std::uint64_t translate(int g, std::uint64_t hs) const; /* {g*h : h in hs} */
};

/* Vector in the partial group algebra K S(G), sparse over the enumeration. */
class KParElement {
public:
    KParElement(const ExelSemigroup& s, Field f) : s_(&s), field_(f) {}
    static KParElement basis(const ExelSemigroup& s, Field f, const ExelElement& e);

    Field field() const { return field_; }
    const std::unordered_map<ExelElement, Scalar, ExelElementHash>& terms() const { return terms_; }

    void add_term(const ExelElement& e, const Scalar& c);
    KParElement operator+(const KParElement& o) const;
    KParElement operator*(const KParElement& o) const; /* convolution */
    KParElement scale(const Scalar& c) const;
    bool operator==(const KParElement& o) const;
    bool is_zero() const;

    Vec to_dense() const; /* coordinates over the enumeration order */
    std::string to_string() const;

private:
    const ExelSemigroup* s_;
    Field field_;
    std::unordered_map<ExelElement, Scalar, ExelElementHash> terms_;
};

} // namespace parcoh
