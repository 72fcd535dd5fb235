#pragma once

#include "parcoh/field.hpp"
#include "parcoh/matrix.hpp"

#include <cstdint>
#include <random>

namespace parcoh {

/* Deterministic test randomness: same seed, same stream, everywhere. Draws
   use raw mt19937_64 output (modulo, slightly biased) rather than
   distribution adapters, whose output differs between standard libraries. */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : e_(seed) {}

    std::uint64_t next() { return e_(); }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

    /* F_p: uniform residue; Q: small fraction with denominator 1..4 */
    Scalar scalar(Field f);
    Vec vec(Field f, int n);

private:
    std::mt19937_64 e_;
};

} // namespace parcoh
