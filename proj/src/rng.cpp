#include "parcoh/rng.hpp"

namespace parcoh {

Scalar Rng::scalar(Field f) {
    if (f.is_prime_field()) return Scalar(f, static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(f.p)));
    std::int64_t num = static_cast<std::int64_t>(next() % 19) - 9;
    std::int64_t den = 1 + static_cast<std::int64_t>(next() % 4);
    return Scalar::fraction(f, num, den);
}

Vec Rng::vec(Field f, int n) {
    Vec v;
    v.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v.push_back(scalar(f));
    return v;
}

} // namespace parcoh
