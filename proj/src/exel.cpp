#include "parcoh/exel.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace parcoh {

ExelSemigroup::ExelSemigroup(const GroupTable& g) : g_(&g) {
    int n = g.order();
    if (n > 20)
        throw std::invalid_argument("semigroup enumeration capped at |G| <= 20 (bitmask + memory guard)");
    /* every (mask, tail) with 1 and tail excluded from the mask is a distinct
       normal form */
    for (int tail = 0; tail < n; ++tail) {
        std::uint64_t excluded = (1ULL << 0) | (1ULL << tail);
        std::uint64_t full = n == 64 ? ~0ULL : (1ULL << n) - 1;
        std::uint64_t allowed = full & ~excluded;
        /* enumerate submasks of `allowed` in increasing numeric order */
        std::vector<std::uint64_t> masks;
        std::uint64_t m = 0;
        while (true) {
            masks.push_back(m);
            if (m == allowed) break;
            m = (m - allowed) & allowed; /* next submask */
        }
        std::sort(masks.begin(), masks.end());
        for (std::uint64_t mask : masks) elements_.push_back({mask, tail});
    }
    for (int i = 0; i < static_cast<int>(elements_.size()); ++i) index_[elements_[i]] = i;
}

ExelElement ExelSemigroup::generator(int g) const {
    if (g < 0 || g >= g_->order()) throw std::invalid_argument("generator index out of range");
    return {0, g};
}

ExelElement ExelSemigroup::idempotent_e(int g) const {
    return g == 0 ? ExelElement{0, 0} : ExelElement{1ULL << g, 0};
}

ExelElement ExelSemigroup::idempotent_set(std::uint64_t hs) const {
    return {hs & ~1ULL, 0};
}

ExelElement ExelSemigroup::tuple_idempotent(const std::vector<int>& tuple) const {
    std::uint64_t mask = 0;
    int prefix = 0;
    for (int g : tuple) {
        prefix = g_->mul(prefix, g);
        mask |= 1ULL << prefix;
    }
    return idempotent_set(mask);
}

std::uint64_t ExelSemigroup::translate(int g, std::uint64_t hs) const {
    std::uint64_t out = 0;
    while (hs) {
        int h = std::countr_zero(hs);
        hs &= hs - 1;
        out |= 1ULL << g_->mul(g, h);
    }
    return out;
}

ExelElement ExelSemigroup::multiply(const ExelElement& s, const ExelElement& t) const {
    /* E[g] F[h] = (E ∪ gF ∪ {g}) [gh], then drop 1 and the new tail */
    int gh = g_->mul(s.tail, t.tail);
    std::uint64_t mask = s.idem | translate(s.tail, t.idem) | (1ULL << s.tail);
    mask &= ~((1ULL << 0) | (1ULL << gh));
    return {mask, gh};
}

ExelElement ExelSemigroup::inverse(const ExelElement& s) const {
    /* (E[g])^{-1} = (g^{-1}E)[g^{-1}]; 1 and the new tail cannot occur */
    int gi = g_->inv(s.tail);
    return {translate(gi, s.idem), gi};
}

bool ExelSemigroup::idem_leq(const ExelElement& e, const ExelElement& f) const {
    if (!is_idempotent(e) || !is_idempotent(f)) throw std::invalid_argument("idem_leq on non-idempotents");
    return multiply(e, f) == e; /* equivalently f.idem ⊆ e.idem */
}

ExelElement ExelSemigroup::conj(const ExelElement& s, const ExelElement& e) const {
    if (!is_idempotent(e)) throw std::invalid_argument("conjugation acts on idempotents");
    return multiply(multiply(s, e), inverse(s));
}

int ExelSemigroup::index_of(const ExelElement& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) throw std::logic_error("element not in normal-form enumeration");
    return it->second;
}

std::vector<ExelElement> ExelSemigroup::idempotents() const {
    std::vector<ExelElement> out;
    for (const auto& s : elements_)
        if (s.tail == 0) out.push_back(s);
    return out;
}

std::string ExelSemigroup::to_string(const ExelElement& s) const {
    std::ostringstream os;
    std::uint64_t hs = s.idem;
    while (hs) {
        int h = std::countr_zero(hs);
        hs &= hs - 1;
        os << "e_{" << g_->name(h) << "} ";
    }
    os << "[" << g_->name(s.tail) << "]";
    return os.str();
}

KParElement KParElement::basis(const ExelSemigroup& s, Field f, const ExelElement& e) {
    KParElement x(s, f);
    x.add_term(e, Scalar::one(f));
    return x;
}

void KParElement::add_term(const ExelElement& e, const Scalar& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

KParElement KParElement::operator+(const KParElement& o) const {
    KParElement r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

KParElement KParElement::operator*(const KParElement& o) const {
    KParElement r(*s_, field_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(s_->multiply(e1, e2), c1 * c2);
    return r;
}

KParElement KParElement::scale(const Scalar& c) const {
    KParElement r(*s_, field_);
    if (c.is_zero()) return r;
    for (const auto& [e, x] : terms_) r.add_term(e, x * c);
    return r;
}

bool KParElement::operator==(const KParElement& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (const auto& [e, c] : terms_) {
        auto it = o.terms_.find(e);
        if (it == o.terms_.end() || it->second != c) return false;
    }
    return true;
}

bool KParElement::is_zero() const { return terms_.empty(); }

Vec KParElement::to_dense() const {
    Vec v = vec_zero(field_, s_->size());
    for (const auto& [e, c] : terms_) v[s_->index_of(e)] = c;
    return v;
}

std::string KParElement::to_string() const {
    if (terms_.empty()) return "0";
    /* deterministic order for printing */
    std::vector<const ExelElement*> keys;
    for (const auto& [e, c] : terms_) keys.push_back(&e);
    std::sort(keys.begin(), keys.end(), [](auto* a, auto* b) { return *a < *b; });
    std::ostringstream os;
    bool first = true;
    for (const auto* e : keys) {
        if (!first) os << " + ";
        first = false;
        os << terms_.at(*e).to_string() << "*" << s_->to_string(*e);
    }
    return os.str();
}

} // namespace parcoh
