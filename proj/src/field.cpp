#include "parcoh/field.hpp"

namespace parcoh {

static bool is_small_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Field Field::prime(std::int64_t p) {
    if (p >= (std::int64_t(1) << 31) || !is_small_prime(p))
        throw std::invalid_argument("field modulus must be a prime < 2^31, got " + std::to_string(p));
    return Field{p};
}

Field Field::parse(const std::string& text) {
    if (text == "rational" || text == "rationals" || text == "q" || text == "Q")
        return rationals();
    std::size_t pos = 0;
    std::int64_t p = std::stoll(text, &pos);
    if (pos != text.size())
        throw std::invalid_argument("cannot parse field '" + text + "'");
    return prime(p);
}

static std::int64_t mod_reduce(std::int64_t n, std::int64_t p) {
    std::int64_t r = n % p;
    return r < 0 ? r + p : r;
}

/* extended Euclid; p prime so every nonzero residue is invertible */
static std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt; nt = tmp;
        tmp = r - q * nr;
        r = nr; nr = tmp;
    }
    if (r != 1) throw std::domain_error("not invertible mod p");
    return mod_reduce(t, p);
}

Scalar::Scalar(Field f, std::int64_t n) : field_(f) {
    if (f.is_prime_field()) ip_ = mod_reduce(n, f.p);
    else q_ = n;
}

Scalar::Scalar(Field f, const Rational& q) : field_(f), q_(q) {
    if (f.is_prime_field()) {
        /* admit small fractions with denominator coprime to p */
        std::int64_t num = static_cast<std::int64_t>(numerator(q));
        std::int64_t den = static_cast<std::int64_t>(denominator(q));
        ip_ = mod_reduce(mod_reduce(num, f.p) * mod_inverse(mod_reduce(den, f.p), f.p), f.p);
        q_ = 0;
    }
}

Scalar Scalar::fraction(Field f, std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("zero denominator");
    return Scalar(f, Rational(n, d));
}

bool Scalar::is_zero() const { return field_.is_prime_field() ? ip_ == 0 : q_.is_zero(); }
bool Scalar::is_one() const { return field_.is_prime_field() ? ip_ == 1 : q_ == 1; }

void Scalar::check_same(const Scalar& o) const {
    if (field_ != o.field_)
        throw std::logic_error("mixed fields: " + field_.to_string() + " vs " + o.field_.to_string());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar r(field_);
    if (field_.is_prime_field()) r.ip_ = mod_reduce(ip_ + o.ip_, field_.p);
    else r.q_ = q_ + o.q_;
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    Scalar r(field_);
    if (field_.is_prime_field()) r.ip_ = mod_reduce(ip_ - o.ip_, field_.p);
    else r.q_ = q_ - o.q_;
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r(field_);
    if (field_.is_prime_field()) r.ip_ = ip_ == 0 ? 0 : field_.p - ip_;
    else r.q_ = -q_;
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar r(field_);
    if (field_.is_prime_field()) r.ip_ = mod_reduce(ip_ * o.ip_, field_.p); /* p < 2^31: no overflow */
    else r.q_ = q_ * o.q_;
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar r(field_);
    if (field_.is_prime_field()) r.ip_ = mod_inverse(ip_, field_.p);
    else r.q_ = 1 / q_;
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
    check_same(o);
    return field_.is_prime_field() ? ip_ == o.ip_ : q_ == o.q_;
}

bool Scalar::operator<(const Scalar& o) const {
    check_same(o);
    return field_.is_prime_field() ? ip_ < o.ip_ : q_ < o.q_;
}

std::string Scalar::to_string() const {
    if (field_.is_prime_field()) return std::to_string(ip_);
    if (denominator(q_) == 1) return numerator(q_).str();
    return numerator(q_).str() + "/" + denominator(q_).str();
}

Scalar Scalar::parse(Field f, const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        return Scalar(f, Rational(boost::multiprecision::cpp_int(text)));
    }
    boost::multiprecision::cpp_int num(text.substr(0, slash)), den(text.substr(slash + 1));
    if (den == 0) throw std::domain_error("zero denominator in '" + text + "'");
    return Scalar(f, Rational(num, den));
}

} // namespace parcoh
