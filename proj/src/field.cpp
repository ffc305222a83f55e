#include "nvcat/field.hpp"

#include "nvcat/errors.hpp"

#include <charconv>
#include <stdexcept>

namespace nvcat {

namespace {

std::int64_t mod_norm(std::int64_t v, std::int64_t p) {
    v %= p;
    return v < 0 ? v + p : v;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t pow_mod(std::int64_t b, std::uint64_t e, std::int64_t p) {
    std::int64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mul_mod(r, b, p);
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    return r;
}

std::int64_t parse_int(std::string_view s) {
    std::int64_t v = 0;
    const char* first = s.data();
    if (!s.empty() && s.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || first == s.data() + s.size())
        throw ValidationError("not an integer: '" + std::string(s) + "'");
    return v;
}

}  // namespace

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % small == 0) return n == small;
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    std::int64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::int64_t x = pow_mod(a, static_cast<std::uint64_t>(d), n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Field Field::prime(std::int64_t p) {
    if (p >= (std::int64_t{1} << 62) || !is_prime(p))
        throw ValidationError("field characteristic must be a prime below 2^62, got " + std::to_string(p));
    return Field(p);
}

Field Field::parse(std::string_view spec) {
    if (spec == "q" || spec == "Q" || spec == "rationals") return rationals();
    if (spec.substr(0, 3) == "fp:") return prime(parse_int(spec.substr(3)));
    throw ValidationError("unknown field selector '" + std::string(spec) + "' (expected q or fp:P)");
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

std::string Field::selector() const { return p_ == 0 ? "q" : "fp:" + std::to_string(p_); }

Scalar::Scalar(Field f, std::int64_t value) : field_(f) {
    if (f.is_rational())
        q_ = mpq_class(mpz_class(static_cast<long>(value)));
    else
        r_ = mod_norm(value, f.characteristic());
}

Scalar::Scalar(Field f, const mpq_class& value) : field_(f) {
    if (f.is_rational()) {
        q_ = value;
        q_.canonicalize();
        return;
    }
    const std::int64_t p = f.characteristic();
    mpz_class num = value.get_num() % p;
    mpz_class den = value.get_den() % p;
    if (den == 0) throw std::domain_error("denominator vanishes in " + f.name());
    std::int64_t n = mod_norm(num.get_si(), p);
    std::int64_t d = mod_norm(den.get_si(), p);
    r_ = mul_mod(n, pow_mod(d, static_cast<std::uint64_t>(p - 2), p), p);
}

Scalar Scalar::parse(Field f, std::string_view text) {
    if (text.empty()) throw ValidationError("empty field element");
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (f.is_rational()) {
            mpz_class z;
            if (z.set_str(std::string(text[0] == '+' ? text.substr(1) : text), 10) != 0)
                throw ValidationError("not a number: '" + std::string(text) + "'");
            return Scalar(f, mpq_class(z));
        }
        return Scalar(f, parse_int(text));
    }
    mpz_class num, den;
    if (num.set_str(std::string(text.substr(0, slash)), 10) != 0 ||
        den.set_str(std::string(text.substr(slash + 1)), 10) != 0 || den == 0)
        throw ValidationError("not a fraction: '" + std::string(text) + "'");
    return Scalar(f, mpq_class(num, den));
}

void Scalar::check_same(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw std::invalid_argument("field mismatch: " + field_.name() + " vs " + o.field_.name());
}

bool Scalar::is_zero() const { return field_.is_rational() ? sgn(q_) == 0 : r_ == 0; }

bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (field_.is_rational())
        s.q_ = -q_;
    else if (r_ != 0)
        s.r_ = field_.characteristic() - r_;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same(o);
    if (field_.is_rational()) {
        q_ += o.q_;
    } else {
        r_ += o.r_;
        if (r_ >= field_.characteristic()) r_ -= field_.characteristic();
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same(o);
    if (field_.is_rational()) {
        q_ -= o.q_;
    } else {
        r_ -= o.r_;
        if (r_ < 0) r_ += field_.characteristic();
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same(o);
    if (field_.is_rational())
        q_ *= o.q_;
    else
        r_ = mul_mod(r_, o.r_, field_.characteristic());
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
    if (!(a.field_ == b.field_)) return false;
    return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar s = *this;
    if (field_.is_rational())
        s.q_ = 1 / q_;
    else
        s.r_ = pow_mod(r_, static_cast<std::uint64_t>(field_.characteristic() - 2), field_.characteristic());
    return s;
}

Scalar Scalar::pow(std::int64_t e) const {
    Scalar base = e < 0 ? inverse() : *this;
    std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
    if (!field_.is_rational()) {
        Scalar s = *this;
        s.r_ = pow_mod(base.r_, n, field_.characteristic());
        return s;
    }
    Scalar result = one(field_);
    while (n) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return result;
}

std::strong_ordering Scalar::compare(const Scalar& o) const {
    check_same(o);
    if (field_.is_rational()) {
        int c = cmp(q_, o.q_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    return r_ <=> o.r_;
}

std::size_t Scalar::size_hint() const {
    if (!field_.is_rational()) return 1;
    return mpz_sizeinbase(q_.get_num_mpz_t(), 2) + mpz_sizeinbase(q_.get_den_mpz_t(), 2);
}

std::string Scalar::to_string() const {
    if (field_.is_rational()) return q_.get_str();
    return std::to_string(r_);
}

Scalar binomial(Field f, std::int64_t n, std::int64_t m) {
    if (m < 0) return Scalar::zero(f);
    // C(n, m) as an exact integer, including negative n.
    mpz_class value;
    if (n >= 0) {
        mpz_bin_uiui(value.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m));
    } else {
        // C(n, m) = (-1)^m C(m - n - 1, m)
        mpz_bin_uiui(value.get_mpz_t(), static_cast<unsigned long>(m - n - 1), static_cast<unsigned long>(m));
        if (m % 2) value = -value;
    }
    return Scalar(f, mpq_class(value));
}

}  // namespace nvcat
