#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace nvcat {

/// Coefficient field: the rationals or a prime field F_p.
class Field {
public:
    constexpr Field() = default;

    static Field rationals() { return Field(0); }
    /// Throws ValidationError unless p is a prime below 2^62.
    static Field prime(std::int64_t p);
    /// Accepts "q", "Q", "rationals", "fp:P".
    static Field parse(std::string_view spec);

    bool is_rational() const { return p_ == 0; }
    std::int64_t characteristic() const { return p_; }
    /// Number of elements, or 0 for Q.
    std::int64_t order() const { return p_; }

    /// "Q" or "F_p".
    std::string name() const;
    /// Inverse of parse(): "q" or "fp:P".
    std::string selector() const;

    friend bool operator==(Field, Field) = default;

private:
    constexpr explicit Field(std::int64_t p) : p_(p) {}
    std::int64_t p_ = 0;
};

bool is_prime(std::int64_t n);

/// An element of a Field with exact arithmetic. Mixing fields throws.
class Scalar {
public:
    Scalar() = default;  // zero of Q
    Scalar(Field f, std::int64_t value);
    Scalar(Field f, const mpq_class& value);

    static Scalar zero(Field f) { return Scalar(f, 0); }
    static Scalar one(Field f) { return Scalar(f, 1); }
    /// Parses "3", "-2", "1/2" (Q) or an integer residue (F_p).
    static Scalar parse(Field f, std::string_view text);

    Field field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

    Scalar inverse() const;
    /// Integer power; negative exponents need a nonzero base.
    Scalar pow(std::int64_t e) const;

    /// Total ordering used only for deterministic sorting (numeric on Q, residue on F_p).
    std::strong_ordering compare(const Scalar& o) const;

    /// Rough bit size of the representation; 1 on F_p. Used for pivot choice.
    std::size_t size_hint() const;

    std::string to_string() const;

    const mpq_class& rational() const { return q_; }
    std::int64_t residue() const { return r_; }

private:
    void check_same(const Scalar& o) const;

    Field field_{};
    std::int64_t r_ = 0;
    mpq_class q_;
};

/// Generalized binomial coefficient C(n, m) for any integer n and m >= 0, as a field element.
Scalar binomial(Field f, std::int64_t n, std::int64_t m);

}  // namespace nvcat
