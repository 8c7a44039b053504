#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "homcat/errors.hpp"

namespace homcat {

// Ground field of all scalar arithmetic: the rationals (characteristic 0) or
// a prime field F_p.  Everything downstream is exact; no floating point.
class FieldSpec {
public:
    FieldSpec() : p_(0) {}

    static FieldSpec rationals() { return FieldSpec{}; }
    static FieldSpec prime_field(std::int64_t p);

    bool is_rational() const { return p_ == 0; }
    std::int64_t characteristic() const { return p_; }
    std::string name() const; // "Q" or "F<p>"

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) { return a.p_ == b.p_; }
    friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return a.p_ != b.p_; }

private:
    std::int64_t p_;
};

// Exact field element.  Rationals are kept canonical by GMP; prime-field
// elements are stored as their representative in [0, p) with denominator 1.
class Scalar {
public:
    Scalar() : p_(0) {} // rational zero

    Scalar(const FieldSpec& f, long value) : v_(value), p_(f.characteristic()) { normalize(); }
    Scalar(const FieldSpec& f, const mpq_class& value) : v_(value), p_(f.characteristic()) { normalize(); }

    static Scalar zero(const FieldSpec& f) { return Scalar(f, 0); }
    static Scalar one(const FieldSpec& f) { return Scalar(f, 1); }
    // Accepts "123", "-4" or "num/den".
    static Scalar parse(const FieldSpec& f, const std::string& text);

    FieldSpec field() const;
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Canonical decimal form: "n", "-n" or "num/den".
    std::string str() const { return v_.get_str(); }

    const mpq_class& raw() const { return v_; }

private:
    void normalize();
    void check_compatible(const Scalar& o) const;

    mpq_class v_;
    std::int64_t p_;
};

using Vec = std::vector<Scalar>;

} // namespace homcat
