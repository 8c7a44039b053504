#include "homcat/field.hpp"

namespace homcat {

namespace {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace

FieldSpec FieldSpec::prime_field(std::int64_t p) {
    if (!is_prime(p)) throw InputError("prime_field: " + std::to_string(p) + " is not prime");
    FieldSpec f;
    f.p_ = p;
    return f;
}

std::string FieldSpec::name() const {
    return p_ == 0 ? std::string("Q") : "F" + std::to_string(p_);
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
    if (text.empty()) throw InputError("empty scalar literal");
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw InputError("bad scalar literal '" + text + "'");
    q.canonicalize();
    if (!f.is_rational()) {
        // A fraction is legal over F_p as long as the denominator is invertible.
        mpz_class p(static_cast<long>(f.characteristic()));
        if (mpz_divisible_p(q.get_den().get_mpz_t(), p.get_mpz_t()))
            throw InputError("scalar '" + text + "' has denominator divisible by " + std::to_string(f.characteristic()));
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), q.get_den().get_mpz_t(), p.get_mpz_t());
        q = mpq_class(q.get_num() * inv);
    }
    return Scalar(f, q);
}

FieldSpec Scalar::field() const {
    return p_ == 0 ? FieldSpec::rationals() : FieldSpec::prime_field(p_);
}

void Scalar::normalize() {
    if (p_ == 0) return;
    mpz_class p(static_cast<long>(p_));
    mpz_class n = v_.get_num() % p;
    if (n < 0) n += p;
    v_ = mpq_class(n);
}

void Scalar::check_compatible(const Scalar& o) const {
    if (p_ != o.p_)
        throw StructuralError("scalar arithmetic across different fields");
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.v_ = -r.v_;
    r.normalize();
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_compatible(o);
    v_ += o.v_;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_compatible(o);
    v_ -= o.v_;
    normalize();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_compatible(o);
    v_ *= o.v_;
    normalize();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_compatible(o);
    *this *= o.inverse();
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw StructuralError("division by zero");
    Scalar r = *this;
    if (p_ == 0) {
        r.v_ = 1 / v_;
        return r;
    }
    mpz_class p(static_cast<long>(p_)), inv;
    mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), p.get_mpz_t());
    r.v_ = mpq_class(inv);
    r.normalize();
    return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
    return a.p_ == b.p_ && a.v_ == b.v_;
}

} // namespace homcat
