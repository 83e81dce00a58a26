#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace vectcoh {

using BigInt = mpz_class;

/// Exact rational scalar, the ground field of every computation.
/// Always canonical: gcd(|num|, den) = 1 and den > 0.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design
    Rational(long num, long den);
    explicit Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den);

    // Accepts "p", "-p", "p/q" (q > 0 after canonicalization). Throws ParseError.
    static Rational from_string(std::string_view s);

    // "p/q" with "/q" omitted when q = 1, e.g. "-14", "3/2".
    std::string str() const;

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // acc += a * b without materializing a temporary Rational.
    void add_mul(const Rational& a, const Rational& b) { v_ += a.v_ * b.v_; }
    void sub_mul(const Rational& a, const Rational& b) { v_ -= a.v_ * b.v_; }

    const mpq_class& raw() const { return v_; }

  private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// n! / (k! (n-k)!) as an exact integer; 0 when k > n. Throws on negative input.
BigInt binomial(long n, long k);

namespace debug {
// Test hook: when set, binomial(12, 5) is off by one. Used by the selftest
// fault-detection check; never set in normal operation.
extern bool binomial_fault;
// Test hook: when set, the embedded reference table reports a wrong value
// at one weight, to confirm the divergence protocol fires.
extern bool reference_fault;
}  // namespace debug

}  // namespace vectcoh
