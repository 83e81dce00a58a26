#include "vectcoh/rational.hpp"

#include <ostream>

#include "vectcoh/errors.hpp"

namespace vectcoh {

namespace debug {
bool binomial_fault = false;
bool reference_fault = false;
}  // namespace debug

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
    if (s.empty()) throw ParseError("rational: empty string");
    std::string text(s);
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw ParseError("rational: cannot parse \"" + text + "\"");
    if (sgn(q.get_den()) == 0)
        throw ParseError("rational: zero denominator in \"" + text + "\"");
    q.canonicalize();
    Rational r;
    r.v_ = q;
    return r;
}

std::string Rational::str() const { return v_.get_str(); }

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("binomial: negative argument");
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    if (debug::binomial_fault && n == 12 && k == 5) b += 1;
    return b;
}

}  // namespace vectcoh
