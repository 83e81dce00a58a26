#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "vectcoh/rational.hpp"

namespace vectcoh {

/// Univariate polynomial over Rational, dense coefficient sequence.
/// Canonical form: no trailing zero coefficients; the zero polynomial
/// has an empty coefficient sequence.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const Rational& c) { return monomial(c, 0); }
    static Polynomial monomial(const Rational& c, int exponent);

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Polynomial derivative(int m = 1) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& p);

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return a.c_ != b.c_; }

    std::string str() const;

    // Exponent -> coefficient map, zero coefficients omitted: {"0":"1","3":"-1/2"}.
    nlohmann::ordered_json to_json() const;
    static Polynomial from_json(const nlohmann::json& j);

  private:
    std::vector<Rational> c_;
    void trim();
};

/// acc[e] += scale * product of factors, iterating only nonzero coefficients.
/// acc must be large enough to hold the product degree; used by the evaluation
/// oracle to avoid materializing intermediate products.
void accumulate_product(std::vector<Rational>& acc, const Rational& scale,
                        const Polynomial* const* factors, int count);

}  // namespace vectcoh
