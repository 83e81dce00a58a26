#include "vectcoh/polynomial.hpp"

#include <sstream>

#include "vectcoh/errors.hpp"

namespace vectcoh {

namespace {
const Rational kZero{};
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::monomial(const Rational& c, int exponent) {
    if (exponent < 0) throw std::invalid_argument("Polynomial: negative exponent");
    if (c.is_zero()) return {};
    Polynomial p;
    p.c_.resize(static_cast<size_t>(exponent) + 1);
    p.c_[static_cast<size_t>(exponent)] = c;
    return p;
}

const Rational& Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

Polynomial Polynomial::derivative(int m) const {
    if (m < 0) throw std::invalid_argument("Polynomial: negative derivative order");
    if (m == 0) return *this;
    if (m > degree()) return {};
    Polynomial r;
    r.c_.resize(c_.size() - static_cast<size_t>(m));
    for (size_t i = 0; i < r.c_.size(); ++i) {
        // (i+m)! / i! falling factorial
        BigInt fall = 1;
        for (int t = 0; t < m; ++t) fall *= static_cast<long>(i) + m - t;
        r.c_[i] = Rational(fall) * c_[i + static_cast<size_t>(m)];
    }
    r.trim();
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.c_.size(); ++i) {
        if (i < a.c_.size()) r.c_[i] += a.c_[i];
        if (i < b.c_.size()) r.c_[i] += b.c_[i];
    }
    r.trim();
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.c_.size(); ++i) {
        if (i < a.c_.size()) r.c_[i] += a.c_[i];
        if (i < b.c_.size()) r.c_[i] -= b.c_[i];
    }
    r.trim();
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Polynomial r;
    r.c_.resize(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j].add_mul(a.c_[i], b.c_[j]);
        }
    }
    r.trim();
    return r;
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
    if (s.is_zero()) return {};
    Polynomial r = p;
    for (auto& c : r.c_) c *= s;
    r.trim();
    return r;
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeff(i);
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rational a = c.sign() < 0 ? -c : c;
        if (i == 0 || a != Rational(1)) os << a.str();
        if (i > 0) {
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

nlohmann::ordered_json Polynomial::to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (int i = 0; i <= degree(); ++i)
        if (!coeff(i).is_zero()) j[std::to_string(i)] = coeff(i).str();
    return j;
}

Polynomial Polynomial::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("polynomial: expected object of exponent -> coefficient");
    Polynomial p;
    for (const auto& [key, val] : j.items()) {
        int exp = 0;
        try {
            size_t pos = 0;
            exp = std::stoi(key, &pos);
            if (pos != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw ParseError("polynomial: bad exponent key \"" + key + "\"");
        }
        if (exp < 0) throw ParseError("polynomial: negative exponent key \"" + key + "\"");
        if (!val.is_string()) throw ParseError("polynomial: coefficient must be a string");
        Rational c = Rational::from_string(val.get<std::string>());
        if (static_cast<int>(p.c_.size()) <= exp) p.c_.resize(static_cast<size_t>(exp) + 1);
        p.c_[static_cast<size_t>(exp)] += c;
    }
    p.trim();
    return p;
}

namespace {

void accumulate_rec(std::vector<Rational>& acc, const Rational& partial, int exp_sum,
                    const Polynomial* const* factors, int count, int level) {
    if (level == count) {
        acc[static_cast<size_t>(exp_sum)] += partial;
        return;
    }
    const auto& cs = factors[level]->coeffs();
    for (size_t e = 0; e < cs.size(); ++e) {
        if (cs[e].is_zero()) continue;
        accumulate_rec(acc, partial * cs[e], exp_sum + static_cast<int>(e), factors, count,
                       level + 1);
    }
}

}  // namespace

void accumulate_product(std::vector<Rational>& acc, const Rational& scale,
                        const Polynomial* const* factors, int count) {
    if (scale.is_zero()) return;
    for (int i = 0; i < count; ++i)
        if (factors[i]->is_zero()) return;
    accumulate_rec(acc, scale, 0, factors, count, 0);
}

}  // namespace vectcoh
