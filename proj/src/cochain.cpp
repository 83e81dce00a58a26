#include "vectcoh/cochain.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "vectcoh/errors.hpp"

namespace vectcoh {

namespace {

std::string tuple_str(const OrderTuple& t) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) os << ",";
        os << t[i];
    }
    os << ")";
    return os.str();
}

}  // namespace

std::optional<std::pair<OrderTuple, Rational>> canonicalize_term(std::vector<int> orders,
                                                                 Rational coeff) {
    // Insertion sort, counting inversions for the permutation sign.
    int inversions = 0;
    for (size_t i = 1; i < orders.size(); ++i) {
        int v = orders[i];
        size_t j = i;
        while (j > 0 && orders[j - 1] > v) {
            orders[j] = orders[j - 1];
            --j;
            ++inversions;
        }
        orders[j] = v;
    }
    for (size_t i = 1; i < orders.size(); ++i)
        if (orders[i] == orders[i - 1]) return std::nullopt;
    if (inversions % 2 != 0) coeff = -coeff;
    return std::make_pair(std::move(orders), std::move(coeff));
}

SymbolicCochain::SymbolicCochain(int arity, int lambda, bool relative)
    : arity_(arity), lambda_(lambda), relative_(relative) {
    if (arity < 0 || arity > kMaxArity)
        throw ArityError("cochain arity must be in [0," + std::to_string(kMaxArity) + "], got " +
                         std::to_string(arity));
}

void SymbolicCochain::check_tuple(const OrderTuple& t) const {
    if (static_cast<int>(t.size()) != arity_)
        throw ValidationError("tuple " + tuple_str(t) + " has wrong arity for a " +
                              std::to_string(arity_) + "-cochain");
    long sum = std::accumulate(t.begin(), t.end(), 0L);
    if (sum != static_cast<long>(lambda_) + arity_)
        throw ValidationError("tuple " + tuple_str(t) + " has order sum " + std::to_string(sum) +
                              ", homogeneity requires " + std::to_string(lambda_ + arity_));
    for (int o : t) {
        if (o < 0) throw ValidationError("tuple " + tuple_str(t) + " has a negative order");
        if (relative_ && o < 2)
            throw ValidationError("relative cochain tuple " + tuple_str(t) +
                                  " has an order below 2");
    }
}

void SymbolicCochain::add_term(std::vector<int> orders, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto canon = canonicalize_term(std::move(orders), coeff);
    if (!canon) return;
    check_tuple(canon->first);
    auto it = terms_.find(canon->first);
    if (it == terms_.end()) {
        terms_.emplace(std::move(canon->first), std::move(canon->second));
    } else {
        it->second += canon->second;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

const Rational& SymbolicCochain::coeff(const OrderTuple& t) const {
    static const Rational zero{};
    auto it = terms_.find(t);
    return it == terms_.end() ? zero : it->second;
}

SymbolicCochain SymbolicCochain::operator-() const {
    SymbolicCochain r(arity_, lambda_, relative_);
    for (const auto& [t, c] : terms_) r.terms_.emplace(t, -c);
    return r;
}

SymbolicCochain operator+(const SymbolicCochain& a, const SymbolicCochain& b) {
    if (a.arity_ != b.arity_ || a.lambda_ != b.lambda_ || a.relative_ != b.relative_)
        throw ValidationError("cochain sum: mismatched grading");
    SymbolicCochain r = a;
    for (const auto& [t, c] : b.terms_) {
        auto it = r.terms_.find(t);
        if (it == r.terms_.end()) {
            r.terms_.emplace(t, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

SymbolicCochain operator-(const SymbolicCochain& a, const SymbolicCochain& b) { return a + (-b); }

SymbolicCochain operator*(const Rational& s, const SymbolicCochain& c) {
    SymbolicCochain r(c.arity_, c.lambda_, c.relative_);
    if (s.is_zero()) return r;
    for (const auto& [t, v] : c.terms_) r.terms_.emplace(t, s * v);
    return r;
}

bool operator==(const SymbolicCochain& a, const SymbolicCochain& b) {
    return a.arity_ == b.arity_ && a.lambda_ == b.lambda_ && a.relative_ == b.relative_ &&
           a.terms_ == b.terms_;
}

nlohmann::ordered_json SymbolicCochain::to_json() const {
    nlohmann::ordered_json j;
    j["arity"] = arity_;
    j["lambda"] = lambda_;
    j["relative"] = relative_;
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [t, c] : terms_) {
        nlohmann::ordered_json term;
        term["orders"] = t;
        term["coeff"] = c.str();
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

std::string SymbolicCochain::serialize() const { return to_json().dump(); }

SymbolicCochain SymbolicCochain::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("cochain: document is not a JSON object");
    for (const char* field : {"arity", "lambda", "relative", "terms"})
        if (!j.contains(field)) throw ParseError(std::string("cochain: missing field \"") + field + "\"");
    if (!j["arity"].is_number_integer()) throw ParseError("cochain: field \"arity\" must be an integer");
    if (!j["lambda"].is_number_integer()) throw ParseError("cochain: field \"lambda\" must be an integer");
    if (!j["relative"].is_boolean()) throw ParseError("cochain: field \"relative\" must be a boolean");
    if (!j["terms"].is_array()) throw ParseError("cochain: field \"terms\" must be an array");

    int arity = j["arity"].get<int>();
    if (arity < 0 || arity > kMaxArity)
        throw ParseError("cochain: field \"arity\" out of range [0," + std::to_string(kMaxArity) +
                         "]");
    SymbolicCochain c(arity, j["lambda"].get<int>(), j["relative"].get<bool>());

    for (const auto& term : j["terms"]) {
        if (!term.is_object() || !term.contains("orders") || !term.contains("coeff"))
            throw ParseError("cochain: each term needs \"orders\" and \"coeff\"");
        if (!term["orders"].is_array())
            throw ParseError("cochain: field \"orders\" must be an array of integers");
        OrderTuple orders;
        for (const auto& o : term["orders"]) {
            if (!o.is_number_integer())
                throw ParseError("cochain: field \"orders\" must be an array of integers");
            orders.push_back(o.get<int>());
        }
        for (size_t i = 1; i < orders.size(); ++i)
            if (orders[i] <= orders[i - 1])
                throw ParseError("cochain: field \"orders\" " + tuple_str(orders) +
                                 " is not strictly increasing");
        if (!term["coeff"].is_string())
            throw ParseError("cochain: field \"coeff\" must be a rational string \"p/q\"");
        Rational coeff = Rational::from_string(term["coeff"].get<std::string>());
        if (coeff.is_zero())
            throw ValidationError("cochain: term " + tuple_str(orders) +
                                  " carries a zero coefficient");
        if (!c.coeff(orders).is_zero())
            throw ValidationError("cochain: duplicate tuple " + tuple_str(orders));
        c.add_term(std::move(orders), coeff);
    }
    return c;
}

SymbolicCochain SymbolicCochain::parse(std::string_view document) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(document);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("cochain: invalid JSON: ") + e.what());
    }
    return from_json(j);
}

int CochainBasis::index_of(const OrderTuple& t) const {
    auto it = std::lower_bound(tuples.begin(), tuples.end(), t);
    if (it == tuples.end() || *it != t) return -1;
    return static_cast<int>(it - tuples.begin());
}

SymbolicCochain CochainBasis::element(int i) const {
    SymbolicCochain c(arity, lambda, relative);
    c.add_term(tuples.at(static_cast<size_t>(i)), Rational(1));
    return c;
}

SymbolicCochain CochainBasis::from_coordinates(const std::vector<Rational>& coords) const {
    if (static_cast<int>(coords.size()) != size())
        throw std::invalid_argument("coordinate vector length does not match basis size");
    SymbolicCochain c(arity, lambda, relative);
    for (int i = 0; i < size(); ++i)
        if (!coords[static_cast<size_t>(i)].is_zero())
            c.add_term(tuples[static_cast<size_t>(i)], coords[static_cast<size_t>(i)]);
    return c;
}

std::vector<Rational> CochainBasis::coordinates(const SymbolicCochain& c) const {
    std::vector<Rational> coords(static_cast<size_t>(size()));
    for (const auto& [t, v] : c.terms()) {
        int i = index_of(t);
        if (i < 0)
            throw ValidationError("cochain term " + tuple_str(t) +
                                  " lies outside the enumerated basis");
        coords[static_cast<size_t>(i)] = v;
    }
    return coords;
}

namespace {

void enumerate_rec(int remaining_slots, int min_order, long remaining_sum, OrderTuple& prefix,
                   std::vector<OrderTuple>& out) {
    if (remaining_slots == 0) {
        if (remaining_sum == 0) out.push_back(prefix);
        return;
    }
    // Smallest possible completion: min_order, min_order+1, ...
    for (int o = min_order;; ++o) {
        long least = 0;
        for (int s = 0; s < remaining_slots; ++s) least += o + s;
        if (least > remaining_sum) break;
        prefix.push_back(o);
        enumerate_rec(remaining_slots - 1, o + 1, remaining_sum - o, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

CochainBasis enumerate_basis(int arity, int lambda, bool relative) {
    if (arity < 0 || arity > kMaxArity)
        throw ArityError("enumerate_basis: arity must be in [0," + std::to_string(kMaxArity) +
                         "], got " + std::to_string(arity));
    CochainBasis basis;
    basis.arity = arity;
    basis.lambda = lambda;
    basis.relative = relative;
    long target = static_cast<long>(lambda) + arity;
    if (target < 0) return basis;
    OrderTuple prefix;
    enumerate_rec(arity, relative ? 2 : 0, target, prefix, basis.tuples);
    return basis;
}

}  // namespace vectcoh
