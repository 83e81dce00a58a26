#pragma once

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vectcoh/rational.hpp"

namespace vectcoh {

/// Strictly increasing sequence of derivative orders indexing one
/// determinant monomial det(f_a^(i_b)). Compared lexicographically.
using OrderTuple = std::vector<int>;

inline constexpr int kMaxArity = 4;

/// Sorts orders ascending, multiplying coeff by the permutation sign.
/// Returns nullopt when two orders coincide (the antisymmetric monomial
/// is identically zero).
std::optional<std::pair<OrderTuple, Rational>> canonicalize_term(std::vector<int> orders,
                                                                 Rational coeff);

/// Antisymmetric constant-coefficient multi-differential operator
/// Vect(R)^k -> F_lambda, stored on strictly increasing order tuples.
/// Every stored tuple sums to lambda + arity; if relative, every order
/// is >= 2 so the operator kills d/dx and x d/dx.
class SymbolicCochain {
  public:
    SymbolicCochain() : SymbolicCochain(0, 0, false) {}
    SymbolicCochain(int arity, int lambda, bool relative);

    int arity() const { return arity_; }
    int lambda() const { return lambda_; }
    bool relative() const { return relative_; }
    const std::map<OrderTuple, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Canonicalizes orders, accumulates into the term map, drops zeros.
    /// Throws ValidationError if the tuple violates homogeneity or the
    /// relative floor.
    void add_term(std::vector<int> orders, const Rational& coeff);

    const Rational& coeff(const OrderTuple& t) const;

    SymbolicCochain operator-() const;
    friend SymbolicCochain operator+(const SymbolicCochain& a, const SymbolicCochain& b);
    friend SymbolicCochain operator-(const SymbolicCochain& a, const SymbolicCochain& b);
    friend SymbolicCochain operator*(const Rational& s, const SymbolicCochain& c);
    friend bool operator==(const SymbolicCochain& a, const SymbolicCochain& b);

    std::string serialize() const;
    nlohmann::ordered_json to_json() const;
    static SymbolicCochain parse(std::string_view document);
    static SymbolicCochain from_json(const nlohmann::json& j);

  private:
    int arity_;
    int lambda_;
    bool relative_;
    std::map<OrderTuple, Rational> terms_;
    void check_tuple(const OrderTuple& t) const;
};

/// All admissible order tuples for one graded piece, in lexicographic order.
struct CochainBasis {
    int arity = 0;
    int lambda = 0;
    bool relative = false;
    std::vector<OrderTuple> tuples;

    int size() const { return static_cast<int>(tuples.size()); }
    /// Index of the tuple in the basis, or -1 when absent.
    int index_of(const OrderTuple& t) const;
    /// Basis element as a cochain: coefficient 1 on tuples[i].
    SymbolicCochain element(int i) const;
    /// Cochain with the given coordinates in this basis.
    SymbolicCochain from_coordinates(const std::vector<Rational>& coords) const;
    /// Coordinates of a cochain whose support lies in this basis.
    std::vector<Rational> coordinates(const SymbolicCochain& c) const;
};

/// Enumerates {strictly increasing k-tuples, entries >= (2 if relative
/// else 0), sum = lambda + k}. Empty when the sum is unreachable.
CochainBasis enumerate_basis(int arity, int lambda, bool relative);

}  // namespace vectcoh
