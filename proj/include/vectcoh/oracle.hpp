#pragma once

#include <json.hpp>

#include <span>
#include <vector>

#include "vectcoh/cochain.hpp"
#include "vectcoh/polynomial.hpp"

namespace vectcoh {

/// f * d/dx with polynomial f.
struct VectorField {
    Polynomial f;

    static VectorField monomial(int exponent) {
        return {Polynomial::monomial(Rational(1), exponent)};
    }
};

/// phi * dx^lambda with polynomial phi.
struct Density {
    Polynomial phi;
    int lambda = 0;

    bool is_zero() const { return phi.is_zero(); }
    friend bool operator==(const Density& a, const Density& b) {
        return a.lambda == b.lambda && a.phi == b.phi;
    }
    nlohmann::ordered_json to_json() const;
};

/// [f d/dx, g d/dx] = (f g' - f' g) d/dx.
VectorField bracket(const VectorField& x, const VectorField& y);

/// L^lambda_{f d/dx}(phi dx^lambda) = (f phi' + lambda f' phi) dx^lambda.
Density lie_derivative(const VectorField& x, const Density& u);

/// Sum over stored tuples of coeff * det(f_a^(i_b)), by direct polynomial
/// arithmetic. Throws ArityError on argument-count mismatch.
Density evaluate_cochain(const SymbolicCochain& c, std::span<const VectorField> args);

/// The coboundary evaluated pointwise from its defining alternating sum,
/// using only bracket, lie_derivative and evaluate_cochain. |args| must be
/// arity+1 and at most 4.
Density delta_eval(const SymbolicCochain& c, std::span<const VectorField> args);

struct CrosscheckFailure {
    OrderTuple basis_tuple;
    std::vector<int> arg_exponents;
    Density lhs;  // delta_eval
    Density rhs;  // evaluate_cochain of delta_symbolic
};

struct CrosscheckReport {
    long checked = 0;
    std::vector<CrosscheckFailure> failures;

    bool passed() const { return failures.empty(); }
    nlohmann::ordered_json to_json() const;
};

/// lambda + arity + 3: strictly larger than any stored derivative order,
/// so monomials up to this exponent determine the operator.
int default_max_exponent(int arity, int lambda);

/// For every basis cochain of the graded piece and every (arity+1)-tuple of
/// monomial fields x^a d/dx with 0 <= a <= max_exponent, asserts that
/// delta_eval agrees with evaluate_cochain(delta_symbolic(e)) exactly.
/// Exhaustive by construction; the exponent grid is partitioned across
/// threads.
CrosscheckReport crosscheck_delta(int arity, int lambda, bool relative, int max_exponent);

}  // namespace vectcoh
