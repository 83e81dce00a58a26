#pragma once

#include "vectcoh/cochain.hpp"
#include "vectcoh/linalg.hpp"

namespace vectcoh {

/// Chevalley-Eilenberg coboundary at the symbol level, arities 0..3.
///
/// Sign normalization (fixed; matches the coboundary matrices the engine
/// reports and certifies):
///   delta(C)(x_0..x_k) = sum_i (-1)^{i+1} L_{x_i} C(..no x_i..)
///                      + sum_{i<j} (-1)^{i+j+1} C([x_i,x_j], ..no x_i,x_j..)
///
/// The Lie-derivative terms expand via L^l_{f d/dx}(phi dx^l) =
/// (f phi' + l f' phi) dx^l, the bracket insertions via the Leibniz
/// expansion of the m-th derivative of f g' - f' g. Throws ArityError on
/// arity-4 input.
SymbolicCochain delta_symbolic(const SymbolicCochain& c);

/// Exact matrix of delta between enumerated bases: rows indexed by codomain
/// tuples, columns by domain tuples, column j = coordinates of
/// delta_symbolic(j-th domain basis element).
struct DeltaMatrix {
    CochainBasis domain;
    CochainBasis codomain;
    ExactMatrix entries;
};

DeltaMatrix delta_matrix(int arity, int lambda, bool relative);

/// True iff C([X,Y],Z,T) - C([X,Z],Y,T) + C([X,T],Y,Z) = L^lambda_X(C)(Y,Z,T)
/// for X in {d/dx, x d/dx} and all monomial arguments x^a d/dx with
/// a <= lambda+6, checked through the evaluation oracle. Requires arity 3.
bool check_aff1_invariance(const SymbolicCochain& c);

}  // namespace vectcoh
