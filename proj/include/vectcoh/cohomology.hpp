#pragma once

#include <optional>

#include "vectcoh/delta.hpp"

namespace vectcoh {

/// Non-membership certificate for one emitted representative: a covector
/// annihilating the coboundary image but not the representative.
struct RepresentativeCertificate {
    SymbolicCochain representative;
    std::vector<Rational> witness;  // over codomain tuples, primitive integer
};

/// Explicit coboundary-writing certificate: delta(preimage) = cocycle.
struct CoboundaryCertificate {
    SymbolicCochain cocycle;
    SymbolicCochain preimage;
};

struct CohomologyReport {
    int arity = 3;
    int lambda = 0;
    bool relative = false;
    int dim_cochains = 0;
    int dim_cocycles = 0;
    int dim_coboundaries = 0;
    int dim_cohomology = 0;
    std::vector<SymbolicCochain> representatives;
    std::vector<RepresentativeCertificate> certificates;
    // One entry per cocycle-basis vector that reduces to zero against the
    // image; together with the representatives these account for the whole
    // cocycle space.
    std::vector<CoboundaryCertificate> coboundary_certificates;
    std::optional<int> reference_dim;
    bool divergent_from_reference = false;

    nlohmann::ordered_json to_json() const;
};

/// Reference dimension table for dim H^3, weights 0..30.
std::optional<int> reference_dimension(int arity, int lambda, bool relative);

/// Assembles the graded piece: dim Z = dim ker(delta_k), dim B =
/// rank(delta_{k-1}), representatives from reducing kernel vectors against
/// the image with lexicographic pivot order, every representative
/// re-verified (closed, plus a non-membership witness). Arity 3 is the
/// published surface; arities 1 and 2 are reachable through the same call.
CohomologyReport cohomology(int arity, int lambda, bool relative);

struct Reduction {
    SymbolicCochain representative;
    SymbolicCochain certificate;  // delta(certificate) = input - representative
};

/// Reduces a cocycle against the coboundary image using the same pivot
/// order as cohomology(). Throws NotACocycleError (carrying the nonzero
/// delta) when the input is not closed.
Reduction reduce_mod_coboundaries(const SymbolicCochain& c);

/// True iff the covector is implied by the cocycle condition, i.e. lies in
/// the row space of the delta matrix C^arity -> C^{arity+1}. The relation
/// length must match the C^arity basis.
bool relation_in_rowspace(int arity, int lambda, bool relative,
                          const std::vector<Rational>& relation);

}  // namespace vectcoh
