#include "vectcoh/delta.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "vectcoh/errors.hpp"
#include "vectcoh/oracle.hpp"

namespace vectcoh {

namespace {

using RawTuple = std::vector<int>;
using RawTensor = std::map<RawTuple, Rational>;

void raw_add(RawTensor& tensor, RawTuple t, const Rational& c) {
    if (c.is_zero()) return;
    auto it = tensor.find(t);
    if (it == tensor.end()) {
        tensor.emplace(std::move(t), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) tensor.erase(it);
    }
}

// Places `fixed` orders at their argument positions and the remaining
// orders (in their given sequence) at the free positions, ascending.
RawTuple place(int nargs, std::initializer_list<std::pair<int, int>> fixed,
               const int* rest, int rest_count) {
    RawTuple out(static_cast<size_t>(nargs), -1);
    for (const auto& [pos, order] : fixed) out[static_cast<size_t>(pos)] = order;
    int r = 0;
    for (int p = 0; p < nargs; ++p)
        if (out[static_cast<size_t>(p)] < 0) out[static_cast<size_t>(p)] = rest[r++];
    (void)rest_count;
    return out;
}

std::string raw_str(const RawTuple& t) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) os << ",";
        os << t[i];
    }
    os << ")";
    return os.str();
}

// The accumulated raw tensor of an alternating operator must vanish on
// tuples with repeated orders and be sign-consistent across permutations
// of each strictly increasing tuple. A violation means the Leibniz
// bookkeeping is broken, so fail loudly rather than emit a wrong matrix.
void verify_alternating(const RawTensor& tensor) {
    for (const auto& [t, c] : tensor) {
        auto canon = canonicalize_term(t, c);
        if (!canon)
            throw std::logic_error("delta_symbolic: nonzero coefficient " + c.str() +
                                   " on repeated-order tuple " + raw_str(t));
        if (std::is_sorted(t.begin(), t.end())) continue;
        auto it = tensor.find(canon->first);
        const Rational expected = it == tensor.end() ? Rational() : it->second;
        if (canon->second != expected)
            throw std::logic_error("delta_symbolic: raw tensor is not alternating at " +
                                   raw_str(t));
    }
}

}  // namespace

SymbolicCochain delta_symbolic(const SymbolicCochain& c) {
    const int k = c.arity();
    if (k + 1 > kMaxArity)
        throw ArityError("delta_symbolic: unsupported arity " + std::to_string(k));
    const int nargs = k + 1;
    const Rational lambda(c.lambda());

    RawTensor raw;
    std::vector<int> t(static_cast<size_t>(k));
    std::vector<int> perm(static_cast<size_t>(k));
    for (const auto& [sorted, coeff] : c.terms()) {
        for (int i = 0; i < k; ++i) perm[static_cast<size_t>(i)] = i;
        // Expand the stored determinant term over its full antisymmetric
        // tensor: every slot ordering with the permutation sign.
        do {
            int inversions = 0;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inversions;
            Rational sc = (inversions % 2 == 0) ? coeff : -coeff;
            for (int i = 0; i < k; ++i) t[static_cast<size_t>(i)] = sorted[static_cast<size_t>(perm[static_cast<size_t>(i)])];

            // Lie-derivative terms: argument at position i enters with
            // order 0 against phi' (one slot order raised) and order 1
            // against lambda * phi.
            for (int i = 0; i < nargs; ++i) {
                const Rational s = (i % 2 == 0) ? -sc : sc;
                for (int b = 0; b < k; ++b) {
                    ++t[static_cast<size_t>(b)];
                    raw_add(raw, place(nargs, {{i, 0}}, t.data(), k), s);
                    --t[static_cast<size_t>(b)];
                }
                if (!lambda.is_zero()) raw_add(raw, place(nargs, {{i, 1}}, t.data(), k), s * lambda);
            }

            // Bracket insertions: [x_i, x_j] enters the first slot, whose
            // order m expands by Leibniz as
            // sum_r binom(m,r) (f_i^(r) f_j^(m-r+1) - f_i^(r+1) f_j^(m-r)).
            // For k = 0 there is a single argument and no bracket terms.
            for (int i = 0; k > 0 && i < nargs; ++i) {
                for (int j = i + 1; j < nargs; ++j) {
                    const Rational s = ((i + j) % 2 == 0) ? -sc : sc;
                    const int m = t[0];
                    for (int r = 0; r <= m; ++r) {
                        const Rational w = s * Rational(binomial(m, r));
                        raw_add(raw, place(nargs, {{i, r}, {j, m - r + 1}}, t.data() + 1, k - 1), w);
                        raw_add(raw, place(nargs, {{i, r + 1}, {j, m - r}}, t.data() + 1, k - 1), -w);
                    }
                }
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    verify_alternating(raw);

    SymbolicCochain out(k + 1, c.lambda(), c.relative());
    for (const auto& [tuple, coeff] : raw)
        if (std::is_sorted(tuple.begin(), tuple.end()) &&
            std::adjacent_find(tuple.begin(), tuple.end()) == tuple.end())
            out.add_term(tuple, coeff);
    return out;
}

DeltaMatrix delta_matrix(int arity, int lambda, bool relative) {
    if (arity < 0 || arity + 1 > kMaxArity)
        throw ArityError("delta_matrix: arity must be in [0,3], got " + std::to_string(arity));
    DeltaMatrix m;
    m.domain = enumerate_basis(arity, lambda, relative);
    m.codomain = enumerate_basis(arity + 1, lambda, relative);
    m.entries = ExactMatrix(m.codomain.size(), m.domain.size());
    for (int j = 0; j < m.domain.size(); ++j) {
        SymbolicCochain d = delta_symbolic(m.domain.element(j));
        for (const auto& [t, coeff] : d.terms()) {
            int row = m.codomain.index_of(t);
            if (row < 0)
                throw std::logic_error("delta_matrix: output tuple outside codomain basis");
            m.entries.at(row, j) = coeff;
        }
    }
    return m;
}

bool check_aff1_invariance(const SymbolicCochain& c) {
    if (c.arity() != 3) throw ArityError("check_aff1_invariance: arity must be 3");
    const int max_exp = std::max(0, c.lambda() + 6);
    const std::array<VectorField, 2> affine = {VectorField::monomial(0), VectorField::monomial(1)};
    for (const auto& x : affine) {
        for (int a = 0; a <= max_exp; ++a) {
            VectorField y = VectorField::monomial(a);
            VectorField xy = bracket(x, y);
            for (int b = 0; b <= max_exp; ++b) {
                VectorField z = VectorField::monomial(b);
                VectorField xz = bracket(x, z);
                for (int d = 0; d <= max_exp; ++d) {
                    VectorField w = VectorField::monomial(d);
                    VectorField xw = bracket(x, w);
                    std::array<VectorField, 3> a1 = {xy, z, w};
                    std::array<VectorField, 3> a2 = {xz, y, w};
                    std::array<VectorField, 3> a3 = {xw, y, z};
                    std::array<VectorField, 3> yzw = {y, z, w};
                    Polynomial lhs = evaluate_cochain(c, a1).phi - evaluate_cochain(c, a2).phi +
                                     evaluate_cochain(c, a3).phi;
                    Density rhs = lie_derivative(x, evaluate_cochain(c, yzw));
                    if (lhs != rhs.phi) return false;
                }
            }
        }
    }
    return true;
}

}  // namespace vectcoh
