#include "vectcoh/oracle.hpp"

#include <algorithm>
#include <array>
#include <thread>

#include "vectcoh/delta.hpp"
#include "vectcoh/errors.hpp"

namespace vectcoh {

namespace {

struct SignedPerm {
    std::array<int, kMaxArity> perm;
    int sign;
};

// All permutations of {0..k-1} with their signs, k <= kMaxArity.
const std::vector<SignedPerm>& permutations(int k) {
    static const std::vector<std::vector<SignedPerm>> all = [] {
        std::vector<std::vector<SignedPerm>> out(kMaxArity + 1);
        for (int k = 0; k <= kMaxArity; ++k) {
            std::vector<int> idx(static_cast<size_t>(k));
            for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
            do {
                int inversions = 0;
                for (int i = 0; i < k; ++i)
                    for (int j = i + 1; j < k; ++j)
                        if (idx[static_cast<size_t>(i)] > idx[static_cast<size_t>(j)]) ++inversions;
                SignedPerm sp{};
                for (int i = 0; i < k; ++i) sp.perm[static_cast<size_t>(i)] = idx[static_cast<size_t>(i)];
                sp.sign = (inversions % 2 == 0) ? 1 : -1;
                out[static_cast<size_t>(k)].push_back(sp);
            } while (std::next_permutation(idx.begin(), idx.end()));
        }
        return out;
    }();
    return all[static_cast<size_t>(k)];
}

}  // namespace

nlohmann::ordered_json Density::to_json() const {
    nlohmann::ordered_json j;
    j["lambda"] = lambda;
    j["phi"] = phi.to_json();
    return j;
}

VectorField bracket(const VectorField& x, const VectorField& y) {
    return {x.f * y.f.derivative() - x.f.derivative() * y.f};
}

Density lie_derivative(const VectorField& x, const Density& u) {
    Polynomial phi = x.f * u.phi.derivative() + Rational(u.lambda) * (x.f.derivative() * u.phi);
    return {std::move(phi), u.lambda};
}

Density evaluate_cochain(const SymbolicCochain& c, std::span<const VectorField> args) {
    const int k = c.arity();
    if (static_cast<int>(args.size()) != k)
        throw ArityError("evaluate_cochain: expected " + std::to_string(k) + " arguments, got " +
                         std::to_string(args.size()));
    Density out;
    out.lambda = c.lambda();
    if (c.is_zero()) return out;

    int max_order = 0;
    for (const auto& [t, coeff] : c.terms())
        if (!t.empty()) max_order = std::max(max_order, t.back());
    std::vector<std::vector<Polynomial>> deriv(static_cast<size_t>(k));
    for (int a = 0; a < k; ++a) {
        auto& da = deriv[static_cast<size_t>(a)];
        da.resize(static_cast<size_t>(max_order) + 1);
        da[0] = args[static_cast<size_t>(a)].f;
        for (int o = 1; o <= max_order; ++o) da[static_cast<size_t>(o)] = da[static_cast<size_t>(o) - 1].derivative();
    }

    long max_deg = 0;
    for (const auto& vf : args) max_deg += std::max(0, vf.f.degree());
    std::vector<Rational> acc(static_cast<size_t>(max_deg) + 1);
    std::array<const Polynomial*, kMaxArity> factors{};
    for (const auto& [t, coeff] : c.terms()) {
        for (const auto& sp : permutations(k)) {
            for (int a = 0; a < k; ++a)
                factors[static_cast<size_t>(a)] =
                    &deriv[static_cast<size_t>(a)][static_cast<size_t>(t[static_cast<size_t>(sp.perm[static_cast<size_t>(a)])])];
            accumulate_product(acc, sp.sign > 0 ? coeff : -coeff, factors.data(), k);
        }
    }
    out.phi = Polynomial(std::move(acc));
    return out;
}

// Alternating-sum coboundary, sign normalization matching delta_symbolic:
// delta(C)(x_0..x_k) = sum_i (-1)^{i+1} L_{x_i} C(..no x_i..)
//                    + sum_{i<j} (-1)^{i+j+1} C([x_i,x_j], ..no x_i,x_j..).
Density delta_eval(const SymbolicCochain& c, std::span<const VectorField> args) {
    const int k = c.arity();
    if (k + 1 > kMaxArity)
        throw ArityError("delta_eval: unsupported arity " + std::to_string(k));
    if (static_cast<int>(args.size()) != k + 1)
        throw ArityError("delta_eval: expected " + std::to_string(k + 1) + " arguments, got " +
                         std::to_string(args.size()));
    Density out;
    out.lambda = c.lambda();

    std::vector<VectorField> rest;
    rest.reserve(static_cast<size_t>(k));
    for (int i = 0; i <= k; ++i) {
        rest.clear();
        for (int j = 0; j <= k; ++j)
            if (j != i) rest.push_back(args[static_cast<size_t>(j)]);
        Density term = lie_derivative(args[static_cast<size_t>(i)], evaluate_cochain(c, rest));
        if (i % 2 == 0)
            out.phi = out.phi - term.phi;
        else
            out.phi = out.phi + term.phi;
    }
    for (int i = 0; i <= k; ++i) {
        for (int j = i + 1; j <= k; ++j) {
            rest.clear();
            rest.push_back(bracket(args[static_cast<size_t>(i)], args[static_cast<size_t>(j)]));
            for (int l = 0; l <= k; ++l)
                if (l != i && l != j) rest.push_back(args[static_cast<size_t>(l)]);
            Density term = evaluate_cochain(c, rest);
            if ((i + j) % 2 == 0)
                out.phi = out.phi - term.phi;
            else
                out.phi = out.phi + term.phi;
        }
    }
    return out;
}

nlohmann::ordered_json CrosscheckReport::to_json() const {
    nlohmann::ordered_json j;
    j["checked"] = checked;
    auto fails = nlohmann::ordered_json::array();
    for (const auto& f : failures) {
        nlohmann::ordered_json e;
        e["basis_tuple"] = f.basis_tuple;
        e["args"] = f.arg_exponents;
        e["lhs"] = f.lhs.to_json();
        e["rhs"] = f.rhs.to_json();
        fails.push_back(std::move(e));
    }
    j["failures"] = std::move(fails);
    return j;
}

int default_max_exponent(int arity, int lambda) {
    return std::max(0, lambda + arity + 3);
}

CrosscheckReport crosscheck_delta(int arity, int lambda, bool relative, int max_exponent) {
    if (arity + 1 > kMaxArity) throw ArityError("crosscheck_delta: arity must be at most 3");
    CrosscheckReport report;
    CochainBasis basis = enumerate_basis(arity, lambda, relative);
    if (basis.size() == 0 || max_exponent < 0) return report;

    struct Elem {
        SymbolicCochain e;
        SymbolicCochain de;
    };
    std::vector<Elem> elems;
    for (int i = 0; i < basis.size(); ++i) {
        SymbolicCochain e = basis.element(i);
        elems.push_back({e, delta_symbolic(e)});
    }

    const int nargs = arity + 1;
    const int base = max_exponent + 1;
    const size_t max_failures = 8;

    struct Chunk {
        long checked = 0;
        std::vector<CrosscheckFailure> failures;
    };
    unsigned hw = std::thread::hardware_concurrency();
    int nthreads = static_cast<int>(std::clamp<unsigned>(hw, 1u, 8u));
    nthreads = std::min(nthreads, base);
    std::vector<Chunk> chunks(static_cast<size_t>(base));

    auto run_range = [&](int a0_begin, int a0_end) {
        std::vector<VectorField> args(static_cast<size_t>(nargs));
        std::vector<int> exps(static_cast<size_t>(nargs), 0);
        for (int a0 = a0_begin; a0 < a0_end; ++a0) {
            Chunk& chunk = chunks[static_cast<size_t>(a0)];
            exps.assign(static_cast<size_t>(nargs), 0);
            exps[0] = a0;
            while (true) {
                for (int i = 0; i < nargs; ++i)
                    args[static_cast<size_t>(i)] = VectorField::monomial(exps[static_cast<size_t>(i)]);
                for (const auto& el : elems) {
                    Density lhs = delta_eval(el.e, args);
                    Density rhs = evaluate_cochain(el.de, args);
                    ++chunk.checked;
                    if (!(lhs == rhs) && chunk.failures.size() < max_failures)
                        chunk.failures.push_back(
                            {el.e.terms().begin()->first, exps, std::move(lhs), std::move(rhs)});
                }
                // Odometer over positions 1..nargs-1; position 0 is the chunk key.
                int pos = nargs - 1;
                while (pos >= 1 && exps[static_cast<size_t>(pos)] == max_exponent) {
                    exps[static_cast<size_t>(pos)] = 0;
                    --pos;
                }
                if (pos < 1) break;
                ++exps[static_cast<size_t>(pos)];
            }
        }
    };

    if (nthreads <= 1) {
        run_range(0, base);
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < nthreads; ++t) {
            int begin = base * t / nthreads;
            int end = base * (t + 1) / nthreads;
            threads.emplace_back(run_range, begin, end);
        }
        for (auto& t : threads) t.join();
    }
    for (const auto& chunk : chunks) {
        report.checked += chunk.checked;
        for (const auto& f : chunk.failures)
            if (report.failures.size() < max_failures) report.failures.push_back(f);
    }
    return report;
}

}  // namespace vectcoh
