#include "vectcoh/selftest.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "vectcoh/cohomology.hpp"
#include "vectcoh/oracle.hpp"

namespace vectcoh {

bool SelftestReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

long SelftestReport::total_checked() const {
    long n = 0;
    for (const auto& c : checks) n += c.checked;
    return n;
}

const CheckResult* SelftestReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.passed) return &c;
    return nullptr;
}

namespace {

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 10);
    return Rational(num(rng), den(rng));
}

Polynomial random_polynomial(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    int d = deg(rng);
    std::vector<Rational> c(static_cast<size_t>(d) + 1);
    for (auto& x : c) x = random_rational(rng);
    return Polynomial(std::move(c));
}

void fail(CheckResult& r, const std::string& counterexample) {
    if (r.passed) {
        r.passed = false;
        r.counterexample = counterexample;
    }
}

CheckResult check_pascal() {
    CheckResult r{"binomial-pascal"};
    for (long n = 1; n <= 64; ++n) {
        if (binomial(n, 0) != 1) fail(r, "binomial(" + std::to_string(n) + ",0) != 1");
        if (binomial(n, n) != 1) fail(r, "binomial(" + std::to_string(n) + "," + std::to_string(n) + ") != 1");
        r.checked += 2;
        for (long k = 1; k <= n; ++k) {
            ++r.checked;
            if (binomial(n, k) != binomial(n - 1, k - 1) + binomial(n - 1, k)) {
                std::ostringstream os;
                os << "binomial(" << n << "," << k << ") = " << binomial(n, k).get_str()
                   << " != " << binomial(n - 1, k - 1).get_str() << " + "
                   << binomial(n - 1, k).get_str();
                fail(r, os.str());
            }
        }
    }
    if (binomial(3, 7) != 0) fail(r, "binomial(3,7) != 0");
    ++r.checked;
    return r;
}

CheckResult check_rational_axioms() {
    CheckResult r{"rational-axioms"};
    std::mt19937 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        ++r.checked;
        if ((a + b) + c != a + (b + c)) fail(r, "associativity(+): " + a.str() + "," + b.str() + "," + c.str());
        if ((a * b) * c != a * (b * c)) fail(r, "associativity(*)");
        if (a + b != b + a || a * b != b * a) fail(r, "commutativity");
        if (a * (b + c) != a * b + a * c) fail(r, "distributivity");
        Rational s = a * b + c;
        if (sgn(s.denominator()) <= 0) fail(r, "canonical form: denominator <= 0");
        BigInt g;
        BigInt num = s.numerator();
        BigInt den = s.denominator();
        mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (g != 1) fail(r, "canonical form: gcd != 1 for " + s.str());
        if (Rational::from_string(s.str()) != s) fail(r, "string round-trip: " + s.str());
    }
    return r;
}

CheckResult check_leibniz() {
    CheckResult r{"polynomial-leibniz"};
    std::mt19937 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial p = random_polynomial(rng, 12), q = random_polynomial(rng, 12);
        ++r.checked;
        if ((p * q).derivative() != p.derivative() * q + p * q.derivative())
            fail(r, "d(pq) != p'q + pq' for p=" + p.str() + ", q=" + q.str());
    }
    return r;
}

CheckResult check_jacobi() {
    CheckResult r{"bracket-jacobi"};
    std::mt19937 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        VectorField x{random_polynomial(rng, 8)}, y{random_polynomial(rng, 8)},
            z{random_polynomial(rng, 8)};
        ++r.checked;
        Polynomial jac = bracket(bracket(x, y), z).f + bracket(bracket(y, z), x).f +
                         bracket(bracket(z, x), y).f;
        if (!jac.is_zero()) fail(r, "Jacobi identity violated");
        if (!bracket(x, x).f.is_zero()) fail(r, "[X,X] != 0");
    }
    return r;
}

CheckResult check_lie_action() {
    CheckResult r{"lie-derivative-action"};
    std::mt19937 rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        VectorField x{random_polynomial(rng, 6)}, y{random_polynomial(rng, 6)};
        std::uniform_int_distribution<int> lam(-5, 8);
        Density u{random_polynomial(rng, 6), lam(rng)};
        ++r.checked;
        Density lhs = lie_derivative(bracket(x, y), u);
        Density rhs1 = lie_derivative(x, lie_derivative(y, u));
        Density rhs2 = lie_derivative(y, lie_derivative(x, u));
        if (lhs.phi != rhs1.phi - rhs2.phi) fail(r, "L_[X,Y] != L_X L_Y - L_Y L_X");
    }
    return r;
}

CheckResult check_evaluate_multilinear() {
    CheckResult r{"evaluate-multilinear-antisymmetric"};
    std::mt19937 rng(15);
    std::uniform_int_distribution<int> pick_k(1, 3);
    std::uniform_int_distribution<int> pick_lam(-2, 8);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 60; ++trial) {
        int k = pick_k(rng);
        int lam = pick_lam(rng);
        bool rel = coin(rng) == 1;
        CochainBasis basis = enumerate_basis(k, lam, rel);
        if (basis.size() == 0) continue;
        SymbolicCochain c(k, lam, rel);
        for (int i = 0; i < basis.size(); ++i) c.add_term(basis.tuples[static_cast<size_t>(i)], random_rational(rng));
        std::vector<VectorField> args;
        for (int i = 0; i < k; ++i) args.push_back({random_polynomial(rng, 6)});
        ++r.checked;
        if (k >= 2) {
            auto swapped = args;
            std::swap(swapped[0], swapped[1]);
            if (evaluate_cochain(c, args).phi != -evaluate_cochain(c, swapped).phi)
                fail(r, "antisymmetry violated");
        }
        VectorField u{random_polynomial(rng, 6)};
        Rational s = random_rational(rng);
        auto plus = args;
        plus[0] = {args[0].f + u.f};
        auto scaled = args;
        scaled[0] = {s * args[0].f};
        auto alt = args;
        alt[0] = u;
        if (evaluate_cochain(c, plus).phi != evaluate_cochain(c, args).phi + evaluate_cochain(c, alt).phi)
            fail(r, "additivity violated in slot 0");
        if (evaluate_cochain(c, scaled).phi != (s * evaluate_cochain(c, args).phi))
            fail(r, "homogeneity violated in slot 0");
    }
    return r;
}

CheckResult check_basis_enumeration(int max_lambda) {
    CheckResult r{"basis-brute-force"};
    int top = std::min(max_lambda, 30);
    for (int k = 0; k <= kMaxArity; ++k) {
        for (int lam = -4; lam <= top; ++lam) {
            for (int rel = 0; rel <= 1; ++rel) {
                CochainBasis basis = enumerate_basis(k, lam, rel == 1);
                // Independent generate-and-filter enumeration.
                std::vector<OrderTuple> brute;
                int target = lam + k;
                if (k == 0) {
                    if (target == 0) brute.push_back({});
                } else if (target >= 0) {
                    OrderTuple t(static_cast<size_t>(k), 0);
                    while (true) {
                        long sum = 0;
                        bool ok = true;
                        for (int i = 0; i < k; ++i) {
                            sum += t[static_cast<size_t>(i)];
                            if (t[static_cast<size_t>(i)] < (rel == 1 ? 2 : 0)) ok = false;
                            if (i > 0 && t[static_cast<size_t>(i)] <= t[static_cast<size_t>(i) - 1]) ok = false;
                        }
                        if (ok && sum == target) brute.push_back(t);
                        int pos = k - 1;
                        while (pos >= 0 && t[static_cast<size_t>(pos)] == target) {
                            t[static_cast<size_t>(pos)] = 0;
                            --pos;
                        }
                        if (pos < 0) break;
                        ++t[static_cast<size_t>(pos)];
                    }
                    std::sort(brute.begin(), brute.end());
                }
                ++r.checked;
                if (basis.tuples != brute) {
                    std::ostringstream os;
                    os << "enumerate_basis(" << k << "," << lam << "," << (rel ? "rel" : "abs")
                       << ") has " << basis.tuples.size() << " tuples, brute force finds "
                       << brute.size();
                    fail(r, os.str());
                }
            }
        }
    }
    return r;
}

CheckResult check_relative_vanishing(int max_lambda) {
    CheckResult r{"relative-vanishing-on-aff1"};
    int top = std::min(max_lambda, 12);
    for (int k = 1; k <= 3; ++k) {
        for (int lam = 0; lam <= top; ++lam) {
            CochainBasis basis = enumerate_basis(k, lam, true);
            for (int i = 0; i < basis.size(); ++i) {
                SymbolicCochain e = basis.element(i);
                for (int slot = 0; slot < k; ++slot) {
                    for (int aff = 0; aff <= 1; ++aff) {
                        std::vector<VectorField> args;
                        for (int a = 0; a < k; ++a)
                            args.push_back(VectorField::monomial(a == slot ? aff : lam + a + 2));
                        ++r.checked;
                        if (!evaluate_cochain(e, args).is_zero())
                            fail(r, "relative basis element does not vanish on aff(1)");
                    }
                }
            }
        }
    }
    return r;
}

CheckResult check_delta_squared(int max_lambda) {
    CheckResult r{"delta-squared-zero"};
    for (int k = 0; k <= 2; ++k)
        for (int lam = -3; lam <= max_lambda; ++lam)
            for (int rel = 0; rel <= 1; ++rel) {
                CochainBasis basis = enumerate_basis(k, lam, rel == 1);
                for (int i = 0; i < basis.size(); ++i) {
                    ++r.checked;
                    SymbolicCochain dd = delta_symbolic(delta_symbolic(basis.element(i)));
                    if (!dd.is_zero()) {
                        std::ostringstream os;
                        os << "delta^2 != 0 at k=" << k << " lambda=" << lam
                           << (rel ? " relative" : " absolute") << " element " << i;
                        fail(r, os.str());
                    }
                }
            }
    return r;
}

CheckResult check_image_in_kernel(int max_lambda) {
    CheckResult r{"image-in-kernel-matrix"};
    for (int k = 0; k <= 2; ++k)
        for (int lam = -3; lam <= max_lambda; ++lam)
            for (int rel = 0; rel <= 1; ++rel) {
                DeltaMatrix down = delta_matrix(k, lam, rel == 1);
                DeltaMatrix up = delta_matrix(k + 1, lam, rel == 1);
                for (int j = 0; j < down.entries.cols; ++j) {
                    std::vector<Rational> col(static_cast<size_t>(down.entries.rows));
                    for (int i = 0; i < down.entries.rows; ++i) col[static_cast<size_t>(i)] = down.entries.at(i, j);
                    ++r.checked;
                    auto image = up.entries.apply(col);
                    if (!std::all_of(image.begin(), image.end(),
                                     [](const Rational& x) { return x.is_zero(); }))
                        fail(r, "a coboundary column is not in the next kernel");
                }
            }
    return r;
}

CheckResult check_coboundary_closed_form(int max_lambda) {
    CheckResult r{"relative-coboundary-closed-form"};
    for (int n = 9; n <= std::min(15, max_lambda); ++n) {
        DeltaMatrix m = delta_matrix(2, n, true);
        for (int k = 1;; ++k) {
            if (2 * k + 2 > n) break;
            for (int i = 2 * k + 2; 2 * i < n + 2 + k; ++i) {
                OrderTuple codomain{k + 1, i - k, n + 2 - i};
                if (codomain[0] >= codomain[1] || codomain[1] >= codomain[2]) continue;
                int row = m.codomain.index_of(codomain);
                if (row < 0) continue;
                int lo = std::min(i, n + 2 - i), hi = std::max(i, n + 2 - i);
                if (lo == hi) continue;
                int col = m.domain.index_of({lo, hi});
                if (col < 0) continue;
                Rational expected{binomial(i, k + 1) - binomial(i, k)};
                if (i > n + 2 - i) expected = -expected;
                ++r.checked;
                if (m.entries.at(row, col) != expected) {
                    std::ostringstream os;
                    os << "closed-form entry mismatch at n=" << n << " k=" << k << " i=" << i
                       << ": got " << m.entries.at(row, col).str() << ", expected "
                       << expected.str();
                    fail(r, os.str());
                }
            }
        }
    }
    return r;
}

CheckResult check_oracle_crosscheck(int max_lambda) {
    CheckResult r{"oracle-crosscheck"};
    for (int k = 0; k <= 3; ++k)
        for (int lam = -3; lam <= max_lambda; ++lam)
            for (int rel = 0; rel <= 1; ++rel) {
                CrosscheckReport rep =
                    crosscheck_delta(k, lam, rel == 1, default_max_exponent(k, lam));
                r.checked += rep.checked;
                if (!rep.passed()) {
                    const auto& f = rep.failures.front();
                    std::ostringstream os;
                    os << "delta_eval disagrees with delta_symbolic at k=" << k
                       << " lambda=" << lam << (rel ? " relative" : " absolute") << " args=(";
                    for (size_t i = 0; i < f.arg_exponents.size(); ++i)
                        os << (i ? "," : "") << "x^" << f.arg_exponents[i];
                    os << ")";
                    fail(r, os.str());
                }
            }
    return r;
}

CheckResult check_relative_cocycle_invariance(int max_lambda) {
    CheckResult r{"relative-cocycle-aff1-invariance"};
    for (int lam = 0; lam <= max_lambda; ++lam) {
        DeltaMatrix up = delta_matrix(3, lam, true);
        for (const auto& z : kernel_basis(up.entries)) {
            ++r.checked;
            if (!check_aff1_invariance(up.domain.from_coordinates(z)))
                fail(r, "relative 3-cocycle fails aff(1)-invariance at lambda=" + std::to_string(lam));
        }
    }
    return r;
}

}  // namespace

SelftestReport run_selftest(int max_lambda) {
    SelftestReport report;
    report.checks.push_back(check_pascal());
    report.checks.push_back(check_rational_axioms());
    report.checks.push_back(check_leibniz());
    report.checks.push_back(check_jacobi());
    report.checks.push_back(check_lie_action());
    report.checks.push_back(check_evaluate_multilinear());
    report.checks.push_back(check_basis_enumeration(max_lambda));
    report.checks.push_back(check_relative_vanishing(max_lambda));
    report.checks.push_back(check_delta_squared(max_lambda));
    report.checks.push_back(check_image_in_kernel(max_lambda));
    report.checks.push_back(check_coboundary_closed_form(max_lambda));
    report.checks.push_back(check_oracle_crosscheck(max_lambda));
    report.checks.push_back(check_relative_cocycle_invariance(max_lambda));
    return report;
}

}  // namespace vectcoh
