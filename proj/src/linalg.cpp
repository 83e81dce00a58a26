#include "vectcoh/linalg.hpp"

#include <stdexcept>

namespace vectcoh {

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

ExactMatrix ExactMatrix::with_extra_row(const std::vector<Rational>& row) const {
    if (static_cast<int>(row.size()) != cols)
        throw std::invalid_argument("with_extra_row: length mismatch");
    ExactMatrix m(rows + 1, cols);
    m.data.assign(data.begin(), data.end());
    m.data.insert(m.data.end(), row.begin(), row.end());
    m.rows = rows + 1;
    return m;
}

std::vector<Rational> ExactMatrix::apply(const std::vector<Rational>& x) const {
    if (static_cast<int>(x.size()) != cols) throw std::invalid_argument("apply: length mismatch");
    std::vector<Rational> y(static_cast<size_t>(rows));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) y[static_cast<size_t>(r)].add_mul(at(r, c), x[static_cast<size_t>(c)]);
    return y;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
}

nlohmann::ordered_json ExactMatrix::to_json() const {
    auto j = nlohmann::ordered_json::array();
    for (int r = 0; r < rows; ++r) {
        auto row = nlohmann::ordered_json::array();
        for (int c = 0; c < cols; ++c) row.push_back(at(r, c).str());
        j.push_back(std::move(row));
    }
    return j;
}

namespace {

BigInt lcm_of_denominators(const ExactMatrix& a, int row) {
    BigInt l = 1;
    for (int c = 0; c < a.cols; ++c) {
        const BigInt d = a.at(row, c).denominator();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    return l;
}

BigInt exact_div(const BigInt& num, const BigInt& den) {
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (sgn(r) != 0) throw std::logic_error("fraction-free elimination: inexact division");
    return q;
}

}  // namespace

Echelon eliminate(const ExactMatrix& a) {
    const int rows = a.rows;
    const int cols = a.cols;
    // Integerized working matrix [d_i * A_i | d_i * e_i], eliminated as one block.
    const int width = cols + rows;
    std::vector<BigInt> w(static_cast<size_t>(rows) * width);
    auto at = [&](int r, int c) -> BigInt& { return w[static_cast<size_t>(r) * width + c]; };
    for (int r = 0; r < rows; ++r) {
        BigInt d = lcm_of_denominators(a, r);
        for (int c = 0; c < cols; ++c) {
            const Rational& v = a.at(r, c);
            at(r, c) = v.numerator() * exact_div(d, v.denominator());
        }
        at(r, cols + r) = d;
    }

    std::vector<int> pivot_cols;
    BigInt prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && sgn(at(p, c)) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (int j = 0; j < width; ++j) std::swap(at(r, j), at(p, j));
        // One-step fraction-free update of the rows below the pivot.
        for (int i = r + 1; i < rows; ++i) {
            for (int j = 0; j < width; ++j) {
                if (j == c) continue;
                at(i, j) = exact_div(at(i, j) * at(r, c) - at(i, c) * at(r, j), prev);
            }
            at(i, c) = 0;
        }
        prev = at(r, c);
        pivot_cols.push_back(c);
        ++r;
    }

    // Rational normalization: unit pivots, then back-elimination above them.
    Echelon e;
    e.pivot_cols = pivot_cols;
    e.rref = ExactMatrix(rows, cols);
    e.transform = ExactMatrix(rows, rows);
    std::vector<std::vector<Rational>> rr(static_cast<size_t>(rows),
                                          std::vector<Rational>(static_cast<size_t>(width)));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < width; ++j) rr[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rational(at(i, j));
    for (int pr = static_cast<int>(pivot_cols.size()) - 1; pr >= 0; --pr) {
        int pc = pivot_cols[static_cast<size_t>(pr)];
        auto& row = rr[static_cast<size_t>(pr)];
        Rational inv = Rational(1) / row[static_cast<size_t>(pc)];
        for (int j = 0; j < width; ++j) row[static_cast<size_t>(j)] *= inv;
        for (int i = 0; i < pr; ++i) {
            Rational f = rr[static_cast<size_t>(i)][static_cast<size_t>(pc)];
            if (f.is_zero()) continue;
            for (int j = 0; j < width; ++j)
                rr[static_cast<size_t>(i)][static_cast<size_t>(j)].sub_mul(f, row[static_cast<size_t>(j)]);
        }
    }
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < width; ++j) {
            if (j < cols)
                e.rref.at(i, j) = rr[static_cast<size_t>(i)][static_cast<size_t>(j)];
            else
                e.transform.at(i, j - cols) = rr[static_cast<size_t>(i)][static_cast<size_t>(j)];
        }
    return e;
}

int rank(const ExactMatrix& a) { return eliminate(a).rank(); }

std::vector<std::vector<Rational>> kernel_basis(const ExactMatrix& a) {
    Echelon e = eliminate(a);
    std::vector<bool> is_pivot(static_cast<size_t>(a.cols), false);
    for (int c : e.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < a.cols; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        std::vector<Rational> v(static_cast<size_t>(a.cols));
        v[static_cast<size_t>(f)] = Rational(1);
        for (int pr = 0; pr < e.rank(); ++pr)
            v[static_cast<size_t>(e.pivot_cols[static_cast<size_t>(pr)])] = -e.rref.at(pr, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

// Scale to a primitive integer vector with positive leading entry.
std::vector<Rational> normalize_covector(std::vector<Rational> v) {
    BigInt l = 1;
    for (const auto& x : v) {
        const BigInt d = x.denominator();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    BigInt g = 0;
    for (const auto& x : v) {
        BigInt n = x.numerator() * exact_div(l, x.denominator());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    if (sgn(g) == 0) return v;
    Rational scale{l, g};
    int lead_sign = 0;
    for (const auto& x : v)
        if (!x.is_zero()) {
            lead_sign = x.sign();
            break;
        }
    if (lead_sign < 0) scale = -scale;
    for (auto& x : v) x *= scale;
    return v;
}

}  // namespace

Membership image_membership(const ExactMatrix& a, const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != a.rows)
        throw std::invalid_argument("image_membership: vector length does not match rows");
    Echelon e = eliminate(a);
    std::vector<Rational> y = e.transform.apply(b);
    Membership m;
    for (int r = e.rank(); r < a.rows; ++r) {
        if (!y[static_cast<size_t>(r)].is_zero()) {
            std::vector<Rational> w(static_cast<size_t>(a.rows));
            for (int c = 0; c < a.rows; ++c) w[static_cast<size_t>(c)] = e.transform.at(r, c);
            m.member = false;
            m.witness = normalize_covector(std::move(w));
            return m;
        }
    }
    m.member = true;
    m.solution.assign(static_cast<size_t>(a.cols), Rational());
    for (int pr = 0; pr < e.rank(); ++pr)
        m.solution[static_cast<size_t>(e.pivot_cols[static_cast<size_t>(pr)])] = y[static_cast<size_t>(pr)];
    return m;
}

bool in_rowspace(const ExactMatrix& a, const std::vector<Rational>& row) {
    if (static_cast<int>(row.size()) != a.cols)
        throw std::invalid_argument("in_rowspace: length mismatch");
    return rank(a) == rank(a.with_extra_row(row));
}

}  // namespace vectcoh
