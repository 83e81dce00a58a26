#pragma once

#include <json.hpp>

#include <vector>

#include "vectcoh/rational.hpp"

namespace vectcoh {

/// Dense exact matrix over Rational, row-major.
struct ExactMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> data;

    ExactMatrix() = default;
    ExactMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}

    Rational& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    const Rational& at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

    static ExactMatrix identity(int n);
    ExactMatrix with_extra_row(const std::vector<Rational>& row) const;
    std::vector<Rational> apply(const std::vector<Rational>& x) const;  // A * x

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

    nlohmann::ordered_json to_json() const;  // array of arrays of rational strings
};

/// Row echelon data: transform * input = rref, transform invertible.
/// Elimination is fraction-free (Bareiss) on the integerized rows with a
/// final rational normalization; pivots are chosen deterministically
/// (leftmost nonzero column, topmost row).
struct Echelon {
    ExactMatrix rref;
    ExactMatrix transform;
    std::vector<int> pivot_cols;

    int rank() const { return static_cast<int>(pivot_cols.size()); }
};

Echelon eliminate(const ExactMatrix& a);

int rank(const ExactMatrix& a);

/// Null space basis; one vector per free column, in ascending column order.
std::vector<std::vector<Rational>> kernel_basis(const ExactMatrix& a);

/// Either a solution of A x = b or a certificate of inconsistency:
/// a row combination y with y^T A = 0 and y^T b != 0.
struct Membership {
    bool member = false;
    std::vector<Rational> solution;  // when member
    std::vector<Rational> witness;   // when not: primitive integer covector
};

Membership image_membership(const ExactMatrix& a, const std::vector<Rational>& b);

/// True iff the covector lies in the row space of A.
bool in_rowspace(const ExactMatrix& a, const std::vector<Rational>& row);

}  // namespace vectcoh
