#pragma once

#include <optional>
#include <vector>

#include "homcat/mat.hpp"

namespace homcat {

using Vec = std::vector<mpq_class>;

/// Reduced row echelon form; returns the pivot columns. Deterministic:
/// pivots are the first nonzero entry scanning left to right, no reordering
/// heuristics.
struct Rref {
    Mat m;
    std::vector<int> pivots;
};
Rref rref(const Mat& m);

int rank(const Mat& m);

/// Basis of the right null space, in reduced column echelon form, ordered by
/// free-column position.
std::vector<Vec> kernel_basis(const Mat& m);

/// Canonical solution of m*x = b (free variables zero), or nullopt when the
/// system is inconsistent.
std::optional<Vec> solve(const Mat& m, const Vec& b);

/// Representatives in span(total) of a basis of span(total)/span(subspace);
/// greedy selection in input order. Throws if a subspace vector lies outside
/// span(total).
struct SubspaceNotContained : std::runtime_error {
    using std::runtime_error::runtime_error;
};
std::vector<Vec> quotient_basis(Field f, int ambient_dim, const std::vector<Vec>& subspace,
                                const std::vector<Vec>& total);

Mat from_columns(Field f, int ambient_dim, const std::vector<Vec>& cols);
Vec mat_vec(const Mat& m, const Vec& x);

}  // namespace homcat
