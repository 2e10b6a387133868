#pragma once

#include <optional>
#include <vector>

#include "msplab/rat.hpp"

namespace msplab {

using Matrix = std::vector<std::vector<Rat>>;

// in-place reduced row echelon form; returns pivot columns
std::vector<int> rref(Matrix& m, int ncols);
// one solution of A x = b with free variables set to zero, nullopt if inconsistent
std::optional<std::vector<Rat>> solve_linear(const Matrix& A, const std::vector<Rat>& b, int* rank = nullptr);
// throws std::domain_error when singular
Matrix invert(const Matrix& A);

}  // namespace msplab
