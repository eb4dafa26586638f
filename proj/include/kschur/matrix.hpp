#pragma once

#include <vector>

#include "kschur/integer.hpp"

namespace kschur {

/// Dense row-major integer matrix.
using IntMatrix = std::vector<std::vector<Integer>>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// Inverse of an upper unitriangular integer matrix by exact back
/// substitution. Throws InternalError if the input has a nonzero entry
/// below the diagonal or a diagonal entry other than 1.
IntMatrix unitriangular_inverse(const IntMatrix& upper);

}  // namespace kschur
