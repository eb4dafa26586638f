#include "kschur/matrix.hpp"

#include <string>

#include "kschur/errors.hpp"

namespace kschur {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix id(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t inner = b.size();
  const std::size_t m = inner == 0 ? 0 : b[0].size();
  IntMatrix c(n, std::vector<Integer>(m));
  for (std::size_t i = 0; i < n; ++i) {
    ensure(a[i].size() == inner, "matrix dimension mismatch");
    for (std::size_t t = 0; t < inner; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (b[t][j] != 0) c[i][j] += a[i][t] * b[t][j];
    }
  }
  return c;
}

IntMatrix unitriangular_inverse(const IntMatrix& upper) {
  const std::size_t n = upper.size();
  for (std::size_t i = 0; i < n; ++i) {
    ensure(upper[i].size() == n, "matrix is not square");
    ensure(upper[i][i] == 1, "diagonal entry " + std::to_string(i) + " is not 1");
    for (std::size_t j = 0; j < i; ++j)
      ensure(upper[i][j] == 0, "nonzero entry below the diagonal at (" +
                                   std::to_string(i) + "," + std::to_string(j) + ")");
  }
  // Solve U X = I column by column, bottom row first.
  IntMatrix inv(n, std::vector<Integer>(n));
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t ii = col + 1; ii-- > 0;) {
      Integer acc = ii == col ? Integer(1) : Integer(0);
      for (std::size_t t = ii + 1; t <= col; ++t)
        if (upper[ii][t] != 0) acc -= upper[ii][t] * inv[t][col];
      inv[ii][col] = acc;
    }
  }
  return inv;
}

}  // namespace kschur
