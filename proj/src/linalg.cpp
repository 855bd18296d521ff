#include "ncsym/linalg.hpp"

#include <utility>

namespace ncsym::linalg {

std::size_t rank(Matrix m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  Integer prevPivot = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        // Exact division: Sylvester's identity guarantees divisibility.
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prevPivot;
      }
      m[i][c] = 0;
    }
    prevPivot = m[r][c];
    ++r;
  }
  return r;
}

}  // namespace ncsym::linalg
