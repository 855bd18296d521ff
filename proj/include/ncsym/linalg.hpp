#pragma once

// Exact rank computation over the rationals by fraction-free elimination.

#include <cstddef>
#include <vector>

#include "ncsym/integer.hpp"

namespace ncsym::linalg {

using Matrix = std::vector<std::vector<Integer>>;

/// Rank of an integer matrix (rows may be ragged only if all empty).
/// Uses Bareiss elimination, so every intermediate entry stays integral.
std::size_t rank(Matrix matrix);

}  // namespace ncsym::linalg
