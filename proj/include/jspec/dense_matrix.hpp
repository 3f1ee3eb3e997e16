#pragma once

#include <vector>

#include "jspec/rational.hpp"

namespace jspec {

// Literal N x N matrix with exact rational entries; the small-instance
// cross-check representation.
struct DenseSymmetricMatrix {
  int order = 0;
  std::vector<Rat> entries;  // row-major

  DenseSymmetricMatrix() = default;
  explicit DenseSymmetricMatrix(int n) : order(n), entries(size_t(n) * n, Rat(0)) {}

  Rat& at(int i, int j) { return entries[size_t(i) * order + j]; }
  const Rat& at(int i, int j) const { return entries[size_t(i) * order + j]; }

  bool is_symmetric() const {
    for (int i = 0; i < order; ++i)
      for (int j = i + 1; j < order; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }
};

}  // namespace jspec
