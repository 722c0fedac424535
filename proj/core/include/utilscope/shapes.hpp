#pragma once

#include <cstdint>

namespace utilscope {

// Logical NCHW tensor shape. All dimensions are at least 1.
struct TensorShape {
  std::int64_t n = 1;  // batch
  std::int64_t c = 1;  // channels
  std::int64_t h = 1;  // height
  std::int64_t w = 1;  // width

  std::int64_t elements() const { return n * c * h * w; }
  bool operator==(const TensorShape&) const = default;
};

// Size of one scalar in memory: 2 for half precision, 4 for single.
struct ScalarWidth {
  std::int64_t bytes_per_scalar = 2;

  static ScalarWidth half() { return {2}; }
  static ScalarWidth single() { return {4}; }
  bool operator==(const ScalarWidth&) const = default;
};

void validate(const TensorShape& shape);
void validate(const ScalarWidth& width);

}  // namespace utilscope
