#pragma once

#include <cstdint>
#include <stdexcept>

// Overflow-checked 64-bit integer arithmetic. Every operation throws
// std::overflow_error instead of wrapping.
namespace hcluster::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

// Exact division; the caller guarantees b divides a.
inline std::int64_t div_exact(std::int64_t a, std::int64_t b) {
  if (b == 0) throw std::domain_error("division by zero");
  if (b == -1) return neg(a);
  if (a % b != 0) throw std::domain_error("inexact division");
  return a / b;
}

}  // namespace hcluster::checked
