#include "contact_census/error.hpp"

namespace contact_census {

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer overflow in addition");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer overflow in subtraction");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer overflow in multiplication");
  return r;
}

}  // namespace contact_census
