#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace contact_census {

enum class ErrorCode {
  InvalidArgument = 1,
  Domain = 2,
  Overflow = 3,
  WindowTooSmall = 4,
  Parse = 5,
  Internal = 6
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

// Checked 64-bit arithmetic; throws Error(Overflow) instead of wrapping.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace contact_census
