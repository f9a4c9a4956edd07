#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "contact_census/farey.hpp"

namespace contact_census {

// Negative continued fraction -p/q = r0 - 1/(r1 - 1/(... - 1/rk)), all ri <= -2.
class NegContFrac {
 public:
  explicit NegContFrac(std::vector<std::int64_t> coeffs);

  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  std::int64_t operator[](std::size_t i) const { return coeffs_[i]; }

  friend bool operator==(const NegContFrac&, const NegContFrac&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

// The value reached when cf_step collapses everything: slope -1.
struct TerminalMinusOne {
  friend bool operator==(const TerminalMinusOne&, const TerminalMinusOne&) = default;
};

using CfStep = std::variant<NegContFrac, TerminalMinusOne>;

struct BlockShape {
  std::vector<std::int64_t> sizes;
  // Product of (size + 1).
  std::int64_t descriptor_count() const;
};

// Longer expansions (e.g. p/(p-1) for huge p) raise ErrorCode::Overflow.
inline constexpr std::size_t kMaxCfLength = std::size_t{1} << 20;

NegContFrac to_cf(std::int64_t p, std::int64_t q);
Slope from_cf(const NegContFrac& cf);
CfStep cf_step(const NegContFrac& cf);
std::vector<Slope> path_via_cf(std::int64_t p, std::int64_t q);
BlockShape block_shape(const NegContFrac& cf);

// Block index of every slice of path_via_cf, in path order. The slices nearest
// -p/q belong to the last block; the ones nearest -1 to block 0.
std::vector<std::size_t> slice_blocks(const NegContFrac& cf);

}  // namespace contact_census
