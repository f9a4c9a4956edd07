#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "contact_census/contfrac.hpp"
#include "contact_census/farey.hpp"

namespace contact_census {

struct BasicSlice {
  Slope front;
  Slope back;
  int sign = 1;  // +1 or -1

  friend bool operator==(const BasicSlice&, const BasicSlice&) = default;
};

class SliceFactorization {
 public:
  SliceFactorization() = default;
  explicit SliceFactorization(std::vector<BasicSlice> slices);
  // Chain of n+1 slopes with n signs.
  static SliceFactorization from_chain(const std::vector<Slope>& chain, const std::vector<int>& signs);

  const std::vector<BasicSlice>& slices() const { return slices_; }
  bool empty() const { return slices_.empty(); }
  std::size_t size() const { return slices_.size(); }
  std::vector<Slope> chain() const;
  std::vector<int> signs() const;

  friend bool operator==(const SliceFactorization&, const SliceFactorization&) = default;

 private:
  std::vector<BasicSlice> slices_;
};

// Number of positive basic slices per continued-fraction block.
struct MinimalDescriptor {
  NegContFrac cf;
  std::vector<std::int64_t> counts;

  friend bool operator==(const MinimalDescriptor&, const MinimalDescriptor&) = default;
};

using EulerVector = IntegralVector;

struct TwistingData {
  std::int64_t half_turns = 0;
  Slope residual_from;
  Slope residual_to;
};

struct Minimal {
  MinimalDescriptor descriptor;
  friend bool operator==(const Minimal&, const Minimal&) = default;
};
struct NonMinimal {
  std::int64_t n = 1;
  int sign = 1;
  friend bool operator==(const NonMinimal&, const NonMinimal&) = default;
};
struct NonrotativeHolonomy {
  std::int64_t k = 0;
  friend bool operator==(const NonrotativeHolonomy&, const NonrotativeHolonomy&) = default;
};
using T2xIClass = std::variant<Minimal, NonMinimal, NonrotativeHolonomy>;

// Slope chain of the minimal factorization between s1 and s0, in the given coordinates.
std::vector<Slope> factor_minimal(const Slope& s1, const Slope& s0);

// Lifts of the chain's slopes: the first is primitive_vector(chain[0]) and each
// next one has determinant +1 with its predecessor.
std::vector<IntegralVector> chain_lifts(const std::vector<Slope>& chain);

// Sum of sign * (lift(back) - lift(front)) over the slices, using chain_lifts.
// For chains that stay between -inf and inf this is the same as using
// primitive_vector for every slope.
EulerVector euler_class(const SliceFactorization& f);

// det(e, primitive_vector(curve)).
std::int64_t pairing(const EulerVector& e, const Slope& curve);

std::int64_t count_minimal(std::int64_t p, std::int64_t q);
std::vector<MinimalDescriptor> enumerate_minimal(std::int64_t p, std::int64_t q);

// The normalized factorization of a descriptor: within block j the first
// counts[j] slices are positive.
SliceFactorization representative_factorization(const MinimalDescriptor& d);
EulerVector descriptor_euler(const MinimalDescriptor& d);
Slope descriptor_front(const MinimalDescriptor& d);

MinimalDescriptor shuffle_normal_form(const SliceFactorization& f);
bool is_universally_tight(const MinimalDescriptor& d);

TwistingData twisting(const std::vector<Slope>& chain);

struct T2ICount {
  std::int64_t count = 0;
  // True when the count is taken modulo holonomy (equal boundary slopes, n = 0).
  bool modulo_holonomy = false;
};
T2ICount count_t2i(std::int64_t p, std::int64_t q, std::int64_t n);

T2xIClass nonminimal_class(std::int64_t n, int sign);

// Basic slices N_0, N_{pi/2}, ... from slope 0: 2n slices, all of the given sign.
SliceFactorization xi_factorization(std::int64_t n, int sign);

struct NonMinimalDecomposition {
  std::optional<MinimalDescriptor> outer;  // empty when the boundary slope is -1
  SliceFactorization outer_chain;          // -p/q ... -1, all slices of `sign`
  NonMinimal core;
  SliceFactorization core_chain;           // -1, inf, -1, ... with n half turns
  SliceFactorization combined() const;
};
NonMinimalDecomposition decompose_nonminimal(std::int64_t p, std::int64_t q, std::int64_t n, int sign);

struct GlueTight {
  MinimalDescriptor descriptor;
  SliceFactorization reduced;
};
struct GlueOvertwisted {};
using GlueResult = std::variant<GlueTight, GlueOvertwisted>;

GlueResult glue_check(const SliceFactorization& f);

struct TwistNumber {
  bool parallel = false;  // ruling and dividing slopes coincide
  std::int64_t value = 0;
};
TwistNumber twist_number(const Slope& ruling, const Slope& dividing, std::int64_t n);

bool twist_lemma_applicable(std::int64_t n, const Slope& r);
Slope new_neighborhood_slope(std::int64_t n, const Slope& r);

}  // namespace contact_census
