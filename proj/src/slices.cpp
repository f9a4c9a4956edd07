#include "contact_census/slices.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

#include "contact_census/divsets.hpp"
#include "contact_census/error.hpp"

namespace contact_census {

namespace {

void require_sign(int sign) {
  if (sign != 1 && sign != -1) fail(ErrorCode::InvalidArgument, "slice sign must be +1 or -1");
}

void require_coprime_pair(std::int64_t p, std::int64_t q) {
  if (q < 1 || p < q)
    fail(ErrorCode::Domain,
         "expected p >= q >= 1, got p=" + std::to_string(p) + " q=" + std::to_string(q));
  if (std::gcd(p, q) != 1)
    fail(ErrorCode::Domain,
         "p and q must be coprime, got p=" + std::to_string(p) + " q=" + std::to_string(q));
}

std::vector<int> uniform_signs(std::size_t n, int sign) { return std::vector<int>(n, sign); }

// Monotone counterclockwise chain strictly inside the arc [front, back].
void require_monotone(const std::vector<Slope>& chain) {
  const Slope& front = chain.front();
  const Slope& back = chain.back();
  if (front == back) fail(ErrorCode::Domain, "chain must have distinct end slopes");
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (!between(chain[i], front, back))
      fail(ErrorCode::Domain, "slope " + chain[i].str() + " leaves the arc [" + front.str() +
                                  ", " + back.str() + "]");
    if (i > 0 && !arc_before(chain[i - 1], chain[i], front))
      fail(ErrorCode::Domain, "chain is not monotone at slope " + chain[i].str());
  }
}

}  // namespace

SliceFactorization::SliceFactorization(std::vector<BasicSlice> slices) : slices_(std::move(slices)) {
  for (std::size_t i = 0; i < slices_.size(); ++i) {
    const BasicSlice& s = slices_[i];
    require_sign(s.sign);
    if (!farey_adjacent(s.front, s.back))
      fail(ErrorCode::Domain,
           "basic slice " + s.front.str() + " -> " + s.back.str() + " is not Farey adjacent");
    if (i > 0 && slices_[i - 1].back != s.front)
      fail(ErrorCode::Domain, "consecutive slices do not share a boundary slope");
  }
}

SliceFactorization SliceFactorization::from_chain(const std::vector<Slope>& chain,
                                                  const std::vector<int>& signs) {
  if (chain.empty()) {
    if (!signs.empty()) fail(ErrorCode::InvalidArgument, "signs given for an empty chain");
    return SliceFactorization();
  }
  if (signs.size() + 1 != chain.size())
    fail(ErrorCode::InvalidArgument, "a chain of " + std::to_string(chain.size()) +
                                         " slopes needs " + std::to_string(chain.size() - 1) +
                                         " signs, got " + std::to_string(signs.size()));
  std::vector<BasicSlice> slices;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    slices.push_back(BasicSlice{chain[i], chain[i + 1], signs[i]});
  return SliceFactorization(std::move(slices));
}

std::vector<Slope> SliceFactorization::chain() const {
  std::vector<Slope> out;
  if (slices_.empty()) return out;
  out.push_back(slices_.front().front);
  for (const BasicSlice& s : slices_) out.push_back(s.back);
  return out;
}

std::vector<int> SliceFactorization::signs() const {
  std::vector<int> out;
  for (const BasicSlice& s : slices_) out.push_back(s.sign);
  return out;
}

std::vector<Slope> factor_minimal(const Slope& s1, const Slope& s0) {
  if (s1 == s0)
    fail(ErrorCode::Domain, "equal boundary slopes are nonrotative; no minimal factorization");
  return shortest_path(s1, s0);
}

std::vector<IntegralVector> chain_lifts(const std::vector<Slope>& chain) {
  std::vector<IntegralVector> lifts;
  if (chain.empty()) return lifts;
  lifts.push_back(primitive_vector(chain.front()));
  for (std::size_t i = 1; i < chain.size(); ++i) lifts.push_back(adjacent_lift(lifts.back(), chain[i]));
  return lifts;
}

EulerVector euler_class(const SliceFactorization& f) {
  EulerVector e{0, 0};
  if (f.empty()) return e;
  std::vector<IntegralVector> lifts = chain_lifts(f.chain());
  for (std::size_t i = 0; i < f.size(); ++i) {
    IntegralVector delta = lifts[i + 1] - lifts[i];
    e = e + (f.slices()[i].sign > 0 ? delta : -delta);
  }
  return e;
}

std::int64_t pairing(const EulerVector& e, const Slope& curve) {
  return det(e, primitive_vector(curve));
}

std::int64_t count_minimal(std::int64_t p, std::int64_t q) {
  require_coprime_pair(p, q);
  if (p == q) fail(ErrorCode::Domain, "equal boundary slopes are counted by the nonrotative census");
  return block_shape(to_cf(p, q)).descriptor_count();
}

std::vector<MinimalDescriptor> enumerate_minimal(std::int64_t p, std::int64_t q) {
  std::int64_t total = count_minimal(p, q);
  NegContFrac cf = to_cf(p, q);
  BlockShape shape = block_shape(cf);
  std::vector<MinimalDescriptor> out;
  out.reserve(static_cast<std::size_t>(total));
  std::vector<std::int64_t> counts(shape.sizes.size(), 0);
  while (true) {
    out.push_back(MinimalDescriptor{cf, counts});
    bool advanced = false;
    for (std::size_t j = counts.size(); j-- > 0;) {
      if (counts[j] < shape.sizes[j]) {
        ++counts[j];
        advanced = true;
        break;
      }
      counts[j] = 0;
    }
    if (!advanced) return out;
  }
}

Slope descriptor_front(const MinimalDescriptor& d) { return from_cf(d.cf); }

SliceFactorization representative_factorization(const MinimalDescriptor& d) {
  BlockShape shape = block_shape(d.cf);
  if (d.counts.size() != shape.sizes.size())
    fail(ErrorCode::InvalidArgument, "descriptor has " + std::to_string(d.counts.size()) +
                                         " counts but the continued fraction has " +
                                         std::to_string(shape.sizes.size()) + " blocks");
  for (std::size_t j = 0; j < shape.sizes.size(); ++j)
    if (d.counts[j] < 0 || d.counts[j] > shape.sizes[j])
      fail(ErrorCode::InvalidArgument, "block count " + std::to_string(d.counts[j]) +
                                           " out of range [0, " + std::to_string(shape.sizes[j]) +
                                           "]");
  Slope front = from_cf(d.cf);
  std::vector<Slope> chain = path_via_cf(-front.p(), front.q());
  std::vector<std::size_t> blocks = slice_blocks(d.cf);
  std::vector<std::int64_t> used(shape.sizes.size(), 0);
  std::vector<int> signs;
  for (std::size_t b : blocks) signs.push_back(used[b]++ < d.counts[b] ? 1 : -1);
  return SliceFactorization::from_chain(chain, signs);
}

EulerVector descriptor_euler(const MinimalDescriptor& d) {
  return euler_class(representative_factorization(d));
}

MinimalDescriptor shuffle_normal_form(const SliceFactorization& f) {
  if (f.empty()) fail(ErrorCode::Domain, "empty factorization has no descriptor");
  std::vector<Slope> chain = f.chain();
  if (chain != factor_minimal(chain.front(), chain.back()))
    fail(ErrorCode::Domain, "slope chain is not the shortest path between its ends");
  NormalizedBoundary nb = normalize_boundary(chain.front(), chain.back());
  NegContFrac cf = to_cf(nb.p, nb.q);
  std::vector<std::size_t> blocks = slice_blocks(cf);
  std::vector<std::int64_t> counts(block_shape(cf).sizes.size(), 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f.slices()[i].sign > 0) ++counts[blocks[i]];
  return MinimalDescriptor{cf, counts};
}

bool is_universally_tight(const MinimalDescriptor& d) {
  BlockShape shape = block_shape(d.cf);
  bool all_positive = true, all_negative = true;
  for (std::size_t j = 0; j < shape.sizes.size(); ++j) {
    if (d.counts[j] != shape.sizes[j]) all_positive = false;
    if (d.counts[j] != 0) all_negative = false;
  }
  return all_positive || all_negative;
}

TwistingData twisting(const std::vector<Slope>& chain) {
  if (chain.empty()) fail(ErrorCode::InvalidArgument, "twisting needs at least one slope");
  // Lines are tracked by their representative in the half-plane anchored at
  // the first slope; a step that decreases that position wraps past a multiple of pi.
  const IntegralVector anchor = chain.front().direction();
  TwistingData out;
  out.residual_from = chain.front();
  out.residual_to = chain.back();
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (chain[i] == chain[i - 1]) continue;
    IntegralVector a = half_plane_rep(chain[i - 1], anchor);
    IntegralVector b = half_plane_rep(chain[i], anchor);
    if (det(a, b) < 0) ++out.half_turns;
  }
  return out;
}

T2ICount count_t2i(std::int64_t p, std::int64_t q, std::int64_t n) {
  require_coprime_pair(p, q);
  if (n < 0) fail(ErrorCode::Domain, "twisting parameter n must be nonnegative");
  if (n >= 1) return {2, false};
  if (p > q) return {count_minimal(p, q), false};
  return {count_nonrotative(1, 1), true};
}

T2xIClass nonminimal_class(std::int64_t n, int sign) {
  if (n < 1) fail(ErrorCode::Domain, "non-minimal twisting needs n >= 1");
  require_sign(sign);
  return NonMinimal{n, sign};
}

SliceFactorization xi_factorization(std::int64_t n, int sign) {
  if (n < 1) fail(ErrorCode::Domain, "non-minimal twisting needs n >= 1");
  require_sign(sign);
  std::vector<Slope> chain;
  for (std::int64_t i = 0; i <= 2 * n; ++i) chain.push_back(i % 2 == 0 ? Slope(0, 1) : Slope::infinity());
  return SliceFactorization::from_chain(chain, uniform_signs(chain.size() - 1, sign));
}

SliceFactorization NonMinimalDecomposition::combined() const {
  std::vector<BasicSlice> all = outer_chain.slices();
  for (const BasicSlice& s : core_chain.slices()) all.push_back(s);
  return SliceFactorization(std::move(all));
}

NonMinimalDecomposition decompose_nonminimal(std::int64_t p, std::int64_t q, std::int64_t n, int sign) {
  require_coprime_pair(p, q);
  NonMinimal core = std::get<NonMinimal>(nonminimal_class(n, sign));
  NonMinimalDecomposition out;
  out.core = core;
  if (p > q) {
    NegContFrac cf = to_cf(p, q);
    BlockShape shape = block_shape(cf);
    std::vector<std::int64_t> counts = sign > 0 ? shape.sizes : std::vector<std::int64_t>(shape.sizes.size(), 0);
    out.outer = MinimalDescriptor{cf, counts};
    std::vector<Slope> chain = path_via_cf(p, q);
    out.outer_chain = SliceFactorization::from_chain(chain, uniform_signs(chain.size() - 1, sign));
  }
  // Carry the 0/inf pattern to slope -1; the matrix sends primitive_vector(0)
  // to primitive_vector(-1), so slice signs are unchanged.
  const Matrix2 shift{1, 0, -1, 1};
  std::vector<BasicSlice> moved;
  SliceFactorization xi = xi_factorization(n, sign);
  for (const BasicSlice& s : xi.slices())
    moved.push_back(BasicSlice{sl2_apply(shift, s.front), sl2_apply(shift, s.back), s.sign});
  out.core_chain = SliceFactorization(std::move(moved));
  return out;
}

GlueResult glue_check(const SliceFactorization& f) {
  if (f.empty()) fail(ErrorCode::Domain, "glue check needs at least one basic slice");
  std::vector<Slope> chain = f.chain();
  std::vector<int> signs = f.signs();
  require_monotone(chain);
  const std::vector<Slope> target = factor_minimal(chain.front(), chain.back());

  while (chain != target) {
    // s_i is removable when its neighbours are adjacent. With lifts u, the two
    // slices carry sign_a * u_{i+1} and -sign_b * u_{i-1}; they merge into a
    // basic slice exactly when the signs agree.
    std::size_t merge_at = 0;
    for (std::size_t i = 1; i + 1 < chain.size(); ++i) {
      if (!farey_adjacent(chain[i - 1], chain[i + 1])) continue;
      if (signs[i - 1] == signs[i]) {
        merge_at = i;
        break;
      }
    }
    if (merge_at == 0) return GlueOvertwisted{};
    chain.erase(chain.begin() + static_cast<std::ptrdiff_t>(merge_at));
    signs.erase(signs.begin() + static_cast<std::ptrdiff_t>(merge_at));
  }
  SliceFactorization reduced = SliceFactorization::from_chain(chain, signs);
  return GlueTight{shuffle_normal_form(reduced), reduced};
}

TwistNumber twist_number(const Slope& ruling, const Slope& dividing, std::int64_t n) {
  if (n < 1) fail(ErrorCode::Domain, "division number must be >= 1");
  if (ruling == dividing) return TwistNumber{true, 0};
  std::int64_t d = std::llabs(det(primitive_vector(ruling), primitive_vector(dividing)));
  return TwistNumber{false, checked_mul(-n, d)};
}

bool twist_lemma_applicable(std::int64_t n, const Slope& r) {
  if (n > 0) fail(ErrorCode::Domain, "twist number lemma needs n <= 0");
  // 1/r = q/p; r = 0 means 1/r = +infinity.
  if (r.p() == 0) return true;
  std::int64_t bound = checked_add(n, 1);
  if (r.p() > 0) return r.q() >= checked_mul(bound, r.p());
  return r.q() <= checked_mul(bound, r.p());
}

Slope new_neighborhood_slope(std::int64_t n, const Slope& r) {
  if (!twist_lemma_applicable(n, r))
    fail(ErrorCode::Domain, "twist number lemma does not apply: 1/r < n+1");
  return bypass_slope(Slope(1, n), r);
}

}  // namespace contact_census
