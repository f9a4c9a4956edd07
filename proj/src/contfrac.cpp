#include "contact_census/contfrac.hpp"

#include <numeric>
#include <string>

#include "contact_census/error.hpp"

namespace contact_census {

NegContFrac::NegContFrac(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) fail(ErrorCode::InvalidArgument, "continued fraction must be nonempty");
  for (std::int64_t r : coeffs_)
    if (r > -2)
      fail(ErrorCode::InvalidArgument,
           "continued fraction entries must be <= -2, got " + std::to_string(r));
}

std::int64_t BlockShape::descriptor_count() const {
  std::int64_t n = 1;
  for (std::int64_t s : sizes) n = checked_mul(n, s + 1);
  return n;
}

NegContFrac to_cf(std::int64_t p, std::int64_t q) {
  if (q < 1 || p <= q) {
    if (p == 1 && q == 1) fail(ErrorCode::Domain, "slope -1 has no negative continued fraction");
    fail(ErrorCode::Domain, "continued fraction needs p > q >= 1, got p=" + std::to_string(p) +
                                " q=" + std::to_string(q));
  }
  if (std::gcd(p, q) != 1)
    fail(ErrorCode::Domain, "p and q must be coprime, got p=" + std::to_string(p) +
                                " q=" + std::to_string(q));
  std::vector<std::int64_t> out;
  while (true) {
    std::int64_t rem = p % q;
    out.push_back(-(p / q + (rem != 0 ? 1 : 0)));  // -ceil(p/q)
    if (out.size() > kMaxCfLength)
      fail(ErrorCode::Overflow, "continued fraction has more than " + std::to_string(kMaxCfLength) + " entries");
    std::int64_t a = rem == 0 ? 0 : q - rem;
    if (a == 0) break;
    p = q;
    q = a;
  }
  return NegContFrac(std::move(out));
}

Slope from_cf(const NegContFrac& cf) {
  // Track -p/q from the back: x_k = r_k, x_i = r_i - 1/x_{i+1}.
  std::int64_t p = -cf.coeffs().back();
  std::int64_t q = 1;
  for (std::size_t i = cf.size() - 1; i-- > 0;) {
    std::int64_t np = checked_sub(0, checked_add(checked_mul(cf[i], p), q));
    q = p;
    p = np;
  }
  return Slope(-p, q);
}

CfStep cf_step(const NegContFrac& cf) {
  std::vector<std::int64_t> c = cf.coeffs();
  c.back() += 1;
  while (!c.empty() && c.back() == -1) {
    c.pop_back();
    if (!c.empty()) c.back() += 1;
  }
  if (c.empty()) return TerminalMinusOne{};
  return NegContFrac(std::move(c));
}

std::vector<Slope> path_via_cf(std::int64_t p, std::int64_t q) {
  if (p == 1 && q == 1) return {Slope(-1, 1)};
  NegContFrac cf = to_cf(p, q);
  std::vector<Slope> path{Slope(-p, q)};
  while (true) {
    CfStep next = cf_step(cf);
    if (std::holds_alternative<TerminalMinusOne>(next)) break;
    cf = std::get<NegContFrac>(next);
    path.push_back(from_cf(cf));
  }
  path.push_back(Slope(-1, 1));
  return path;
}

BlockShape block_shape(const NegContFrac& cf) {
  BlockShape shape;
  const std::size_t k = cf.size() - 1;
  for (std::size_t j = 0; j < k; ++j) shape.sizes.push_back(-(cf[j] + 2));
  shape.sizes.push_back(-(cf[k] + 1));
  return shape;
}

std::vector<std::size_t> slice_blocks(const NegContFrac& cf) {
  BlockShape shape = block_shape(cf);
  std::vector<std::size_t> out;
  for (std::size_t j = shape.sizes.size(); j-- > 0;)
    for (std::int64_t i = 0; i < shape.sizes[j]; ++i) out.push_back(j);
  return out;
}

}  // namespace contact_census
