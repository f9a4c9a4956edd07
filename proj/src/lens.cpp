#include "contact_census/lens.hpp"

#include <numeric>
#include <string>

#include "contact_census/contfrac.hpp"
#include "contact_census/error.hpp"

namespace contact_census {

void validate_lens(const LensSpace& l) {
  if (!(l.p > l.q && l.q > 0))
    fail(ErrorCode::Domain, "lens space needs p > q > 0, got p=" + std::to_string(l.p) +
                                " q=" + std::to_string(l.q));
  if (std::gcd(l.p, l.q) != 1)
    fail(ErrorCode::Domain, "lens space needs coprime p and q, got p=" + std::to_string(l.p) +
                                " q=" + std::to_string(l.q));
}

std::pair<std::int64_t, std::int64_t> dual_slope(std::int64_t p, std::int64_t q) {
  validate_lens({p, q});
  CfStep next = cf_step(to_cf(p, q));
  if (std::holds_alternative<TerminalMinusOne>(next)) return {1, 1};
  Slope s = from_cf(std::get<NegContFrac>(next));
  return {-s.p(), s.q()};
}

Matrix2 heegaard_matrix(std::int64_t p, std::int64_t q) {
  auto [pd, qd] = dual_slope(p, q);
  return Matrix2{-q, qd, p, -pd};
}

std::int64_t count_lens(const LensSpace& l) {
  validate_lens(l);
  std::int64_t n = 1;
  NegContFrac cf = to_cf(l.p, l.q);
  for (std::int64_t r : cf.coeffs()) n = checked_mul(n, -(r + 1));
  return n;
}

std::vector<std::vector<std::int64_t>> rotation_slots(const LensSpace& l) {
  validate_lens(l);
  std::vector<std::vector<std::int64_t>> slots;
  NegContFrac cf = to_cf(l.p, l.q);
  for (std::int64_t r : cf.coeffs()) {
    std::vector<std::int64_t> values;
    for (std::int64_t k = 1; k <= -(r + 1); ++k) values.push_back(r + 2 * k);
    slots.push_back(std::move(values));
  }
  return slots;
}

std::int64_t count_solid_torus(std::int64_t p, std::int64_t q) {
  if (p == 1 && q == 1) return 1;
  return count_minimal(p, q);
}

std::int64_t meridian_rotation(const MinimalDescriptor& d) {
  return pairing(descriptor_euler(d), Slope(0, 1));
}

std::vector<SolidTorusDescriptor> enumerate_solid_torus(std::int64_t p, std::int64_t q) {
  if (p == 1 && q == 1) return {SolidTorusDescriptor{Slope(-1, 1), std::nullopt, 0}};
  std::vector<SolidTorusDescriptor> out;
  for (MinimalDescriptor& d : enumerate_minimal(p, q)) {
    std::int64_t rot = meridian_rotation(d);
    out.push_back(SolidTorusDescriptor{Slope(-p, q), std::move(d), rot});
  }
  return out;
}

LensDescriptor lens_from_solid(const SolidTorusDescriptor& d, const LensSpace& l) {
  validate_lens(l);
  auto [pd, qd] = dual_slope(l.p, l.q);
  if (d.boundary != Slope(-pd, qd))
    fail(ErrorCode::InvalidArgument, "solid torus slope " + d.boundary.str() +
                                         " is not the dual slope of L(" + std::to_string(l.p) +
                                         "," + std::to_string(l.q) + ")");
  NegContFrac cf = to_cf(l.p, l.q);
  LensDescriptor out;
  out.p = l.p;
  out.q = l.q;
  if (d.descriptor) out.counts = d.descriptor->counts;
  for (std::size_t j = 0; j < cf.size(); ++j) {
    std::int64_t c = j < out.counts.size() ? out.counts[j] : 0;
    out.rotations.push_back(cf[j] + 2 + 2 * c);
  }
  return out;
}

std::vector<LensDescriptor> enumerate_lens(const LensSpace& l) {
  validate_lens(l);
  auto [pd, qd] = dual_slope(l.p, l.q);
  std::vector<LensDescriptor> out;
  for (const SolidTorusDescriptor& d : enumerate_solid_torus(pd, qd)) out.push_back(lens_from_solid(d, l));
  return out;
}

std::int64_t universally_tight_count_lens(const LensSpace& l) {
  validate_lens(l);
  return l.q == l.p - 1 ? 1 : 2;
}

std::int64_t universally_tight_count_solid(std::int64_t p, std::int64_t q) {
  if (q < 1 || p < q || std::gcd(p, q) != 1)
    fail(ErrorCode::Domain, "solid torus needs coprime p >= q >= 1");
  return p > q ? 2 : 1;
}

bool is_universally_tight(const LensDescriptor& d) {
  NegContFrac cf = to_cf(d.p, d.q);
  bool all_low = true, all_high = true;
  for (std::size_t j = 0; j < cf.size(); ++j) {
    if (d.rotations[j] != cf[j] + 2) all_low = false;
    if (d.rotations[j] != -cf[j] - 2) all_high = false;
  }
  return all_low || all_high;
}

}  // namespace contact_census
