#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "contact_census/farey.hpp"
#include "contact_census/slices.hpp"

namespace contact_census {

struct LensSpace {
  std::int64_t p;
  std::int64_t q;
};

// Rotation numbers of the surgery curves, one slot per continued fraction
// entry, plus the block counts of the solid torus at the dual slope.
struct LensDescriptor {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::vector<std::int64_t> rotations;
  std::vector<std::int64_t> counts;

  friend bool operator==(const LensDescriptor&, const LensDescriptor&) = default;
};

struct SolidTorusDescriptor {
  Slope boundary;
  std::optional<MinimalDescriptor> descriptor;  // empty for boundary slope -1
  std::int64_t meridian_rot = 0;

  friend bool operator==(const SolidTorusDescriptor&, const SolidTorusDescriptor&) = default;
};

void validate_lens(const LensSpace& l);

std::pair<std::int64_t, std::int64_t> dual_slope(std::int64_t p, std::int64_t q);

// ((-q, q'), (p, -p')), the gluing map of the two Heegaard solid tori.
Matrix2 heegaard_matrix(std::int64_t p, std::int64_t q);

std::int64_t count_lens(const LensSpace& l);
std::vector<LensDescriptor> enumerate_lens(const LensSpace& l);

std::int64_t count_solid_torus(std::int64_t p, std::int64_t q);
std::vector<SolidTorusDescriptor> enumerate_solid_torus(std::int64_t p, std::int64_t q);

// Pairing of the Euler class with the meridian (slope 0).
std::int64_t meridian_rotation(const MinimalDescriptor& d);

std::int64_t universally_tight_count_lens(const LensSpace& l);
std::int64_t universally_tight_count_solid(std::int64_t p, std::int64_t q);

// True iff every rotation number sits at the low end of its slot, or every
// one at the high end.
bool is_universally_tight(const LensDescriptor& d);

// r(gamma_j) = r_j + 2 + 2 c_j, with c_j = 0 for slots the dual fraction no
// longer has.
LensDescriptor lens_from_solid(const SolidTorusDescriptor& d, const LensSpace& l);

// Allowed rotation values r_j + 2, r_j + 4, ..., -r_j - 2 for slot j.
std::vector<std::vector<std::int64_t>> rotation_slots(const LensSpace& l);

}  // namespace contact_census
