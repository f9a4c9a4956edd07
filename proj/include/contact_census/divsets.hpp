#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "contact_census/farey.hpp"

namespace contact_census {

// 2n parallel dividing curves of the given slope on a torus.
struct TorusDividingSet {
  std::int64_t n = 1;
  Slope slope;

  friend bool operator==(const TorusDividingSet&, const TorusDividingSet&) = default;
};

TorusDividingSet attach_bypass(const TorusDividingSet& ds, const Slope& r,
                               ArcOrientation orientation = ArcOrientation::Counterclockwise);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const Rational&, const Rational&) = default;
};

// Position in [0, 1) reached by dividing curve k = 0..2n-1 after edge rounding:
// k/2n - 1/4n, reduced mod 1.
std::vector<Rational> edge_round(std::int64_t n);

// Non-crossing perfect matching of 2t points 0..2t-1 on a circle.
struct DiskConfig {
  int t = 0;
  std::vector<std::pair<int, int>> arcs;  // sorted, first < second

  friend bool operator==(const DiskConfig&, const DiskConfig&) = default;
  friend auto operator<=>(const DiskConfig&, const DiskConfig&) = default;
};

std::vector<DiskConfig> enumerate_disk(int t);
std::vector<std::pair<int, int>> boundary_parallel_arcs(const DiskConfig& c);

// Annulus S^1 x [0,1]. Markings sit at (i + 1/2) / N on each boundary circle,
// inner = S^1 x {0}, outer = S^1 x {1}.
enum class Side { Inner = 0, Outer = 1 };

struct Endpoint {
  Side side = Side::Inner;
  int index = 0;

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

// An arc lifted to the strip R x [0,1]: a sits at pos(a), b at pos(b) + winding.
// Canonical orientation puts inner before outer, then the lower index first;
// an arc with both ends on one side then has winding 0 (it cuts off the
// interval between its ends) or -1 (it cuts off the complementary interval).
struct Arc {
  Endpoint a;
  Endpoint b;
  std::int64_t winding = 0;

  bool crossing() const { return a.side != b.side; }
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

class AnnulusConfig {
 public:
  AnnulusConfig() = default;
  // Canonicalizes and validates; throws Error on an impossible configuration.
  AnnulusConfig(int inner_markings, int outer_markings, std::vector<Arc> arcs);

  int inner_markings() const { return inner_; }
  int outer_markings() const { return outer_; }
  int markings(Side s) const { return s == Side::Inner ? inner_ : outer_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  // The arc touching endpoint e, oriented so that it starts at e.
  Arc arc_at(Endpoint e) const;
  int crossing_count() const;
  // Lifted outer index of the partner of the first crossing inner marking.
  std::int64_t lead_lift() const;

  friend bool operator==(const AnnulusConfig&, const AnnulusConfig&) = default;
  friend auto operator<=>(const AnnulusConfig&, const AnnulusConfig&) = default;

 private:
  friend struct ConfigBuilder;
  void index_slots();

  int inner_ = 0;
  int outer_ = 0;
  std::vector<Arc> arcs_;
  std::vector<int> slot_;  // endpoint id -> arc index
};

bool is_valid_config(int inner_markings, int outer_markings, const std::vector<Arc>& arcs);

// Words over {X, (, )}: X marks a crossing endpoint, parentheses match the
// same-side arcs inside each gap between consecutive X's (read cyclically).
// `lead_lift` is the lifted outer index joined to the first inner X.
AnnulusConfig config_from_words(const std::string& inner_word, const std::string& outer_word,
                                std::int64_t lead_lift);
std::string boundary_word(const AnnulusConfig& c, Side side);
// All words of the given length with exactly `crossings` X's (crossings >= 1).
std::vector<std::string> enumerate_words(int length, int crossings);

// 2m parallel crossing arcs; inner i meets outer lifted index i + shift.
AnnulusConfig identity_config(int markings, std::int64_t shift = 0);

// Turns one boundary circle by `steps` marking positions.
AnnulusConfig rotate_side(const AnnulusConfig& c, Side side, std::int64_t steps);
// The holonomy generator: turn the outer circle by two markings (keeps region signs).
AnnulusConfig holonomy_shift(const AnnulusConfig& c, std::int64_t k);

std::vector<Arc> boundary_parallel_arcs(const AnnulusConfig& c);

struct GlueOutcome {
  AnnulusConfig config;
  int trivial_closed = 0;
  int essential_closed = 0;
};

// Stacks b on top of a: a's outer circle is b's inner circle.
GlueOutcome glue(const AnnulusConfig& a, const AnnulusConfig& b);
// All arcs cross and no closed curves appeared.
bool is_identity_gluing(const GlueOutcome& g);

// Every valid configuration, with each crossing arc's winding in [-bound, bound].
std::vector<AnnulusConfig> enumerate_configs(int inner_markings, int outer_markings, int winding_bound);

// Configurations that agree up to holonomy, with the members found in the window.
struct ConfigClass {
  AnnulusConfig representative;
  std::vector<AnnulusConfig> members;
};
using ConfigSet = std::vector<ConfigClass>;

// Nonrotative configurations: every marking used, at least two crossing arcs,
// lead_lift in [-window, window]. Classes are orbits of holonomy_shift.
ConfigSet enumerate_nonrotative(int n0, int n1, int window);
std::int64_t count_nonrotative(int n0, int n1);

// k with holonomy_shift(reference, k) == c.
std::int64_t holonomy(const AnnulusConfig& c, const AnnulusConfig& reference);

// Templates X above every member of `below` (X's inner circle is their outer
// circle, X has `far_markings` outer markings) with glue(s, X) the identity.
ConfigSet dual_above(const std::vector<AnnulusConfig>& below, int far_markings, int window);
// Templates X below every member of `above` with glue(X, s) the identity.
ConfigSet dual_below(const std::vector<AnnulusConfig>& above, int far_markings, int window);

// Dual of c, which must have all inner markings crossing. Classes are keyed by
// the shared circle.
ConfigSet dual_set(const AnnulusConfig& c, int far_markings, int window);
bool reflexive_check(const AnnulusConfig& c, int window);

struct CappedDisk {
  DiskConfig matching;
  int closed = 0;

  friend bool operator==(const CappedDisk&, const CappedDisk&) = default;
};
// Joins the two inner markings by an arc through a capping disk.
CappedDisk cap_inner(const AnnulusConfig& c);
bool disk_equivalent(const AnnulusConfig& a, const AnnulusConfig& b);

}  // namespace contact_census
