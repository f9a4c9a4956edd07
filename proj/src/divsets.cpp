#include "contact_census/divsets.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "arith.hpp"
#include "contact_census/error.hpp"

namespace contact_census {

using detail::floor_div;
using detail::floor_mod;

struct ConfigBuilder {
  // Skips validation; callers construct configurations that are valid by design.
  static AnnulusConfig trusted(int inner, int outer, std::vector<Arc> arcs);
  static Arc canonical(Arc arc);
};

namespace {

void check_markings(int inner, int outer) {
  if (inner < 0 || outer < 0 || inner % 2 != 0 || outer % 2 != 0)
    fail(ErrorCode::InvalidArgument, "marking counts must be even and non-negative, got " +
                                         std::to_string(inner) + " and " + std::to_string(outer));
  if (inner + outer == 0) fail(ErrorCode::InvalidArgument, "annulus needs at least one marking");
}

int side_count(int inner, int outer, Side s) { return s == Side::Inner ? inner : outer; }

// A point of the strip boundary after lifting. Points are ordered around the
// boundary of the strip: inner points left to right, then outer points right to left.
struct StripPoint {
  int side;
  std::int64_t num;
  std::int64_t den;
};

bool strip_less(const StripPoint& u, const StripPoint& v) {
  if (u.side != v.side) return u.side < v.side;
  __int128 lhs = static_cast<__int128>(u.num) * v.den;
  __int128 rhs = static_cast<__int128>(v.num) * u.den;
  return u.side == 0 ? lhs < rhs : lhs > rhs;
}

StripPoint lift_point(int inner, int outer, Endpoint e, std::int64_t turns) {
  std::int64_t n = side_count(inner, outer, e.side);
  return {static_cast<int>(e.side), 2 * e.index + 1 + 2 * n * turns, 2 * n};
}

bool chords_cross(StripPoint p1, StripPoint p2, StripPoint q1, StripPoint q2) {
  if (strip_less(p2, p1)) std::swap(p1, p2);
  auto inside = [&](const StripPoint& q) { return strip_less(p1, q) && strip_less(q, p2); };
  return inside(q1) != inside(q2);
}

// Empty string if valid, otherwise the reason.
std::string validation_error(int inner, int outer, const std::vector<Arc>& arcs) {
  if (static_cast<int>(arcs.size()) * 2 != inner + outer) return "arc count does not match markings";
  std::vector<int> used(inner + outer, 0);
  std::int64_t max_winding = 0;
  for (const Arc& arc : arcs) {
    for (Endpoint e : {arc.a, arc.b}) {
      int n = side_count(inner, outer, e.side);
      if (e.index < 0 || e.index >= n) return "endpoint index out of range";
      int id = e.side == Side::Inner ? e.index : inner + e.index;
      if (used[id]++) return "marking used twice";
    }
    if (arc.crossing()) {
      if ((arc.a.index - arc.b.index) % 2 != 0) return "crossing arc joins regions of opposite sign";
    }
    max_winding = std::max(max_winding, arc.winding < 0 ? -arc.winding : arc.winding);
  }
  if (max_winding > 1'000'000) return "winding out of range";
  const std::int64_t k_max = max_winding + 2;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    StripPoint p1 = lift_point(inner, outer, arcs[i].a, 0);
    StripPoint p2 = lift_point(inner, outer, arcs[i].b, arcs[i].winding);
    for (std::size_t j = i; j < arcs.size(); ++j) {
      for (std::int64_t k = -k_max; k <= k_max; ++k) {
        if (i == j && k == 0) continue;
        StripPoint q1 = lift_point(inner, outer, arcs[j].a, k);
        StripPoint q2 = lift_point(inner, outer, arcs[j].b, k + arcs[j].winding);
        if (chords_cross(p1, p2, q1, q2)) return "arcs intersect";
      }
    }
  }
  return {};
}

}  // namespace

Arc ConfigBuilder::canonical(Arc arc) {
  if (arc.b < arc.a) {
    std::swap(arc.a, arc.b);
    arc.winding = -arc.winding;
  }
  return arc;
}

AnnulusConfig ConfigBuilder::trusted(int inner, int outer, std::vector<Arc> arcs) {
  AnnulusConfig c;
  c.inner_ = inner;
  c.outer_ = outer;
  for (Arc& a : arcs) a = canonical(a);
  std::sort(arcs.begin(), arcs.end());
  c.arcs_ = std::move(arcs);
  c.index_slots();
  return c;
}

void AnnulusConfig::index_slots() {
  slot_.assign(inner_ + outer_, -1);
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    for (Endpoint e : {arcs_[i].a, arcs_[i].b})
      slot_[e.side == Side::Inner ? e.index : inner_ + e.index] = static_cast<int>(i);
  }
}

AnnulusConfig::AnnulusConfig(int inner_markings, int outer_markings, std::vector<Arc> arcs) {
  check_markings(inner_markings, outer_markings);
  for (Arc& a : arcs) {
    if (a.a == a.b) fail(ErrorCode::InvalidArgument, "arc joins a marking to itself");
    a = ConfigBuilder::canonical(a);
  }
  std::string why = validation_error(inner_markings, outer_markings, arcs);
  if (!why.empty()) fail(ErrorCode::InvalidArgument, "invalid annulus configuration: " + why);
  *this = ConfigBuilder::trusted(inner_markings, outer_markings, std::move(arcs));
}

Arc AnnulusConfig::arc_at(Endpoint e) const {
  int n = markings(e.side);
  if (e.index < 0 || e.index >= n) fail(ErrorCode::InvalidArgument, "endpoint index out of range");
  const Arc& arc = arcs_[slot_[e.side == Side::Inner ? e.index : inner_ + e.index]];
  if (arc.a == e) return arc;
  return Arc{arc.b, arc.a, -arc.winding};
}

int AnnulusConfig::crossing_count() const {
  return static_cast<int>(std::count_if(arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.crossing(); }));
}

std::int64_t AnnulusConfig::lead_lift() const {
  for (const Arc& a : arcs_) {
    if (a.crossing()) return a.b.index + a.winding * outer_;
  }
  fail(ErrorCode::Domain, "configuration has no crossing arc");
}

bool is_valid_config(int inner_markings, int outer_markings, const std::vector<Arc>& arcs) {
  try {
    AnnulusConfig c(inner_markings, outer_markings, arcs);
    return true;
  } catch (const Error&) {
    return false;
  }
}

TorusDividingSet attach_bypass(const TorusDividingSet& ds, const Slope& r, ArcOrientation orientation) {
  if (ds.n < 1) fail(ErrorCode::InvalidArgument, "dividing set needs n >= 1");
  if (r == ds.slope) fail(ErrorCode::InvalidArgument, "attaching slope equals the dividing slope");
  if (ds.n > 1) return {ds.n - 1, ds.slope};
  return {1, bypass_slope(ds.slope, r, orientation)};
}

std::vector<Rational> edge_round(std::int64_t n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "edge rounding needs n >= 1");
  std::vector<Rational> out;
  const std::int64_t den = 4 * n;
  for (std::int64_t k = 0; k < 2 * n; ++k) {
    std::int64_t num = floor_mod(2 * k - 1, den);
    std::int64_t g = std::gcd(num, den);
    out.push_back({num / g, den / g});
  }
  return out;
}

std::vector<DiskConfig> enumerate_disk(int t) {
  if (t < 1) fail(ErrorCode::InvalidArgument, "disk needs t >= 1");
  if (t > 12) fail(ErrorCode::InvalidArgument, "disk enumeration supports t <= 12");
  std::vector<DiskConfig> out;
  std::vector<std::pair<int, int>> current;
  // Matches point lo with an odd-offset partner, then recurses inside and outside.
  std::function<void(std::vector<std::pair<int, int>>)> fill;
  fill = [&](std::vector<std::pair<int, int>> pending) {
    if (pending.empty()) {
      DiskConfig c{t, current};
      std::sort(c.arcs.begin(), c.arcs.end());
      out.push_back(std::move(c));
      return;
    }
    auto [lo, hi] = pending.back();
    pending.pop_back();
    if (lo >= hi) {
      fill(pending);
      return;
    }
    for (int k = lo + 1; k < hi; k += 2) {
      current.emplace_back(lo, k);
      auto next = pending;
      next.emplace_back(lo + 1, k);
      next.emplace_back(k + 1, hi);
      fill(std::move(next));
      current.pop_back();
    }
  };
  fill({{0, 2 * t}});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> boundary_parallel_arcs(const DiskConfig& c) {
  std::vector<std::pair<int, int>> out;
  for (auto [i, j] : c.arcs) {
    if (j == i + 1 || (i == 0 && j == 2 * c.t - 1)) out.emplace_back(i, j);
  }
  return out;
}

std::vector<Arc> boundary_parallel_arcs(const AnnulusConfig& c) {
  std::vector<Arc> out;
  for (const Arc& a : c.arcs()) {
    if (a.crossing()) continue;
    int n = c.markings(a.a.side);
    if ((a.winding == 0 && a.b.index == a.a.index + 1) ||
        (a.winding == -1 && a.a.index == 0 && a.b.index == n - 1))
      out.push_back(a);
  }
  return out;
}

namespace {

struct ParsedWord {
  std::vector<int> xs;
  std::vector<Arc> same_side;
};

ParsedWord parse_word(const std::string& word, Side side) {
  ParsedWord out;
  const int n = static_cast<int>(word.size());
  for (int i = 0; i < n; ++i) {
    char ch = word[i];
    if (ch == 'X') out.xs.push_back(i);
    else if (ch != '(' && ch != ')')
      fail(ErrorCode::Parse, "word '" + word + "' may only contain X, ( and )");
  }
  if (out.xs.empty()) fail(ErrorCode::InvalidArgument, "word '" + word + "' has no crossing marking");
  const int c = static_cast<int>(out.xs.size());
  for (int g = 0; g < c; ++g) {
    int start = out.xs[g];
    int stop = out.xs[(g + 1) % c];
    int len = floor_mod(stop - start - 1, n);
    if (c == 1) len = n - 1;
    std::vector<int> stack;
    for (int step = 1; step <= len; ++step) {
      int pos = (start + step) % n;
      if (word[pos] == '(') {
        stack.push_back(pos);
      } else {
        if (stack.empty()) fail(ErrorCode::Parse, "unbalanced parentheses in word '" + word + "'");
        int open = stack.back();
        stack.pop_back();
        if (open < pos) out.same_side.push_back(Arc{{side, open}, {side, pos}, 0});
        else out.same_side.push_back(Arc{{side, pos}, {side, open}, -1});
      }
    }
    if (!stack.empty()) fail(ErrorCode::Parse, "unbalanced parentheses in word '" + word + "'");
  }
  return out;
}

}  // namespace

AnnulusConfig config_from_words(const std::string& inner_word, const std::string& outer_word,
                                std::int64_t lead_lift) {
  const int ni = static_cast<int>(inner_word.size());
  const int no = static_cast<int>(outer_word.size());
  check_markings(ni, no);
  ParsedWord in = parse_word(inner_word, Side::Inner);
  ParsedWord out = parse_word(outer_word, Side::Outer);
  const int c = static_cast<int>(in.xs.size());
  if (c != static_cast<int>(out.xs.size()))
    fail(ErrorCode::InvalidArgument, "words have different numbers of crossing markings");
  std::int64_t r = floor_mod(lead_lift, no);
  auto it = std::find(out.xs.begin(), out.xs.end(), static_cast<int>(r));
  if (it == out.xs.end())
    fail(ErrorCode::InvalidArgument, "lead lift " + std::to_string(lead_lift) + " is not a crossing outer marking");
  if (floor_mod(lead_lift - in.xs[0], 2) != 0)
    fail(ErrorCode::InvalidArgument, "lead lift " + std::to_string(lead_lift) + " joins regions of opposite sign");
  const std::int64_t t = it - out.xs.begin();
  const std::int64_t base_turns = floor_div(lead_lift, no);
  std::vector<Arc> arcs = std::move(in.same_side);
  arcs.insert(arcs.end(), out.same_side.begin(), out.same_side.end());
  for (int k = 0; k < c; ++k) {
    std::int64_t idx = t + k;
    int j = out.xs[idx % c];
    arcs.push_back(Arc{{Side::Inner, in.xs[k]}, {Side::Outer, j}, base_turns + idx / c});
  }
  return ConfigBuilder::trusted(ni, no, std::move(arcs));
}

std::string boundary_word(const AnnulusConfig& c, Side side) {
  std::string word(c.markings(side), '?');
  for (const Arc& a : c.arcs()) {
    if (a.crossing()) {
      word[a.a.side == side ? a.a.index : a.b.index] = 'X';
    } else if (a.a.side == side) {
      bool inside = a.winding == 0;
      word[a.a.index] = inside ? '(' : ')';
      word[a.b.index] = inside ? ')' : '(';
    }
  }
  return word;
}

std::vector<std::string> enumerate_words(int length, int crossings) {
  if (crossings < 1 || crossings > length)
    fail(ErrorCode::InvalidArgument, "word needs 1 <= crossings <= length");
  if ((length - crossings) % 2 != 0) return {};
  const int pairs = (length - crossings) / 2;
  std::vector<std::vector<std::string>> dyck(pairs + 1);
  dyck[0] = {""};
  for (int k = 1; k <= pairs; ++k) {
    for (int inner = 0; inner < k; ++inner) {
      for (const std::string& a : dyck[inner])
        for (const std::string& b : dyck[k - 1 - inner]) dyck[k].push_back("(" + a + ")" + b);
    }
  }
  std::set<std::string> words;
  std::vector<int> gaps(crossings, 0);
  std::function<void(int, int)> place = [&](int g, int left) {
    if (g == crossings - 1) {
      gaps[g] = left;
      std::function<void(int, std::string)> build = [&](int h, std::string acc) {
        if (h == crossings) {
          for (int s = 0; s < length; ++s) words.insert(acc.substr(s) + acc.substr(0, s));
          return;
        }
        for (const std::string& d : dyck[gaps[h]]) build(h + 1, acc + "X" + d);
      };
      build(0, "");
      return;
    }
    for (int k = 0; k <= left; ++k) {
      gaps[g] = k;
      place(g + 1, left - k);
    }
  };
  place(0, pairs);
  return {words.begin(), words.end()};
}

AnnulusConfig identity_config(int markings, std::int64_t shift) {
  check_markings(markings, markings);
  if (floor_mod(shift, 2) != 0) fail(ErrorCode::InvalidArgument, "identity shift must be even");
  std::vector<Arc> arcs;
  for (int i = 0; i < markings; ++i) {
    std::int64_t lift = i + shift;
    arcs.push_back(Arc{{Side::Inner, i},
                       {Side::Outer, static_cast<int>(floor_mod(lift, markings))},
                       floor_div(lift, markings)});
  }
  return ConfigBuilder::trusted(markings, markings, std::move(arcs));
}

AnnulusConfig rotate_side(const AnnulusConfig& c, Side side, std::int64_t steps) {
  const std::int64_t n = c.markings(side);
  if (n == 0) return c;
  std::vector<Arc> arcs;
  for (const Arc& a : c.arcs()) {
    std::int64_t lift_a = a.a.index + (a.a.side == side ? steps : 0);
    std::int64_t nb = c.markings(a.b.side);
    std::int64_t lift_b = a.b.index + a.winding * nb + (a.b.side == side ? steps : 0);
    std::int64_t na = c.markings(a.a.side);
    std::int64_t turns_a = floor_div(lift_a, na);
    std::int64_t turns_b = floor_div(lift_b, nb);
    arcs.push_back(Arc{{a.a.side, static_cast<int>(lift_a - turns_a * na)},
                       {a.b.side, static_cast<int>(lift_b - turns_b * nb)},
                       turns_b - turns_a});
  }
  return ConfigBuilder::trusted(c.inner_markings(), c.outer_markings(), std::move(arcs));
}

AnnulusConfig holonomy_shift(const AnnulusConfig& c, std::int64_t k) {
  return rotate_side(c, Side::Outer, checked_mul(2, k));
}

std::int64_t holonomy(const AnnulusConfig& c, const AnnulusConfig& reference) {
  if (c.inner_markings() != reference.inner_markings() || c.outer_markings() != reference.outer_markings())
    fail(ErrorCode::InvalidArgument, "holonomy needs configurations on the same markings");
  std::int64_t d = c.lead_lift() - reference.lead_lift();
  if (d % 2 == 0) {
    std::int64_t k = d / 2;
    if (holonomy_shift(reference, k) == c) return k;
  }
  fail(ErrorCode::Domain, "configurations do not differ by holonomy");
}

namespace {

struct Strand {
  Endpoint end;  // in the glued annulus
  std::int64_t winding = 0;
};

// Follows a strand from an endpoint of config `cfg` (0 = bottom, 1 = top) until it
// leaves through the glued annulus' boundary or returns to the starting point.
template <typename Visit>
Strand follow(const AnnulusConfig& lower, const AnnulusConfig& upper, int cfg, Endpoint ep, Visit&& visit) {
  Strand s;
  for (;;) {
    const AnnulusConfig& here = cfg == 0 ? lower : upper;
    Arc arc = here.arc_at(ep);
    s.winding += arc.winding;
    Endpoint end = arc.b;
    if (cfg == 0 && end.side == Side::Inner) {
      s.end = {Side::Inner, end.index};
      return s;
    }
    if (cfg == 1 && end.side == Side::Outer) {
      s.end = {Side::Outer, end.index};
      return s;
    }
    // Crossed the shared circle at marking end.index.
    if (!visit(end.index)) {
      s.end = {Side::Outer, -1};  // closed loop
      return s;
    }
    cfg = 1 - cfg;
    ep = {cfg == 0 ? Side::Outer : Side::Inner, end.index};
  }
}

}  // namespace

GlueOutcome glue(const AnnulusConfig& a, const AnnulusConfig& b) {
  if (a.outer_markings() != b.inner_markings())
    fail(ErrorCode::InvalidArgument, "glued circles carry different numbers of markings");
  const int shared = a.outer_markings();
  std::vector<char> seen_shared(shared, 0);
  std::vector<char> seen_inner(a.inner_markings(), 0), seen_outer(b.outer_markings(), 0);
  auto visit = [&](int j) {
    if (seen_shared[j]) return false;
    seen_shared[j] = 1;
    return true;
  };
  std::vector<Arc> arcs;
  auto mark = [&](Endpoint e) {
    if (e.side == Side::Inner) seen_inner[e.index] = 1;
    else seen_outer[e.index] = 1;
  };
  for (int i = 0; i < a.inner_markings(); ++i) {
    if (seen_inner[i]) continue;
    Endpoint start{Side::Inner, i};
    Strand s = follow(a, b, 0, start, visit);
    mark(start);
    mark(s.end);
    arcs.push_back(Arc{start, s.end, s.winding});
  }
  for (int k = 0; k < b.outer_markings(); ++k) {
    if (seen_outer[k]) continue;
    Endpoint start{Side::Outer, k};
    Strand s = follow(a, b, 1, start, visit);
    mark(start);
    mark(s.end);
    arcs.push_back(Arc{start, s.end, s.winding});
  }
  GlueOutcome out;
  for (int j = 0; j < shared; ++j) {
    if (seen_shared[j]) continue;
    seen_shared[j] = 1;
    // A closed curve: walk from the shared marking through a until we are back.
    Strand s = follow(a, b, 0, Endpoint{Side::Outer, j}, visit);
    if (s.winding == 0) ++out.trivial_closed;
    else ++out.essential_closed;
  }
  if (a.inner_markings() + b.outer_markings() == 0) {
    out.config = AnnulusConfig();
    return out;
  }
  out.config = ConfigBuilder::trusted(a.inner_markings(), b.outer_markings(), std::move(arcs));
  return out;
}

bool is_identity_gluing(const GlueOutcome& g) {
  const AnnulusConfig& c = g.config;
  return g.trivial_closed == 0 && g.essential_closed == 0 && c.inner_markings() == c.outer_markings() &&
         c.inner_markings() > 0 && c.crossing_count() == c.inner_markings();
}

namespace {

// Same test as is_identity_gluing(glue(a, b)) without building the result.
bool glues_to_identity(const AnnulusConfig& a, const AnnulusConfig& b) {
  if (a.inner_markings() != b.outer_markings() || a.outer_markings() != b.inner_markings()) return false;
  const int shared = a.outer_markings();
  int visited = 0;
  for (int i = 0; i < a.inner_markings(); ++i) {
    Endpoint ep{Side::Inner, i};
    int cfg = 0;
    for (;;) {
      Arc arc = (cfg == 0 ? a : b).arc_at(ep);
      if (cfg == 0 && arc.b.side == Side::Inner) return false;
      if (cfg == 1 && arc.b.side == Side::Outer) break;
      ++visited;
      cfg = 1 - cfg;
      ep = {cfg == 0 ? Side::Outer : Side::Inner, arc.b.index};
      if (visited > shared) return false;
    }
  }
  return visited == shared;
}

}  // namespace

std::vector<AnnulusConfig> enumerate_configs(int inner_markings, int outer_markings, int winding_bound) {
  check_markings(inner_markings, outer_markings);
  if (inner_markings + outer_markings > 12)
    fail(ErrorCode::InvalidArgument, "exhaustive enumeration supports at most 12 markings");
  if (winding_bound < 0) fail(ErrorCode::InvalidArgument, "winding bound must be non-negative");
  std::vector<Endpoint> points;
  for (int i = 0; i < inner_markings; ++i) points.push_back({Side::Inner, i});
  for (int j = 0; j < outer_markings; ++j) points.push_back({Side::Outer, j});
  std::vector<AnnulusConfig> out;
  std::vector<char> used(points.size(), 0);
  std::vector<Arc> current;
  std::function<void()> rec = [&]() {
    std::size_t first = 0;
    while (first < points.size() && used[first]) ++first;
    if (first == points.size()) {
      if (validation_error(inner_markings, outer_markings, current).empty())
        out.push_back(ConfigBuilder::trusted(inner_markings, outer_markings, current));
      return;
    }
    used[first] = 1;
    for (std::size_t k = first + 1; k < points.size(); ++k) {
      if (used[k]) continue;
      used[k] = 1;
      Endpoint a = points[first], b = points[k];
      if (a.side != b.side) {
        for (int w = -winding_bound; w <= winding_bound; ++w) {
          current.push_back(Arc{a, b, w});
          rec();
          current.pop_back();
        }
      } else {
        for (int w : {0, -1}) {
          current.push_back(Arc{a, b, w});
          rec();
          current.pop_back();
        }
      }
      used[k] = 0;
    }
    used[first] = 0;
  };
  rec();
  std::sort(out.begin(), out.end());
  return out;
}

ConfigSet enumerate_nonrotative(int n0, int n1, int window) {
  if (n0 < 1 || n1 < 1) fail(ErrorCode::InvalidArgument, "nonrotative layer needs n0, n1 >= 1");
  if (window < 1) fail(ErrorCode::WindowTooSmall, "window must be at least 1");
  const int inner = 2 * n0, outer = 2 * n1;
  std::map<AnnulusConfig, std::vector<std::pair<std::int64_t, AnnulusConfig>>> orbits;
  for (int c = 2; c <= std::min(inner, outer); c += 2) {
    std::vector<std::string> inner_words = enumerate_words(inner, c);
    std::vector<std::string> outer_words = enumerate_words(outer, c);
    for (const std::string& iw : inner_words) {
      int first_x = static_cast<int>(iw.find('X'));
      for (const std::string& ow : outer_words) {
        for (std::int64_t lift = -window; lift <= window; ++lift) {
          if (ow[floor_mod(lift, outer)] != 'X' || floor_mod(lift - first_x, 2) != 0) continue;
          AnnulusConfig cfg = config_from_words(iw, ow, lift);
          AnnulusConfig rep = holonomy_shift(cfg, -floor_div(lift, 2));
          orbits[rep].emplace_back(lift, std::move(cfg));
        }
      }
    }
  }
  ConfigSet out;
  for (auto& [rep, members] : orbits) {
    std::sort(members.begin(), members.end());
    ConfigClass cls{rep, {}};
    for (auto& m : members) cls.members.push_back(std::move(m.second));
    out.push_back(std::move(cls));
  }
  return out;
}

std::int64_t count_nonrotative(int n0, int n1) {
  return static_cast<std::int64_t>(enumerate_nonrotative(n0, n1, 1).size());
}

namespace {

enum class Direction { Above, Below };

// Invariant of a holonomy orbit: holonomy rotates the outer word by two
// markings and leaves the inner word alone.
std::string holonomy_key(const AnnulusConfig& c) {
  std::string outer = boundary_word(c, Side::Outer);
  std::string best = outer;
  for (std::size_t k = 2; k < outer.size(); k += 2) {
    std::string r = outer.substr(k) + outer.substr(0, k);
    if (r < best) best = r;
  }
  return boundary_word(c, Side::Inner) + "|" + best;
}

ConfigSet dual_templates(const std::vector<AnnulusConfig>& given, int far_markings, int window, Direction dir) {
  if (given.empty()) fail(ErrorCode::InvalidArgument, "dual of an empty set");
  if (far_markings < 2 || far_markings % 2 != 0)
    fail(ErrorCode::InvalidArgument, "far side needs a positive even number of markings");
  const Side shared_side_of_given = dir == Direction::Above ? Side::Outer : Side::Inner;
  const int shared = given.front().markings(shared_side_of_given);
  const int far_given = given.front().markings(dir == Direction::Above ? Side::Inner : Side::Outer);
  for (const AnnulusConfig& g : given) {
    if (g.markings(shared_side_of_given) != shared ||
        g.markings(dir == Direction::Above ? Side::Inner : Side::Outer) != far_given)
      fail(ErrorCode::InvalidArgument, "dual needs configurations on the same markings");
  }
  // Lifts are periodic with period 2 when the far circle is all crossing and the
  // far circle is outer; otherwise the shared circle's length.
  const int period = dir == Direction::Above ? 2 : shared;
  if (2 * window + 1 < period)
    fail(ErrorCode::WindowTooSmall, "window " + std::to_string(window) + " does not cover one holonomy period");
  if (far_markings > shared) return {};

  const std::string far_word(far_markings, 'X');
  std::map<std::string, std::vector<std::pair<std::int64_t, AnnulusConfig>>> classes;
  for (const std::string& w : enumerate_words(shared, far_markings)) {
    const std::string& inner_word = dir == Direction::Above ? w : far_word;
    const std::string& outer_word = dir == Direction::Above ? far_word : w;
    const int outer_len = static_cast<int>(outer_word.size());
    const int first_x = static_cast<int>(inner_word.find('X'));
    for (std::int64_t lift = -window; lift <= window; ++lift) {
      if (outer_word[floor_mod(lift, outer_len)] != 'X' || floor_mod(lift - first_x, 2) != 0) continue;
      AnnulusConfig x = config_from_words(inner_word, outer_word, lift);
      bool ok = std::all_of(given.begin(), given.end(), [&](const AnnulusConfig& g) {
        return dir == Direction::Above ? glues_to_identity(g, x) : glues_to_identity(x, g);
      });
      if (ok) classes[holonomy_key(x)].emplace_back(lift, std::move(x));
    }
  }
  ConfigSet out;
  for (auto& [key, members] : classes) {
    std::sort(members.begin(), members.end(), [](const auto& l, const auto& r) {
      std::int64_t al = l.first < 0 ? -l.first : l.first, ar = r.first < 0 ? -r.first : r.first;
      return al != ar ? al < ar : l.first < r.first;
    });
    ConfigClass cls{members.front().second, {}};
    std::sort(members.begin(), members.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    for (auto& m : members) cls.members.push_back(std::move(m.second));
    out.push_back(std::move(cls));
  }
  return out;
}

void require_all_inner_crossing(const AnnulusConfig& c) {
  if (c.inner_markings() == 0 || c.crossing_count() != c.inner_markings())
    fail(ErrorCode::Domain, "dual needs every inner marking on a crossing arc");
}

}  // namespace

ConfigSet dual_above(const std::vector<AnnulusConfig>& below, int far_markings, int window) {
  return dual_templates(below, far_markings, window, Direction::Above);
}

ConfigSet dual_below(const std::vector<AnnulusConfig>& above, int far_markings, int window) {
  return dual_templates(above, far_markings, window, Direction::Below);
}

ConfigSet dual_set(const AnnulusConfig& c, int far_markings, int window) {
  require_all_inner_crossing(c);
  return dual_above({c}, far_markings, window);
}

bool reflexive_check(const AnnulusConfig& c, int window) {
  require_all_inner_crossing(c);
  ConfigSet above = dual_above({c}, c.inner_markings(), window);
  std::vector<AnnulusConfig> members;
  for (const ConfigClass& cls : above) members.insert(members.end(), cls.members.begin(), cls.members.end());
  if (members.empty()) return false;
  ConfigSet back = dual_below(members, c.inner_markings(), window);
  return back.size() == 1 && holonomy_key(back.front().representative) == holonomy_key(c);
}

CappedDisk cap_inner(const AnnulusConfig& c) {
  if (c.inner_markings() != 2) fail(ErrorCode::Domain, "capping needs exactly two inner markings");
  CappedDisk out;
  out.matching.t = c.outer_markings() / 2;
  std::vector<char> seen(c.outer_markings(), 0);
  for (int j = 0; j < c.outer_markings(); ++j) {
    if (seen[j]) continue;
    Endpoint ep{Side::Outer, j};
    for (;;) {
      Arc arc = c.arc_at(ep);
      if (arc.b.side == Side::Outer) {
        seen[j] = seen[arc.b.index] = 1;
        out.matching.arcs.emplace_back(std::min(j, arc.b.index), std::max(j, arc.b.index));
        break;
      }
      ep = {Side::Inner, 1 - arc.b.index};
    }
  }
  for (const Arc& a : c.arcs()) {
    if (a.a.side == Side::Inner && a.b.side == Side::Inner) ++out.closed;
  }
  std::sort(out.matching.arcs.begin(), out.matching.arcs.end());
  return out;
}

bool disk_equivalent(const AnnulusConfig& a, const AnnulusConfig& b) {
  if (a.outer_markings() != b.outer_markings())
    fail(ErrorCode::InvalidArgument, "disk equivalence needs equal outer markings");
  return cap_inner(a) == cap_inner(b);
}

}  // namespace contact_census
