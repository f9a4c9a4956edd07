#include "contact_census/farey.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>

#include "contact_census/contfrac.hpp"
#include "contact_census/error.hpp"
#include "arith.hpp"

namespace contact_census {

namespace {

std::int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) fail(ErrorCode::Overflow, "integer overflow");
  return static_cast<std::int64_t>(v);
}

// Returns (x, y) with a*x + b*y = gcd(a, b) >= 0.
void extended_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t k = old_r / r;
    std::int64_t tmp = old_r - k * r;
    old_r = r;
    r = tmp;
    tmp = old_s - k * s;
    old_s = s;
    s = tmp;
    tmp = old_t - k * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
}

// Determinant-one matrix sending the line of s to the vertical line (slope infinity).
Matrix2 send_to_infinity(const Slope& s) {
  IntegralVector d = s.direction();
  std::int64_t c = 0, e = 0;
  extended_gcd(d.x, d.y, c, e);  // c*x + e*y = 1
  return Matrix2{d.y, -d.x, c, e};
}

}  // namespace

IntegralVector operator+(IntegralVector a, IntegralVector b) {
  return {checked_add(a.x, b.x), checked_add(a.y, b.y)};
}
IntegralVector operator-(IntegralVector a, IntegralVector b) {
  return {checked_sub(a.x, b.x), checked_sub(a.y, b.y)};
}
IntegralVector operator-(IntegralVector a) { return {checked_sub(0, a.x), checked_sub(0, a.y)}; }
IntegralVector operator*(std::int64_t k, IntegralVector a) {
  return {checked_mul(k, a.x), checked_mul(k, a.y)};
}

std::int64_t det(IntegralVector a, IntegralVector b) {
  return narrow(static_cast<__int128>(a.x) * b.y - static_cast<__int128>(a.y) * b.x);
}

Slope::Slope(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) fail(ErrorCode::InvalidArgument, "slope 0/0 is undefined");
  if (p == INT64_MIN || q == INT64_MIN) fail(ErrorCode::Overflow, "slope component out of range");
  std::int64_t g = std::gcd(p, q);
  p /= g;
  q /= g;
  if (q < 0) {
    p = -p;
    q = -q;
  }
  if (q == 0) p = 1;
  p_ = p;
  q_ = q;
}

Slope Slope::of_vector(IntegralVector v) { return Slope(v.y, v.x); }

Slope Slope::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  if (s.empty()) fail(ErrorCode::Parse, "empty slope");
  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s == "inf" || s == "infinity" || s == "oo") return infinity();

  auto parse_natural = [&](std::string_view part) {
    std::int64_t value = 0;
    if (part.empty()) fail(ErrorCode::Parse, "malformed rational '" + std::string(text) + "'");
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec == std::errc::result_out_of_range)
      fail(ErrorCode::Overflow, "rational out of range '" + std::string(text) + "'");
    if (ec != std::errc() || ptr != part.data() + part.size() || part.front() == '-' ||
        part.front() == '+')
      fail(ErrorCode::Parse, "malformed rational '" + std::string(text) + "'");
    return value;
  };

  std::int64_t p = 0, q = 1;
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    p = parse_natural(s);
  } else {
    p = parse_natural(s.substr(0, slash));
    q = parse_natural(s.substr(slash + 1));
  }
  if (p == 0 && q == 0) fail(ErrorCode::Parse, "slope 0/0 is undefined");
  if (q == 0) return infinity();
  return Slope(negative ? -p : p, q);
}

Slope Slope::negated() const { return is_infinite() ? *this : Slope(-p_, q_); }

Slope Slope::reciprocal() const { return Slope(q_, p_); }

std::string Slope::str() const {
  if (is_infinite()) return "inf";
  if (q_ == 1) return std::to_string(p_);
  return std::to_string(p_) + "/" + std::to_string(q_);
}

std::int64_t Matrix2::determinant() const {
  return narrow(static_cast<__int128>(a) * d - static_cast<__int128>(b) * c);
}

IntegralVector Matrix2::operator()(IntegralVector v) const {
  return {narrow(static_cast<__int128>(a) * v.x + static_cast<__int128>(b) * v.y),
          narrow(static_cast<__int128>(c) * v.x + static_cast<__int128>(d) * v.y)};
}

Matrix2 Matrix2::operator*(const Matrix2& o) const {
  auto dot = [](std::int64_t u, std::int64_t v, std::int64_t w, std::int64_t z) {
    return narrow(static_cast<__int128>(u) * v + static_cast<__int128>(w) * z);
  };
  return Matrix2{dot(a, o.a, b, o.c), dot(a, o.b, b, o.d), dot(c, o.a, d, o.c),
                 dot(c, o.b, d, o.d)};
}

Matrix2 Matrix2::inverse() const {
  std::int64_t dt = determinant();
  if (dt != 1 && dt != -1) fail(ErrorCode::InvalidArgument, "matrix is not unimodular");
  return Matrix2{d * dt, -b * dt, -c * dt, a * dt};
}

bool farey_adjacent(const Slope& a, const Slope& b) {
  std::int64_t d = det(a.direction(), b.direction());
  return d == 1 || d == -1;
}

Slope mediant(const Slope& a, const Slope& b) {
  IntegralVector sum = a.direction() + b.direction();
  if (sum.x == 0 && sum.y == 0) fail(ErrorCode::InvalidArgument, "antipodal representatives");
  return Slope::of_vector(sum);
}

IntegralVector half_plane_rep(const Slope& s, IntegralVector anchor) {
  IntegralVector d = s.direction();
  std::int64_t side = det(anchor, d);
  if (side > 0) return d;
  if (side < 0) return -d;
  // Same line as the anchor: return the anchor's ray.
  return (d.x * anchor.x + d.y * anchor.y > 0) ? d : -d;
}

bool between(const Slope& s, const Slope& s1, const Slope& s0) {
  if (s == s1) return true;
  if (s1 == s0) return false;
  IntegralVector u1 = s1.direction();
  IntegralVector a = half_plane_rep(s0, u1);
  IntegralVector b = half_plane_rep(s, u1);
  return det(b, a) >= 0;
}

bool arc_before(const Slope& a, const Slope& b, const Slope& start) {
  if (a == b) return false;
  if (a == start) return true;
  if (b == start) return false;
  IntegralVector u = start.direction();
  return det(half_plane_rep(a, u), half_plane_rep(b, u)) > 0;
}

Slope bypass_slope(const Slope& s, const Slope& r, ArcOrientation orientation) {
  if (s == r) fail(ErrorCode::InvalidArgument, "bypass slope needs r != s");
  if (orientation == ArcOrientation::Clockwise)
    return bypass_slope(s.negated(), r.negated(), ArcOrientation::Counterclockwise).negated();
  // In coordinates where s is infinity the neighbours of s are the integers, and
  // the first one met walking upward from r is ceil(r).
  Matrix2 m = send_to_infinity(s);
  Slope r_image = sl2_apply(m, r);
  std::int64_t n = detail::ceil_div(r_image.p(), r_image.q());
  return sl2_apply(m.inverse(), Slope::integer(n));
}

std::vector<Slope> shortest_path(const Slope& s_from, const Slope& s_to) {
  if (s_from == s_to) return {s_from};
  NormalizedBoundary nb = normalize_boundary(s_from, s_to);
  Matrix2 back = nb.matrix.inverse();
  std::vector<Slope> path;
  for (const Slope& t : path_via_cf(nb.p, nb.q)) path.push_back(sl2_apply(back, t));
  return path;
}

Slope sl2_apply(const Matrix2& m, const Slope& s) {
  std::int64_t dt = m.determinant();
  if (dt != 1 && dt != -1) fail(ErrorCode::InvalidArgument, "matrix is not unimodular");
  return Slope::of_vector(m(s.direction()));
}

NormalizedBoundary normalize_boundary(const Slope& s1, const Slope& s0) {
  NormalizedBoundary out;
  IntegralVector u1 = primitive_vector(s1);
  if (s1 == s0) {
    // Send u1 to (-1, 1) with a determinant-one matrix.
    IntegralVector w{0, 0};
    std::int64_t c = 0, e = 0;
    extended_gcd(u1.x, u1.y, c, e);  // c*u1.x + e*u1.y = 1, so det(u1, (-e, c)) = 1
    w = {-e, c};
    Matrix2 source{u1.x, w.x, u1.y, w.y};
    Matrix2 target{-1, -1, 1, 0};
    out.matrix = target * source.inverse();
    out.p = 1;
    out.q = 1;
    return out;
  }
  if (s0 == Slope(-1, 1) && !s1.is_infinite() && s1.p() < 0 && -s1.p() > s1.q()) {
    out.matrix = Matrix2::identity();
    out.p = -s1.p();
    out.q = s1.q();
    return out;
  }
  IntegralVector u0 = half_plane_rep(s0, u1);
  std::int64_t d = det(u1, u0);
  std::int64_t x = 0, y = 0;
  extended_gcd(u0.x, u0.y, x, y);  // x*c + y*e = 1
  __int128 q_raw = (static_cast<__int128>(x) * u1.x + static_cast<__int128>(y) * u1.y) % d;
  if (q_raw <= 0) q_raw += d;
  std::int64_t q = narrow(q_raw);
  std::int64_t p = checked_add(q, d);
  // M = T adj(S) / d with S = [u1 u0], T = [(-q,p) (-1,1)].
  auto entry = [&](__int128 v) {
    if (v % d != 0) fail(ErrorCode::Internal, "normalization matrix is not integral");
    return narrow(v / d);
  };
  const __int128 a = u1.x, b = u1.y, c = u0.x, e = u0.y;
  out.matrix = Matrix2{entry(-q * e + b), entry(q * c - a), entry(p * e - b), entry(-p * c + a)};
  out.p = p;
  out.q = q;
  return out;
}

IntegralVector primitive_vector(const Slope& s) { return -s.direction(); }

IntegralVector adjacent_lift(IntegralVector prev, const Slope& next) {
  IntegralVector d = next.direction();
  std::int64_t dt = det(prev, d);
  if (dt == 1) return d;
  if (dt == -1) return -d;
  fail(ErrorCode::Domain, "slope " + next.str() + " is not Farey adjacent to its predecessor");
}

}  // namespace contact_census
