#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace contact_census {

// Primitive integer vector. A slope p/q corresponds to the direction (q, p).
struct IntegralVector {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const IntegralVector&, const IntegralVector&) = default;
  friend auto operator<=>(const IntegralVector&, const IntegralVector&) = default;
};

IntegralVector operator+(IntegralVector a, IntegralVector b);
IntegralVector operator-(IntegralVector a, IntegralVector b);
IntegralVector operator-(IntegralVector a);
IntegralVector operator*(std::int64_t k, IntegralVector a);

// x_a * y_b - y_a * x_b
std::int64_t det(IntegralVector a, IntegralVector b);

// Rational slope p/q or infinity, always stored canonically:
// gcd(|p|,|q|) = 1 and q > 0, or (p,q) = (1,0) for infinity.
class Slope {
 public:
  Slope() : p_(0), q_(1) {}
  Slope(std::int64_t p, std::int64_t q);

  static Slope infinity() { return Slope(1, 0); }
  static Slope integer(std::int64_t n) { return Slope(n, 1); }
  // Slope of the line spanned by (x, y), i.e. y/x.
  static Slope of_vector(IntegralVector v);
  // Accepts "p/q", "n", "inf", "infinity", "1/0"; optional leading sign.
  static Slope parse(std::string_view text);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  bool is_infinite() const { return q_ == 0; }
  // Direction vector (q, p); either sign spans the same line.
  IntegralVector direction() const { return {q_, p_}; }
  Slope negated() const;
  Slope reciprocal() const;

  std::string str() const;

  friend bool operator==(const Slope&, const Slope&) = default;
  friend auto operator<=>(const Slope&, const Slope&) = default;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

// Integer 2x2 matrix [[a, b], [c, d]] acting on column vectors.
struct Matrix2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  static Matrix2 identity() { return {}; }
  std::int64_t determinant() const;
  IntegralVector operator()(IntegralVector v) const;
  Matrix2 operator*(const Matrix2& o) const;
  // Inverse of a unimodular matrix.
  Matrix2 inverse() const;

  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

bool farey_adjacent(const Slope& a, const Slope& b);

// Reduced (p_a+p_b)/(q_a+q_b) using the canonical representatives.
Slope mediant(const Slope& a, const Slope& b);

// True iff s lies on the closed counterclockwise arc from s1 to s0.
// Counterclockwise means increasing slope: ... -> -1 -> 0 -> 1 -> ... -> inf -> ...
bool between(const Slope& s, const Slope& s1, const Slope& s0);

// Strict ordering along the counterclockwise arc starting at `start`:
// true iff a is reached before b when turning counterclockwise from start.
bool arc_before(const Slope& a, const Slope& b, const Slope& start);

// Representative of s's line in the half-plane {w : det(anchor, w) > 0} plus
// the ray of anchor itself.
IntegralVector half_plane_rep(const Slope& s, IntegralVector anchor);

enum class ArcOrientation { Counterclockwise, Clockwise };

// The slope adjacent to s that is met first when walking from r towards s.
// Counterclockwise follows the increasing-slope direction. Clockwise is its
// mirror image (conjugation by s -> -s).
Slope bypass_slope(const Slope& s, const Slope& r,
                   ArcOrientation orientation = ArcOrientation::Counterclockwise);

// Shortest Farey edge path from s_from to s_to inside the counterclockwise arc.
std::vector<Slope> shortest_path(const Slope& s_from, const Slope& s_to);

Slope sl2_apply(const Matrix2& m, const Slope& s);

struct NormalizedBoundary {
  Matrix2 matrix;  // determinant +1
  std::int64_t p = 1;
  std::int64_t q = 1;
  Slope image_s1() const { return Slope(-p, q); }
  Slope image_s0() const { return Slope(-1, 1); }
};

// Finds M in SL(2,Z) with M(s1) = -p/q and M(s0) = -1, p >= q >= 1, such that
// the counterclockwise arc [s1, s0] maps onto [-p/q, -1]. The matrix also
// carries primitive_vector(s1) to (-q, p). Pairs already in this form get the
// identity; otherwise the smallest admissible q is chosen.
NormalizedBoundary normalize_boundary(const Slope& s1, const Slope& s0);

// -(q, p): negative x for finite slopes, (0, -1) for infinity.
IntegralVector primitive_vector(const Slope& s);

// Lift of `next` whose determinant with `prev` is +1 (next must be adjacent
// to the slope of prev).
IntegralVector adjacent_lift(IntegralVector prev, const Slope& next);

}  // namespace contact_census
