#pragma once

#include <string>
#include <string_view>

#include "triangle_words/residue.hpp"

namespace triangle_words {

/// A point of Q/Z stored as p/q in lowest terms with 0 <= p < q.
class Angle {
 public:
  /// Reduces any fraction num/den modulo 1. Throws invalid_angle for den <= 0.
  Angle(Integer num, Integer den);

  /// "p/q" or an integer. Throws parse_error on malformed text.
  static Angle parse(std::string_view text);

  Integer num() const noexcept { return num_; }
  Integer den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }
  double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend bool operator==(const Angle&, const Angle&) = default;
  /// Orders by value.
  friend bool operator<(const Angle& lhs, const Angle& rhs) noexcept;

  std::string to_string() const;

 private:
  Integer num_;
  Integer den_;
};

/// Whether some x, y, z in the elliptic classes of a, b, c satisfy xyz = 1,
/// decided exactly: true iff a + b + c (representatives in (0, 1)) lies
/// outside the open interval (1, 2). Throws invalid_angle for a zero angle.
bool orevkov_solvable(const Angle& a, const Angle& b, const Angle& c);

/// 2x2 real matrix [[a, b], [c, d]].
struct Mat2 {
  double a, b, c, d;

  double trace() const noexcept { return a + d; }
  double det() const noexcept { return a * d - b * c; }
  /// Inverse assuming determinant 1.
  Mat2 inverse() const noexcept { return {d, -b, -c, a}; }
  Mat2 operator-() const noexcept { return {-a, -b, -c, -d}; }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) noexcept {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
  }
};

/// Rotation by angle t*pi: [[cos, -sin], [sin, cos]].
Mat2 rotation(double t) noexcept;

/// The rotation sigma_a by [a]*pi.
Mat2 sigma_matrix(const Angle& a) noexcept;

/// Class parameter theta in (0, 1) of an elliptic element: the sign is fixed
/// so the lower-left entry is positive, then theta = arccos(trace / 2) / pi.
/// Throws not_elliptic when |trace| >= 2, the lower-left entry vanishes, or
/// the determinant is not 1.
double class_of(const Mat2& w);

struct NumericConfig {
  double phi_step = 0.005;  // rotation parameter, in units of pi, over [0, 1)
  double s_max = 5.0;       // diagonal parameter range [0, s_max]
  double s_step = 0.01;
  double tolerance = 1e-3;  // accepted |theta - [c]|
  double margin = 0.02;     // required distance of the sum from 1 and 2
  int bisection_steps = 60;
};

struct NumericSearchResult {
  bool solvable = false;
  double phi = 0.0;  // conjugator g = R(phi*pi) diag(e^s, e^-s) when solvable
  double s = 0.0;
  double theta = 0.0;  // class of (sigma_a g sigma_b g^-1)^-1 at that g
};

/// Grid search over conjugators g = R(phi*pi) diag(e^s, e^-s) for
/// class((sigma_a g sigma_b g^-1)^-1) = [c], refined by bisection between
/// neighbouring s values where theta - [c] changes sign. Throws invalid_angle
/// for a zero angle and inconclusive when the sum is within the margin of 1
/// or 2.
NumericSearchResult numeric_triple_search(const Angle& a, const Angle& b, const Angle& c,
                                          const NumericConfig& config = {});

bool numeric_triple_solvable(const Angle& a, const Angle& b, const Angle& c,
                             const NumericConfig& config = {});

}  // namespace triangle_words
