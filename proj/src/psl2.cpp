#include "triangle_words/psl2.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "triangle_words/error.hpp"
#include "wide_int.hpp"

namespace triangle_words {

namespace {

constexpr double kEllipticSlack = 1e-12;
constexpr double kDeterminantSlack = 1e-9;

Integer parse_integer(std::string_view text) {
  Integer value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [end, ec] = std::from_chars(first, last, value);
  if (first == last || ec != std::errc() || end != last) {
    fail(ErrorCode::parse_error, "bad integer '" + std::string(text) + "' in angle");
  }
  return value;
}

void require_nonzero(const Angle& a, const Angle& b, const Angle& c) {
  if (a.is_zero() || b.is_zero() || c.is_zero()) {
    fail(ErrorCode::invalid_angle, "angles must be nonzero in Q/Z");
  }
}

// class_of without exceptions; NaN when the matrix is not elliptic.
double try_class_of(const Mat2& w) noexcept {
  const double tr = w.trace();
  if (!(std::abs(tr) < 2.0 - kEllipticSlack) || w.c == 0.0) return std::nan("");
  const double scale = w.a * w.a + w.b * w.b + w.c * w.c + w.d * w.d;
  if (std::abs(w.det() - 1.0) > kDeterminantSlack * std::max(1.0, scale)) return std::nan("");
  const double signed_trace = w.c > 0 ? tr : -tr;
  return std::acos(std::clamp(signed_trace / 2.0, -1.0, 1.0)) / std::numbers::pi;
}

Mat2 diagonal(double s) noexcept { return {std::exp(s), 0.0, 0.0, std::exp(-s)}; }

}  // namespace

Angle::Angle(Integer num, Integer den) {
  if (den <= 0) fail(ErrorCode::invalid_angle, "angle denominator must be positive");
  num = mod_floor(num, den);
  const Integer g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Angle Angle::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Angle(parse_integer(text), 1);
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den <= 0) fail(ErrorCode::parse_error, "angle denominator must be positive");
  return Angle(parse_integer(text.substr(0, slash)), den);
}

bool operator<(const Angle& lhs, const Angle& rhs) noexcept {
  return static_cast<WideInt>(lhs.num_) * rhs.den_ < static_cast<WideInt>(rhs.num_) * lhs.den_;
}

std::string Angle::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

bool orevkov_solvable(const Angle& a, const Angle& b, const Angle& c) {
  require_nonzero(a, b, c);
  const WideInt den = WideInt(a.den()) * b.den() * c.den();
  const WideInt num = WideInt(a.num()) * b.den() * c.den() + WideInt(b.num()) * a.den() * c.den() +
                   WideInt(c.num()) * a.den() * b.den();
  const bool inside_open_interval = den < num && num < 2 * den;
  return !inside_open_interval;
}

Mat2 rotation(double t) noexcept {
  const double co = std::cos(t * std::numbers::pi);
  const double si = std::sin(t * std::numbers::pi);
  return {co, -si, si, co};
}

Mat2 sigma_matrix(const Angle& a) noexcept { return rotation(a.value()); }

double class_of(const Mat2& w) {
  const double theta = try_class_of(w);
  if (std::isnan(theta)) {
    fail(ErrorCode::not_elliptic, "matrix is not an elliptic element of SL2(R)");
  }
  return theta;
}

NumericSearchResult numeric_triple_search(const Angle& a, const Angle& b, const Angle& c,
                                          const NumericConfig& config) {
  require_nonzero(a, b, c);
  const double sum = a.value() + b.value() + c.value();
  if (std::abs(sum - 1.0) < config.margin || std::abs(sum - 2.0) < config.margin) {
    fail(ErrorCode::inconclusive, "sum " + std::to_string(sum) +
                                      " is too close to 1 or 2 for the numeric search");
  }

  const Mat2 sa = sigma_matrix(a);
  const Mat2 sb = sigma_matrix(b);
  const double target = c.value();
  auto theta_at = [&](const Mat2& r, double s) {
    const Mat2 g = r * diagonal(s);
    return try_class_of((sa * (g * sb * g.inverse())).inverse());
  };

  const int phi_count = static_cast<int>(std::llround(1.0 / config.phi_step));
  const int s_count = static_cast<int>(std::llround(config.s_max / config.s_step));
  std::vector<double> thetas(static_cast<std::size_t>(s_count) + 1);
  for (int i = 0; i < phi_count; ++i) {
    const double phi = i * config.phi_step;
    const Mat2 r = rotation(phi);
    for (int j = 0; j <= s_count; ++j) {
      const double s = j * config.s_step;
      const double theta = theta_at(r, s);
      thetas[j] = theta;
      if (std::abs(theta - target) < config.tolerance) return {true, phi, s, theta};
    }
    // Bisect each bracket where theta - [c] changes sign between elliptic
    // neighbours.
    for (int j = 0; j < s_count; ++j) {
      const double f0 = thetas[j] - target;
      const double f1 = thetas[j + 1] - target;
      if (std::isnan(f0) || std::isnan(f1) || (f0 < 0) == (f1 < 0)) continue;
      double lo = j * config.s_step;
      double hi = (j + 1) * config.s_step;
      const bool lo_negative = f0 < 0;
      double mid = lo;
      double theta = thetas[j];
      for (int step = 0; step < config.bisection_steps; ++step) {
        mid = 0.5 * (lo + hi);
        theta = theta_at(r, mid);
        if (std::isnan(theta)) break;
        if (((theta - target) < 0) == lo_negative) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      if (!std::isnan(theta) && std::abs(theta - target) < config.tolerance) {
        return {true, phi, mid, theta};
      }
    }
  }
  return {};
}

bool numeric_triple_solvable(const Angle& a, const Angle& b, const Angle& c,
                             const NumericConfig& config) {
  return numeric_triple_search(a, b, c, config).solvable;
}

}  // namespace triangle_words
