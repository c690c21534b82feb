#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symtop {

enum class PotentialKind { Lagrange, Kirchhoff, Polynomial };

/// Profile function W on [0,1).
///
/// W encodes an axially invariant potential on the sphere through
/// W(u^2) = V(u, 0, sqrt(1-u^2)); everything downstream (effective
/// potential, branch equation, simulations) consumes the potential only
/// through this class.  Derivatives are closed-form for every kind, so no
/// finite-difference noise enters the solvers.
///
/// Built-ins: Lagrange W(t) = sqrt(1-t) and Kirchhoff W(t) = c + (1-c) t.
/// User-defined potentials are polynomials in t (ascending coefficients).
class Potential {
 public:
  static Potential lagrange();
  static Potential kirchhoff(double c);  // requires c > 0
  static Potential polynomial(std::vector<double> coeffs);

  PotentialKind kind() const { return kind_; }
  double kirchhoff_c() const { return c_; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  /// W(t) for t in [0,1); throws std::domain_error outside.
  double value(double t) const;
  double deriv(double t) const;
  double deriv2(double t) const;

  /// (W'(0), W''(0)) in closed form; the sleeping-top classification
  /// depends on nothing else.
  std::pair<double, double> derivs_at_zero() const;

  /// W(u^2) for |u| < 1 — the potential along the zero meridian.
  double on_sphere(double u) const;

  /// f(s) = W(4s/(1+s)^2) and its first two s-derivatives (order 0|1|2).
  /// Defined for s >= 0, s != 1; the substitution map g(s) = 4s/(1+s)^2
  /// and its derivatives are closed forms:
  ///   g'(s) = 4(1-s)/(1+s)^3,  g''(s) = 8(s-2)/(1+s)^4,
  /// giving f'(0) = 4 W'(0) and f''(0) = 16 (W''(0) - W'(0)).
  double f_transform(double s, int order) const;

 private:
  Potential() = default;

  PotentialKind kind_ = PotentialKind::Lagrange;
  double c_ = 0.0;
  std::vector<double> coeffs_;
};

class PotentialParseError : public std::runtime_error {
 public:
  PotentialParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg), pos_(position) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Parses a potential spec string: "lagrange", "kirchhoff:<c>" or
/// "poly:<a0>,<a1>,...".  Throws PotentialParseError with the byte offset
/// of the offending character.
Potential parse_potential(std::string_view spec);

}  // namespace symtop
