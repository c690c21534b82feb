#include "symtop/potential.hpp"

#include <charconv>
#include <cmath>

namespace symtop {

namespace {

void check_t(double t) {
  if (!(t >= 0.0) || t >= 1.0)
    throw std::domain_error("W(t): t must lie in [0,1)");
}

// Horner evaluation of the k-th formal derivative of a coefficient list.
double poly_deriv_eval(const std::vector<double>& a, int k, double t) {
  const int n = static_cast<int>(a.size());
  double acc = 0.0;
  for (int i = n - 1; i >= k; --i) {
    double fac = 1.0;
    for (int j = 0; j < k; ++j) fac *= static_cast<double>(i - j);
    acc = acc * t + fac * a[static_cast<std::size_t>(i)];
  }
  return acc;
}

}  // namespace

Potential Potential::lagrange() {
  Potential w;
  w.kind_ = PotentialKind::Lagrange;
  return w;
}

Potential Potential::kirchhoff(double c) {
  if (!(c > 0.0))
    throw std::invalid_argument("kirchhoff: constant c must be > 0");
  Potential w;
  w.kind_ = PotentialKind::Kirchhoff;
  w.c_ = c;
  return w;
}

Potential Potential::polynomial(std::vector<double> coeffs) {
  if (coeffs.empty())
    throw std::invalid_argument("polynomial: need at least one coefficient");
  Potential w;
  w.kind_ = PotentialKind::Polynomial;
  w.coeffs_ = std::move(coeffs);
  return w;
}

double Potential::value(double t) const {
  check_t(t);
  switch (kind_) {
    case PotentialKind::Lagrange: return std::sqrt(1.0 - t);
    case PotentialKind::Kirchhoff: return c_ + (1.0 - c_) * t;
    case PotentialKind::Polynomial: return poly_deriv_eval(coeffs_, 0, t);
  }
  return 0.0;  // unreachable
}

double Potential::deriv(double t) const {
  check_t(t);
  switch (kind_) {
    case PotentialKind::Lagrange: return -0.5 / std::sqrt(1.0 - t);
    case PotentialKind::Kirchhoff: return 1.0 - c_;
    case PotentialKind::Polynomial: return poly_deriv_eval(coeffs_, 1, t);
  }
  return 0.0;
}

double Potential::deriv2(double t) const {
  check_t(t);
  switch (kind_) {
    case PotentialKind::Lagrange: {
      const double z = 1.0 - t;
      return -0.25 / (z * std::sqrt(z));
    }
    case PotentialKind::Kirchhoff: return 0.0;
    case PotentialKind::Polynomial: return poly_deriv_eval(coeffs_, 2, t);
  }
  return 0.0;
}

std::pair<double, double> Potential::derivs_at_zero() const {
  switch (kind_) {
    case PotentialKind::Lagrange: return {-0.5, -0.25};
    case PotentialKind::Kirchhoff: return {1.0 - c_, 0.0};
    case PotentialKind::Polynomial: {
      const double w1 = coeffs_.size() > 1 ? coeffs_[1] : 0.0;
      const double w2 = coeffs_.size() > 2 ? 2.0 * coeffs_[2] : 0.0;
      return {w1, w2};
    }
  }
  return {0.0, 0.0};
}

double Potential::on_sphere(double u) const {
  if (!(std::abs(u) < 1.0))
    throw std::domain_error("W(u^2): |u| must be < 1");
  return value(u * u);
}

double Potential::f_transform(double s, int order) const {
  if (!(s >= 0.0)) throw std::domain_error("f(s): s must be >= 0");
  if (s == 1.0) throw std::domain_error("f(s): undefined at s = 1 (chart degeneracy u = +-1)");
  const double p = 1.0 + s;
  const double g = 4.0 * s / (p * p);
  switch (order) {
    case 0: return value(g);
    case 1: {
      const double g1 = 4.0 * (1.0 - s) / (p * p * p);
      return deriv(g) * g1;
    }
    case 2: {
      const double g1 = 4.0 * (1.0 - s) / (p * p * p);
      const double g2 = 8.0 * (s - 2.0) / (p * p * p * p);
      return deriv2(g) * g1 * g1 + deriv(g) * g2;
    }
    default:
      throw std::invalid_argument("f_transform: order must be 0, 1 or 2");
  }
}

namespace {

double parse_number(std::string_view spec, std::size_t& pos) {
  double v = 0.0;
  const char* first = spec.data() + pos;
  const char* last = spec.data() + spec.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr == first)
    throw PotentialParseError("expected a number", pos);
  pos = static_cast<std::size_t>(ptr - spec.data());
  return v;
}

}  // namespace

Potential parse_potential(std::string_view spec) {
  if (spec == "lagrange") return Potential::lagrange();

  constexpr std::string_view kKirchhoff = "kirchhoff:";
  if (spec.substr(0, kKirchhoff.size()) == kKirchhoff) {
    std::size_t pos = kKirchhoff.size();
    const double c = parse_number(spec, pos);
    if (pos != spec.size())
      throw PotentialParseError("trailing characters after kirchhoff constant", pos);
    if (!(c > 0.0))
      throw PotentialParseError("kirchhoff constant must be > 0", kKirchhoff.size());
    return Potential::kirchhoff(c);
  }

  constexpr std::string_view kPoly = "poly:";
  if (spec.substr(0, kPoly.size()) == kPoly) {
    std::size_t pos = kPoly.size();
    std::vector<double> coeffs;
    coeffs.push_back(parse_number(spec, pos));
    while (pos < spec.size()) {
      if (spec[pos] != ',')
        throw PotentialParseError("expected ',' between coefficients", pos);
      ++pos;
      coeffs.push_back(parse_number(spec, pos));
    }
    return Potential::polynomial(std::move(coeffs));
  }

  throw PotentialParseError(
      "unknown potential (expected lagrange, kirchhoff:<c> or poly:<a0>,<a1>,...)", 0);
}

}  // namespace symtop
