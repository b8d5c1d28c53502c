#include "g2spectra/torus.hpp"

#include "g2spectra/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <utility>

namespace g2s {

Rational frac(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational r = q - Rational(f);
  r.canonicalize();
  return r;
}

TorusPoint::TorusPoint(const Rational& theta1, const Rational& theta2)
    : t1_(frac(theta1)), t2_(frac(theta2)) {}

std::string TorusPoint::str() const { return "(" + to_string(t1_) + "," + to_string(t2_) + ")"; }

WeylElement weyl_T2() { return {0, -1, -1, 0}; }
WeylElement weyl_T6() { return {0, 1, -1, 1}; }

WeylElement weyl_multiply(const WeylElement& a, const WeylElement& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

namespace {

std::vector<WeylElement> generate(const WeylElement& rot, int rot_order) {
  std::vector<WeylElement> out;
  WeylElement r{1, 0, 0, 1};
  for (int a = 0; a < rot_order; ++a) {
    out.push_back(r);
    out.push_back(weyl_multiply(r, weyl_T2()));
    r = weyl_multiply(r, rot);
  }
  return out;
}

}  // namespace

const std::vector<WeylElement>& d12() {
  static const std::vector<WeylElement> g = generate(weyl_T6(), 6);
  return g;
}

const std::vector<WeylElement>& s3() {
  static const std::vector<WeylElement> g =
      generate(weyl_multiply(weyl_T6(), weyl_T6()), 3);
  return g;
}

TorusPoint act(const WeylElement& g, const TorusPoint& p) {
  return TorusPoint(g[0] * p.theta1() + g[1] * p.theta2(), g[2] * p.theta1() + g[3] * p.theta2());
}

std::vector<TorusPoint> d12_orbit(const TorusPoint& p) {
  std::set<TorusPoint> s;
  for (const auto& g : d12()) s.insert(act(g, p));
  return {s.begin(), s.end()};
}

TorusPoint orbit_representative(const TorusPoint& p) { return d12_orbit(p).front(); }

std::vector<Rational> weights7(const TorusPoint& p) {
  const Rational &a = p.theta1(), &b = p.theta2();
  return {Rational(0), a, -a, b, -b, a - b, b - a};
}

std::vector<Rational> weights14(const TorusPoint& p) {
  const Rational &a = p.theta1(), &b = p.theta2();
  return {a, -a, b, -b, a - b, b - a, Rational(0), Rational(0),
          a + b, -(a + b), 2 * a - b, b - 2 * a, a - 2 * b, 2 * b - a};
}

namespace {

// sum of coeff * e^(2 pi i angle)
Cyclotomic root_sum(const std::vector<std::pair<Rational, Rational>>& terms) {
  long d = 1;
  for (const auto& [angle, c] : terms) {
    Rational a = angle;
    a.canonicalize();
    d = std::lcm(d, a.get_den().get_si());
  }
  std::map<long, Rational> coeff;
  for (const auto& [angle, c] : terms) {
    Rational e = frac(angle) * d;
    e.canonicalize();
    coeff[e.get_num().get_si()] += c;
  }
  return Cyclotomic::from_exponents(d, coeff);
}

Cyclotomic weight_sum(const std::vector<Rational>& angles) {
  std::vector<std::pair<Rational, Rational>> t;
  for (const auto& a : angles) t.emplace_back(a, Rational(1));
  return root_sum(t);
}

}  // namespace

Cyclotomic phi1(const TorusPoint& p) { return weight_sum(weights7(p)); }
Cyclotomic phi2(const TorusPoint& p) { return weight_sum(weights14(p)); }

Cyclotomic j2(const TorusPoint& p) {
  const Rational &a = p.theta1(), &b = p.theta2();
  const std::pair<Rational, int> cosines[] = {{2 * a + b, 1},     {a - 3 * b, 1},
                                              {3 * a - 2 * b, 1}, {a + 2 * b, -1},
                                              {3 * a - b, -1},    {2 * a - 3 * b, -1}};
  std::vector<std::pair<Rational, Rational>> t;
  for (const auto& [r, s] : cosines) {
    t.emplace_back(r, Rational(s, 2));
    t.emplace_back(-r, Rational(s, 2));
  }
  Cyclotomic c = root_sum(t);
  return c * c;
}

Cyclotomic kdens(const TorusPoint& p) {
  const Rational &a = p.theta1(), &b = p.theta2();
  const std::pair<Rational, int> sines[] = {{a + b, 1}, {2 * a - b, -1}, {2 * b - a, -1}};
  std::vector<std::pair<Rational, Rational>> t;
  for (const auto& [r, s] : sines) {
    t.emplace_back(r, Rational(s));
    t.emplace_back(-r, Rational(-s));
  }
  // 2i * (sine sum) = A, so 4 * (sine sum)^2 = -A^2.
  Cyclotomic s = root_sum(t);
  return -(s * s);
}

Cyclotomic domain_p1(const Cyclotomic& x, const Cyclotomic& y) {
  Cyclotomic x2 = x * x;
  return Cyclotomic(4L) * x2 * x - x2 - Cyclotomic(2L) * x - Cyclotomic(10L) * x * y - y * y -
         Cyclotomic(10L) * y + Cyclotomic(7L);
}

Cyclotomic domain_p2(const Cyclotomic& x, const Cyclotomic& y) {
  return Cyclotomic(4L) * y + Cyclotomic(7L) - Cyclotomic(2L) * x - x * x;
}

Cyclotomic domain_p2_printed(const Cyclotomic& x, const Cyclotomic& y) {
  return x * x + Cyclotomic(2L) * x - Cyclotomic(7L) - Cyclotomic(4L) * y;
}

bool domain_contains(const Cyclotomic& x, const Cyclotomic& y) {
  if (!x.is_real() || !y.is_real()) throw NotReal();
  return domain_p1(x, y).sign() >= 0 && domain_p2(x, y).sign() >= 0;
}

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

double c2(double t) { return 2 * std::cos(kTwoPi * t); }
double dc2(double t) { return -2 * kTwoPi * std::sin(kTwoPi * t); }

double residual(double t1, double t2, double x, double y) {
  return std::max(std::abs(phi1_float(t1, t2) - x), std::abs(phi2_float(t1, t2) - y));
}

// Roots of u^3 + (1-x)u^2 + (y-2)u + (2y - x^2 + 2x - 1), the values 2cos of the
// three weight angles.
std::vector<double> cubic_roots(double x, double y) {
  const double a = 1 - x, b = y - 2, c = 2 * y - x * x + 2 * x - 1;
  const double p = b - a * a / 3;
  const double q = 2 * a * a * a / 27 - a * b / 3 + c;
  std::vector<double> us;
  if (std::abs(p) < 1e-14) {
    us.assign(3, -a / 3 + std::cbrt(-q));
  } else if (p < 0) {
    double r = 2 * std::sqrt(-p / 3);
    double arg = std::clamp(3 * q / (2 * p) * std::sqrt(-3 / p), -1.0, 1.0);
    double phi = std::acos(arg) / 3;
    for (int k = 0; k < 3; ++k) us.push_back(r * std::cos(phi - kTwoPi * k / 3) - a / 3);
  } else {
    return {};
  }
  for (double& u : us) {
    for (int it = 0; it < 2; ++it) {
      double f = ((u + a) * u + b) * u + c;
      double d = (3 * u + 2 * a) * u + b;
      if (std::abs(d) > 1e-8) u -= f / d;
    }
  }
  return us;
}

// Damped Gauss-Newton on (theta1, theta2); needed where the Jacobian degenerates.
std::pair<double, double> polish(double t1, double t2, double x, double y) {
  for (int it = 0; it < 100; ++it) {
    double rx = phi1_float(t1, t2) - x, ry = phi2_float(t1, t2) - y;
    if (std::max(std::abs(rx), std::abs(ry)) < 1e-13) break;
    double a = dc2(t1) + dc2(t1 - t2);
    double b = dc2(t2) - dc2(t1 - t2);
    double c = a + dc2(t1 + t2) + 2 * dc2(2 * t1 - t2) + dc2(t1 - 2 * t2);
    double d = b + dc2(t1 + t2) - dc2(2 * t1 - t2) - 2 * dc2(t1 - 2 * t2);
    double lam = 1e-12 * (a * a + b * b + c * c + d * d) + 1e-30;
    double m11 = a * a + c * c + lam, m12 = a * b + c * d, m22 = b * b + d * d + lam;
    double g1 = a * rx + c * ry, g2 = b * rx + d * ry;
    double det = m11 * m22 - m12 * m12;
    t1 -= (m22 * g1 - m12 * g2) / det;
    t2 -= (m11 * g2 - m12 * g1) / det;
  }
  return {t1, t2};
}

double wrap(double t) {
  t -= std::floor(t);
  return t >= 1 ? 0 : t;
}

}  // namespace

double phi1_float(double t1, double t2) { return 1 + c2(t1) + c2(t2) + c2(t1 - t2); }

double phi2_float(double t1, double t2) {
  return phi1_float(t1, t2) + 1 + c2(t1 + t2) + c2(2 * t1 - t2) + c2(t1 - 2 * t2);
}

double j2_float(double t1, double t2) {
  auto c = [](double t) { return std::cos(kTwoPi * t); };
  double j = c(2 * t1 + t2) + c(t1 - 3 * t2) + c(3 * t1 - 2 * t2) - c(t1 + 2 * t2) -
             c(3 * t1 - t2) - c(2 * t1 - 3 * t2);
  return j * j;
}

double kdens_float(double t1, double t2) {
  auto s = [](double t) { return std::sin(kTwoPi * t); };
  double v = s(t1 + t2) - s(2 * t1 - t2) - s(2 * t2 - t1);
  return 4 * v * v;
}

Preimage torus_preimage(double x, double y, double tolerance) {
  std::vector<double> us = cubic_roots(x, y);
  if (us.empty()) throw Error("preimage: cubic has complex roots, point lies outside D");
  double th[3];
  for (int k = 0; k < 3; ++k) th[k] = std::acos(std::clamp(us[k] / 2, -1.0, 1.0)) / kTwoPi;
  Preimage best;
  best.error = INFINITY;
  for (int l = 0; l < 3; ++l) {
    for (int m = 0; m < 3; ++m) {
      for (int s = 0; s < 2; ++s) {
        double t1 = th[l], t2 = s ? -th[m] : th[m];
        double e = residual(t1, t2, x, y);
        if (e < best.error) best = Preimage{t1, t2, l, m, s == 1, e};
        if (e < tolerance) goto done;
      }
    }
  }
done:
  if (best.error > 1e-13) {
    auto [t1, t2] = polish(best.theta1, best.theta2, x, y);
    double e = residual(t1, t2, x, y);
    if (e < best.error) {
      best.theta1 = t1;
      best.theta2 = t2;
      best.error = e;
    }
  }
  if (!(best.error < tolerance))
    throw Error("preimage: no branch pair closes the roundtrip (residual " +
                std::to_string(best.error) + ")");
  best.theta1 = wrap(best.theta1);
  best.theta2 = wrap(best.theta2);
  return best;
}

}  // namespace g2s
