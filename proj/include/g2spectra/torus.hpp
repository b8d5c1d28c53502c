#pragma once

#include "g2spectra/cyclotomic.hpp"

#include <array>
#include <string>
#include <vector>

namespace g2s {

// Point (e^(2 pi i theta1), e^(2 pi i theta2)) of the maximal torus, angles reduced to [0, 1).
class TorusPoint {
public:
  TorusPoint() = default;
  TorusPoint(const Rational& theta1, const Rational& theta2);

  const Rational& theta1() const { return t1_; }
  const Rational& theta2() const { return t2_; }
  std::string str() const;

  friend bool operator==(const TorusPoint& a, const TorusPoint& b) {
    return a.t1_ == b.t1_ && a.t2_ == b.t2_;
  }
  friend bool operator!=(const TorusPoint& a, const TorusPoint& b) { return !(a == b); }
  friend bool operator<(const TorusPoint& a, const TorusPoint& b) {
    int c = cmp(a.t1_, b.t1_);
    return c != 0 ? c < 0 : cmp(a.t2_, b.t2_) < 0;
  }

private:
  Rational t1_{0}, t2_{0};
};

Rational frac(const Rational& q);

// Row-major 2x2 integer matrix (a11, a12, a21, a22).
using WeylElement = std::array<long, 4>;

WeylElement weyl_T2();
WeylElement weyl_T6();
WeylElement weyl_multiply(const WeylElement& a, const WeylElement& b);
// The 12 elements T6^a T2^b, a < 6, b < 2.
const std::vector<WeylElement>& d12();
// {(T6^2)^a T2^b}: the order-6 subgroup used for the d((n)) and d(n,k) supports.
const std::vector<WeylElement>& s3();

TorusPoint act(const WeylElement& g, const TorusPoint& p);
std::vector<TorusPoint> d12_orbit(const TorusPoint& p);
TorusPoint orbit_representative(const TorusPoint& p);

// Angles of the weights of the 7- and 14-dimensional representations at p.
std::vector<Rational> weights7(const TorusPoint& p);
std::vector<Rational> weights14(const TorusPoint& p);

Cyclotomic phi1(const TorusPoint& p);
Cyclotomic phi2(const TorusPoint& p);
Cyclotomic j2(const TorusPoint& p);
Cyclotomic kdens(const TorusPoint& p);

Cyclotomic domain_p1(const Cyclotomic& x, const Cyclotomic& y);
Cyclotomic domain_p2(const Cyclotomic& x, const Cyclotomic& y);
// Second factor as printed, x^2 + 2x - 7 - 4y; it has the opposite sign.
Cyclotomic domain_p2_printed(const Cyclotomic& x, const Cyclotomic& y);
bool domain_contains(const Cyclotomic& x, const Cyclotomic& y);

double phi1_float(double theta1, double theta2);
double phi2_float(double theta1, double theta2);
double j2_float(double theta1, double theta2);
double kdens_float(double theta1, double theta2);

struct Preimage {
  double theta1 = 0;
  double theta2 = 0;
  int branch1 = 0;
  int branch2 = 0;
  bool flipped = false;  // second angle taken with negative sign
  double error = 0;
};

// Floating-point inverse of (phi1, phi2); throws Error when no branch closes.
Preimage torus_preimage(double x, double y, double tolerance = 1e-9);

}  // namespace g2s
