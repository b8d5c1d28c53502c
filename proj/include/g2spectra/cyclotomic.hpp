#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace g2s {

using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

inline constexpr long kMaxConductor = 100000;

// Element of Q(zeta_N) stored in the power basis 1, z, ..., z^(phi(N)-1)
// modulo the N-th cyclotomic polynomial, at its minimal conductor.
// The conductor is never 2 mod 4.
class Cyclotomic {
public:
  Cyclotomic();
  Cyclotomic(long value);  // NOLINT
  Cyclotomic(const Rational& value);  // NOLINT

  // e^(2 pi i num/den)
  static Cyclotomic root_of_unity(long num, long den);
  // sum over k of coeff[k] * e^(2 pi i k/n)
  static Cyclotomic from_exponents(long n, const std::map<long, Rational>& coeff);
  static Cyclotomic from_counts(long n, const std::vector<int>& counts);

  long conductor() const { return n_; }
  const std::vector<Rational>& coefficients() const { return c_; }

  bool is_zero() const;
  bool is_real() const;
  std::optional<Rational> as_rational() const;
  std::complex<double> to_complex() const;
  // Sign of a real value; throws NotReal otherwise.
  int sign() const;

  Cyclotomic conj() const;
  // Galois automorphism z -> z^k, gcd(k, N) = 1.
  Cyclotomic galois(long k) const;
  Cyclotomic inverse() const;
  Cyclotomic pow(unsigned e) const;

  std::string str() const;

  Cyclotomic& operator+=(const Cyclotomic& b);
  Cyclotomic& operator-=(const Cyclotomic& b);
  Cyclotomic& operator*=(const Cyclotomic& b);
  Cyclotomic& operator/=(const Cyclotomic& b);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }
  // Structural total order, for use as a container key.
  friend bool operator<(const Cyclotomic& a, const Cyclotomic& b);

  std::size_t hash() const;

private:
  Cyclotomic(long n, std::vector<Rational> c);
  void normalize();
  Cyclotomic lift(long n) const;

  long n_ = 1;
  std::vector<Rational> c_;
};

// Exact 2cos(2 pi r) and 2 sin(2 pi r) for rational r.
Cyclotomic two_cos(const Rational& r);
Cyclotomic two_sin(const Rational& r);

// Parses `E(n)^k` literals with rational coefficients, `conj(...)`,
// parentheses, `*` and `/`.
Cyclotomic parse_cyclotomic(std::string_view text);

long euler_phi(long n);
std::vector<long> prime_factors(long n);

}  // namespace g2s
