#include "g2spectra/cyclotomic.hpp"

#include "g2spectra/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <unordered_map>
#include <utility>

namespace g2s {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
          s.end());
  auto bad = [&] { return DataError("malformed rational '" + std::string(text) + "'"); };
  if (s.empty()) throw bad();
  std::size_t slash = s.find('/');
  auto digits_ok = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!digits_ok(num) || !digits_ok(den) || den[0] == '-' || den[0] == '+') throw bad();
  mpz_class n(num), d(den);
  if (d == 0) throw DivisionByZero();
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

long euler_phi(long n) {
  long result = n;
  for (long p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> ps;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

namespace {

long normalized_conductor(long n) { return n % 4 == 2 ? n / 2 : n; }

long lcm_checked(long a, long b) {
  long l = std::lcm(a, b);
  if (l > kMaxConductor) throw ConductorTooLarge(l);
  return l;
}

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

struct FieldInfo {
  long n = 1;
  long phi = 1;
  std::vector<long> poly;  // cyclotomic polynomial, monic, length phi + 1
  std::vector<long> primes;
};

std::vector<long> cyclotomic_polynomial(long n) {
  std::vector<long> ps = prime_factors(n);
  long rad = 1;
  for (long p : ps) rad *= p;
  // Product over divisors d of rad of (x^d - 1)^mu(rad/d).
  std::vector<long> up, down;
  std::size_t k = ps.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    long d = 1;
    int bits = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::size_t{1} << i)) {
        d *= ps[i];
        ++bits;
      }
    }
    // mu(rad/d) = (-1)^(k - bits)
    if ((k - bits) % 2 == 0) up.push_back(d);
    else down.push_back(d);
  }
  std::vector<long> p{1};
  for (long d : up) {
    std::vector<long> q(p.size() + d, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i + d] += p[i];
      q[i] -= p[i];
    }
    p = std::move(q);
  }
  for (long d : down) {
    // exact division by x^d - 1
    std::size_t deg = p.size() - 1;
    std::vector<long> q(deg - d + 1, 0);
    std::vector<long> r = p;
    for (std::size_t i = deg; i >= static_cast<std::size_t>(d); --i) {
      long c = r[i];
      q[i - d] = c;
      r[i] -= c;
      r[i - d] += c;
      if (i == static_cast<std::size_t>(d)) break;
    }
    p = std::move(q);
  }
  long scale = n / rad;
  if (scale == 1) return p;
  std::vector<long> out((p.size() - 1) * scale + 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i) out[i * scale] = p[i];
  return out;
}

const FieldInfo& field(long n) {
  thread_local std::unordered_map<long, FieldInfo> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n > kMaxConductor) throw ConductorTooLarge(n);
  FieldInfo f;
  f.n = n;
  f.phi = euler_phi(n);
  f.poly = cyclotomic_polynomial(n);
  f.primes = prime_factors(n);
  return cache.emplace(n, std::move(f)).first->second;
}

void reduce(std::vector<Rational>& poly, const FieldInfo& f) {
  const long phi = f.phi;
  for (long k = static_cast<long>(poly.size()) - 1; k >= phi; --k) {
    if (sgn(poly[k]) == 0) continue;
    Rational c = poly[k];
    for (long j = 0; j < phi; ++j) {
      long a = f.poly[j];
      if (a != 0) poly[k - phi + j] -= c * a;
    }
    poly[k] = 0;
  }
  poly.resize(phi);
}

bool all_zero(const std::vector<Rational>& v, std::size_t from = 0) {
  for (std::size_t i = from; i < v.size(); ++i)
    if (sgn(v[i]) != 0) return false;
  return true;
}

std::vector<Rational> apply_galois(const std::vector<Rational>& c, long n, long k) {
  const FieldInfo& f = field(n);
  std::vector<Rational> poly(n);
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (sgn(c[j]) == 0) continue;
    poly[mod(static_cast<long>(j) * k, n)] += c[j];
  }
  reduce(poly, f);
  return poly;
}

long primitive_root(long p) {
  std::vector<long> qs = prime_factors(p - 1);
  for (long g = 2; g < p; ++g) {
    bool ok = true;
    for (long q : qs) {
      long e = (p - 1) / q, r = 1, b = g % p;
      while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
      }
      if (r == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 1;
}

long inverse_mod(long a, long m) {
  long t = 0, nt = 1, r = m, nr = mod(a, m);
  while (nr) {
    long q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  return mod(t, m);
}

// Generator of the kernel of (Z/n)^* -> (Z/m)^*, m = n/p.
long descent_generator(long n, long p) {
  long m = n / p;
  if (m % p == 0) return 1 + m;
  long g = primitive_root(p);
  long t = mod((g - 1) * inverse_mod(m % p, p), p);
  return 1 + m * t;
}

struct Descent {
  std::vector<long> rows;
  std::vector<std::vector<Rational>> inv;
};

std::vector<Rational> embed_power(long n, long m, long j) {
  const FieldInfo& f = field(n);
  std::vector<Rational> poly(std::max<long>(f.phi, j * (n / m) + 1));
  poly[j * (n / m)] = 1;
  reduce(poly, f);
  return poly;
}

const Descent& descent(long n, long m) {
  thread_local std::map<std::pair<long, long>, Descent> cache;
  auto key = std::make_pair(n, m);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const long pn = field(n).phi, pm = field(m).phi;
  std::vector<std::vector<Rational>> cols;
  for (long j = 0; j < pm; ++j) cols.push_back(embed_power(n, m, j));
  // Pick pm independent rows of the pn x pm embedding matrix.
  std::vector<std::vector<Rational>> basis;
  std::vector<long> pivots;
  std::vector<long> rows;
  for (long r = 0; r < pn && static_cast<long>(rows.size()) < pm; ++r) {
    std::vector<Rational> row(pm);
    for (long j = 0; j < pm; ++j) row[j] = cols[j][r];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      long pc = pivots[b];
      if (sgn(row[pc]) != 0) {
        Rational f = row[pc] / basis[b][pc];
        for (long j = 0; j < pm; ++j) row[j] -= f * basis[b][j];
      }
    }
    long pc = -1;
    for (long j = 0; j < pm; ++j)
      if (sgn(row[j]) != 0) {
        pc = j;
        break;
      }
    if (pc < 0) continue;
    basis.push_back(row);
    pivots.push_back(pc);
    rows.push_back(r);
  }
  // Invert the square submatrix.
  std::vector<std::vector<Rational>> a(pm, std::vector<Rational>(2 * pm));
  for (long i = 0; i < pm; ++i) {
    for (long j = 0; j < pm; ++j) a[i][j] = cols[j][rows[i]];
    a[i][pm + i] = 1;
  }
  for (long c = 0; c < pm; ++c) {
    long piv = c;
    while (sgn(a[piv][c]) == 0) ++piv;
    std::swap(a[piv], a[c]);
    Rational d = a[c][c];
    for (auto& x : a[c]) x /= d;
    for (long i = 0; i < pm; ++i) {
      if (i == c || sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c];
      for (long j = 0; j < 2 * pm; ++j) a[i][j] -= f * a[c][j];
    }
  }
  Descent d;
  d.rows = rows;
  d.inv.assign(pm, std::vector<Rational>(pm));
  for (long i = 0; i < pm; ++i)
    for (long j = 0; j < pm; ++j) d.inv[i][j] = a[i][pm + j];
  return cache.emplace(key, std::move(d)).first->second;
}

}  // namespace

Cyclotomic::Cyclotomic() : n_(1), c_{Rational(0)} {}
Cyclotomic::Cyclotomic(long value) : n_(1), c_{Rational(value)} {}
Cyclotomic::Cyclotomic(const Rational& value) : n_(1), c_{value} { c_[0].canonicalize(); }
Cyclotomic::Cyclotomic(long n, std::vector<Rational> c) : n_(n), c_(std::move(c)) { normalize(); }

void Cyclotomic::normalize() {
  for (;;) {
    if (n_ == 1 || all_zero(c_, 1)) {
      Rational c0 = c_.empty() ? Rational(0) : c_[0];
      n_ = 1;
      c_.assign(1, c0);
      return;
    }
    bool descended = false;
    for (long p : field(n_).primes) {
      long m = normalized_conductor(n_ / p);
      if (m == n_) continue;
      long k = descent_generator(n_, p);
      if (apply_galois(c_, n_, k) != c_) continue;
      const Descent& d = descent(n_, m);
      long pm = field(m).phi;
      std::vector<Rational> b(pm);
      for (long i = 0; i < pm; ++i)
        for (long j = 0; j < pm; ++j)
          if (sgn(d.inv[i][j]) != 0) b[i] += d.inv[i][j] * c_[d.rows[j]];
      n_ = m;
      c_ = std::move(b);
      descended = true;
      break;
    }
    if (!descended) return;
  }
}

Cyclotomic Cyclotomic::lift(long n) const {
  if (n == n_) return *this;
  const FieldInfo& f = field(n);
  long step = n / n_;
  std::vector<Rational> poly(std::max<long>(f.phi, (static_cast<long>(c_.size()) - 1) * step + 1));
  for (std::size_t j = 0; j < c_.size(); ++j) poly[j * step] = c_[j];
  reduce(poly, f);
  Cyclotomic r;
  r.n_ = n;
  r.c_ = std::move(poly);
  return r;
}

Cyclotomic Cyclotomic::root_of_unity(long num, long den) {
  if (den < 1) throw DataError("root_of_unity: denominator must be positive");
  return from_exponents(den, {{mod(num, den), Rational(1)}});
}

Cyclotomic Cyclotomic::from_exponents(long n, const std::map<long, Rational>& coeff) {
  if (n < 1) throw DataError("from_exponents: order must be positive");
  std::map<long, Rational> cs;
  long nn = n;
  auto canon = [](Rational c) {
    c.canonicalize();
    return c;
  };
  if (n % 4 == 2) {
    // z_n^k = z_(n/2)^(k/2) for even k, and -z_(n/2)^((k + n/2)/2) for odd k.
    nn = n / 2;
    for (const auto& [k, c] : coeff) {
      long e = mod(k, n);
      if (e % 2 == 0) cs[e / 2] += canon(c);
      else cs[mod((e + nn) / 2, nn)] -= canon(c);
    }
  } else {
    for (const auto& [k, c] : coeff) cs[mod(k, n)] += canon(c);
  }
  if (nn > kMaxConductor) throw ConductorTooLarge(nn);
  const FieldInfo& f = field(nn);
  std::vector<Rational> poly(std::max(nn, f.phi));
  for (const auto& [k, c] : cs) poly[k] += c;
  reduce(poly, f);
  return Cyclotomic(nn, std::move(poly));
}

Cyclotomic Cyclotomic::from_counts(long n, const std::vector<int>& counts) {
  std::map<long, Rational> m;
  for (std::size_t k = 0; k < counts.size(); ++k)
    if (counts[k] != 0) m[static_cast<long>(k)] = counts[k];
  return from_exponents(n, m);
}

bool Cyclotomic::is_zero() const { return n_ == 1 && sgn(c_[0]) == 0; }

bool Cyclotomic::is_real() const { return conj() == *this; }

std::optional<Rational> Cyclotomic::as_rational() const {
  if (n_ == 1) return c_[0];
  return std::nullopt;
}

std::complex<double> Cyclotomic::to_complex() const {
  long double re = 0, im = 0;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (sgn(c_[j]) == 0) continue;
    long double a = 2 * std::numbers::pi_v<long double> * static_cast<long double>(j) /
                    static_cast<long double>(n_);
    long double c = c_[j].get_d();
    re += c * std::cos(a);
    im += c * std::sin(a);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

int Cyclotomic::sign() const {
  if (auto q = as_rational()) return sgn(*q);
  if (!is_real()) throw NotReal();
  double v = to_complex().real();
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::galois(long k) const {
  if (n_ == 1) return *this;
  if (std::gcd(mod(k, n_), n_) != 1) throw DataError("galois: exponent not coprime to conductor");
  Cyclotomic r;
  r.n_ = n_;
  r.c_ = apply_galois(c_, n_, k);
  return r;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (n_ == 1) return Cyclotomic(Rational(1) / c_[0]);
  const FieldInfo& f = field(n_);
  const long phi = f.phi;
  // Columns: this * z^j reduced.
  std::vector<std::vector<Rational>> a(phi, std::vector<Rational>(phi + 1));
  for (long j = 0; j < phi; ++j) {
    std::vector<Rational> poly(phi + j);
    for (long i = 0; i < phi; ++i) poly[i + j] = c_[i];
    reduce(poly, f);
    for (long i = 0; i < phi; ++i) a[i][j] = poly[i];
  }
  a[0][phi] = 1;
  for (long c = 0; c < phi; ++c) {
    long piv = c;
    while (piv < phi && sgn(a[piv][c]) == 0) ++piv;
    if (piv == phi) throw DivisionByZero();
    std::swap(a[piv], a[c]);
    Rational d = a[c][c];
    for (auto& x : a[c]) x /= d;
    for (long i = 0; i < phi; ++i) {
      if (i == c || sgn(a[i][c]) == 0) continue;
      Rational m = a[i][c];
      for (long j = c; j <= phi; ++j) a[i][j] -= m * a[c][j];
    }
  }
  std::vector<Rational> out(phi);
  for (long i = 0; i < phi; ++i) out[i] = a[i][phi];
  return Cyclotomic(n_, std::move(out));
}

Cyclotomic Cyclotomic::pow(unsigned e) const {
  Cyclotomic result(1L), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

std::string Cyclotomic::str() const {
  if (n_ == 1) return to_string(c_[0]);
  std::string out;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    const Rational& c = c_[j];
    if (sgn(c) == 0) continue;
    std::string term;
    if (j == 0) {
      term = to_string(c);
    } else {
      std::string root = "E(" + std::to_string(n_) + ")";
      if (j > 1) root += "^" + std::to_string(j);
      if (c == 1) term = root;
      else if (c == -1) term = "-" + root;
      else term = to_string(c) + "*" + root;
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& b) {
  if (b.n_ == 1) {
    c_[0] += b.c_[0];
    return *this;
  }
  long n = lcm_checked(n_, b.n_);
  Cyclotomic a = lift(n);
  Cyclotomic bb = b.lift(n);
  for (std::size_t j = 0; j < a.c_.size(); ++j) a.c_[j] += bb.c_[j];
  a.normalize();
  return *this = std::move(a);
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& b) { return *this += -b; }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ == 1 || b.n_ == 1) {
    const Cyclotomic& s = a.n_ == 1 ? a : b;
    const Cyclotomic& v = a.n_ == 1 ? b : a;
    if (sgn(s.c_[0]) == 0) return Cyclotomic();
    Cyclotomic r = v;
    for (auto& c : r.c_) c *= s.c_[0];
    return r;
  }
  long n = lcm_checked(a.n_, b.n_);
  Cyclotomic x = a.lift(n), y = b.lift(n);
  const FieldInfo& f = field(n);
  std::vector<Rational> poly(2 * f.phi - 1);
  for (long i = 0; i < f.phi; ++i) {
    if (sgn(x.c_[i]) == 0) continue;
    for (long j = 0; j < f.phi; ++j) {
      if (sgn(y.c_[j]) == 0) continue;
      poly[i + j] += x.c_[i] * y.c_[j];
    }
  }
  reduce(poly, f);
  return Cyclotomic(n, std::move(poly));
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& b) { return *this = *this * b; }

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
  if (b.is_zero()) throw DivisionByZero();
  return a * b.inverse();
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& b) { return *this = *this / b; }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  for (std::size_t j = 0; j < a.c_.size(); ++j) {
    int c = cmp(a.c_[j], b.c_[j]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::size_t Cyclotomic::hash() const {
  std::size_t h = std::hash<long>()(n_);
  for (const auto& c : c_) {
    std::size_t x = mpz_get_ui(c.get_num_mpz_t()) * 31 + mpz_get_ui(c.get_den_mpz_t());
    if (sgn(c) < 0) x = ~x;
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Cyclotomic two_cos(const Rational& r) {
  long num = r.get_num().get_si(), den = r.get_den().get_si();
  return Cyclotomic::root_of_unity(num, den) + Cyclotomic::root_of_unity(-num, den);
}

Cyclotomic two_sin(const Rational& r) {
  long num = r.get_num().get_si(), den = r.get_den().get_si();
  Cyclotomic d = Cyclotomic::root_of_unity(num, den) - Cyclotomic::root_of_unity(-num, den);
  return d * -Cyclotomic::root_of_unity(1, 4);
}

namespace {

class ExprParser {
public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  Cyclotomic parse() {
    Cyclotomic v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("expression", 1, static_cast<int>(pos_) + 1, msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char ch) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool eat_word(std::string_view w) {
    skip();
    if (s_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  void expect(char ch) {
    if (!eat(ch)) fail(std::string("expected '") + ch + "'");
  }
  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 12) fail("integer too large");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  Cyclotomic expr() {
    Cyclotomic acc;
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Cyclotomic t = term();
    acc = neg ? -t : t;
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else return acc;
    }
  }
  Cyclotomic term() {
    Cyclotomic acc = factor();
    for (;;) {
      if (eat('*')) {
        acc *= factor();
      } else if (eat('/')) {
        std::size_t at = pos_;
        Cyclotomic d = factor();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        acc /= d;
      } else {
        return acc;
      }
    }
  }
  Cyclotomic factor() {
    Cyclotomic base = primary();
    if (eat('^')) {
      bool neg = eat('-');
      long e = integer();
      base = base.pow(static_cast<unsigned>(e));
      if (neg) {
        if (base.is_zero()) fail("division by zero");
        base = base.inverse();
      }
    }
    return base;
  }
  Cyclotomic primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char ch = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) return Cyclotomic(Rational(integer()));
    if (eat('(')) {
      Cyclotomic v = expr();
      expect(')');
      return v;
    }
    if (eat_word("conj")) {
      expect('(');
      Cyclotomic v = expr();
      expect(')');
      return v.conj();
    }
    if (eat('E')) {
      expect('(');
      long n = integer();
      if (n < 1) fail("E(n) needs n >= 1");
      if (n > kMaxConductor) fail("conductor exceeds the cap of 100000");
      expect(')');
      return Cyclotomic::root_of_unity(1, n);
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Cyclotomic parse_cyclotomic(std::string_view text) { return ExprParser(text).parse(); }

}  // namespace g2s
