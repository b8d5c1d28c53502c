#include "g2spectra/measure.hpp"

#include "g2spectra/error.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

namespace g2s {

SupportSpec SupportSpec::product(long m, long n) {
  if (m < 1 || n < 1) throw Error("product support needs positive orders");
  SupportSpec s;
  s.kind = Kind::kProduct;
  s.m = m;
  s.n = n;
  return s;
}

SupportSpec SupportSpec::cw(long n) {
  if (n < 1) throw Error("cw support needs n >= 1");
  SupportSpec s;
  s.kind = Kind::kCW;
  s.n = n;
  return s;
}

SupportSpec SupportSpec::double_paren(const Rational& n) {
  if (n < 2) throw Error("dparen support needs n >= 2, got " + to_string(n));
  SupportSpec s;
  s.kind = Kind::kDoubleParen;
  s.param = n;
  return s;
}

SupportSpec SupportSpec::nk(const Rational& n, const Rational& k) {
  if (n <= 2) throw Error("nk support needs n > 2, got " + to_string(n));
  if (k < 0 || k * n > 1) throw Error("nk support needs 0 <= k <= 1/n, got " + to_string(k));
  SupportSpec s;
  s.kind = Kind::kNK;
  s.param = n;
  s.k = k;
  return s;
}

SupportSpec SupportSpec::atom(const TorusPoint& p) {
  SupportSpec s;
  s.kind = Kind::kAtom;
  s.point = p;
  return s;
}

std::string SupportSpec::str() const {
  switch (kind) {
    case Kind::kProduct: return "product(" + std::to_string(m) + "," + std::to_string(n) + ")";
    case Kind::kCW: return "cw(" + std::to_string(n) + ")";
    case Kind::kDoubleParen: return "dparen(" + to_string(param) + ")";
    case Kind::kNK: return "nk(" + to_string(param) + "," + to_string(k) + ")";
    case Kind::kAtom:
      return "atom(" + to_string(point.theta1()) + "," + to_string(point.theta2()) + ")";
  }
  return "?";
}

std::vector<TorusPoint> s3_orbit_list(const TorusPoint& p) {
  std::vector<TorusPoint> out;
  for (const auto& g : s3()) out.push_back(act(g, p));
  return out;
}

WeightedPoints support_points(const SupportSpec& s) {
  WeightedPoints out;
  using K = SupportSpec::Kind;
  const Rational third(1, 3);
  auto through_s3 = [&](const std::vector<TorusPoint>& base, const Rational& w) {
    for (const auto& b : base)
      for (const auto& q : s3_orbit_list(b)) out.emplace_back(q, w);
  };
  switch (s.kind) {
    case K::kProduct:
      for (long i = 0; i < s.m; ++i)
        for (long j = 0; j < s.n; ++j)
          out.emplace_back(TorusPoint(Rational(i, s.m), Rational(j, s.n)), Rational(1, s.m * s.n));
      break;
    case K::kCW:
      for (long a = 0; a < 3 * s.n; ++a)
        for (long b = 0; b < 3 * s.n; ++b)
          if ((a + b) % 3 == 0)
            out.emplace_back(TorusPoint(Rational(a, 3 * s.n), Rational(b, 3 * s.n)),
                             Rational(1, 3 * s.n * s.n));
      break;
    case K::kDoubleParen: {
      Rational t = 1 / s.param;
      through_s3({TorusPoint(t, t), TorusPoint(-third - t, third), TorusPoint(third, -third - t)},
                 Rational(1, 18));
      break;
    }
    case K::kNK: {
      Rational t = 1 / s.param, k = s.k;
      through_s3({TorusPoint(t + k, t), TorusPoint(t, t + k), TorusPoint(-third - t, third + k),
                  TorusPoint(third + k, -third - t), TorusPoint(-third - t - k, third - k),
                  TorusPoint(third - k, -third - t - k)},
                 Rational(1, 36));
      break;
    }
    case K::kAtom:
      for (const auto& g : d12()) out.emplace_back(act(g, s.point), Rational(1, 12));
      break;
  }
  for (auto& [p, w] : out) w.canonicalize();
  return out;
}

Cyclotomic Density::at(const TorusPoint& p) const {
  Cyclotomic v(c0);
  if (c1 != 0) v += Cyclotomic(c1) * j2(p);
  if (c2 != 0) v += Cyclotomic(c2) * kdens(p);
  return v;
}

double Density::at_float(double t1, double t2) const {
  double v = c0.get_d();
  if (c1 != 0) v += c1.get_d() * j2_float(t1, t2);
  if (c2 != 0) v += c2.get_d() * kdens_float(t1, t2);
  return v;
}

std::string Density::str() const { return to_string(c0) + "," + to_string(c1) + "," + to_string(c2); }

namespace {

Rational atom_scale(const MeasureTerm& t) {
  return t.support.kind == SupportSpec::Kind::kAtom ? Rational(12) : Rational(1);
}

}  // namespace

MassMap pointwise_mass(const JointMeasure& mu) {
  if (!mu.exact) throw Error("measure '" + mu.name + "' has inexact coefficients; use float mode");
  MassMap out;
  for (const auto& t : mu.terms) {
    Rational scale = atom_scale(t);
    for (const auto& [p, w] : support_points(t.support)) {
      Cyclotomic v = t.coefficient * Cyclotomic(Rational(w * scale)) * t.density.at(p);
      auto it = out.find(p);
      if (it == out.end())
        out.emplace(p, v);
      else
        it->second += v;
    }
  }
  return out;
}

std::map<TorusPoint, double> pointwise_mass_float(const JointMeasure& mu) {
  std::map<TorusPoint, double> out;
  for (const auto& t : mu.terms) {
    double scale = atom_scale(t).get_d();
    for (const auto& [p, w] : support_points(t.support))
      out[p] += t.coefficient_float * w.get_d() * scale *
                t.density.at_float(p.theta1().get_d(), p.theta2().get_d());
  }
  return out;
}

Cyclotomic total_mass(const JointMeasure& mu) {
  Cyclotomic s(0L);
  for (const auto& [p, v] : pointwise_mass(mu)) s += v;
  return s;
}

MomentGrid measure_moments(const JointMeasure& mu, long max) {
  MomentGrid g(max + 1, std::vector<Cyclotomic>(max + 1, Cyclotomic(0L)));
  for (const auto& [p, mass] : pointwise_mass(mu)) {
    if (mass.is_zero()) continue;
    Cyclotomic x = phi1(p), y = phi2(p);
    Cyclotomic xm = mass;
    for (long m = 0; m <= max; ++m) {
      Cyclotomic v = xm;
      for (long n = 0; n <= max; ++n) {
        g[m][n] += v;
        v *= y;
      }
      xm *= x;
    }
  }
  return g;
}

Cyclotomic measure_moment(const JointMeasure& mu, long m, long n) {
  Cyclotomic s(0L);
  for (const auto& [p, mass] : pointwise_mass(mu))
    if (!mass.is_zero()) s += mass * phi1(p).pow(m) * phi2(p).pow(n);
  return s;
}

double measure_moment_float(const JointMeasure& mu, long m, long n) {
  double s = 0;
  for (const auto& [p, mass] : pointwise_mass_float(mu)) {
    double a = p.theta1().get_d(), b = p.theta2().get_d();
    s += mass * std::pow(phi1_float(a, b), m) * std::pow(phi2_float(a, b), n);
  }
  return s;
}

Cyclotomic conjugacy_moment(const CharacterTable& t, const ClassFunction& x, const ClassFunction& y,
                            long m, long n) {
  if (x.size() != t.classes.size() || y.size() != t.classes.size())
    throw Error("conjugacy_moment: class function length does not match the class count");
  Cyclotomic s(0L);
  for (std::size_t c = 0; c < x.size(); ++c)
    s += Cyclotomic(Rational(t.classes[c].size, t.order)) * x[c].pow(m) * y[c].pow(n);
  return s;
}

MomentGrid conjugacy_moments(const CharacterTable& t, const ClassFunction& x, const ClassFunction& y,
                             long max) {
  MomentGrid g(max + 1, std::vector<Cyclotomic>(max + 1, Cyclotomic(0L)));
  for (long m = 0; m <= max; ++m)
    for (long n = 0; n <= max; ++n) g[m][n] = conjugacy_moment(t, x, y, m, n);
  return g;
}

namespace {

struct Field {
  std::string key;
  std::string value;
  std::size_t col;  // 0-based column of the value
};

std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ' && ch != '\t') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

SupportSpec parse_support(const std::string& v) {
  auto open = v.find('(');
  if (open == std::string::npos || v.back() != ')') throw Error("malformed support '" + v + "'");
  std::string kind = v.substr(0, open);
  auto args = split_args(v.substr(open + 1, v.size() - open - 2));
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      throw Error(kind + " takes " + std::to_string(n) + " argument" + (n > 1 ? "s" : ""));
  };
  auto integer = [](const std::string& a) {
    std::size_t pos = 0;
    long k = std::stol(a, &pos);
    if (pos != a.size()) throw Error("expected an integer, got '" + a + "'");
    return k;
  };
  if (kind == "product") {
    need(2);
    return SupportSpec::product(integer(args[0]), integer(args[1]));
  }
  if (kind == "cw") {
    need(1);
    return SupportSpec::cw(integer(args[0]));
  }
  if (kind == "dparen") {
    need(1);
    return SupportSpec::double_paren(parse_rational(args[0]));
  }
  if (kind == "nk") {
    need(2);
    return SupportSpec::nk(parse_rational(args[0]), parse_rational(args[1]));
  }
  if (kind == "atom") {
    need(2);
    return SupportSpec::atom(TorusPoint(parse_rational(args[0]), parse_rational(args[1])));
  }
  throw Error("unknown support kind '" + kind + "'");
}

std::optional<double> parse_double(const std::string& s) {
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  double d = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !std::isfinite(d)) return std::nullopt;
  return d;
}

}  // namespace

JointMeasure parse_measure(std::string_view text, const std::string& source) {
  JointMeasure mu;
  mu.name = source;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    auto fail = [&](std::size_t col, const std::string& msg) -> void {
      throw ParseError(source, lineno, static_cast<int>(col) + 1, msg);
    };
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    std::size_t end = line.find_first_of(" \t", pos);
    std::string kw = line.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    if (kw == "name") {
      std::size_t v = line.find_first_not_of(" \t", end);
      if (v == std::string::npos) fail(pos, "name needs a value");
      mu.name = line.substr(v);
      while (!mu.name.empty() && (mu.name.back() == ' ' || mu.name.back() == '\r')) mu.name.pop_back();
      continue;
    }
    if (kw != "term") fail(pos, "unknown directive '" + kw + "'");
    std::vector<Field> fields;
    pos = end;
    while (pos != std::string::npos) {
      pos = line.find_first_not_of(" \t\r", pos);
      if (pos == std::string::npos) break;
      auto eq = line.find('=', pos);
      if (eq == std::string::npos) fail(pos, "expected key=value");
      // support values may contain spaces inside parentheses
      std::size_t vend = eq + 1;
      int depth = 0;
      while (vend < line.size() && (depth > 0 || (line[vend] != ' ' && line[vend] != '\t'))) {
        if (line[vend] == '(') ++depth;
        if (line[vend] == ')') --depth;
        ++vend;
      }
      fields.push_back({line.substr(pos, eq - pos), line.substr(eq + 1, vend - eq - 1), eq + 1});
      pos = vend < line.size() ? vend : std::string::npos;
    }
    const char* order[] = {"coeff", "density", "support"};
    if (fields.size() != 3) fail(0, "a term needs coeff=, density= and support=");
    for (int i = 0; i < 3; ++i)
      if (fields[i].key != order[i]) fail(fields[i].col - fields[i].key.size() - 1,
                                          "expected '" + std::string(order[i]) + "='");
    MeasureTerm t;
    std::optional<Cyclotomic> exact_coeff;
    try {
      exact_coeff = parse_cyclotomic(fields[0].value);
    } catch (const Error&) {
    }
    if (exact_coeff) {
      if (!exact_coeff->is_real()) fail(fields[0].col, "coefficient must be real");
      t.coefficient = *exact_coeff;
      t.coefficient_float = t.coefficient.to_complex().real();
    } else {
      auto d = parse_double(fields[0].value);
      if (!d) fail(fields[0].col, "cannot read coefficient '" + fields[0].value + "'");
      t.coefficient = Cyclotomic(0L);
      t.coefficient_float = *d;
      mu.exact = false;
    }
    auto dens = split_args(fields[1].value);
    if (dens.size() != 3) fail(fields[1].col, "density needs three values c0,c1,c2");
    try {
      t.density = Density{parse_rational(dens[0]), parse_rational(dens[1]), parse_rational(dens[2])};
    } catch (const Error& e) {
      fail(fields[1].col, e.what());
    }
    try {
      t.support = parse_support(fields[2].value);
    } catch (const std::exception& e) {
      fail(fields[2].col, e.what());
    }
    mu.terms.push_back(std::move(t));
  }
  return mu;
}

std::string serialize(const JointMeasure& mu) {
  std::ostringstream os;
  if (!mu.name.empty()) os << "name " << mu.name << "\n";
  for (const auto& n : mu.notes) os << "# " << n << "\n";
  for (const auto& t : mu.terms) {
    os << "term coeff=";
    if (mu.exact) {
      os << t.coefficient.str();
    } else {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", t.coefficient_float);
      os << buf;
    }
    os << " density=" << t.density.str() << " support=" << t.support.str() << "\n";
  }
  return os.str();
}

}  // namespace g2s
