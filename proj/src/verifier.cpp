#include "g2spectra/verifier.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace g2s {

namespace {

std::string fmt(double d) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return buf;
}

double real_part(const Cyclotomic& c) { return c.to_complex().real(); }

VerificationReport header(const CharacterTable& t, const Embedding& e, const JointMeasure& mu) {
  VerificationReport r;
  r.group = t.group_name;
  r.embedding = e.name;
  r.measure = mu.name;
  r.exact = mu.exact;
  r.notes = mu.notes;
  return r;
}

void merge(VerificationReport& into, const VerificationReport& from) {
  into.max = from.max;
  into.moments = from.moments;
  into.failures.insert(into.failures.end(), from.failures.begin(), from.failures.end());
}

}  // namespace

std::string exact_cell(const Cyclotomic& v) {
  if (auto q = v.as_rational()) return to_string(*q);
  return v.str();
}

VerificationReport verify_moments(const CharacterTable& t, const Embedding& e, const JointMeasure& mu,
                                  long max) {
  VerificationReport r = header(t, e, mu);
  r.max = max;
  ClassFunction y = character_values(t, e.rho2);
  MomentGrid conj = conjugacy_moments(t, e.x, y, max);
  MomentGrid meas;
  if (mu.exact) meas = measure_moments(mu, max);
  for (long m = 0; m <= max; ++m)
    for (long n = 0; n <= max; ++n) {
      MomentRow row;
      row.m = m;
      row.n = n;
      row.conjugacy = conj[m][n];
      row.conjugacy_float = real_part(conj[m][n]);
      if (mu.exact) {
        row.measure = meas[m][n];
        row.measure_float = real_part(meas[m][n]);
        row.ok = row.measure == row.conjugacy;
      } else {
        row.measure_float = measure_moment_float(mu, m, n);
        double scale = std::max(1.0, std::abs(row.conjugacy_float));
        row.ok = std::abs(row.measure_float - row.conjugacy_float) <= kFloatTolerance * scale;
      }
      if (!row.ok) {
        std::string got = mu.exact ? exact_cell(row.measure) : fmt(row.measure_float);
        r.failures.push_back("moment (" + std::to_string(m) + "," + std::to_string(n) +
                             "): conjugacy " + exact_cell(row.conjugacy) + ", measure " + got);
      }
      r.moments.push_back(row);
    }
  return r;
}

VerificationReport verify_masses(const CharacterTable& t, const Embedding& e, const JointMeasure& mu) {
  VerificationReport r = header(t, e, mu);
  std::map<TorusPoint, OrbitRow> orbits;
  for (std::size_t c = 0; c < t.classes.size(); ++c) {
    const auto& p = e.points[c];
    auto& row = orbits[p];
    row.representative = p;
    row.classes.push_back(t.classes[c].name);
    row.expected += Cyclotomic(Rational(t.classes[c].size, t.order));
  }
  std::set<TorusPoint> covered;
  for (auto& [rep, row] : orbits) {
    auto orbit = d12_orbit(rep);
    row.orbit_size = static_cast<long>(orbit.size());
    covered.insert(orbit.begin(), orbit.end());
    row.expected_float = real_part(row.expected);
  }

  auto orbit_label = [](const OrbitRow& row) {
    std::string s = "orbit of " + row.representative.str() + " [";
    for (std::size_t i = 0; i < row.classes.size(); ++i) s += (i ? " " : "") + row.classes[i];
    return s + "]";
  };

  if (mu.exact) {
    MassMap mass = pointwise_mass(mu);
    for (auto& [rep, row] : orbits) {
      Cyclotomic first;
      bool uniform = true;
      bool have = false;
      for (const auto& p : d12_orbit(rep)) {
        auto it = mass.find(p);
        Cyclotomic v = it == mass.end() ? Cyclotomic(0L) : it->second;
        row.measure += v;
        if (have && v != first) uniform = false;
        first = have ? first : v;
        have = true;
      }
      row.measure_float = real_part(row.measure);
      row.ok = row.measure == row.expected && uniform;
      if (row.measure != row.expected)
        r.failures.push_back(orbit_label(row) + ": expected " + exact_cell(row.expected) +
                             ", measure " + exact_cell(row.measure));
      else if (!uniform)
        r.failures.push_back(orbit_label(row) + ": mass is not constant along the orbit");
    }
    std::map<TorusPoint, OrbitRow> stray;
    for (const auto& [p, v] : mass) {
      if (covered.count(p) || v.is_zero()) continue;
      auto rep = orbit_representative(p);
      auto& row = stray[rep];
      row.representative = rep;
      row.orbit_size = static_cast<long>(d12_orbit(rep).size());
      row.measure += v;
      row.measure_float = real_part(row.measure);
    }
    for (auto& [rep, row] : stray) {
      if (row.measure.is_zero()) continue;
      row.ok = false;
      r.failures.push_back("orbit of " + rep.str() + " carries mass " + exact_cell(row.measure) +
                           " but no class maps there");
    }
    for (auto& [rep, row] : orbits) r.orbits.push_back(row);
    for (auto& [rep, row] : stray)
      if (!row.ok) r.orbits.push_back(row);
  } else {
    auto mass = pointwise_mass_float(mu);
    for (auto& [rep, row] : orbits) {
      for (const auto& p : d12_orbit(rep))
        if (auto it = mass.find(p); it != mass.end()) row.measure_float += it->second;
      row.ok = std::abs(row.measure_float - row.expected_float) <= kFloatTolerance;
      if (!row.ok)
        r.failures.push_back(orbit_label(row) + ": expected " + exact_cell(row.expected) +
                             ", measure " + fmt(row.measure_float));
      r.orbits.push_back(row);
    }
    std::map<TorusPoint, double> stray;
    for (const auto& [p, v] : mass)
      if (!covered.count(p)) stray[orbit_representative(p)] += v;
    for (const auto& [rep, v] : stray)
      if (std::abs(v) > kFloatTolerance) {
        OrbitRow row;
        row.representative = rep;
        row.orbit_size = static_cast<long>(d12_orbit(rep).size());
        row.measure_float = v;
        row.ok = false;
        r.orbits.push_back(row);
        r.failures.push_back("orbit of " + rep.str() + " carries mass " + fmt(v) +
                             " but no class maps there");
      }
  }
  return r;
}

VerificationReport verify(const CharacterTable& t, const Embedding& e, const JointMeasure& mu, long max) {
  VerificationReport r = verify_masses(t, e, mu);
  merge(r, verify_moments(t, e, mu, max));
  return r;
}

std::vector<std::string> printed_differences(const std::string& group, const std::string& embedding) {
  auto fixed = theorem_measure(group, embedding, false);
  auto printed = theorem_measure(group, embedding, true);
  std::vector<std::string> out;
  auto describe = [](const MeasureTerm& t) {
    return exact_cell(t.coefficient) + " * (" + t.density.str() + ") " + t.support.str();
  };
  auto label = [](const SupportSpec& s) {
    return (s.kind == SupportSpec::Kind::kAtom ? "Dirac term " : "") + s.str();
  };
  std::vector<bool> used(fixed.terms.size(), false);
  for (const auto& p : printed.terms) {
    bool found = false;
    for (std::size_t i = 0; i < fixed.terms.size() && !found; ++i) {
      const auto& f = fixed.terms[i];
      if (used[i] || !(f.support == p.support)) continue;
      used[i] = found = true;
      if (f.coefficient != p.coefficient)
        out.push_back(label(p.support) + ": printed coefficient " + exact_cell(p.coefficient) +
                      ", corrected " + exact_cell(f.coefficient));
      if (!(f.density == p.density))
        out.push_back(label(p.support) + ": printed density " + p.density.str() + ", corrected " +
                      f.density.str());
    }
    if (!found) out.push_back("printed term " + describe(p) + " has no corrected counterpart");
  }
  for (std::size_t i = 0; i < fixed.terms.size(); ++i)
    if (!used[i]) out.push_back("missing term " + describe(fixed.terms[i]));
  return out;
}

std::string format_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "group: " << r.group << "\n";
  os << "embedding: " << r.embedding << "\n";
  os << "measure: " << r.measure << (r.exact ? "" : " (float mode)") << "\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  if (!r.orbits.empty()) {
    os << "class orbits:\n";
    for (const auto& o : r.orbits) {
      os << "  " << (o.ok ? "ok  " : "FAIL") << " " << o.representative.str() << " x" << o.orbit_size;
      if (!o.classes.empty()) {
        os << " [";
        for (std::size_t i = 0; i < o.classes.size(); ++i) os << (i ? " " : "") << o.classes[i];
        os << "]";
      }
      if (r.exact)
        os << " expected " << exact_cell(o.expected) << " measure " << exact_cell(o.measure) << "\n";
      else
        os << " expected " << fmt(o.expected_float) << " measure " << fmt(o.measure_float) << "\n";
    }
  }
  if (!r.moments.empty()) {
    long bad = 0;
    for (const auto& m : r.moments) bad += !m.ok;
    os << "moments 0 <= m,n <= " << r.max << ": " << (r.moments.size() - bad) << "/"
       << r.moments.size() << " agree\n";
  }
  for (const auto& f : r.failures) os << "failure: " << f << "\n";
  os << (r.ok() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string format_csv(const VerificationReport& r) {
  std::ostringstream os;
  os << "m,n,conjugacy,measure,diff,conjugacy_float,measure_float,diff_float\n";
  for (const auto& row : r.moments) {
    os << row.m << "," << row.n << "," << exact_cell(row.conjugacy) << ",";
    if (r.exact)
      os << exact_cell(row.measure) << "," << exact_cell(row.measure - row.conjugacy);
    else
      os << ",";
    os << "," << fmt(row.conjugacy_float) << "," << fmt(row.measure_float) << ","
       << fmt(row.measure_float - row.conjugacy_float) << "\n";
  }
  return os.str();
}

}  // namespace g2s
