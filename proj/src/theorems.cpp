#include "g2spectra/error.hpp"
#include "g2spectra/measure.hpp"

namespace g2s {

namespace {

Rational q(long a, long b = 1) { return Rational(a, b); }

MeasureTerm term(const Cyclotomic& c, Density d, SupportSpec s) {
  MeasureTerm t;
  t.coefficient = c;
  t.coefficient_float = c.to_complex().real();
  t.density = d;
  t.support = s;
  return t;
}

const Density kOne{q(1), q(0), q(0)};
const Density kJ{q(0), q(1), q(0)};

using S = SupportSpec;

// K as literally stated is a quarter of the normalized K (K(0,1/4) = 16).
Rational k_scale(bool printed) { return printed ? q(1, 4) : q(1); }

JointMeasure psl27(bool first, bool printed) {
  JointMeasure mu;
  Rational ks = k_scale(printed);
  Density kprime = first ? Density{q(16), q(0), -ks} : Density{q(0), q(0), ks};
  mu.terms = {term(q(2, 21), kJ, S::product(7, 7)), term(q(1, 24), kprime, S::product(4, 4)),
              term(q(1, 2), kOne, S::product(3, 3)), term(q(-1, 28), kOne, S::product(1, 1)),
              term(q(-1, 6), kOne, S::cw(1))};
  if (!first && !printed) {
    mu.terms.push_back(term(q(1, 6), kOne, S::product(2, 2)));
    mu.notes.push_back("added (1/6) d2 x d2; without it the total mass is 5/6");
  }
  return mu;
}

JointMeasure pgl27(bool first, bool printed) {
  JointMeasure mu;
  Rational ks = k_scale(printed);
  Density kprime = first ? Density{q(16), q(0), -ks} : Density{q(0), q(0), ks};
  Rational kc = printed ? q(1, 24) : q(1, 48);
  Rational d2 = printed || first ? q(1, 9) : q(7, 36);
  TorusPoint atom(q(1, 8), first ? q(3, 8) : q(1, 2));
  mu.terms = {term(q(1, 21), kJ, S::product(7, 7)),  term(q(1, 18), kJ, S::product(6, 6)),
              term(kc, kprime, S::product(4, 4)),    term(q(1, 4), kOne, S::product(3, 3)),
              term(d2, kOne, S::product(2, 2)),      term(q(-23, 504), kOne, S::product(1, 1)),
              term(q(1, 48), kOne, S::atom(atom))};
  if (!printed) {
    mu.terms.push_back(term(q(-1, 12), kOne, S::cw(1)));
    mu.notes.push_back("K' coefficient 1/48 (printed 1/24)");
    mu.notes.push_back("added -(1/12) d^(1)");
    if (!first) mu.notes.push_back("d2 x d2 coefficient 7/36 (printed 1/9)");
  }
  return mu;
}

JointMeasure psl28(bool) {
  JointMeasure mu;
  Cyclotomic sixth(q(1, 6));
  mu.terms = {term(q(1, 7), kJ, S::product(7, 7)),
              term(q(1, 6), kOne, S::product(3, 3)),
              term(q(1, 6), kOne, S::product(2, 2)),
              term(q(-5, 126), kOne, S::product(1, 1)),
              term(q(-1, 18), kOne, S::cw(1)),
              term(sixth / psl28_a(3), kJ, S::double_paren(q(9))),
              term(sixth / psl28_a(1), kJ, S::double_paren(q(9, 2))),
              term(sixth / psl28_a(2), kJ, S::double_paren(q(9, 4)))};
  return mu;
}

JointMeasure psl213(bool printed) {
  JointMeasure mu;
  Rational c = printed ? q(7, 192) : q(1, 156);
  mu.terms = {term(q(1, 7), kJ, S::product(7, 7)),
              term(q(1, 18), kJ, S::product(6, 6)),
              term(q(1, 4), kOne, S::product(3, 3)),
              term(q(1, 9), kOne, S::product(2, 2)),
              term(q(-22, 819), kOne, S::product(1, 1)),
              term(q(-1, 12), kOne, S::cw(1)),
              term(c, kOne, S::atom(TorusPoint(q(1, 13), q(4, 13)))),
              term(c, kOne, S::atom(TorusPoint(q(2, 13), q(7, 13))))};
  if (!printed) mu.notes.push_back("Dirac coefficient 1/156 per copy (printed 7/192)");
  return mu;
}

JointMeasure pu33(bool printed) {
  JointMeasure mu;
  mu.terms = {term(q(2, 21), kJ, S::product(7, 7)),
              term(q(1, 144), Density{q(24), q(0), -k_scale(printed)}, S::product(4, 4)),
              term(q(1, 6), kOne, S::product(3, 3)),
              term(q(-1, 12), kOne, S::product(2, 2)),
              term(q(1, 168), kOne, S::product(1, 1)),
              term(q(1, 18), kJ, S::cw(4)),
              term(q(1, 6), kOne, S::cw(2)),
              term(q(-1, 12), kOne, S::cw(1)),
              term(q(1, 48), kOne, S::atom(TorusPoint(q(1, 8), q(1, 2))))};
  return mu;
}

JointMeasure g22(bool) {
  JointMeasure mu;
  mu.terms = {term(q(1, 12), kJ, S::product(8, 8)),   term(q(1, 21), kJ, S::product(7, 7)),
              term(q(1, 18), kJ, S::product(6, 6)),   term(q(1, 12), kOne, S::product(4, 4)),
              term(q(1, 12), kOne, S::product(3, 3)), term(q(-1, 72), kOne, S::product(2, 2)),
              term(q(-1, 252), kOne, S::product(1, 1)), term(q(1, 12), kJ, S::cw(4)),
              term(q(1, 12), kOne, S::cw(2)),         term(q(-1, 24), kOne, S::cw(1))};
  return mu;
}

}  // namespace

Cyclotomic psl28_a(int i) {
  Cyclotomic c1 = two_cos(q(1, 18)), c2 = two_cos(q(1, 9)), s1 = two_sin(q(1, 36));
  Cyclotomic nine_quarters(q(9, 4)), three(3L);
  switch (i) {
    case 1: return nine_quarters * (three + c1 + c2);
    case 2: return nine_quarters * (three - c2 + s1);
    case 3: return nine_quarters * (three - c1 - s1);
  }
  throw Error("psl28_a: index must be 1, 2 or 3");
}

const std::vector<TheoremCase>& theorem_cases() {
  static const std::vector<TheoremCase> cases = {
      {"psl27", "PSL(2,7)", "Sigma7"},
      {"psl27", "PSL(2,7)", "Sigma1+Sigma3+Sigma3*"},
      {"psl27z23", "PSL(2,7):Z2^3", "Sigma7_2"},
      {"psl27z23", "PSL(2,7):Z2^3", "Sigma1+Sigma3+Sigma3*"},
      {"pgl27", "PGL(2,7)", "Sigma7'"},
      {"pgl27", "PGL(2,7)", "Sigma1'+Sigma6_1"},
      {"psl28", "PSL(2,8)", "Sigma7_1"},
      {"psl28", "PSL(2,8)", "Sigma7_1'"},
      {"psl28", "PSL(2,8)", "Sigma7_1''"},
      {"psl213", "PSL(2,13)", "Sigma7"},
      {"psl213", "PSL(2,13)", "Sigma7'"},
      {"pu33", "PU(3,3)", "Sigma7'"},
      {"g22", "G2(2)", "Sigma7"},
  };
  return cases;
}

std::vector<TheoremCase> theorem_cases_for(const std::string& group) {
  std::vector<TheoremCase> out;
  for (const auto& c : theorem_cases())
    if (c.group == group || c.stem == group) out.push_back(c);
  if (out.empty()) throw DataError("no theorem measure for group '" + group + "'");
  return out;
}

JointMeasure theorem_measure(const std::string& group, const std::string& embedding, bool printed) {
  auto cases = theorem_cases_for(group);
  const TheoremCase* hit = nullptr;
  for (const auto& c : cases)
    if (c.embedding == embedding) hit = &c;
  if (!hit) throw DataError("no theorem measure for " + group + " with rho1 = " + embedding);
  const std::string& s = hit->stem;
  bool first = hit == &cases.front();
  JointMeasure mu;
  if (s == "psl27" || s == "psl27z23") mu = psl27(first, printed);
  else if (s == "pgl27") mu = pgl27(first, printed);
  else if (s == "psl28") mu = psl28(printed);
  else if (s == "psl213") mu = psl213(printed);
  else if (s == "pu33") mu = pu33(printed);
  else mu = g22(printed);
  mu.name = hit->group + " " + hit->embedding + (printed ? " (as printed)" : "");
  if (printed) mu.notes.clear();
  return mu;
}

}  // namespace g2s
