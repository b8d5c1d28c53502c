#pragma once

#include "g2spectra/chartable.hpp"
#include "g2spectra/torus.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace g2s {

struct SupportSpec {
  enum class Kind { kProduct, kCW, kDoubleParen, kNK, kAtom };

  Kind kind = Kind::kProduct;
  long m = 1;           // product(m, n), cw(n) uses n
  long n = 1;
  Rational param{2};    // dparen(param), nk(param, k)
  Rational k{0};
  TorusPoint point;     // atom

  static SupportSpec product(long m, long n);
  static SupportSpec cw(long n);
  static SupportSpec double_paren(const Rational& n);
  static SupportSpec nk(const Rational& n, const Rational& k);
  static SupportSpec atom(const TorusPoint& p);

  std::string str() const;
  friend bool operator==(const SupportSpec&, const SupportSpec&) = default;
};

// Points listed with multiplicity; weights are uniform and sum to 1.
using WeightedPoints = std::vector<std::pair<TorusPoint, Rational>>;
WeightedPoints support_points(const SupportSpec& spec);
// The order-6 subgroup used by dparen and nk.
std::vector<TorusPoint> s3_orbit_list(const TorusPoint& p);

// c0 + c1 * j2 + c2 * K
struct Density {
  Rational c0{1}, c1{0}, c2{0};
  Cyclotomic at(const TorusPoint& p) const;
  double at_float(double t1, double t2) const;
  std::string str() const;
  friend bool operator==(const Density&, const Density&) = default;
};

// For atom supports the coefficient is per copy: the term is
// coefficient * sum over g in D12 of density * delta_{g p}.
struct MeasureTerm {
  Cyclotomic coefficient{1L};
  double coefficient_float = 1;
  Density density;
  SupportSpec support;
};

struct JointMeasure {
  std::string name;
  std::vector<MeasureTerm> terms;
  std::vector<std::string> notes;  // erratum annotations
  bool exact = true;               // false when some coefficient is only known numerically
};

using MassMap = std::map<TorusPoint, Cyclotomic>;
MassMap pointwise_mass(const JointMeasure& mu);
std::map<TorusPoint, double> pointwise_mass_float(const JointMeasure& mu);
Cyclotomic total_mass(const JointMeasure& mu);

Cyclotomic measure_moment(const JointMeasure& mu, long m, long n);
double measure_moment_float(const JointMeasure& mu, long m, long n);
Cyclotomic conjugacy_moment(const CharacterTable& table, const ClassFunction& rho1,
                            const ClassFunction& rho2, long m, long n);

// Moment grid 0 <= m, n <= max, indexed [m][n].
using MomentGrid = std::vector<std::vector<Cyclotomic>>;
MomentGrid measure_moments(const JointMeasure& mu, long max);
MomentGrid conjugacy_moments(const CharacterTable& table, const ClassFunction& rho1,
                             const ClassFunction& rho2, long max);

// Text form: one `term coeff=... density=c0,c1,c2 support=...` per line.
JointMeasure parse_measure(std::string_view text, const std::string& source = "<input>");
std::string serialize(const JointMeasure& mu);

// Published theorem measures.
struct TheoremCase {
  std::string stem;       // bundled table
  std::string group;      // group name
  std::string embedding;  // rho1 as an irrep sum
};
const std::vector<TheoremCase>& theorem_cases();
std::vector<TheoremCase> theorem_cases_for(const std::string& group);
JointMeasure theorem_measure(const std::string& group, const std::string& embedding,
                             bool as_printed = false);

// Closed forms of j2 at (1/9,4/9), (1/9,1/3), (2/9,5/9).
Cyclotomic psl28_a(int i);

}  // namespace g2s
