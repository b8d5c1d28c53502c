#pragma once

#include "g2spectra/measure.hpp"
#include "g2spectra/reptheory.hpp"

#include <string>
#include <vector>

namespace g2s {

struct MomentRow {
  long m = 0, n = 0;
  Cyclotomic conjugacy, measure;  // zero in float mode
  double conjugacy_float = 0, measure_float = 0;
  bool ok = true;
};

struct OrbitRow {
  TorusPoint representative;
  std::vector<std::string> classes;  // empty for stray support points
  long orbit_size = 0;
  Cyclotomic expected, measure;
  double expected_float = 0, measure_float = 0;
  bool ok = true;
};

struct VerificationReport {
  std::string group;
  std::string embedding;
  std::string measure;
  bool exact = true;
  long max = 0;
  std::vector<MomentRow> moments;
  std::vector<OrbitRow> orbits;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool ok() const { return failures.empty(); }
};

inline constexpr long kDefaultMomentBound = 5;
inline constexpr double kFloatTolerance = 1e-9;

VerificationReport verify_moments(const CharacterTable& table, const Embedding& e,
                                  const JointMeasure& mu, long max = kDefaultMomentBound);
VerificationReport verify_masses(const CharacterTable& table, const Embedding& e,
                                 const JointMeasure& mu);
// Both checks in one report.
VerificationReport verify(const CharacterTable& table, const Embedding& e, const JointMeasure& mu,
                          long max = kDefaultMomentBound);

// Term-by-term differences between the printed and corrected theorem measures.
std::vector<std::string> printed_differences(const std::string& group, const std::string& embedding);

std::string format_text(const VerificationReport& r);
std::string format_csv(const VerificationReport& r);
std::string exact_cell(const Cyclotomic& v);

}  // namespace g2s
