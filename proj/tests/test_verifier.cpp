#include "g2spectra/error.hpp"
#include "g2spectra/verifier.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace g2s;

namespace {

Rational q(long a, long b = 1) { return Rational(a, b); }

struct Case {
  CharacterTable table;
  EmbeddingSearch search;
};

const Case& load(const std::string& stem) {
  static std::map<std::string, Case> cache;
  auto it = cache.find(stem);
  if (it == cache.end()) {
    Case c{load_table(stem), {}};
    c.search = find_embeddings(c.table);
    it = cache.emplace(stem, std::move(c)).first;
  }
  return it->second;
}

bool mentions(const VerificationReport& r, const std::string& needle) {
  for (const auto& f : r.failures)
    if (f.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST(Verifier, AllCorrectedTheoremsPass) {
  for (const auto& c : theorem_cases()) {
    const auto& l = load(c.stem);
    auto r = verify(l.table, select_embedding(l.search, c.embedding), theorem_measure(c.group, c.embedding));
    EXPECT_TRUE(r.ok()) << format_text(r);
    EXPECT_EQ(r.moments.size(), 36u);
    Cyclotomic total(0L);
    for (const auto& o : r.orbits) total += o.expected;
    EXPECT_EQ(total, Cyclotomic(1L)) << c.group;
  }
}

TEST(Verifier, PrintedDiracCoefficientFails) {
  const auto& l = load("psl213");
  const auto& e = select_embedding(l.search, "Sigma7");
  auto r = verify(l.table, e, theorem_measure("PSL(2,13)", "Sigma7", true));
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(mentions(r, "orbit of (1/13,4/13)"));
  EXPECT_TRUE(mentions(r, "orbit of (2/13,7/13)"));
  EXPECT_TRUE(mentions(r, "moment (0,0): conjugacy 1, measure 179/104"));
  auto diffs = printed_differences("PSL(2,13)", "Sigma7");
  ASSERT_EQ(diffs.size(), 2u);
  EXPECT_EQ(diffs[0], "Dirac term atom(1/13,4/13): printed coefficient 7/192, corrected 1/156");
}

TEST(Verifier, PrintedVariantsAgreeWithLedger) {
  std::map<std::string, bool> pass;
  for (const auto& c : theorem_cases()) {
    const auto& l = load(c.stem);
    auto r = verify(l.table, select_embedding(l.search, c.embedding),
                    theorem_measure(c.group, c.embedding, true));
    pass[c.group + " " + c.embedding] = r.ok();
    EXPECT_EQ(r.ok(), printed_differences(c.group, c.embedding).empty()) << c.group << " " << c.embedding;
  }
  EXPECT_TRUE(pass["G2(2) Sigma7"]);
  EXPECT_TRUE(pass["PSL(2,8) Sigma7_1''"]);
  EXPECT_FALSE(pass["PU(3,3) Sigma7'"]);
  EXPECT_FALSE(pass["PGL(2,7) Sigma7'"]);
}

TEST(Verifier, MassIsPooledOverClassesSharingAnOrbit) {
  const auto& l = load("pu33");
  auto r = verify_masses(l.table, l.search.embeddings.front(), theorem_measure("PU(3,3)", "Sigma7'"));
  ASSERT_TRUE(r.ok());
  bool found = false;
  for (const auto& o : r.orbits)
    if (o.representative == TorusPoint(q(1, 12), q(5, 12))) {
      found = true;
      EXPECT_EQ(o.classes.size(), 2u);
      EXPECT_EQ(o.expected, Cyclotomic(q(1, 6)));
      EXPECT_EQ(o.orbit_size, 12);
    }
  EXPECT_TRUE(found);
}

TEST(Verifier, StrayMassIsReported) {
  const auto& l = load("psl27");
  auto mu = theorem_measure("PSL(2,7)", "Sigma7");
  MeasureTerm extra;
  extra.coefficient = Cyclotomic(q(1, 1000));
  extra.support = SupportSpec::atom(TorusPoint(q(1, 5), q(2, 5)));
  mu.terms.push_back(extra);
  auto r = verify(l.table, select_embedding(l.search, "Sigma7"), mu);
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(mentions(r, "no class maps there"));
}

TEST(Verifier, PerturbationsFail) {
  const auto& l = load("g22");
  auto base = theorem_measure("G2(2)", "Sigma7");
  for (std::size_t i = 0; i < base.terms.size(); ++i) {
    auto mu = base;
    mu.terms[i].coefficient -= Cyclotomic(q(1, 1000));
    EXPECT_FALSE(verify(l.table, l.search.embeddings.front(), mu).ok()) << i;
  }
}

TEST(Verifier, FloatModeUsesTolerance) {
  const auto& l = load("psl28");
  const auto& e = select_embedding(l.search, "Sigma7_1'");
  auto exact = theorem_measure("PSL(2,8)", "Sigma7_1'");
  auto approx = exact;
  approx.exact = false;
  auto good = verify(l.table, e, parse_measure(serialize(approx)));
  EXPECT_FALSE(good.exact);
  EXPECT_TRUE(good.ok()) << format_text(good);
  approx.terms.back().coefficient_float += 1e-6;
  EXPECT_FALSE(verify(l.table, e, parse_measure(serialize(approx))).ok());
}

TEST(Verifier, CsvLayout) {
  const auto& l = load("psl27");
  auto r = verify_moments(l.table, select_embedding(l.search, "Sigma7"),
                          theorem_measure("PSL(2,7)", "Sigma7"), 2);
  std::istringstream in(format_csv(r));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "m,n,conjugacy,measure,diff,conjugacy_float,measure_float,diff_float");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 7) << line;
  }
  EXPECT_EQ(rows, 9);
  EXPECT_NE(format_csv(r).find("\n2,0,1,1,0,1,1,0\n"), std::string::npos);
}

TEST(Verifier, OutputIsDeterministic) {
  const auto& l = load("pgl27");
  const auto& e = select_embedding(l.search, "Sigma1'+Sigma6_1");
  auto mu = theorem_measure("PGL(2,7)", "Sigma1'+Sigma6_1", true);
  auto a = verify(l.table, e, mu), b = verify(l.table, e, mu);
  EXPECT_EQ(format_text(a), format_text(b));
  EXPECT_EQ(format_csv(a), format_csv(b));
  EXPECT_NE(format_text(a).find("\nFAIL\n"), std::string::npos);
}
