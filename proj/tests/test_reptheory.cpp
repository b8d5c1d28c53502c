#include "g2spectra/error.hpp"
#include "g2spectra/reptheory.hpp"

#include <gtest/gtest.h>

#include <complex>
#include <functional>
#include <map>
#include <numeric>
#include <set>

using namespace g2s;

namespace {

const Irrep& irrep(const CharacterTable& t, const std::string& name) {
  return t.irreps[*t.irrep_index(name)];
}

EigenMultiset angles(std::initializer_list<long> ks, long n) {
  EigenMultiset m;
  for (long k : ks) m.push_back(Rational(k, n));
  for (auto& a : m) a.canonicalize();
  std::sort(m.begin(), m.end());
  return m;
}

// All multisets of n-th roots of unity of the given size whose sum is v,
// enumerated directly.
std::vector<std::vector<int>> brute_force_multisets(long n, long size, const Cyclotomic& v) {
  std::vector<std::vector<int>> out;
  std::vector<int> counts(n, 0);
  std::complex<double> target = v.to_complex();
  std::function<void(long, long, std::complex<double>)> rec = [&](long k, long left,
                                                                 std::complex<double> s) {
    if (k == n - 1) {
      counts[k] = static_cast<int>(left);
      auto total = s + std::polar(static_cast<double>(left), 2 * M_PI * k / n);
      if (std::abs(total - target) < 1e-9 && Cyclotomic::from_counts(n, counts) == v)
        out.push_back(counts);
      counts[k] = 0;
      return;
    }
    for (long c = 0; c <= left; ++c) {
      counts[k] = static_cast<int>(c);
      rec(k + 1, left - c, s + std::polar(static_cast<double>(c), 2 * M_PI * k / n));
    }
    counts[k] = 0;
  };
  rec(0, size, {0, 0});
  return out;
}

}  // namespace

TEST(RepTheory, KroneckerSquares) {
  auto t = load_table("psl27");
  auto s7 = irrep(t, "Sigma7").values;
  EXPECT_EQ(decompose_product(t, s7, s7),
            parse_character(t, "Sigma1+Sigma3+Sigma3*+2*Sigma6+2*Sigma7+2*Sigma8"));

  auto u = load_table("pu33");
  auto r = irrep(u, "Sigma7'").values;
  EXPECT_EQ(decompose_product(u, r, r), parse_character(u, "Sigma1+Sigma7'+Sigma14+Sigma27"));

  auto s = load_table("psl213");
  auto q = irrep(s, "Sigma7").values;
  EXPECT_EQ(decompose_product(s, q, q),
            parse_character(s, "Sigma1+Sigma7+Sigma13+Sigma14+Sigma14'"));

  for (const auto& stem : bundled_tables()) {
    auto tb = load_table(stem);
    auto triv = tb.irreps[tb.trivial_irrep()].values;
    for (std::size_t i = 0; i < tb.irreps.size(); ++i) {
      Multiplicities e(tb.irreps.size(), 0);
      e[i] = 1;
      EXPECT_EQ(decompose_product(tb, tb.irreps[i].values, triv), e);
    }
  }
}

TEST(RepTheory, DecomposeRejectsNonCharacters) {
  auto t = load_table("psl27");
  ClassFunction f(t.classes.size(), Cyclotomic(1L));
  f[0] = Cyclotomic(2L);
  EXPECT_THROW(decompose(t, f), DataError);
  auto neg = character_values(t, parse_character(t, "Sigma7"));
  for (auto& v : neg) v = -v;
  EXPECT_THROW(decompose(t, neg), DataError);
}

TEST(RepTheory, PowerValueMatchesEigenvalues) {
  auto t = load_table("pu33");
  auto chi = irrep(t, "Sigma7'").values;
  auto eig = reconstruct_eigenvalues(t, chi).front();
  for (std::size_t c = 0; c < t.classes.size(); ++c)
    for (long k = 0; k < 2 * t.classes[c].order; ++k) {
      EigenMultiset powered;
      for (const auto& a : eig[c]) powered.push_back(a * k);
      EXPECT_EQ(power_value(t, chi, c, k), eigenvalue_sum(powered)) << t.classes[c].name << "^" << k;
    }
}

TEST(RepTheory, EigenvalueGoldens) {
  auto s = load_table("psl213");
  auto col = reconstruct_eigenvalues(s, irrep(s, "Sigma7").values);
  ASSERT_EQ(col.size(), 1u);
  EXPECT_EQ(col[0][*s.class_index("C2")], angles({0, 0, 0, 1, 1, 1, 1}, 2));
  EXPECT_EQ(col[0][*s.class_index("C13'")], angles({0, 1, 3, 4, 9, 10, 12}, 13));
  EXPECT_EQ(col[0][s.identity_class()], EigenMultiset(7, Rational(0)));

  auto u = load_table("pu33");
  auto cu = reconstruct_eigenvalues(u, irrep(u, "Sigma7'").values);
  EXPECT_EQ(cu[0][*u.class_index("C12")], angles({0, 1, 4, 5, 7, 8, 11}, 12));
}

TEST(RepTheory, EigenvaluesAgreeWithBruteForce) {
  // Backtracking over multisets of roots with the sum and power-map constraints,
  // for every irrep of degree <= 7 in the corpus.
  for (const auto& stem : bundled_tables()) {
    auto t = load_table(stem);
    for (const auto& r : t.irreps) {
      if (r.degree > 7) continue;
      auto col = reconstruct_eigenvalues(t, r.values).front();
      std::map<std::size_t, std::vector<std::vector<int>>> cand;
      for (std::size_t c = 0; c < t.classes.size(); ++c)
        cand[c] = brute_force_multisets(t.classes[c].order, r.degree, r.values[c]);
      // Power compatibility prunes the sum-only candidates; targets have smaller order.
      std::vector<std::size_t> order(t.classes.size());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](auto a, auto b) { return t.classes[a].order < t.classes[b].order; });
      for (std::size_t c : order) {
        long n = t.classes[c].order;
        std::vector<std::vector<int>> kept;
        for (const auto& counts : cand[c]) {
          bool ok = true;
          for (const auto& [p, target] : t.classes[c].power_map) {
            auto d = *t.class_index(target);
            long m = t.classes[d].order;
            std::vector<int> pc(m, 0);
            for (long k = 0; k < n; ++k) pc[(k * p % n) / p] += counts[k];
            ok &= cand[d].size() == 1 && cand[d][0] == pc;
          }
          if (ok) kept.push_back(counts);
        }
        cand[c] = kept;
        ASSERT_EQ(kept.size(), 1u) << stem << " " << r.name << " " << t.classes[c].name;
        EigenMultiset bf;
        for (long k = 0; k < n; ++k)
          for (int j = 0; j < kept[0][k]; ++j) bf.push_back(Rational(k, n));
        for (auto& a : bf) a.canonicalize();
        std::sort(bf.begin(), bf.end());
        EXPECT_EQ(bf, col[c]) << stem << " " << r.name << " " << t.classes[c].name;
      }
    }
  }
}

TEST(RepTheory, EigenvalueInvariants) {
  for (const auto& stem : bundled_tables()) {
    auto t = load_table(stem);
    for (const auto& r : t.irreps) {
      auto col = reconstruct_eigenvalues(t, r.values).front();
      for (std::size_t c = 0; c < t.classes.size(); ++c) {
        ASSERT_EQ(static_cast<long>(col[c].size()), r.degree);
        EXPECT_EQ(eigenvalue_sum(col[c]), r.values[c]);
        for (const auto& a : col[c]) EXPECT_EQ(Rational(a * t.classes[c].order).get_den(), 1);
      }
    }
  }
}

TEST(RepTheory, ESetMatching) {
  EXPECT_EQ(match_g2_eigenvalue_set(EigenMultiset(7, Rational(0))), TorusPoint());
  auto p = match_g2_eigenvalue_set(angles({0, 1, 3, 4, 9, 10, 12}, 13));
  ASSERT_TRUE(p);
  EXPECT_EQ(*p, orbit_representative(TorusPoint(Rational(1, 13), Rational(4, 13))));

  auto u = load_table("pu33");
  auto x = character_values(u, parse_character(u, "Sigma1+Sigma6"));
  auto col = reconstruct_eigenvalues(u, x).front();
  EXPECT_FALSE(match_g2_eigenvalue_set(col[*u.class_index("C12")]));
  EXPECT_THROW(match_g2_eigenvalue_set(EigenMultiset(6, Rational(0))), Error);
}

TEST(RepTheory, ESetRoundTrip) {
  for (long n : {5L, 7L, 8L, 12L}) {
    for (long a = 0; a < n; ++a)
      for (long b = 0; b < n; ++b) {
        TorusPoint p(Rational(a, n), Rational(b, n));
        auto w = weights7(p);
        auto m = match_g2_eigenvalue_set(w);
        ASSERT_TRUE(m);
        auto orbit = d12_orbit(p);
        EXPECT_TRUE(std::find(orbit.begin(), orbit.end(), *m) != orbit.end()) << p.str();
        EXPECT_EQ(*m, orbit.front());
      }
  }
}

TEST(RepTheory, EmbeddingCounts) {
  const std::map<std::string, std::size_t> expect = {{"psl27", 2}, {"psl27z23", 2}, {"pgl27", 2},
                                                     {"psl28", 3}, {"psl213", 2},   {"pu33", 1},
                                                     {"g22", 1}};
  for (const auto& [stem, n] : expect) EXPECT_EQ(find_embeddings(load_table(stem)).embeddings.size(), n) << stem;
}

TEST(RepTheory, EmbeddingIdentities) {
  auto check = [](const std::string& stem, const std::string& rho1, const std::string& rho2) {
    auto t = load_table(stem);
    auto s = find_embeddings(t);
    const auto& e = select_embedding(s, rho1);
    EXPECT_EQ(e.rho1, parse_character(t, rho1)) << stem;
    EXPECT_EQ(e.rho2, parse_character(t, rho2)) << stem << " " << rho1;
  };
  check("psl27", "Sigma7", "Sigma3+Sigma3*+Sigma8");
  check("psl27", "Sigma1+Sigma3+Sigma3*", "Sigma3+Sigma3*+Sigma8");
  check("psl27z23", "Sigma7_2", "Sigma3+Sigma3*+Sigma8");
  check("psl27z23", "Sigma1+Sigma3+Sigma3*", "Sigma3+Sigma3*+Sigma8");
  check("pgl27", "Sigma7'", "Sigma6_1+Sigma8'");
  check("pgl27", "Sigma1'+Sigma6_1", "Sigma6_1+Sigma8'");
  check("psl28", "Sigma7_1", "Sigma7_1'+Sigma7_2");
  check("psl28", "Sigma7_1'", "Sigma7_1''+Sigma7_2");
  check("psl28", "Sigma7_1''", "Sigma7_1+Sigma7_2");
  check("psl213", "Sigma7", "Sigma14");
  check("psl213", "Sigma7'", "Sigma14");
  check("pu33", "Sigma7'", "Sigma14");
  check("g22", "Sigma7", "Sigma14");
}

TEST(RepTheory, Rejections) {
  auto status = [](const std::string& stem, const std::string& name) {
    auto s = find_embeddings(load_table(stem));
    for (const auto& c : s.candidates)
      if (c.name == name) return c;
    ADD_FAILURE() << "no candidate " << name;
    return Candidate{};
  };
  using S = Candidate::Status;
  EXPECT_EQ(status("psl28", "Sigma7_2").status, S::kNotInSquare);
  auto pu = status("pu33", "Sigma1+Sigma6");
  EXPECT_EQ(pu.status, S::kNoEigenvalueMatch);
  EXPECT_EQ(pu.detail, "C12");
  for (const char* n : {"Sigma1+Sigma6_1", "Sigma1+Sigma6_2", "Sigma1+Sigma6_2'", "Sigma1'+Sigma6_2",
                        "Sigma1'+Sigma6_2'", "Sigma7"})
    EXPECT_NE(status("pgl27", n).status, S::kEmbedding) << n;
  EXPECT_EQ(status("g22", "Sigma7'").status, S::kOutOfRange);
  EXPECT_EQ(status("psl27", "7*Sigma1").status, S::kAbelianImage);
}

TEST(RepTheory, EmbeddingInvariants) {
  for (const auto& stem : bundled_tables()) {
    auto t = load_table(stem);
    auto s = find_embeddings(t);
    for (const auto& e : s.embeddings) {
      auto col = reconstruct_eigenvalues(t, e.x).front();
      auto y = character_values(t, e.rho2);
      EXPECT_EQ(character_degree(t, e.rho2), 14);
      for (std::size_t c = 0; c < t.classes.size(); ++c) {
        const auto& p = e.points[c];
        EXPECT_EQ(phi1(p), e.x[c]);
        EXPECT_EQ(phi2(p), y[c]);
        auto w = weights7(p);
        for (auto& a : w) a = frac(a);
        std::sort(w.begin(), w.end());
        EXPECT_EQ(w, col[c]);
        EXPECT_TRUE(domain_contains(e.x[c], y[c])) << stem << " " << t.classes[c].name;
        EXPECT_EQ(p, orbit_representative(p));
      }
    }
  }
}

TEST(RepTheory, McKayGraphs) {
  const std::map<std::string, bool> connected = {{"psl27", true}, {"psl27z23", false}, {"pgl27", true},
                                                 {"psl28", true}, {"psl213", true},    {"pu33", true},
                                                 {"g22", true}};
  for (const auto& stem : bundled_tables()) {
    auto t = load_table(stem);
    for (const auto& e : find_embeddings(t).embeddings) {
      auto g = mckay_graph(t, e.x, e.name);
      EXPECT_EQ(apply_adjacency(g, g.degrees), [&] {
        auto d = g.degrees;
        for (auto& v : d) v *= 7;
        return d;
      }()) << stem;
      EXPECT_EQ(is_connected(g), connected.at(stem)) << stem << " " << e.name;
      for (std::size_t i = 0; i < g.vertices.size(); ++i)
        for (std::size_t j = 0; j < g.vertices.size(); ++j)
          EXPECT_EQ(g.adjacency[i][j], g.adjacency[j][i]);
    }
  }
}

TEST(RepTheory, McKayTrivialRowAndDot) {
  auto t = load_table("psl213");
  auto g = mckay_graph(t, irrep(t, "Sigma7").values, "Sigma7");
  auto s7 = *t.irrep_index("Sigma7"), s14 = *t.irrep_index("Sigma14");
  EXPECT_EQ(g.adjacency[s7][s14], 1);
  std::vector<long> row(t.irreps.size(), 0);
  row[s7] = 1;
  EXPECT_EQ(g.adjacency[g.distinguished], row);
  auto dot = to_dot(g);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '['), static_cast<long>(9 + [&] {
              long k = 0;
              for (auto& r : g.adjacency)
                for (long a : r) k += a > 1;
              return k;
            }()));
  EXPECT_NE(dot.find("label=\"Sigma7 (7)\""), std::string::npos);
  EXPECT_EQ(dot, to_dot(mckay_graph(t, irrep(t, "Sigma7").values, "Sigma7")));
}
