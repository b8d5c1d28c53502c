#include "g2spectra/reptheory.hpp"

#include "g2spectra/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace g2s {

Multiplicities decompose(const CharacterTable& t, const ClassFunction& f) {
  Multiplicities m;
  for (const auto& r : t.irreps) {
    auto q = inner_product(t, f, r.values).as_rational();
    if (!q || q->get_den() != 1 || *q < 0)
      throw DataError("not a character of " + t.group_name + ": multiplicity of " + r.name +
                      " is " + inner_product(t, f, r.values).str());
    m.push_back(q->get_num().get_si());
  }
  return m;
}

Multiplicities decompose_product(const CharacterTable& t, const ClassFunction& a,
                                 const ClassFunction& b) {
  return decompose(t, pointwise_product(a, b));
}

Cyclotomic power_value(const CharacterTable& t, const ClassFunction& chi, std::size_t c, long k) {
  long n = t.classes[c].order;
  k %= n;
  if (k == 0) return chi[t.identity_class()];
  long g = std::gcd(k, n);
  if (g == 1) return chi[c].galois(k);
  long p = prime_factors(g).front();
  return power_value(t, chi, t.power_class(c, p), k / p);
}

McKayGraph mckay_graph(const CharacterTable& t, const ClassFunction& gen, const std::string& name) {
  McKayGraph g;
  g.generator = name;
  g.distinguished = t.trivial_irrep();
  for (const auto& r : t.irreps) {
    g.vertices.push_back(r.name);
    g.degrees.push_back(r.degree);
    g.adjacency.push_back(decompose_product(t, gen, r.values));
  }
  return g;
}

bool is_connected(const McKayGraph& g) {
  std::size_t n = g.vertices.size();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{g.distinguished};
  seen[g.distinguished] = true;
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < n; ++v)
      if (!seen[v] && (g.adjacency[u][v] || g.adjacency[v][u])) {
        seen[v] = true;
        stack.push_back(v);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::vector<long> apply_adjacency(const McKayGraph& g, const std::vector<long>& v) {
  std::vector<long> out(g.vertices.size(), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j) out[i] += g.adjacency[i][j] * v[j];
  return out;
}

std::string to_dot(const McKayGraph& g) {
  std::ostringstream os;
  os << "digraph mckay {\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    os << "  v" << i << " [label=\"" << g.vertices[i] << " (" << g.degrees[i] << ")\""
       << (i == g.distinguished ? ", shape=box" : "") << "];\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (std::size_t j = 0; j < g.vertices.size(); ++j) {
      long a = g.adjacency[i][j];
      if (a == 0) continue;
      os << "  v" << i << " -> v" << j;
      if (a > 1) os << " [label=" << a << "]";
      os << ";\n";
    }
  os << "}\n";
  return os.str();
}

namespace {

// Multiplicity of e^(2 pi i k/n) among the eigenvalues at class c, by
// inverting the power sums chi(g^j).
EigenMultiset class_eigenvalues(const CharacterTable& t, const ClassFunction& chi, std::size_t c) {
  long n = t.classes[c].order;
  std::vector<Cyclotomic> sums;
  for (long j = 0; j < n; ++j) sums.push_back(power_value(t, chi, c, j));
  EigenMultiset out;
  for (long k = 0; k < n; ++k) {
    Cyclotomic s(0L);
    for (long j = 0; j < n; ++j) s += sums[j] * Cyclotomic::root_of_unity(-j * k, n);
    auto q = (s / Cyclotomic(n)).as_rational();
    if (!q || q->get_den() != 1 || *q < 0)
      throw DataError("no consistent eigenvalue assignment at class " + t.classes[c].name +
                      " of " + t.group_name);
    for (long r = 0; r < q->get_num().get_si(); ++r) out.push_back(Rational(k, n));
  }
  for (auto& a : out) a.canonicalize();
  std::sort(out.begin(), out.end());
  return out;
}

EigenMultiset sorted_frac(std::vector<Rational> v) {
  for (auto& a : v) a = frac(a);
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::vector<EigenColumn> reconstruct_eigenvalues(const CharacterTable& t, const ClassFunction& chi) {
  std::vector<std::size_t> order(t.classes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return t.classes[a].order < t.classes[b].order;
  });
  EigenColumn col(t.classes.size());
  for (auto c : order) {
    col[c] = class_eigenvalues(t, chi, c);
    if (eigenvalue_sum(col[c]) != chi[c])
      throw DataError("eigenvalues at class " + t.classes[c].name + " do not sum to the character");
    for (const auto& [p, target] : t.classes[c].power_map) {
      std::vector<Rational> powered;
      for (const auto& a : col[c]) powered.push_back(a * p);
      if (sorted_frac(powered) != col[t.power_class(c, p)])
        throw DataError("eigenvalues at class " + t.classes[c].name +
                        " are incompatible with pow" + std::to_string(p));
    }
  }
  return {col};
}

Cyclotomic eigenvalue_sum(const EigenMultiset& m) {
  Cyclotomic s(0L);
  for (const auto& a : m)
    s += Cyclotomic::root_of_unity(a.get_num().get_si(), a.get_den().get_si());
  return s;
}

std::optional<TorusPoint> match_g2_eigenvalue_set(const EigenMultiset& x) {
  if (x.size() != 7) throw Error("E-set matching needs 7 eigenvalues, got " + std::to_string(x.size()));
  EigenMultiset target = sorted_frac(x);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) {
      TorusPoint p(target[i], target[j]);
      if (sorted_frac(weights7(p)) == target) return orbit_representative(p);
    }
  return std::nullopt;
}

std::string to_string(Candidate::Status s) {
  switch (s) {
    case Candidate::Status::kEmbedding: return "embedding";
    case Candidate::Status::kAbelianImage: return "abelian image";
    case Candidate::Status::kNotReal: return "not real-valued";
    case Candidate::Status::kOutOfRange: return "values outside [-2,7]";
    case Candidate::Status::kNotInSquare: return "not contained in its Kronecker square";
    case Candidate::Status::kNoEigenvalueMatch: return "eigenvalues not of the form E(t1,t2)";
    case Candidate::Status::kNoRho2: return "no 14-dimensional restriction";
  }
  return "?";
}

namespace {

void classify(const CharacterTable& t, Candidate& cand, EmbeddingSearch& out) {
  using S = Candidate::Status;
  const auto& m = cand.gamma1;
  bool nonlinear = false;
  for (std::size_t i = 0; i < m.size(); ++i) nonlinear |= m[i] > 0 && t.irreps[i].degree > 1;
  if (!nonlinear) {
    cand.status = S::kAbelianImage;
    return;
  }
  ClassFunction x = character_values(t, m);
  for (std::size_t c = 0; c < x.size(); ++c) {
    if (!x[c].is_real()) {
      cand.status = S::kNotReal;
      cand.detail = t.classes[c].name;
      return;
    }
    if ((x[c] + Cyclotomic(2L)).sign() < 0) {
      cand.status = S::kOutOfRange;
      cand.detail = t.classes[c].name + ": " + x[c].str();
      return;
    }
  }
  Multiplicities sq = decompose_product(t, x, x);
  Multiplicities rest = sq;
  for (std::size_t i = 0; i < m.size(); ++i) {
    rest[i] -= m[i];
    if (rest[i] < 0) {
      cand.status = S::kNotInSquare;
      return;
    }
  }
  rest[t.trivial_irrep()] -= 1;
  if (rest[t.trivial_irrep()] < 0) {
    cand.status = S::kNotInSquare;
    cand.detail = "no trivial summand";
    return;
  }
  EigenColumn eig = reconstruct_eigenvalues(t, x).front();
  Embedding e;
  e.name = cand.name;
  e.rho1 = m;
  e.x = x;
  for (std::size_t c = 0; c < x.size(); ++c) {
    auto p = match_g2_eigenvalue_set(eig[c]);
    if (!p) {
      cand.status = S::kNoEigenvalueMatch;
      cand.detail = t.classes[c].name;
      return;
    }
    e.points.push_back(*p);
    e.y.push_back(phi2(*p));
  }
  Multiplicities y;
  try {
    y = decompose(t, e.y);
  } catch (const DataError&) {
    cand.status = S::kNoRho2;
    cand.detail = "phi2 at the class points is not a character";
    return;
  }
  for (std::size_t i = 0; i < y.size(); ++i)
    if (y[i] > rest[i]) {
      cand.status = S::kNoRho2;
      cand.detail = "phi2 character " + format_character(t, y) + " is not inside the square";
      return;
    }
  e.rho2 = y;
  cand.status = S::kEmbedding;
  cand.detail = format_character(t, y);
  out.embeddings.push_back(std::move(e));
}

}  // namespace

EmbeddingSearch find_embeddings(const CharacterTable& t) {
  EmbeddingSearch out;
  Multiplicities m(t.irreps.size(), 0);
  std::vector<Multiplicities> all;
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (left == 0) {
      all.push_back(m);
      return;
    }
    if (i == m.size()) return;
    long d = t.irreps[i].degree;
    for (long k = left / d; k >= 0; --k) {
      m[i] = k;
      rec(i + 1, left - k * d);
    }
    m[i] = 0;
  };
  rec(0, 7);
  auto constituents = [](const Multiplicities& v) { return std::accumulate(v.begin(), v.end(), 0L); };
  std::stable_sort(all.begin(), all.end(), [&](const auto& a, const auto& b) {
    return constituents(a) < constituents(b);
  });
  for (const auto& g : all) {
    Candidate c;
    c.gamma1 = g;
    c.name = format_character(t, g);
    classify(t, c, out);
    out.candidates.push_back(std::move(c));
  }
  return out;
}

const Embedding& select_embedding(const EmbeddingSearch& s, const std::string& id) {
  for (const auto& e : s.embeddings)
    if (e.name == id) return e;
  try {
    std::size_t pos = 0;
    long k = std::stol(id, &pos);
    if (pos == id.size() && k >= 1 && k <= static_cast<long>(s.embeddings.size()))
      return s.embeddings[k - 1];
  } catch (const std::exception&) {
  }
  throw DataError("unknown embedding '" + id + "'");
}

}  // namespace g2s
