#pragma once

#include "g2spectra/chartable.hpp"
#include "g2spectra/torus.hpp"

#include <optional>
#include <string>
#include <vector>

namespace g2s {

// Multiplicities of a class function; throws DataError unless they are
// nonnegative integers.
Multiplicities decompose(const CharacterTable& table, const ClassFunction& f);
Multiplicities decompose_product(const CharacterTable& table, const ClassFunction& a,
                                 const ClassFunction& b);

// chi(g^k) for g in class c: power maps for primes dividing |g|, Galois action otherwise.
Cyclotomic power_value(const CharacterTable& table, const ClassFunction& chi, std::size_t c,
                       long k);

struct McKayGraph {
  std::vector<std::string> vertices;
  std::vector<long> degrees;
  std::vector<std::vector<long>> adjacency;  // adjacency[l][m]: multiplicity of m in rho (x) l
  std::string generator;
  std::size_t distinguished = 0;
};

McKayGraph mckay_graph(const CharacterTable& table, const ClassFunction& generator,
                       const std::string& generator_name = "rho");
bool is_connected(const McKayGraph& g);
std::vector<long> apply_adjacency(const McKayGraph& g, const std::vector<long>& v);
std::string to_dot(const McKayGraph& g);

// Eigenvalues as angles k/n in [0,1), sorted.
using EigenMultiset = std::vector<Rational>;
// One multiset per class.
using EigenColumn = std::vector<EigenMultiset>;

// All eigenvalue assignments consistent with the character values and power
// maps. The power sums of a multiset of n-th roots of unity determine it, so
// the result has at most one entry; throws DataError when there is none.
std::vector<EigenColumn> reconstruct_eigenvalues(const CharacterTable& table,
                                                 const ClassFunction& chi);
Cyclotomic eigenvalue_sum(const EigenMultiset& m);

// (t1, t2) with E_{t1,t2} = X, as the least point of its D12 orbit.
std::optional<TorusPoint> match_g2_eigenvalue_set(const EigenMultiset& x);

struct Embedding {
  std::string name;  // rho1 as an irrep sum
  Multiplicities rho1;
  Multiplicities rho2;
  std::vector<TorusPoint> points;  // per class
  ClassFunction x;                 // chi_rho1
  ClassFunction y;                 // chi_rho2
};

struct Candidate {
  enum class Status {
    kEmbedding,
    kAbelianImage,
    kNotReal,
    kOutOfRange,
    kNotInSquare,
    kNoEigenvalueMatch,
    kNoRho2,
  };
  Multiplicities gamma1;
  std::string name;
  Status status = Status::kEmbedding;
  std::string detail;
};

std::string to_string(Candidate::Status s);

struct EmbeddingSearch {
  std::vector<Embedding> embeddings;
  std::vector<Candidate> candidates;
};

EmbeddingSearch find_embeddings(const CharacterTable& table);
// Looks up by 1-based index or by rho1 name.
const Embedding& select_embedding(const EmbeddingSearch& s, const std::string& id);

}  // namespace g2s
