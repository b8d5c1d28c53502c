#pragma once

#include "g2spectra/cyclotomic.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace g2s {

struct ConjClass {
  std::string name;
  long size = 1;
  long order = 1;
  std::map<long, std::string> power_map;  // prime -> class of g^p

  friend bool operator==(const ConjClass&, const ConjClass&) = default;
};

struct Irrep {
  std::string name;
  long degree = 1;
  std::vector<Cyclotomic> values;

  friend bool operator==(const Irrep&, const Irrep&) = default;
};

using ClassFunction = std::vector<Cyclotomic>;

class CharacterTable {
public:
  std::string group_name;
  long order = 0;
  std::vector<ConjClass> classes;
  std::vector<Irrep> irreps;

  std::optional<std::size_t> class_index(std::string_view name) const;
  std::optional<std::size_t> irrep_index(std::string_view name) const;
  std::size_t identity_class() const;
  // Class of g^p for g in class c; p must divide the element order.
  std::size_t power_class(std::size_t c, long p) const;
  std::size_t trivial_irrep() const;

  friend bool operator==(const CharacterTable&, const CharacterTable&) = default;
};

CharacterTable parse_table(std::string_view text, const std::string& source = "<input>");
std::string serialize(const CharacterTable& table);

// One human-readable line per violated invariant; empty means valid.
std::vector<std::string> validate(const CharacterTable& table);

// sum_C |C| chi(C) conj(psi(C)) / |G|
Cyclotomic inner_product(const CharacterTable& table, const ClassFunction& chi,
                         const ClassFunction& psi);
ClassFunction pointwise_product(const ClassFunction& a, const ClassFunction& b);

// Multiplicity vectors over the table's irreps.
using Multiplicities = std::vector<long>;

// "Sigma1+2*Sigma3*" or a single irrep name.
Multiplicities parse_character(const CharacterTable& table, std::string_view expr);
std::string format_character(const CharacterTable& table, const Multiplicities& m);
ClassFunction character_values(const CharacterTable& table, const Multiplicities& m);
long character_degree(const CharacterTable& table, const Multiplicities& m);

// Bundled corpus lookup.
std::string tables_directory();
// Stems of the bundled files, in canonical order.
const std::vector<std::string>& bundled_tables();
// Accepts a file path, a bundled stem ("psl27") or a group name ("PSL(2,7)").
CharacterTable load_table(const std::string& name_or_path);
std::string read_file(const std::string& path);

}  // namespace g2s
