#include "g2spectra/chartable.hpp"

#include "g2spectra/error.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#ifndef G2SPECTRA_DEFAULT_TABLES
#define G2SPECTRA_DEFAULT_TABLES "tables"
#endif

namespace g2s {

std::optional<std::size_t> CharacterTable::class_index(std::string_view name) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].name == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> CharacterTable::irrep_index(std::string_view name) const {
  for (std::size_t i = 0; i < irreps.size(); ++i)
    if (irreps[i].name == name) return i;
  return std::nullopt;
}

std::size_t CharacterTable::identity_class() const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].order == 1) return i;
  throw DataError(group_name + ": no identity class");
}

std::size_t CharacterTable::power_class(std::size_t c, long p) const {
  if (p == 1) return c;
  const auto& pm = classes.at(c).power_map;
  auto it = pm.find(p);
  if (it == pm.end())
    throw DataError(group_name + ": class " + classes[c].name + " has no pow" +
                    std::to_string(p) + " entry");
  return *class_index(it->second);
}

std::size_t CharacterTable::trivial_irrep() const {
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    bool trivial = true;
    for (const auto& v : irreps[i].values) trivial = trivial && v == Cyclotomic(1L);
    if (trivial) return i;
  }
  throw DataError(group_name + ": no trivial irrep");
}

// ---------------------------------------------------------------- parsing

namespace {

class LineParser {
public:
  LineParser(std::string_view line, const std::string& source, int lineno)
      : s_(line), source_(source), line_(lineno) {}

  [[noreturn]] void fail(std::size_t pos, const std::string& msg) const {
    throw ParseError(source_, line_, static_cast<int>(pos) + 1, msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  std::size_t pos() const { return pos_; }

  std::string word() {
    skip_ws();
    std::size_t b = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) &&
           s_[pos_] != '=')
      ++pos_;
    if (b == pos_) fail(b, "expected a word");
    return std::string(s_.substr(b, pos_ - b));
  }

  void keyword(std::string_view k) {
    skip_ws();
    std::size_t b = pos_;
    if (s_.substr(pos_, k.size()) != k) fail(b, "expected '" + std::string(k) + "'");
    pos_ += k.size();
  }

  long integer() {
    skip_ws();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail(b, "expected an integer");
    return std::stol(std::string(s_.substr(b, pos_ - b)));
  }

  std::string quoted() {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != '"') fail(pos_, "expected a quoted string");
    std::size_t b = ++pos_;
    while (pos_ < s_.size() && s_[pos_] != '"') ++pos_;
    if (pos_ >= s_.size()) fail(b - 1, "unterminated string");
    return std::string(s_.substr(b, pos_++ - b));
  }

  // [expr, expr, ...] split at top-level commas
  std::vector<Cyclotomic> value_list() {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != '[') fail(pos_, "expected '['");
    ++pos_;
    std::vector<Cyclotomic> out;
    int depth = 0;
    std::size_t b = pos_;
    for (; pos_ < s_.size(); ++pos_) {
      char c = s_[pos_];
      if (c == '(') ++depth;
      else if (c == ')') --depth;
      else if (depth == 0 && (c == ',' || c == ']')) {
        out.push_back(expr(b, pos_));
        b = pos_ + 1;
        if (c == ']') {
          ++pos_;
          return out;
        }
      }
    }
    fail(pos_, "unterminated value list");
  }

private:
  Cyclotomic expr(std::size_t b, std::size_t e) {
    std::string_view text = s_.substr(b, e - b);
    if (text.find_first_not_of(" \t") == std::string_view::npos) fail(b, "empty value");
    try {
      return parse_cyclotomic(text);
    } catch (const ParseError& err) {
      std::string msg = err.what();
      fail(b + err.column() - 1, msg.substr(msg.find(": ", msg.find(':') + 1) + 2));
    } catch (const Error& err) {
      fail(b, err.what());
    }
  }

  std::string_view s_;
  std::string source_;
  int line_;
  std::size_t pos_ = 0;
};

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

CharacterTable parse_table(std::string_view text, const std::string& source) {
  CharacterTable t;
  bool have_group = false, have_order = false;
  std::set<std::string> names;
  struct PendingPow {
    int line;
    std::size_t col;
    std::string target;
  };
  std::vector<PendingPow> pending;

  int lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++lineno;
    if (auto h = raw.find('#'); h != std::string_view::npos) raw = raw.substr(0, h);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    LineParser lp(raw, source, lineno);
    if (lp.at_end()) continue;
    std::size_t kpos = lp.pos();
    std::string kw = lp.word();
    if (kw == "group") {
      if (have_group) lp.fail(kpos, "duplicate 'group' line");
      t.group_name = lp.quoted();
      have_group = true;
    } else if (kw == "order") {
      if (have_order) lp.fail(kpos, "duplicate 'order' line");
      t.order = lp.integer();
      have_order = true;
    } else if (kw == "class") {
      if (!t.irreps.empty()) lp.fail(kpos, "class declared after the first irrep");
      ConjClass c;
      std::size_t npos = lp.pos();
      c.name = lp.word();
      if (!names.insert(c.name).second) lp.fail(npos, "duplicate name '" + c.name + "'");
      lp.keyword("size=");
      c.size = lp.integer();
      lp.keyword("order=");
      c.order = lp.integer();
      if (c.size < 1 || c.order < 1) lp.fail(npos, "size and order must be positive");
      while (!lp.at_end()) {
        std::size_t ppos = lp.pos();
        lp.keyword("pow");
        long p = lp.integer();
        if (!is_prime(p)) lp.fail(ppos, "pow" + std::to_string(p) + ": not a prime");
        lp.keyword("=");
        std::size_t tpos = lp.pos();
        std::string target = lp.word();
        if (!c.power_map.emplace(p, target).second)
          lp.fail(ppos, "duplicate pow" + std::to_string(p) + " entry");
        pending.push_back({lineno, tpos, target});
      }
      t.classes.push_back(std::move(c));
    } else if (kw == "irrep") {
      Irrep r;
      std::size_t npos = lp.pos();
      r.name = lp.word();
      if (!names.insert(r.name).second) lp.fail(npos, "duplicate name '" + r.name + "'");
      lp.keyword("degree=");
      r.degree = lp.integer();
      lp.keyword("values=");
      std::size_t vpos = lp.pos();
      r.values = lp.value_list();
      if (r.values.size() != t.classes.size())
        lp.fail(vpos, "expected " + std::to_string(t.classes.size()) + " values, found " +
                          std::to_string(r.values.size()));
      if (!lp.at_end()) lp.fail(lp.pos(), "trailing text");
      t.irreps.push_back(std::move(r));
    } else {
      lp.fail(kpos, "unknown directive '" + kw + "'");
    }
    if (kw == "group" || kw == "order")
      if (!lp.at_end()) lp.fail(lp.pos(), "trailing text");
  }
  if (!have_group) throw ParseError(source, lineno, 1, "missing 'group' line");
  if (!have_order) throw ParseError(source, lineno, 1, "missing 'order' line");
  if (t.classes.empty()) throw ParseError(source, lineno, 1, "no classes declared");
  for (const auto& pp : pending)
    if (!t.class_index(pp.target))
      throw ParseError(source, pp.line, static_cast<int>(pp.col) + 1,
                       "power map refers to unknown class '" + pp.target + "'");
  return t;
}

std::string serialize(const CharacterTable& t) {
  std::ostringstream out;
  out << "group \"" << t.group_name << "\"\n";
  out << "order " << t.order << "\n";
  for (const auto& c : t.classes) {
    out << "class " << c.name << " size=" << c.size << " order=" << c.order;
    for (const auto& [p, target] : c.power_map) out << " pow" << p << "=" << target;
    out << "\n";
  }
  for (const auto& r : t.irreps) {
    out << "irrep " << r.name << " degree=" << r.degree << " values=[";
    for (std::size_t i = 0; i < r.values.size(); ++i)
      out << (i ? ", " : "") << r.values[i].str();
    out << "]\n";
  }
  return out.str();
}

// ---------------------------------------------------------------- validation

Cyclotomic inner_product(const CharacterTable& t, const ClassFunction& chi,
                         const ClassFunction& psi) {
  if (chi.size() != t.classes.size() || psi.size() != t.classes.size())
    throw Error("inner_product: class function length does not match the class count");
  Cyclotomic s;
  for (std::size_t c = 0; c < chi.size(); ++c)
    s += Cyclotomic(t.classes[c].size) * chi[c] * psi[c].conj();
  return s / Cyclotomic(t.order);
}

ClassFunction pointwise_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.size() != b.size()) throw Error("class functions of different length");
  ClassFunction r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * b[i];
  return r;
}

std::vector<std::string> validate(const CharacterTable& t) {
  std::vector<std::string> v;
  const std::size_t k = t.classes.size();
  long total = 0;
  for (const auto& c : t.classes) total += c.size;
  if (total != t.order)
    v.push_back("class sizes sum to " + std::to_string(total) + ", expected order " +
                std::to_string(t.order));
  if (t.irreps.size() != k)
    v.push_back(std::to_string(t.irreps.size()) + " irreps for " + std::to_string(k) +
                " classes");

  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < k; ++i)
    if (t.classes[i].order == 1) ids.push_back(i);
  if (ids.size() != 1) {
    v.push_back("expected exactly one class of element order 1");
    return v;
  }
  const std::size_t id = ids[0];
  if (t.classes[id].size != 1) v.push_back("identity class has size != 1");

  for (const auto& c : t.classes) {
    if (t.order % c.size != 0) v.push_back("class " + c.name + ": size does not divide order");
    for (long p : prime_factors(c.order)) {
      auto it = c.power_map.find(p);
      if (it == c.power_map.end()) {
        v.push_back("class " + c.name + ": missing pow" + std::to_string(p));
        continue;
      }
      auto target = t.class_index(it->second);
      if (!target) {
        v.push_back("class " + c.name + ": pow" + std::to_string(p) + " refers to unknown class");
        continue;
      }
      if (t.classes[*target].order != c.order / p)
        v.push_back("class " + c.name + ": pow" + std::to_string(p) + "=" + it->second +
                    " has element order " + std::to_string(t.classes[*target].order) +
                    ", expected " + std::to_string(c.order / p));
    }
    for (const auto& [p, target] : c.power_map)
      if (c.order % p != 0)
        v.push_back("class " + c.name + ": pow" + std::to_string(p) +
                    " given for a prime not dividing the element order");
  }
  // iterating power maps reaches the identity
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t cur = i;
    long steps = 0;
    while (t.classes[cur].order != 1 && steps <= t.classes[i].order) {
      auto ps = prime_factors(t.classes[cur].order);
      auto it = t.classes[cur].power_map.find(ps.front());
      if (it == t.classes[cur].power_map.end() || !t.class_index(it->second)) break;
      cur = *t.class_index(it->second);
      ++steps;
    }
    if (t.classes[cur].order != 1)
      v.push_back("class " + t.classes[i].name + ": power maps do not reach the identity");
  }

  for (const auto& r : t.irreps) {
    if (r.values.size() != k) {
      v.push_back("irrep " + r.name + ": wrong number of values");
      return v;
    }
  }

  Cyclotomic sumsq;
  for (const auto& r : t.irreps) {
    const Cyclotomic& d = r.values[id];
    sumsq += d * d;
    if (d != Cyclotomic(r.degree))
      v.push_back("irrep " + r.name + ": value at the identity class is " + d.str() +
                  ", degree is " + std::to_string(r.degree));
    for (std::size_t c = 0; c < k; ++c) {
      Cyclotomic n2 = r.values[c] * r.values[c].conj();
      if ((Cyclotomic(r.degree * r.degree) - n2).sign() < 0)
        v.push_back("irrep " + r.name + ": |value| at " + t.classes[c].name +
                    " exceeds the degree");
    }
  }
  if (sumsq != Cyclotomic(t.order))
    v.push_back("sum of squared degrees is " + sumsq.str() + ", expected " +
                std::to_string(t.order));

  for (std::size_t i = 0; i < t.irreps.size(); ++i)
    for (std::size_t j = i; j < t.irreps.size(); ++j) {
      Cyclotomic ip = inner_product(t, t.irreps[i].values, t.irreps[j].values);
      if (ip != Cyclotomic(i == j ? 1L : 0L))
        v.push_back("row orthogonality fails for " + t.irreps[i].name + ", " +
                    t.irreps[j].name + ": " + ip.str());
    }
  if (t.irreps.size() == k) {
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a; b < k; ++b) {
        Cyclotomic s;
        for (const auto& r : t.irreps) s += r.values[a] * r.values[b].conj();
        Cyclotomic expect = a == b ? Cyclotomic(Rational(t.order, t.classes[a].size)) : Cyclotomic();
        if (s != expect)
          v.push_back("column orthogonality fails for " + t.classes[a].name + ", " +
                      t.classes[b].name);
      }
  }
  return v;
}

// ---------------------------------------------------------------- characters

Multiplicities parse_character(const CharacterTable& t, std::string_view expr) {
  Multiplicities m(t.irreps.size(), 0);
  std::string s;
  for (char c : expr)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw Error("empty character expression");
  std::size_t b = 0;
  while (b <= s.size()) {
    std::size_t e = s.find('+', b);
    if (e == std::string::npos) e = s.size();
    std::string term = s.substr(b, e - b);
    if (term.empty()) throw Error("malformed character expression '" + std::string(expr) + "'");
    long k = 1;
    std::size_t star = term.find('*');
    if (star != std::string::npos && star > 0 &&
        std::all_of(term.begin(), term.begin() + star, [](char c) { return std::isdigit(c); })) {
      k = std::stol(term.substr(0, star));
      term = term.substr(star + 1);
    }
    auto idx = t.irrep_index(term);
    if (!idx) throw Error("unknown irrep '" + term + "' in " + t.group_name);
    m[*idx] += k;
    b = e + 1;
  }
  return m;
}

std::string format_character(const CharacterTable& t, const Multiplicities& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (m[i] != 1) out += std::to_string(m[i]) + "*";
    out += t.irreps[i].name;
  }
  return out.empty() ? "0" : out;
}

ClassFunction character_values(const CharacterTable& t, const Multiplicities& m) {
  ClassFunction v(t.classes.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0)
      for (std::size_t c = 0; c < v.size(); ++c)
        v[c] += Cyclotomic(m[i]) * t.irreps[i].values[c];
  return v;
}

long character_degree(const CharacterTable& t, const Multiplicities& m) {
  long d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * t.irreps[i].degree;
  return d;
}

// ---------------------------------------------------------------- corpus

std::string tables_directory() {
  if (const char* env = std::getenv("G2SPECTRA_TABLES"); env && *env) return env;
  return G2SPECTRA_DEFAULT_TABLES;
}

const std::vector<std::string>& bundled_tables() {
  static const std::vector<std::string> names = {"psl27", "psl27z23", "pgl27", "psl28",
                                                 "psl213", "pu33",     "g22"};
  return names;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CharacterTable load_table(const std::string& name) {
  namespace fs = std::filesystem;
  if (fs::is_regular_file(name)) return parse_table(read_file(name), name);
  const fs::path dir = tables_directory();
  fs::path stem = dir / (name + ".ctab");
  if (fs::is_regular_file(stem)) return parse_table(read_file(stem.string()), stem.string());
  for (const auto& s : bundled_tables()) {
    fs::path p = dir / (s + ".ctab");
    if (!fs::is_regular_file(p)) continue;
    CharacterTable t = parse_table(read_file(p.string()), p.string());
    if (t.group_name == name) return t;
  }
  throw DataError("no character table found for '" + name + "' (searched " + dir.string() + ")");
}

}  // namespace g2s
