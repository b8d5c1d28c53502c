#include "cli.hpp"

#include "g2spectra/error.hpp"
#include "g2spectra/verifier.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

namespace g2s::cli {

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DataError("cannot write '" + path + "'");
  f << content;
  if (!f) throw DataError("error writing '" + path + "'");
}

std::string fmt(double d, int prec = 12) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", prec, d);
  return buf;
}

int cmd_validate(const std::string& table, std::ostream& out) {
  auto t = load_table(table);
  auto problems = validate(t);
  if (problems.empty()) {
    out << "OK\n";
    return kOk;
  }
  for (const auto& p : problems) out << p << "\n";
  out << "INVALID: " << problems.size() << " violation" << (problems.size() == 1 ? "" : "s") << "\n";
  return kVerificationFailed;
}

int cmd_mckay(const std::string& table, const std::string& rho, const std::string& dot, std::ostream& out) {
  auto t = load_table(table);
  auto m = parse_character(t, rho);
  auto g = mckay_graph(t, character_values(t, m), format_character(t, m));
  long d = character_degree(t, m);
  out << "McKay graph of " << t.group_name << " for " << g.generator << " (" << g.vertices.size()
      << " vertices)\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    out << "  " << g.vertices[i] << " (" << g.degrees[i] << "):";
    for (std::size_t j = 0; j < g.vertices.size(); ++j) {
      long a = g.adjacency[i][j];
      if (a == 0) continue;
      out << " " << (a > 1 ? std::to_string(a) + "*" : "") << g.vertices[j];
    }
    out << "\n";
  }
  auto image = apply_adjacency(g, g.degrees);
  bool pf = true;
  for (std::size_t i = 0; i < image.size(); ++i) pf &= image[i] == d * g.degrees[i];
  bool conn = is_connected(g);
  out << "connected: " << (conn ? "yes" : "no") << "\n";
  out << "A * degrees = " << d << " * degrees: " << (pf ? "yes" : "no") << "\n";
  if (!dot.empty()) {
    write_file(dot, to_dot(g));
    out << "wrote " << dot << "\n";
  }
  return pf ? kOk : kVerificationFailed;
}

int cmd_embeddings(const std::string& table, std::ostream& out) {
  auto t = load_table(table);
  auto s = find_embeddings(t);
  out << t.group_name << ": " << s.embeddings.size() << " embedding"
      << (s.embeddings.size() == 1 ? "" : "s") << " among " << s.candidates.size()
      << " degree-7 candidates\n";
  std::size_t i = 0;
  for (const auto& c : s.candidates) {
    ++i;
    out << "  candidate " << i << " " << c.name << ": " << to_string(c.status);
    if (!c.detail.empty()) out << (c.status == Candidate::Status::kEmbedding ? ", rho2 = " : " (") << c.detail
                               << (c.status == Candidate::Status::kEmbedding ? "" : ")");
    out << "\n";
  }
  for (std::size_t k = 0; k < s.embeddings.size(); ++k) {
    const auto& e = s.embeddings[k];
    out << "embedding " << k + 1 << ": rho1 = " << e.name << ", rho2 = " << format_character(t, e.rho2)
        << "\n";
    for (std::size_t c = 0; c < t.classes.size(); ++c)
      out << "  " << std::left << std::setw(6) << t.classes[c].name << std::right << " "
          << e.points[c].str() << "  x = " << exact_cell(e.x[c]) << "  y = " << exact_cell(e.y[c]) << "\n";
  }
  return kOk;
}

int cmd_moments(const std::string& table, const std::string& id, long max, const std::string& csv,
                std::ostream& out) {
  if (max < 0) throw DataError("--max must be nonnegative");
  auto t = load_table(table);
  auto s = find_embeddings(t);
  const auto& e = select_embedding(s, id);
  auto grid = conjugacy_moments(t, e.x, e.y, max);
  out << "conjugacy moments of " << t.group_name << " " << e.name << ", 0 <= m,n <= " << max << "\n";
  out << "m\\n";
  for (long n = 0; n <= max; ++n) out << "\t" << n;
  out << "\n";
  for (long m = 0; m <= max; ++m) {
    out << m;
    for (long n = 0; n <= max; ++n) out << "\t" << exact_cell(grid[m][n]);
    out << "\n";
  }
  if (!csv.empty()) {
    std::ostringstream os;
    os << "m,n,conjugacy,conjugacy_float\n";
    for (long m = 0; m <= max; ++m)
      for (long n = 0; n <= max; ++n)
        os << m << "," << n << "," << exact_cell(grid[m][n]) << ","
           << fmt(grid[m][n].to_complex().real(), 17) << "\n";
    write_file(csv, os.str());
    out << "wrote " << csv << "\n";
  }
  return kOk;
}

int cmd_verify(const std::string& group, const std::string& id, bool printed, long max, std::ostream& out) {
  if (max < 0) throw DataError("--max must be nonnegative");
  auto cases = theorem_cases_for(group);
  auto t = load_table(cases.front().stem);
  auto s = find_embeddings(t);
  std::vector<TheoremCase> chosen;
  if (id.empty()) {
    chosen = cases;
  } else {
    const auto& e = select_embedding(s, id);
    for (const auto& c : cases)
      if (c.embedding == e.name) chosen.push_back(c);
    if (chosen.empty()) throw DataError("no theorem measure for " + t.group_name + " with rho1 = " + e.name);
  }
  bool all = true;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    const auto& c = chosen[i];
    if (i) out << "\n";
    auto mu = theorem_measure(c.group, c.embedding, printed);
    auto r = verify(t, select_embedding(s, c.embedding), mu, max);
    if (printed)
      for (const auto& d : printed_differences(c.group, c.embedding)) r.notes.push_back("erratum: " + d);
    out << format_text(r);
    all &= r.ok();
  }
  return all ? kOk : kVerificationFailed;
}

JointMeasure measure_for_plot(const std::string& file, const std::string& group, const std::string& id,
                              bool printed) {
  if (!file.empty()) return parse_measure(read_file(file), file);
  auto cases = theorem_cases_for(group);
  if (id.empty()) return theorem_measure(cases.front().group, cases.front().embedding, printed);
  auto t = load_table(cases.front().stem);
  auto s = find_embeddings(t);
  return theorem_measure(cases.front().group, select_embedding(s, id).name, printed);
}

int cmd_support_plot(const JointMeasure& mu, const std::string& svg, std::ostream& out) {
  out << "support of " << mu.name << "\n";
  for (std::size_t i = 0; i < mu.terms.size(); ++i) {
    const auto& term = mu.terms[i];
    auto pts = support_points(term.support);
    std::set<TorusPoint> d;
    for (const auto& [p, _] : pts) d.insert(p);
    out << "  term " << i + 1 << " " << term.support.str() << ": " << pts.size() << " points, "
        << d.size() << " distinct\n";
  }
  if (!svg.empty()) {
    write_file(svg, support_svg(mu));
    out << "wrote " << svg << "\n";
  }
  return kOk;
}

int cmd_preimage(double x, double y, std::ostream& out) {
  auto p = torus_preimage(x, y);
  out << "theta1 = " << fmt(p.theta1, 15) << "\n";
  out << "theta2 = " << fmt(p.theta2, 15) << "\n";
  out << "phi1 = " << fmt(phi1_float(p.theta1, p.theta2), 15) << "\n";
  out << "phi2 = " << fmt(phi2_float(p.theta1, p.theta2), 15) << "\n";
  out << "residual = " << fmt(p.error, 3) << "\n";
  return kOk;
}

std::string xml_escape(const std::string& s) {
  std::string o;
  for (char c : s) {
    if (c == '&') o += "&amp;";
    else if (c == '<') o += "&lt;";
    else if (c == '>') o += "&gt;";
    else if (c == '"') o += "&quot;";
    else o += c;
  }
  return o;
}

}  // namespace

std::string support_svg(const JointMeasure& mu) {
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                  "#8c564b", "#e377c2", "#17becf", "#7f7f7f", "#bcbd22"};
  constexpr double kLeft = 50, kBottom = 550, kSide = 500;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 600 600\" width=\"600\" height=\"600\">\n";
  os << "<title>" << xml_escape(mu.name) << "</title>\n";
  os << "<rect x=\"0\" y=\"0\" width=\"600\" height=\"600\" fill=\"white\"/>\n";
  os << "<rect x=\"" << kLeft << "\" y=\"" << kBottom - kSide << "\" width=\"" << kSide << "\" height=\""
     << kSide << "\" fill=\"none\" stroke=\"black\"/>\n";
  os << "<text x=\"300\" y=\"585\" text-anchor=\"middle\" font-size=\"16\">&#952;1</text>\n";
  os << "<text x=\"20\" y=\"300\" text-anchor=\"middle\" font-size=\"16\">&#952;2</text>\n";
  os << "<text x=\"" << kLeft << "\" y=\"568\" text-anchor=\"middle\" font-size=\"12\">0</text>\n";
  os << "<text x=\"" << kLeft + kSide << "\" y=\"568\" text-anchor=\"middle\" font-size=\"12\">1</text>\n";
  os << "<text x=\"38\" y=\"" << kBottom - kSide + 4 << "\" text-anchor=\"middle\" font-size=\"12\">1</text>\n";
  for (std::size_t i = 0; i < mu.terms.size(); ++i) {
    const auto& term = mu.terms[i];
    std::set<TorusPoint> d;
    for (const auto& [p, _] : support_points(term.support)) d.insert(p);
    os << "<g fill=\"" << palette[i % std::size(palette)] << "\" data-support=\"" << term.support.str()
       << "\">\n";
    for (const auto& p : d) {
      double x = kLeft + kSide * p.theta1().get_d();
      double y = kBottom - kSide * p.theta2().get_d();
      os << "<circle cx=\"" << fmt(x, 10) << "\" cy=\"" << fmt(y, 10) << "\" r=\"3\"><title>"
         << p.str() << "</title></circle>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite subgroups of G2: character tables, embeddings and joint spectral measures",
               "g2spectra"};
  app.require_subcommand(1);

  std::string table, rho, dot, id, csv, group, measure_file, svg;
  long max = kDefaultMomentBound;
  bool printed = false;
  double x = 0, y = 0;

  auto* validate_cmd = app.add_subcommand("validate", "Check a character table");
  validate_cmd->add_option("table", table, "Table file, bundled stem or group name")->required();

  auto* mckay_cmd = app.add_subcommand("mckay", "McKay graph of a character");
  mckay_cmd->add_option("table", table, "Table file, bundled stem or group name")->required();
  mckay_cmd->add_option("--rho", rho, "Character expression, e.g. Sigma1+Sigma6")->required();
  mckay_cmd->add_option("--dot", dot, "Write the graph in DOT format");

  auto* emb_cmd = app.add_subcommand("embeddings", "Embeddings into the 7-dimensional representation");
  emb_cmd->add_option("table", table, "Table file, bundled stem or group name")->required();

  auto* mom_cmd = app.add_subcommand("moments", "Conjugacy moments of an embedding");
  mom_cmd->add_option("table", table, "Table file, bundled stem or group name")->required();
  mom_cmd->add_option("--embedding", id, "Embedding index (1-based) or rho1 expression")->required();
  mom_cmd->add_option("--max", max, "Largest exponent")->required();
  mom_cmd->add_option("--csv", csv, "Write the moments as CSV");

  auto* ver_cmd = app.add_subcommand("verify-theorem", "Check a theorem measure against the group");
  ver_cmd->add_option("--group", group, "Group name or bundled stem")->required();
  ver_cmd->add_option("--embedding", id, "Embedding index or rho1 expression; default all");
  ver_cmd->add_flag("--as-printed", printed, "Use the measure exactly as originally printed");
  ver_cmd->add_option("--max", max, "Largest moment exponent");

  auto* plot_cmd = app.add_subcommand("support-plot", "Support points of a measure");
  auto* mopt = plot_cmd->add_option("--measure", measure_file, "Measure file");
  auto* gopt = plot_cmd->add_option("--group", group, "Theorem measure of this group");
  mopt->excludes(gopt);
  plot_cmd->add_option("--embedding", id, "Embedding for --group; default the first")->needs(gopt);
  plot_cmd->add_flag("--as-printed", printed, "Printed variant for --group")->needs(gopt);
  plot_cmd->add_option("--svg", svg, "Write an SVG scatter");

  auto* pre_cmd = app.add_subcommand("preimage", "Torus point with given (phi1, phi2)");
  pre_cmd->add_option("--x", x, "phi1 value")->required();
  pre_cmd->add_option("--y", y, "phi2 value")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (*validate_cmd) return cmd_validate(table, out);
    if (*mckay_cmd) return cmd_mckay(table, rho, dot, out);
    if (*emb_cmd) return cmd_embeddings(table, out);
    if (*mom_cmd) return cmd_moments(table, id, max, csv, out);
    if (*ver_cmd) return cmd_verify(group, id, printed, max, out);
    if (*plot_cmd) {
      if (measure_file.empty() && group.empty()) {
        err << "error: support-plot needs --measure or --group\n";
        return kUsageError;
      }
      return cmd_support_plot(measure_for_plot(measure_file, group, id, printed), svg, out);
    }
    if (*pre_cmd) return cmd_preimage(x, y, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace g2s::cli
