#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pellcf/cf.hpp"
#include "pellcf/corpus.hpp"
#include "pellcf/genus0.hpp"
#include "pellcf/gjns.hpp"
#include "pellcf/parse.hpp"
#include "pellcf/roots.hpp"

using nlohmann::ordered_json;
using namespace pellcf;

namespace {

struct Options {
  long steps = 32;
  long precision = 256;
  std::string tolerance = "2^-64";
  long window_validate = 3;
  bool json = false;
};

Rat parse_tolerance(const std::string& text) {
  auto r = rat_parse(text);
  if (!r || *r <= 0) throw std::invalid_argument("tolerance must be a positive rational, got '" + text + "'");
  return *r;
}

ordered_json complex_json(const AppComplex& z) {
  return ordered_json{{"re", z.re.str()}, {"im", z.im.str()}};
}

ordered_json period_json(const std::optional<std::pair<int, int>>& p) {
  if (!p) return nullptr;
  return ordered_json{{"preperiod", p->first}, {"period", p->second}};
}

// Degree sequence the way a desk check reads it: "5, (1, 2)*".
std::string degrees_pretty(const std::vector<int>& deg, const std::optional<std::pair<int, int>>& period) {
  std::ostringstream os;
  if (!period) {
    for (size_t i = 0; i < deg.size(); ++i) os << (i ? ", " : "") << deg[i];
    return os.str();
  }
  auto [pre, per] = *period;
  for (int i = 0; i < pre; ++i) os << (i ? ", " : "") << deg[static_cast<size_t>(i)];
  if (pre > 0) os << ", ";
  os << "(";
  for (int i = 0; i < per; ++i) os << (i ? ", " : "") << deg[static_cast<size_t>(pre + i)];
  os << ")*";
  return os.str();
}

ordered_json analysis_json(const Genus0Analysis& an) {
  ordered_json mult = ordered_json::array();
  for (const auto& [factor, m] : an.e_multiplicities)
    mult.push_back(ordered_json{{"factor", to_string(factor)}, {"multiplicity", m}});
  ordered_json rho = ordered_json::array(), b = ordered_json::array();
  for (const auto& z : an.rho_numeric) rho.push_back(complex_json(z));
  for (const auto& z : an.b_numeric) b.push_back(complex_json(z));
  return ordered_json{{"c", rat_str(an.c)},
                      {"D1", to_string(an.D1)},
                      {"d", an.d},
                      {"g", an.g},
                      {"is_squarefree", an.is_squarefree},
                      {"multiplicities", mult},
                      {"r", an.r},
                      {"unity_factor", to_string(an.unity_factor)},
                      {"pellian_part", to_string(an.D_p)},
                      {"pellian", an.pellian},
                      {"max_recurring_degree_bound", an.max_recurring_degree_bound},
                      {"rho", rho},
                      {"b", b}};
}

ordered_json make_report(const std::string& command, const std::string& input, const Options& opt) {
  return ordered_json{{"command", command},
                      {"input", input},
                      {"parameters",
                       ordered_json{{"steps", opt.steps},
                                    {"precision_bits", opt.precision},
                                    {"tolerance", rat_str(parse_tolerance(opt.tolerance))},
                                    {"window_validate", opt.window_validate}}},
                      {"results", ordered_json::object()},
                      {"warnings", ordered_json::array()},
                      {"timing", ordered_json::object()}};
}

void emit(ordered_json& report, const Options& opt, std::chrono::steady_clock::time_point t0,
          const std::string& human) {
  auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(6);
  os << dt;
  report["timing"]["seconds"] = os.str();
  if (opt.json) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << human;
    if (!report["warnings"].empty()) {
      for (const auto& w : report["warnings"]) std::cout << "warning: " << w.get<std::string>() << "\n";
    }
  }
}

int cmd_expand(const std::string& poly_text, const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  Poly D = parse_poly(poly_text);
  ordered_json report = make_report("expand", to_string(D), opt);
  CFExpansion e = expand(D, static_cast<int>(opt.steps));
  auto cf_period = detect_period(e);
  auto deg_period = detect_degree_period(e, static_cast<int>(opt.window_validate));
  auto pell = pell_solution(D, static_cast<int>(opt.steps));

  ordered_json quots = ordered_json::array();
  for (const auto& a : e.a) quots.push_back(to_string(a));
  report["results"]["degree_sequence"] = e.degree_sequence;
  report["results"]["partial_quotients"] = quots;
  report["results"]["cf_period"] = period_json(cf_period);
  if (cf_period) report["results"]["cf_period"]["proof"] = "exact state repetition";
  report["results"]["degree_period"] = period_json(deg_period);
  if (deg_period) {
    report["results"]["degree_period"]["validated_repeats"] = opt.window_validate;
    report["results"]["degree_period"]["conjectural"] = true;
    report["results"]["degrees_pretty"] = degrees_pretty(e.degree_sequence, deg_period);
    report["warnings"].push_back("degree period is conjectural: finite-window evidence only");
  }
  if (pell) {
    report["results"]["pell"] =
        ordered_json{{"x", to_string(pell->x)}, {"y", to_string(pell->y)}, {"c", rat_str(pell->c)}};
    if (!pell->note.empty()) report["results"]["pell"]["note"] = pell->note;
  } else {
    report["results"]["pell"] = nullptr;
  }

  std::ostringstream human;
  human << "D = " << to_string(D) << "\n";
  human << "degrees: " << degrees_pretty(e.degree_sequence, deg_period);
  if (deg_period)
    human << "   [conjectural; preperiod " << deg_period->first << ", period " << deg_period->second << "]";
  human << "\n";
  if (cf_period)
    human << "cf period: preperiod " << cf_period->first << ", period " << cf_period->second
          << " (exact state repetition)\n";
  else
    human << "cf period: none within " << opt.steps << " steps (inconclusive)\n";
  if (pell)
    human << "pell: x = " << to_string(pell->x) << ", y = " << to_string(pell->y) << ", c = " << rat_str(pell->c)
          << "\n";
  emit(report, opt, t0, human.str());
  return 0;
}

int cmd_pell(const std::string& poly_text, const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  Poly D = parse_poly(poly_text);
  ordered_json report = make_report("pell", to_string(D), opt);
  auto pell = pell_solution(D, static_cast<int>(opt.steps));
  std::ostringstream human;
  if (pell) {
    report["results"]["found"] = true;
    report["results"]["x"] = to_string(pell->x);
    report["results"]["y"] = to_string(pell->y);
    report["results"]["c"] = rat_str(pell->c);
    if (!pell->note.empty()) {
      report["results"]["note"] = pell->note;
      report["warnings"].push_back(pell->note);
    }
    human << "x = " << to_string(pell->x) << "\ny = " << to_string(pell->y) << "\nc = " << rat_str(pell->c)
          << "\n";
  } else {
    report["results"]["found"] = false;
    report["results"]["status"] = "inconclusive (window exhausted)";
    human << "inconclusive (window exhausted after " << opt.steps << " steps)\n";
  }
  emit(report, opt, t0, human.str());
  return 0;
}

int cmd_analyze(const std::string& poly_text, const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  Poly D = parse_poly(poly_text);
  ordered_json report = make_report("analyze", to_string(D), opt);
  Genus0Analysis an = analyze(D, opt.precision);
  report["results"] = analysis_json(an);
  std::ostringstream human;
  human << "D = " << rat_str(an.c) << " * (t^2 - 1) * (" << to_string(an.D1) << ")^2\n";
  human << "distinct roots g = " << an.g << ", squarefree = " << (an.is_squarefree ? "yes" : "no") << "\n";
  human << "roots of unity among b: r = " << an.r << "\n";
  human << "pellian part: " << to_string(an.D_p) << "\n";
  human << "pellian: " << (an.pellian ? "true" : "false") << "\n";
  human << "recurring degrees are eventually <= " << an.max_recurring_degree_bound << "\n";
  emit(report, opt, t0, human.str());
  return 0;
}

int cmd_verify(const std::string& poly_text, const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  Poly D = parse_poly(poly_text);
  ordered_json report = make_report("verify", to_string(D), opt);
  ConsistencyReport rep =
      verify_consistency(D, static_cast<int>(opt.steps), opt.precision, parse_tolerance(opt.tolerance));
  report["results"]["analysis"] = analysis_json(rep.analysis);
  report["results"]["degree_sequence"] = rep.degree_sequence;
  report["results"]["cf_period"] = period_json(rep.cf_period);
  report["results"]["degree_period"] = period_json(rep.degree_period);
  if (rep.degree_period) report["results"]["degree_period"]["conjectural"] = true;
  report["results"]["geometry_checked"] = rep.geometry_checked;
  ordered_json checks = ordered_json::array();
  int failed = 0;
  for (const auto& c : rep.f_checks) {
    checks.push_back(ordered_json{{"index", c.index},
                                  {"power", c.power},
                                  {"degree", c.degree},
                                  {"abs_f", c.f_abs},
                                  {"pass", c.pass}});
    if (!c.pass) ++failed;
  }
  report["results"]["f_vanishing"] = checks;
  ordered_json census = ordered_json::array();
  for (const auto& [m, deg] : rep.high_degree_census)
    census.push_back(ordered_json{{"index", m}, {"degree", deg}});
  report["results"]["high_degree_census"] = census;
  ordered_json matches = ordered_json::array();
  for (const auto& m : rep.dp_matches)
    matches.push_back(ordered_json{{"index", m.index},
                                   {"degree", m.degree},
                                   {"divisible", m.divisible},
                                   {"convergent_of_pellian_part", m.convergent}});
  report["results"]["pellian_part_matches"] = matches;
  for (const auto& w : rep.warnings) report["warnings"].push_back(w);

  std::ostringstream human;
  human << "D = " << to_string(D) << "\n";
  human << "degrees: " << degrees_pretty(rep.degree_sequence, rep.degree_period) << "\n";
  human << "r = " << rep.analysis.r << ", pellian = " << (rep.analysis.pellian ? "true" : "false") << "\n";
  if (rep.geometry_checked)
    human << "f-vanishing checks: " << rep.f_checks.size() - static_cast<size_t>(failed) << "/"
          << rep.f_checks.size() << " passed\n";
  human << "degrees >= r+2 past index 0: " << rep.high_degree_census.size() << "\n";
  human << "quotients matched against the pellian part: " << rep.dp_matches.size() << "\n";
  emit(report, opt, t0, human.str());
  return 0;
}

int cmd_gen_example(long l, long p, long q, const std::string& h_text, const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  auto h = rat_parse(h_text);
  if (!h) throw std::invalid_argument("h must be a rational, got '" + h_text + "'");
  ordered_json report = make_report("gen-example", "", opt);
  report["input"] = "l=" + std::to_string(l) + " p=" + std::to_string(p) + " q=" + std::to_string(q) +
                    " h=" + rat_str(*h);
  GeneratedExample ex =
      gen_example(static_cast<int>(l), static_cast<int>(p), static_cast<int>(q), *h, opt.precision);
  ordered_json b = ordered_json::array();
  for (const auto& z : ex.b) b.push_back(complex_json(z));
  ordered_json coeffs = ordered_json::array();
  for (const auto& z : ex.d_coeffs) coeffs.push_back(complex_json(z));
  report["results"]["b"] = b;
  report["results"]["D_numeric"] = coeffs;
  std::ostringstream human;
  human << "b values:\n";
  for (const auto& z : ex.b) human << "  " << z.str(12) << "\n";
  if (ex.d_exact) {
    report["results"]["D_exact"] = to_string(*ex.d_exact);
    Genus0Analysis an = analyze(*ex.d_exact, opt.precision);
    report["results"]["analysis"] = analysis_json(an);
    human << "D = " << to_string(*ex.d_exact) << "\n";
    human << "r = " << an.r << ", pellian = " << (an.pellian ? "true" : "false") << "\n";
  } else {
    report["results"]["D_exact"] = nullptr;
    report["warnings"].push_back("coefficients did not reconstruct to rationals; emitting numeric D only");
    human << "D (numeric coefficients, ascending):\n";
    for (const auto& z : ex.d_coeffs) human << "  " << z.str(12) << "\n";
  }
  emit(report, opt, t0, human.str());
  return 0;
}

int cmd_corpus(const std::string& path, const Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  ordered_json report = make_report("corpus", path, opt);
  Corpus corpus = load_corpus(path);
  for (const auto& w : corpus.warnings) report["warnings"].push_back(w);
  ordered_json issues = ordered_json::array();
  for (const auto& issue : corpus.issues) {
    issues.push_back(ordered_json{{"line", issue.line}, {"message", issue.message}});
    report["warnings"].push_back("line " + std::to_string(issue.line) + ": " + issue.message);
  }
  report["results"]["parse_errors"] = issues;

  ordered_json entries = ordered_json::array();
  bool all_agree = true;
  std::ostringstream human;
  human << "label | pellian | period found | agree\n";
  for (const auto& entry : corpus.entries) {
    ordered_json row{{"label", entry.label}, {"input", to_string(entry.poly)}};
    try {
      Genus0Analysis an = analyze(entry.poly, opt.precision);
      CFExpansion e = expand(entry.poly, static_cast<int>(opt.steps));
      bool periodic = detect_period(e).has_value();
      bool agree = an.pellian == periodic;
      all_agree = all_agree && agree;
      row["pellian"] = an.pellian;
      row["r"] = an.r;
      row["period_found"] = periodic;
      row["agree"] = agree;
      human << entry.label << " | " << (an.pellian ? "yes" : "no") << " | " << (periodic ? "yes" : "no")
            << " | " << (agree ? "yes" : "NO") << "\n";
    } catch (const std::exception& err) {
      row["error"] = err.what();
      all_agree = false;
      human << entry.label << " | error: " << err.what() << "\n";
    }
    entries.push_back(row);
  }
  report["results"]["entries"] = entries;
  report["results"]["all_agree"] = all_agree;
  human << (all_agree ? "oracles agree on every entry\n" : "ORACLE DISAGREEMENT\n");
  emit(report, opt, t0, human.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"continued fractions of sqrt(D) over Q(t), polynomial Pell equations, genus-0 analysis"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--steps", opt.steps, "expansion window (partial quotients past a_0)")->check(CLI::PositiveNumber);
  app.add_option("--precision", opt.precision, "binary digits for the numeric layer")->check(CLI::PositiveNumber);
  app.add_option("--tolerance", opt.tolerance, "zero test threshold, a rational like 1/100000 or 2^-64");
  app.add_option("--window-validate", opt.window_validate, "repeats a degree period must survive")
      ->check(CLI::Range(2l, 1000l));
  app.add_flag("--json", opt.json, "machine-readable report on stdout");

  std::string poly_text, corpus_path, h_text = "2";
  long gl = 3, gp = 2, gq = 2;
  auto* expand_cmd = app.add_subcommand("expand", "continued fraction expansion of sqrt(D)");
  expand_cmd->add_option("poly", poly_text, "polynomial D in t")->required();
  auto* pell_cmd = app.add_subcommand("pell", "search for x^2 - D y^2 = 1");
  pell_cmd->add_option("poly", poly_text, "polynomial D in t")->required();
  auto* analyze_cmd = app.add_subcommand("analyze", "decompose D and census the roots of unity");
  analyze_cmd->add_option("poly", poly_text, "polynomial D in t")->required();
  auto* verify_cmd = app.add_subcommand("verify", "cross-check the expansion against the geometry");
  verify_cmd->add_option("poly", poly_text, "polynomial D in t")->required();
  auto* gen_cmd = app.add_subcommand("gen-example", "build a non-periodic family member");
  gen_cmd->add_option("--l", gl, "half-order of the root of unity")->required();
  gen_cmd->add_option("--p", gp, "count of unit-circle b values")->required();
  gen_cmd->add_option("--q", gq, "count of scaled b values")->required();
  gen_cmd->add_option("--h", h_text, "scaling factor, a rational that is not 0 or +-1")->required();
  auto* corpus_cmd = app.add_subcommand("corpus", "run the dual pellianity oracles over a corpus file");
  corpus_cmd->add_option("path", corpus_path, "file of 'label: polynomial' lines")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (expand_cmd->parsed()) return cmd_expand(poly_text, opt);
    if (pell_cmd->parsed()) return cmd_pell(poly_text, opt);
    if (analyze_cmd->parsed()) return cmd_analyze(poly_text, opt);
    if (verify_cmd->parsed()) return cmd_verify(poly_text, opt);
    if (gen_cmd->parsed()) return cmd_gen_example(gl, gp, gq, h_text, opt);
    if (corpus_cmd->parsed()) return cmd_corpus(corpus_path, opt);
    std::cerr << "error: no command\n";
    return 1;
  } catch (const ParseError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  } catch (const std::domain_error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  } catch (const std::runtime_error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return 2;
  }
}
