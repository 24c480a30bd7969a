#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification failure
// (counterexample, not verified, not isomorphic), 2 usage or input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chargraph/arith.hpp"
#include "chargraph/classify.hpp"
#include "chargraph/degrees.hpp"
#include "chargraph/graph.hpp"
#include "chargraph/io.hpp"
#include "chargraph/shapes.hpp"

namespace chargraph::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string slurp(std::istream& is) {
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open " + path);
  return slurp(f);
}

inline std::string trim_left(const std::string& s) {
  const auto pos = s.find_first_not_of(" \t\r\n");
  return pos == std::string::npos ? std::string{} : s.substr(pos);
}

inline CharGraph graph_from_text(const std::string& text) {
  const std::string t = trim_left(text);
  if (!t.empty() && t.front() == '{') return graph_from_json(json::parse(t));
  auto end = t.find_last_not_of(" \t\r\n");
  return eval_shape(parse_shape(end == std::string::npos ? t : t.substr(0, end + 1)));
}

/// A graph argument: "-" reads stdin; a leading '{' is inline JSON; an
/// existing path is read as a file; anything else is a shape expression.
inline CharGraph load_graph(const std::string& arg, std::istream& in) {
  if (arg == "-") return graph_from_text(slurp(in));
  if (!trim_left(arg).empty() && trim_left(arg).front() == '{') return graph_from_text(arg);
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return graph_from_text(read_file(arg));
  return eval_shape(parse_shape(arg));
}

inline json load_json(const std::string& arg, std::istream& in) {
  if (arg == "-") return json::parse(slurp(in));
  return json::parse(read_file(arg));
}

inline std::string join_set(const PrimeSet& s) { return format_set(s); }

inline void print_graph_table(std::ostream& os, const CharGraph& g) {
  os << "vertices: " << join_set(g.vertices()) << "\n";
  os << "edges:";
  if (g.edges().empty()) os << " none";
  for (const Edge& e : g.edges()) os << " " << e.a << "-" << e.b;
  os << "\n";
  os << "components:";
  for (const auto& c : connected_components(g)) os << " " << join_set(c);
  os << "\n";
}

inline void print_graph(std::ostream& os, const CharGraph& g, const std::string& format,
                        json extra = json::object()) {
  if (format == "dot") {
    os << to_dot(g);
  } else if (format == "table") {
    print_graph_table(os, g);
  } else {
    json j = std::move(extra);
    const json body = to_json(g);
    for (const auto& [k, v] : body.items()) j[k] = v;
    j["dot"] = to_dot(g);
    os << j.dump(2) << "\n";
  }
}

inline void require_not_dot(const std::string& format, const std::string& verb) {
  if (format == "dot") throw UsageError(verb + ": --format dot is not available");
}

inline std::string factor_string(const Factorization& fac) {
  if (fac.factors.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < fac.factors.size(); ++i) {
    if (i) s += " * ";
    s += std::to_string(fac.factors[i].prime);
    if (fac.factors[i].exponent > 1) s += "^" + std::to_string(fac.factors[i].exponent);
  }
  return s;
}

inline void print_report_table(std::ostream& os, const CaseReport& r) {
  os << "f: " << r.f << "\n";
  os << "pi(2^f - 1): " << join_set(r.minus_primes) << "\n";
  os << "pi(2^f + 1): " << join_set(r.plus_primes) << "\n";
  os << "sizes: (" << r.minus_primes.size() << "," << r.plus_primes.size() << ")\n";
  os << "case: " << to_string(r.main_case) << "\n";
  os << "required radical: " << r.required_radical << "\n";
  os << "expected shape: " << (r.expected_shape ? render_shape(*r.expected_shape) : "-") << "\n";
  os << "socle graph components:";
  for (const auto& c : connected_components(r.socle_graph)) os << " " << join_set(c);
  os << "\n";
  if (r.graph) {
    os << "graph vertices: " << join_set(r.graph->vertices()) << "\n";
    os << "graph edges: " << r.graph->size() << "\n";
    os << "verified: " << (r.verified ? "yes" : "no") << "\n";
  }
}

template <class Row>
int emit_scan(std::ostream& os, const std::string& format, const std::string& name,
              const std::vector<Row>& rows, auto conforming, auto table_row,
              const std::string& header) {
  std::size_t counterexamples = 0;
  for (const auto& r : rows) counterexamples += conforming(r) ? 0 : 1;
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    json j = {{"scan", name}, {"rows", std::move(arr)}, {"counterexamples", counterexamples}};
    os << j.dump(2) << "\n";
  } else {
    os << header << "\n";
    for (const auto& r : rows) os << table_row(r) << "\n";
    os << "hits: " << rows.size() << "\n";
    os << "counterexamples: " << counterexamples << "\n";
  }
  return counterexamples == 0 ? kOk : kVerificationFailed;
}

inline std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, Streams io) {
  CLI::App app{"Character degree graphs of finite groups", "chargraph"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"json", "dot", "table"};

  int code = kOk;
  auto add_format = [&](CLI::App* sub, std::string& fmt) {
    sub->add_option("--format", fmt, "Output format")->check(CLI::IsMember(formats));
  };

  u64 factor_n = 0;
  std::string factor_fmt = "table";
  auto* factor = app.add_subcommand("factor", "Prime factorization of n");
  factor->add_option("n", factor_n)->required();
  add_format(factor, factor_fmt);
  factor->callback([&] {
    detail::require_not_dot(factor_fmt, "factor");
    const auto fac = factorize(factor_n);
    if (factor_fmt == "json") {
      io.out << to_json(fac).dump(2) << "\n";
    } else {
      io.out << fac.n << " = " << detail::factor_string(fac) << "\n";
    }
  });

  u64 pi_n = 0;
  std::string pi_fmt = "table";
  auto* pi = app.add_subcommand("pi", "Set of prime divisors of n");
  pi->add_option("n", pi_n)->required();
  add_format(pi, pi_fmt);
  pi->callback([&] {
    detail::require_not_dot(pi_fmt, "pi");
    const auto primes = prime_divisors(pi_n);
    if (pi_fmt == "json") {
      io.out << json{{"n", pi_n}, {"primes", primes}}.dump(2) << "\n";
    } else {
      io.out << "pi(" << pi_n << ") = " << detail::join_set(primes) << "\n";
    }
  });

  u64 zs_base = 0;
  unsigned zs_n = 0;
  std::string zs_fmt = "table";
  auto* zs = app.add_subcommand("zsigmondy", "Smallest primitive prime divisor of base^n - 1");
  zs->add_option("base", zs_base)->required();
  zs->add_option("n", zs_n)->required();
  add_format(zs, zs_fmt);
  zs->callback([&] {
    detail::require_not_dot(zs_fmt, "zsigmondy");
    const auto p = zsigmondy(zs_base, zs_n);
    if (zs_fmt == "json") {
      io.out << json{{"base", zs_base}, {"n", zs_n}, {"prime", p ? json(*p) : json(nullptr)}}.dump(2)
             << "\n";
    } else {
      io.out << "zsigmondy(" << zs_base << ", " << zs_n << ") = "
             << (p ? std::to_string(*p) : std::string("none")) << "\n";
    }
  });

  u64 psl_q = 0;
  std::string psl_fmt = "json";
  auto* psl = app.add_subcommand("psl2-graph", "Character graph of PSL2(q)");
  psl->add_option("q", psl_q)->required();
  add_format(psl, psl_fmt);
  psl->callback([&] {
    detail::print_graph(io.out, graph_psl2(psl_q), psl_fmt, {{"q", psl_q}});
  });

  std::string shape_text;
  std::string shape_fmt = "json";
  auto* shape = app.add_subcommand("parse-shape", "Parse and evaluate a shape expression");
  shape->add_option("expr", shape_text)->required();
  add_format(shape, shape_fmt);
  shape->callback([&] {
    const GraphExpr e = parse_shape(shape_text);
    detail::print_graph(io.out, eval_shape(e), shape_fmt, {{"shape", render_shape(e)}});
  });

  std::string iso_a, iso_b;
  std::string iso_fmt = "table";
  auto* iso = app.add_subcommand("iso", "Test two graphs for isomorphism");
  iso->add_option("first", iso_a, "Graph JSON file, inline JSON, shape expression or -")->required();
  iso->add_option("second", iso_b, "Graph JSON file, inline JSON, shape expression or -")->required();
  add_format(iso, iso_fmt);
  iso->callback([&] {
    detail::require_not_dot(iso_fmt, "iso");
    const CharGraph a = detail::load_graph(iso_a, io.in);
    const CharGraph b = detail::load_graph(iso_b, io.in);
    const auto map = are_isomorphic(a, b);
    if (iso_fmt == "json") {
      json mapping = json::array();
      if (map)
        for (const auto& [x, y] : *map) mapping.push_back({x, y});
      io.out << json{{"isomorphic", map.has_value()}, {"mapping", mapping}}.dump(2) << "\n";
    } else if (map) {
      io.out << "isomorphic:";
      for (const auto& [x, y] : *map) io.out << " " << x << "->" << y;
      io.out << "\n";
    } else {
      io.out << "not isomorphic\n";
    }
    if (!map) code = kVerificationFailed;
  });

  unsigned cls_f = 0;
  std::string cls_fmt = "table";
  auto* cls = app.add_subcommand("classify-f", "Classify PSL2(2^f) by |pi(2^f -+ 1)|");
  cls->add_option("f", cls_f)->required();
  add_format(cls, cls_fmt);
  cls->callback([&] {
    detail::require_not_dot(cls_fmt, "classify-f");
    const CaseReport r = classify_f(cls_f);
    if (cls_fmt == "json") {
      io.out << to_json(r).dump(2) << "\n";
    } else {
      detail::print_report_table(io.out, r);
    }
  });

  unsigned vm_f = 0;
  std::string vm_radical;
  std::string vm_fmt = "table";
  auto* vm = app.add_subcommand("verify-main", "Build and verify Delta(PSL2(2^f) x R)");
  vm->add_option("--f", vm_f)->required();
  vm->add_option("--radical", vm_radical,
                 "Radical degree sets (JSON); defaults to a synthetic conforming radical");
  add_format(vm, vm_fmt);
  vm->callback([&] {
    detail::require_not_dot(vm_fmt, "verify-main");
    const auto radical = vm_radical.empty() ? synthetic_radical(vm_f)
                                            : radical_from_json(detail::load_json(vm_radical, io.in));
    CaseReport r;
    try {
      r = verify_main(vm_f, radical);
    } catch (const ValidationError& e) {
      if (vm_fmt == "json") {
        io.err << json{{"error", "validation"}, {"violations", e.violations()}}.dump(2) << "\n";
      } else {
        for (const auto& v : e.violations()) io.err << "violation: " << v << "\n";
      }
      code = kUsage;
      return;
    }
    if (vm_fmt == "json") {
      json j = to_json(r);
      json rad = json::array();
      for (const auto& d : radical) rad.push_back(to_json(d));
      j["radical"] = rad;
      io.out << j.dump(2) << "\n";
    } else {
      detail::print_report_table(io.out, r);
    }
    if (!r.verified) code = kVerificationFailed;
  });

  std::string scan_kind;
  long long scan_max = -1;
  std::string scan_fmt = "table";
  auto* scan = app.add_subcommand("scan", "Enumerate and check the arithmetic lemmas");
  scan->add_option("kind", scan_kind)
      ->required()
      ->check(CLI::IsMember({"interest", "evenfive", "oddfour", "cases"}));
  scan->add_option("--max", scan_max, "Upper bound on f (or q for oddfour)");
  add_format(scan, scan_fmt);
  scan->callback([&] {
    detail::require_not_dot(scan_fmt, "scan");
    using detail::pad;
    auto bound = [&](long long dflt) -> long long {
      if (scan_max < 0) return dflt;
      return scan_max;
    };
    auto exponent_bound = [&] {
      const long long f = bound(kDefaultExponentBound);
      if (f < 2 || f > kMaxExponent) {
        throw std::out_of_range("--max must lie in [2, " + std::to_string(kMaxExponent) + "]");
      }
      return static_cast<unsigned>(f);
    };
    if (scan_kind == "interest") {
      code = detail::emit_scan(
          io.out, scan_fmt, scan_kind, scan_lemma_interest(exponent_bound()),
          [](const InterestRow& r) { return r.clause != InterestClause::none; },
          [](const InterestRow& r) {
            std::string w = r.t ? "t=" + std::to_string(*r.t) + " beta=" + std::to_string(r.beta) : "";
            return pad(std::to_string(r.f), 4) + pad(detail::join_set(r.minus_primes), 28) +
                   pad(detail::join_set(r.plus_primes), 28) + pad(to_string(r.clause), 8) + w;
          },
          pad("f", 4) + pad("pi(2^f-1)", 28) + pad("pi(2^f+1)", 28) + pad("clause", 8) + "witness");
    } else if (scan_kind == "evenfive") {
      code = detail::emit_scan(
          io.out, scan_fmt, scan_kind, scan_lemma_evenfive(exponent_bound()),
          [](const EvenFiveRow& r) { return r.conforming; },
          [](const EvenFiveRow& r) {
            return pad(std::to_string(r.f), 4) + pad(detail::join_set(r.minus_primes), 28) +
                   pad(detail::join_set(r.plus_primes), 28) + (r.conforming ? "yes" : "NO");
          },
          pad("f", 4) + pad("pi(2^f-1)", 28) + pad("pi(2^f+1)", 28) + "conforming");
    } else if (scan_kind == "oddfour") {
      const long long q = bound(static_cast<long long>(kDefaultOddPrimePowerBound));
      if (q < 3 || q > static_cast<long long>(kMaxOddPrimePower)) {
        throw std::out_of_range("--max must lie in [3, " + std::to_string(kMaxOddPrimePower) + "]");
      }
      code = detail::emit_scan(
          io.out, scan_fmt, scan_kind, scan_lemma_oddfour(static_cast<u64>(q)),
          [](const OddFourRow& r) { return r.clause != OddFourClause::none; },
          [](const OddFourRow& r) {
            return pad(std::to_string(r.q), 8) +
                   pad(std::to_string(r.power.p) + "^" + std::to_string(r.power.f), 10) +
                   pad(detail::join_set(r.primes), 24) + to_string(r.clause);
          },
          pad("q", 8) + pad("p^f", 10) + pad("pi(q^2-1)", 24) + "clause");
    } else {
      code = detail::emit_scan(
          io.out, scan_fmt, scan_kind, scan_cases(exponent_bound()),
          [](const CaseRow&) { return true; },
          [](const CaseRow& r) {
            return pad(std::to_string(r.f), 4) +
                   pad("(" + std::to_string(r.minus_size) + "," + std::to_string(r.plus_size) + ")", 10) +
                   to_string(r.main_case);
          },
          pad("f", 4) + pad("sizes", 10) + "case");
    }
  });

  std::string cs_file;
  std::string cs_fmt = "table";
  auto* cs = app.add_subcommand("check-solvable", "Solvable-graph necessary conditions for a degree set");
  cs->add_option("cd-file", cs_file, "Degree set JSON file or -")->required();
  add_format(cs, cs_fmt);
  cs->callback([&] {
    detail::require_not_dot(cs_fmt, "check-solvable");
    const DegreeSet cd = degree_set_from_json(detail::load_json(cs_file, io.in));
    const CharGraph g = graph_from_cd(cd);
    const bool palfy = check_palfy(g);
    const bool shape_ok = check_solvable_shape(g);
    const auto warning = k4free_vertex_bound(g);
    if (cs_fmt == "json") {
      json j = {{"degrees", cd.degrees()}, {"graph", to_json(g)}, {"palfy", palfy},
                {"solvable_shape", shape_ok}};
      j["warning"] = warning ? json(*warning) : json(nullptr);
      io.out << j.dump(2) << "\n";
    } else {
      detail::print_graph_table(io.out, g);
      io.out << "palfy: " << (palfy ? "pass" : "FAIL") << "\n";
      io.out << "solvable shape: " << (shape_ok ? "pass" : "FAIL") << "\n";
    }
    if (warning) io.err << "warning: " << *warning << "\n";
    if (!palfy || !shape_ok) code = kVerificationFailed;
  });

  std::vector<const char*> argv{"chargraph"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, io.out, io.err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, io.out, io.err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, io.out, io.err);
    return kUsage;
  } catch (const ShapeSyntaxError& e) {
    io.err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    io.err << "error: malformed JSON: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return code;
}

inline int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, {std::cin, std::cout, std::cerr});
}

}  // namespace chargraph::cli
