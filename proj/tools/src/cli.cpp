#include "heis/cli.hpp"

#include "heis/k0_harness.hpp"
#include "heis/partitions_fock.hpp"
#include "heis/symmetric_groups.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace heis::cli {

using nlohmann::json;

namespace {

Signature sig(const json& a) {
  Signature s;
  for (const auto& e : a) {
    const std::string v = e.get<std::string>();
    if (v == "U")
      s.push_back(Orient::U);
    else if (v == "D")
      s.push_back(Orient::D);
    else
      throw std::invalid_argument("bad orientation \"" + v + "\" (expected \"U\" or \"D\")");
  }
  return s;
}

json sig_json(const Signature& s) {
  json a = json::array();
  for (Orient o : s) a.push_back(o == Orient::U ? "U" : "D");
  return a;
}

}  // namespace

Diagram diagram_from_json(const json& j) {
  if (!j.is_object() || !j.contains("bottom") || !j.contains("top") || !j.contains("slices"))
    throw std::invalid_argument("diagram needs \"bottom\", \"top\" and \"slices\"");
  Diagram d{sig(j.at("bottom")), sig(j.at("top")), {}};
  for (const auto& sl : j.at("slices")) {
    const std::string name = sl.at("gen").get<std::string>();
    auto g = gen_from_name(name);
    if (!g) throw std::invalid_argument("unknown primitive \"" + name + "\"");
    if (is_dot(*g) && sl.contains("label")) {
      const std::string label = sl.at("label").get<std::string>();
      if (label == "1") continue;
      if (label != "v") throw std::invalid_argument("dot label must be \"1\" or \"v\", got \"" + label + "\"");
    }
    d.slices.push_back({sl.at("at").get<int>(), *g});
  }
  return d;
}

json diagram_to_json(const Diagram& d) {
  json slices = json::array();
  for (const auto& sl : d.slices) {
    json e{{"at", sl.at}, {"gen", gen_name(sl.gen)}};
    if (is_dot(sl.gen)) e["label"] = "v";
    slices.push_back(e);
  }
  return {{"bottom", sig_json(d.bottom)}, {"top", sig_json(d.top)}, {"slices", slices}};
}

DiagLin diaglin_from_json(const json& j) {
  if (!j.contains("terms")) return DiagLin(diagram_from_json(j));
  const auto& terms = j.at("terms");
  if (!terms.is_array()) throw std::invalid_argument("\"terms\" must be an array");
  std::optional<DiagLin> acc;
  if (j.contains("bottom") && j.contains("top"))
    acc.emplace(sig(j.at("bottom")), sig(j.at("top")));
  else if (terms.empty())
    throw std::invalid_argument("empty \"terms\" needs \"bottom\" and \"top\"");
  for (const auto& t : terms) {
    Diagram d = diagram_from_json(t.at("diagram"));
    Rational c(1);
    if (t.contains("coeff")) {
      const auto& cj = t.at("coeff");
      c = cj.is_string() ? Rational(cj.get<std::string>()) : Rational(cj.get<long>());
      c.canonicalize();
    }
    if (!acc) acc.emplace(d.bottom, d.top);
    if (d.bottom != acc->bottom() || d.top != acc->top())
      throw std::invalid_argument("terms have different boundary signatures");
    acc->add(d, c);
  }
  return *acc;
}

json diaglin_to_json(const DiagLin& x) {
  json terms = json::array();
  for (const auto& [d, c] : x.terms()) terms.push_back({{"coeff", to_string(c)}, {"diagram", diagram_to_json(d)}});
  return {{"bottom", sig_json(x.bottom())}, {"top", sig_json(x.top())}, {"terms", terms}};
}

json report_to_json(const Report& r) {
  json j{{"id", r.id}, {"status", r.pass ? "pass" : "fail"}, {"residual_terms", r.residual_terms}};
  if (!r.value.empty()) j["value"] = r.value;
  return j;
}

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Bounds for the verification suites; -1 means the suite default.
struct Bounds {
  int max = -1;
  int size_bound = -1;
  int pick_max(int dflt) const { return max >= 0 ? max : dflt; }
  int pick_size(int dflt) const { return size_bound >= 0 ? size_bound : dflt; }
};

using Suite = std::function<std::vector<Report>(const Bounds&)>;

std::vector<Report> suite_a_commutators(const Bounds& b) {
  const int n_max = b.pick_max(6);
  std::vector<Report> out;
  // One record per (|n|, |m|), covering all four sign choices.
  for (int n = 1; n <= n_max; ++n)
    for (int m = 1; m <= n_max; ++m) {
      std::vector<std::string> bad;
      for (int sn : {1, -1})
        for (int sm : {1, -1}) {
          Report r = verify_a_commutator(sn * n, sm * m);
          for (const auto& t : r.residual_terms) bad.push_back(r.id + ": " + t);
          if (!r.pass && r.residual_terms.empty()) bad.push_back(r.id);
        }
      const std::string id = "a-commutator(+-" + std::to_string(n) + ",+-" + std::to_string(m) + ")";
      out.push_back(bad.empty() ? Report::ok(id) : Report::fail(id, bad));
    }
  return out;
}

std::vector<Report> suite_tilde(const Bounds& b) {
  std::vector<Report> out;
  const int n_max = b.pick_max(5);
  for (int n = 1; n <= n_max; ++n)
    for (int m = 1; m <= n_max; ++m) out.push_back(verify_tilde_relation(n, m));
  return out;
}

std::vector<Report> suite_fock(const Bounds& b) { return verify_fock_relations(b.pick_size(10)); }

std::vector<Report> suite_relations(const Bounds& b) {
  std::vector<Report> out;
  const int n_max = b.pick_max(4), bound = b.pick_size(8);
  for (auto v : {RelationVariant::Deformed, RelationVariant::ClassicalH, RelationVariant::ClassicalE})
    for (int n = 1; n <= n_max; ++n)
      for (int m = 1; m <= n_max; ++m) out.push_back(verify_relation_operators(n, m, v, bound));
  return out;
}

std::vector<Report> suite_symmetric(const Bounds& b) {
  std::vector<Report> out;
  for (int n = 1; n <= b.pick_max(5); ++n) out.push_back(verify_idempotents(n));
  for (int n = 1; n <= b.pick_max(6); ++n) out.push_back(verify_regular_dim(n));
  return out;
}

std::vector<Report> suite_gamma(const Bounds& b) { return {verify_gamma_generation(b.pick_max(6))}; }

std::vector<Report> suite_faithfulness(const Bounds& b) {
  const int d = b.pick_max(4), bound = b.pick_size(3 * d);
  RankReport rk = faithfulness_rank(d, bound);
  const std::string id = "faithfulness(" + std::to_string(d) + "," + std::to_string(bound) + ")";
  const std::string value =
      "rank " + std::to_string(rk.rank) + " of " + std::to_string(rk.monomials) + " (" + rk.method + ")";
  return {rk.full() ? Report::ok(id, value) : Report::fail(id, {"rank deficient"}, value)};
}

std::vector<Report> diagram_checks(const std::string& check, Calculus c) {
  std::vector<Report> out;
  auto append = [&out](std::vector<Report> rs) { out.insert(out.end(), rs.begin(), rs.end()); };
  const bool all = check == "all";
  if (all || check == "biproduct") append(verify_biproduct(c));
  if (all || check == "circles") append(verify_circles());
  if (all || check == "clockwise") out.push_back(verify_clockwise_circle(c));
  if (all || check == "degrees") out.push_back(verify_degree_table());
  if (all || check == "psi") append(verify_psi_relations());
  return out;
}

std::vector<Report> suite_diagrams(const Bounds&) {
  std::vector<Report> out = diagram_checks("all", Calculus::DH);
  auto kh = verify_biproduct(Calculus::KH);
  out.insert(out.end(), kh.begin(), kh.end());
  out.push_back(verify_clockwise_circle(Calculus::KH));
  return out;
}

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> s{
      {"a-commutators", suite_a_commutators}, {"tilde-relations", suite_tilde},
      {"fock", suite_fock},                   {"relations", suite_relations},
      {"symmetric-groups", suite_symmetric},  {"diagrams", suite_diagrams},
      {"gamma", suite_gamma},                 {"faithfulness", suite_faithfulness},
  };
  return s;
}

std::vector<Report> run_suite(const std::string& name, const Bounds& b) {
  if (name == "all") {
    std::vector<Report> out;
    for (const auto& [n, f] : suites()) {
      auto rs = f(b);
      out.insert(out.end(), rs.begin(), rs.end());
    }
    return out;
  }
  for (const auto& [n, f] : suites())
    if (n == name) return f(b);
  std::string known;
  for (const auto& [n, f] : suites()) known += " " + n;
  throw UsageError("unknown suite \"" + name + "\"; known suites: all" + known);
}

int emit_reports(std::ostream& out, const std::string& command, const std::string& name,
                 const std::vector<Report>& rs, bool as_json) {
  const auto passed = std::count_if(rs.begin(), rs.end(), [](const Report& r) { return r.pass; });
  const auto failed = static_cast<long>(rs.size()) - passed;
  if (as_json) {
    json records = json::array();
    for (const auto& r : rs) records.push_back(report_to_json(r));
    json j{{"schema", 1},
           {"command", command},
           {"suite", name},
           {"records", records},
           {"summary", {{"passed", passed}, {"failed", failed}}}};
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : rs) {
      out << (r.pass ? "PASS " : "FAIL ") << r.id;
      if (!r.value.empty()) out << "  " << r.value;
      out << "\n";
      for (const auto& t : r.residual_terms) out << "    " << t << "\n";
    }
    out << passed << " passed, " << failed << " failed\n";
  }
  return failed == 0 ? 0 : 1;
}

json ncpoly_json(const NCPoly& x) {
  json terms = json::array();
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it)
    terms.push_back({{"word", it->first.empty() ? "1" : word_str(it->first)}, {"coeff", it->second.str()}});
  return terms;
}

Calculus parse_calculus(const std::string& s) {
  if (s == "DH") return Calculus::DH;
  if (s == "KH") return Calculus::KH;
  throw UsageError("calculus must be DH or KH, got \"" + s + "\"");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

FockElem at_t_zero(const FockElem& x) {
  FockElem r;
  for (const auto& [p, c] : x.terms()) r.add(p, LaurentPoly(c.eval(0)));
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out_default, std::ostream& err) {
  CLI::App app{"Heisenberg algebra and diagrammatic categorification checks", "heis"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  std::string out_path;
  app.add_flag("--json", as_json, "Emit JSON");
  app.add_option("--out", out_path, "Write output to this file");

  bool classical = false;
  auto add_mode = [&classical](CLI::App* sc) {
    auto* d = sc->add_flag("--deformed", "Use the t-deformed relations (default)");
    auto* c = sc->add_flag("--classical", classical, "Use the classical relations (t = 0)");
    d->excludes(c);
  };

  std::string expr_text, partition_text, suite = "all", calculus = "DH", check = "all", in_path,
                                         strategy = "lowest";
  int index = 0;
  Bounds bounds;

  auto* normal = app.add_subcommand("normal-order", "Normal order an expression");
  normal->add_option("expr", expr_text, "Expression")->required();
  add_mode(normal);

  auto* aexp = app.add_subcommand("a-expand", "Express a_n through q (n > 0) or p (n < 0)");
  aexp->add_option("n", index, "Nonzero index")->required()->allow_extra_args(false);

  auto* texp = app.add_subcommand("tilde-expand", "Express tilde p_m through p");
  texp->add_option("m", index, "Nonnegative index")->required()->check(CLI::NonNegativeNumber);

  auto* fock = app.add_subcommand("fock-act", "Apply an expression to a partition in the Fock space");
  fock->add_option("expr", expr_text, "Expression")->required();
  fock->add_option("partition", partition_text, "Partition such as [2,1]")->required();
  add_mode(fock);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "Suite name or 'all'");
  verify->add_option("--max", bounds.max, "Index bound")->check(CLI::NonNegativeNumber);
  verify->add_option("--size-bound", bounds.size_bound, "Partition size bound")->check(CLI::NonNegativeNumber);

  auto* sym = app.add_subcommand("symmetrizer", "Young symmetrizer of a partition");
  sym->add_option("partition", partition_text, "Partition such as [2,1]")->required();

  auto* deval = app.add_subcommand("diagram-eval", "Normalize a diagram read from JSON");
  deval->add_option("--in", in_path, "Diagram JSON file")->required();
  deval->add_option("--calculus", calculus, "DH or KH");
  deval->add_option("--strategy", strategy, "lowest or highest")->check(CLI::IsMember({"lowest", "highest"}));

  auto* dver = app.add_subcommand("diagram-verify", "Run diagram checks");
  dver->add_option("--calculus", calculus, "DH or KH");
  dver->add_option("--check", check, "biproduct, circles, clockwise, degrees, psi or all")
      ->check(CLI::IsMember({"biproduct", "circles", "clockwise", "degrees", "psi", "all"}));

  auto* report = app.add_subcommand("report", "Run every suite and write one report");
  report->add_option("--max", bounds.max, "Index bound")->check(CLI::NonNegativeNumber);
  report->add_option("--size-bound", bounds.size_bound, "Partition size bound")->check(CLI::NonNegativeNumber);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out_default << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "heis: " << e.what() << "\n";
    return 2;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "heis: cannot write " << out_path << "\n";
      return 2;
    }
  }
  std::ostream& out = out_path.empty() ? out_default : file;

  try {
    if (*normal) {
      const NCPoly x = parse_expr(expr_text);
      const NCPoly y = normal_order(x, !classical);
      const NCPoly r = classical ? specialize_t(y, 0) : y;
      if (as_json)
        out << json{{"schema", 1}, {"input", expr_text}, {"deformed", !classical}, {"result", r.str()},
                    {"terms", ncpoly_json(r)}}.dump(2)
            << "\n";
      else
        out << r.str() << "\n";
      return 0;
    }
    if (*aexp || *texp) {
      if (*aexp && index == 0) throw UsageError("a-expand: index must be nonzero");
      const NCPoly r = *aexp ? a_as_pq(index) : tilde_p_as_p(index);
      if (as_json)
        out << json{{"schema", 1}, {"index", index}, {"result", r.str()}, {"terms", ncpoly_json(r)}}.dump(2) << "\n";
      else
        out << r.str() << "\n";
      return 0;
    }
    if (*fock) {
      const NCPoly x = parse_expr(expr_text);
      const Partition lambda = Partition::parse(partition_text);
      FockElem r = apply_ncpoly(classical ? specialize_t(x, 0) : x, FockElem(lambda));
      if (classical) r = at_t_zero(r);
      if (as_json) {
        json terms = json::object();
        for (const auto& [p, c] : r.terms()) terms[p.str()] = c.str();
        out << json{{"schema", 1}, {"input", expr_text}, {"partition", lambda.str()}, {"result", r.str()},
                    {"terms", terms}}.dump(2)
            << "\n";
      } else {
        out << (r.is_zero() ? "0" : r.str()) << "\n";
      }
      return 0;
    }
    if (*verify) return emit_reports(out, "verify", suite, run_suite(suite, bounds), as_json);
    if (*report) return emit_reports(out, "report", "all", run_suite("all", bounds), as_json);
    if (*sym) {
      const Partition lambda = Partition::parse(partition_text);
      const GroupAlgElem e = young_symmetrizer(lambda);
      const bool idem = e * e == e;
      if (as_json)
        out << json{{"schema", 1}, {"partition", lambda.str()}, {"dimension", dim_hook(lambda).get_str()},
                    {"idempotent", idem}, {"symmetrizer", e.str()}}.dump(2)
            << "\n";
      else
        out << "e" << lambda.str() << " = " << e.str() << "\ndimension " << dim_hook(lambda).get_str()
            << "\nidempotent " << (idem ? "yes" : "no") << "\n";
      return idem ? 0 : 1;
    }
    if (*deval) {
      const Calculus c = parse_calculus(calculus);
      json j;
      try {
        j = json::parse(read_file(in_path));
      } catch (const json::parse_error& e) {
        throw UsageError(std::string("invalid JSON: ") + e.what());
      }
      const DiagLin x = diaglin_from_json(j);
      for (const auto& [d, k] : x.terms()) {
        auto errs = validate(d, c);
        if (!errs.empty()) {
          std::string msg = "invalid diagram";
          for (const auto& e : errs)
            msg += "\n  " + (e.slice >= 0 ? "slice " + std::to_string(e.slice) : std::string("top")) + ": " +
                   e.message;
          throw UsageError(msg);
        }
      }
      const Strategy s = strategy == "highest" ? Strategy::Highest : Strategy::Lowest;
      const DiagLin n = normalize(x, c, s);
      std::optional<Rational> scalar;
      if (x.bottom().empty() && x.top().empty()) {
        try {
          scalar = eval_closed(x, c, s);
        } catch (const NotScalarError&) {
        }
      }
      if (as_json) {
        json o{{"schema", 1}, {"calculus", calculus_name(c)}, {"normal_form", diaglin_to_json(n)},
               {"degree", n.is_zero() ? json(nullptr) : json(degree(n))}};
        o["scalar"] = scalar ? json(to_string(*scalar)) : json(nullptr);
        out << o.dump(2) << "\n";
      } else {
        out << (scalar ? to_string(*scalar) : n.str()) << "\n";
      }
      return 0;
    }
    if (*dver) {
      const Calculus c = parse_calculus(calculus);
      return emit_reports(out, "diagram-verify", check, diagram_checks(check, c), as_json);
    }
  } catch (const ParseError& e) {
    err << "heis: " << describe(e, expr_text) << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "heis: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "heis: invalid diagram JSON: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace heis::cli
