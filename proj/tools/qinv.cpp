#include "qinv/action.hpp"
#include "qinv/bracket_poly.hpp"
#include "qinv/catalog.hpp"
#include "qinv/dsl.hpp"
#include "qinv/polarisation.hpp"
#include "qinv/serialize.hpp"
#include "qinv/suites.hpp"
#include "qinv/symbolic.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace qinv;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2 };

struct Output {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

void add_format(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

Json value_json(const dsl::Value& v) {
  return std::visit([](const auto& a) { return to_json(a); }, v);
}

/// Reads an Element, VElement or FreeElement from its JSON term list.
dsl::Value value_from_json(const Json& j) {
  if (j.is_object() && j.contains("num")) return scalar_from_json(j);
  if (!j.is_array()) throw std::invalid_argument("expected a JSON term list or scalar");
  if (j.empty()) return Element();
  const Json& first = j.at(0);
  if (first.contains("word")) return free_from_json(j);
  const Json& mono = first.at("monomial");
  if (!mono.empty() && mono.at(0).size() == 2) return velement_from_json(j);
  return element_from_json(j);
}

void print_value(const dsl::Value& v, const Output& out) {
  if (out.json()) {
    std::cout << value_json(v).dump() << "\n";
  } else {
    std::cout << dsl::to_text(v) << "\n";
  }
}

std::string bracket_or_expanded(const Element& e, bool expanded) {
  if (expanded || e.is_zero() || !is_invariant(e)) return e.to_string();
  try {
    return dsl::bracket_text(bracket_decompose(e));
  } catch (const std::invalid_argument&) {
    return e.to_string();
  }
}

void print_covariant(const UniversalCovariant& u, const Output& out) {
  if (out.json()) {
    std::cout << to_json(u).dump() << "\n";
    return;
  }
  if (u.order == 0) {
    std::cout << "I = " << u.invariant().to_string() << "\n";
    return;
  }
  std::cout << "order " << u.order << "\n";
  for (std::size_t a = 0; a < u.components.size(); ++a)
    std::cout << "C_" << a << " = " << u.components[a].to_string() << "\n";
}

std::vector<int> degree_list(const std::string& text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t used = 0;
    int d = std::stoi(item, &used);
    if (used != item.size() || d < 0) throw std::invalid_argument("bad degree '" + item + "'");
    out.push_back(d);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of binary forms in the quantum plane"};
  app.require_subcommand(1);
  int status = kOk;

  Output normalize_out;
  std::string normalize_expr;
  bool normalize_json_in = false;
  auto* normalize_cmd = app.add_subcommand("normalize", "Evaluate an expression to its normal form");
  normalize_cmd->add_option("expr", normalize_expr, "Expression, or JSON with --json-input")->required();
  normalize_cmd->add_flag("--json-input", normalize_json_in, "Read the JSON schema instead of the DSL");
  add_format(normalize_cmd, normalize_out);
  normalize_cmd->callback([&] {
    dsl::Value v = normalize_json_in ? value_from_json(Json::parse(normalize_expr)) : dsl::evaluate(normalize_expr);
    print_value(v, normalize_out);
  });

  Output act_out;
  std::string act_gen, act_expr;
  int act_times = 1;
  auto* act_cmd = app.add_subcommand("act", "Apply E, F, K, Kinv, L or Linv");
  act_cmd->add_option("generator", act_gen, "Generator")->required();
  act_cmd->add_option("expr", act_expr, "Expression")->required();
  act_cmd->add_option("--times", act_times, "Number of applications")->check(CLI::NonNegativeNumber);
  add_format(act_cmd, act_out);
  act_cmd->callback([&] {
    auto g = parse_generator(act_gen);
    if (!g) throw CLI::ValidationError("generator", "unknown generator '" + act_gen + "'");
    dsl::Value v = dsl::evaluate(act_expr);
    if (std::holds_alternative<Scalar>(v)) v = Element(std::get<Scalar>(v));
    for (int t = 0; t < act_times; ++t) {
      if (auto* e = std::get_if<Element>(&v)) {
        v = act(*g, *e);
      } else if (auto* f = std::get_if<FreeElement>(&v)) {
        v = free_act(*g, *f);
      } else {
        throw dsl::KindError("the action is defined on H_I and on coefficient symbols only");
      }
    }
    print_value(v, act_out);
  });

  std::string invariant_expr;
  bool invariant_brackets = false;
  auto* invariant_cmd = app.add_subcommand("invariant", "Test invariance; exit 1 if not invariant");
  invariant_cmd->add_option("expr", invariant_expr, "Expression")->required();
  invariant_cmd->add_flag("--brackets", invariant_brackets, "Also print the bracket decomposition");
  invariant_cmd->callback([&] {
    dsl::Value v = dsl::evaluate(invariant_expr);
    bool ok;
    if (auto* f = std::get_if<FreeElement>(&v)) {
      ok = is_universal_invariant(*f);
    } else {
      Element e = dsl::parse_element(invariant_expr);
      ok = is_invariant(e);
      if (ok && invariant_brackets) std::cout << dsl::bracket_text(bracket_decompose(e)) << "\n";
    }
    std::cout << (ok ? "invariant" : "not invariant") << "\n";
    if (!ok) status = kFailed;
  });

  Output symbolic_out;
  std::string symbolic_symbol, symbolic_degrees;
  int symbolic_n = 0, symbolic_k = 0;
  bool symbolic_check = false, symbolic_separate = false;
  auto* symbolic_cmd = app.add_subcommand("symbolic", "Universal invariant or covariant of a symbol");
  symbolic_cmd->add_option("--symbol", symbolic_symbol, "Invariant symbol in H_I")->required();
  auto* n_opt = symbolic_cmd->add_option("--n", symbolic_n, "Degree of the forms")->check(CLI::PositiveNumber);
  auto* k_opt = symbolic_cmd->add_option("--k", symbolic_k, "Number of symbolic forms")->check(CLI::PositiveNumber);
  auto* d_opt = symbolic_cmd->add_option("--degrees", symbolic_degrees, "Comma-separated degrees of forms 1..k");
  n_opt->needs(k_opt);
  k_opt->needs(n_opt);
  d_opt->excludes(n_opt)->excludes(k_opt);
  symbolic_cmd->add_flag("--separate", symbolic_separate, "Keep the forms distinct");
  symbolic_cmd->add_flag("--check", symbolic_check, "Also run the symbolic round trip; exit 1 on failure");
  add_format(symbolic_cmd, symbolic_out);
  symbolic_cmd->callback([&] {
    std::vector<int> degrees;
    if (!symbolic_degrees.empty()) {
      degrees = degree_list(symbolic_degrees);
    } else if (symbolic_n > 0) {
      degrees.assign(symbolic_k, symbolic_n);
    } else {
      throw CLI::ValidationError("symbolic", "give --n and --k, or --degrees");
    }
    bool same_degree = std::all_of(degrees.begin(), degrees.end(), [&](int d) { return d == degrees[0]; });
    bool identify = !symbolic_separate && same_degree;
    Element d = dsl::parse_element(symbolic_symbol);
    print_covariant(symbol_to_universal(d, degrees, identify), symbolic_out);
    if (symbolic_check) {
      bool ok = roundtrip_check(d, degrees);
      if (!symbolic_out.json()) std::cout << "roundtrip: " << (ok ? "pass" : "FAIL") << "\n";
      if (!ok) status = kFailed;
    }
  });

  Output realize_out;
  std::string realize_catalog, realize_universal;
  std::vector<std::string> realize_forms;
  bool realize_expanded = false;
  auto* realize_cmd = app.add_subcommand("realize", "Evaluate a universal invariant on concrete forms");
  auto* cat_opt = realize_cmd->add_option("--catalog", realize_catalog, "Catalog entry name");
  auto* uni_opt = realize_cmd->add_option("--universal", realize_universal, "Polynomial in symbols A[f,n,i]");
  cat_opt->excludes(uni_opt);
  realize_cmd->add_option("--form", realize_forms, "Form for each form id, in order")->required();
  realize_cmd->add_flag("--expanded", realize_expanded, "Print the PBW expansion instead of brackets");
  add_format(realize_cmd, realize_out);
  realize_cmd->callback([&] {
    std::vector<NForm> forms;
    for (const auto& f : realize_forms) forms.push_back(dsl::parse_form(f));
    Element result;
    if (!realize_catalog.empty()) {
      const UniversalCovariant& u = catalog(realize_catalog);
      result = u.order == 0 ? realize(u.invariant(), forms) : realize(u, forms);
    } else if (!realize_universal.empty()) {
      result = realize(dsl::parse_free(realize_universal), forms);
    } else {
      throw CLI::ValidationError("realize", "give --catalog or --universal");
    }
    if (realize_out.json()) {
      std::cout << to_json(result).dump() << "\n";
    } else {
      std::cout << bracket_or_expanded(result, realize_expanded) << "\n";
    }
  });

  Output gc_out;
  std::string gc_expr;
  auto* gc_cmd = app.add_subcommand("gc", "Gordan-Capelli series of an invariant");
  gc_cmd->add_option("expr", gc_expr, "Invariant")->required();
  add_format(gc_cmd, gc_out);
  gc_cmd->callback([&] {
    Element f = dsl::parse_element(gc_expr);
    PolarisationReport r = gordan_capelli(f);
    bool ok = r.recombine() == f;
    if (gc_out.json()) {
      std::cout << to_json(r).dump() << "\n";
    } else {
      std::cout << "indices " << r.low << "," << r.high << "  degrees " << r.n1 << "," << r.n2 << "\n";
      for (const auto& t : r.terms)
        std::cout << "k=" << t.k << "  alpha=" << t.alpha.to_q_string() << "  component=" << t.component.to_string()
                  << "\n";
      std::cout << "recombination: " << (ok ? "exact" : "FAIL") << "\n";
    }
    if (!ok) status = kFailed;
  });

  Output catalog_out;
  std::string catalog_name;
  auto* catalog_cmd = app.add_subcommand("catalog", "List catalog entries or show one");
  catalog_cmd->add_option("name", catalog_name, "Entry name");
  add_format(catalog_cmd, catalog_out);
  catalog_cmd->callback([&] {
    if (catalog_name.empty()) {
      for (const auto& n : catalog_names()) std::cout << n << "  " << catalog_entry(n).description << "\n";
      return;
    }
    print_covariant(catalog(catalog_name), catalog_out);
  });

  Output suite_out;
  std::string suite_name, suite_config;
  unsigned suite_workers = 0;
  bool suite_precheck = false, suite_timings = false;
  std::vector<std::string> suite_only;
  auto* suite_cmd = app.add_subcommand("run-suite", "Run a named verification suite; exit 1 on any failure");
  suite_cmd->add_option("name", suite_name, "Suite name, or a key=value config file");
  suite_cmd->add_option("--config", suite_config, "Config file (workers, precheck, only, suites)");
  suite_cmd->add_option("--workers", suite_workers, "Worker threads")->check(CLI::Range(1, 256));
  suite_cmd->add_flag("--precheck", suite_precheck, "Compare at a random rational point first");
  suite_cmd->add_flag("--timings", suite_timings, "Print wall times");
  suite_cmd->add_option("--only", suite_only, "Identity id prefixes to run");
  add_format(suite_cmd, suite_out);
  suite_cmd->callback([&] {
    SuiteOptions opts;
    if (!suite_name.empty() && !is_suite(suite_name)) {
      if (suite_config.empty() && std::filesystem::is_regular_file(suite_name)) {
        suite_config = suite_name;
        suite_name.clear();
      } else {
        throw std::invalid_argument("unknown suite: " + suite_name);
      }
    }
    if (!suite_config.empty()) opts = load_suite_config(suite_config, opts);
    apply_environment(opts);
    if (suite_workers) opts.workers = suite_workers;
    if (suite_precheck) opts.precheck = true;
    if (!suite_only.empty()) opts.only = suite_only;
    std::vector<std::string> names = suite_name.empty() ? opts.suites : std::vector<std::string>{suite_name};
    if (names.empty()) throw CLI::ValidationError("run-suite", "give a suite name or a config with suites=");
    Json all = Json::array();
    for (const auto& n : names) {
      SuiteResult r = run_suite(n, opts);
      if (!r.passed()) status = kFailed;
      if (suite_out.json()) {
        all.push_back(Json::parse(format_suite_json(r, suite_timings)));
      } else {
        std::cout << format_suite_text(r, suite_timings);
      }
    }
    if (suite_out.json()) std::cout << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const dsl::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return status;
}
