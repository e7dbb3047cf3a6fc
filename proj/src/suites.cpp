#include "qinv/suites.hpp"

#include "suite_registry.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace qinv {

namespace suites {

namespace {

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

template <class Map>
bool differs_at(const Context& ctx, const Map& lhs, const Map& rhs) {
  if (!ctx.precheck) return false;
  try {
    std::map<typename Map::key_type, Rational> a, b;
    for (const auto& [m, c] : lhs) a[m] += c.evaluate(ctx.point);
    for (const auto& [m, c] : rhs) b[m] += c.evaluate(ctx.point);
    std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(b, [](const auto& kv) { return kv.second == 0; });
    return a != b;
  } catch (const std::domain_error&) {
    return false;
  }
}

template <class T>
Outcome compare(const Context& ctx, const T& lhs, const T& rhs) {
  Outcome out;
  bool early = differs_at(ctx, lhs.terms(), rhs.terms());
  T diff = lhs - rhs;
  if (diff.is_zero()) {
    if (early) out.note = "precheck disagreed with exact comparison";
    return out;
  }
  out.pass = false;
  out.residual = diff.to_string();
  if (early) out.note = "precheck: sides differ at s=" + ctx.point.get_str() + "; ";
  if (lhs.is_zero() || rhs.is_zero()) {
    out.note += lhs.is_zero() ? "lhs is zero" : "rhs is zero";
    return out;
  }
  const auto& [m, c] = *rhs.terms().begin();
  Scalar ratio = lhs.coefficient(m) / c;
  if (lhs == rhs * ratio) out.note += "lhs = (" + ratio.to_q_string() + ") * rhs";
  else out.note += "not a scalar multiple";
  return out;
}

}  // namespace

Outcome same(const Context& ctx, const Element& lhs, const Element& rhs) { return compare(ctx, lhs, rhs); }
Outcome same(const Context& ctx, const VElement& lhs, const VElement& rhs) { return compare(ctx, lhs, rhs); }

Outcome same(const Context&, const FreeElement& lhs, const FreeElement& rhs) {
  Outcome out;
  FreeElement diff = lhs - rhs;
  if (diff.is_zero()) return out;
  out.pass = false;
  out.residual = diff.to_string();
  if (lhs.is_zero() || rhs.is_zero()) {
    out.note = lhs.is_zero() ? "lhs is zero" : "rhs is zero";
  } else if (auto r = lhs.ratio_to(rhs)) {
    out.note = "lhs = (" + r->to_q_string() + ") * rhs";
  } else {
    out.note = "not a scalar multiple";
  }
  return out;
}

Outcome same(const Scalar& lhs, const Scalar& rhs) {
  Outcome out;
  Scalar diff = lhs - rhs;
  if (diff.is_zero()) return out;
  out.pass = false;
  out.residual = diff.to_q_string();
  if (!rhs.is_zero()) out.note = "lhs = (" + (lhs / rhs).to_q_string() + ") * rhs";
  return out;
}

Outcome holds(bool ok, const std::string& what) {
  Outcome out;
  if (ok) return out;
  out.pass = false;
  out.residual = what;
  return out;
}

Outcome all_of(const std::vector<std::pair<std::string, Outcome>>& parts) {
  for (const auto& [label, o] : parts) {
    if (o.pass) continue;
    Outcome out = o;
    out.note = label + (o.note.empty() ? "" : ": " + o.note);
    return out;
  }
  return {};
}

Random::Random(const std::string& seed) : gen_(fnv1a(seed)) {}

int Random::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

Scalar Random::scalar() {
  std::vector<LaurentPoly::Term> t;
  for (int k = uniform(1, 3); k > 0; --k) {
    Rational r(uniform(-9, 9), uniform(1, 5));
    r.canonicalize();
    t.emplace_back(uniform(-4, 4), r);
  }
  LaurentPoly p = LaurentPoly::from_terms(std::move(t));
  if (p.is_zero()) return Scalar(1);
  return Scalar(p);
}

Word Random::word(int length, int max_index) {
  Word w;
  for (int k = 0; k < length; ++k) w.push_back({uniform(0, 1) ? LetterKind::X : LetterKind::Y, uniform(1, max_index)});
  return w;
}

Element Random::element(int terms, int length, int max_index) {
  Element e;
  for (int k = 0; k < terms; ++k) e += normalize(word(length, max_index)) * scalar();
  return e;
}

Element Random::bihomogeneous(int m, int n, int beta_length, int terms) {
  Element e;
  for (int t = 0; t < terms; ++t) {
    int i = uniform(0, m), j = uniform(0, n);
    Element head = Element::monomial({{1, m - i, i}, {2, n - j, j}});
    Word w;
    for (int k = 0; k < beta_length; ++k) w.push_back({uniform(0, 1) ? LetterKind::X : LetterKind::Y, uniform(3, 4)});
    e += head * normalize(w) * scalar();
  }
  return e;
}

Element Random::invariant(int brackets, int max_index, int terms) {
  std::vector<std::pair<int, int>> seq;
  for (int k = 0; k < brackets; ++k) {
    int i = uniform(1, max_index - 1);
    seq.emplace_back(i, uniform(i + 1, max_index));
  }
  Element e;
  for (int t = 0; t < terms; ++t) {
    std::shuffle(seq.begin(), seq.end(), gen_);
    Element p(scalar());
    for (auto [i, j] : seq) p = p * bracket(i, j);
    e += p;
  }
  return e;
}

}  // namespace suites

namespace {

using suites::Registry;

const std::vector<std::pair<std::string, std::function<void(Registry&)>>>& suite_table() {
  static const std::vector<std::pair<std::string, std::function<void(Registry&)>>> table = {
      {"bracket-calculus", suites::add_bracket_calculus},
      {"polarisation", suites::add_polarisation},
      {"gordan-capelli", suites::add_gordan_capelli},
      {"forms", suites::add_forms},
      {"newton", suites::add_newton},
      {"symbolic-linear", suites::add_symbolic_linear},
      {"symbolic-quadratic", suites::add_symbolic_quadratic},
      {"symbolic-cubic", suites::add_symbolic_cubic},
      {"symbolic-quartic", suites::add_symbolic_quartic},
      {"configuration-6.4", suites::add_configuration},
      {"properties", suites::add_properties},
  };
  return table;
}

Registry build(const std::string& name) {
  Registry r;
  for (const auto& [n, add] : suite_table())
    if (name == "all" || name == n) add(r);
  return r;
}

bool selected(const std::string& id, const SuiteOptions& options) {
  if (options.only.empty()) return true;
  return std::any_of(options.only.begin(), options.only.end(),
                     [&](const std::string& p) { return id.rfind(p, 0) == 0; });
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

bool parse_bool(const std::string& v) {
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw std::invalid_argument("expected a boolean, got '" + v + "'");
}

unsigned parse_workers(const std::string& v) {
  std::size_t used = 0;
  long n = std::stol(v, &used);
  if (used != v.size() || n < 1 || n > 256) throw std::invalid_argument("worker count must be 1..256, got '" + v + "'");
  return static_cast<unsigned>(n);
}

}  // namespace

bool SuiteResult::passed() const { return failures() == 0; }

std::size_t SuiteResult::failures() const {
  return std::count_if(identities.begin(), identities.end(), [](const IdentityResult& r) { return !r.pass; });
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [n, add] : suite_table()) names.push_back(n);
  names.push_back("all");
  return names;
}

bool is_suite(const std::string& name) {
  auto names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  if (!is_suite(name)) throw std::invalid_argument("unknown suite: " + name);
  Registry all = build(name);
  Registry reg;
  for (auto& id : all)
    if (selected(id.id, options)) reg.push_back(std::move(id));

  SuiteResult result;
  result.name = name;
  result.identities.resize(reg.size());
  suites::Context ctx;
  ctx.precheck = options.precheck;
  ctx.point = Rational(7, 5);

  auto start = std::chrono::steady_clock::now();
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < reg.size(); i = next++) {
      IdentityResult& out = result.identities[i];
      out.id = reg[i].id;
      out.description = reg[i].description;
      auto t0 = std::chrono::steady_clock::now();
      try {
        suites::Outcome o = reg[i].run(ctx);
        out.pass = o.pass;
        out.residual = o.residual;
        out.note = o.note;
      } catch (const std::exception& e) {
        out.pass = false;
        out.note = std::string("exception: ") + e.what();
      }
      out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  unsigned n = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(reg.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

SuiteOptions load_suite_config(const std::string& path, SuiteOptions base) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line.erase(0, line.find_first_not_of(" \t\r"));
    line.erase(line.find_last_not_of(" \t\r") + 1);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected key=value");
    std::string key = line.substr(0, eq), value = line.substr(eq + 1);
    key.erase(key.find_last_not_of(" \t") + 1);
    value.erase(0, value.find_first_not_of(" \t"));
    if (key == "workers") base.workers = parse_workers(value);
    else if (key == "precheck") base.precheck = parse_bool(value);
    else if (key == "only") base.only = split_list(value);
    else if (key == "suites") {
      base.suites = split_list(value);
      for (const auto& s : base.suites)
        if (!is_suite(s)) throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": unknown suite " + s);
    } else {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": unknown key " + key);
    }
  }
  return base;
}

void apply_environment(SuiteOptions& options) {
  if (const char* w = std::getenv("QINV_WORKERS"); w && *w) options.workers = parse_workers(w);
}

std::string format_suite_text(const SuiteResult& result, bool timings, std::size_t residual_limit) {
  std::ostringstream out;
  for (const auto& r : result.identities) {
    out << (r.pass ? "PASS " : "FAIL ") << r.id << "  " << r.description;
    if (timings) out << "  [" << std::fixed << std::setprecision(3) << r.seconds << "s]";
    out << "\n";
    if (!r.pass) {
      std::string res = r.residual;
      if (residual_limit && res.size() > residual_limit) res = res.substr(0, residual_limit) + " ...";
      if (!res.empty()) out << "     residual: " << res << "\n";
      if (!r.note.empty()) out << "     note: " << r.note << "\n";
    }
  }
  out << result.name << ": " << result.identities.size() - result.failures() << "/" << result.identities.size()
      << " passed";
  if (timings) out << " in " << std::fixed << std::setprecision(2) << result.seconds << "s";
  out << "\n";
  return out.str();
}

std::string format_suite_json(const SuiteResult& result, bool timings) {
  nlohmann::ordered_json j;
  j["suite"] = result.name;
  j["passed"] = result.passed();
  j["failures"] = result.failures();
  auto& list = j["identities"] = nlohmann::ordered_json::array();
  for (const auto& r : result.identities) {
    nlohmann::ordered_json e;
    e["id"] = r.id;
    e["description"] = r.description;
    e["pass"] = r.pass;
    e["residual"] = r.residual;
    e["note"] = r.note;
    if (timings) e["seconds"] = r.seconds;
    list.push_back(e);
  }
  if (timings) j["seconds"] = result.seconds;
  return j.dump(2) + "\n";
}

}  // namespace qinv
