// Batch command-line surface: presentation verification, first homology,
// quotient-complex enumeration with on-disk caching, marker-rotation checks,
// the fiber poset, and tuple-element arithmetic.  Every command prints one
// JSON report; timings live in their own field and are excluded from the
// byte-determinism contract.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fgb/boundary.hpp"
#include "fgb/fiber.hpp"
#include "fgb/graph_complex.hpp"
#include "fgb/presentations.hpp"
#include "fgb/random.hpp"
#include "fgb/snf.hpp"
#include "fgb/words.hpp"

using nlohmann::json;
using namespace fgb;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitBudget = 2;
constexpr int kExitParse = 3;

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void emit(json& report, const Timer& timer) {
  report["timings"] = {{"seconds", timer.seconds()}};
  std::cout << report.dump(2) << "\n";
}

int budget_error(json& report, const Timer& timer, const std::string& what) {
  report["ok"] = false;
  report["error"] = what;
  emit(report, timer);
  return kExitBudget;
}

// Budgets default to the verified grid; raising them needs an explicit
// acknowledgment so a typo cannot start a runaway enumeration.
bool budget_allowed(int requested, int fallback, bool force, std::string* err) {
  if (requested > fallback && !force) {
    *err = "budget " + std::to_string(requested) + " exceeds the default " +
           std::to_string(fallback) + "; pass --force-budget to acknowledge";
    return false;
  }
  return true;
}

json word_list(const std::vector<Word>& words) {
  json out = json::array();
  for (const Word& w : words) out.push_back(to_string(w));
  return out;
}

json element_json(const BoundaryElement& e, const std::vector<int>* sigma = nullptr) {
  json out;
  out["n"] = e.rank.n;
  out["k"] = e.rank.k;
  out["nu"] = word_list(e.nu);
  out["w"] = word_list(e.w);
  if (sigma) out["sigma"] = *sigma;
  return out;
}

struct ParsedElement {
  std::optional<std::vector<int>> sigma;
  BoundaryElement element;
};

ParsedElement parse_element(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("nu") ||
      !j.contains("w")) {
    throw ParseError("element must be an object with n, k, nu, w");
  }
  int n = j.at("n").get<int>();
  int k = j.at("k").get<int>();
  if (n < 0 || k < 0) throw ParseError("n and k must be nonnegative");
  Rank r{n, k, false};
  std::vector<Word> nu, w;
  for (const auto& s : j.at("nu")) nu.push_back(parse_word(r, s.get<std::string>()));
  for (const auto& s : j.at("w")) w.push_back(parse_word(r, s.get<std::string>()));
  ParsedElement out{std::nullopt, make_boundary_element(n, k, std::move(nu), std::move(w))};
  if (j.contains("sigma")) {
    out.sigma = j.at("sigma").get<std::vector<int>>();
    make_sigma_element(*out.sigma, out.element);  // validate the pairing
  }
  return out;
}

json schema_report(const VerifyReport& rep) {
  json schemas = json::array();
  for (const SchemaSummary& s : rep.schemas) {
    schemas.push_back({{"schema", schema_name(s.schema)},
                       {"instances", s.instances},
                       {"failed", s.failed}});
  }
  return schemas;
}

// ---------------------------------------------------------------------------

int cmd_verify_presentation(int n, int k, Group group, const std::vector<std::string>& schemas,
                            int budget, bool force, bool serial) {
  Timer timer;
  json report;
  report["command"] = "verify-presentation";
  report["params"] = {{"n", n}, {"k", k}, {"group", group_name(group)}};

  std::string err;
  if (!budget_allowed(budget, kPresentationBudget, force, &err)) {
    return budget_error(report, timer, err);
  }
  if (n + k > budget) {
    return budget_error(report, timer,
                        "n+k exceeds the enumeration budget " + std::to_string(budget));
  }
  std::vector<Schema> only;
  for (const std::string& s : schemas) {
    auto parsed = parse_schema(s);
    if (!parsed) {
      report["ok"] = false;
      report["error"] = "unknown schema: " + s;
      emit(report, timer);
      return kExitParse;
    }
    only.push_back(*parsed);
    report["params"]["schemas"].push_back(s);
  }

  VerifyReport rep = verify_relations(n, k, group, only, !serial);
  report["schemas"] = schema_report(rep);
  json failures = json::array();
  for (const RelationFailure& f : rep.failures) {
    failures.push_back({{"schema", schema_name(f.schema)},
                        {"params", f.params},
                        {"witness", f.witness}});
  }
  report["failures"] = failures;
  report["instances"] = rep.total_instances();
  report["ok"] = rep.ok();
  emit(report, timer);
  return rep.ok() ? 0 : kExitFailure;
}

int cmd_h1(int n, int k, Group group, int budget, bool force) {
  Timer timer;
  json report;
  report["command"] = "h1";
  report["params"] = {{"n", n}, {"k", k}, {"group", group_name(group)}};

  std::string err;
  if (!budget_allowed(budget, kPresentationBudget, force, &err)) {
    return budget_error(report, timer, err);
  }
  if (n + k > budget) {
    return budget_error(report, timer,
                        "n+k exceeds the enumeration budget " + std::to_string(budget));
  }

  AbelianGroupShape shape = h1(n, k, group);
  auto torsion_json = [](const std::vector<BigInt>& ds) {
    json out = json::array();
    for (const BigInt& d : ds) {
      // torsion orders at these sizes are tiny; keep big ones readable
      if (d <= BigInt(std::numeric_limits<long long>::max())) {
        out.push_back(d.convert_to<long long>());
      } else {
        out.push_back(d.str());
      }
    }
    return out;
  };
  report["h1"] = {{"free_rank", shape.free_rank}, {"torsion", torsion_json(shape.torsion)}};

  std::optional<AbelianGroupShape> expected;
  if (n > 2) {
    expected = AbelianGroupShape{0, {BigInt(2)}};
  } else if (n == 0 && group == Group::conj) {
    expected = AbelianGroupShape{k * (k - 1), {}};
  }
  bool ok = true;
  if (expected) {
    report["expected"] = {{"free_rank", expected->free_rank},
                          {"torsion", torsion_json(expected->torsion)}};
    ok = shape == *expected;
    report["matches"] = ok;
  } else {
    report["expected"] = nullptr;
    report["note"] = "no expectation for these parameters";
  }
  report["ok"] = ok;
  emit(report, timer);
  return ok ? 0 : kExitFailure;
}

std::optional<std::string> cache_path(const std::string& flag_dir, int n, int k,
                                      GraphVariant variant, bool sigma) {
  std::string dir = flag_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("FGB_CACHE_DIR")) dir = env;
  }
  if (dir.empty()) return std::nullopt;
  return dir + "/complex_n" + std::to_string(n) + "_k" + std::to_string(k) + "_" +
         variant_name(variant) + "_" + (sigma ? "sigma" : "labeled") + ".json";
}

int cmd_complex(int n, int k, GraphVariant variant, bool sigma, bool dim_only,
                const std::string& cache_dir, int budget, bool force, bool serial) {
  Timer timer;
  json report;
  report["command"] = "complex";
  report["params"] = {{"n", n},
                      {"k", k},
                      {"variant", variant_name(variant)},
                      {"up_to", sigma ? "sigma" : "labeled"}};

  std::string err;
  if (!budget_allowed(budget, EnumerationBudget{}.max_edges, force, &err)) {
    return budget_error(report, timer, err);
  }

  EnumeratedComplex complex;
  bool cache_hit = false;
  auto path = cache_path(cache_dir, n, k, variant, sigma);
  if (path && std::filesystem::exists(*path)) {
    std::ifstream in(*path);
    json cached = json::parse(in);
    complex.n = n;
    complex.k = k;
    complex.variant = variant;
    complex.sigma = sigma;
    for (const auto& rec : cached.at("graphs")) {
      complex.graphs.push_back(from_exchange_format(rec.get<std::string>()));
    }
    cache_hit = true;
  } else {
    try {
      complex = enumerate_graphs(n, k, variant, sigma, EnumerationBudget{budget}, !serial);
    } catch (const BudgetExceeded& e) {
      return budget_error(report, timer, e.what());
    }
    if (path) {
      json cached;
      cached["n"] = n;
      cached["k"] = k;
      cached["variant"] = variant_name(variant);
      cached["up_to"] = sigma ? "sigma" : "labeled";
      json graphs = json::array();
      for (const NkGraph& g : complex.graphs) graphs.push_back(to_exchange_format(g, n, k));
      cached["graphs"] = graphs;
      std::filesystem::create_directories(std::filesystem::path(*path).parent_path());
      std::ofstream out(*path);
      out << cached.dump(2) << "\n";
    }
  }
  report["cache_hit"] = cache_hit;
  report["artifacts"] = path ? json::array({*path}) : json::array();
  report["count"] = complex.graphs.size();

  int dim = quotient_dimension(complex);
  int formula = quotient_dimension_formula(n, k, variant);
  report["dimension"] = dim;
  report["dimension_formula"] = formula;
  bool ok = dim == formula;
  report["dimension_matches"] = dim == formula;

  if (!dim_only && variant == GraphVariant::nk) {
    json rows = json::array();
    bool census_ok = true;
    for (const CensusRow& row : census(complex, n, k)) {
      rows.push_back({{"c", row.c},
                      {"v", row.v},
                      {"e", row.e},
                      {"count", row.count},
                      {"matches", row.matches}});
      census_ok = census_ok && row.matches;
    }
    report["census"] = rows;
    report["census_ok"] = census_ok;
    ok = ok && census_ok;
  }
  report["ok"] = ok;
  emit(report, timer);
  return ok ? 0 : kExitFailure;
}

int cmd_theta(int n, int k, int samples, unsigned long long seed) {
  Timer timer;
  json report;
  report["command"] = "theta";
  report["params"] = {{"n", n}, {"k", k}, {"samples", samples}, {"seed", seed}};

  bool order_ok = true, commute_ok = true;
  for (int j = 1; j <= k; ++j) {
    Endomorphism t = theta_generator(j, n, k);
    order_ok = order_ok && is_identity(compose(compose(t, t), t)) && !is_identity(compose(t, t));
  }
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      Endomorphism a = theta_generator(i, n, k);
      Endomorphism b = theta_generator(j, n, k);
      commute_ok = commute_ok && compose(a, b) == compose(b, a);
    }
  }
  report["rotation_order_3"] = order_ok;
  report["rotations_commute"] = commute_ok;

  Rng rng(seed);
  int normalizer_failures = 0;
  int homomorphism_failures = 0;
  for (int t = 0; t < samples; ++t) {
    SigmaBoundaryElement g = random_sigma_element(n, k, 4, rng);
    auto sigma = normalizing_permutation(marker_embedding(g));
    if (!sigma || *sigma != g.sigma) ++normalizer_failures;
    SigmaBoundaryElement h = random_sigma_element(n, k, 4, rng);
    if (!(marker_embedding(sigma_multiply(g, h)) ==
          compose(marker_embedding(g), marker_embedding(h)))) {
      ++homomorphism_failures;
    }
  }
  report["normalizer_failures"] = normalizer_failures;
  report["homomorphism_failures"] = homomorphism_failures;

  bool ok = order_ok && commute_ok && normalizer_failures == 0 && homomorphism_failures == 0;
  report["ok"] = ok;
  emit(report, timer);
  return ok ? 0 : kExitFailure;
}

int cmd_fiber(int k, int m) {
  Timer timer;
  json report;
  report["command"] = "fiber";
  report["params"] = {{"k", k}, {"window", m}};

  std::vector<FiberElement> win = fiber_window(k, m);
  report["elements"] = win.size();

  bool reflexive = true, antisymmetric = true, transitive = true;
  for (const auto& x : win) reflexive = reflexive && fiber_leq(x, x);
  for (std::size_t a = 0; a < win.size() && antisymmetric; ++a) {
    for (std::size_t b = 0; b < win.size(); ++b) {
      if (a == b) continue;
      if (fiber_leq(win[a], win[b]) && fiber_leq(win[b], win[a])) {
        antisymmetric = false;
        break;
      }
    }
  }
  for (std::size_t a = 0; a < win.size() && transitive; ++a) {
    for (std::size_t b = 0; b < win.size() && transitive; ++b) {
      if (!fiber_leq(win[a], win[b])) continue;
      for (std::size_t c = 0; c < win.size(); ++c) {
        if (fiber_leq(win[b], win[c]) && !fiber_leq(win[a], win[c])) {
          transitive = false;
          break;
        }
      }
    }
  }
  report["partial_order"] = {{"reflexive", reflexive},
                             {"antisymmetric", antisymmetric},
                             {"transitive", transitive}};

  OrderComplexStats stats = order_complex_stats(win);
  report["euler_characteristic"] = stats.euler;
  report["simplices_by_dim"] = stats.simplices_by_dim;

  bool cubes_ok = true;
  if (k > 0) {
    std::vector<int> z(k, -m);
    for (;;) {
      cubes_ok = cubes_ok && cube_has_unique_maximum(z);
      int i = k - 1;
      for (; i >= 0; --i) {
        if (z[i] < m - 1) {
          z[i] += 1;
          break;
        }
        z[i] = -m;
      }
      if (i < 0) break;
    }
  }
  report["cube_maxima_ok"] = cubes_ok;

  bool translation_ok = true;
  std::vector<int> t(k, 0);
  if (k > 0) t[0] = 1;
  for (const auto& a : win) {
    for (const auto& b : win) {
      if (fiber_leq(a, b) != fiber_leq(fiber_translate(a, t), fiber_translate(b, t))) {
        translation_ok = false;
      }
    }
    if (k > 0 && fiber_translate(a, t) == a) translation_ok = false;  // freeness
  }
  report["translation_ok"] = translation_ok;

  bool ok = reflexive && antisymmetric && transitive && stats.euler == 1 && cubes_ok &&
            translation_ok;
  report["ok"] = ok;
  emit(report, timer);
  return ok ? 0 : kExitFailure;
}

int cmd_element(const std::string& file, const std::string& action, int genus) {
  Timer timer;
  json report;
  report["command"] = "element";
  report["params"] = {{"file", file}, {"action", action}};

  json input;
  std::vector<ParsedElement> elements;
  try {
    std::ifstream in(file);
    if (!in) throw ParseError("cannot open " + file);
    input = json::parse(in);
    if (input.is_array()) {
      for (const auto& j : input) elements.push_back(parse_element(j));
    } else {
      elements.push_back(parse_element(input));
    }
  } catch (const json::exception& e) {
    report["ok"] = false;
    report["error"] = std::string("parse error: ") + e.what();
    emit(report, timer);
    return kExitParse;
  } catch (const ParseError& e) {
    report["ok"] = false;
    report["error"] = std::string("parse error: ") + e.what();
    emit(report, timer);
    return kExitParse;
  } catch (const NotAnAutomorphism& e) {
    if (action == "check") {
      report["valid"] = false;
      report["reason"] = e.what();
      report["ok"] = false;
      emit(report, timer);
      return kExitFailure;
    }
    report["ok"] = false;
    report["error"] = e.what();
    emit(report, timer);
    return kExitParse;
  }

  if (action == "check") {
    report["valid"] = true;
    report["elements"] = elements.size();
    report["ok"] = true;
    emit(report, timer);
    return 0;
  }
  if (action == "invert") {
    const ParsedElement& e = elements.front();
    if (e.sigma) {
      SigmaBoundaryElement inv = sigma_inverse(SigmaBoundaryElement{*e.sigma, e.element});
      report["result"] = element_json(inv.element, &inv.sigma);
    } else {
      report["result"] = element_json(inverse(e.element));
    }
    report["ok"] = true;
    emit(report, timer);
    return 0;
  }
  if (action == "mul") {
    if (elements.size() < 2) {
      report["ok"] = false;
      report["error"] = "mul needs an array of at least two elements";
      emit(report, timer);
      return kExitParse;
    }
    bool any_sigma = false;
    for (const auto& e : elements) any_sigma = any_sigma || e.sigma.has_value();
    if (any_sigma) {
      auto as_sigma = [](const ParsedElement& e) {
        if (e.sigma) return SigmaBoundaryElement{*e.sigma, e.element};
        SigmaBoundaryElement s = sigma_unit(e.element.rank.n, e.element.rank.k);
        s.element = e.element;
        return s;
      };
      SigmaBoundaryElement acc = as_sigma(elements[0]);
      for (std::size_t t = 1; t < elements.size(); ++t) {
        acc = sigma_multiply(acc, as_sigma(elements[t]));
      }
      report["result"] = element_json(acc.element, &acc.sigma);
    } else {
      BoundaryElement acc = elements[0].element;
      for (std::size_t t = 1; t < elements.size(); ++t) acc = multiply(acc, elements[t].element);
      report["result"] = element_json(acc);
    }
    report["ok"] = true;
    emit(report, timer);
    return 0;
  }
  if (action == "mcg") {
    const ParsedElement& e = elements.front();
    if (e.sigma) {
      for (std::size_t j = 0; j < e.sigma->size(); ++j) {
        if ((*e.sigma)[j] != static_cast<int>(j) + 1) {
          report["ok"] = false;
          report["error"] = "mcg is defined for elements with trivial label permutation";
          emit(report, timer);
          return kExitParse;
        }
      }
    }
    try {
      bool fixes = fixes_boundary_word(e.element, genus);
      report["genus"] = genus;
      report["fixes_boundary_word"] = fixes;
      report["ok"] = true;
      emit(report, timer);
      return 0;
    } catch (const OddRank& err) {
      report["ok"] = false;
      report["error"] = err.what();
      emit(report, timer);
      return kExitParse;
    }
  }
  report["ok"] = false;
  report["error"] = "unknown action: " + action;
  emit(report, timer);
  return kExitParse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification and enumeration toolkit for automorphism groups of "
               "free groups with boundary cycles"};
  app.require_subcommand(1);

  int threads = 0;
  app.add_option("--threads", threads, "OpenMP thread count (0 = default)");

  auto* vp = app.add_subcommand("verify-presentation", "check every relation instance");
  vp->fallthrough();
  int vp_n = 0, vp_k = 0, vp_budget = kPresentationBudget;
  std::string vp_group = "conj";
  std::vector<std::string> vp_schemas;
  bool vp_force = false, vp_serial = false;
  vp->add_option("--n", vp_n)->required();
  vp->add_option("--k", vp_k)->required();
  vp->add_option("--group", vp_group)->check(CLI::IsMember({"conj", "bdy"}));
  vp->add_option("--schemas", vp_schemas)->delimiter(',');
  vp->add_option("--budget", vp_budget, "cap on n+k");
  vp->add_flag("--force-budget", vp_force);
  vp->add_flag("--serial", vp_serial, "use the serial reference driver");

  auto* h1c = app.add_subcommand("h1", "first homology from the presentation");
  h1c->fallthrough();
  int h1_n = 0, h1_k = 0, h1_budget = kPresentationBudget;
  std::string h1_group = "conj";
  bool h1_force = false;
  h1c->add_option("--n", h1_n)->required();
  h1c->add_option("--k", h1_k)->required();
  h1c->add_option("--group", h1_group)->check(CLI::IsMember({"conj", "bdy"}));
  h1c->add_option("--budget", h1_budget, "cap on n+k");
  h1c->add_flag("--force-budget", h1_force);

  auto* cx = app.add_subcommand("complex", "enumerate the quotient complex");
  cx->fallthrough();
  int cx_n = 0, cx_k = 0, cx_budget = EnumerationBudget{}.max_edges;
  std::string cx_variant = "nk", cx_cache;
  bool cx_sigma = false, cx_dim_only = false, cx_force = false, cx_serial = false;
  cx->add_option("--n", cx_n)->required();
  cx->add_option("--k", cx_k)->required();
  cx->add_option("--variant", cx_variant)->check(CLI::IsMember({"nk", "kn"}));
  cx->add_flag("--sigma", cx_sigma, "quotient by cycle relabeling");
  cx->add_flag("--dim-only", cx_dim_only, "skip the census table");
  cx->add_option("--cache", cx_cache, "cache directory (default $FGB_CACHE_DIR)");
  cx->add_option("--budget", cx_budget, "cap on edges");
  cx->add_flag("--force-budget", cx_force);
  cx->add_flag("--serial", cx_serial, "use the serial reference driver");

  auto* th = app.add_subcommand("theta", "marker rotation and embedding checks");
  th->fallthrough();
  int th_n = 1, th_k = 1, th_samples = 100;
  unsigned long long th_seed = 0;
  th->add_option("--n", th_n)->required();
  th->add_option("--k", th_k)->required();
  th->add_option("--samples", th_samples);
  th->add_option("--seed", th_seed);

  auto* fb = app.add_subcommand("fiber", "fiber poset checks");
  fb->fallthrough();
  int fb_k = 1, fb_window = 2;
  fb->add_option("--k", fb_k)->required();
  fb->add_option("--window", fb_window);

  auto* el = app.add_subcommand("element", "tuple element arithmetic");
  el->fallthrough();
  std::string el_file, el_action;
  int el_genus = 1;
  el->add_option("--file", el_file)->required();
  el->add_option("--action", el_action)
      ->required()
      ->check(CLI::IsMember({"check", "invert", "mul", "mcg"}));
  el->add_option("--genus", el_genus);

  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif

  try {
    if (*vp) {
      return cmd_verify_presentation(vp_n, vp_k, *parse_group(vp_group), vp_schemas, vp_budget,
                                     vp_force, vp_serial);
    }
    if (*h1c) return cmd_h1(h1_n, h1_k, *parse_group(h1_group), h1_budget, h1_force);
    if (*cx) {
      return cmd_complex(cx_n, cx_k, *parse_variant(cx_variant), cx_sigma, cx_dim_only, cx_cache,
                         cx_budget, cx_force, cx_serial);
    }
    if (*th) return cmd_theta(th_n, th_k, th_samples, th_seed);
    if (*fb) return cmd_fiber(fb_k, fb_window);
    if (*el) return cmd_element(el_file, el_action, el_genus);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}
