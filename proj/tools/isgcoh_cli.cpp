#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "isgcoh/correspondence.hpp"
#include "isgcoh/extraction.hpp"
#include "isgcoh/json_io.hpp"

using nlohmann::json;
using namespace isgcoh;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitBudget = 4;

struct GlobalOpts {
  std::uint64_t seed = 0;
  int max_word_len = 3;
  long long budget = 1 << 20;
  bool checked = false;
  bool as_json = false;
  int jobs = 1;
};

long long default_budget() {
  if (const char* env = std::getenv("ISGCOH_BUDGET")) {
    try {
      return std::stoll(env);
    } catch (const std::exception&) {
      throw FormatError("ISGCOH_BUDGET is not an integer");
    }
  }
  return 1 << 20;
}

SampleConfig to_config(const GlobalOpts& g) {
  SampleConfig cfg;
  cfg.seed = g.seed;
  cfg.max_word_len = g.max_word_len;
  cfg.checked = g.checked;
  cfg.budget = g.budget;
  return cfg;
}

void add_global_flags(CLI::App* cmd, GlobalOpts& g) {
  cmd->add_option("--seed", g.seed, "seed for all sampled checks");
  cmd->add_option("--max-word-len", g.max_word_len,
                  "maximum reduced word length when sampling cover elements");
  cmd->add_option("--budget", g.budget,
                  "enumeration budget (cochains visited per search)");
  cmd->add_flag("--checked", g.checked,
                "cross-check closed-form action values against the recursion");
  cmd->add_flag("--json", g.as_json, "emit the machine-readable JSON report");
  cmd->add_option("--jobs", g.jobs, "upper bound on parallel workers")
      ->check(CLI::PositiveNumber);
}

void emit(const json& report, bool as_json) {
  if (as_json) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::cout << report["command"].get<std::string>() << ": "
            << (report["ok"].get<bool>() ? "pass" : "fail") << "\n";
  if (report.contains("checks"))
    for (const auto& c : report["checks"])
      std::cout << "  " << c["name"].get<std::string>() << ": "
                << (c["ok"].get<bool>() ? "ok" : "FAIL")
                << (c.contains("witness")
                        ? "  (" + c["witness"].get<std::string>() + ")"
                        : "")
                << "\n";
  if (report.contains("orders")) {
    const auto& o = report["orders"];
    std::cout << "  |C| = " << o["c"].get<long long>()
              << "  |Z| = " << o["z"].get<long long>()
              << "  |B| = " << o["b"].get<long long>()
              << "  |H| = " << o["h"].get<long long>() << "\n";
  }
  if (report.contains("stages"))
    for (const auto& s : report["stages"])
      std::cout << "  " << s["name"].get<std::string>() << ": "
                << (s["ok"].get<bool>() ? "ok" : "FAIL") << "\n";
}

json violations_to_json(const std::vector<Violation>& v) {
  json out = json::array();
  for (const auto& viol : v)
    out.push_back({{"axiom", viol.axiom}, {"witness", viol.witness}});
  return out;
}

json stages_to_json(const RoundTripReport& rep) {
  json out = json::array();
  for (const auto& st : rep.stages) {
    json s = {{"name", st.name}, {"ok", st.ok}};
    if (!st.violations.empty())
      s["violations"] = violations_to_json(st.violations);
    out.push_back(std::move(s));
  }
  return out;
}

struct Bundle {
  fixtures::ModuleBundle mb;
  std::optional<Cochain> cochain;
};

Bundle load_bundle(const std::string& sg_path, const std::string& mod_path,
                   const std::string& cochain_path) {
  Bundle b;
  auto S = semigroup_from_json(load_json_file(sg_path));
  b.mb = module_from_json(load_json_file(mod_path), std::move(S));
  if (!cochain_path.empty())
    b.cochain = cochain_from_json(load_json_file(cochain_path), b.mb.M);
  return b;
}

int cmd_validate(const std::string& sg_path, const std::string& mod_path,
                 const std::vector<std::string>& cochain_paths,
                 const GlobalOpts& g) {
  json report = {{"command", "validate"}, {"ok", true}};
  json checks = json::array();
  auto fail = [&](const std::string& name, const std::string& witness) {
    checks.push_back({{"name", name}, {"ok", false}, {"witness", witness}});
    report["ok"] = false;
  };
  auto pass = [&](const std::string& name) {
    checks.push_back({{"name", name}, {"ok", true}});
  };

  std::optional<FiniteInverseSemigroup> S;
  try {
    S = semigroup_from_json(load_json_file(sg_path));
    pass("semigroup");
  } catch (const NotAssociative& e) {
    fail("semigroup", "not associative at (" + std::to_string(e.x) + "," +
                          std::to_string(e.y) + "," + std::to_string(e.z) +
                          ")");
  } catch (const std::exception& e) {
    fail("semigroup", e.what());
  }

  std::optional<fixtures::ModuleBundle> mb;
  if (S && !mod_path.empty()) {
    try {
      mb = module_from_json(load_json_file(mod_path), std::move(*S));
      auto v = validate_tmodule(mb->M);
      if (v.empty())
        pass("module");
      else
        fail("module", v[0].axiom + " at " + v[0].witness[0]);
    } catch (const std::exception& e) {
      fail("module", e.what());
    }
  }

  for (const auto& path : cochain_paths) {
    if (!mb) {
      fail("cochain " + path, "no valid module to validate against");
      continue;
    }
    try {
      Cochain c = cochain_from_json(load_json_file(path), mb->M);
      if (is_valid_cochain(c))
        pass("cochain " + path);
      else
        fail("cochain " + path, "entry outside its component");
    } catch (const std::exception& e) {
      fail("cochain " + path, e.what());
    }
  }

  report["checks"] = std::move(checks);
  emit(report, g.as_json);
  return report["ok"].get<bool>() ? kExitOk : kExitValidation;
}

int cmd_cohomology(const std::string& sg_path, const std::string& mod_path,
                   int degree, bool order_preserving, const GlobalOpts& g) {
  Bundle b = load_bundle(sg_path, mod_path, "");
  auto res = cohomology(b.mb.M, degree, order_preserving, g.budget);
  json report = {{"command", "cohomology"},
                 {"ok", true},
                 {"degree", degree},
                 {"order_preserving", order_preserving},
                 {"orders",
                  {{"c", res.c_order},
                   {"z", res.z_order},
                   {"b", res.b_order},
                   {"h", res.h_order}}}};
  json reps = json::array();
  for (const auto& rep : res.reps) reps.push_back(cochain_to_json(rep));
  report["representatives"] = std::move(reps);
  emit(report, g.as_json);
  if (!g.as_json) {
    for (const auto& rep : res.reps)
      std::cout << "  representative: " << cochain_to_json(rep)["entries"].dump()
                << "\n";
  }
  return kExitOk;
}

int cmd_roundtrip(const std::string& sg_path, const std::string& mod_path,
                  const std::string& cochain_path, const std::string& mode,
                  const GlobalOpts& g) {
  Bundle b = load_bundle(sg_path, mod_path, cochain_path);
  SampleConfig cfg = to_config(g);

  RoundTripReport rep;
  if (mode == "theorem") {
    if (!is_f_inverse_monoid(*b.mb.M.T).f_inverse)
      throw PreconditionFailed("NotFInverse: theorem mode requires an "
                               "F-inverse monoid");
    rep = theorem_harness(b.mb.M, *b.cochain, cfg);
  } else {
    auto ctx = build_extension_from_cocycle(b.mb.M, *b.cochain, cfg);
    auto X = cover_extension(ctx);
    bool fi = is_f_inverse_monoid(*b.mb.M.T).f_inverse;
    auto tr = canonical_cover_transversals(ctx, fi);
    rep = roundtrip_extension(X, tr, cfg);
    if (rep.extracted) rep.extracted->M = &b.mb.M;
  }

  json report = {{"command", "roundtrip"},
                 {"mode", mode},
                 {"seed", g.seed},
                 {"ok", rep.ok},
                 {"stages", stages_to_json(rep)}};
  if (rep.extracted) report["extracted"] = cochain_to_json(*rep.extracted);
  emit(report, g.as_json);
  return rep.ok ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"inverse semigroup cohomology and crossed module extensions"};
  app.require_subcommand(1);

  GlobalOpts g;
  try {
    g.budget = default_budget();
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  std::string sg_path, mod_path, cochain_path, mode = "theorem";
  std::vector<std::string> cochain_paths;
  int degree = 3;
  bool order_preserving = false;

  auto* validate = app.add_subcommand("validate", "check instance files");
  validate->add_option("--semigroup", sg_path, "semigroup JSON")->required();
  validate->add_option("--module", mod_path, "module JSON");
  validate->add_option("--cochain", cochain_paths, "cochain JSON (repeatable)");
  add_global_flags(validate, g);

  auto* coh = app.add_subcommand("cohomology", "enumerate Z/B/H in a degree");
  coh->add_option("--semigroup", sg_path, "semigroup JSON")->required();
  coh->add_option("--module", mod_path, "module JSON")->required();
  coh->add_option("--degree", degree, "cochain degree")->required();
  coh->add_flag("--order-preserving", order_preserving,
                "restrict to the order-preserving subcomplex");
  add_global_flags(coh, g);

  auto* rt = app.add_subcommand("roundtrip",
                                "cocycle -> extension -> cocycle pipeline");
  rt->add_option("--semigroup", sg_path, "semigroup JSON")->required();
  rt->add_option("--module", mod_path, "module JSON")->required();
  rt->add_option("--cochain", cochain_path, "3-cochain JSON")->required();
  rt->add_option("--mode", mode, "theorem | extension")
      ->check(CLI::IsMember({"theorem", "extension"}));
  add_global_flags(rt, g);

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed())
      return cmd_validate(sg_path, mod_path, cochain_paths, g);
    if (coh->parsed())
      return cmd_cohomology(sg_path, mod_path, degree, order_preserving, g);
    return cmd_roundtrip(sg_path, mod_path, cochain_path, mode, g);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: budget exceeded (required " << e.required
              << ", budget " << e.budget << ")\n";
    return kExitBudget;
  } catch (const PreconditionFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const NotAssociative& e) {
    std::cerr << "error: " << e.what() << " at (" << e.x << "," << e.y << ","
              << e.z << ")\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
