#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "isgcoh/correspondence.hpp"
#include "isgcoh/extraction.hpp"
#include "isgcoh/json_io.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace isgcoh;

namespace {

json from_py(const py::object& o) {
  auto dumps = py::module_::import("json").attr("dumps");
  return json::parse(std::string(py::str(dumps(o))));
}

py::object to_py(const json& j) {
  auto loads = py::module_::import("json").attr("loads");
  return loads(j.dump());
}

fixtures::ModuleBundle bundle(const py::object& sg, const py::object& mod) {
  return module_from_json(from_py(mod), semigroup_from_json(from_py(sg)));
}

SampleConfig config(std::uint64_t seed, int max_word_len, bool checked,
                    long long budget) {
  SampleConfig cfg;
  cfg.seed = seed;
  cfg.max_word_len = max_word_len;
  cfg.checked = checked;
  cfg.budget = budget;
  return cfg;
}

json stages_json(const RoundTripReport& rep) {
  json stages = json::array();
  for (const auto& st : rep.stages) {
    json s = {{"name", st.name}, {"ok", st.ok}};
    if (!st.violations.empty()) {
      json v = json::array();
      for (const auto& viol : st.violations)
        v.push_back({{"axiom", viol.axiom}, {"witness", viol.witness}});
      s["violations"] = std::move(v);
    }
    stages.push_back(std::move(s));
  }
  return stages;
}

}  // namespace

PYBIND11_MODULE(_isgcoh, m) {
  m.doc() = "inverse semigroup cohomology and crossed module extensions";

  py::register_exception<PreconditionFailed>(m, "PreconditionFailed");
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded");
  py::register_exception<FormatError>(m, "FormatError");

  m.def(
      "validate",
      [](const py::object& sg, const py::object& mod) {
        auto b = bundle(sg, mod);
        json out = json::array();
        for (const auto& v : validate_tmodule(b.M))
          out.push_back({{"axiom", v.axiom}, {"witness", v.witness}});
        return to_py(out);
      },
      py::arg("semigroup"), py::arg("module"),
      "validate a module instance; returns the list of axiom violations");

  m.def(
      "cohomology",
      [](const py::object& sg, const py::object& mod, int degree,
         bool order_preserving, long long budget) {
        auto b = bundle(sg, mod);
        auto res = cohomology(b.M, degree, order_preserving, budget);
        json out = {{"c", res.c_order},
                    {"z", res.z_order},
                    {"b", res.b_order},
                    {"h", res.h_order}};
        json reps = json::array();
        for (const auto& rep : res.reps) reps.push_back(cochain_to_json(rep));
        out["representatives"] = std::move(reps);
        return to_py(out);
      },
      py::arg("semigroup"), py::arg("module"), py::arg("degree"),
      py::arg("order_preserving") = false, py::arg("budget") = 1 << 20,
      "enumerate cochains and return |C|,|Z|,|B|,|H| with class "
      "representatives");

  m.def(
      "normalize_cocycle",
      [](const py::object& sg, const py::object& mod, const py::object& coc) {
        auto b = bundle(sg, mod);
        Cochain c = cochain_from_json(from_py(coc), b.M);
        auto [cn, d] = normalize_cocycle(c);
        return to_py(json{{"normalized", cochain_to_json(cn)},
                          {"witness", cochain_to_json(d)}});
      },
      py::arg("semigroup"), py::arg("module"), py::arg("cochain"),
      "strongly normalize an order-preserving 3-cocycle; returns the "
      "normalized cocycle and the 2-cochain witness");

  m.def(
      "roundtrip",
      [](const py::object& sg, const py::object& mod, const py::object& coc,
         const std::string& mode, std::uint64_t seed, int max_word_len,
         bool checked, long long budget) {
        auto b = bundle(sg, mod);
        Cochain c = cochain_from_json(from_py(coc), b.M);
        SampleConfig cfg = config(seed, max_word_len, checked, budget);
        RoundTripReport rep;
        if (mode == "theorem") {
          if (!is_f_inverse_monoid(*b.M.T).f_inverse)
            throw PreconditionFailed(
                "theorem mode requires an F-inverse monoid");
          rep = theorem_harness(b.M, c, cfg);
        } else if (mode == "extension") {
          auto ctx = build_extension_from_cocycle(b.M, c, cfg);
          bool fi = is_f_inverse_monoid(*b.M.T).f_inverse;
          auto tr = canonical_cover_transversals(ctx, fi);
          rep = roundtrip_extension(cover_extension(ctx), tr, cfg);
          if (rep.extracted) rep.extracted->M = &b.M;
        } else {
          throw FormatError("mode must be 'theorem' or 'extension'");
        }
        json out = {{"ok", rep.ok}, {"stages", stages_json(rep)}};
        if (rep.extracted) out["extracted"] = cochain_to_json(*rep.extracted);
        return to_py(out);
      },
      py::arg("semigroup"), py::arg("module"), py::arg("cochain"),
      py::arg("mode") = "theorem", py::arg("seed") = 0,
      py::arg("max_word_len") = 3, py::arg("checked") = false,
      py::arg("budget") = 1 << 20,
      "run the cocycle -> cover extension -> cocycle pipeline and report "
      "every verification stage");

  m.def(
      "is_f_inverse",
      [](const py::object& sg) {
        auto S = semigroup_from_json(from_py(sg));
        auto r = is_f_inverse_monoid(S);
        return py::make_tuple(r.f_inverse && r.monoid, r.monoid);
      },
      py::arg("semigroup"),
      "returns (is F-inverse monoid, is monoid) for a multiplication table");
}
