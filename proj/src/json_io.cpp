#include "isgcoh/json_io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

using nlohmann::json;

namespace isgcoh {

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  json j;
  in >> j;
  return j;
}

FiniteInverseSemigroup semigroup_from_json(const json& j) {
  if (!j.contains("elements") || !j.contains("table"))
    throw FormatError("semigroup JSON needs 'elements' and 'table'");
  std::vector<std::string> names = j.at("elements");
  std::vector<std::vector<int>> table = j.at("table");
  return FiniteInverseSemigroup::build(std::move(names), std::move(table));
}

json semigroup_to_json(const FiniteInverseSemigroup& S) {
  json j;
  j["elements"] = S.names();
  std::vector<std::vector<int>> t(S.size(), std::vector<int>(S.size()));
  for (int a = 0; a < S.size(); ++a)
    for (int b = 0; b < S.size(); ++b) t[a][b] = S.mul(a, b);
  j["table"] = t;
  return j;
}

fixtures::ModuleBundle module_from_json(const json& j,
                                        FiniteInverseSemigroup T) {
  if (!j.contains("theta") || !j.contains("components") || !j.contains("eta"))
    throw FormatError("module JSON needs 'theta', 'components' and 'eta'");

  // assemble the global coefficient semigroup from the per-idempotent
  // components, bonding maps giving the transport to lower components
  struct Comp {
    int e_T;  // T idempotent id
    std::vector<std::string> elems;
    std::vector<std::vector<int>> table;
    int base;  // offset into the global element list
  };
  std::vector<Comp> comps;
  std::map<std::string, int> global;  // element name -> global id
  std::vector<std::string> names;
  for (auto& [ename, cj] : j.at("components").items()) {
    auto e = T.id_of(ename);
    if (!e || !T.idem(*e))
      throw FormatError("component key is not an idempotent of T: " + ename);
    Comp c;
    c.e_T = *e;
    c.elems = cj.at("elements").get<std::vector<std::string>>();
    c.table = cj.at("table").get<std::vector<std::vector<int>>>();
    c.base = static_cast<int>(names.size());
    for (const auto& nm : c.elems) {
      if (global.count(nm))
        throw FormatError("duplicate coefficient element name: " + nm);
      global[nm] = static_cast<int>(names.size());
      names.push_back(nm);
    }
    comps.push_back(std::move(c));
  }
  for (int e : T.idempotents()) {
    bool found = false;
    for (const auto& c : comps) found = found || c.e_T == e;
    if (!found)
      throw FormatError("missing component over idempotent " + T.name(e));
  }
  const int total = static_cast<int>(names.size());
  auto comp_of = [&](int a) {
    for (size_t k = 0; k < comps.size(); ++k)
      if (a >= comps[k].base &&
          a < comps[k].base + static_cast<int>(comps[k].elems.size()))
        return static_cast<int>(k);
    throw FormatError("coefficient id out of range");
  };
  // bonding[k][m] : component k -> component m (for meet-targets)
  std::map<std::pair<int, int>, std::vector<int>> bonding;
  if (j.contains("bonding")) {
    for (auto& [key, mj] : j.at("bonding").items()) {
      auto gt = key.find('>');
      if (gt == std::string::npos)
        throw FormatError("bonding key must look like 'e>f': " + key);
      auto eh = T.id_of(key.substr(0, gt)), el = T.id_of(key.substr(gt + 1));
      if (!eh || !el) throw FormatError("unknown idempotent in bonding " + key);
      int kh = -1, kl = -1;
      for (size_t k = 0; k < comps.size(); ++k) {
        if (comps[k].e_T == *eh) kh = static_cast<int>(k);
        if (comps[k].e_T == *el) kl = static_cast<int>(k);
      }
      std::vector<int> map(comps[kh].elems.size(), -1);
      for (auto& [from, to] : mj.items()) {
        int gf = global.at(from), gt2 = global.at(to.get<std::string>());
        map[gf - comps[kh].base] = gt2 - comps[kl].base;
      }
      for (int v : map)
        if (v < 0) throw FormatError("incomplete bonding map " + key);
      bonding[{kh, kl}] = std::move(map);
    }
  }
  auto transport = [&](int k, int km, int local) -> int {
    if (k == km) return local;
    auto it = bonding.find({k, km});
    if (it != bonding.end()) return it->second[local];
    if (comps[km].elems.size() == 1) return 0;  // forced for trivial targets
    throw FormatError("missing bonding map from component over " +
                      T.name(comps[k].e_T) + " down to " +
                      T.name(comps[km].e_T));
  };
  std::vector<std::vector<int>> table(total, std::vector<int>(total));
  for (int a = 0; a < total; ++a)
    for (int b = 0; b < total; ++b) {
      int ka = comp_of(a), kb = comp_of(b);
      int em = T.mul(comps[ka].e_T, comps[kb].e_T);
      int km = -1;
      for (size_t k = 0; k < comps.size(); ++k)
        if (comps[k].e_T == em) km = static_cast<int>(k);
      int la = transport(ka, km, a - comps[ka].base);
      int lb = transport(kb, km, b - comps[kb].base);
      table[a][b] = comps[km].base + comps[km].table[la][lb];
    }

  fixtures::ModuleBundle b;
  b.T = std::make_unique<FiniteInverseSemigroup>(std::move(T));
  b.A = std::make_unique<SemilatticeOfAbelianGroups>(
      SemilatticeOfAbelianGroups::build(
          FiniteInverseSemigroup::build(names, std::move(table))));
  b.M.T = b.T.get();
  b.M.A = b.A.get();
  b.M.theta.assign(b.T->size(), -1);
  for (auto& [ename, aname] : j.at("theta").items()) {
    auto e = b.T->id_of(ename);
    auto a = b.A->sg.id_of(aname.get<std::string>());
    if (!e || !a) throw FormatError("theta references unknown element");
    b.M.theta[*e] = *a;
  }
  b.M.eta.assign(b.T->size(), std::vector<int>(b.A->size(), -1));
  for (auto& [tname, mj] : j.at("eta").items()) {
    auto t = b.T->id_of(tname);
    if (!t) throw FormatError("eta references unknown element " + tname);
    for (auto& [from, to] : mj.items()) {
      auto af = b.A->sg.id_of(from);
      auto at = b.A->sg.id_of(to.get<std::string>());
      if (!af || !at) throw FormatError("eta map references unknown element");
      b.M.eta[*t][*af] = *at;
    }
  }
  for (int t = 0; t < b.T->size(); ++t)
    for (int a = 0; a < b.A->size(); ++a)
      if (b.M.eta[t][a] < 0)
        throw FormatError("eta map incomplete at " + b.T->name(t));
  return b;
}

json module_to_json(const TModule& M) {
  json j;
  const auto& T = *M.T;
  const auto& A = M.A->sg;
  json comps = json::object(), theta = json::object(), eta = json::object();
  for (int e : T.idempotents()) {
    theta[T.name(e)] = A.name(M.theta[e]);
    auto elems = M.A->component_elems(M.theta[e]);
    json cj;
    std::vector<std::string> nm;
    for (int a : elems) nm.push_back(A.name(a));
    std::vector<std::vector<int>> tab(elems.size(),
                                      std::vector<int>(elems.size()));
    for (size_t x = 0; x < elems.size(); ++x)
      for (size_t y = 0; y < elems.size(); ++y) {
        int p = A.mul(elems[x], elems[y]);
        tab[x][y] = static_cast<int>(
            std::find(elems.begin(), elems.end(), p) - elems.begin());
      }
    cj["elements"] = nm;
    cj["table"] = tab;
    comps[T.name(e)] = cj;
  }
  json bonding = json::object();
  for (int e : T.idempotents())
    for (int f : T.idempotents()) {
      if (e == f || T.mul(e, f) != f) continue;
      if (M.A->component_elems(M.theta[f]).size() <= 1) continue;
      json mj;
      for (int a : M.A->component_elems(M.theta[e]))
        mj[A.name(a)] = A.name(A.mul(M.theta[f], a));
      bonding[T.name(e) + ">" + T.name(f)] = mj;
    }
  for (int t = 0; t < T.size(); ++t) {
    json mj;
    for (int a = 0; a < A.size(); ++a) mj[A.name(a)] = A.name(M.eta[t][a]);
    eta[T.name(t)] = mj;
  }
  j["theta"] = theta;
  j["components"] = comps;
  if (!bonding.empty()) j["bonding"] = bonding;
  j["eta"] = eta;
  return j;
}

Cochain cochain_from_json(const json& j, const TModule& M) {
  int n = j.at("degree");
  Cochain f = trivial_cochain(M, n);
  const auto& T = *M.T;
  if (j.contains("entries"))
    for (auto& [key, val] : j.at("entries").items()) {
      std::vector<int> s;
      std::stringstream ss(key);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        auto id = T.id_of(tok);
        if (!id) throw FormatError("unknown element in tuple: " + tok);
        s.push_back(*id);
      }
      if (static_cast<int>(s.size()) != n)
        throw FormatError("tuple arity mismatch: " + key);
      auto a = M.A->sg.id_of(val.get<std::string>());
      if (!a) throw FormatError("unknown coefficient: " + val.get<std::string>());
      f.set(s, *a);
    }
  if (!is_valid_cochain(f))
    throw FormatError("cochain entry outside its component");
  return f;
}

json cochain_to_json(const Cochain& f) {
  json j;
  j["degree"] = f.degree;
  json entries = json::object();
  const auto& T = *f.M->T;
  for (long long i = 0; i < f.tuples(); ++i) {
    auto s = f.tuple_at(i);
    if (f.vals[i] == tuple_component_identity(*f.M, s)) continue;
    std::string key;
    for (size_t k = 0; k < s.size(); ++k)
      key += (k ? "," : "") + T.name(s[k]);
    entries[key] = f.M->A->sg.name(f.vals[i]);
  }
  j["entries"] = entries;
  return j;
}

}  // namespace isgcoh
