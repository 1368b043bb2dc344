#include "isgcoh/fixtures.hpp"

#include <array>
#include <map>

namespace isgcoh::fixtures {

FiniteInverseSemigroup z2() {
  return FiniteInverseSemigroup::build({"1", "g"}, {{0, 1}, {1, 0}});
}

FiniteInverseSemigroup chain2() {
  return FiniteInverseSemigroup::build({"e", "f"}, {{0, 1}, {1, 1}});
}

FiniteInverseSemigroup clifford4() {
  // ids: 0=(1,e) 1=(g,e) 2=(1,f) 3=(g,f); product is componentwise
  auto mul = [](int a, int b) {
    int g = (a & 1) ^ (b & 1);
    int f = (a >> 1) | (b >> 1);
    return (f << 1) | g;
  };
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[a][b] = mul(a, b);
  return FiniteInverseSemigroup::build({"1", "g", "f", "gf"}, std::move(t));
}

FiniteInverseSemigroup sym_inv2() {
  // partial injections on {0,1}; maps[i][x] = image of x, -1 if undefined
  std::vector<std::array<int, 2>> maps = {
      {-1, -1}, {0, -1}, {1, -1}, {-1, 0}, {-1, 1}, {0, 1}, {1, 0}};
  std::vector<std::string> names = {"0",    "[0->0]", "[0->1]", "[1->0]",
                                    "[1->1]", "id",   "(01)"};
  auto compose = [&](int i, int j) {  // first j, then i
    std::array<int, 2> c;
    for (int x = 0; x < 2; ++x) {
      int y = maps[j][x];
      c[x] = (y == -1) ? -1 : maps[i][y];
    }
    return c;
  };
  auto find = [&](const std::array<int, 2>& m) {
    for (size_t k = 0; k < maps.size(); ++k)
      if (maps[k] == m) return static_cast<int>(k);
    throw std::logic_error("composition escaped the listed maps");
  };
  std::vector<std::vector<int>> t(7, std::vector<int>(7));
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) t[i][j] = find(compose(i, j));
  return FiniteInverseSemigroup::build(std::move(names), std::move(t));
}

FiniteInverseSemigroup z4() {
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[a][b] = (a + b) % 4;
  return FiniteInverseSemigroup::build({"0", "1", "2", "3"}, std::move(t));
}

SemilatticeOfAbelianGroups z2_coeff() {
  return SemilatticeOfAbelianGroups::build(
      FiniteInverseSemigroup::build({"1", "a"}, {{0, 1}, {1, 0}}));
}

SemilatticeOfAbelianGroups chain_coeff() {
  // 0=1_e, 1=a (order 2 over e), 2=1_f; everything meets 1_f to 1_f
  return SemilatticeOfAbelianGroups::build(FiniteInverseSemigroup::build(
      {"1e", "a", "1f"}, {{0, 1, 2}, {1, 0, 2}, {2, 2, 2}}));
}

ModuleBundle z2_module() {
  ModuleBundle b;
  b.T = std::make_unique<FiniteInverseSemigroup>(z2());
  b.A = std::make_unique<SemilatticeOfAbelianGroups>(z2_coeff());
  b.M.T = b.T.get();
  b.M.A = b.A.get();
  b.M.theta = {0, -1};
  b.M.eta = {{0, 1}, {0, 1}};
  return b;
}

ModuleBundle chain2_module() {
  ModuleBundle b;
  b.T = std::make_unique<FiniteInverseSemigroup>(chain2());
  b.A = std::make_unique<SemilatticeOfAbelianGroups>(chain_coeff());
  b.M.T = b.T.get();
  b.M.A = b.A.get();
  b.M.theta = {0, 2};
  b.M.eta = {{0, 1, 2}, {2, 2, 2}};
  return b;
}

ModuleBundle clifford4_module() {
  ModuleBundle b;
  b.T = std::make_unique<FiniteInverseSemigroup>(clifford4());
  b.A = std::make_unique<SemilatticeOfAbelianGroups>(chain_coeff());
  b.M.T = b.T.get();
  b.M.A = b.A.get();
  b.M.theta = {0, -1, 2, -1};
  b.M.eta = {{0, 1, 2}, {0, 1, 2}, {2, 2, 2}, {2, 2, 2}};
  return b;
}

}  // namespace isgcoh::fixtures
