#include "torcob/fanlib.hpp"

namespace torcob {

namespace {

LatticeVector vec(std::initializer_list<int> xs) {
  LatticeVector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

Fan affine_space(int s) {
  if (s < 1) throw std::invalid_argument("affine_space: s must be positive");
  std::vector<LatticeVector> rays;
  std::vector<int> cone;
  for (int i = 0; i < s; ++i) {
    LatticeVector e(s, 0);
    e[i] = 1;
    rays.push_back(std::move(e));
    cone.push_back(i);
  }
  return Fan::make(s, std::move(rays), {cone}, "a" + std::to_string(s));
}

Fan projective_space(int n) {
  if (n < 1) throw std::invalid_argument("projective_space: n must be positive");
  std::vector<LatticeVector> rays;
  for (int i = 0; i < n; ++i) {
    LatticeVector e(n, 0);
    e[i] = 1;
    rays.push_back(std::move(e));
  }
  rays.push_back(LatticeVector(n, -1));
  std::vector<std::vector<int>> cones;
  for (int skip = 0; skip <= n; ++skip) {
    std::vector<int> c;
    for (int i = 0; i <= n; ++i)
      if (i != skip) c.push_back(i);
    cones.push_back(std::move(c));
  }
  return Fan::make(n, std::move(rays), std::move(cones),
                   "p" + std::to_string(n));
}

Fan product_p1_p1() {
  return Fan::make(2, {vec({1, 0}), vec({0, 1}), vec({-1, 0}), vec({0, -1})},
                   {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, "p1xp1");
}

Fan hirzebruch(int a) {
  return Fan::make(2, {vec({1, 0}), vec({0, 1}), vec({-1, a}), vec({0, -1})},
                   {{0, 1}, {1, 2}, {2, 3}, {3, 0}},
                   "f" + std::to_string(a));
}

Fan blowup_p2() {
  return Fan::make(2, {vec({1, 0}), vec({0, 1}), vec({-1, -1}), vec({1, 1})},
                   {{0, 3}, {3, 1}, {1, 2}, {2, 0}}, "blp2");
}

std::vector<std::string> builtin_fan_names() {
  return {"a1", "a2", "a3", "p1", "p2", "p3", "p4",
          "p1xp1", "f0", "f1", "f2", "f3", "blp2"};
}

Fan builtin_fan(const std::string& name) {
  if (name == "a1") return affine_space(1);
  if (name == "a2") return affine_space(2);
  if (name == "a3") return affine_space(3);
  if (name == "p1") return projective_space(1);
  if (name == "p2") return projective_space(2);
  if (name == "p3") return projective_space(3);
  if (name == "p4") return projective_space(4);
  if (name == "p1xp1") return product_p1_p1();
  if (name == "f0") return hirzebruch(0);
  if (name == "f1") return hirzebruch(1);
  if (name == "f2") return hirzebruch(2);
  if (name == "f3") return hirzebruch(3);
  if (name == "blp2") return blowup_p2();
  throw std::invalid_argument("unknown built-in fan '" + name + "'");
}

}  // namespace torcob
