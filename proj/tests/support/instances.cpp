#include "instances.hpp"

using namespace cssc;

namespace fixtures {

namespace {

CGroup cyclic_eq(Elem n) {
  CGroup::Tables t;
  for (Elem i = 0; i < n; ++i) {
    t.elements.push_back(std::to_string(i));
    t.neg.push_back((n - i) % n);
    t.block.push_back(i);
    for (Elem j = 0; j < n; ++j) t.add.push_back((i + j) % n);
  }
  return CGroup(std::move(t));
}

}  // namespace

CGroup z2eq() { return cyclic_eq(2); }
CGroup z3eq() { return cyclic_eq(3); }
CGroup z4eq() { return cyclic_eq(4); }
CGroup trivial_cgroup() { return cyclic_eq(1); }

CGroup x2tot() { return CGroup({{"x0", "x1"}, {1, 0, 0, 0}, 0, {0, 1}, {0, 0}}); }

CGroup z2tot() { return CGroup({{"0", "1"}, {0, 1, 1, 0}, 0, {0, 1}, {0, 0}}); }

CGroupMorphism mod2() { return {z4eq(), z2eq(), {0, 1, 0, 1}}; }

CAction inversion() { return {z2eq(), z3eq(), {0, 1, 2, 0, 2, 1}}; }

CCrossedModule to_trivial(const CGroup& m, const PairSet& w) {
  const auto n = m.size();
  std::vector<Elem> dot(n);
  for (Elem c = 0; c < n; ++c) dot[c] = c;
  return make_crossed_module(m, trivial_cgroup(), std::vector<Elem>(n, 0), std::move(dot), w);
}

CCrossedModule from_trivial(const CGroup& n) {
  return make_crossed_module(trivial_cgroup(), n, {n.zero()}, std::vector<Elem>(n.size(), 0), PairSet::diagonal(1));
}

CatGroup dz2() {
  CatGroup::Tables t;
  t.objects = {"0", "1"};
  t.arrows = {"1_0", "1_1"};
  t.dom = {0, 1};
  t.cod = {0, 1};
  t.id = {0, 1};
  t.comp = {0, kNone, kNone, 1};
  t.obj_add = {0, 1, 1, 0};
  t.arr_add = {0, 1, 1, 0};
  t.zero = 0;
  for (Elem x = 0; x < 2; ++x)
    for (Elem y = 0; y < 2; ++y)
      for (Elem z = 0; z < 2; ++z) t.alpha.push_back((x + y + z) % 2);
  t.lambda = t.rho = {0, 1};
  t.neg_obj = {0, 1};
  t.eps = t.delta = {0, 0};
  t.neg_arr = {0, 1};
  return CatGroup(std::move(t));
}

CatGroup bz2() {
  CatGroup::Tables t;
  t.objects = {"*"};
  t.arrows = {"0", "1"};
  t.dom = t.cod = {0, 0};
  t.id = {0};
  t.comp = {0, 1, 1, 0};  // comp[g * 2 + f]
  t.obj_add = {0};
  t.arr_add = {0, 1, 1, 0};
  t.zero = 0;
  t.alpha = {0};
  t.lambda = t.rho = t.eps = t.delta = {0};
  t.neg_obj = {0};
  t.neg_arr = {0, 1};
  return CatGroup(std::move(t));
}

Elem el(const CGroup& g, const std::string& name) { return g.index(name); }
Elem obj(const CatGroup& c, const std::string& name) { return c.objects().index(name); }
Elem arr(const CatGroup& c, const std::string& name) { return c.arrows().index(name); }

}  // namespace fixtures
