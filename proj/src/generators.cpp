#include "cssc/generators.hpp"

#include <algorithm>

namespace cssc {

namespace {

struct Indexed {
  CGroup group;
  std::vector<Elem> sorted;  // table index → group index
};

Indexed index_group(const GroupTable& table) {
  Indexed out{from_group(table), {}};
  for (const auto& name : table.elements) out.sorted.push_back(out.group.index(name));
  return out;
}

Elem table_identity(const GroupTable& g) {
  for (Elem e = 0; e < g.size(); ++e) {
    bool unit = true;
    for (Elem a = 0; a < g.size() && unit; ++a) unit = g.mul(e, a) == a && g.mul(a, e) == a;
    if (unit) return e;
  }
  throw Error(ErrorCode::NotAGroup, "no identity element");
}

Elem table_inverse(const GroupTable& g, Elem a) {
  const Elem e = table_identity(g);
  for (Elem b = 0; b < g.size(); ++b)
    if (g.mul(a, b) == e) return b;
  throw Error(ErrorCode::NotAGroup, "no inverse for " + g.elements[a]);
}

std::string pair_name(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

// Fills comp from dom/cod and a composition rule on composable pairs.
template <typename Rule>
void fill_comp(CatGroup::Tables& t, Rule rule) {
  const auto n1 = t.arrows.size();
  t.comp.assign(n1 * n1, kNone);
  for (Elem g = 0; g < n1; ++g)
    for (Elem f = 0; f < n1; ++f)
      if (t.cod[f] == t.dom[g]) t.comp[g * n1 + f] = rule(g, f);
}

}  // namespace

ValidationReport validate_classical(const ClassicalCrossedModule& x) {
  from_group(x.t);
  from_group(x.g);
  const auto nt = static_cast<Elem>(x.t.size()), ng = static_cast<Elem>(x.g.size());
  if (x.boundary.size() != nt || x.act.size() != std::size_t(ng) * nt)
    throw Error(ErrorCode::MalformedTable, "classical crossed module tables have the wrong shape");
  auto d = [&](Elem t) { return x.boundary[t]; };
  auto act = [&](Elem g, Elem t) { return x.act[g * nt + t]; };
  auto ginv = [&](Elem g) { return table_inverse(x.g, g); };
  const Elem ge = table_identity(x.g);
  ValidationReport r;
  r.subject = "classical crossed module";
  std::string w;
  for (Elem a = 0; a < nt && w.empty(); ++a)
    for (Elem b = 0; b < nt; ++b)
      if (d(x.t.mul(a, b)) != x.g.mul(d(a), d(b))) {
        w = pair_name(x.t.elements[a], x.t.elements[b]);
        break;
      }
  r.record("boundary is a homomorphism", w.empty(), w);
  w.clear();
  for (Elem g = 0; g < ng && w.empty(); ++g)
    for (Elem a = 0; a < nt && w.empty(); ++a) {
      for (Elem b = 0; b < nt; ++b)
        if (act(g, x.t.mul(a, b)) != x.t.mul(act(g, a), act(g, b))) {
          w = "g,t,t'=(" + x.g.elements[g] + "," + x.t.elements[a] + "," + x.t.elements[b] + ")";
          break;
        }
      for (Elem h = 0; h < ng && w.empty(); ++h)
        if (act(x.g.mul(g, h), a) != act(g, act(h, a)))
          w = "g,h,t=(" + x.g.elements[g] + "," + x.g.elements[h] + "," + x.t.elements[a] + ")";
      if (w.empty() && act(ge, a) != a) w = "identity acts nontrivially on " + x.t.elements[a];
    }
  r.record("action by automorphisms", w.empty(), w);
  w.clear();
  for (Elem g = 0; g < ng && w.empty(); ++g)
    for (Elem a = 0; a < nt; ++a)
      if (d(act(g, a)) != x.g.mul(x.g.mul(g, d(a)), ginv(g))) {
        w = pair_name(x.g.elements[g], x.t.elements[a]);
        break;
      }
  r.record("equivariance", w.empty(), w);
  w.clear();
  for (Elem a = 0; a < nt && w.empty(); ++a)
    for (Elem b = 0; b < nt; ++b) {
      if (act(d(a), b) != x.t.mul(x.t.mul(a, b), table_inverse(x.t, a))) {
        w = pair_name(x.t.elements[a], x.t.elements[b]);
        break;
      }
    }
  r.record("Peiffer identity", w.empty(), w);
  return r;
}

CatGroup gen_discrete(const GroupTable& table) {
  const CGroup g = from_group(table);
  const auto n = static_cast<Elem>(g.size());
  CatGroup::Tables t;
  t.objects = g.carrier().names();
  for (Elem x = 0; x < n; ++x) {
    t.arrows.push_back("1_" + g.name(x));
    t.dom.push_back(x);
    t.cod.push_back(x);
    t.id.push_back(x);
    t.lambda.push_back(x);
    t.rho.push_back(x);
    t.neg_obj.push_back(g.neg(x));
    t.eps.push_back(g.zero());
    t.delta.push_back(g.zero());
    t.neg_arr.push_back(g.neg(x));
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      t.obj_add.push_back(g.add(x, y));
      t.arr_add.push_back(g.add(x, y));
      for (Elem z = 0; z < n; ++z) t.alpha.push_back(g.add(g.add(x, y), z));
    }
  t.zero = g.zero();
  fill_comp(t, [](Elem g2, Elem) { return g2; });
  return CatGroup(std::move(t));
}

CatGroup gen_delooping(const GroupTable& table) {
  const CGroup a = from_group(table);
  const auto n = static_cast<Elem>(a.size());
  const Elem e = a.zero();
  CatGroup::Tables t;
  t.objects = {"*"};
  t.arrows = a.carrier().names();
  t.dom.assign(n, 0);
  t.cod.assign(n, 0);
  t.id = {e};
  t.obj_add = {0};
  t.zero = 0;
  t.alpha = {e};
  t.lambda = {e};
  t.rho = {e};
  t.neg_obj = {0};
  t.eps = {e};
  t.delta = {e};
  for (Elem f = 0; f < n; ++f) {
    t.neg_arr.push_back(a.neg(f));
    for (Elem g = 0; g < n; ++g) t.arr_add.push_back(a.add(f, g));
  }
  fill_comp(t, [&](Elem g, Elem f) { return a.add(g, f); });
  return CatGroup(std::move(t));
}

CatGroup gen_skeletal_cocycle(const GroupTable& gt, const GroupTable& at, const std::vector<Elem>& omega) {
  const auto G = index_group(gt);
  const auto A = index_group(at);
  const auto& g = G.group;
  const auto& a = A.group;
  const auto ng = static_cast<Elem>(g.size()), na = static_cast<Elem>(a.size());
  if (omega.size() != std::size_t(ng) * ng * ng)
    throw Error(ErrorCode::MalformedTable, "cocycle table must have |G|^3 entries");
  // ω re-indexed by sorted positions.
  std::vector<Elem> w(omega.size());
  for (Elem x = 0; x < ng; ++x)
    for (Elem y = 0; y < ng; ++y)
      for (Elem z = 0; z < ng; ++z) {
        const Elem v = omega[(x * ng + y) * ng + z];
        if (v >= na) throw Error(ErrorCode::MalformedTable, "cocycle value leaves A");
        w[(G.sorted[x] * ng + G.sorted[y]) * ng + G.sorted[z]] = A.sorted[v];
      }
  auto om = [&](Elem x, Elem y, Elem z) { return w[(x * ng + y) * ng + z]; };
  for (Elem x = 0; x < ng; ++x)
    for (Elem y = 0; y < ng; ++y) {
      const Elem z0 = g.zero();
      if (om(z0, x, y) != a.zero() || om(x, z0, y) != a.zero() || om(x, y, z0) != a.zero())
        throw Error(ErrorCode::InvalidCategoricalGroup, "cocycle is not normalized at (" + g.name(x) + "," +
                                                            g.name(y) + ")");
    }

  auto arrow = [na](Elem x, Elem v) { return x * na + v; };
  CatGroup::Tables t;
  t.objects = g.carrier().names();
  for (Elem x = 0; x < ng; ++x)
    for (Elem v = 0; v < na; ++v) {
      t.arrows.push_back(pair_name(g.name(x), a.name(v)));
      t.dom.push_back(x);
      t.cod.push_back(x);
      t.neg_arr.push_back(arrow(g.neg(x), a.neg(v)));
    }
  const auto n1 = t.arrows.size();
  t.arr_add.resize(n1 * n1);
  for (Elem x = 0; x < ng; ++x)
    for (Elem v = 0; v < na; ++v)
      for (Elem y = 0; y < ng; ++y)
        for (Elem u = 0; u < na; ++u) t.arr_add[arrow(x, v) * n1 + arrow(y, u)] = arrow(g.add(x, y), a.add(v, u));
  for (Elem x = 0; x < ng; ++x) {
    t.id.push_back(arrow(x, a.zero()));
    t.lambda.push_back(arrow(x, a.zero()));
    t.rho.push_back(arrow(x, a.zero()));
    t.neg_obj.push_back(g.neg(x));
    t.eps.push_back(arrow(g.zero(), a.zero()));
    t.delta.push_back(arrow(g.zero(), om(x, g.neg(x), x)));
    for (Elem y = 0; y < ng; ++y) {
      t.obj_add.push_back(g.add(x, y));
      for (Elem z = 0; z < ng; ++z) t.alpha.push_back(arrow(g.add(g.add(x, y), z), om(x, y, z)));
    }
  }
  t.zero = g.zero();
  fill_comp(t, [&](Elem h, Elem f) { return arrow(h / na, a.add(h % na, f % na)); });
  return CatGroup(std::move(t));
}

CatGroup gen_brown_spencer(const ClassicalCrossedModule& x) {
  const auto report = validate_classical(x);
  if (!report.ok()) {
    const Check* bad = report.first_failure();
    throw Error(ErrorCode::InvalidModule, bad->name + " fails at " + bad->witness);
  }
  const auto T = index_group(x.t);
  const auto G = index_group(x.g);
  const auto& tg = T.group;
  const auto& gg = G.group;
  const auto nt = static_cast<Elem>(tg.size()), ng = static_cast<Elem>(gg.size());
  // boundary and action in sorted indices
  std::vector<Elem> d(nt), act(std::size_t(ng) * nt);
  for (Elem a = 0; a < nt; ++a) d[T.sorted[a]] = G.sorted[x.boundary[a]];
  for (Elem g = 0; g < ng; ++g)
    for (Elem a = 0; a < nt; ++a) act[G.sorted[g] * nt + T.sorted[a]] = T.sorted[x.act[g * nt + a]];
  auto dot = [&](Elem g, Elem a) { return act[g * nt + a]; };

  auto arrow = [nt](Elem a, Elem g) { return g * nt + a; };
  CatGroup::Tables t;
  t.objects = gg.carrier().names();
  for (Elem g = 0; g < ng; ++g)
    for (Elem a = 0; a < nt; ++a) {
      t.arrows.push_back(pair_name(tg.name(a), gg.name(g)));
      t.dom.push_back(g);
      t.cod.push_back(gg.add(d[a], g));
      t.neg_arr.push_back(arrow(dot(gg.neg(g), tg.neg(a)), gg.neg(g)));
    }
  const auto n1 = t.arrows.size();
  t.arr_add.resize(n1 * n1);
  for (Elem g1 = 0; g1 < ng; ++g1)
    for (Elem a1 = 0; a1 < nt; ++a1)
      for (Elem g2 = 0; g2 < ng; ++g2)
        for (Elem a2 = 0; a2 < nt; ++a2)
          t.arr_add[arrow(a1, g1) * n1 + arrow(a2, g2)] = arrow(tg.add(a1, dot(g1, a2)), gg.add(g1, g2));
  for (Elem g = 0; g < ng; ++g) {
    const Elem one = arrow(tg.zero(), g);
    t.id.push_back(one);
    t.neg_obj.push_back(gg.neg(g));
    t.eps.push_back(arrow(tg.zero(), gg.zero()));
    t.delta.push_back(arrow(tg.zero(), gg.zero()));
    for (Elem h = 0; h < ng; ++h) {
      t.obj_add.push_back(gg.add(g, h));
      for (Elem k = 0; k < ng; ++k) t.alpha.push_back(arrow(tg.zero(), gg.add(gg.add(g, h), k)));
    }
  }
  t.lambda = t.id;
  t.rho = t.id;
  t.zero = gg.zero();
  fill_comp(t, [&](Elem h, Elem f) { return arrow(tg.add(h % nt, f % nt), f / nt); });
  return CatGroup(std::move(t));
}

CatGroup gen_codiscrete(const CGroup& x) {
  const auto n = static_cast<Elem>(x.size());
  auto arrow = [n](Elem a, Elem b) { return a * n + b; };
  CatGroup::Tables t;
  t.objects = x.carrier().names();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      t.arrows.push_back(x.name(a) + ">" + x.name(b));
      t.dom.push_back(a);
      t.cod.push_back(b);
      t.neg_arr.push_back(arrow(x.neg(a), x.neg(b)));
    }
  const auto n1 = t.arrows.size();
  for (Elem f = 0; f < n1; ++f)
    for (Elem g = 0; g < n1; ++g)
      t.arr_add.push_back(arrow(x.add(f / n, g / n), x.add(f % n, g % n)));
  const Elem z = x.zero();
  for (Elem a = 0; a < n; ++a) {
    t.id.push_back(arrow(a, a));
    t.lambda.push_back(arrow(x.add(z, a), a));
    t.rho.push_back(arrow(x.add(a, z), a));
    t.neg_obj.push_back(x.neg(a));
    t.eps.push_back(arrow(x.add(x.neg(a), a), z));
    t.delta.push_back(arrow(x.add(a, x.neg(a)), z));
    for (Elem b = 0; b < n; ++b) {
      t.obj_add.push_back(x.add(a, b));
      for (Elem c = 0; c < n; ++c) t.alpha.push_back(arrow(x.add(x.add(a, b), c), x.add(a, x.add(b, c))));
    }
  }
  t.zero = z;
  fill_comp(t, [n](Elem g, Elem f) { return (f / n) * n + g % n; });
  return CatGroup(std::move(t));
}

CatGroup gen_product(const CatGroup& a, const CatGroup& b) {
  const auto a0 = static_cast<Elem>(a.num_objects()), b0 = static_cast<Elem>(b.num_objects());
  const auto a1 = static_cast<Elem>(a.num_arrows()), b1 = static_cast<Elem>(b.num_arrows());
  auto obj = [b0](Elem x, Elem y) { return x * b0 + y; };
  auto arr = [b1](Elem f, Elem g) { return f * b1 + g; };
  CatGroup::Tables t;
  for (Elem x = 0; x < a0; ++x)
    for (Elem y = 0; y < b0; ++y) t.objects.push_back(pair_name(a.object_name(x), b.object_name(y)));
  for (Elem f = 0; f < a1; ++f)
    for (Elem g = 0; g < b1; ++g) {
      t.arrows.push_back(pair_name(a.arrow_name(f), b.arrow_name(g)));
      t.dom.push_back(obj(a.dom(f), b.dom(g)));
      t.cod.push_back(obj(a.cod(f), b.cod(g)));
      t.neg_arr.push_back(arr(a.neg_arr(f), b.neg_arr(g)));
    }
  const auto n1 = t.arrows.size();
  for (Elem p = 0; p < n1; ++p)
    for (Elem q = 0; q < n1; ++q) t.arr_add.push_back(arr(a.arr_add(p / b1, q / b1), b.arr_add(p % b1, q % b1)));
  const auto n0 = t.objects.size();
  for (Elem p = 0; p < n0; ++p) {
    const Elem x = p / b0, y = p % b0;
    t.id.push_back(arr(a.id(x), b.id(y)));
    t.lambda.push_back(arr(a.lambda(x), b.lambda(y)));
    t.rho.push_back(arr(a.rho(x), b.rho(y)));
    t.neg_obj.push_back(obj(a.neg_obj(x), b.neg_obj(y)));
    t.eps.push_back(arr(a.eps(x), b.eps(y)));
    t.delta.push_back(arr(a.delta(x), b.delta(y)));
    for (Elem q = 0; q < n0; ++q) {
      t.obj_add.push_back(obj(a.obj_add(x, q / b0), b.obj_add(y, q % b0)));
      for (Elem r = 0; r < n0; ++r)
        t.alpha.push_back(arr(a.alpha(x, q / b0, r / b0), b.alpha(y, q % b0, r % b0)));
    }
  }
  t.zero = obj(a.zero(), b.zero());
  fill_comp(t, [&](Elem h, Elem f) { return arr(a.comp(h / b1, f / b1), b.comp(h % b1, f % b1)); });
  return CatGroup(std::move(t));
}

ClassicalCrossedModule normal_subgroup_module(const GroupTable& g, const std::vector<std::string>& members) {
  std::vector<Elem> idx;
  for (const auto& m : members) {
    auto it = std::find(g.elements.begin(), g.elements.end(), m);
    if (it == g.elements.end()) throw Error(ErrorCode::ElementOutsideParent, "unknown element '" + m + "'");
    idx.push_back(static_cast<Elem>(it - g.elements.begin()));
  }
  auto local = [&](Elem e) -> Elem {
    auto it = std::find(idx.begin(), idx.end(), e);
    if (it == idx.end()) throw Error(ErrorCode::NotASubgroup, "subset is not closed in " + g.elements[e]);
    return static_cast<Elem>(it - idx.begin());
  };
  const auto n = static_cast<Elem>(g.size()), k = static_cast<Elem>(idx.size());
  ClassicalCrossedModule x;
  x.g = g;
  x.t.elements = members;
  for (Elem a = 0; a < k; ++a)
    for (Elem b = 0; b < k; ++b) x.t.op.push_back(local(g.mul(idx[a], idx[b])));
  x.boundary = idx;
  for (Elem h = 0; h < n; ++h)
    for (Elem a = 0; a < k; ++a) x.act.push_back(local(g.mul(g.mul(h, idx[a]), table_inverse(g, h))));
  return x;
}

}  // namespace cssc
