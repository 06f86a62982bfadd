#include "cssc/catgroup.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

namespace cssc {

namespace {

bool all_below(const std::vector<Elem>& v, std::size_t n, bool allow_none = false) {
  return std::all_of(v.begin(), v.end(), [&](Elem e) { return e < n || (allow_none && e == kNone); });
}

std::vector<Elem> remap(const std::vector<Elem>& values, const std::vector<Elem>& perm) {
  std::vector<Elem> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i] == kNone ? kNone : perm[values[i]];
  return out;
}

// Components of the underlying groupoid, labelled by least object.
std::vector<Elem> object_components(const CatGroup& c) {
  std::vector<Elem> parent(c.num_objects());
  std::iota(parent.begin(), parent.end(), Elem{0});
  std::function<Elem(Elem)> find = [&](Elem x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (Elem f = 0; f < c.num_arrows(); ++f) {
    Elem a = find(c.dom(f)), b = find(c.cod(f));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<Elem> label(c.num_objects());
  for (Elem x = 0; x < c.num_objects(); ++x) label[x] = find(x);
  return label;
}

}  // namespace

CatGroup::CatGroup(Tables t) {
  const auto n0 = t.objects.size(), n1 = t.arrows.size();
  if (t.dom.size() != n1 || t.cod.size() != n1 || t.id.size() != n0 || t.comp.size() != n1 * n1 ||
      t.obj_add.size() != n0 * n0 || t.arr_add.size() != n1 * n1 || t.alpha.size() != n0 * n0 * n0 ||
      t.lambda.size() != n0 || t.rho.size() != n0 || t.neg_obj.size() != n0 || t.eps.size() != n0 ||
      t.delta.size() != n0 || t.neg_arr.size() != n1)
    throw Error(ErrorCode::MalformedTable, "categorical group table sizes do not match the carriers");
  if (!all_below(t.dom, n0) || !all_below(t.cod, n0) || !all_below(t.obj_add, n0) ||
      !all_below(t.neg_obj, n0) || t.zero >= n0)
    throw Error(ErrorCode::MalformedTable, "object table entry leaves C0");
  for (const auto* v : {&t.id, &t.arr_add, &t.alpha, &t.lambda, &t.rho, &t.eps, &t.delta, &t.neg_arr})
    if (!all_below(*v, n1)) throw Error(ErrorCode::MalformedTable, "arrow table entry leaves C1");
  if (!all_below(t.comp, n1, true)) throw Error(ErrorCode::MalformedTable, "comp entry leaves C1");
  for (Elem g = 0; g < n1; ++g)
    for (Elem f = 0; f < n1; ++f) {
      const bool defined = t.comp[g * n1 + f] != kNone;
      if (defined != (t.cod[f] == t.dom[g]))
        throw Error(ErrorCode::MalformedTable, "comp must be defined exactly on composable pairs, at (" +
                                                   t.arrows[g] + "," + t.arrows[f] + ")");
    }

  const auto po = sort_permutation(t.objects);
  const auto pa = sort_permutation(t.arrows);
  auto impl = std::make_shared<Impl>();
  Tables& s = impl->t;
  s.objects = permute_positions(t.objects, po);
  s.arrows = permute_positions(t.arrows, pa);
  s.dom = permute_positions(remap(t.dom, po), pa);
  s.cod = permute_positions(remap(t.cod, po), pa);
  s.id = permute_positions(remap(t.id, pa), po);
  s.lambda = permute_positions(remap(t.lambda, pa), po);
  s.rho = permute_positions(remap(t.rho, pa), po);
  s.eps = permute_positions(remap(t.eps, pa), po);
  s.delta = permute_positions(remap(t.delta, pa), po);
  s.neg_obj = permute_positions(remap(t.neg_obj, po), po);
  s.neg_arr = permute_positions(remap(t.neg_arr, pa), pa);
  s.zero = po[t.zero];
  s.comp.assign(n1 * n1, kNone);
  s.arr_add.resize(n1 * n1);
  for (Elem g = 0; g < n1; ++g)
    for (Elem f = 0; f < n1; ++f) {
      const Elem v = t.comp[g * n1 + f];
      s.comp[pa[g] * n1 + pa[f]] = v == kNone ? kNone : pa[v];
      s.arr_add[pa[g] * n1 + pa[f]] = pa[t.arr_add[g * n1 + f]];
    }
  s.obj_add.resize(n0 * n0);
  s.alpha.resize(n0 * n0 * n0);
  for (Elem x = 0; x < n0; ++x)
    for (Elem y = 0; y < n0; ++y) {
      s.obj_add[po[x] * n0 + po[y]] = po[t.obj_add[x * n0 + y]];
      for (Elem z = 0; z < n0; ++z)
        s.alpha[(po[x] * n0 + po[y]) * n0 + po[z]] = pa[t.alpha[(x * n0 + y) * n0 + z]];
    }
  impl->objects = Carrier(s.objects);
  impl->arrows = Carrier(s.arrows);
  impl_ = std::move(impl);
}

Elem CatGroup::comp(Elem g, Elem f) const {
  const Elem v = impl_->t.comp[g * num_arrows() + f];
  if (v == kNone)
    throw Error(ErrorCode::NotComposable, arrow_name(g) + " after " + arrow_name(f));
  return v;
}

Elem CatGroup::inverse(Elem f) const {
  const auto& table = inverses_.get([this] {
    std::vector<Elem> out(num_arrows(), kNone);
    for (Elem f = 0; f < num_arrows(); ++f)
      for (Elem g = 0; g < num_arrows(); ++g)
        if (dom(g) == cod(f) && cod(g) == dom(f) && comp(g, f) == id(dom(f)) && comp(f, g) == id(cod(f))) {
          out[f] = g;
          break;
        }
    return out;
  });
  return table[f];
}

Elem CatGroup::inv(Elem f) const {
  const Elem g = inverse(f);
  if (g == kNone) throw Error(ErrorCode::NotAGroupoid, "arrow " + arrow_name(f) + " has no inverse");
  return g;
}

Elem CatGroup::gamma(Elem r) const {
  return comp(arr_add(id(r), inv(lambda(neg_obj(r)))), inv(delta(r)));
}

Elem CatGroup::zeta() const { return comp(lambda(neg_obj(zero())), inv(delta(zero()))); }

const CatGroup::Closure& CatGroup::closure() const {
  return closure_.get([this] {
    const auto n0 = static_cast<Elem>(num_objects()), n1 = static_cast<Elem>(num_arrows());
    Closure cl;
    cl.member.assign(n1, false);
    std::deque<Elem> queue;
    auto add = [&](Elem f) {
      if (f == kNone || cl.member[f]) return;
      cl.member[f] = true;
      cl.order.push_back(f);
      queue.push_back(f);
    };
    for (Elem x = 0; x < n0; ++x) add(id(x));
    for (Elem x = 0; x < n0; ++x)
      for (Elem y = 0; y < n0; ++y)
        for (Elem z = 0; z < n0; ++z) add(alpha(x, y, z));
    for (Elem x = 0; x < n0; ++x) add(lambda(x));
    for (Elem x = 0; x < n0; ++x) add(rho(x));
    for (Elem x = 0; x < n0; ++x) add(eps(x));
    for (Elem x = 0; x < n0; ++x) add(delta(x));
    while (!queue.empty()) {
      const Elem s = queue.front();
      queue.pop_front();
      add(inverse(s));
      for (std::size_t k = 0; k < cl.order.size(); ++k) {
        const Elem t = cl.order[k];
        if (composable(s, t)) add(comp(s, t));
        if (composable(t, s)) add(comp(t, s));
        add(arr_add(s, t));
        add(arr_add(t, s));
      }
    }
    cl.chosen.assign(std::size_t(n0) * n0, kNone);
    for (Elem f : cl.order) {
      auto& slot = cl.chosen[dom(f) * n0 + cod(f)];
      if (slot == kNone) slot = f;
    }
    return cl;
  });
}

const std::vector<bool>& CatGroup::special_isos() const { return closure().member; }
const std::vector<Elem>& CatGroup::special_order() const { return closure().order; }
Elem CatGroup::chosen_special(Elem x, Elem y) const { return closure().chosen[x * num_objects() + y]; }

bool CatGroup::operator==(const CatGroup& o) const {
  if (impl_ == o.impl_) return true;
  const auto& a = impl_->t;
  const auto& b = o.impl_->t;
  return a.objects == b.objects && a.arrows == b.arrows && a.dom == b.dom && a.cod == b.cod && a.id == b.id &&
         a.comp == b.comp && a.obj_add == b.obj_add && a.arr_add == b.arr_add && a.zero == b.zero &&
         a.alpha == b.alpha && a.lambda == b.lambda && a.rho == b.rho && a.neg_obj == b.neg_obj &&
         a.eps == b.eps && a.delta == b.delta && a.neg_arr == b.neg_arr;
}

namespace {

class Checker {
 public:
  Checker(ValidationReport& r, bool stop) : r_(r), stop_(stop) {}

  void operator()(std::string name, const std::function<std::string()>& body) {
    if (halted_) return;
    std::string w = body();
    const bool ok = w.empty();
    r_.record(std::move(name), ok, std::move(w));
    if (!ok && stop_) halted_ = true;
  }
  bool halted() const { return halted_; }
  void halt() { halted_ = true; }

 private:
  ValidationReport& r_;
  bool stop_;
  bool halted_ = false;
};

std::string objs(const CatGroup& c, std::initializer_list<Elem> xs) {
  std::string s = "(";
  for (Elem x : xs) s += (s.size() > 1 ? "," : "") + c.object_name(x);
  return s + ")";
}

std::string arrs(const CatGroup& c, std::initializer_list<Elem> fs) {
  std::string s = "(";
  for (Elem f : fs) s += (s.size() > 1 ? "," : "") + c.arrow_name(f);
  return s + ")";
}

}  // namespace

ValidationReport validate_catgroup(const CatGroup& c, const CatGroupOptions& opts) {
  if (c.num_arrows() > opts.max_arrows)
    throw Error(ErrorCode::TooLarge, std::to_string(c.num_arrows()) + " arrows exceed the cap of " +
                                         std::to_string(opts.max_arrows));
  ValidationReport r;
  r.subject = "categorical group";
  Checker check(r, opts.stop_at_first);
  const auto n0 = static_cast<Elem>(c.num_objects()), n1 = static_cast<Elem>(c.num_arrows());
  const Elem z0 = c.zero();
  auto ends = [&](Elem f, Elem x, Elem y) { return c.dom(f) == x && c.cod(f) == y; };

  // Typing.
  check("identity endpoints", [&]() -> std::string {
    for (Elem x = 0; x < n0; ++x)
      if (!ends(c.id(x), x, x)) return "x=" + c.object_name(x);
    return {};
  });
  check("composite endpoints", [&]() -> std::string {
    for (Elem g = 0; g < n1; ++g)
      for (Elem f = 0; f < n1; ++f)
        if (c.composable(g, f) && !ends(c.comp(g, f), c.dom(f), c.cod(g))) return "g,f=" + arrs(c, {g, f});
    return {};
  });
  check("sum endpoints", [&]() -> std::string {
    for (Elem f = 0; f < n1; ++f)
      for (Elem g = 0; g < n1; ++g)
        if (!ends(c.arr_add(f, g), c.obj_add(c.dom(f), c.dom(g)), c.obj_add(c.cod(f), c.cod(g))))
          return "f,g=" + arrs(c, {f, g});
    return {};
  });
  check("alpha endpoints", [&]() -> std::string {
    for (Elem x = 0; x < n0; ++x)
      for (Elem y = 0; y < n0; ++y)
        for (Elem z = 0; z < n0; ++z)
          if (!ends(c.alpha(x, y, z), c.obj_add(c.obj_add(x, y), z), c.obj_add(x, c.obj_add(y, z))))
            return "x,y,z=" + objs(c, {x, y, z});
    return {};
  });
  check("lambda endpoints", [&]() -> std::string {
    for (Elem x = 0; x < n0; ++x)
      if (!ends(c.lambda(x), c.obj_add(z0, x), x)) return "x=" + c.object_name(x);
    return {};
  });
  check("rho endpoints", [&]() -> std::string {
    for (Elem x = 0; x < n0; ++x)
      if (!ends(c.rho(x), c.obj_add(x, z0), x)) return "x=" + c.object_name(x);
    return {};
  });
  check("eps endpoints", [&]() -> std::string {
    for (Elem x = 0; x < n0; ++x)
      if (!ends(c.eps(x), c.obj_add(c.neg_obj(x), x), z0)) return "x=" + c.object_name(x);
    return {};
  });
  check("delta endpoints", [&]() -> std::string {
    for (Elem x = 0; x < n0; ++x)
      if (!ends(c.delta(x), c.obj_add(x, c.neg_obj(x)), z0)) return "x=" + c.object_name(x);
    return {};
  });
  check("negation endpoints", [&]() -> std::string {
    for (Elem f = 0; f < n1; ++f)
      if (!ends(c.neg_arr(f), c.neg_obj(c.dom(f)), c.neg_obj(c.cod(f)))) return "f=" + c.arrow_name(f);
    return {};
  });
  if (!r.ok()) return r;

  // Category.
  std::vector<std::vector<Elem>> out_of(n0);
  for (Elem f = 0; f < n1; ++f) out_of[c.dom(f)].push_back(f);

  check("identity laws", [&]() -> std::string {
    for (Elem f = 0; f < n1; ++f)
      if (c.comp(f, c.id(c.dom(f))) != f || c.comp(c.id(c.cod(f)), f) != f) return "f=" + c.arrow_name(f);
    return {};
  });
  check("associativity", [&]() -> std::string {
    for (Elem f = 0; f < n1; ++f)
      for (Elem g : out_of[c.cod(f)])
        for (Elem h : out_of[c.cod(g)])
          if (c.comp(h, c.comp(g, f)) != c.comp(c.comp(h, g), f)) return "h,g,f=" + arrs(c, {h, g, f});
    return {};
  });
  check("every arrow invertible", [&]() -> std::string {
    for (Elem f = 0; f < n1; ++f)
      if (c.inverse(f) == kNone) return "f=" + c.arrow_name(f);
    return {};
  });
  if (check.halted() || !r.ok()) return r;

  // Bifunctor.
  check("1_x + 1_y = 1_(x+y)", [&]() -> std::string {
    for (Elem x = 0; x < n0; ++x)
      for (Elem y = 0; y < n0; ++y)
        if (c.arr_add(c.id(x), c.id(y)) != c.id(c.obj_add(x, y))) return "x,y=" + objs(c, {x, y});
    return {};
  });
  check("interchange", [&]() -> std::string {
    for (Elem f = 0; f < n1; ++f)
      for (Elem g : out_of[c.cod(f)])
        for (Elem h = 0; h < n1; ++h)
          for (Elem t : out_of[c.cod(h)])
            if (c.arr_add(c.comp(g, f), c.comp(t, h)) != c.comp(c.arr_add(g, t), c.arr_add(f, h)))
              return "g,f,t,h=" + arrs(c, {g, f, t, h});
    return {};
  });

  // Structure maps.
  check("alpha natural", [&]() -> std::string {
    for (Elem f = 0; f < n1; ++f)
      for (Elem g = 0; g < n1; ++g)
        for (Elem h = 0; h < n1; ++h) {
          const Elem lhs = c.comp(c.alpha(c.cod(f), c.cod(g), c.cod(h)), c.arr_add(c.arr_add(f, g), h));
          const Elem rhs = c.comp(c.arr_add(f, c.arr_add(g, h)), c.alpha(c.dom(f), c.dom(g), c.dom(h)));
          if (lhs != rhs) return "f,g,h=" + arrs(c, {f, g, h});
        }
    return {};
  });
  check("lambda natural", [&]() -> std::string {
    for (Elem f = 0; f < n1; ++f)
      if (c.comp(c.lambda(c.cod(f)), c.arr_add(c.id(z0), f)) != c.comp(f, c.lambda(c.dom(f))))
        return "f=" + c.arrow_name(f);
    return {};
  });
  check("rho natural", [&]() -> std::string {
    for (Elem f = 0; f < n1; ++f)
      if (c.comp(c.rho(c.cod(f)), c.arr_add(f, c.id(z0))) != c.comp(f, c.rho(c.dom(f))))
        return "f=" + c.arrow_name(f);
    return {};
  });
  check("pentagon", [&]() -> std::string {
    for (Elem x = 0; x < n0; ++x)
      for (Elem y = 0; y < n0; ++y)
        for (Elem z = 0; z < n0; ++z)
          for (Elem w = 0; w < n0; ++w) {
            const Elem lhs = c.comp(c.alpha(x, y, c.obj_add(z, w)), c.alpha(c.obj_add(x, y), z, w));
            const Elem rhs = c.comp(c.arr_add(c.id(x), c.alpha(y, z, w)),
                                    c.comp(c.alpha(x, c.obj_add(y, z), w), c.arr_add(c.alpha(x, y, z), c.id(w))));
            if (lhs != rhs) return "x,y,z,w=" + objs(c, {x, y, z, w});
          }
    return {};
  });
  check("triangle", [&]() -> std::string {
    for (Elem x = 0; x < n0; ++x)
      for (Elem y = 0; y < n0; ++y)
        if (c.comp(c.arr_add(c.id(x), c.lambda(y)), c.alpha(x, z0, y)) != c.arr_add(c.rho(x), c.id(y)))
          return "x,y=" + objs(c, {x, y});
    return {};
  });
  check("lambda_0 = rho_0", [&]() -> std::string {
    return c.lambda(z0) == c.rho(z0) ? std::string{} : "lambda_0=" + c.arrow_name(c.lambda(z0));
  });
  check("zig-zag for x", [&]() -> std::string {
    for (Elem x = 0; x < n0; ++x) {
      const Elem nx = c.neg_obj(x);
      const Elem lhs = c.comp(c.arr_add(c.id(x), c.eps(x)),
                              c.comp(c.alpha(x, nx, x), c.arr_add(c.inv(c.delta(x)), c.id(x))));
      if (lhs != c.comp(c.inv(c.rho(x)), c.lambda(x))) return "x=" + c.object_name(x);
    }
    return {};
  });
  check("zig-zag for -x", [&]() -> std::string {
    for (Elem x = 0; x < n0; ++x) {
      const Elem nx = c.neg_obj(x);
      const Elem lhs = c.comp(c.arr_add(c.eps(x), c.id(nx)),
                              c.comp(c.inv(c.alpha(nx, x, nx)), c.arr_add(c.id(nx), c.inv(c.delta(x)))));
      if (lhs != c.comp(c.inv(c.lambda(nx)), c.rho(nx))) return "x=" + c.object_name(x);
    }
    return {};
  });

  // Negation of arrows.
  check("-1_x = 1_(-x)", [&]() -> std::string {
    for (Elem x = 0; x < n0; ++x)
      if (c.neg_arr(c.id(x)) != c.id(c.neg_obj(x))) return "x=" + c.object_name(x);
    return {};
  });
  check("eps compatible with negation", [&]() -> std::string {
    for (Elem f = 0; f < n1; ++f)
      if (c.comp(c.eps(c.cod(f)), c.arr_add(c.neg_arr(f), f)) != c.eps(c.dom(f))) return "f=" + c.arrow_name(f);
    return {};
  });
  check("delta compatible with negation", [&]() -> std::string {
    for (Elem f = 0; f < n1; ++f)
      if (c.comp(c.delta(c.cod(f)), c.arr_add(f, c.neg_arr(f))) != c.delta(c.dom(f))) return "f=" + c.arrow_name(f);
    return {};
  });
  check("negation functorial", [&]() -> std::string {
    for (Elem f = 0; f < n1; ++f)
      for (Elem g : out_of[c.cod(f)])
        if (c.neg_arr(c.comp(g, f)) != c.comp(c.neg_arr(g), c.neg_arr(f))) return "g,f=" + arrs(c, {g, f});
    return {};
  });
  return r;
}

std::vector<bool> special_iso_closure(const CatGroup& c) { return c.special_isos(); }

std::vector<CoherenceSite> special_iso_sites(const CatGroup& c) {
  const auto n0 = c.num_objects();
  std::vector<std::vector<Elem>> bucket(n0 * n0);
  for (Elem f = 0; f < c.num_arrows(); ++f)
    if (c.is_special_iso(f)) bucket[c.dom(f) * n0 + c.cod(f)].push_back(f);
  std::vector<CoherenceSite> out;
  for (Elem x = 0; x < n0; ++x)
    for (Elem y = 0; y < n0; ++y)
      if (!bucket[x * n0 + y].empty()) out.push_back({x, y, bucket[x * n0 + y]});
  return out;
}

std::vector<CoherenceSite> coherence_diagnostic(const CatGroup& c) {
  auto sites = special_iso_sites(c);
  std::erase_if(sites, [](const CoherenceSite& s) { return s.isos.size() < 2; });
  return sites;
}

CGroup objects_cgroup(const CatGroup& c) {
  CGroup::Tables t;
  t.elements = c.objects().names();
  t.add = c.tables().obj_add;
  t.zero = c.zero();
  t.neg = c.tables().neg_obj;
  t.block = object_components(c);
  return CGroup(std::move(t));
}

CGroup arrows_cgroup(const CatGroup& c) {
  const auto comp = object_components(c);
  const auto n0 = static_cast<Elem>(c.num_objects());
  CGroup::Tables t;
  t.elements = c.arrows().names();
  t.add = c.tables().arr_add;
  t.zero = c.id(c.zero());
  t.neg = c.tables().neg_arr;
  for (Elem f = 0; f < c.num_arrows(); ++f) t.block.push_back(comp[c.dom(f)] * n0 + comp[c.cod(f)]);
  return CGroup(std::move(t));
}

CGroup arrows_star_zero(const CatGroup& c) {
  const auto comp = object_components(c);
  std::vector<Elem> members, slot(c.num_arrows(), kNone);
  for (Elem f = 0; f < c.num_arrows(); ++f)
    if (c.dom(f) == c.zero()) {
      slot[f] = static_cast<Elem>(members.size());
      members.push_back(f);
    }
  const auto n = members.size();
  const Elem g0 = c.gamma0(), zeta = c.zeta();
  CGroup::Tables t;
  t.add.resize(n * n);
  for (Elem a = 0; a < n; ++a) {
    const Elem f = members[a];
    t.elements.push_back(c.arrow_name(f));
    t.neg.push_back(slot[c.comp(c.neg_arr(f), zeta)]);
    t.block.push_back(comp[c.cod(f)]);
    for (Elem b = 0; b < n; ++b) t.add[a * n + b] = slot[c.comp(c.arr_add(f, members[b]), g0)];
  }
  t.zero = slot[c.id(c.zero())];
  return CGroup(std::move(t));
}

std::vector<Elem> star_zero_arrows(const CatGroup& c, const CGroup& star) {
  std::vector<Elem> out(star.size());
  for (Elem a = 0; a < star.size(); ++a) out[a] = c.arrows().index(star.name(a));
  return out;
}

CSubset ker_d0_subset(const CatGroup& c) {
  const auto comp = object_components(c);
  std::vector<Elem> members;
  for (Elem f = 0; f < c.num_arrows(); ++f)
    if (comp[c.dom(f)] == comp[c.zero()]) members.push_back(f);
  return make_subset(arrows_cgroup(c), std::move(members));
}

CGroup arrows_ker_d0(const CatGroup& c) { return induced_cgroup(ker_d0_subset(c)); }

CSubset ker_d1_subset(const CatGroup& c) {
  const auto comp = object_components(c);
  std::vector<Elem> members;
  for (Elem f = 0; f < c.num_arrows(); ++f)
    if (comp[c.cod(f)] == comp[c.zero()]) members.push_back(f);
  return make_subset(arrows_cgroup(c), std::move(members));
}

CAction star_action(const CatGroup& c) {
  const CGroup objects = objects_cgroup(c);
  const CGroup star = arrows_star_zero(c);
  const auto arrows = star_zero_arrows(c, star);
  std::vector<Elem> dot;
  dot.reserve(objects.size() * star.size());
  for (Elem r = 0; r < objects.size(); ++r) {
    const Elem ir = c.id(r), gamma = c.gamma(r);
    for (Elem f : arrows) {
      const Elem conj = c.arr_add(ir, c.arr_add(f, c.neg_arr(ir)));
      dot.push_back(star.index(c.arrow_name(c.comp(conj, gamma))));
    }
  }
  return {objects, star, std::move(dot)};
}

PairSet weak_special_iso_pairs(const CatGroup& c) {
  const auto n0 = c.num_objects();
  std::vector<std::vector<Elem>> from(n0);
  for (Elem s : c.special_order()) from[c.dom(s)].push_back(s);
  PairSet out(c.num_arrows());
  for (Elem f = 0; f < c.num_arrows(); ++f)
    for (Elem t0 : from[c.dom(f)]) {
      const Elem back = c.inv(t0);
      for (Elem t1 : from[c.cod(f)]) out.insert(f, c.comp(t1, c.comp(f, back)));
    }
  return out;
}

ValidationReport check_comp_via_add(const CatGroup& c) {
  ValidationReport r;
  r.subject = "composition via addition";
  const auto w = weak_special_iso_pairs(c);
  std::string witness;
  for (Elem f = 0; f < c.num_arrows() && witness.empty(); ++f)
    for (Elem g = 0; g < c.num_arrows(); ++g) {
      if (!c.composable(f, g)) continue;
      const Elem shifted = c.arr_add(f, c.neg_arr(c.id(c.dom(f))));
      if (!w.contains(c.comp(f, g), c.arr_add(shifted, g))) {
        witness = "f,g=" + arrs(c, {f, g});
        break;
      }
    }
  r.record("f.g ~ (f - i(d0 f)) + g", witness.empty(), witness);
  return r;
}

ValidationReport check_ker_commute(const CatGroup& c) {
  ValidationReport r;
  r.subject = "kernel commutation";
  const auto w = weak_special_iso_pairs(c);
  const auto k1 = ker_d1_subset(c), k0 = ker_d0_subset(c);
  std::string witness;
  for (Elem f : k1.members) {
    for (Elem g : k0.members)
      if (!w.contains(c.arr_add(f, g), c.arr_add(g, f))) {
        witness = "f,g=" + arrs(c, {f, g});
        break;
      }
    if (!witness.empty()) break;
  }
  r.record("f + g ~ g + f", witness.empty(), witness);
  return r;
}

KernelExtension kernel_extension(const CatGroup& c) {
  const CGroup arrows = arrows_cgroup(c);
  const CGroup objects = objects_cgroup(c);
  const CSubset sub = ker_d0_subset(c);
  const CGroup ker = induced_cgroup(sub);
  const CGroupMorphism j = subset_inclusion(sub);

  const auto nk = ker.size();
  std::vector<Elem> dot, boundary(nk);
  for (Elem r = 0; r < c.num_objects(); ++r) {
    const Elem ir = c.id(r);
    for (Elem e = 0; e < nk; ++e)
      dot.push_back(ker.index(c.arrow_name(c.arr_add(ir, c.arr_add(j(e), c.neg_arr(ir))))));
  }
  for (Elem e = 0; e < nk; ++e) boundary[e] = c.cod(j(e));

  const PairSet all = weak_special_iso_pairs(c);
  PairSet w(nk);
  for (Elem a = 0; a < nk; ++a)
    for (Elem b = 0; b < nk; ++b)
      if (all.contains(j(a), j(b))) w.insert(a, b);
  CAction action{objects, ker, dot};
  CCrossedModule module = make_crossed_module(ker, objects, std::move(boundary), std::move(dot), std::move(w));
  return {arrows,
          objects,
          ker,
          j,
          {arrows, objects, c.tables().dom},
          {objects, arrows, c.tables().id},
          std::move(action),
          std::move(module)};
}

ValidationReport validate_functor(const CatGroupFunctor& t) {
  const auto& C = t.source;
  const auto& D = t.target;
  if (t.f0.size() != C.num_objects() || t.f1.size() != C.num_arrows() || !all_below(t.f0, D.num_objects()) ||
      !all_below(t.f1, D.num_arrows()))
    throw Error(ErrorCode::MalformedTable, "functor tables do not match the categorical groups");
  ValidationReport r;
  r.subject = "functor";
  Checker check(r, false);
  const auto n0 = static_cast<Elem>(C.num_objects()), n1 = static_cast<Elem>(C.num_arrows());
  auto F0 = [&](Elem x) { return t.f0[x]; };
  auto F1 = [&](Elem f) { return t.f1[f]; };

  check("preserves endpoints", [&]() -> std::string {
    for (Elem f = 0; f < n1; ++f)
      if (D.dom(F1(f)) != F0(C.dom(f)) || D.cod(F1(f)) != F0(C.cod(f))) return "f=" + C.arrow_name(f);
    return {};
  });
  if (!r.ok()) return r;
  check("preserves identities", [&]() -> std::string {
    for (Elem x = 0; x < n0; ++x)
      if (F1(C.id(x)) != D.id(F0(x))) return "x=" + C.object_name(x);
    return {};
  });
  check("preserves composition", [&]() -> std::string {
    for (Elem g = 0; g < n1; ++g)
      for (Elem f = 0; f < n1; ++f)
        if (C.composable(g, f) && F1(C.comp(g, f)) != D.comp(F1(g), F1(f))) return "g,f=" + arrs(C, {g, f});
    return {};
  });
  check("T(x+y) = Tx + Ty", [&]() -> std::string {
    for (Elem x = 0; x < n0; ++x)
      for (Elem y = 0; y < n0; ++y)
        if (F0(C.obj_add(x, y)) != D.obj_add(F0(x), F0(y))) return "x,y=" + objs(C, {x, y});
    return {};
  });
  check("T(f+g) = Tf + Tg", [&]() -> std::string {
    for (Elem f = 0; f < n1; ++f)
      for (Elem g = 0; g < n1; ++g)
        if (F1(C.arr_add(f, g)) != D.arr_add(F1(f), F1(g))) return "f,g=" + arrs(C, {f, g});
    return {};
  });
  check("T0 = 0", [&]() -> std::string {
    return F0(C.zero()) == D.zero() ? std::string{} : "T0=" + D.object_name(F0(C.zero()));
  });
  check("preserves alpha", [&]() -> std::string {
    for (Elem x = 0; x < n0; ++x)
      for (Elem y = 0; y < n0; ++y)
        for (Elem z = 0; z < n0; ++z)
          if (F1(C.alpha(x, y, z)) != D.alpha(F0(x), F0(y), F0(z))) return "x,y,z=" + objs(C, {x, y, z});
    return {};
  });
  check("preserves lambda", [&]() -> std::string {
    for (Elem x = 0; x < n0; ++x)
      if (F1(C.lambda(x)) != D.lambda(F0(x))) return "x=" + C.object_name(x);
    return {};
  });
  check("preserves rho", [&]() -> std::string {
    for (Elem x = 0; x < n0; ++x)
      if (F1(C.rho(x)) != D.rho(F0(x))) return "x=" + C.object_name(x);
    return {};
  });
  check("T(-x) = -Tx", [&]() -> std::string {
    for (Elem x = 0; x < n0; ++x)
      if (F0(C.neg_obj(x)) != D.neg_obj(F0(x))) return "x=" + C.object_name(x);
    return {};
  });
  check("T(-f) = -Tf", [&]() -> std::string {
    for (Elem f = 0; f < n1; ++f)
      if (F1(C.neg_arr(f)) != D.neg_arr(F1(f))) return "f=" + C.arrow_name(f);
    return {};
  });
  return r;
}

CatGroupFunctor identity_functor(const CatGroup& c) {
  CatGroupFunctor t{c, c, std::vector<Elem>(c.num_objects()), std::vector<Elem>(c.num_arrows())};
  std::iota(t.f0.begin(), t.f0.end(), Elem{0});
  std::iota(t.f1.begin(), t.f1.end(), Elem{0});
  return t;
}

CatGroupFunctor compose(const CatGroupFunctor& second, const CatGroupFunctor& first) {
  if (!(first.target == second.source))
    throw Error(ErrorCode::SourceTargetMismatch, "composing functors with mismatched ends");
  CatGroupFunctor t{first.source, second.target, {}, {}};
  for (Elem v : first.f0) t.f0.push_back(second.f0[v]);
  for (Elem v : first.f1) t.f1.push_back(second.f1[v]);
  return t;
}

CatGroupFunctor functor_by_names(const CatGroup& source, const CatGroup& target,
                                 const std::vector<std::pair<std::string, std::string>>& objects,
                                 const std::vector<std::pair<std::string, std::string>>& arrows) {
  CatGroupFunctor t{source, target, std::vector<Elem>(source.num_objects(), kNone),
                    std::vector<Elem>(source.num_arrows(), kNone)};
  for (const auto& [a, b] : objects) t.f0[source.objects().index(a)] = target.objects().index(b);
  for (const auto& [a, b] : arrows) t.f1[source.arrows().index(a)] = target.arrows().index(b);
  if (std::count(t.f0.begin(), t.f0.end(), kNone) || std::count(t.f1.begin(), t.f1.end(), kNone))
    throw Error(ErrorCode::MalformedTable, "functor map is not total");
  return t;
}

}  // namespace cssc
