#include "cssc/functors.hpp"

namespace cssc {

std::vector<Elem> weak_special_reps(const CCrossedModule& x) {
  const auto n = static_cast<Elem>(x.source.size());
  std::vector<Elem> rep(n, kNone);
  for (Elem c = 0; c < n; ++c)
    for (Elem d = 0; d < n && rep[c] == kNone; ++d)
      if (x.weakly_special(d, c)) rep[c] = d;
  return rep;
}

namespace {

class Calculus {
 public:
  explicit Calculus(const CCrossedModule& x) : x_(x), rep_(weak_special_reps(x)) {}

  bool admissible(Elem dom, Elem cod, Elem c) const {
    return N().special_pair(N().add(x_.d(c), dom), cod);
  }

  GArrow make(Elem dom, Elem cod, Elem c) const {
    if (!admissible(dom, cod, c))
      throw Error(ErrorCode::NotSpecialLeg, "d(" + M().name(c) + ") + " + N().name(dom) + " -> " + N().name(cod) +
                                                " is not a special congruence");
    return {dom, cod, rep_[c]};
  }

  GArrow canonicalize(Elem r_dom, Elem alpha_cod, Elem r, Elem c, Elem beta_cod) const {
    if (alpha_cod != r || !N().special_pair(r_dom, alpha_cod))
      throw Error(ErrorCode::NotSpecialLeg, "leg " + N().name(r_dom) + " -> " + N().name(alpha_cod) +
                                                " does not end special at " + N().name(r));
    if (!N().special_pair(N().add(x_.d(c), r), beta_cod))
      throw Error(ErrorCode::NotSpecialLeg, "leg d(" + M().name(c) + ") + " + N().name(r) + " -> " +
                                                N().name(beta_cod) + " is not special");
    return make(r_dom, beta_cod, c);
  }

  GArrow compose(const GArrow& g2, const GArrow& g1) const {
    if (g1.cod != g2.dom)
      throw Error(ErrorCode::NotComposable, "codomain " + N().name(g1.cod) + " vs domain " + N().name(g2.dom));
    return make(g1.dom, g2.cod, M().add(g2.c, g1.c));
  }
  GArrow identity(Elem r) const { return make(r, r, M().zero()); }
  GArrow inverse(const GArrow& g) const { return make(g.cod, g.dom, M().neg(g.c)); }
  GArrow add(const GArrow& g1, const GArrow& g2) const {
    return make(N().add(g1.dom, g2.dom), N().add(g1.cod, g2.cod), M().add(g1.c, x_.act(g1.dom, g2.c)));
  }
  GArrow opposite(const GArrow& g) const {
    const Elem nd = N().neg(g.dom);
    return make(nd, N().neg(g.cod), x_.act(nd, M().neg(g.c)));
  }
  GArrow special_iso(Elem r, Elem r2) const {
    if (!N().special_pair(r, r2))
      throw Error(ErrorCode::NotSpecialPair, "(" + N().name(r) + "," + N().name(r2) + ") is not special");
    return make(r, r2, special_lift(x_, M().zero(), N().sub(r2, r)));
  }

  Elem rep(Elem c) const { return rep_[c]; }

 private:
  const CGroup& M() const { return x_.source; }
  const CGroup& N() const { return x_.target; }

  const CCrossedModule& x_;
  std::vector<Elem> rep_;
};

}  // namespace

GArrow canonicalize(const CCrossedModule& x, Elem r_dom, Elem alpha_cod, Elem r, Elem c, Elem beta_cod) {
  return Calculus(x).canonicalize(r_dom, alpha_cod, r, c, beta_cod);
}
GArrow t_compose(const CCrossedModule& x, const GArrow& g2, const GArrow& g1) { return Calculus(x).compose(g2, g1); }
GArrow t_identity(const CCrossedModule& x, Elem r) { return Calculus(x).identity(r); }
GArrow t_inverse(const CCrossedModule& x, const GArrow& g) { return Calculus(x).inverse(g); }
GArrow t_add(const CCrossedModule& x, const GArrow& g1, const GArrow& g2) { return Calculus(x).add(g1, g2); }
GArrow t_opposite(const CCrossedModule& x, const GArrow& g) { return Calculus(x).opposite(g); }
GArrow t_special_iso(const CCrossedModule& x, Elem r, Elem r_prime) { return Calculus(x).special_iso(r, r_prime); }

std::string garrow_name(const CCrossedModule& x, const GArrow& g) {
  return "[" + x.target.name(g.dom) + "|" + x.source.name(g.c) + "|" + x.target.name(g.cod) + "]";
}

Elem TCatGroup::index(const GArrow& g) const {
  auto it = lookup.find(g);
  if (it == lookup.end())
    throw Error(ErrorCode::ElementOutsideParent, "not an arrow: [" + std::to_string(g.dom) + "|" + std::to_string(g.c) +
                                                     "|" + std::to_string(g.cod) + "]");
  return it->second;
}

TCatGroup T0(const CCrossedModule& x, std::size_t max_arrows) {
  if (!is_cssc(x)) throw Error(ErrorCode::NotCssc, "T0 needs a connected, strict, special module");
  const Calculus calc(x);
  const auto& M = x.source;
  const auto& N = x.target;
  const auto nn = static_cast<Elem>(N.size());

  std::vector<GArrow> arrows;
  std::map<GArrow, Elem> local;
  for (Elem r = 0; r < nn; ++r)
    for (Elem s = 0; s < nn; ++s)
      for (Elem c = 0; c < M.size(); ++c)
        if (calc.rep(c) == c && calc.admissible(r, s, c)) {
          if (arrows.size() == max_arrows)
            throw Error(ErrorCode::TooLarge, "T0 exceeds " + std::to_string(max_arrows) + " arrows");
          local.emplace(GArrow{r, s, c}, static_cast<Elem>(arrows.size()));
          arrows.push_back({r, s, c});
        }
  auto at = [&](const GArrow& g) { return local.at(g); };

  const auto n1 = arrows.size();
  CatGroup::Tables t;
  t.objects = N.carrier().names();
  for (const auto& g : arrows) {
    t.arrows.push_back(garrow_name(x, g));
    t.dom.push_back(g.dom);
    t.cod.push_back(g.cod);
    t.neg_arr.push_back(at(calc.opposite(g)));
  }
  t.comp.assign(n1 * n1, kNone);
  t.arr_add.resize(n1 * n1);
  for (Elem a = 0; a < n1; ++a)
    for (Elem b = 0; b < n1; ++b) {
      if (arrows[b].cod == arrows[a].dom) t.comp[a * n1 + b] = at(calc.compose(arrows[a], arrows[b]));
      t.arr_add[a * n1 + b] = at(calc.add(arrows[a], arrows[b]));
    }
  const Elem z = N.zero();
  for (Elem r = 0; r < nn; ++r) {
    const Elem nr = N.neg(r);
    t.id.push_back(at(calc.identity(r)));
    t.lambda.push_back(at(calc.special_iso(N.add(z, r), r)));
    t.rho.push_back(at(calc.special_iso(N.add(r, z), r)));
    t.neg_obj.push_back(nr);
    t.eps.push_back(at(calc.special_iso(N.add(nr, r), z)));
    t.delta.push_back(at(calc.special_iso(N.add(r, nr), z)));
    for (Elem s = 0; s < nn; ++s) {
      t.obj_add.push_back(N.add(r, s));
      for (Elem u = 0; u < nn; ++u)
        t.alpha.push_back(at(calc.special_iso(N.add(N.add(r, s), u), N.add(r, N.add(s, u)))));
    }
  }
  t.zero = z;

  TCatGroup out{x, CatGroup(std::move(t)), std::vector<GArrow>(n1), {}};
  for (const auto& g : arrows) {
    const Elem i = out.cat.arrows().index(garrow_name(x, g));
    out.arrows[i] = g;
    out.lookup.emplace(g, i);
  }
  return out;
}

CCrossedModule L0(const CatGroup& c) {
  const CGroup star = arrows_star_zero(c);
  const CGroup objects = objects_cgroup(c);
  const auto arrows = star_zero_arrows(c, star);
  std::vector<Elem> boundary;
  for (Elem f : arrows) boundary.push_back(c.cod(f));
  const PairSet all = weak_special_iso_pairs(c);
  PairSet w(star.size());
  for (Elem a = 0; a < star.size(); ++a)
    for (Elem b = 0; b < star.size(); ++b)
      if (all.contains(arrows[a], arrows[b])) w.insert(a, b);
  return make_crossed_module(star, objects, std::move(boundary), star_action(c).dot, std::move(w));
}

CrossedModuleMorphism L1(const CatGroupFunctor& t) {
  CrossedModuleMorphism m{L0(t.source), L0(t.target), {}, t.f0};
  for (Elem f : star_zero_arrows(t.source, m.source.source))
    m.on_source.push_back(m.target.source.index(t.target.arrow_name(t.f1[f])));
  return m;
}

CatGroupFunctor T1(const CrossedModuleMorphism& m, const TCatGroup& source, const TCatGroup& target) {
  const Calculus calc(target.module);
  CatGroupFunctor out{source.cat, target.cat, m.on_target, {}};
  for (const auto& g : source.arrows)
    out.f1.push_back(target.index(calc.make(m.on_target[g.dom], m.on_target[g.cod], m.on_source[g.c])));
  return out;
}

CatGroupFunctor T1(const CrossedModuleMorphism& m) { return T1(m, T0(m.source), T0(m.target)); }

}  // namespace cssc
