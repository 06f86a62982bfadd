#include "cssc/crossmod.hpp"

#include <algorithm>

namespace cssc {

namespace {

std::string tuple_names(std::initializer_list<std::pair<const CGroup*, Elem>> items) {
  std::string out = "(";
  bool first = true;
  for (const auto& [g, e] : items) {
    if (!first) out += ",";
    out += g->name(e);
    first = false;
  }
  return out + ")";
}

}  // namespace

ValidationReport validate_action(const CAction& act) {
  ValidationReport r;
  r.subject = "action";
  const auto& B = act.actor;
  const auto& A = act.acted;
  const auto nb = static_cast<Elem>(B.size()), na = static_cast<Elem>(A.size());
  if (act.dot.size() != std::size_t(nb) * na) throw Error(ErrorCode::MalformedTable, "action table size mismatch");
  for (Elem v : act.dot)
    if (v >= na) throw Error(ErrorCode::MalformedTable, "action entry leaves the acted c-group");

  std::string w;
  for (Elem b = 0; b < nb && w.empty(); ++b)
    for (Elem a = 0; a < na && w.empty(); ++a)
      for (Elem a1 = 0; a1 < na; ++a1)
        if (!A.related(act(b, A.add(a, a1)), A.add(act(b, a), act(b, a1)))) {
          w = "b,a,a1=" + tuple_names({{&B, b}, {&A, a}, {&A, a1}});
          break;
        }
  r.record("(i) b.(a+a1) ~ b.a + b.a1", w.empty(), w);

  w.clear();
  for (Elem b = 0; b < nb && w.empty(); ++b)
    for (Elem b1 = 0; b1 < nb && w.empty(); ++b1)
      for (Elem a = 0; a < na; ++a)
        if (!A.related(act(B.add(b, b1), a), act(b, act(b1, a)))) {
          w = "b,b1,a=" + tuple_names({{&B, b}, {&B, b1}, {&A, a}});
          break;
        }
  r.record("(ii) (b+b1).a ~ b.(b1.a)", w.empty(), w);

  w.clear();
  for (Elem a = 0; a < na; ++a)
    if (!A.related(act(B.zero(), a), a)) {
      w = "a=" + A.name(a);
      break;
    }
  r.record("(iii) 0.a ~ a", w.empty(), w);

  w.clear();
  for (Elem b = 0; b < nb && w.empty(); ++b)
    for (Elem b1 = 0; b1 < nb && w.empty(); ++b1) {
      if (!B.related(b, b1)) continue;
      for (Elem a = 0; a < na && w.empty(); ++a)
        for (Elem a1 = 0; a1 < na; ++a1)
          if (A.related(a, a1) && !A.related(act(b, a), act(b1, a1))) {
            w = "b,b1,a,a1=" + tuple_names({{&B, b}, {&B, b1}, {&A, a}, {&A, a1}});
            break;
          }
    }
  r.record("(iv) congruence-compatible", w.empty(), w);
  return r;
}

CCrossedModule make_crossed_module(CGroup source, CGroup target, std::vector<Elem> boundary,
                                   std::vector<Elem> dot, PairSet weak_special) {
  if (boundary.size() != source.size() || dot.size() != target.size() * source.size() ||
      weak_special.carrier_size() != source.size())
    throw Error(ErrorCode::MalformedTable, "crossed module tables do not match the carriers");
  for (Elem v : boundary)
    if (v >= target.size()) throw Error(ErrorCode::MalformedTable, "boundary leaves N");
  for (Elem v : dot)
    if (v >= source.size()) throw Error(ErrorCode::MalformedTable, "action leaves M");
  CAction action{target, source, std::move(dot)};
  return {std::move(source), std::move(target), std::move(boundary), std::move(action), std::move(weak_special)};
}

ValidationReport validate_crossed_module(const CCrossedModule& x) {
  ValidationReport r;
  r.subject = "c-crossed module";
  const auto& M = x.source;
  const auto& N = x.target;
  r.merge(validate_cgroup(M), "M: ");
  r.merge(validate_cgroup(N), "N: ");
  if (!r.ok()) return r;
  r.merge(validate_morphism(x.boundary_morphism()), "boundary: ");
  r.merge(validate_action(x.action), "action: ");
  if (!r.ok()) return r;

  const auto nm = static_cast<Elem>(M.size()), nn = static_cast<Elem>(N.size());
  std::string w;
  for (Elem b = 0; b < nn && w.empty(); ++b)
    for (Elem a = 0; a < nm; ++a)
      if (x.d(x.act(b, a)) != N.add(b, N.sub(x.d(a), b))) {
        w = "b,a=" + tuple_names({{&N, b}, {&M, a}});
        break;
      }
  r.record("(i) d(b.a) = b + (d(a) - b)", w.empty(), w);

  w.clear();
  for (Elem a = 0; a < nm && w.empty(); ++a)
    for (Elem a1 = 0; a1 < nm; ++a1)
      if (!M.related(x.act(x.d(a), a1), M.add(a, M.sub(a1, a)))) {
        w = "a,a1=" + tuple_names({{&M, a}, {&M, a1}});
        break;
      }
  r.record("(ii) d(a).a1 ~ a + (a1 - a)", w.empty(), w);

  const auto& W = x.weak_special;
  auto first_bad_pair = [&](auto&& pred) -> std::string {
    for (Elem a = 0; a < nm; ++a)
      for (Elem b = 0; b < nm; ++b)
        if (W.contains(a, b) && !pred(a, b)) return "(" + M.name(a) + "," + M.name(b) + ")";
    return {};
  };
  w = first_bad_pair([&](Elem a, Elem b) { return M.related(a, b); });
  r.record("weak-special within rel", w.empty(), w);
  w.clear();
  for (Elem a = 0; a < nm; ++a)
    if (!W.contains(a, a)) {
      w = M.name(a);
      break;
    }
  r.record("weak-special reflexive", w.empty(), w);
  w = first_bad_pair([&](Elem a, Elem b) { return W.contains(b, a); });
  r.record("weak-special symmetric", w.empty(), w);
  w.clear();
  for (Elem a = 0; a < nm && w.empty(); ++a)
    for (Elem b = 0; b < nm && w.empty(); ++b)
      for (Elem c = 0; c < nm; ++c)
        if (W.contains(a, b) && W.contains(b, c) && !W.contains(a, c)) {
          w = "(" + M.name(a) + "," + M.name(b) + "," + M.name(c) + ")";
          break;
        }
  r.record("weak-special transitive", w.empty(), w);
  w.clear();
  for (const auto& [a, b] : M.special().pairs())
    if (!W.contains(a, b)) {
      w = "(" + M.name(a) + "," + M.name(b) + ")";
      break;
    }
  r.record("special pairs of M are weak-special", w.empty(), w);
  w = first_bad_pair([&](Elem a, Elem b) { return N.special_pair(x.d(a), x.d(b)); });
  r.record("weak-special boundaries are special in N", w.empty(), w);

  // Compatibility of the weak-special data with the operations the
  // categorical-group construction performs on representatives.
  const auto wpairs = W.pairs();
  w.clear();
  for (const auto& [a, b] : wpairs) {
    for (const auto& [c, d] : wpairs)
      if (!W.contains(M.add(a, c), M.add(b, d))) {
        w = "(" + M.name(a) + "," + M.name(b) + ")+(" + M.name(c) + "," + M.name(d) + ")";
        break;
      }
    if (!w.empty()) break;
  }
  r.record("weak-special closed under sums", w.empty(), w);
  w = first_bad_pair([&](Elem a, Elem b) { return W.contains(M.neg(a), M.neg(b)); });
  r.record("weak-special closed under negation", w.empty(), w);
  w.clear();
  for (Elem t = 0; t < nn && w.empty(); ++t)
    w = first_bad_pair([&](Elem a, Elem b) { return W.contains(x.act(t, a), x.act(t, b)); });
  r.record("weak-special closed under the action", w.empty(), w);
  w.clear();
  for (const auto& [t, s] : N.special().pairs()) {
    for (Elem a = 0; a < nm; ++a)
      if (!W.contains(x.act(t, a), x.act(s, a))) {
        w = "r,r',c=" + tuple_names({{&N, t}, {&N, s}, {&M, a}});
        break;
      }
    if (!w.empty()) break;
  }
  r.record("special change of actor is weak-special", w.empty(), w);
  w.clear();
  for (Elem t = 0; t < nn && w.empty(); ++t)
    for (Elem a = 0; a < nm && w.empty(); ++a) {
      if (!W.contains(x.act(N.zero(), a), a)) {
        w = "0.c vs c at c=" + M.name(a);
        break;
      }
      for (Elem b = 0; b < nm; ++b) {
        if (!W.contains(x.act(t, M.add(a, b)), M.add(x.act(t, a), x.act(t, b)))) {
          w = "r.(a+b) at " + tuple_names({{&N, t}, {&M, a}, {&M, b}});
          break;
        }
      }
      if (!w.empty()) break;
      for (Elem s = 0; s < nn; ++s)
        if (!W.contains(x.act(N.add(t, s), a), x.act(t, x.act(s, a)))) {
          w = "(r+s).a at " + tuple_names({{&N, t}, {&N, s}, {&M, a}});
          break;
        }
    }
  r.record("action laws hold up to weak-special", w.empty(), w);
  return r;
}

PairSet relational_weak_special(const CCrossedModule& x) {
  const auto n = static_cast<Elem>(x.source.size());
  PairSet s(n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (x.source.related(a, b) && x.target.special_pair(x.d(a), x.d(b))) s.insert(a, b);
  return s;
}

bool is_strict(const CCrossedModule& x) {
  const auto& M = x.source;
  for (Elem a = 0; a < M.size(); ++a)
    for (Elem a1 = 0; a1 < M.size(); ++a1)
      if (x.act(x.d(a), a1) != M.add(a, M.sub(a1, a))) return false;
  return true;
}

std::vector<Elem> lift_candidates(const CCrossedModule& x, Elem c, Elem r) {
  std::vector<Elem> out;
  for (Elem c2 = 0; c2 < x.source.size(); ++c2)
    if (x.d(c2) == r && x.weakly_special(c2, c)) out.push_back(c2);
  return out;
}

bool is_special(const CCrossedModule& x) {
  const auto& M = x.source;
  const auto& N = x.target;
  for (Elem c = 0; c < M.size(); ++c)
    for (Elem r = 0; r < N.size(); ++r) {
      if (N.related(x.d(c), r)) {
        bool found = false;
        for (Elem c2 = 0; c2 < M.size() && !found; ++c2) found = M.related(c2, c) && x.d(c2) == r;
        if (!found) return false;
      }
      if (N.special_pair(x.d(c), r) && lift_candidates(x, c, r).size() != 1) return false;
    }
  return true;
}

bool is_cssc(const CCrossedModule& x) { return is_connected(x.source) && is_strict(x) && is_special(x); }

Elem special_lift(const CCrossedModule& x, Elem c, Elem r) {
  if (!x.target.special_pair(x.d(c), r))
    throw Error(ErrorCode::NotSpecialPair,
                "(d(" + x.source.name(c) + "), " + x.target.name(r) + ") is not a special congruence");
  const auto candidates = lift_candidates(x, c, r);
  if (candidates.empty())
    throw Error(ErrorCode::NoLift, "no weak-special lift of " + x.source.name(c) + " over " + x.target.name(r));
  if (candidates.size() > 1) {
    std::string list;
    for (Elem e : candidates) list += (list.empty() ? "" : ",") + x.source.name(e);
    throw Error(ErrorCode::NonUniqueLift,
                "lifts of " + x.source.name(c) + " over " + x.target.name(r) + ": {" + list + "}");
  }
  return candidates.front();
}

ValidationReport validate_cm_morphism(const CrossedModuleMorphism& m) {
  ValidationReport r;
  r.subject = "crossed module morphism";
  const CGroupMorphism f{m.source.source, m.target.source, m.on_source};
  const CGroupMorphism g{m.source.target, m.target.target, m.on_target};
  r.merge(validate_morphism(f), "f: ");
  r.merge(validate_morphism(g), "g: ");
  if (!r.ok()) return r;

  const auto& x = m.source;
  const auto& y = m.target;
  std::string w;
  for (Elem a = 0; a < x.source.size(); ++a)
    if (g(x.d(a)) != y.d(f(a))) {
      w = "a=" + x.source.name(a);
      break;
    }
  r.record("g d = d' f", w.empty(), w);

  w.clear();
  for (Elem b = 0; b < x.target.size() && w.empty(); ++b)
    for (Elem a = 0; a < x.source.size(); ++a)
      if (f(x.act(b, a)) != y.act(g(b), f(a))) {
        w = "b,a=(" + x.target.name(b) + "," + x.source.name(a) + ")";
        break;
      }
  r.record("f(b.a) = g(b).f(a)", w.empty(), w);

  w.clear();
  for (const auto& [a, b] : x.weak_special.pairs())
    if (!y.weakly_special(f(a), f(b))) {
      w = "(" + x.source.name(a) + "," + x.source.name(b) + ")";
      break;
    }
  r.record("preserves weak-special", w.empty(), w);
  return r;
}

CrossedModuleMorphism identity_cm_morphism(const CCrossedModule& x) {
  return {x, x, identity_morphism(x.source).map, identity_morphism(x.target).map};
}

CrossedModuleMorphism compose(const CrossedModuleMorphism& second, const CrossedModuleMorphism& first) {
  if (!(first.target.source == second.source.source) || !(first.target.target == second.source.target))
    throw Error(ErrorCode::SourceTargetMismatch, "composing crossed module morphisms with mismatched ends");
  CrossedModuleMorphism out{first.source, second.target, {}, {}};
  for (Elem v : first.on_source) out.on_source.push_back(second.on_source[v]);
  for (Elem v : first.on_target) out.on_target.push_back(second.on_target[v]);
  return out;
}

bool same_morphism(const CrossedModuleMorphism& a, const CrossedModuleMorphism& b) {
  return a.source.source == b.source.source && a.source.target == b.source.target &&
         a.target.source == b.target.source && a.target.target == b.target.target &&
         a.on_source == b.on_source && a.on_target == b.on_target;
}

CCrossedModule inclusion_crossed_module(const CSubset& h) {
  if (!is_perfect(h) || !is_normal(h))
    throw Error(ErrorCode::NotPerfectOrNormal, "inclusion needs a perfect normal c-subgroup");
  const auto& G = h.parent;
  const auto incl = subset_inclusion(h);
  const auto& M = incl.source;
  std::vector<Elem> dot(G.size() * M.size());
  for (Elem g = 0; g < G.size(); ++g)
    for (Elem m = 0; m < M.size(); ++m) {
      const Elem conj = G.add(g, G.sub(incl(m), g));
      Elem chosen = kNone;
      for (Elem member : h.members)
        if (G.related(member, conj)) {
          chosen = member;
          break;
        }
      dot[g * M.size() + m] = M.index(G.name(chosen));
    }
  CCrossedModule x = make_crossed_module(M, G, incl.map, std::move(dot), PairSet(M.size()));
  x.weak_special = relational_weak_special(x);
  return x;
}

}  // namespace cssc
