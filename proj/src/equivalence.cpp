#include "cssc/equivalence.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <thread>

namespace cssc {

CatGroupFunctor build_P(const CatGroup& c, const TCatGroup& tl) {
  const auto& star = tl.module.source;
  const auto reps = weak_special_reps(tl.module);
  CatGroupFunctor p{c, tl.cat, std::vector<Elem>(c.num_objects()), {}};
  for (Elem x = 0; x < c.num_objects(); ++x) p.f0[x] = tl.cat.objects().index(c.object_name(x));
  for (Elem f = 0; f < c.num_arrows(); ++f) {
    const Elem x = c.dom(f);
    const Elem shifted = c.comp(c.arr_add(f, c.neg_arr(c.id(x))), c.inv(c.delta(x)));
    const Elem s = reps[star.index(c.arrow_name(shifted))];
    p.f1.push_back(tl.index({p.f0[x], p.f0[c.cod(f)], s}));
  }
  return p;
}

CatGroupFunctor build_F(const CatGroup& c, const TCatGroup& tl) {
  const auto& star = tl.module.source;
  CatGroupFunctor f{tl.cat, c, std::vector<Elem>(tl.cat.num_objects()), {}};
  for (Elem x = 0; x < tl.cat.num_objects(); ++x) f.f0[x] = c.objects().index(tl.cat.object_name(x));
  for (const auto& g : tl.arrows) {
    const Elem r = f.f0[g.dom], target = f.f0[g.cod];
    const Elem mid = c.arr_add(c.arrows().index(star.name(g.c)), c.id(r));
    const Elem sigma = c.chosen_special(c.cod(mid), target);
    if (sigma == kNone)
      throw Error(ErrorCode::NotSpecialPair,
                  "no special iso " + c.object_name(c.cod(mid)) + " -> " + c.object_name(target));
    f.f1.push_back(c.comp(sigma, c.comp(mid, c.inv(c.lambda(r)))));
  }
  return f;
}

CrossedModuleMorphism build_phi(const CCrossedModule& x, const TCatGroup& tx, const CCrossedModule& ltx) {
  const auto reps = weak_special_reps(x);
  CrossedModuleMorphism m{x, ltx, {}, identity_morphism(x.target).map};
  for (Elem c = 0; c < x.source.size(); ++c) {
    const Elem a = tx.index({x.target.zero(), x.d(c), reps[c]});
    m.on_source.push_back(ltx.source.index(tx.cat.arrow_name(a)));
  }
  return m;
}

CrossedModuleMorphism build_psi(const CCrossedModule& x, const TCatGroup& tx, const CCrossedModule& ltx) {
  CrossedModuleMorphism m{ltx, x, {}, identity_morphism(x.target).map};
  for (Elem e = 0; e < ltx.source.size(); ++e) {
    const GArrow& g = tx.arrows[tx.cat.arrows().index(ltx.source.name(e))];
    m.on_source.push_back(special_lift(x, g.c, g.cod));
  }
  return m;
}

namespace {

std::string title(std::string_view kind, const std::string& name) {
  return name.empty() ? std::string(kind) : std::string(kind) + " " + name;
}

void record_error(ValidationReport& r, const std::string& step, const Error& e) { r.fail(step, e.what()); }

// First f with second(first(f)) != f, named via `name`.
template <typename Name>
std::string round_trip_witness(const std::vector<Elem>& first, const std::vector<Elem>& second, Name name) {
  for (Elem f = 0; f < first.size(); ++f)
    if (second[first[f]] != f) return name(f);
  return {};
}

std::string table_mismatch(const std::vector<Elem>& a, const std::vector<Elem>& b,
                           const std::function<std::string(Elem)>& name) {
  for (Elem i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return name(i);
  return {};
}

std::vector<Elem> after(const std::vector<Elem>& second, const std::vector<Elem>& first) {
  std::vector<Elem> out;
  for (Elem v : first) out.push_back(second[v]);
  return out;
}

}  // namespace

ValidationReport verify_TL(const CatGroup& c, std::string name) {
  ValidationReport r;
  r.subject = title("TL", name);
  std::optional<TCatGroup> tl;
  try {
    tl.emplace(T0(L0(c)));
  } catch (const Error& e) {
    record_error(r, "T(L(C)) defined", e);
    return r;
  }
  std::optional<CatGroupFunctor> p, f;
  try {
    p.emplace(build_P(c, *tl));
    f.emplace(build_F(c, *tl));
  } catch (const Error& e) {
    record_error(r, "P and F defined", e);
    return r;
  }
  r.merge(validate_functor(*p), "P: ");
  r.merge(validate_functor(*f), "F: ");
  std::string w = round_trip_witness(p->f0, f->f0, [&](Elem x) { return c.object_name(x); });
  if (w.empty()) w = round_trip_witness(p->f1, f->f1, [&](Elem a) { return c.arrow_name(a); });
  r.record("FP = 1", w.empty(), w);
  w = round_trip_witness(f->f0, p->f0, [&](Elem x) { return tl->cat.object_name(x); });
  if (w.empty()) w = round_trip_witness(f->f1, p->f1, [&](Elem a) { return tl->cat.arrow_name(a); });
  r.record("PF = 1", w.empty(), w);
  return r;
}

ValidationReport verify_TL_naturality(const CatGroupFunctor& t, std::string name) {
  ValidationReport r;
  r.subject = title("TL-naturality", name);
  try {
    const TCatGroup tl = T0(L0(t.source));
    const TCatGroup tl2 = T0(L0(t.target));
    const auto p = build_P(t.source, tl);
    const auto p2 = build_P(t.target, tl2);
    const auto tlt = T1(L1(t), tl, tl2);
    std::string w = table_mismatch(after(p2.f0, t.f0), after(tlt.f0, p.f0),
                                   [&](Elem x) { return t.source.object_name(x); });
    if (w.empty())
      w = table_mismatch(after(p2.f1, t.f1), after(tlt.f1, p.f1), [&](Elem f) { return t.source.arrow_name(f); });
    r.record("P' T = TL(T) P", w.empty(), w);
  } catch (const Error& e) {
    record_error(r, "naturality square defined", e);
  }
  return r;
}

ValidationReport verify_LT(const CCrossedModule& x, std::string name) {
  ValidationReport r;
  r.subject = title("LT", name);
  try {
    const TCatGroup tx = T0(x);
    const CCrossedModule ltx = L0(tx.cat);
    const auto phi = build_phi(x, tx, ltx);
    const auto psi = build_psi(x, tx, ltx);
    r.merge(validate_cm_morphism(phi), "phi: ");
    r.merge(validate_cm_morphism(psi), "psi: ");
    std::string w = round_trip_witness(phi.on_source, psi.on_source, [&](Elem c) { return x.source.name(c); });
    if (w.empty()) w = round_trip_witness(phi.on_target, psi.on_target, [&](Elem t) { return x.target.name(t); });
    r.record("psi phi = 1", w.empty(), w);
    w = round_trip_witness(psi.on_source, phi.on_source, [&](Elem c) { return ltx.source.name(c); });
    if (w.empty()) w = round_trip_witness(psi.on_target, phi.on_target, [&](Elem t) { return ltx.target.name(t); });
    r.record("phi psi = 1", w.empty(), w);
  } catch (const Error& e) {
    record_error(r, "phi and psi defined", e);
  }
  return r;
}

ValidationReport verify_LT_naturality(const CrossedModuleMorphism& m, std::string name) {
  ValidationReport r;
  r.subject = title("LT-naturality", name);
  try {
    const TCatGroup tx = T0(m.source), tx2 = T0(m.target);
    const CCrossedModule ltx = L0(tx.cat), ltx2 = L0(tx2.cat);
    const auto phi = build_phi(m.source, tx, ltx);
    const auto phi2 = build_phi(m.target, tx2, ltx2);
    const auto ltm = L1(T1(m, tx, tx2));
    std::string w = table_mismatch(after(phi2.on_source, m.on_source), after(ltm.on_source, phi.on_source),
                                   [&](Elem c) { return m.source.source.name(c); });
    if (w.empty())
      w = table_mismatch(after(phi2.on_target, m.on_target), after(ltm.on_target, phi.on_target),
                         [&](Elem t) { return m.source.target.name(t); });
    r.record("phi' m = LT(m) phi", w.empty(), w);
  } catch (const Error& e) {
    record_error(r, "naturality square defined", e);
  }
  return r;
}

ValidationReport verify_L_functoriality(const CatGroupFunctor& g, const CatGroupFunctor& f, std::string name) {
  ValidationReport r;
  r.subject = title("L-functoriality", name);
  try {
    r.record("L(1) = 1", same_morphism(L1(identity_functor(f.source)), identity_cm_morphism(L0(f.source))));
    r.record("L(g f) = L(g) L(f)", same_morphism(L1(compose(g, f)), compose(L1(g), L1(f))));
  } catch (const Error& e) {
    record_error(r, "L defined", e);
  }
  return r;
}

ValidationReport verify_T_functoriality(const CrossedModuleMorphism& g, const CrossedModuleMorphism& f,
                                        std::string name) {
  ValidationReport r;
  r.subject = title("T-functoriality", name);
  try {
    const TCatGroup a = T0(f.source), b = T0(f.target), c = T0(g.target);
    const auto one = T1(identity_cm_morphism(f.source), a, a);
    const auto expected = identity_functor(a.cat);
    r.record("T(1) = 1", one.f0 == expected.f0 && one.f1 == expected.f1);
    const auto whole = T1(compose(g, f), a, c);
    const auto parts = compose(T1(g, b, c), T1(f, a, b));
    r.record("T(g f) = T(g) T(f)", whole.f0 == parts.f0 && whole.f1 == parts.f1);
  } catch (const Error& e) {
    record_error(r, "T defined", e);
  }
  return r;
}

bool EquivalenceSummary::ok() const {
  return std::all_of(reports.begin(), reports.end(), [](const ValidationReport& r) { return r.ok(); });
}

std::size_t EquivalenceSummary::failures() const {
  return std::count_if(reports.begin(), reports.end(), [](const ValidationReport& r) { return !r.ok(); });
}

EquivalenceSummary verify_equivalence(const Corpus& corpus, unsigned jobs) {
  EquivalenceSummary summary;
  std::vector<std::string> valid;
  for (const auto& [name, c] : corpus.instances) {
    ValidationReport r;
    try {
      r = validate_catgroup(c);
    } catch (const Error& e) {
      r.fail("validation ran", e.what());
    }
    r.subject = "validate " + name;
    if (r.ok()) valid.push_back(name);
    summary.reports.push_back(std::move(r));
  }
  auto is_valid = [&](const std::string& n) { return std::find(valid.begin(), valid.end(), n) != valid.end(); };

  std::vector<std::function<ValidationReport()>> tasks;
  for (const auto& [name, c] : corpus.instances) {
    if (!is_valid(name)) continue;
    tasks.push_back([&c, name] { return verify_TL(c, name); });
    tasks.push_back([&c, name] {
      try {
        return verify_LT(L0(c), "L(" + name + ")");
      } catch (const Error& e) {
        ValidationReport r;
        r.subject = "LT L(" + name + ")";
        r.fail("L0 defined", e.what());
        return r;
      }
    });
  }
  for (const auto& f : corpus.functors) {
    if (!is_valid(f.source) || !is_valid(f.target)) continue;
    tasks.push_back([&f] {
      auto r = validate_functor(f.value);
      r.subject = "functor " + f.name;
      return r;
    });
    tasks.push_back([&f] { return verify_TL_naturality(f.value, f.name); });
    tasks.push_back([&f] { return verify_LT_naturality(L1(f.value), "L(" + f.name + ")"); });
  }
  for (const auto& g : corpus.functors)
    for (const auto& f : corpus.functors) {
      if (f.target != g.source || !is_valid(f.source) || !is_valid(f.target) || !is_valid(g.target)) continue;
      const std::string pair = g.name + " . " + f.name;
      tasks.push_back([&g, &f, pair] { return verify_L_functoriality(g.value, f.value, pair); });
      tasks.push_back([&g, &f, pair] { return verify_T_functoriality(L1(g.value), L1(f.value), "L(" + pair + ")"); });
    }

  std::vector<ValidationReport> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      try {
        results[i] = tasks[i]();
      } catch (const Error& e) {
        results[i].subject = "task " + std::to_string(i);
        results[i].fail("completed", e.what());
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < std::max(jobs, 1u); ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (auto& r : results) summary.reports.push_back(std::move(r));
  std::stable_sort(summary.reports.begin(), summary.reports.end(),
                   [](const ValidationReport& a, const ValidationReport& b) { return a.subject < b.subject; });
  return summary;
}

}  // namespace cssc
