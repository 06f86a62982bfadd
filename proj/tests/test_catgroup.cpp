#include <gtest/gtest.h>

#include <algorithm>

#include "cssc/catgroup.hpp"
#include "cssc/corpus.hpp"
#include "instances.hpp"
#include "oracles.hpp"

using namespace cssc;
using namespace fixtures;

namespace {

const Check* failed(const ValidationReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name && !c.passed) return &c;
  return nullptr;
}

std::vector<std::string> special_names(const CatGroup& c) {
  std::vector<std::string> out;
  for (Elem f = 0; f < c.num_arrows(); ++f)
    if (c.is_special_iso(f)) out.push_back(c.arrow_name(f));
  return out;
}

}  // namespace

TEST(ValidateCatGroup, Discrete) {
  const auto r = validate_catgroup(dz2());
  EXPECT_TRUE(r.ok()) << r.summary();
}

TEST(ValidateCatGroup, Delooping) { EXPECT_TRUE(validate_catgroup(bz2()).ok()); }

TEST(ValidateCatGroup, SkeletalCocycle) {
  const auto r = validate_catgroup(instances::skz2());
  EXPECT_TRUE(r.ok()) << r.summary();
  EXPECT_EQ(failed(r, "pentagon"), nullptr);
}

TEST(ValidateCatGroup, BrownSpencer) { EXPECT_TRUE(validate_catgroup(instances::bs_z2_z4()).ok()); }

TEST(ValidateCatGroup, BrokenPentagonWitness) {
  // Associator ω(1,1,0) = 1 is not normalized and breaks the pentagon.
  auto t = instances::skz2().tables();
  const auto& c = instances::skz2();
  t.alpha[(1 * 2 + 1) * 2 + 0] = arr(c, "(0,1)");
  const auto r = validate_catgroup(CatGroup(t));
  EXPECT_FALSE(r.ok());
  EXPECT_NE(failed(r, "pentagon"), nullptr);
}

TEST(ValidateCatGroup, TypingFailuresStopEarly) {
  auto d = dz2().tables();
  d.lambda[1] = 0;  // λ₁ must be 0+1 → 1
  const auto r = validate_catgroup(CatGroup(d));
  ASSERT_NE(failed(r, "lambda endpoints"), nullptr);
  EXPECT_EQ(failed(r, "lambda endpoints")->witness, "x=1");
  EXPECT_EQ(failed(r, "pentagon"), nullptr);
  for (const auto& c : r.checks) EXPECT_EQ(c.name.find("natural"), std::string::npos);
}

TEST(ValidateCatGroup, StopAtFirst) {
  auto t = instances::skz2().tables();
  t.arr_add[0] = 1;
  const auto r = validate_catgroup(CatGroup(t), {64, true});
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(std::count_if(r.checks.begin(), r.checks.end(), [](const Check& c) { return !c.passed; }), 1);
  EXPECT_FALSE(r.checks.back().passed);
}

TEST(ValidateCatGroup, TooLarge) {
  try {
    validate_catgroup(instances::bs_z2_z4(), {4, false});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
}

TEST(ValidateCatGroup, NonAbelianDeloopingFailsInterchange) {
  const auto r = validate_catgroup(gen_delooping(groups::symmetric3()));
  const Check* c = failed(r, "interchange");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->witness.empty());
}

TEST(ValidateCatGroup, CompOnWrongPairsIsMalformed) {
  auto t = dz2().tables();
  t.comp[1] = 0;
  try {
    CatGroup c(t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MalformedTable);
  }
}

TEST(ValidateCatGroup, NotAGroupoid) {
  const auto c = instances::bz2();
  EXPECT_EQ(c.inverse(1), 1u);
  auto t = c.tables();
  t.comp = {0, 1, 1, 1};  // 1∘1 = 1: no inverse for 1
  const CatGroup broken(t);
  EXPECT_EQ(broken.inverse(1), kNone);
  EXPECT_THROW(broken.inv(1), Error);
  EXPECT_NE(failed(validate_catgroup(broken), "every arrow invertible"), nullptr);
}

TEST(SpecialIsoClosure, Examples) {
  EXPECT_EQ(special_names(dz2()), (std::vector<std::string>{"1_0", "1_1"}));
  EXPECT_EQ(special_names(bz2()), std::vector<std::string>{"0"});
  const auto sk = instances::skz2();
  EXPECT_TRUE(sk.is_special_iso(sk.alpha(1, 1, 1)));
  EXPECT_EQ(sk.arrow_name(sk.alpha(1, 1, 1)), "(1,1)");
  EXPECT_EQ(special_iso_closure(sk), sk.special_isos());
}

TEST(CoherenceDiagnostic, Examples) {
  EXPECT_TRUE(coherence_diagnostic(dz2()).empty());
  const auto sites = special_iso_sites(bz2());
  ASSERT_EQ(sites.size(), 1u);
  EXPECT_EQ(sites[0].isos.size(), 1u);
  EXPECT_TRUE(coherence_diagnostic(bz2()).empty());
  const auto sk = instances::skz2();
  const auto multi = coherence_diagnostic(sk);
  bool found = false;
  for (const auto& s : multi)
    if (s.from == 1 && s.to == 1) {
      found = true;
      EXPECT_EQ(s.isos.size(), 2u);
    }
  EXPECT_TRUE(found);
}

TEST(ChosenSpecial, IsFirstDiscovered) {
  const auto sk = instances::skz2();
  EXPECT_EQ(sk.chosen_special(1, 1), sk.id(1));
  EXPECT_EQ(sk.special_order().front(), sk.id(0));
  EXPECT_EQ(sk.chosen_special(0, 1), kNone);
}

TEST(Recipes, Gammas) {
  for (const auto& [name, c] : default_corpus().instances) {
    const Elem z = c.zero();
    EXPECT_EQ(c.dom(c.gamma0()), z);
    EXPECT_EQ(c.cod(c.gamma0()), c.obj_add(z, z));
    EXPECT_EQ(c.dom(c.zeta()), z);
    EXPECT_EQ(c.cod(c.zeta()), c.neg_obj(z));
    for (Elem r = 0; r < c.num_objects(); ++r) {
      EXPECT_EQ(c.dom(c.gamma(r)), z) << name;
      EXPECT_EQ(c.cod(c.gamma(r)), c.obj_add(r, c.obj_add(z, c.neg_obj(r)))) << name;
      EXPECT_TRUE(c.is_special_iso(c.gamma(r))) << name;
    }
  }
}

TEST(StarZero, Examples) {
  EXPECT_EQ(arrows_star_zero(dz2()).size(), 1u);
  const auto s = arrows_star_zero(bz2());
  EXPECT_EQ(s.size(), 2u);
  EXPECT_TRUE(is_connected(s));
  EXPECT_TRUE(validate_cgroup(s).ok());
  EXPECT_EQ(objects_cgroup(instances::skz2()).rel(), Partition::equality(2));
}

TEST(StarZero, ObjectsSpecialFromSpecialIsos) {
  // Objects joined by a special iso are special; ind_x2 has x0 + x0 = x1.
  const auto c = default_corpus().instance("ind_x2");
  const auto g = objects_cgroup(c);
  EXPECT_EQ(g.special().count(), 4u);
}

TEST(StarZero, EveryCorpusInstanceGivesCGroups) {
  for (const auto& [name, c] : default_corpus().instances) {
    EXPECT_TRUE(validate_cgroup(objects_cgroup(c)).ok()) << name;
    EXPECT_TRUE(validate_cgroup(arrows_star_zero(c)).ok()) << name;
    EXPECT_TRUE(validate_cgroup(arrows_ker_d0(c)).ok()) << name;
    EXPECT_TRUE(validate_cgroup(arrows_cgroup(c)).ok()) << name;
    const auto k1 = ker_d1_subset(c);
    for (Elem f : k1.members) EXPECT_TRUE(objects_cgroup(c).related(c.cod(f), c.zero())) << name;
  }
}

TEST(StarAction, Examples) {
  for (const auto& c : {dz2(), bz2()}) {
    const auto a = star_action(c);
    EXPECT_TRUE(validate_action(a).ok());
    for (Elem r = 0; r < a.actor.size(); ++r)
      for (Elem f = 0; f < a.acted.size(); ++f) EXPECT_EQ(a(r, f), f);
  }
}

TEST(StarAction, ZeroArrowFixedUpToRel) {
  for (const auto& [name, c] : default_corpus().instances) {
    const auto a = star_action(c);
    EXPECT_TRUE(validate_action(a).ok()) << name;
    const Elem z = a.acted.zero();
    for (Elem r = 0; r < a.actor.size(); ++r) EXPECT_TRUE(a.acted.related(a(r, z), z)) << name;
  }
}

TEST(WeakSpecialIso, EqualityOnDiscreteAndDelooping) {
  EXPECT_EQ(weak_special_iso_pairs(bz2()), PairSet::diagonal(2));
  EXPECT_EQ(weak_special_iso_pairs(dz2()), PairSet::diagonal(2));
}

namespace {

// Pairs g ≠ h with equal endpoints that are both weakly specially isomorphic to one f.
std::size_t parallel_partners(const CatGroup& c) {
  const auto w = weak_special_iso_pairs(c);
  std::size_t count = 0;
  for (Elem f = 0; f < c.num_arrows(); ++f)
    for (Elem g = 0; g < c.num_arrows(); ++g)
      for (Elem h = g + 1; h < c.num_arrows(); ++h)
        if (w.contains(f, g) && w.contains(f, h) && c.dom(g) == c.dom(h) && c.cod(g) == c.cod(h)) ++count;
  return count;
}

}  // namespace

TEST(WeakSpecialIso, UniquePartnerPerEndpoints) {
  for (const auto& [name, c] : default_corpus().instances)
    if (name != "skz2") EXPECT_EQ(parallel_partners(c), 0u) << name;
}

TEST(WeakSpecialIso, SkeletalCocycleHasParallelPartners) {
  // (x,a) and (x,a+1) differ by a special endo-iso: α_{1,1,1} on 1 and δ_1 on 0.
  const auto sk = instances::skz2();
  EXPECT_EQ(parallel_partners(sk), 4u);
  const auto w = weak_special_iso_pairs(sk);
  EXPECT_TRUE(w.contains(arr(sk, "(1,0)"), arr(sk, "(1,1)")));
  EXPECT_TRUE(w.contains(arr(sk, "(0,0)"), arr(sk, "(0,1)")));
}

TEST(StructuralLemmas, EveryCorpusInstance) {
  for (const auto& [name, c] : default_corpus().instances) {
    EXPECT_TRUE(check_comp_via_add(c).ok()) << name;
    EXPECT_TRUE(check_ker_commute(c).ok()) << name;
    for (Elem x = 0; x < c.num_objects(); ++x) EXPECT_EQ(c.neg_arr(c.id(x)), c.id(c.neg_obj(x))) << name;
  }
}

TEST(StructuralLemmas, UnitArrowsConnectedToF) {
  for (const auto& [name, c] : default_corpus().instances) {
    const auto w = weak_special_iso_pairs(c);
    const Elem one0 = c.id(c.zero());
    for (Elem f = 0; f < c.num_arrows(); ++f) {
      EXPECT_TRUE(w.contains(c.arr_add(one0, f), f)) << name;
      EXPECT_TRUE(w.contains(c.arr_add(f, one0), f)) << name;
    }
  }
}

TEST(Functor, IdentityPasses) {
  for (const auto& [name, c] : default_corpus().instances) EXPECT_TRUE(validate_functor(identity_functor(c)).ok());
}

TEST(Functor, ArrowSwapFailsIdentities) {
  const auto b = bz2();
  const CatGroupFunctor swap{b, b, {0}, {1, 0}};
  const Check* c = failed(validate_functor(swap), "preserves identities");
  ASSERT_NE(c, nullptr);
}

TEST(Functor, CorpusFunctorsPass) {
  const auto corpus = default_corpus();
  for (const auto& f : corpus.functors) EXPECT_TRUE(validate_functor(f.value).ok()) << f.name;
}

TEST(Functor, ComposeChecksEnds) {
  const auto corpus = default_corpus();
  const auto& f = corpus.functor("dz2_to_bz2").value;
  EXPECT_THROW(compose(f, f), Error);
  const auto g = compose(identity_functor(f.target), f);
  EXPECT_EQ(g.f1, f.f1);
}

TEST(SpecialIsoClosure, MatchesNaiveOracleOnCorpus) {
  for (const auto& [name, c] : default_corpus().instances) {
    std::set<Elem> lib;
    for (Elem f = 0; f < c.num_arrows(); ++f)
      if (c.is_special_iso(f)) lib.insert(f);
    EXPECT_EQ(lib, oracle::special_iso_closure(c)) << name;
  }
}

TEST(SpecialIsoClosure, InverseOfSpecialIsSpecial) {
  for (const auto& [name, c] : default_corpus().instances)
    for (Elem f = 0; f < c.num_arrows(); ++f)
      if (c.is_special_iso(f)) EXPECT_TRUE(c.is_special_iso(c.inv(f))) << name;
}
