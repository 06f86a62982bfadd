#include <gtest/gtest.h>

#include "cssc/corpus.hpp"
#include "cssc/crossmod.hpp"
#include "cssc/functors.hpp"
#include "instances.hpp"

using namespace cssc;
using namespace fixtures;

namespace {

const Check* failed(const ValidationReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name && !c.passed) return &c;
  return nullptr;
}

CCrossedModule l_bz2_by_hand() { return to_trivial(z2tot(), PairSet::diagonal(2)); }

}  // namespace

TEST(Action, TrivialPasses) {
  EXPECT_TRUE(validate_action(trivial_action(x2tot(), z3eq())).ok());
  EXPECT_TRUE(validate_action(trivial_action(z4eq(), x2tot())).ok());
}

TEST(Action, InversionPasses) { EXPECT_TRUE(validate_action(inversion()).ok()); }

TEST(Action, ShiftFailsFirstAxiom) {
  const auto r = validate_action({z2eq(), z2eq(), {0, 1, 1, 1}});
  const Check* c = failed(r, "(i) b.(a+a1) ~ b.a + b.a1");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->witness, "b,a,a1=(1,0,0)");
}

TEST(Action, BadShapeIsMalformed) {
  try {
    validate_action({z2eq(), z2eq(), {0, 1, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MalformedTable);
  }
}

TEST(CrossedModule, InclusionIntoZ4) {
  const auto x = inclusion_crossed_module(make_subset(z4eq(), {0, 2}));
  EXPECT_TRUE(validate_crossed_module(x).ok()) << validate_crossed_module(x).summary();
  EXPECT_TRUE(is_strict(x));
}

TEST(CrossedModule, IdentityModule) {
  const auto g = z2eq();
  const auto x = make_crossed_module(g, g, {0, 1}, {0, 1, 0, 1}, PairSet::diagonal(2));
  EXPECT_TRUE(validate_crossed_module(x).ok());
  EXPECT_FALSE(is_cssc(x));
}

TEST(CrossedModule, WeakSpecialOutsideRel) {
  PairSet w = PairSet::diagonal(2);
  w.insert(0, 1);
  w.insert(1, 0);
  const auto x = make_crossed_module(z2eq(), z2eq(), {0, 0}, {0, 1, 0, 1}, w);
  const auto r = validate_crossed_module(x);
  EXPECT_FALSE(r.ok());
  EXPECT_NE(failed(r, "weak-special within rel"), nullptr);
}

TEST(CrossedModule, WeakSpecialInsideRelIsFine) {
  PairSet w = PairSet::diagonal(2);
  w.insert(0, 1);
  w.insert(1, 0);
  const auto x = make_crossed_module(z2tot(), trivial_cgroup(), {0, 0}, {0, 1}, w);
  EXPECT_TRUE(validate_crossed_module(x).ok());
}

TEST(CrossedModule, BoundaryAxiomWitness) {
  // A3 ↪ S3 with the trivial action: ∂(b·a) = ∂a differs from the conjugate b + (∂a − b).
  const auto s3 = from_group(groups::symmetric3());
  const auto inc = inclusion_crossed_module(make_subset(s3, {s3.index("123"), s3.index("231"), s3.index("312")}));
  const auto x = make_crossed_module(inc.source, inc.target, inc.boundary,
                                     trivial_action(inc.target, inc.source).dot, inc.weak_special);
  const Check* c = failed(validate_crossed_module(x), "(i) d(b.a) = b + (d(a) - b)");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->witness.empty());
}

TEST(Strict, Examples) {
  EXPECT_TRUE(is_strict(inclusion_crossed_module(make_subset(z4eq(), {0, 2}))));
  EXPECT_TRUE(is_strict(to_trivial(trivial_cgroup(), PairSet::diagonal(1))));
  // Axiom (ii) only up to rel: a = a1 = x1 gives x1 + (x1 − x1) = x0 ≠ x1.
  const auto lax = to_trivial(x2tot(), special_closure(x2tot()));
  EXPECT_TRUE(validate_crossed_module(lax).ok());
  EXPECT_FALSE(is_strict(lax));
}

TEST(Special, LOfBZ2ByHand) {
  const auto x = l_bz2_by_hand();
  EXPECT_TRUE(validate_crossed_module(x).ok());
  EXPECT_TRUE(is_special(x));
  EXPECT_TRUE(is_cssc(x));
}

TEST(Special, TotalWeakSpecialBreaksUniqueness) {
  PairSet w(2);
  for (Elem a = 0; a < 2; ++a)
    for (Elem b = 0; b < 2; ++b) w.insert(a, b);
  const auto x = to_trivial(z2tot(), w);
  EXPECT_TRUE(validate_crossed_module(x).ok());
  EXPECT_FALSE(is_special(x));
  try {
    special_lift(x, 1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonUniqueLift);
    EXPECT_NE(std::string(e.what()).find("{0,1}"), std::string::npos) << e.what();
  }
}

TEST(Special, OneElementModule) {
  const auto x = to_trivial(trivial_cgroup(), PairSet::diagonal(1));
  EXPECT_TRUE(is_special(x));
  EXPECT_TRUE(is_cssc(x));
}

TEST(Special, RelationalReadingBreaksLOfBZ2) {
  const auto x = l_bz2_by_hand();
  const auto rel = relational_weak_special(x);
  EXPECT_EQ(rel.count(), 4u);
  EXPECT_FALSE(is_special(to_trivial(z2tot(), rel)));
}

TEST(SpecialLift, Examples) {
  const auto x = l_bz2_by_hand();
  for (Elem c = 0; c < 2; ++c) EXPECT_EQ(special_lift(x, c, x.d(c)), c);
  EXPECT_EQ(special_lift(x, 1, 0), 1u);
  EXPECT_EQ(lift_candidates(x, 1, 0), std::vector<Elem>{1});
}

TEST(SpecialLift, NotSpecialPair) {
  const auto x = from_trivial(z2eq());
  try {
    special_lift(x, 0, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSpecialPair);
  }
}

TEST(SpecialLift, NearZeroLiftInLImage) {
  // Lemma-style instance: for special (r, r′) the lift of 0 over r′ − r.
  const auto x = L0(instances::bs_z2_z4());
  const auto& N = x.target;
  for (Elem r = 0; r < N.size(); ++r)
    for (Elem r2 = 0; r2 < N.size(); ++r2)
      if (N.special_pair(r, r2)) {
        const Elem c = special_lift(x, x.source.zero(), N.sub(r2, r));
        EXPECT_EQ(x.d(c), N.sub(r2, r));
        EXPECT_TRUE(x.weakly_special(c, x.source.zero()));
      }
}

TEST(Cssc, Examples) {
  EXPECT_TRUE(is_cssc(L0(instances::dz2())));
  EXPECT_TRUE(is_cssc(L0(instances::bz2())));
  EXPECT_FALSE(is_cssc(make_crossed_module(z2eq(), z2eq(), {0, 1}, {0, 1, 0, 1}, PairSet::diagonal(2))));
}

TEST(CmMorphism, IdentityPasses) {
  EXPECT_TRUE(validate_cm_morphism(identity_cm_morphism(l_bz2_by_hand())).ok());
  const auto x = inclusion_crossed_module(make_subset(z4eq(), {0, 2}));
  EXPECT_TRUE(validate_cm_morphism(identity_cm_morphism(x)).ok());
}

TEST(CmMorphism, LImageOfFunctorPasses) {
  const auto corpus = default_corpus();
  for (const auto& f : corpus.functors) {
    const auto m = L1(f.value);
    EXPECT_TRUE(validate_cm_morphism(m).ok()) << f.name << validate_cm_morphism(m).summary();
  }
}

TEST(CmMorphism, BrokenSquareHasWitness) {
  const auto x = inclusion_crossed_module(make_subset(z4eq(), {0, 2}));
  auto m = identity_cm_morphism(x);
  m.on_target.assign(4, 0);
  const auto r = validate_cm_morphism(m);
  const Check* c = failed(r, "g d = d' f");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->witness, "a=2");
}

TEST(CmMorphism, ComposeAndCompare) {
  const auto x = l_bz2_by_hand();
  const auto id = identity_cm_morphism(x);
  EXPECT_TRUE(same_morphism(compose(id, id), id));
}

TEST(Inclusion, Examples) {
  const auto whole = inclusion_crossed_module(make_subset(z4eq(), {0, 1, 2, 3}));
  EXPECT_TRUE(validate_crossed_module(whole).ok());
  try {
    inclusion_crossed_module(make_subset(x2tot(), {el(x2tot(), "x0")}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPerfectOrNormal);
  }
}

TEST(Inclusion, NormalSubgroupOfS3) {
  const auto s3 = from_group(groups::symmetric3());
  const auto x = inclusion_crossed_module(make_subset(s3, {s3.index("123"), s3.index("231"), s3.index("312")}));
  EXPECT_TRUE(validate_crossed_module(x).ok());
  EXPECT_TRUE(is_strict(x));
  // Conjugating a 3-cycle by a transposition inverts it.
  EXPECT_EQ(x.source.name(x.act(s3.index("213"), x.source.index("231"))), "312");
}

TEST(KernelExtension, Discrete) {
  const auto k = kernel_extension(instances::dz2());
  EXPECT_EQ(k.ker_d0.size(), 1u);
  EXPECT_TRUE(validate_action(k.action).ok());
  EXPECT_TRUE(validate_crossed_module(k.module).ok());
  EXPECT_TRUE(is_connected(k.module.source));
}

TEST(KernelExtension, DeloopingHasFullTrivialKernel) {
  const auto k = kernel_extension(instances::bz2());
  EXPECT_EQ(k.ker_d0.size(), 2u);
  for (Elem c = 0; c < 2; ++c) EXPECT_EQ(k.action(0, c), c);
  EXPECT_TRUE(validate_crossed_module(k.module).ok());
}

TEST(KernelExtension, BrownSpencerIsConnectedModule) {
  const auto k = kernel_extension(instances::bs_z2_z4());
  EXPECT_TRUE(validate_action(k.action).ok());
  EXPECT_TRUE(validate_crossed_module(k.module).ok()) << validate_crossed_module(k.module).summary();
  EXPECT_TRUE(is_connected(k.module.source));
  EXPECT_TRUE(validate_morphism(k.j).ok());
  EXPECT_TRUE(validate_morphism(k.d0).ok());
  EXPECT_TRUE(validate_morphism(k.i).ok());
}

TEST(KernelExtension, EveryCorpusInstance) {
  for (const auto& [name, c] : default_corpus().instances) {
    const auto k = kernel_extension(c);
    EXPECT_TRUE(validate_action(k.action).ok()) << name;
    EXPECT_TRUE(validate_crossed_module(k.module).ok()) << name;
    EXPECT_TRUE(is_connected(k.module.source)) << name;
  }
}

TEST(CrossedModule, ClassicalReductionOnStrictGroups) {
  // Over groups with equality the c-axioms are the classical equations.
  for (const auto& [g, members] : std::vector<std::pair<GroupTable, std::vector<std::string>>>{
           {groups::cyclic(4), {"0", "2"}}, {groups::symmetric3(), {"123", "231", "312"}}}) {
    const auto classical = normal_subgroup_module(g, members);
    EXPECT_TRUE(validate_classical(classical).ok());
    const auto G = from_group(g);
    std::vector<Elem> idx;
    for (const auto& m : members) idx.push_back(G.index(m));
    const auto x = inclusion_crossed_module(make_subset(G, idx));
    EXPECT_TRUE(validate_crossed_module(x).ok());
    EXPECT_TRUE(is_strict(x));
  }
}
