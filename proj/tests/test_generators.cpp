#include <gtest/gtest.h>

#include "cssc/corpus.hpp"
#include "cssc/generators.hpp"
#include "instances.hpp"
#include "oracles.hpp"

using namespace cssc;

TEST(GenDiscrete, Z2MatchesHandBuilt) { EXPECT_EQ(gen_discrete(groups::cyclic(2)), fixtures::dz2()); }

TEST(GenDiscrete, Z4AndS3Validate) {
  EXPECT_TRUE(validate_catgroup(gen_discrete(groups::cyclic(4))).ok());
  EXPECT_TRUE(validate_catgroup(gen_discrete(groups::symmetric3())).ok());
}

TEST(GenDiscrete, TrivialGroupIsTerminal) {
  const auto c = gen_discrete(groups::trivial());
  EXPECT_EQ(c.num_objects(), 1u);
  EXPECT_EQ(c.num_arrows(), 1u);
  EXPECT_TRUE(validate_catgroup(c).ok());
}

TEST(GenDelooping, Z2MatchesHandBuilt) {
  const auto c = gen_delooping(groups::cyclic(2));
  EXPECT_EQ(c, fixtures::bz2());
  EXPECT_TRUE(validate_catgroup(c).ok());
}

TEST(GenDelooping, Z3Validates) { EXPECT_TRUE(validate_catgroup(gen_delooping(groups::cyclic(3))).ok()); }

TEST(GenDelooping, NonAbelianRejectedAtInterchange) {
  const auto r = validate_catgroup(gen_delooping(groups::symmetric3()));
  ASSERT_NE(r.first_failure(), nullptr);
  EXPECT_EQ(r.first_failure()->name, "interchange");
}

TEST(GenSkeletal, SkZ2Validates) {
  const auto c = instances::skz2();
  EXPECT_EQ(c.num_objects(), 2u);
  EXPECT_EQ(c.num_arrows(), 4u);
  EXPECT_TRUE(validate_catgroup(c).ok());
  EXPECT_EQ(c.arrow_name(c.alpha(1, 1, 1)), "(1,1)");
}

TEST(GenSkeletal, ZeroCocycleIsStrict) {
  const auto c = gen_skeletal_cocycle(groups::cyclic(2), groups::cyclic(2), std::vector<Elem>(8, 0));
  EXPECT_TRUE(validate_catgroup(c).ok());
  for (Elem x = 0; x < 2; ++x)
    for (Elem y = 0; y < 2; ++y)
      for (Elem z = 0; z < 2; ++z) EXPECT_EQ(c.alpha(x, y, z), c.id(c.obj_add(c.obj_add(x, y), z)));
}

TEST(GenSkeletal, UnnormalizedRejected) {
  std::vector<Elem> omega(8, 0);
  omega[(1 * 2 + 1) * 2 + 0] = 1;
  try {
    gen_skeletal_cocycle(groups::cyclic(2), groups::cyclic(2), omega);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidCategoricalGroup);
  }
}

TEST(GenSkeletal, PentagonViolationHasQuadruple) {
  // Normalized over Z3 but not a cocycle.
  std::vector<Elem> omega(27, 0);
  omega[(1 * 3 + 1) * 3 + 1] = 1;
  ASSERT_FALSE(oracle::is_cocycle(3, 3, omega));
  const auto r = validate_catgroup(gen_skeletal_cocycle(groups::cyclic(3), groups::cyclic(3), omega));
  ASSERT_NE(r.first_failure(), nullptr);
  EXPECT_EQ(r.first_failure()->name, "pentagon");
  EXPECT_EQ(r.first_failure()->witness.rfind("x,y,z,w=(", 0), 0u);
}

namespace {

void expect_pentagon_iff_cocycle(unsigned g, unsigned a) {
  const auto G = groups::cyclic(g), A = groups::cyclic(a);
  std::size_t accepted = 0;
  const auto cochains = oracle::normalized_cochains(g, a);
  for (const auto& omega : cochains) {
    const bool valid = validate_catgroup(gen_skeletal_cocycle(G, A, omega), {1000, true}).ok();
    EXPECT_EQ(valid, oracle::is_cocycle(g, a, omega)) << "Z" << g << " in Z" << a;
    accepted += valid;
  }
  EXPECT_GT(accepted, 0u);
}

}  // namespace

TEST(GenSkeletal, PentagonIffCocycleZ2) {
  EXPECT_EQ(oracle::normalized_cochains(2, 2).size(), 2u);
  expect_pentagon_iff_cocycle(2, 2);
}

TEST(GenSkeletal, PentagonIffCocycleZ2InZ3) { expect_pentagon_iff_cocycle(2, 3); }

TEST(GenSkeletal, PentagonIffCocycleZ3InZ2) { expect_pentagon_iff_cocycle(3, 2); }

TEST(GenBrownSpencer, Z2InZ4) {
  const auto c = instances::bs_z2_z4();
  EXPECT_EQ(c.num_arrows(), 8u);
  EXPECT_EQ(c.num_objects(), 4u);
  EXPECT_TRUE(validate_catgroup(c).ok());
}

TEST(GenBrownSpencer, TrivialModuleIsDiscrete) {
  const auto g = groups::cyclic(3);
  const auto c = gen_brown_spencer(normal_subgroup_module(g, {"0"}));
  EXPECT_TRUE(validate_catgroup(c).ok());
  EXPECT_EQ(c.num_arrows(), 3u);
  const auto d = gen_discrete(g);
  for (Elem f = 0; f < c.num_arrows(); ++f) EXPECT_EQ(c.dom(f), c.cod(f));
  EXPECT_EQ(c.tables().obj_add, d.tables().obj_add);
}

TEST(GenBrownSpencer, AbelianToTrivialIsDelooping) {
  const auto a = groups::cyclic(3);
  const ClassicalCrossedModule x{a, groups::trivial(), {0, 0, 0}, {0, 1, 2}};
  const auto c = gen_brown_spencer(x);
  const auto b = gen_delooping(a);
  EXPECT_EQ(c.num_objects(), 1u);
  ASSERT_EQ(c.num_arrows(), b.num_arrows());
  // Arrow (t,0) plays the role of t.
  for (Elem f = 0; f < 3; ++f)
    for (Elem g = 0; g < 3; ++g) {
      EXPECT_EQ(c.arr_add(f, g), b.arr_add(f, g));
      EXPECT_EQ(c.comp(f, g), b.comp(f, g));
    }
}

TEST(GenBrownSpencer, InvalidModuleRejected) {
  const ClassicalCrossedModule bad{groups::cyclic(2), groups::cyclic(2), {0, 1}, {0, 1, 1, 1}};
  EXPECT_FALSE(validate_classical(bad).ok());
  try {
    gen_brown_spencer(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidModule);
  }
}

TEST(GenCodiscrete, X2TotValidates) {
  const auto c = gen_codiscrete(fixtures::x2tot());
  EXPECT_EQ(c.num_arrows(), 4u);
  EXPECT_TRUE(validate_catgroup(c).ok()) << validate_catgroup(c).summary();
}

TEST(GenProduct, ValidatesAndMultipliesSizes) {
  const auto c = gen_product(instances::bz2(), instances::dz2());
  EXPECT_EQ(c.num_objects(), 2u);
  EXPECT_EQ(c.num_arrows(), 4u);
  EXPECT_TRUE(validate_catgroup(c).ok());
}

TEST(Corpus, EveryInstanceValidates) {
  const auto corpus = default_corpus();
  EXPECT_GE(corpus.instances.size(), 4u);
  for (const auto& [name, c] : corpus.instances)
    EXPECT_TRUE(validate_catgroup(c, {100, false}).ok()) << name << validate_catgroup(c, {100, false}).summary();
}

TEST(Corpus, LookupByName) {
  const auto corpus = default_corpus();
  EXPECT_EQ(corpus.instance("bz2"), instances::bz2());
  EXPECT_THROW(corpus.instance("nope"), Error);
  EXPECT_THROW(corpus.functor("nope"), Error);
}
