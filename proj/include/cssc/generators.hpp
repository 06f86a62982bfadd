#pragma once

#include <vector>

#include "cssc/catgroup.hpp"

namespace cssc {

/// Ordinary crossed module of groups ∂: T → G with G acting on T.
struct ClassicalCrossedModule {
  GroupTable t;
  GroupTable g;
  std::vector<Elem> boundary;  // T → G
  std::vector<Elem> act;       // act[g * |T| + t] = g · t
};

/// Homomorphism, action by automorphisms, equivariance, Peiffer identity.
ValidationReport validate_classical(const ClassicalCrossedModule& x);

/// Objects G, only identity arrows "1_g".
CatGroup gen_discrete(const GroupTable& g);
/// One object "*", arrows A, comp = add = the group operation. Commutativity
/// of A is not checked here; the validator reports interchange failures.
CatGroup gen_delooping(const GroupTable& a);
/// Objects G, arrows "(x,a)" endo on x, associator ω(x,y,z) at x+y+z.
/// omega[(x * |G| + y) * |G| + z] indexes A. Throws InvalidCategoricalGroup
/// unless ω is normalized; the pentagon then holds iff ω is a 3-cocycle.
CatGroup gen_skeletal_cocycle(const GroupTable& g, const GroupTable& a, const std::vector<Elem>& omega);
/// Strict categorical group with arrows "(t,g)": g → ∂t·g. Throws InvalidModule.
CatGroup gen_brown_spencer(const ClassicalCrossedModule& x);
/// Objects the carrier of x, exactly one arrow "x>y" between any two objects.
CatGroup gen_codiscrete(const CGroup& x);
/// Componentwise product with objects "(x,y)" and arrows "(f,g)".
CatGroup gen_product(const CatGroup& a, const CatGroup& b);

/// Inclusion N ↪ G of a normal subgroup given by member names; G acts by conjugation.
ClassicalCrossedModule normal_subgroup_module(const GroupTable& g, const std::vector<std::string>& members);

}  // namespace cssc
