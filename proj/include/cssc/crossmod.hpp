#pragma once

#include <vector>

#include "cssc/cgroup.hpp"

namespace cssc {

class CatGroup;

/// Checks the four action axioms (distributivity, compatibility with the
/// actor's sum, unit, congruence) exhaustively.
ValidationReport validate_action(const CAction& act);

/// c-crossed module ∂: M → N with an action of N on M and an explicit
/// weak-special subrelation on M.
struct CCrossedModule {
  CGroup source;                // M
  CGroup target;                // N
  std::vector<Elem> boundary;   // ∂ : M → N
  CAction action;               // N acting on M
  PairSet weak_special;         // over M

  Elem d(Elem c) const { return boundary[c]; }
  Elem act(Elem r, Elem c) const { return action(r, c); }
  CGroupMorphism boundary_morphism() const { return {source, target, boundary}; }
  bool weakly_special(Elem c, Elem c2) const { return weak_special.contains(c, c2); }
};

/// Shape-checks the pieces and assembles a module. Throws MalformedTable.
CCrossedModule make_crossed_module(CGroup source, CGroup target, std::vector<Elem> boundary,
                                   std::vector<Elem> dot, PairSet weak_special);

ValidationReport validate_crossed_module(const CCrossedModule& x);

/// Pairs c ∼ c' whose boundaries form a special congruence in N; kept as a
/// diagnostic next to the explicit weak-special data.
PairSet relational_weak_special(const CCrossedModule& x);

bool is_strict(const CCrossedModule& x);
bool is_special(const CCrossedModule& x);
bool is_cssc(const CCrossedModule& x);

/// All c' with ∂c' = r that are weakly special congruent to c.
std::vector<Elem> lift_candidates(const CCrossedModule& x, Elem c, Elem r);

/// The unique weak-special partner of c over r. Requires (∂c, r) special in N.
/// Throws NotSpecialPair, NoLift or NonUniqueLift (listing all candidates).
Elem special_lift(const CCrossedModule& x, Elem c, Elem r);

struct CrossedModuleMorphism {
  CCrossedModule source;
  CCrossedModule target;
  std::vector<Elem> on_source;  // f : M → M'
  std::vector<Elem> on_target;  // g : N → N'
};

ValidationReport validate_cm_morphism(const CrossedModuleMorphism& m);
CrossedModuleMorphism identity_cm_morphism(const CCrossedModule& x);
/// second ∘ first.
CrossedModuleMorphism compose(const CrossedModuleMorphism& second, const CrossedModuleMorphism& first);
/// Table equality of the two component maps (ends compared structurally).
bool same_morphism(const CrossedModuleMorphism& a, const CrossedModuleMorphism& b);

/// Inclusion of a perfect normal c-subgroup. The action sends (g, h) to the
/// least member of h's carrier congruent to g + (h − g). Throws NotPerfectOrNormal.
CCrossedModule inclusion_crossed_module(const CSubset& h);

/// Split extension Ker d0 → C1 ⇄ C0 of a categorical group with the
/// conjugation action r·c = i(r) + (c − i(r)).
struct KernelExtension {
  CGroup arrows;      // C1 as a c-group
  CGroup objects;     // C0 as a c-group
  CGroup ker_d0;      // arrows with domain ∼ 0
  CGroupMorphism j;   // Ker d0 → C1
  CGroupMorphism d0;  // C1 → C0
  CGroupMorphism i;   // C0 → C1
  CAction action;     // C0 on Ker d0
  CCrossedModule module;  // (Ker d0, C0, d1|)
};
KernelExtension kernel_extension(const CatGroup& c);

}  // namespace cssc
