#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "cssc/catgroup.hpp"
#include "cssc/crossmod.hpp"

namespace cssc {

/// Arrow dom → cod of 𝕋(x) carried by c, the least member of its
/// weak-special class. Legs are absorbed: the arrow is ∂c + dom → cod.
struct GArrow {
  Elem dom = 0;
  Elem cod = 0;
  Elem c = 0;

  auto operator<=>(const GArrow&) const = default;
};

/// Least member of each weak-special class, per element of M.
std::vector<Elem> weak_special_reps(const CCrossedModule& x);

/// Re-bases (r, c) along the special leg r_dom → alpha_cod (alpha_cod must be
/// r) and the special leg ∂c + r → beta_cod. Throws NotSpecialLeg.
GArrow canonicalize(const CCrossedModule& x, Elem r_dom, Elem alpha_cod, Elem r, Elem c, Elem beta_cod);

GArrow t_compose(const CCrossedModule& x, const GArrow& g2, const GArrow& g1);
GArrow t_identity(const CCrossedModule& x, Elem r);
GArrow t_inverse(const CCrossedModule& x, const GArrow& g);
GArrow t_add(const CCrossedModule& x, const GArrow& g1, const GArrow& g2);
GArrow t_opposite(const CCrossedModule& x, const GArrow& g);
/// The arrow r → r′ lifting 0 over r′ − r. Throws NotSpecialPair.
GArrow t_special_iso(const CCrossedModule& x, Elem r, Elem r_prime);

/// Name of a GArrow inside 𝕋(x): "[dom|c|cod]".
std::string garrow_name(const CCrossedModule& x, const GArrow& g);

struct TCatGroup {
  CCrossedModule module;
  CatGroup cat;
  std::vector<GArrow> arrows;  // indexed like cat's arrows
  std::map<GArrow, Elem> lookup;

  /// Throws ElementOutsideParent when g is not an arrow of 𝕋(x).
  Elem index(const GArrow& g) const;
};

inline constexpr std::size_t kDefaultMaxTArrows = 10000;

/// Throws NotCssc, or TooLarge beyond max_arrows.
TCatGroup T0(const CCrossedModule& x, std::size_t max_arrows = kDefaultMaxTArrows);
CCrossedModule L0(const CatGroup& c);
CrossedModuleMorphism L1(const CatGroupFunctor& t);
/// Both ends must be cssc.
CatGroupFunctor T1(const CrossedModuleMorphism& m);
CatGroupFunctor T1(const CrossedModuleMorphism& m, const TCatGroup& source, const TCatGroup& target);

}  // namespace cssc
