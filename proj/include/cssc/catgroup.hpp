#pragma once

#include <string>
#include <vector>

#include "cssc/cgroup.hpp"
#include "cssc/crossmod.hpp"

namespace cssc {

/// Finite categorical group: a groupoid C₁ ⇉ C₀ with a monoidal structure,
/// associator/unitors, and object inverses witnessed by ε and δ.
class CatGroup {
 public:
  struct Tables {
    std::vector<std::string> objects;
    std::vector<std::string> arrows;
    std::vector<Elem> dom, cod;   // per arrow
    std::vector<Elem> id;         // per object
    std::vector<Elem> comp;       // comp[g * |C₁| + f] = g ∘ f, kNone unless cod f == dom g
    std::vector<Elem> obj_add;    // |C₀|²
    std::vector<Elem> arr_add;    // |C₁|²
    Elem zero = 0;
    std::vector<Elem> alpha;      // |C₀|³, α_{x,y,z}: (x+y)+z → x+(y+z)
    std::vector<Elem> lambda;     // λ_x: 0+x → x
    std::vector<Elem> rho;        // ρ_x: x+0 → x
    std::vector<Elem> neg_obj;
    std::vector<Elem> eps;        // ε_x: −x+x → 0
    std::vector<Elem> delta;      // δ_x: x+(−x) → 0
    std::vector<Elem> neg_arr;
  };

  /// Sorts both carriers by name and remaps every table. Throws MalformedTable
  /// when shapes are wrong, entries leave a carrier, or comp is defined
  /// exactly on the wrong pairs.
  explicit CatGroup(Tables tables);

  std::size_t num_objects() const noexcept { return impl_->objects.size(); }
  std::size_t num_arrows() const noexcept { return impl_->arrows.size(); }
  const Carrier& objects() const noexcept { return impl_->objects; }
  const Carrier& arrows() const noexcept { return impl_->arrows; }
  const std::string& object_name(Elem x) const { return impl_->objects.name(x); }
  const std::string& arrow_name(Elem f) const { return impl_->arrows.name(f); }
  const Tables& tables() const noexcept { return impl_->t; }

  Elem dom(Elem f) const { return impl_->t.dom[f]; }
  Elem cod(Elem f) const { return impl_->t.cod[f]; }
  Elem id(Elem x) const { return impl_->t.id[x]; }
  bool composable(Elem g, Elem f) const { return cod(f) == dom(g); }
  /// g ∘ f. Throws NotComposable.
  Elem comp(Elem g, Elem f) const;
  Elem obj_add(Elem x, Elem y) const { return impl_->t.obj_add[x * num_objects() + y]; }
  Elem arr_add(Elem f, Elem g) const { return impl_->t.arr_add[f * num_arrows() + g]; }
  Elem zero() const noexcept { return impl_->t.zero; }
  Elem alpha(Elem x, Elem y, Elem z) const {
    const auto n = num_objects();
    return impl_->t.alpha[(x * n + y) * n + z];
  }
  Elem lambda(Elem x) const { return impl_->t.lambda[x]; }
  Elem rho(Elem x) const { return impl_->t.rho[x]; }
  Elem neg_obj(Elem x) const { return impl_->t.neg_obj[x]; }
  Elem eps(Elem x) const { return impl_->t.eps[x]; }
  Elem delta(Elem x) const { return impl_->t.delta[x]; }
  Elem neg_arr(Elem f) const { return impl_->t.neg_arr[f]; }

  /// Two-sided comp-inverse, or kNone when f has none.
  Elem inverse(Elem f) const;
  /// Like inverse() but throws NotAGroupoid.
  Elem inv(Elem f) const;

  /// γ₀ = λ₀⁻¹ : 0 → 0+0.
  Elem gamma0() const { return inv(lambda(zero())); }
  /// γ_r = (1_r + λ_{−r}⁻¹) ∘ δ_r⁻¹ : 0 → r+(0+(−r)).
  Elem gamma(Elem r) const;
  /// ζ = λ_{−0} ∘ δ₀⁻¹ : 0 → −0.
  Elem zeta() const;

  /// Special isomorphisms: generated by identities and the components of
  /// α, λ, ρ, ε, δ, closed under inverse, ∘ and +. Computed once.
  const std::vector<bool>& special_isos() const;
  bool is_special_iso(Elem f) const { return special_isos()[f]; }
  /// Special isos in the order the closure discovered them.
  const std::vector<Elem>& special_order() const;
  /// First-discovered special iso x → y, or kNone.
  Elem chosen_special(Elem x, Elem y) const;

  bool operator==(const CatGroup& other) const;

 private:
  struct Impl {
    Carrier objects;
    Carrier arrows;
    Tables t;
  };
  struct Closure {
    std::vector<bool> member;
    std::vector<Elem> order;
    std::vector<Elem> chosen;  // |C₀|²
  };
  const Closure& closure() const;

  std::shared_ptr<const Impl> impl_;
  Lazy<std::vector<Elem>> inverses_;
  Lazy<Closure> closure_;
};

struct CatGroupOptions {
  /// Refuse α-naturality (cubic in |C₁|) beyond this many arrows.
  std::size_t max_arrows = 64;
  /// Return after the first failing check.
  bool stop_at_first = false;
};

/// Exhaustive check of every categorical-group axiom. Typing failures are
/// reported before anything else and end the run. Throws TooLarge.
ValidationReport validate_catgroup(const CatGroup& c, const CatGroupOptions& opts = {});

/// Worklist closure; identical to CatGroup::special_isos().
std::vector<bool> special_iso_closure(const CatGroup& c);

struct CoherenceSite {
  Elem from;
  Elem to;
  std::vector<Elem> isos;
};
/// Object pairs carrying more than one parallel special iso.
std::vector<CoherenceSite> coherence_diagnostic(const CatGroup& c);
/// All object pairs with at least one special iso, with their isos.
std::vector<CoherenceSite> special_iso_sites(const CatGroup& c);

/// C₀ with obj_add; x ∼ y iff some arrow x → y.
CGroup objects_cgroup(const CatGroup& c);
/// C₁ with arr_add; f ∼ g iff isomorphic in the arrow category.
CGroup arrows_cgroup(const CatGroup& c);
/// Arrows with domain 0, f +′ g = (f+g) ∘ γ₀, −′f = (−f) ∘ ζ.
CGroup arrows_star_zero(const CatGroup& c);
/// Arrows with domain isomorphic to 0, as a c-subgroup of arrows_cgroup.
CSubset ker_d0_subset(const CatGroup& c);
CGroup arrows_ker_d0(const CatGroup& c);
/// Arrows with codomain isomorphic to 0.
CSubset ker_d1_subset(const CatGroup& c);

/// Arrow index of each Star₀ element (Star₀ elements are named as arrows).
std::vector<Elem> star_zero_arrows(const CatGroup& c, const CGroup& star);

/// r · c = (i(r) + (c + (−i(r)))) ∘ γ_r on Star₀.
CAction star_action(const CatGroup& c);

/// (f, g) with special θ₀: dom f → dom g, θ₁: cod f → cod g and θ₁∘f = g∘θ₀.
PairSet weak_special_iso_pairs(const CatGroup& c);

/// f ∘ g against (f − i(d₀ f)) + g for composable pairs, up to weak special iso.
ValidationReport check_comp_via_add(const CatGroup& c);
/// f + g against g + f for f ∈ Ker d₁, g ∈ Ker d₀, up to weak special iso.
ValidationReport check_ker_commute(const CatGroup& c);

struct CatGroupFunctor {
  CatGroup source;
  CatGroup target;
  std::vector<Elem> f0;  // objects
  std::vector<Elem> f1;  // arrows
};

ValidationReport validate_functor(const CatGroupFunctor& t);
CatGroupFunctor identity_functor(const CatGroup& c);
/// second ∘ first. Throws SourceTargetMismatch.
CatGroupFunctor compose(const CatGroupFunctor& second, const CatGroupFunctor& first);
CatGroupFunctor functor_by_names(const CatGroup& source, const CatGroup& target,
                                 const std::vector<std::pair<std::string, std::string>>& objects,
                                 const std::vector<std::pair<std::string, std::string>>& arrows);

}  // namespace cssc
