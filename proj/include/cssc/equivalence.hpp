#pragma once

#include <string>
#include <vector>

#include "cssc/corpus.hpp"
#include "cssc/functors.hpp"

namespace cssc {

/// P: C → 𝕋𝕃(C), P₁(f) = [(f + (−i(d₀f))) ∘ δ⁻¹] from d₀f to d₁f.
CatGroupFunctor build_P(const CatGroup& c, const TCatGroup& tl);
/// F: 𝕋𝕃(C) → C, F₁[r|c|r″] = σ ∘ (c + i(r)) ∘ λ_r⁻¹ with σ the chosen
/// special iso ∂c + r → r″. Throws NotSpecialPair if no special iso exists.
CatGroupFunctor build_F(const CatGroup& c, const TCatGroup& tl);

/// φ: x → 𝕃𝕋(x), φ₁(c) = [0|c|∂c].
CrossedModuleMorphism build_phi(const CCrossedModule& x, const TCatGroup& tx, const CCrossedModule& ltx);
/// ψ: 𝕃𝕋(x) → x, ψ₁[0|c|t] = the weak-special lift of c over t.
CrossedModuleMorphism build_psi(const CCrossedModule& x, const TCatGroup& tx, const CCrossedModule& ltx);

/// F∘P = 1 and P∘F = 1 exactly, plus functor validation of P and F.
ValidationReport verify_TL(const CatGroup& c, std::string name = {});
/// P_{c′} ∘ t = 𝕋𝕃(t) ∘ P_c.
ValidationReport verify_TL_naturality(const CatGroupFunctor& t, std::string name = {});
/// ψ∘φ = 1 and φ∘ψ = 1 exactly, plus morphism validation of φ and ψ.
ValidationReport verify_LT(const CCrossedModule& x, std::string name = {});
/// φ_{x′} ∘ m = 𝕃𝕋(m) ∘ φ_x.
ValidationReport verify_LT_naturality(const CrossedModuleMorphism& m, std::string name = {});

/// 𝕃 and 𝕋 on identities and on g∘f.
ValidationReport verify_L_functoriality(const CatGroupFunctor& g, const CatGroupFunctor& f, std::string name = {});
ValidationReport verify_T_functoriality(const CrossedModuleMorphism& g, const CrossedModuleMorphism& f,
                                        std::string name = {});

struct EquivalenceSummary {
  std::vector<ValidationReport> reports;  // sorted by subject

  bool ok() const;
  std::size_t failures() const;
};

/// Validates every instance, then runs both round trips, both naturality
/// suites and the functoriality laws over all composable corpus pairs.
/// Instances failing validation are reported and excluded.
EquivalenceSummary verify_equivalence(const Corpus& corpus, unsigned jobs = 1);

}  // namespace cssc
