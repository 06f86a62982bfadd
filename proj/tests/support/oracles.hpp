#pragma once

#include <functional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cssc/catgroup.hpp"
#include "cssc/functors.hpp"

// Reference implementations kept deliberately naive and separate from the library.
namespace oracle {

using Pairs = std::set<std::pair<cssc::Elem, cssc::Elem>>;

/// Reflexive pairs and axiom instances, closed under symmetry, transitivity
/// and sums by repeated full passes until nothing changes.
Pairs special_closure(const cssc::CGroup& g);
Pairs as_set(const cssc::PairSet& p);

/// Identities and α, λ, ρ, ε, δ, closed under inverse, ∘ and + by full passes.
std::set<cssc::Elem> special_iso_closure(const cssc::CatGroup& c);

/// ω(y,z,w) − ω(x+y,z,w) + ω(x,y+z,w) − ω(x,y,z+w) + ω(x,y,z) = 0 over Z_g with
/// values in Z_a (trivial action); omega indexed (x*g + y)*g + z.
bool is_cocycle(unsigned g, unsigned a, const std::vector<cssc::Elem>& omega);
/// Every ω: Z_g³ → Z_a vanishing whenever an argument is 0.
std::vector<std::vector<cssc::Elem>> normalized_cochains(unsigned g, unsigned a);

/// A formal arrow β(r, c)α: dom → r along α, ∂c + r → cod along β.
struct Rep {
  cssc::Elem dom, r, c, cod;
};
/// All representations of g: any r specially congruent to its domain and any
/// weak-special partner of its label whose legs are special.
std::vector<Rep> representations(const cssc::CCrossedModule& x, const cssc::GArrow& g);
cssc::GArrow canonical(const cssc::CCrossedModule& x, const Rep& p);
/// Composite, sum, inverse and opposite computed on representatives.
Rep compose(const cssc::CCrossedModule& x, const Rep& p2, const Rep& p1);
Rep add(const cssc::CCrossedModule& x, const Rep& p1, const Rep& p2);
Rep inverse(const cssc::CCrossedModule& x, const Rep& p);
Rep opposite(const cssc::CCrossedModule& x, const Rep& p);

struct Mutant {
  std::string cell;
  cssc::CatGroup::Tables tables;
};
/// Every change of a single table cell to another in-range value.
std::vector<Mutant> single_cell_mutants(const cssc::CatGroup& c);

/// Random c-group on n elements as a fibred lift of Z_q (n a multiple of q).
cssc::CGroup random_lift(std::mt19937& rng, unsigned q, unsigned fibre);

}  // namespace oracle
