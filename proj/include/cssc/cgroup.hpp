#pragma once

#include <string>
#include <vector>

#include "cssc/common.hpp"

namespace cssc {

/// An honest finite group given by its multiplication table; the input to `from_group`.
struct GroupTable {
  std::vector<std::string> elements;
  std::vector<Elem> op;  // op[a * n + b] = a * b, indices into `elements`

  std::size_t size() const noexcept { return elements.size(); }
  Elem mul(Elem a, Elem b) const { return op[a * elements.size() + b]; }
};

namespace groups {
GroupTable cyclic(unsigned n);
GroupTable trivial();
/// Permutations of {1,2,3} in one-line notation; identity is "123".
GroupTable symmetric3();
}  // namespace groups

/// Group up to congruence: a carrier with an addition that satisfies the group
/// axioms modulo an equivalence relation `rel`.
class CGroup {
 public:
  struct Tables {
    std::vector<std::string> elements;
    std::vector<Elem> add;    // add[a * n + b]
    Elem zero = 0;
    std::vector<Elem> neg;
    std::vector<Elem> block;  // block label per element
  };

  /// Sorts the carrier by name and remaps all tables. Throws MalformedTable on
  /// shape errors or entries leaving the carrier.
  explicit CGroup(Tables tables);

  std::size_t size() const noexcept { return impl_->carrier.size(); }
  const Carrier& carrier() const noexcept { return impl_->carrier; }
  const std::string& name(Elem e) const { return impl_->carrier.name(e); }
  Elem index(std::string_view n) const { return impl_->carrier.index(n); }

  Elem add(Elem a, Elem b) const { return impl_->add[a * size() + b]; }
  Elem zero() const noexcept { return impl_->zero; }
  Elem neg(Elem a) const { return impl_->neg[a]; }
  /// a + (-b)
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  const Partition& rel() const noexcept { return impl_->rel; }
  bool related(Elem a, Elem b) const { return impl_->rel.related(a, b); }

  /// Least relation generated by the axiom instances, closed under symmetry,
  /// composition and sums. Computed once on first use.
  const PairSet& special() const;
  bool special_pair(Elem a, Elem b) const { return special().contains(a, b); }

  bool operator==(const CGroup& other) const;

 private:
  struct Impl {
    Carrier carrier;
    std::vector<Elem> add;
    Elem zero = 0;
    std::vector<Elem> neg;
    Partition rel;
  };
  std::shared_ptr<const Impl> impl_;
  Lazy<PairSet> special_;
};

ValidationReport validate_cgroup(const CGroup& g);

/// Worklist fixpoint of the special-congruence generators; see CGroup::special.
PairSet special_closure(const CGroup& g);

bool is_connected(const CGroup& g);

/// Strict group viewed as a c-group with the equality relation. Throws NotAGroup.
CGroup from_group(const GroupTable& table);

struct CGroupMorphism {
  CGroup source;
  CGroup target;
  std::vector<Elem> map;

  Elem operator()(Elem a) const { return map[a]; }
};

CGroupMorphism identity_morphism(const CGroup& g);
/// second ∘ first; throws SourceTargetMismatch unless first.target == second.source.
CGroupMorphism compose(const CGroupMorphism& second, const CGroupMorphism& first);
/// Builds a morphism from a name-level map.
CGroupMorphism morphism_by_names(const CGroup& source, const CGroup& target,
                                 const std::vector<std::pair<std::string, std::string>>& pairs);

ValidationReport validate_morphism(const CGroupMorphism& m);

struct CSubset {
  CGroup parent;
  std::vector<Elem> members;  // sorted, unique

  bool contains(Elem e) const;
};

CSubset make_subset(const CGroup& parent, std::vector<Elem> members);

CSubset c_kernel(const CGroupMorphism& m);
CSubset c_image(const CGroupMorphism& m);

/// a ∈̃ h: some member of h is congruent to a.
bool inc(Elem a, const CSubset& h);
/// Every member of h is ∈̃ h2. Both must share a parent.
bool incs(const CSubset& h, const CSubset& h2);
bool is_normal(const CSubset& h);
bool is_perfect(const CSubset& h);

/// The subset as a c-group with the induced operation and relation.
/// Throws NotASubgroup when the members are not closed under the operations.
CGroup induced_cgroup(const CSubset& h);

/// The canonical inclusion of a c-subgroup into its parent.
CGroupMorphism subset_inclusion(const CSubset& h);

/// Action of `actor` on `acted`: dot[b * |acted| + a] = b · a.
struct CAction {
  CGroup actor;
  CGroup acted;
  std::vector<Elem> dot;

  Elem operator()(Elem b, Elem a) const { return dot[b * acted.size() + a]; }
};

CAction trivial_action(const CGroup& actor, const CGroup& acted);

struct SemidirectProduct {
  CGroup group;                // elements "(b,a)"
  CGroupMorphism projection;   // (b,a) ↦ b
  CGroupMorphism inclusion;    // a ↦ (0,a)
  std::vector<Elem> pair_index;  // pair_index[b * |A| + a] = element (b,a)
};

/// B ⋉ A with (b',a') + (b,a) = (b'+b, a' + b'·a). Throws InvalidAction.
SemidirectProduct semidirect_product(const CGroup& b, const CGroup& a, const CAction& act);

/// f' ∘ f ∼ 1 and f ∘ f' ∼ 1 pointwise.
bool is_c_isomorphism(const CGroupMorphism& f, const CGroupMorphism& f_prime);

/// C-group on X whose relation is the fibres of a surjection q: X → Q.
/// `choice[x * |X| + y]` must lie in the fibre over q(x) + q(y).
struct SurjectionData {
  std::vector<std::string> elements;
  std::vector<Elem> q;        // X → Q
  std::vector<Elem> section;  // Q → X with q(section(t)) = t
  std::vector<Elem> choice;   // X × X → X
};
CGroup lift_from_surjection(const SurjectionData& data, const CGroup& quotient);

}  // namespace cssc
