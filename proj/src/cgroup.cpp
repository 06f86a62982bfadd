#include "cssc/cgroup.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <sstream>

#include "cssc/crossmod.hpp"

namespace cssc {

namespace groups {

GroupTable cyclic(unsigned n) {
  GroupTable t;
  for (unsigned i = 0; i < n; ++i) t.elements.push_back(std::to_string(i));
  t.op.resize(n * n);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) t.op[a * n + b] = (a + b) % n;
  return t;
}

GroupTable trivial() { return cyclic(1); }

GroupTable symmetric3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{1, 2, 3};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  GroupTable t;
  for (const auto& q : perms)
    t.elements.push_back(std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]));
  const auto n = perms.size();
  t.op.resize(n * n);
  // (a * b)(i) = a(b(i)): apply b first.
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i] - 1];
      t.op[a * n + b] = static_cast<Elem>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return t;
}

}  // namespace groups

CGroup::CGroup(Tables t) {
  const auto n = t.elements.size();
  if (t.add.size() != n * n || t.neg.size() != n || t.block.size() != n)
    throw Error(ErrorCode::MalformedTable, "c-group table sizes do not match carrier");
  auto in_range = [n](Elem e) { return e < n; };
  if (!std::all_of(t.add.begin(), t.add.end(), in_range) || !std::all_of(t.neg.begin(), t.neg.end(), in_range) ||
      !in_range(t.zero))
    throw Error(ErrorCode::MalformedTable, "c-group table entry leaves the carrier");

  const auto perm = sort_permutation(t.elements);
  auto impl = std::make_shared<Impl>();
  impl->carrier = Carrier(permute_positions(t.elements, perm));
  impl->add.resize(n * n);
  impl->neg.resize(n);
  std::vector<Elem> labels(n);
  for (Elem a = 0; a < n; ++a) {
    impl->neg[perm[a]] = perm[t.neg[a]];
    labels[perm[a]] = t.block[a];
    for (Elem b = 0; b < n; ++b) impl->add[perm[a] * n + perm[b]] = perm[t.add[a * n + b]];
  }
  impl->zero = perm[t.zero];
  impl->rel = Partition::from_labels(labels);
  impl_ = std::move(impl);
}

const PairSet& CGroup::special() const {
  return special_.get([this] { return special_closure(*this); });
}

bool CGroup::operator==(const CGroup& other) const {
  if (impl_ == other.impl_) return true;
  return impl_->carrier == other.impl_->carrier && impl_->add == other.impl_->add &&
         impl_->zero == other.impl_->zero && impl_->neg == other.impl_->neg && impl_->rel == other.impl_->rel;
}

namespace {

std::string names(const CGroup& g, std::initializer_list<Elem> es) {
  std::string out = "(";
  bool first = true;
  for (Elem e : es) {
    if (!first) out += ",";
    out += g.name(e);
    first = false;
  }
  return out + ")";
}

}  // namespace

ValidationReport validate_cgroup(const CGroup& g) {
  ValidationReport r;
  r.subject = "c-group";
  const auto n = static_cast<Elem>(g.size());

  std::string witness;
  for (Elem a = 0; a < n && witness.empty(); ++a)
    for (Elem a1 = 0; a1 < n && witness.empty(); ++a1) {
      if (!g.related(a, a1)) continue;
      for (Elem b = 0; b < n && witness.empty(); ++b)
        for (Elem b1 = 0; b1 < n; ++b1)
          if (g.related(b, b1) && !g.related(g.add(a, b), g.add(a1, b1))) {
            witness = "a,a1,b,b1=" + names(g, {a, a1, b, b1});
            break;
          }
    }
  r.record("congruence-compatibility", witness.empty(), witness);

  witness.clear();
  for (Elem a = 0; a < n && witness.empty(); ++a)
    for (Elem b = 0; b < n && witness.empty(); ++b)
      for (Elem c = 0; c < n; ++c)
        if (!g.related(g.add(a, g.add(b, c)), g.add(g.add(a, b), c))) {
          witness = "a,b,c=" + names(g, {a, b, c});
          break;
        }
  r.record("associativity-up-to-rel", witness.empty(), witness);

  witness.clear();
  for (Elem a = 0; a < n; ++a)
    if (!g.related(g.add(a, g.zero()), a) || !g.related(g.add(g.zero(), a), a)) {
      witness = "a=" + g.name(a);
      break;
    }
  r.record("unit-up-to-rel", witness.empty(), witness);

  witness.clear();
  for (Elem a = 0; a < n; ++a)
    if (!g.related(g.add(a, g.neg(a)), g.zero()) || !g.related(g.add(g.neg(a), a), g.zero())) {
      witness = "a=" + g.name(a);
      break;
    }
  r.record("inverses-up-to-rel", witness.empty(), witness);
  return r;
}

PairSet special_closure(const CGroup& g) {
  const auto n = static_cast<Elem>(g.size());
  PairSet s(n);
  std::deque<std::pair<Elem, Elem>> work;
  auto push = [&](Elem a, Elem b) {
    if (s.insert(a, b)) work.emplace_back(a, b);
  };
  for (Elem a = 0; a < n; ++a) {
    push(a, a);
    push(g.add(a, g.zero()), a);
    push(g.add(g.zero(), a), a);
    push(g.add(a, g.neg(a)), g.zero());
    push(g.add(g.neg(a), a), g.zero());
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) push(g.add(a, g.add(b, c)), g.add(g.add(a, b), c));
  }

  std::vector<std::pair<Elem, Elem>> known;
  while (!work.empty()) {
    const auto [a, b] = work.front();
    work.pop_front();
    push(b, a);
    known.emplace_back(a, b);
    for (std::size_t i = 0; i < known.size(); ++i) {
      const auto [c, d] = known[i];
      if (b == c) push(a, d);
      if (d == a) push(c, b);
      push(g.add(a, c), g.add(b, d));
      push(g.add(c, a), g.add(d, b));
    }
  }
  return s;
}

bool is_connected(const CGroup& g) { return g.rel().block_count() == 1; }

CGroup from_group(const GroupTable& table) {
  const auto n = static_cast<Elem>(table.size());
  if (n == 0 || table.op.size() != std::size_t(n) * n)
    throw Error(ErrorCode::NotAGroup, "group table has wrong shape");
  for (Elem v : table.op)
    if (v >= n) throw Error(ErrorCode::NotAGroup, "group table entry leaves the carrier");
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (table.mul(a, table.mul(b, c)) != table.mul(table.mul(a, b), c))
          throw Error(ErrorCode::NotAGroup, "not associative at (" + table.elements[a] + "," + table.elements[b] +
                                                "," + table.elements[c] + ")");
  Elem zero = kNone;
  for (Elem e = 0; e < n && zero == kNone; ++e) {
    bool unit = true;
    for (Elem a = 0; a < n; ++a) unit = unit && table.mul(e, a) == a && table.mul(a, e) == a;
    if (unit) zero = e;
  }
  if (zero == kNone) throw Error(ErrorCode::NotAGroup, "no identity element");
  std::vector<Elem> neg(n, kNone);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b)
      if (table.mul(a, b) == zero && table.mul(b, a) == zero) neg[a] = b;
    if (neg[a] == kNone) throw Error(ErrorCode::NotAGroup, "no inverse for " + table.elements[a]);
  }
  std::vector<Elem> block(n);
  for (Elem a = 0; a < n; ++a) block[a] = a;
  return CGroup({table.elements, table.op, zero, neg, block});
}

CGroupMorphism identity_morphism(const CGroup& g) {
  std::vector<Elem> map(g.size());
  for (Elem a = 0; a < g.size(); ++a) map[a] = a;
  return {g, g, std::move(map)};
}

CGroupMorphism compose(const CGroupMorphism& second, const CGroupMorphism& first) {
  if (!(first.target == second.source))
    throw Error(ErrorCode::SourceTargetMismatch, "composing c-group morphisms with mismatched ends");
  std::vector<Elem> map(first.source.size());
  for (Elem a = 0; a < map.size(); ++a) map[a] = second(first(a));
  return {first.source, second.target, std::move(map)};
}

CGroupMorphism morphism_by_names(const CGroup& source, const CGroup& target,
                                 const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<Elem> map(source.size(), kNone);
  for (const auto& [from, to] : pairs) map[source.index(from)] = target.index(to);
  for (Elem a = 0; a < map.size(); ++a)
    if (map[a] == kNone) throw Error(ErrorCode::MalformedTable, "morphism undefined at " + source.name(a));
  return {source, target, std::move(map)};
}

ValidationReport validate_morphism(const CGroupMorphism& m) {
  ValidationReport r;
  r.subject = "c-group morphism";
  const auto n = static_cast<Elem>(m.source.size());
  if (m.map.size() != n) throw Error(ErrorCode::MalformedTable, "morphism table size mismatch");
  for (Elem v : m.map)
    if (v >= m.target.size()) throw Error(ErrorCode::MalformedTable, "morphism entry leaves the target");

  std::string witness;
  for (Elem a = 0; a < n && witness.empty(); ++a)
    for (Elem b = 0; b < n; ++b)
      if (m(m.source.add(a, b)) != m.target.add(m(a), m(b))) {
        witness = "a,b=" + names(m.source, {a, b});
        break;
      }
  r.record("additive", witness.empty(), witness);

  witness.clear();
  for (Elem a = 0; a < n && witness.empty(); ++a)
    for (Elem b = 0; b < n; ++b)
      if (m.source.related(a, b) && !m.target.related(m(a), m(b))) {
        witness = "a,b=" + names(m.source, {a, b});
        break;
      }
  r.record("preserves-rel", witness.empty(), witness);

  witness.clear();
  if (r.ok()) {
    for (const auto& [a, b] : m.source.special().pairs())
      if (!m.target.special_pair(m(a), m(b))) {
        witness = "a,b=" + names(m.source, {a, b});
        break;
      }
    r.record("preserves-special", witness.empty(), witness);
  }
  return r;
}

bool CSubset::contains(Elem e) const { return std::binary_search(members.begin(), members.end(), e); }

CSubset make_subset(const CGroup& parent, std::vector<Elem> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (Elem e : members)
    if (e >= parent.size()) throw Error(ErrorCode::ElementOutsideParent, "subset member outside carrier");
  return {parent, std::move(members)};
}

CSubset c_kernel(const CGroupMorphism& m) {
  std::vector<Elem> members;
  for (Elem a = 0; a < m.source.size(); ++a)
    if (m.target.related(m(a), m.target.zero())) members.push_back(a);
  return make_subset(m.source, std::move(members));
}

CSubset c_image(const CGroupMorphism& m) {
  std::vector<Elem> members;
  for (Elem b = 0; b < m.target.size(); ++b)
    for (Elem a = 0; a < m.source.size(); ++a)
      if (m.target.related(m(a), b)) {
        members.push_back(b);
        break;
      }
  return make_subset(m.target, std::move(members));
}

bool inc(Elem a, const CSubset& h) {
  if (a >= h.parent.size()) throw Error(ErrorCode::ElementOutsideParent, "element outside parent");
  return std::any_of(h.members.begin(), h.members.end(), [&](Elem b) { return h.parent.related(a, b); });
}

bool incs(const CSubset& h, const CSubset& h2) {
  if (!(h.parent == h2.parent)) throw Error(ErrorCode::ElementOutsideParent, "subsets of different c-groups");
  return std::all_of(h.members.begin(), h.members.end(), [&](Elem a) { return inc(a, h2); });
}

bool is_normal(const CSubset& h) {
  const auto& g = h.parent;
  for (Elem x = 0; x < g.size(); ++x)
    for (Elem m : h.members)
      if (!inc(g.add(x, g.sub(m, x)), h)) return false;
  return true;
}

bool is_perfect(const CSubset& h) {
  for (Elem x = 0; x < h.parent.size(); ++x)
    if (inc(x, h) && !h.contains(x)) return false;
  return true;
}

CGroup induced_cgroup(const CSubset& h) {
  const auto& g = h.parent;
  if (h.members.empty() || !h.contains(g.zero()))
    throw Error(ErrorCode::NotASubgroup, "subset does not contain zero");
  const auto k = h.members.size();
  std::vector<Elem> local(g.size(), kNone);
  for (Elem i = 0; i < k; ++i) local[h.members[i]] = i;
  CGroup::Tables t;
  t.add.resize(k * k);
  for (Elem i = 0; i < k; ++i) {
    const Elem a = h.members[i];
    t.elements.push_back(g.name(a));
    if (local[g.neg(a)] == kNone) throw Error(ErrorCode::NotASubgroup, "not closed under negation at " + g.name(a));
    t.neg.push_back(local[g.neg(a)]);
    t.block.push_back(g.rel().rep(a));
    for (Elem j = 0; j < k; ++j) {
      const Elem s = g.add(a, h.members[j]);
      if (local[s] == kNone)
        throw Error(ErrorCode::NotASubgroup, "not closed under addition at (" + g.name(a) + "," +
                                                 g.name(h.members[j]) + ")");
      t.add[i * k + j] = local[s];
    }
  }
  t.zero = local[g.zero()];
  return CGroup(std::move(t));
}

CGroupMorphism subset_inclusion(const CSubset& h) {
  CGroup sub = induced_cgroup(h);
  std::vector<Elem> map(sub.size());
  for (Elem i = 0; i < sub.size(); ++i) map[i] = h.parent.index(sub.name(i));
  return {std::move(sub), h.parent, std::move(map)};
}

CAction trivial_action(const CGroup& actor, const CGroup& acted) {
  std::vector<Elem> dot(actor.size() * acted.size());
  for (Elem b = 0; b < actor.size(); ++b)
    for (Elem a = 0; a < acted.size(); ++a) dot[b * acted.size() + a] = a;
  return {actor, acted, std::move(dot)};
}

SemidirectProduct semidirect_product(const CGroup& b, const CGroup& a, const CAction& act) {
  if (!(act.actor == b) || !(act.acted == a))
    throw Error(ErrorCode::InvalidAction, "action does not match the factors");
  const auto report = validate_action(act);
  if (!report.ok()) throw Error(ErrorCode::InvalidAction, report.first_failure()->name + " " +
                                                              report.first_failure()->witness);
  const auto nb = b.size(), na = a.size(), n = nb * na;
  auto at = [na](Elem x, Elem y) { return static_cast<Elem>(x * na + y); };
  CGroup::Tables t;
  t.add.resize(n * n);
  t.neg.resize(n);
  t.block.resize(n);
  for (Elem x = 0; x < nb; ++x)
    for (Elem y = 0; y < na; ++y) {
      t.elements.push_back("(" + b.name(x) + "," + a.name(y) + ")");
      t.neg[at(x, y)] = at(b.neg(x), act(b.neg(x), a.neg(y)));
      t.block[at(x, y)] = static_cast<Elem>(b.rel().rep(x) * na + a.rel().rep(y));
      for (Elem x2 = 0; x2 < nb; ++x2)
        for (Elem y2 = 0; y2 < na; ++y2)
          t.add[at(x, y) * n + at(x2, y2)] = at(b.add(x, x2), a.add(y, act(x, y2)));
    }
  t.zero = at(b.zero(), a.zero());
  const auto names = t.elements;
  CGroup g(std::move(t));

  std::vector<Elem> pair_index(n);
  for (Elem i = 0; i < n; ++i) pair_index[i] = g.index(names[i]);
  std::vector<Elem> proj(n), incl(na);
  for (Elem x = 0; x < nb; ++x)
    for (Elem y = 0; y < na; ++y) proj[pair_index[at(x, y)]] = x;
  for (Elem y = 0; y < na; ++y) incl[y] = pair_index[at(b.zero(), y)];
  return {g, {g, b, std::move(proj)}, {a, g, std::move(incl)}, std::move(pair_index)};
}

bool is_c_isomorphism(const CGroupMorphism& f, const CGroupMorphism& f_prime) {
  if (!(f.target == f_prime.source) || !(f_prime.target == f.source))
    throw Error(ErrorCode::SourceTargetMismatch, "c-isomorphism candidates are not opposite");
  for (Elem x = 0; x < f.source.size(); ++x)
    if (!f.source.related(f_prime(f(x)), x)) return false;
  for (Elem y = 0; y < f.target.size(); ++y)
    if (!f.target.related(f(f_prime(y)), y)) return false;
  return true;
}

CGroup lift_from_surjection(const SurjectionData& d, const CGroup& quotient) {
  const auto n = static_cast<Elem>(d.elements.size());
  if (d.q.size() != n || d.choice.size() != std::size_t(n) * n || d.section.size() != quotient.size())
    throw Error(ErrorCode::MalformedTable, "surjection data has wrong shape");
  std::vector<bool> hit(quotient.size(), false);
  for (Elem x = 0; x < n; ++x) {
    if (d.q[x] >= quotient.size()) throw Error(ErrorCode::MalformedTable, "q leaves the quotient");
    hit[d.q[x]] = true;
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end())
    throw Error(ErrorCode::MalformedTable, "q is not surjective");
  for (Elem t = 0; t < quotient.size(); ++t)
    if (d.section[t] >= n || d.q[d.section[t]] != t)
      throw Error(ErrorCode::MalformedTable, "section is not a section of q");
  CGroup::Tables t;
  t.elements = d.elements;
  t.add = d.choice;
  t.block = d.q;
  t.zero = d.section[quotient.zero()];
  for (Elem x = 0; x < n; ++x) t.neg.push_back(d.section[quotient.neg(d.q[x])]);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem c = d.choice[x * n + y];
      if (c >= n || d.q[c] != quotient.add(d.q[x], d.q[y]))
        throw Error(ErrorCode::ChoiceOutsideFiber,
                    "choice for (" + d.elements[x] + "," + d.elements[y] + ") is outside the fibre");
    }
  return CGroup(std::move(t));
}

}  // namespace cssc
