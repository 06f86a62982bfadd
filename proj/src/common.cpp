#include "cssc/common.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cssc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedTable: return "MalformedTable";
    case ErrorCode::NotAGroupoid: return "NotAGroupoid";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::InvalidAction: return "InvalidAction";
    case ErrorCode::InvalidModule: return "InvalidModule";
    case ErrorCode::SourceTargetMismatch: return "SourceTargetMismatch";
    case ErrorCode::ChoiceOutsideFiber: return "ChoiceOutsideFiber";
    case ErrorCode::ElementOutsideParent: return "ElementOutsideParent";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotPerfectOrNormal: return "NotPerfectOrNormal";
    case ErrorCode::NoLift: return "NoLift";
    case ErrorCode::NonUniqueLift: return "NonUniqueLift";
    case ErrorCode::NotSpecialLeg: return "NotSpecialLeg";
    case ErrorCode::NotComposable: return "NotComposable";
    case ErrorCode::NotSpecialPair: return "NotSpecialPair";
    case ErrorCode::NotCssc: return "NotCssc";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidCategoricalGroup: return "InvalidCategoricalGroup";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::VersionMismatch: return "VersionMismatch";
    case ErrorCode::Usage: return "Usage";
  }
  return "Unknown";
}

Carrier::Carrier(std::vector<std::string> names) : names_(std::move(names)) {
  lookup_.reserve(names_.size());
  for (Elem i = 0; i < names_.size(); ++i) {
    if (i > 0 && !(names_[i - 1] < names_[i]))
      throw Error(ErrorCode::MalformedTable, "carrier names not sorted/unique at '" + names_[i] + "'");
    lookup_.emplace(names_[i], i);
  }
}

std::optional<Elem> Carrier::find(std::string_view name) const {
  auto it = lookup_.find(std::string(name));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

Elem Carrier::index(std::string_view name) const {
  if (auto e = find(name)) return *e;
  throw Error(ErrorCode::ElementOutsideParent, "unknown element '" + std::string(name) + "'");
}

std::vector<Elem> sort_permutation(const std::vector<std::string>& names) {
  if (names.empty()) throw Error(ErrorCode::MalformedTable, "empty carrier");
  std::vector<Elem> order(names.size());
  std::iota(order.begin(), order.end(), Elem{0});
  std::sort(order.begin(), order.end(), [&](Elem a, Elem b) { return names[a] < names[b]; });
  std::vector<Elem> perm(names.size());
  for (Elem pos = 0; pos < order.size(); ++pos) {
    if (pos > 0 && names[order[pos - 1]] == names[order[pos]])
      throw Error(ErrorCode::MalformedTable, "duplicate element '" + names[order[pos]] + "'");
    perm[order[pos]] = pos;
  }
  return perm;
}

std::vector<std::pair<Elem, Elem>> PairSet::pairs() const {
  std::vector<std::pair<Elem, Elem>> out;
  out.reserve(count_);
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b)
      if (contains(a, b)) out.emplace_back(a, b);
  return out;
}

bool PairSet::is_subset_of(const PairSet& other) const {
  if (n_ != other.n_) return false;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !other.bits_[i]) return false;
  return true;
}

PairSet PairSet::diagonal(std::size_t n) {
  PairSet s(n);
  for (Elem a = 0; a < n; ++a) s.insert(a, a);
  return s;
}

Partition Partition::from_labels(std::span<const Elem> labels) {
  Partition p;
  p.rep_.resize(labels.size());
  std::unordered_map<Elem, Elem> first;
  for (Elem e = 0; e < labels.size(); ++e) {
    auto [it, inserted] = first.emplace(labels[e], e);
    p.rep_[e] = it->second;
  }
  return p;
}

Partition Partition::equality(std::size_t n) {
  Partition p;
  p.rep_.resize(n);
  std::iota(p.rep_.begin(), p.rep_.end(), Elem{0});
  return p;
}

Partition Partition::total(std::size_t n) {
  Partition p;
  p.rep_.assign(n, 0);
  return p;
}

std::size_t Partition::block_count() const {
  std::size_t count = 0;
  for (Elem e = 0; e < rep_.size(); ++e)
    if (rep_[e] == e) ++count;
  return count;
}

std::vector<std::vector<Elem>> Partition::blocks() const {
  std::vector<std::vector<Elem>> out;
  std::unordered_map<Elem, std::size_t> slot;
  for (Elem e = 0; e < rep_.size(); ++e) {
    auto [it, inserted] = slot.emplace(rep_[e], out.size());
    if (inserted) out.emplace_back();
    out[it->second].push_back(e);
  }
  return out;
}

PairSet Partition::as_pairs() const {
  PairSet s(rep_.size());
  for (Elem a = 0; a < rep_.size(); ++a)
    for (Elem b = 0; b < rep_.size(); ++b)
      if (related(a, b)) s.insert(a, b);
  return s;
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void ValidationReport::merge(const ValidationReport& other, std::string_view prefix) {
  for (const auto& c : other.checks)
    checks.push_back({std::string(prefix) + c.name, c.passed, c.witness});
}

const Check* ValidationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  os << subject << ": " << (ok() ? "PASS" : "FAIL") << '\n';
  for (const auto& c : checks) {
    os << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name;
    if (!c.passed && !c.witness.empty()) os << " -- " << c.witness;
    os << '\n';
  }
  return os.str();
}

}  // namespace cssc
