#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cssc {

/// Index of an element inside a carrier. Carriers are kept sorted by name, so
/// index order coincides with the lexicographic order of identifiers.
using Elem = std::uint32_t;

inline constexpr Elem kNone = std::numeric_limits<Elem>::max();

enum class ErrorCode {
  MalformedTable,
  NotAGroupoid,
  NotAGroup,
  InvalidAction,
  InvalidModule,
  SourceTargetMismatch,
  ChoiceOutsideFiber,
  ElementOutsideParent,
  NotASubgroup,
  NotPerfectOrNormal,
  NoLift,
  NonUniqueLift,
  NotSpecialLeg,
  NotComposable,
  NotSpecialPair,
  NotCssc,
  TooLarge,
  InvalidCategoricalGroup,
  ParseError,
  VersionMismatch,
  Usage,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Sorted list of unique element identifiers with reverse lookup.
class Carrier {
 public:
  Carrier() = default;
  /// `names` must already be sorted and unique; use `sort_permutation` first otherwise.
  explicit Carrier(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Elem e) const { return names_.at(e); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Elem> find(std::string_view name) const;
  /// Throws ElementOutsideParent when missing.
  Elem index(std::string_view name) const;

  bool operator==(const Carrier& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Elem> lookup_;
};

/// Returns `perm` with perm[old] = new position after sorting `names`
/// lexicographically. Throws MalformedTable on duplicates or an empty list.
std::vector<Elem> sort_permutation(const std::vector<std::string>& names);

template <typename T>
std::vector<T> permute_positions(const std::vector<T>& values, std::span<const Elem> perm) {
  std::vector<T> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[perm[i]] = values[i];
  return out;
}

/// Dense binary relation on a finite carrier.
class PairSet {
 public:
  PairSet() = default;
  explicit PairSet(std::size_t n) : n_(n), bits_(n * n, 0) {}

  std::size_t carrier_size() const noexcept { return n_; }
  bool contains(Elem a, Elem b) const { return bits_[a * n_ + b] != 0; }
  /// Returns true if the pair was newly inserted.
  bool insert(Elem a, Elem b) {
    auto& bit = bits_[a * n_ + b];
    if (bit) return false;
    bit = 1;
    ++count_;
    return true;
  }
  std::size_t count() const noexcept { return count_; }
  std::vector<std::pair<Elem, Elem>> pairs() const;

  bool is_subset_of(const PairSet& other) const;
  bool operator==(const PairSet& other) const { return n_ == other.n_ && bits_ == other.bits_; }

  static PairSet diagonal(std::size_t n);

 private:
  std::size_t n_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Equivalence relation stored as a partition; rep(e) is the least member of e's block.
class Partition {
 public:
  Partition() = default;
  /// `labels[e]` is any block label; elements sharing a label share a block.
  static Partition from_labels(std::span<const Elem> labels);
  static Partition equality(std::size_t n);
  static Partition total(std::size_t n);

  std::size_t size() const noexcept { return rep_.size(); }
  Elem rep(Elem e) const { return rep_[e]; }
  bool related(Elem a, Elem b) const { return rep_[a] == rep_[b]; }
  std::size_t block_count() const;
  std::vector<std::vector<Elem>> blocks() const;
  PairSet as_pairs() const;

  bool operator==(const Partition& other) const { return rep_ == other.rep_; }

 private:
  std::vector<Elem> rep_;
};

/// One named check of a validator together with its witness on failure.
struct Check {
  std::string name;
  bool passed = true;
  std::string witness;
};

struct ValidationReport {
  std::string subject;
  std::vector<Check> checks;

  bool ok() const;
  void pass(std::string name) { checks.push_back({std::move(name), true, {}}); }
  void fail(std::string name, std::string witness) {
    checks.push_back({std::move(name), false, std::move(witness)});
  }
  void record(std::string name, bool passed, std::string witness = {}) {
    checks.push_back({std::move(name), passed, passed ? std::string{} : std::move(witness)});
  }
  void merge(const ValidationReport& other, std::string_view prefix = {});
  const Check* first_failure() const;
  std::string summary() const;
};

/// Thread-safe compute-once cache shared between copies of an immutable value.
template <typename T>
class Lazy {
 public:
  Lazy() : state_(std::make_shared<State>()) {}

  const T& get(const std::function<T()>& compute) const {
    std::call_once(state_->once, [&] { state_->value.emplace(compute()); });
    return *state_->value;
  }

 private:
  struct State {
    std::once_flag once;
    std::optional<T> value;
  };
  std::shared_ptr<State> state_;
};

}  // namespace cssc
