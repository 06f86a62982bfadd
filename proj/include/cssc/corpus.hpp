#pragma once

#include <string>
#include <vector>

#include "cssc/catgroup.hpp"
#include "cssc/generators.hpp"

namespace cssc {

struct NamedCatGroup {
  std::string name;
  CatGroup value;
};

struct NamedFunctor {
  std::string name;
  std::string source;
  std::string target;
  CatGroupFunctor value;
};

struct Corpus {
  std::vector<NamedCatGroup> instances;
  std::vector<NamedFunctor> functors;

  /// Throws ElementOutsideParent for unknown names.
  const CatGroup& instance(const std::string& name) const;
  const NamedFunctor& functor(const std::string& name) const;
};

namespace instances {
/// The c-group on {x0, x1} with x0 + x0 = x1, every other sum x0, and total relation.
CGroup x2_total();
CatGroup dz2();
CatGroup bz2();
/// Skeletal on Z₂ with ω(1,1,1) = 1.
CatGroup skz2();
/// Brown–Spencer of the inclusion Z₂ = {0,2} ⊴ Z₄.
CatGroup bs_z2_z4();
}  // namespace instances

/// Desk-scale corpus of categorical groups and functors between them.
Corpus default_corpus();

}  // namespace cssc
