#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "cssc/catgroup.hpp"
#include "cssc/corpus.hpp"
#include "cssc/crossmod.hpp"
#include "cssc/equivalence.hpp"

namespace cssc {

inline constexpr int kFormatVersion = 1;

enum class DocKind { CGroup, CrossedModule, CatGroup, Functor, CmMorphism, Report };

std::string_view to_string(DocKind kind);

/// Container shared by every structure file: kind, name, format_version, payload.
struct StructureDoc {
  DocKind kind = DocKind::CGroup;
  std::string name;
  int format_version = kFormatVersion;
  nlohmann::json payload;
};

/// Throws ParseError (with the offending field path) or VersionMismatch.
StructureDoc parse_document(std::string_view text);
/// Pretty-printed JSON with sorted keys and a trailing newline.
std::string serialize(const StructureDoc& doc);

StructureDoc load_document(const std::filesystem::path& path);
void save_document(const StructureDoc& doc, const std::filesystem::path& path);

StructureDoc to_doc(const std::string& name, const CGroup& g);
StructureDoc to_doc(const std::string& name, const CCrossedModule& x);
StructureDoc to_doc(const std::string& name, const CatGroup& c);
StructureDoc to_doc(const std::string& name, const std::string& source, const std::string& target,
                    const CatGroupFunctor& t);
StructureDoc to_doc(const std::string& name, const std::string& source, const std::string& target,
                    const CrossedModuleMorphism& m);
StructureDoc to_doc(const std::string& name, const ValidationReport& r);
StructureDoc to_doc(const std::string& name, const std::vector<ValidationReport>& reports);

CGroup cgroup_from_doc(const StructureDoc& doc);
CCrossedModule crossed_module_from_doc(const StructureDoc& doc);
CatGroup catgroup_from_doc(const StructureDoc& doc);

/// Ends of a morphism document, by instance name.
struct MorphismEnds {
  std::string source;
  std::string target;
};
MorphismEnds morphism_ends(const StructureDoc& doc);
CatGroupFunctor functor_from_doc(const StructureDoc& doc, const CatGroup& source, const CatGroup& target);
CrossedModuleMorphism cm_morphism_from_doc(const StructureDoc& doc, const CCrossedModule& source,
                                           const CCrossedModule& target);

/// Reads `corpus.manifest` in dir: lines `instance <file>` and `morphism <file>`,
/// `#` starts a comment. Instances are categorical groups; morphisms are
/// functors between them.
Corpus load_corpus(const std::filesystem::path& dir);
/// Writes one file per structure plus the manifest.
void save_corpus(const Corpus& corpus, const std::filesystem::path& dir);

}  // namespace cssc
