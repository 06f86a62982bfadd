#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>
#include <thread>

#include "cssc/equivalence.hpp"
#include "cssc/functors.hpp"
#include "cssc/generators.hpp"
#include "cssc/io.hpp"

namespace fs = std::filesystem;
using namespace cssc;

namespace {

enum Exit { kPass = 0, kCheckFailure = 1, kInputError = 2 };

struct Options {
  std::size_t max_arrows = 0;  // 0 keeps the per-operation default
  std::string report_path;
  unsigned jobs = 0;
  std::string out;
};

std::size_t catgroup_cap(const Options& o) { return o.max_arrows ? o.max_arrows : CatGroupOptions{}.max_arrows; }
std::size_t t_cap(const Options& o) { return o.max_arrows ? o.max_arrows : kDefaultMaxTArrows; }

void emit(const Options& o, const StructureDoc& doc) {
  if (o.out.empty())
    std::cout << serialize(doc);
  else
    save_document(doc, o.out);
}

int finish(const Options& o, const std::string& name, const std::vector<ValidationReport>& reports) {
  bool ok = true;
  for (const auto& r : reports) {
    for (const auto& c : r.checks)
      if (!c.passed) std::cout << "FAIL " << r.subject << " / " << c.name << ": " << c.witness << "\n";
    std::cout << (r.ok() ? "PASS " : "FAIL ") << r.subject << " (" << r.checks.size() << " checks)\n";
    ok = ok && r.ok();
  }
  if (!o.report_path.empty()) save_document(to_doc(name, reports), o.report_path);
  return ok ? kPass : kCheckFailure;
}

// Functor and morphism documents name their ends; the end documents live next to them.
StructureDoc sibling(const fs::path& file, const std::string& name) {
  return load_document(file.parent_path() / (name + ".json"));
}

int validate(const Options& o, const fs::path& file) {
  const StructureDoc doc = load_document(file);
  ValidationReport r;
  switch (doc.kind) {
    case DocKind::CGroup: r = validate_cgroup(cgroup_from_doc(doc)); break;
    case DocKind::CrossedModule: {
      const auto x = crossed_module_from_doc(doc);
      r = validate_crossed_module(x);
      if (r.ok()) std::cout << "strict " << is_strict(x) << ", special " << is_special(x) << "\n";
      break;
    }
    case DocKind::CatGroup:
      r = validate_catgroup(catgroup_from_doc(doc), {catgroup_cap(o), false});
      break;
    case DocKind::Functor: {
      const auto ends = morphism_ends(doc);
      r = validate_functor(functor_from_doc(doc, catgroup_from_doc(sibling(file, ends.source)),
                                            catgroup_from_doc(sibling(file, ends.target))));
      break;
    }
    case DocKind::CmMorphism: {
      const auto ends = morphism_ends(doc);
      r = validate_cm_morphism(cm_morphism_from_doc(doc, crossed_module_from_doc(sibling(file, ends.source)),
                                                    crossed_module_from_doc(sibling(file, ends.target))));
      break;
    }
    case DocKind::Report: throw Error(ErrorCode::Usage, "report documents cannot be validated");
  }
  r.subject = doc.name;
  return finish(o, doc.name, {r});
}

void print_closure(const CGroup& g) {
  const PairSet s = special_closure(g);
  for (const auto& [a, b] : s.pairs())
    if (a < b) std::cout << g.name(a) << " ~ " << g.name(b) << "\n";
}

int closure(const fs::path& file) {
  const StructureDoc doc = load_document(file);
  switch (doc.kind) {
    case DocKind::CGroup: print_closure(cgroup_from_doc(doc)); break;
    case DocKind::CrossedModule: print_closure(crossed_module_from_doc(doc).target); break;
    case DocKind::CatGroup: {
      const CatGroup c = catgroup_from_doc(doc);
      const auto special = special_iso_closure(c);
      for (Elem f = 0; f < c.num_arrows(); ++f)
        if (special[f])
          std::cout << c.arrow_name(f) << " : " << c.object_name(c.dom(f)) << " -> " << c.object_name(c.cod(f))
                    << "\n";
      for (const auto& site : coherence_diagnostic(c)) {
        std::cout << "parallel special isos " << c.object_name(site.from) << " -> " << c.object_name(site.to) << ":";
        for (Elem f : site.isos) std::cout << " " << c.arrow_name(f);
        std::cout << "\n";
      }
      break;
    }
    default: throw Error(ErrorCode::Usage, "closure needs a cgroup, crossed_module or catgroup document");
  }
  return kPass;
}

int functor(const Options& o, const std::string& which, const fs::path& file) {
  const StructureDoc doc = load_document(file);
  if (which == "L") {
    const auto x = L0(catgroup_from_doc(doc));
    emit(o, to_doc(doc.name, x));
    return validate_crossed_module(x).ok() ? kPass : kCheckFailure;
  }
  const auto t = T0(crossed_module_from_doc(doc), t_cap(o));
  emit(o, to_doc(doc.name, t.cat));
  return validate_catgroup(t.cat, {std::max(catgroup_cap(o), t.cat.num_arrows()), false}).ok() ? kPass
                                                                                                  : kCheckFailure;
}

int roundtrip(const Options& o, const std::string& which, const fs::path& file) {
  const StructureDoc doc = load_document(file);
  if (which == "TL") return finish(o, doc.name, {verify_TL(catgroup_from_doc(doc), doc.name)});
  const auto x = crossed_module_from_doc(doc);
  if (!is_cssc(x)) throw Error(ErrorCode::NotCssc, doc.name + " is not connected, strict and special");
  return finish(o, doc.name, {verify_LT(x, doc.name)});
}

int equivalence(const Options& o, const fs::path& dir) {
  const Corpus corpus = load_corpus(dir);
  const unsigned jobs = o.jobs ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
  const auto summary = verify_equivalence(corpus, jobs);
  const int code = finish(o, dir.filename().string(), summary.reports);
  std::cout << summary.reports.size() << " reports, " << summary.failures() << " failed\n";
  return code;
}

GroupTable parse_group(const std::string& s) {
  if (s == "1") return groups::trivial();
  if (s == "S3") return groups::symmetric3();
  if (s.size() > 1 && s[0] == 'Z') {
    unsigned n = 0;
    std::istringstream in(s.substr(1));
    if (in >> n && in.eof() && n > 0) return groups::cyclic(n);
  }
  throw Error(ErrorCode::Usage, "unknown group '" + s + "' (expected 1, Zn or S3)");
}

Elem element(const GroupTable& g, const std::string& name) {
  for (Elem i = 0; i < g.size(); ++i)
    if (g.elements[i] == name) return i;
  throw Error(ErrorCode::Usage, "'" + name + "' is not an element");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

Elem identity_of(const GroupTable& g) {
  for (Elem e = 0; e < g.size(); ++e) {
    bool neutral = true;
    for (Elem x = 0; x < g.size() && neutral; ++x) neutral = g.mul(e, x) == x;
    if (neutral) return e;
  }
  throw Error(ErrorCode::Usage, "group has no identity");
}

// Entries "x,y,z=a" separated by ';'; unlisted triples map to the identity of A.
std::vector<Elem> parse_omega(const GroupTable& g, const GroupTable& a, const std::string& spec) {
  const auto n = g.size();
  std::vector<Elem> omega(n * n * n, identity_of(a));
  for (const auto& entry : split(spec, ';')) {
    const auto sides = split(entry, '=');
    const auto args = sides.empty() ? std::vector<std::string>{} : split(sides[0], ',');
    if (sides.size() != 2 || args.size() != 3) throw Error(ErrorCode::Usage, "bad omega entry '" + entry + "'");
    omega[(element(g, args[0]) * n + element(g, args[1])) * n + element(g, args[2])] = element(a, sides[1]);
  }
  return omega;
}

struct GenerateArgs {
  std::string kind;
  std::string group = "Z2";
  std::string coeff = "Z2";
  std::string omega;
  std::string members;
  std::string name;
};

int generate(const Options& o, const GenerateArgs& a) {
  if (a.kind == "corpus") {
    if (o.out.empty()) throw Error(ErrorCode::Usage, "generate corpus needs --out <dir>");
    save_corpus(default_corpus(), o.out);
    return kPass;
  }
  const GroupTable g = parse_group(a.group);
  CatGroup c = [&] {
    if (a.kind == "discrete") return gen_discrete(g);
    if (a.kind == "delooping") return gen_delooping(g);
    if (a.kind == "skeletal") {
      const GroupTable coeff = parse_group(a.coeff);
      return gen_skeletal_cocycle(g, coeff, parse_omega(g, coeff, a.omega));
    }
    if (a.kind == "brown-spencer") return gen_brown_spencer(normal_subgroup_module(g, split(a.members, ',')));
    if (a.kind == "codiscrete") return gen_codiscrete(from_group(g));
    throw Error(ErrorCode::Usage, "unknown kind '" + a.kind + "'");
  }();
  emit(o, to_doc(a.name.empty() ? a.kind : a.name, c));
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Validate and convert categorical groups and crossed modules of c-groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--max-arrows", o.max_arrows, "Override arrow enumeration caps");
  app.add_option("--report", o.report_path, "Write the report document to this path");
  app.add_option("--jobs", o.jobs, "Concurrent jobs for equivalence (default: hardware threads)");

  std::string file, which;
  auto* validate_cmd = app.add_subcommand("validate", "Validate a structure document");
  validate_cmd->add_option("file", file)->required()->check(CLI::ExistingFile);

  auto* closure_cmd = app.add_subcommand("closure", "Print the special closure");
  closure_cmd->add_option("file", file)->required()->check(CLI::ExistingFile);

  auto* functor_cmd = app.add_subcommand("functor", "Apply L to a catgroup or T to a crossed module");
  functor_cmd->add_option("which", which)->required()->check(CLI::IsMember({"L", "T"}));
  functor_cmd->add_option("file", file)->required()->check(CLI::ExistingFile);
  functor_cmd->add_option("-o,--out", o.out, "Output file (default: stdout)");

  auto* roundtrip_cmd = app.add_subcommand("roundtrip", "Check TL on a catgroup or LT on a crossed module");
  roundtrip_cmd->add_option("which", which)->required()->check(CLI::IsMember({"TL", "LT"}));
  roundtrip_cmd->add_option("file", file)->required()->check(CLI::ExistingFile);

  auto* equivalence_cmd = app.add_subcommand("equivalence", "Verify the equivalence over a corpus directory");
  equivalence_cmd->add_option("dir", file)->required()->check(CLI::ExistingDirectory);

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "Generate an instance (or the default corpus)");
  generate_cmd->add_option("kind", gen.kind)
      ->required()
      ->check(CLI::IsMember({"discrete", "delooping", "skeletal", "brown-spencer", "codiscrete", "corpus"}));
  generate_cmd->add_option("--group", gen.group, "1, Zn or S3");
  generate_cmd->add_option("--coeff", gen.coeff, "Coefficient group for skeletal");
  generate_cmd->add_option("--omega", gen.omega, "Associator entries x,y,z=a separated by ';'");
  generate_cmd->add_option("--members", gen.members, "Normal subgroup members for brown-spencer, comma separated");
  generate_cmd->add_option("--name", gen.name, "Document name");
  generate_cmd->add_option("-o,--out", o.out, "Output file, or directory for corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*validate_cmd) return validate(o, file);
    if (*closure_cmd) return closure(file);
    if (*functor_cmd) return functor(o, which, file);
    if (*roundtrip_cmd) return roundtrip(o, which, file);
    if (*equivalence_cmd) return equivalence(o, file);
    return generate(o, gen);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
