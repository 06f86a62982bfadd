#include "cssc/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace cssc {

using nlohmann::json;

std::string_view to_string(DocKind kind) {
  switch (kind) {
    case DocKind::CGroup: return "cgroup";
    case DocKind::CrossedModule: return "crossed_module";
    case DocKind::CatGroup: return "catgroup";
    case DocKind::Functor: return "functor";
    case DocKind::CmMorphism: return "cm_morphism";
    case DocKind::Report: return "report";
  }
  return "unknown";
}

namespace {

[[noreturn]] void parse_error(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::ParseError, path + ": " + what);
}

// A JSON value together with its path for error messages.
class Node {
 public:
  Node(const json& j, std::string path) : j_(j), path_(std::move(path)) {}

  const std::string& path() const { return path_; }

  Node operator[](const char* key) const {
    if (!j_.is_object()) parse_error(path_, "expected an object");
    auto it = j_.find(key);
    if (it == j_.end()) parse_error(path_, std::string("missing field '") + key + "'");
    return {*it, path_ + "." + key};
  }

  Node operator[](int i) const { return {j_.at(static_cast<std::size_t>(i)), path_ + "[" + std::to_string(i) + "]"}; }

  void only(std::initializer_list<std::string_view> keys) const {
    if (!j_.is_object()) parse_error(path_, "expected an object");
    for (const auto& [k, v] : j_.items())
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) parse_error(path_, "unknown field '" + k + "'");
  }

  std::size_t size() const {
    if (!j_.is_array()) parse_error(path_, "expected an array");
    return j_.size();
  }

  // Array of fixed-length arrays of strings.
  std::vector<Node> rows(std::size_t width) const {
    std::vector<Node> out;
    for (std::size_t i = 0; i < size(); ++i) {
      Node row = (*this)[static_cast<int>(i)];
      if (row.size() != width) parse_error(row.path(), "expected " + std::to_string(width) + " entries");
      out.push_back(row);
    }
    return out;
  }

  std::string str() const {
    if (!j_.is_string()) parse_error(path_, "expected a string");
    return j_.get<std::string>();
  }

  std::vector<std::string> strings() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)[static_cast<int>(i)].str());
    return out;
  }

  const json& raw() const { return j_; }

 private:
  const json& j_;
  std::string path_;
};

Elem lookup(const Carrier& c, const Node& n, std::string_view what) {
  const std::string s = n.str();
  if (auto e = c.find(s)) return *e;
  parse_error(n.path(), "unknown " + std::string(what) + " '" + s + "'");
}

// Fills a table indexed by `index(row)` from association rows, requiring totality.
std::vector<Elem> assoc(const Node& list, std::size_t width, std::size_t size,
                        const std::function<std::size_t(const Node&)>& key,
                        const std::function<Elem(const Node&)>& value) {
  std::vector<Elem> out(size, kNone);
  for (const Node& row : list.rows(width)) {
    const auto k = key(row);
    if (out[k] != kNone) parse_error(row.path(), "duplicate entry");
    out[k] = value(row);
  }
  if (std::count(out.begin(), out.end(), kNone))
    parse_error(list.path(), "table is not total (" + std::to_string(list.size()) + " of " + std::to_string(size) +
                                 " entries)");
  return out;
}

Carrier carrier_of(const Node& n) {
  auto names = n.strings();
  std::vector<std::string> sorted = names;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) parse_error(n.path(), "duplicate element");
  if (sorted.empty()) parse_error(n.path(), "empty carrier");
  return Carrier(sorted);
}

json cgroup_payload(const CGroup& g) {
  const auto n = static_cast<Elem>(g.size());
  json add = json::array(), neg = json::array(), blocks = json::array();
  for (Elem a = 0; a < n; ++a) {
    neg.push_back({g.name(a), g.name(g.neg(a))});
    for (Elem b = 0; b < n; ++b) add.push_back({g.name(a), g.name(b), g.name(g.add(a, b))});
  }
  for (const auto& block : g.rel().blocks()) {
    json names = json::array();
    for (Elem e : block) names.push_back(g.name(e));
    blocks.push_back(names);
  }
  return {{"elements", g.carrier().names()}, {"zero", g.name(g.zero())}, {"add", add}, {"neg", neg}, {"rel", blocks}};
}

CGroup cgroup_from_payload(const Node& p) {
  p.only({"elements", "zero", "add", "neg", "rel"});
  const Carrier c = carrier_of(p["elements"]);
  const auto n = c.size();
  CGroup::Tables t;
  t.elements = c.names();
  t.zero = lookup(c, p["zero"], "element");
  auto el = [&](const Node& x) { return lookup(c, x, "element"); };
  t.add = assoc(p["add"], 3, n * n, [&](const Node& r) { return el(r[0]) * n + el(r[1]); },
                [&](const Node& r) { return el(r[2]); });
  t.neg = assoc(p["neg"], 2, n, [&](const Node& r) { return el(r[0]); }, [&](const Node& r) { return el(r[1]); });
  t.block.assign(n, kNone);
  const Node rel = p["rel"];
  for (std::size_t b = 0; b < rel.size(); ++b) {
    const Node block = rel[static_cast<int>(b)];
    for (std::size_t i = 0; i < block.size(); ++i) {
      const Elem e = el(block[static_cast<int>(i)]);
      if (t.block[e] != kNone) parse_error(block[static_cast<int>(i)].path(), "element listed in two blocks");
      t.block[e] = static_cast<Elem>(b);
    }
  }
  if (std::count(t.block.begin(), t.block.end(), kNone)) parse_error(rel.path(), "blocks do not cover the carrier");
  return CGroup(std::move(t));
}

StructureDoc make_doc(DocKind kind, const std::string& name, json payload) {
  return {kind, name, kFormatVersion, std::move(payload)};
}

void expect_kind(const StructureDoc& doc, DocKind kind) {
  if (doc.kind != kind)
    parse_error("kind", "expected " + std::string(to_string(kind)) + ", got " + std::string(to_string(doc.kind)));
}

}  // namespace

StructureDoc parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("document: ") + e.what());
  }
  const Node root(j, "document");
  root.only({"kind", "name", "format_version", "payload"});
  const Node version = root["format_version"];
  if (!version.raw().is_number_integer()) parse_error(version.path(), "expected an integer");
  if (version.raw().get<int>() != kFormatVersion)
    throw Error(ErrorCode::VersionMismatch, "format_version " + version.raw().dump() + " is not supported (expected " +
                                                std::to_string(kFormatVersion) + ")");
  StructureDoc doc;
  const std::string kind = root["kind"].str();
  bool known = false;
  for (DocKind k : {DocKind::CGroup, DocKind::CrossedModule, DocKind::CatGroup, DocKind::Functor, DocKind::CmMorphism,
                    DocKind::Report})
    if (to_string(k) == kind) {
      doc.kind = k;
      known = true;
    }
  if (!known) parse_error("document.kind", "unknown kind '" + kind + "'");
  doc.name = root["name"].str();
  doc.payload = root["payload"].raw();
  if (!doc.payload.is_object()) parse_error("document.payload", "expected an object");
  return doc;
}

std::string serialize(const StructureDoc& doc) {
  const json j = {{"kind", to_string(doc.kind)},
                  {"name", doc.name},
                  {"format_version", doc.format_version},
                  {"payload", doc.payload}};
  return j.dump(2) + "\n";
}

StructureDoc load_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, path.string() + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_document(ss.str());
  } catch (const Error& e) {
    const std::string what = e.what();
    throw Error(e.code(), path.string() + ": " + what.substr(what.find(": ") + 2));
  }
}

void save_document(const StructureDoc& doc, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Usage, path.string() + ": cannot write");
  out << serialize(doc);
}

StructureDoc to_doc(const std::string& name, const CGroup& g) {
  return make_doc(DocKind::CGroup, name, cgroup_payload(g));
}

StructureDoc to_doc(const std::string& name, const CCrossedModule& x) {
  const auto& M = x.source;
  const auto& N = x.target;
  json boundary = json::array(), action = json::array(), weak = json::array();
  for (Elem c = 0; c < M.size(); ++c) boundary.push_back({M.name(c), N.name(x.d(c))});
  for (Elem r = 0; r < N.size(); ++r)
    for (Elem c = 0; c < M.size(); ++c) action.push_back({N.name(r), M.name(c), M.name(x.act(r, c))});
  for (const auto& [a, b] : x.weak_special.pairs()) weak.push_back({M.name(a), M.name(b)});
  return make_doc(DocKind::CrossedModule, name,
                  {{"source", cgroup_payload(M)},
                   {"target", cgroup_payload(N)},
                   {"boundary", boundary},
                   {"action", action},
                   {"weak_special", weak}});
}

StructureDoc to_doc(const std::string& name, const CatGroup& c) {
  const auto n0 = static_cast<Elem>(c.num_objects()), n1 = static_cast<Elem>(c.num_arrows());
  auto on = [&](Elem x) { return c.object_name(x); };
  auto an = [&](Elem f) { return c.arrow_name(f); };
  json arrows = json::array(), id = json::array(), comp = json::array(), oadd = json::array(), aadd = json::array(),
       alpha = json::array(), lambda = json::array(), rho = json::array(), nobj = json::array(),
       eps = json::array(), delta = json::array(), narr = json::array();
  for (Elem f = 0; f < n1; ++f) {
    arrows.push_back({an(f), on(c.dom(f)), on(c.cod(f))});
    narr.push_back({an(f), an(c.neg_arr(f))});
    for (Elem g = 0; g < n1; ++g) {
      if (c.composable(f, g)) comp.push_back({an(f), an(g), an(c.comp(f, g))});
      aadd.push_back({an(f), an(g), an(c.arr_add(f, g))});
    }
  }
  for (Elem x = 0; x < n0; ++x) {
    id.push_back({on(x), an(c.id(x))});
    lambda.push_back({on(x), an(c.lambda(x))});
    rho.push_back({on(x), an(c.rho(x))});
    nobj.push_back({on(x), on(c.neg_obj(x))});
    eps.push_back({on(x), an(c.eps(x))});
    delta.push_back({on(x), an(c.delta(x))});
    for (Elem y = 0; y < n0; ++y) {
      oadd.push_back({on(x), on(y), on(c.obj_add(x, y))});
      for (Elem z = 0; z < n0; ++z) alpha.push_back({on(x), on(y), on(z), an(c.alpha(x, y, z))});
    }
  }
  return make_doc(DocKind::CatGroup, name,
                  {{"objects", c.objects().names()},
                   {"arrows", arrows},
                   {"identity", id},
                   {"compose", comp},
                   {"obj_add", oadd},
                   {"arr_add", aadd},
                   {"zero", on(c.zero())},
                   {"alpha", alpha},
                   {"lambda", lambda},
                   {"rho", rho},
                   {"neg_obj", nobj},
                   {"eps", eps},
                   {"delta", delta},
                   {"neg_arr", narr}});
}

StructureDoc to_doc(const std::string& name, const std::string& source, const std::string& target,
                    const CatGroupFunctor& t) {
  json objects = json::array(), arrows = json::array();
  for (Elem x = 0; x < t.f0.size(); ++x)
    objects.push_back({t.source.object_name(x), t.target.object_name(t.f0[x])});
  for (Elem f = 0; f < t.f1.size(); ++f) arrows.push_back({t.source.arrow_name(f), t.target.arrow_name(t.f1[f])});
  return make_doc(DocKind::Functor, name,
                  {{"source", source}, {"target", target}, {"objects", objects}, {"arrows", arrows}});
}

StructureDoc to_doc(const std::string& name, const std::string& source, const std::string& target,
                    const CrossedModuleMorphism& m) {
  json on_source = json::array(), on_target = json::array();
  for (Elem c = 0; c < m.on_source.size(); ++c)
    on_source.push_back({m.source.source.name(c), m.target.source.name(m.on_source[c])});
  for (Elem r = 0; r < m.on_target.size(); ++r)
    on_target.push_back({m.source.target.name(r), m.target.target.name(m.on_target[r])});
  return make_doc(DocKind::CmMorphism, name,
                  {{"source", source}, {"target", target}, {"on_source", on_source}, {"on_target", on_target}});
}

namespace {

json report_json(const ValidationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
  return {{"subject", r.subject}, {"passed", r.ok()}, {"checks", checks}};
}

}  // namespace

StructureDoc to_doc(const std::string& name, const ValidationReport& r) {
  return to_doc(name, std::vector<ValidationReport>{r});
}

StructureDoc to_doc(const std::string& name, const std::vector<ValidationReport>& reports) {
  json list = json::array();
  bool ok = true;
  for (const auto& r : reports) {
    list.push_back(report_json(r));
    ok = ok && r.ok();
  }
  return make_doc(DocKind::Report, name, {{"passed", ok}, {"reports", list}});
}

CGroup cgroup_from_doc(const StructureDoc& doc) {
  expect_kind(doc, DocKind::CGroup);
  return cgroup_from_payload(Node(doc.payload, "payload"));
}

CCrossedModule crossed_module_from_doc(const StructureDoc& doc) {
  expect_kind(doc, DocKind::CrossedModule);
  const Node p(doc.payload, "payload");
  p.only({"source", "target", "boundary", "action", "weak_special"});
  CGroup M = cgroup_from_payload(p["source"]);
  CGroup N = cgroup_from_payload(p["target"]);
  const auto nm = M.size(), nn = N.size();
  auto m = [&](const Node& x) { return lookup(M.carrier(), x, "element of the source"); };
  auto n = [&](const Node& x) { return lookup(N.carrier(), x, "element of the target"); };
  auto boundary = assoc(p["boundary"], 2, nm, [&](const Node& r) { return m(r[0]); },
                        [&](const Node& r) { return n(r[1]); });
  auto dot = assoc(p["action"], 3, nn * nm, [&](const Node& r) { return n(r[0]) * nm + m(r[1]); },
                   [&](const Node& r) { return m(r[2]); });
  PairSet w(nm);
  for (const Node& row : p["weak_special"].rows(2)) w.insert(m(row[0]), m(row[1]));
  return make_crossed_module(std::move(M), std::move(N), std::move(boundary), std::move(dot), std::move(w));
}

CatGroup catgroup_from_doc(const StructureDoc& doc) {
  expect_kind(doc, DocKind::CatGroup);
  const Node p(doc.payload, "payload");
  p.only({"objects", "arrows", "identity", "compose", "obj_add", "arr_add", "zero", "alpha", "lambda", "rho",
          "neg_obj", "eps", "delta", "neg_arr"});
  const Carrier objects = carrier_of(p["objects"]);
  const auto arrow_rows = p["arrows"].rows(3);
  std::vector<std::string> names;
  for (const Node& r : arrow_rows) names.push_back(r[0].str());
  const Carrier arrows = carrier_of(Node(json(names), p["arrows"].path()));
  const auto n0 = objects.size(), n1 = arrows.size();
  auto o = [&](const Node& x) { return lookup(objects, x, "object"); };
  auto a = [&](const Node& x) { return lookup(arrows, x, "arrow"); };

  CatGroup::Tables t;
  t.objects = objects.names();
  t.arrows = arrows.names();
  t.dom.assign(n1, kNone);
  t.cod.assign(n1, kNone);
  for (const Node& r : arrow_rows) {
    const Elem f = a(r[0]);
    t.dom[f] = o(r[1]);
    t.cod[f] = o(r[2]);
  }
  auto per_object = [&](const char* key) {
    return assoc(p[key], 2, n0, [&](const Node& r) { return o(r[0]); }, [&](const Node& r) { return a(r[1]); });
  };
  t.id = per_object("identity");
  t.lambda = per_object("lambda");
  t.rho = per_object("rho");
  t.eps = per_object("eps");
  t.delta = per_object("delta");
  t.neg_obj = assoc(p["neg_obj"], 2, n0, [&](const Node& r) { return o(r[0]); }, [&](const Node& r) { return o(r[1]); });
  t.neg_arr = assoc(p["neg_arr"], 2, n1, [&](const Node& r) { return a(r[0]); }, [&](const Node& r) { return a(r[1]); });
  t.obj_add = assoc(p["obj_add"], 3, n0 * n0, [&](const Node& r) { return o(r[0]) * n0 + o(r[1]); },
                    [&](const Node& r) { return o(r[2]); });
  t.arr_add = assoc(p["arr_add"], 3, n1 * n1, [&](const Node& r) { return a(r[0]) * n1 + a(r[1]); },
                    [&](const Node& r) { return a(r[2]); });
  t.alpha = assoc(p["alpha"], 4, n0 * n0 * n0,
                  [&](const Node& r) { return (o(r[0]) * n0 + o(r[1])) * n0 + o(r[2]); },
                  [&](const Node& r) { return a(r[3]); });
  t.zero = o(p["zero"]);
  t.comp.assign(n1 * n1, kNone);
  for (const Node& r : p["compose"].rows(3)) {
    const Elem g = a(r[0]), f = a(r[1]);
    if (t.cod[f] != t.dom[g]) parse_error(r.path(), "arrows are not composable");
    if (t.comp[g * n1 + f] != kNone) parse_error(r.path(), "duplicate entry");
    t.comp[g * n1 + f] = a(r[2]);
  }
  for (Elem g = 0; g < n1; ++g)
    for (Elem f = 0; f < n1; ++f)
      if (t.cod[f] == t.dom[g] && t.comp[g * n1 + f] == kNone)
        parse_error(p["compose"].path(), "missing composite " + t.arrows[g] + " after " + t.arrows[f]);
  return CatGroup(std::move(t));
}

MorphismEnds morphism_ends(const StructureDoc& doc) {
  if (doc.kind != DocKind::Functor && doc.kind != DocKind::CmMorphism)
    parse_error("kind", "expected a functor or cm_morphism");
  const Node p(doc.payload, "payload");
  return {p["source"].str(), p["target"].str()};
}

CatGroupFunctor functor_from_doc(const StructureDoc& doc, const CatGroup& source, const CatGroup& target) {
  expect_kind(doc, DocKind::Functor);
  const Node p(doc.payload, "payload");
  p.only({"source", "target", "objects", "arrows"});
  auto f0 = assoc(p["objects"], 2, source.num_objects(),
                  [&](const Node& r) { return lookup(source.objects(), r[0], "source object"); },
                  [&](const Node& r) { return lookup(target.objects(), r[1], "target object"); });
  auto f1 = assoc(p["arrows"], 2, source.num_arrows(),
                  [&](const Node& r) { return lookup(source.arrows(), r[0], "source arrow"); },
                  [&](const Node& r) { return lookup(target.arrows(), r[1], "target arrow"); });
  return {source, target, std::move(f0), std::move(f1)};
}

CrossedModuleMorphism cm_morphism_from_doc(const StructureDoc& doc, const CCrossedModule& source,
                                           const CCrossedModule& target) {
  expect_kind(doc, DocKind::CmMorphism);
  const Node p(doc.payload, "payload");
  p.only({"source", "target", "on_source", "on_target"});
  auto f = assoc(p["on_source"], 2, source.source.size(),
                 [&](const Node& r) { return lookup(source.source.carrier(), r[0], "element"); },
                 [&](const Node& r) { return lookup(target.source.carrier(), r[1], "element"); });
  auto g = assoc(p["on_target"], 2, source.target.size(),
                 [&](const Node& r) { return lookup(source.target.carrier(), r[0], "element"); },
                 [&](const Node& r) { return lookup(target.target.carrier(), r[1], "element"); });
  return {source, target, std::move(f), std::move(g)};
}

Corpus load_corpus(const std::filesystem::path& dir) {
  std::ifstream manifest(dir / "corpus.manifest");
  if (!manifest) throw Error(ErrorCode::ParseError, (dir / "corpus.manifest").string() + ": cannot open");
  Corpus corpus;
  std::vector<StructureDoc> morphisms;
  std::string line;
  for (int lineno = 1; std::getline(manifest, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string tag, file, extra;
    if (!(words >> tag)) continue;
    if (!(words >> file) || (words >> extra) || (tag != "instance" && tag != "morphism"))
      throw Error(ErrorCode::ParseError, "corpus.manifest:" + std::to_string(lineno) +
                                             ": expected 'instance <file>' or 'morphism <file>'");
    StructureDoc doc = load_document(dir / file);
    if (tag == "instance") {
      if (std::any_of(corpus.instances.begin(), corpus.instances.end(),
                      [&](const NamedCatGroup& i) { return i.name == doc.name; }))
        throw Error(ErrorCode::ParseError, file + ": duplicate instance name '" + doc.name + "'");
      corpus.instances.push_back({doc.name, catgroup_from_doc(doc)});
    } else {
      morphisms.push_back(std::move(doc));
    }
  }
  for (const auto& doc : morphisms) {
    const auto ends = morphism_ends(doc);
    corpus.functors.push_back({doc.name, ends.source, ends.target,
                               functor_from_doc(doc, corpus.instance(ends.source), corpus.instance(ends.target))});
  }
  return corpus;
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::ofstream manifest(dir / "corpus.manifest");
  manifest << "# categorical groups and functors between them\n";
  for (const auto& [name, c] : corpus.instances) {
    save_document(to_doc(name, c), dir / (name + ".json"));
    manifest << "instance " << name << ".json\n";
  }
  for (const auto& f : corpus.functors) {
    save_document(to_doc(f.name, f.source, f.target, f.value), dir / (f.name + ".json"));
    manifest << "morphism " << f.name << ".json\n";
  }
}

}  // namespace cssc
