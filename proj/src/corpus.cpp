#include "cssc/corpus.hpp"

namespace cssc {

const CatGroup& Corpus::instance(const std::string& name) const {
  for (const auto& i : instances)
    if (i.name == name) return i.value;
  throw Error(ErrorCode::ElementOutsideParent, "no corpus instance '" + name + "'");
}

const NamedFunctor& Corpus::functor(const std::string& name) const {
  for (const auto& f : functors)
    if (f.name == name) return f;
  throw Error(ErrorCode::ElementOutsideParent, "no corpus functor '" + name + "'");
}

namespace instances {

CGroup x2_total() { return CGroup({{"x0", "x1"}, {1, 0, 0, 0}, 0, {0, 1}, {0, 0}}); }

CatGroup dz2() { return gen_discrete(groups::cyclic(2)); }

CatGroup bz2() { return gen_delooping(groups::cyclic(2)); }

CatGroup skz2() { return gen_skeletal_cocycle(groups::cyclic(2), groups::cyclic(2), {0, 0, 0, 0, 0, 0, 0, 1}); }

CatGroup bs_z2_z4() { return gen_brown_spencer(normal_subgroup_module(groups::cyclic(4), {"0", "2"})); }

}  // namespace instances

namespace {

using Names = std::vector<std::pair<std::string, std::string>>;

Names map_names(const Carrier& c, const std::function<std::string(const std::string&)>& f) {
  Names out;
  for (const auto& n : c.names()) out.emplace_back(n, f(n));
  return out;
}

std::string mod_name(const std::string& n, int m) { return std::to_string(std::stoi(n) % m); }

// "(t,g)" → {t, g}
std::pair<std::string, std::string> split_pair(const std::string& n) {
  const auto comma = n.find(',');
  return {n.substr(1, comma - 1), n.substr(comma + 1, n.size() - comma - 2)};
}

}  // namespace

Corpus default_corpus() {
  Corpus c;
  const CatGroup dz2 = instances::dz2(), bz2 = instances::bz2(), skz2 = instances::skz2();
  const CatGroup bs = instances::bs_z2_z4();
  const CatGroup dz4 = gen_discrete(groups::cyclic(4));
  const CatGroup trivial = gen_discrete(groups::trivial());
  const CatGroup ind = gen_codiscrete(instances::x2_total());
  const CatGroup bz2_ind = gen_product(bz2, ind);
  c.instances = {
      {"trivial", trivial},
      {"dz2", dz2},
      {"bz2", bz2},
      {"skz2", skz2},
      {"bs_z2_z4", bs},
      {"bz3", gen_delooping(groups::cyclic(3))},
      {"dz4", dz4},
      {"ds3", gen_discrete(groups::symmetric3())},
      {"bs_a3_s3", gen_brown_spencer(normal_subgroup_module(groups::symmetric3(), {"123", "231", "312"}))},
      {"ind_x2", ind},
      {"bz2_x_ind_x2", bz2_ind},
  };

  auto add = [&](std::string name, std::string s, std::string t, const Names& objects, const Names& arrows) {
    const CatGroup& src = c.instance(s);
    const CatGroup& tgt = c.instance(t);
    c.functors.push_back({std::move(name), s, t, functor_by_names(src, tgt, objects, arrows)});
  };
  add("dz4_to_dz2", "dz4", "dz2", map_names(dz4.objects(), [](const std::string& n) { return mod_name(n, 2); }),
      map_names(dz4.arrows(), [](const std::string& n) { return "1_" + mod_name(n.substr(2), 2); }));
  add("dz2_to_dz4", "dz2", "dz4", map_names(dz2.objects(), [](const std::string& n) { return n == "1" ? "2" : "0"; }),
      map_names(dz2.arrows(), [](const std::string& n) { return n == "1_1" ? "1_2" : "1_0"; }));
  add("dz2_to_bz2", "dz2", "bz2", map_names(dz2.objects(), [](const std::string&) { return "*"; }),
      map_names(dz2.arrows(), [](const std::string&) { return "0"; }));
  add("dz4_to_bs", "dz4", "bs_z2_z4", map_names(dz4.objects(), [](const std::string& n) { return n; }),
      map_names(dz4.arrows(), [](const std::string& n) { return "(0," + n.substr(2) + ")"; }));
  add("bs_to_dz2", "bs_z2_z4", "dz2", map_names(bs.objects(), [](const std::string& n) { return mod_name(n, 2); }),
      map_names(bs.arrows(), [](const std::string& n) { return "1_" + mod_name(split_pair(n).second, 2); }));
  add("bs_to_bz2", "bs_z2_z4", "bz2", map_names(bs.objects(), [](const std::string&) { return "*"; }),
      map_names(bs.arrows(), [](const std::string& n) { return split_pair(n).first == "2" ? "1" : "0"; }));
  add("ind_x2_to_trivial", "ind_x2", "trivial", map_names(ind.objects(), [](const std::string&) { return "0"; }),
      map_names(ind.arrows(), [](const std::string&) { return "1_0"; }));
  add("bz2_x_ind_x2_to_bz2", "bz2_x_ind_x2", "bz2",
      map_names(bz2_ind.objects(), [](const std::string& n) { return split_pair(n).first; }),
      map_names(bz2_ind.arrows(), [](const std::string& n) { return split_pair(n).first; }));
  add("bz2_x_ind_x2_to_ind_x2", "bz2_x_ind_x2", "ind_x2",
      map_names(bz2_ind.objects(), [](const std::string& n) { return split_pair(n).second; }),
      map_names(bz2_ind.arrows(), [](const std::string& n) { return split_pair(n).second; }));
  return c;
}

}  // namespace cssc
