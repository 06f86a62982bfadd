#include "oracles.hpp"

using namespace cssc;

namespace oracle {

Pairs special_closure(const CGroup& g) {
  const auto n = static_cast<Elem>(g.size());
  const Elem z = g.zero();
  Pairs s;
  for (Elem a = 0; a < n; ++a) {
    s.insert({a, a});
    s.insert({g.add(a, z), a});
    s.insert({g.add(z, a), a});
    s.insert({g.add(a, g.neg(a)), z});
    s.insert({g.add(g.neg(a), a), z});
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) s.insert({g.add(a, g.add(b, c)), g.add(g.add(a, b), c)});
  }
  for (bool changed = true; changed;) {
    changed = false;
    const std::vector<std::pair<Elem, Elem>> now(s.begin(), s.end());
    for (const auto& [a, b] : now) {
      changed |= s.insert({b, a}).second;
      for (const auto& [c, d] : now) {
        if (b == c) changed |= s.insert({a, d}).second;
        changed |= s.insert({g.add(a, c), g.add(b, d)}).second;
      }
    }
  }
  return s;
}

Pairs as_set(const PairSet& p) {
  Pairs out;
  for (Elem a = 0; a < p.carrier_size(); ++a)
    for (Elem b = 0; b < p.carrier_size(); ++b)
      if (p.contains(a, b)) out.insert({a, b});
  return out;
}

std::set<Elem> special_iso_closure(const CatGroup& c) {
  const auto& t = c.tables();
  const auto n1 = static_cast<Elem>(t.arrows.size());
  std::set<Elem> s;
  for (const auto* table : {&t.id, &t.alpha, &t.lambda, &t.rho, &t.eps, &t.delta}) s.insert(table->begin(), table->end());
  auto composite = [&](Elem g, Elem f) { return t.comp[g * n1 + f]; };
  for (bool changed = true; changed;) {
    changed = false;
    const std::vector<Elem> now(s.begin(), s.end());
    for (Elem f : now) {
      for (Elem g = 0; g < n1; ++g)
        if (t.dom[g] == t.cod[f] && t.cod[g] == t.dom[f] && composite(g, f) == t.id[t.dom[f]] &&
            composite(f, g) == t.id[t.cod[f]])
          changed |= s.insert(g).second;
      for (Elem g : now) {
        if (t.dom[g] == t.cod[f]) changed |= s.insert(composite(g, f)).second;
        changed |= s.insert(t.arr_add[f * n1 + g]).second;
      }
    }
  }
  return s;
}

bool is_cocycle(unsigned g, unsigned a, const std::vector<Elem>& omega) {
  auto w = [&](unsigned x, unsigned y, unsigned z) { return static_cast<long>(omega[(x * g + y) * g + z]); };
  for (unsigned x = 0; x < g; ++x)
    for (unsigned y = 0; y < g; ++y)
      for (unsigned z = 0; z < g; ++z)
        for (unsigned v = 0; v < g; ++v) {
          const long d = w(y, z, v) - w((x + y) % g, z, v) + w(x, (y + z) % g, v) - w(x, y, (z + v) % g) + w(x, y, z);
          if (((d % static_cast<long>(a)) + a) % a != 0) return false;
        }
  return true;
}

std::vector<std::vector<Elem>> normalized_cochains(unsigned g, unsigned a) {
  std::vector<unsigned> free;
  for (unsigned i = 0; i < g * g * g; ++i)
    if (i / (g * g) != 0 && (i / g) % g != 0 && i % g != 0) free.push_back(i);
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> omega(g * g * g, 0);
  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (k == free.size()) {
      out.push_back(omega);
      return;
    }
    for (Elem v = 0; v < a; ++v) {
      omega[free[k]] = v;
      fill(k + 1);
    }
  };
  fill(0);
  return out;
}

std::vector<Rep> representations(const CCrossedModule& x, const GArrow& g) {
  const auto& M = x.source;
  const auto& N = x.target;
  std::vector<Rep> out;
  for (Elem r = 0; r < N.size(); ++r) {
    if (!N.special_pair(g.dom, r)) continue;
    for (Elem c = 0; c < M.size(); ++c)
      if (x.weak_special.contains(c, g.c) && N.special_pair(N.add(x.d(c), r), g.cod)) out.push_back({g.dom, r, c, g.cod});
  }
  return out;
}

GArrow canonical(const CCrossedModule& x, const Rep& p) { return canonicalize(x, p.dom, p.r, p.r, p.c, p.cod); }

Rep compose(const CCrossedModule& x, const Rep& p2, const Rep& p1) {
  return {p1.dom, p1.r, x.source.add(p2.c, p1.c), p2.cod};
}

Rep add(const CCrossedModule& x, const Rep& p1, const Rep& p2) {
  const auto& N = x.target;
  return {N.add(p1.dom, p2.dom), N.add(p1.r, p2.r), x.source.add(p1.c, x.act(p1.r, p2.c)), N.add(p1.cod, p2.cod)};
}

Rep inverse(const CCrossedModule& x, const Rep& p) {
  return {p.cod, x.target.add(x.d(p.c), p.r), x.source.neg(p.c), p.dom};
}

Rep opposite(const CCrossedModule& x, const Rep& p) {
  const auto& N = x.target;
  const Elem nr = N.neg(p.r);
  return {N.neg(p.dom), nr, x.act(nr, x.source.neg(p.c)), N.neg(p.cod)};
}

std::vector<Mutant> single_cell_mutants(const CatGroup& c) {
  using Tables = CatGroup::Tables;
  const auto n0 = static_cast<Elem>(c.num_objects());
  const auto n1 = static_cast<Elem>(c.num_arrows());
  std::vector<Mutant> out;
  auto vary = [&](const char* table, std::vector<Elem> Tables::*field, Elem range) {
    const auto& cells = c.tables().*field;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i] == kNone) continue;
      for (Elem v = 0; v < range; ++v) {
        if (v == cells[i]) continue;
        Tables t = c.tables();
        (t.*field)[i] = v;
        out.push_back({std::string(table) + "[" + std::to_string(i) + "]=" + std::to_string(v), std::move(t)});
      }
    }
  };
  vary("dom", &Tables::dom, n0);
  vary("cod", &Tables::cod, n0);
  vary("id", &Tables::id, n1);
  vary("comp", &Tables::comp, n1);
  vary("obj_add", &Tables::obj_add, n0);
  vary("arr_add", &Tables::arr_add, n1);
  vary("alpha", &Tables::alpha, n1);
  vary("lambda", &Tables::lambda, n1);
  vary("rho", &Tables::rho, n1);
  vary("neg_obj", &Tables::neg_obj, n0);
  vary("eps", &Tables::eps, n1);
  vary("delta", &Tables::delta, n1);
  vary("neg_arr", &Tables::neg_arr, n1);
  for (Elem v = 0; v < n0; ++v)
    if (v != c.zero()) {
      Tables t = c.tables();
      t.zero = v;
      out.push_back({"zero=" + std::to_string(v), std::move(t)});
    }
  return out;
}

CGroup random_lift(std::mt19937& rng, unsigned q, unsigned fibre) {
  const unsigned n = q * fibre;
  std::uniform_int_distribution<unsigned> pick(0, fibre - 1);
  CGroup::Tables t;
  auto at = [&](unsigned base, unsigned layer) { return static_cast<Elem>(base * fibre + layer); };
  for (unsigned e = 0; e < n; ++e) {
    t.elements.push_back("(" + std::to_string(e / fibre) + "," + std::to_string(e % fibre) + ")");
    t.block.push_back(e / fibre);
    t.neg.push_back(at((q - e / fibre) % q, pick(rng)));
    for (unsigned f = 0; f < n; ++f) t.add.push_back(at((e / fibre + f / fibre) % q, pick(rng)));
  }
  t.zero = at(0, pick(rng));
  return CGroup(std::move(t));
}

}  // namespace oracle
