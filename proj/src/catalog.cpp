#include "hopftwist/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace hopftwist {

namespace {

std::vector<Scalar> scalars_of(const ProjectiveRep& v) {
  std::vector<Scalar> out;
  for (const auto& m : v.matrices)
    for (size_t i = 0; i < m.rows(); ++i)
      for (size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

const std::vector<CatalogGroup>& catalog_of_order(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<CatalogGroup>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<CatalogGroup> exact;
  for (auto& cg : group_catalog(n))
    if (cg.group->order() == n) exact.push_back(std::move(cg));
  return cache.emplace(n, std::move(exact)).first->second;
}

ElementSet central_involutions(const FiniteGroup& g) {
  ElementSet out;
  for (int z : center(g))
    if (g.mul(z, z) == g.identity()) out.push_back(z);
  return out;
}

// c(x, y) / c(y, x) as indices into a shared table of distinct values: for
// abelian H this determines the cohomology class.
using CommutatorKey = std::vector<int>;

CommutatorKey commutator_key(const Cocycle2& c, std::vector<Scalar>& values) {
  const int n = c.group->order();
  CommutatorKey key(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Scalar b = c(x, y) / c(y, x);
      size_t k = 0;
      while (k < values.size() && values[k] != b) ++k;
      if (k == values.size()) values.push_back(b);
      key[static_cast<size_t>(x) * n + y] = static_cast<int>(k);
    }
  return key;
}

CommutatorKey pull_back_key(const CommutatorKey& key, int n, const std::vector<int>& phi) {
  const int m = static_cast<int>(phi.size());
  CommutatorKey out(static_cast<size_t>(m) * m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) out[static_cast<size_t>(x) * m + y] = key[static_cast<size_t>(phi[x]) * n + phi[y]];
  return out;
}

Cocycle2 pull_back(const Cocycle2& c, const GroupPtr& src, const std::vector<int>& phi) {
  Cocycle2 out = Cocycle2::trivial(src);
  const int n = src->order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) out.at(x, y) = c(phi[x], phi[y]);
  return out;
}

// The distinct nondegenerate cocycle classes on one subgroup, each with an
// irreducible representation. Abelian classes are compared by commutator
// keys, nonabelian ones by an explicit coboundary test.
struct ClassList {
  bool abelian = true;
  std::vector<ProjectiveRep> reps;
  std::vector<CommutatorKey> keys;  // abelian only

  int find_key(const CommutatorKey& k) const {
    for (size_t i = 0; i < keys.size(); ++i)
      if (keys[i] == k) return static_cast<int>(i);
    return -1;
  }
  int find_cocycle(const Cocycle2& c) const {
    for (size_t i = 0; i < reps.size(); ++i)
      if (is_coboundary(c.divide(reps[i].cocycle))) return static_cast<int>(i);
    return -1;
  }
};

struct Seed {
  ProjectiveRep v;
  CommutatorKey key;
};

// Heisenberg representations of A* x| K for every bijective 1-cocycle with
// |A| = |K| = d.
std::vector<Seed> heisenberg_seeds(int d, const Field& field, std::vector<Scalar>& values) {
  std::vector<Seed> out;
  for (const auto& factors : abelian_invariant_factors(d)) {
    auto a = make_abelian(factors);
    if (!field.supports_root(a->exponent()))
      throw std::invalid_argument(field.describe() + " lacks a primitive " + std::to_string(a->exponent()) +
                                  "-th root of unity");
    for (const auto& k : catalog_of_order(d))
      for (const auto& act : all_actions(k.group, a))
        for (const auto& data : find_bijective_1cocycles(act)) {
          auto v = heisenberg_rep(data, field);
          auto key = commutator_key(v.cocycle, values);
          out.push_back({std::move(v), std::move(key)});
        }
  }
  return out;
}

ClassList classes_on(const GroupPtr& hs, const std::vector<Seed>& seeds) {
  ClassList out;
  out.abelian = hs->is_abelian();
  const int n = hs->order();
  for (const auto& seed : seeds) {
    if (seed.v.group->order() != n) continue;
    for (const auto& phi : isomorphisms(*hs, *seed.v.group)) {
      CommutatorKey key;
      if (out.abelian) {
        key = pull_back_key(seed.key, n, phi);
        if (out.find_key(key) >= 0) continue;
      } else if (out.find_cocycle(pull_back(seed.v.cocycle, hs, phi)) >= 0) {
        continue;
      }
      std::vector<Matrix> mats(n);
      for (int x = 0; x < n; ++x) mats[x] = seed.v.matrices[phi[x]];
      out.reps.push_back(lift_projective(hs, std::move(mats)));
      out.keys.push_back(std::move(key));
    }
  }
  return out;
}

bool is_perfect_square(int n, int& root) {
  root = 0;
  while ((root + 1) * (root + 1) <= n) ++root;
  return root * root == n;
}

}  // namespace

std::string Quadruple::validate() const {
  if (!g) return "quadruple has no group";
  if (!std::is_sorted(h.begin(), h.end()) || !is_subgroup(*g, h)) return "H is not a sorted subgroup of G";
  auto sub = make_subgroup(*g, h);
  if (!v.group || !(*v.group == *sub.group)) return "V is not a representation of H";
  if (v.dim * v.dim != static_cast<int>(h.size())) return "dim(V)^2 differs from |H|";
  if (static_cast<int>(v.matrices.size()) != v.group->order()) return "V needs one matrix per element of H";
  auto err = v.cocycle.validate();
  if (!err.empty()) return "cocycle of V: " + err;
  if (u < 0 || u >= g->order()) return "u is out of range";
  if (g->mul(u, u) != g->identity()) return "u^2 is not e";
  for (int x = 0; x < g->order(); ++x)
    if (g->mul(u, x) != g->mul(x, u)) return "u is not central";
  return {};
}

bool is_minimal_datum(const GroupPtr& g, const ElementSet& h, int u, const TensorElement& r) {
  const bool by_rank = verify_minimal(r);
  auto gens = h;
  gens.push_back(u);
  const bool by_generation = static_cast<int>(subgroup_generated(*g, gens).size()) == g->order();
  if (by_rank != by_generation)
    throw TheoremViolation("minimality criteria disagree: leg span " + std::string(by_rank ? "is" : "is not") +
                           " all of k[G] while <H, u> " + (by_generation ? "is" : "is not") + " G");
  return by_rank;
}

bool is_minimal_datum(const TriangularHopfDatum& d) { return is_minimal_datum(d.quad.g, d.quad.h, d.quad.u, d.r); }

TriangularHopfDatum assign_datum(const Quadruple& q, std::uint64_t seed) {
  auto err = q.validate();
  if (!err.empty()) throw std::invalid_argument("invalid quadruple: " + err);
  const auto& g = q.g;
  const int n = g->order();
  const Field field = field_of(scalars_of(q.v));
  if (field.is_prime() && n % static_cast<long>(field.characteristic()) == 0)
    throw std::invalid_argument("characteristic " + std::to_string(field.characteristic()) + " divides |G| = " +
                                std::to_string(n));
  if (!is_nondegenerate(q.v.cocycle)) throw ConstructionError("the cocycle of V is degenerate");

  auto sub = make_subgroup(*g, q.h);
  auto rt = twist_from_rep(q.v, seed);
  Report rep("F(G, H, V, u)");
  rep.record("order", n);
  rep.record("subgroup order", static_cast<long>(q.h.size()));
  rep.record("dim V", q.v.dim);
  rep.record("u", g->label(q.u));

  // only field-independent values are recorded, so that runs over
  // different fields can be compared record by record
  auto merge_checks = [&rep](const Report& r, const std::string& prefix) {
    for (const auto& c : r.checks()) rep.add(prefix + c.name, c.passed, c.detail);
  };
  merge_checks(twist_report(map_indices(rt.twist.element(), g, sub.to_parent)), "twist ");
  auto j = verify_twist(map_indices(rt.twist.element(), g, sub.to_parent));
  auto r = r_matrix(j) * r_u(g, q.u);
  rep.merge(verify_triangular(j, r), "triangular ");

  auto s = twisted_antipode(j);
  auto u = drinfeld_element(r, s);
  const bool u_ok = u == TensorElement::basis(g, {q.u});
  rep.add("drinfeld element", u_ok, u_ok ? "" : "got " + u.to_string());
  merge_checks(drinfeld_report(u, j), "drinfeld ");
  const Scalar trace = regular_trace(u);
  const Scalar expect_trace = Scalar::integer(q.u == g->identity() ? n : 0);
  rep.add("regular trace", field.coerce(trace) == field.coerce(expect_trace), "trace " + trace.to_string());

  auto gens = q.h;
  gens.push_back(q.u);
  auto part = subgroup_generated(*g, gens);
  rep.record("minimal part order", static_cast<long>(part.size()));
  // the legs of R span k[<H, u>]
  std::vector<char> in_part(n, 0);
  for (int x : part) in_part[x] = 1;
  bool supported = true;
  for (const auto& [k, c] : r.terms()) supported = supported && in_part[r.slot(k, 0)] && in_part[r.slot(k, 1)];
  const size_t lr = leg_rank(r);
  rep.record("leg rank", static_cast<long>(lr));
  rep.add("minimal part", supported && lr == part.size(),
          "leg rank " + std::to_string(lr) + ", |<H,u>| = " + std::to_string(part.size()));
  const bool minimal = is_minimal_datum(g, q.h, q.u, r);
  rep.record("minimal", minimal ? "yes" : "no");
  const bool solvable = is_solvable(*g, part);
  rep.add("solvable", solvable, "<H, u> of order " + std::to_string(part.size()));

  const size_t grouplikes = count_grouplikes(j);
  rep.record("grouplikes", static_cast<long>(grouplikes));
  const bool trivial_j = j.element() == TensorElement::unit(g, 2);
  rep.add("grouplikes", n < 2 || (trivial_j ? grouplikes == static_cast<size_t>(n) : grouplikes >= 2),
          std::to_string(grouplikes) + " grouplikes");

  auto m = dual_movshev(rt.twist);
  rep.merge(certify_simple(m), "movshev ");
  rep.merge(certify_regular_action(m), "movshev ");

  return TriangularHopfDatum{q,       std::move(sub), std::move(j), rt.twist, rt.candidate, std::move(r), std::move(u),
                             std::move(part), minimal, grouplikes, solvable, false, std::move(rep)};
}

std::vector<Quadruple> enumerate_quadruple_inputs(int n, const Field& field, bool dedup) {
  if (n < 1 || n > 32) throw std::invalid_argument("enumeration supports 1 <= |G| <= 32");
  if (field.is_prime() && n % static_cast<long>(field.characteristic()) == 0)
    throw std::invalid_argument("characteristic divides the group order");
  dedup = dedup && n <= 16;
  std::map<int, std::vector<Seed>> seeds;
  std::vector<Scalar> values;
  std::vector<Quadruple> out;
  for (const auto& cg : catalog_of_order(n)) {
    const auto& g = cg.group;
    auto subs = all_subgroups(*g);
    std::stable_sort(subs.begin(), subs.end(), [](const ElementSet& a, const ElementSet& b) { return a.size() < b.size(); });
    std::map<ElementSet, size_t> index_of;
    for (size_t i = 0; i < subs.size(); ++i) index_of[subs[i]] = i;

    std::vector<Subgroup> made(subs.size());
    std::vector<std::optional<ClassList>> classes(subs.size());
    for (size_t i = 0; i < subs.size(); ++i) {
      int d = 0;
      if (!is_perfect_square(static_cast<int>(subs[i].size()), d)) continue;
      made[i] = make_subgroup(*g, subs[i]);
      ClassList cl;
      if (d == 1) {
        cl.reps.push_back(lift_projective(made[i].group, {Matrix::identity(1)}));
        cl.keys.push_back(CommutatorKey{0});
      } else {
        if (!seeds.count(d)) seeds[d] = heisenberg_seeds(d, field, values);
        cl = classes_on(made[i].group, seeds[d]);
      }
      classes[i] = std::move(cl);
    }
    const auto us = central_involutions(*g);
    std::vector<std::vector<int>> autos;
    if (dedup) autos = automorphisms(*g);

    std::set<std::tuple<size_t, int, int>> seen;
    for (size_t i = 0; i < subs.size(); ++i) {
      if (!classes[i]) continue;
      for (size_t k = 0; k < classes[i]->reps.size(); ++k)
        for (int u : us) {
          if (seen.count({i, static_cast<int>(k), u})) continue;
          out.push_back(Quadruple{g, subs[i], classes[i]->reps[k], u});
          if (!dedup) continue;
          const auto& src = made[i];
          const auto& c = classes[i]->reps[k].cocycle;
          const auto& key = classes[i]->keys[k];
          for (const auto& sigma : autos) {
            ElementSet image;
            for (int x : subs[i]) image.push_back(sigma[x]);
            std::sort(image.begin(), image.end());
            const size_t j = index_of.at(image);
            const auto& dst = made[j];
            // transported cocycle on sigma(H): c'(x', y') = c(sigma^-1 x', sigma^-1 y')
            std::vector<int> back(dst.group->order());
            for (int t = 0; t < dst.group->order(); ++t) {
              const int parent = dst.to_parent[t];
              int pre = 0;
              for (int x : subs[i])
                if (sigma[x] == parent) pre = x;
              back[t] = src.from_parent(pre);
            }
            const int kk = classes[j]->abelian ? classes[j]->find_key(pull_back_key(key, src.group->order(), back))
                                               : classes[j]->find_cocycle(pull_back(c, dst.group, back));
            if (kk < 0) throw TheoremViolation("automorphism maps a nondegenerate class outside the enumerated list");
            seen.insert({j, kk, sigma[u]});
          }
        }
    }
  }
  return out;
}

std::vector<TriangularHopfDatum> enumerate_quadruples(int n, const Field& field, bool dedup, std::uint64_t seed) {
  std::vector<TriangularHopfDatum> out;
  for (auto& q : enumerate_quadruple_inputs(n, field, dedup)) {
    out.push_back(assign_datum(q, seed));
    out.back().deduplicated = dedup && n <= 16;
  }
  return out;
}

Report char_p_mirror(const TriangularHopfDatum& d, std::uint64_t p, std::uint64_t seed) {
  const int n = d.quad.g->order();
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (static_cast<std::uint64_t>(n) % p == 0)
    throw std::invalid_argument("characteristic " + std::to_string(p) + " divides |G| = " + std::to_string(n));
  const Field source = field_of(scalars_of(d.quad.v));
  if (source.is_prime()) throw std::invalid_argument("datum is already over a prime field");
  const int conductor = source.root_order();
  if ((p - 1) % static_cast<std::uint64_t>(conductor) != 0)
    throw std::invalid_argument("p must be 1 mod " + std::to_string(conductor));
  const Field fp = Field::make(FieldSpec::prime(p, conductor));

  auto mats = d.quad.v.matrices;
  for (auto& m : mats)
    for (size_t i = 0; i < m.rows(); ++i)
      for (size_t j = 0; j < m.cols(); ++j) m(i, j) = fp.coerce(m(i, j));
  Quadruple q = d.quad;
  q.v = lift_projective(q.v.group, std::move(mats));
  auto mirror = assign_datum(q, seed);

  Report rep("characteristic " + std::to_string(p));
  const auto& a = d.report;
  const auto& b = mirror.report;
  bool same_checks = a.checks().size() == b.checks().size();
  std::string witness;
  for (size_t i = 0; same_checks && i < a.checks().size(); ++i)
    if (a.checks()[i].name != b.checks()[i].name || a.checks()[i].passed != b.checks()[i].passed) {
      same_checks = false;
      witness = a.checks()[i].name;
    }
  rep.add("certificates agree", same_checks, witness);
  const bool same_values = a.values() == b.values();
  witness.clear();
  if (!same_values)
    for (size_t i = 0; i < std::min(a.values().size(), b.values().size()); ++i)
      if (a.values()[i] != b.values()[i]) {
        witness = a.values()[i].first + ": " + a.values()[i].second + " vs " + b.values()[i].second;
        break;
      }
  rep.add("invariants agree", same_values, witness);
  rep.add("mirror passes", b.passed(), b.passed() ? "" : b.first_failure()->name);
  return rep;
}

std::string catalog_name(const FiniteGroup& g) {
  for (const auto& cg : catalog_of_order(g.order()))
    if (are_isomorphic(*cg.group, g)) return cg.name;
  return "?";
}

}  // namespace hopftwist
