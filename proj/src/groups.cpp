#include "hopftwist/groups.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace hopftwist {

namespace {

std::string join_tuple(const std::vector<int>& t) {
  if (t.size() == 1) return std::to_string(t[0]);
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

std::vector<int> order_census(const FiniteGroup& g) {
  std::vector<int> c(g.order() + 1, 0);
  for (int a = 0; a < g.order(); ++a) ++c[element_order(g, a)];
  return c;
}

}  // namespace

FiniteGroup::FiniteGroup(int order, std::vector<int> table, std::vector<std::string> labels, std::string name)
    : n_(order), table_(std::move(table)), labels_(std::move(labels)), name_(std::move(name)) {
  if (n_ < 1) throw GroupError("group order must be positive");
  if (table_.size() != static_cast<size_t>(n_) * n_) throw GroupError("multiplication table has the wrong size");
  for (int v : table_)
    if (v < 0 || v >= n_) throw GroupError("multiplication table entry out of range");
  for (int a = 0; a < n_; ++a) {
    std::vector<char> row(n_, 0), col(n_, 0);
    for (int b = 0; b < n_; ++b) {
      if (row[mul(a, b)]++) throw GroupError("table is not a Latin square (row " + std::to_string(a) + ")");
      if (col[mul(b, a)]++) throw GroupError("table is not a Latin square (column " + std::to_string(a) + ")");
    }
  }
  e_ = -1;
  for (int a = 0; a < n_ && e_ < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < n_ && ok; ++b) ok = mul(a, b) == b && mul(b, a) == b;
    if (ok) e_ = a;
  }
  if (e_ < 0) throw GroupError("table has no identity element");
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw GroupError("table is not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                           std::to_string(c) + ")");
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == e_) inv_[a] = b;
  if (labels_.empty()) {
    for (int a = 0; a < n_; ++a) labels_.push_back(std::to_string(a));
  } else if (static_cast<int>(labels_.size()) != n_) {
    throw GroupError("label count does not match the group order");
  }
}

int FiniteGroup::power(int a, long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  int r = e_;
  int base = a;
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

std::optional<int> FiniteGroup::find_label(const std::string& l) const {
  for (int a = 0; a < n_; ++a)
    if (labels_[a] == l) return a;
  return std::nullopt;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FiniteGroup::exponent() const {
  long e = 1;
  for (int a = 0; a < n_; ++a) e = lcm_long(e, element_order(*this, a));
  return static_cast<int>(e);
}

AbelianGroup::AbelianGroup(std::vector<int> factors) : factors_(std::move(factors)) {
  factors_.erase(std::remove(factors_.begin(), factors_.end(), 1), factors_.end());
  for (int d : factors_)
    if (d < 1) throw GroupError("invariant factors must be positive");
  order_ = 1;
  long ex = 1;
  for (int d : factors_) {
    order_ *= d;
    ex = lcm_long(ex, d);
  }
  exponent_ = static_cast<int>(ex);
  std::vector<int> table(static_cast<size_t>(order_) * order_);
  std::vector<std::string> labels;
  for (int a = 0; a < order_; ++a) {
    labels.push_back(join_tuple(factors_.empty() ? std::vector<int>{0} : tuple(a)));
    for (int b = 0; b < order_; ++b) table[static_cast<size_t>(a) * order_ + b] = add(a, b);
  }
  std::string name;
  for (size_t i = 0; i < factors_.size(); ++i) name += (i ? "xZ" : "Z") + std::to_string(factors_[i]);
  if (name.empty()) name = "Z1";
  group_ = std::make_shared<FiniteGroup>(order_, std::move(table), std::move(labels), name);
}

std::vector<int> AbelianGroup::tuple(int index) const {
  std::vector<int> t(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i) {
    t[i] = index % factors_[i];
    index /= factors_[i];
  }
  return t;
}

int AbelianGroup::index(const std::vector<int>& t) const {
  if (t.size() != factors_.size()) throw GroupError("tuple length does not match the rank");
  int idx = 0;
  for (size_t i = factors_.size(); i-- > 0;) {
    int v = ((t[i] % factors_[i]) + factors_[i]) % factors_[i];
    idx = idx * factors_[i] + v;
  }
  return idx;
}

int AbelianGroup::add(int a, int b) const {
  int idx = 0, mult = 1;
  for (int d : factors_) {
    int s = (a % d + b % d) % d;
    idx += s * mult;
    mult *= d;
    a /= d;
    b /= d;
  }
  return idx;
}

int AbelianGroup::neg(int a) const {
  int idx = 0, mult = 1;
  for (int d : factors_) {
    idx += ((d - a % d) % d) * mult;
    mult *= d;
    a /= d;
  }
  return idx;
}

std::string GroupAction::validate() const {
  if (!acting || !target) return "action is missing its groups";
  const int n = acting->order(), m = target->order();
  if (static_cast<int>(images.size()) != n) return "action table has the wrong number of rows";
  for (int g = 0; g < n; ++g) {
    if (static_cast<int>(images[g].size()) != m) return "action row has the wrong length";
    std::vector<char> seen(m, 0);
    for (int a = 0; a < m; ++a) {
      int v = images[g][a];
      if (v < 0 || v >= m || seen[v]++) return "element " + acting->label(g) + " does not act by a bijection";
    }
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (images[g][target->add(a, b)] != target->add(images[g][a], images[g][b]))
          return "element " + acting->label(g) + " does not act by an automorphism";
  }
  for (int a = 0; a < m; ++a)
    if (images[acting->identity()][a] != a) return "identity does not act trivially";
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int a = 0; a < m; ++a)
        if (images[acting->mul(g, h)][a] != images[g][images[h][a]])
          return "action is not compatible with multiplication at (" + acting->label(g) + "," + acting->label(h) + ")";
  return {};
}

GroupAction trivial_action(const GroupPtr& g, const std::shared_ptr<const AbelianGroup>& a) {
  GroupAction act{g, a, {}};
  std::vector<int> id(a->order());
  std::iota(id.begin(), id.end(), 0);
  act.images.assign(g->order(), id);
  return act;
}

Pairing::Pairing(std::shared_ptr<const AbelianGroup> a) : a_(std::move(a)) {
  const int n = a_->order(), e = a_->exponent();
  table_.resize(static_cast<size_t>(n) * n);
  const auto& f = a_->factors();
  for (int x = 0; x < n; ++x) {
    auto tx = a_->tuple(x);
    for (int y = 0; y < n; ++y) {
      auto ty = a_->tuple(y);
      long k = 0;
      for (size_t i = 0; i < f.size(); ++i) k += static_cast<long>(tx[i]) * ty[i] * (e / f[i]);
      table_[static_cast<size_t>(x) * n + y] = static_cast<int>(k % e);
    }
  }
}

Scalar Pairing::value(int a, int b, const Field& field) const { return field.root_power(root_order(), exponent(a, b)); }

bool Pairing::is_nondegenerate() const {
  const int n = a_->order();
  for (int a = 1; a < n; ++a) {
    bool trivial = true;
    for (int b = 0; b < n && trivial; ++b) trivial = exponent(a, b) == 0;
    if (trivial) return false;
  }
  return true;
}

Scalar pairing_value(const Pairing& p, int a, int b, const Field& field) { return p.value(a, b, field); }

std::shared_ptr<const AbelianGroup> make_cyclic(int n) {
  if (n < 1) throw GroupError("cyclic group order must be positive");
  return std::make_shared<AbelianGroup>(std::vector<int>{n});
}

std::shared_ptr<const AbelianGroup> make_abelian(std::vector<int> factors) {
  return std::make_shared<AbelianGroup>(std::move(factors));
}

std::shared_ptr<const AbelianGroup> dual_group(const AbelianGroup& a) { return make_abelian(a.factors()); }

GroupPtr direct_product(const FiniteGroup& g1, const FiniteGroup& g2) {
  const int n1 = g1.order(), n2 = g2.order(), n = n1 * n2;
  std::vector<int> table(static_cast<size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = "(" + g1.label(a % n1) + "," + g2.label(a / n1) + ")";
    for (int b = 0; b < n; ++b)
      table[static_cast<size_t>(a) * n + b] = g1.mul(a % n1, b % n1) + n1 * g2.mul(a / n1, b / n1);
  }
  return std::make_shared<FiniteGroup>(n, std::move(table), std::move(labels), g1.name() + "x" + g2.name());
}

GroupAction dual_action(const GroupAction& action, const Pairing& pairing) {
  const auto& A = *action.target;
  const int n = A.order();
  GroupAction out{action.acting, action.target, {}};
  out.images.assign(action.acting->order(), std::vector<int>(n));
  for (int g = 0; g < action.acting->order(); ++g) {
    const int ginv = action.acting->inv(g);
    for (int b = 0; b < n; ++b) {
      int found = -1;
      for (int c = 0; c < n && found < 0; ++c) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = pairing.exponent(a, c) == pairing.exponent(action.apply(ginv, a), b);
        if (ok) found = c;
      }
      if (found < 0) throw GroupError("dual action does not exist (degenerate pairing)");
      out.images[g][b] = found;
    }
  }
  return out;
}

SemidirectProduct semidirect_product(const GroupAction& action) {
  auto err = action.validate();
  if (!err.empty()) throw GroupError("invalid action: " + err);
  const auto& A = *action.target;
  const auto& G = *action.acting;
  const int m = A.order(), n = m * G.order();
  std::vector<int> table(static_cast<size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (int x = 0; x < n; ++x) {
    const int b = x % m, g = x / m;
    labels[x] = "[" + A.group()->label(b) + "|" + G.label(g) + "]";
    for (int y = 0; y < n; ++y) {
      const int b2 = y % m, g2 = y / m;
      table[static_cast<size_t>(x) * n + y] = A.add(b, action.apply(g, b2)) + m * G.mul(g, g2);
    }
  }
  SemidirectProduct sp;
  sp.group = std::make_shared<FiniteGroup>(n, std::move(table), std::move(labels), A.group()->name() + "|x" + G.name());
  sp.action = action;
  return sp;
}

GroupPtr make_dihedral(int n) {
  if (n < 1) throw GroupError("dihedral parameter must be positive");
  const int order = 2 * n;
  std::vector<int> table(static_cast<size_t>(order) * order);
  std::vector<std::string> labels(order);
  for (int x = 0; x < order; ++x) {
    const int a = x % n, i = x / n;
    labels[x] = "r" + std::to_string(a) + (i ? "s" : "");
    for (int y = 0; y < order; ++y) {
      const int b = y % n, j = y / n;
      const int k = ((a + (i ? -b : b)) % n + n) % n;
      table[static_cast<size_t>(x) * order + y] = k + n * ((i + j) % 2);
    }
  }
  return std::make_shared<FiniteGroup>(order, std::move(table), std::move(labels), "D" + std::to_string(n));
}

GroupPtr make_quaternion() {
  // units 1, i, j, k with signs; index = unit + 4 * (sign negative)
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static const char* names[4] = {"1", "i", "j", "k"};
  std::vector<int> table(64);
  std::vector<std::string> labels(8);
  for (int x = 0; x < 8; ++x) {
    labels[x] = std::string(x >= 4 ? "-" : "") + names[x % 4];
    for (int y = 0; y < 8; ++y) {
      const int u = unit_mul[x % 4][y % 4];
      const int s = (x / 4 + y / 4 + sign_mul[x % 4][y % 4]) % 2;
      table[x * 8 + y] = u + 4 * s;
    }
  }
  return std::make_shared<FiniteGroup>(8, std::move(table), std::move(labels), "Q8");
}

GroupPtr group_from_permutations(const std::vector<std::vector<int>>& perms, const std::string& name) {
  const int n = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[perms[i]] = i;
  if (static_cast<int>(index.size()) != n) throw GroupError("repeated permutation");
  std::vector<int> table(static_cast<size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    std::string l = "[";
    for (size_t k = 0; k < perms[a].size(); ++k) l += std::to_string(perms[a][k]);
    labels[a] = l + "]";
    for (int b = 0; b < n; ++b) {
      std::vector<int> c(perms[a].size());
      for (size_t k = 0; k < c.size(); ++k) c[k] = perms[a][perms[b][k]];
      auto it = index.find(c);
      if (it == index.end()) throw GroupError("permutation set is not closed under composition");
      table[static_cast<size_t>(a) * n + b] = it->second;
    }
  }
  return std::make_shared<FiniteGroup>(n, std::move(table), std::move(labels), name);
}

namespace {

int parity(const std::vector<int>& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2;
}

std::vector<std::vector<int>> permutations_of(int n, bool even_only) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    if (!even_only || parity(p) == 0) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

GroupPtr make_symmetric(int n) {
  if (n < 1 || n > 6) throw GroupError("symmetric group degree must be in 1..6");
  return group_from_permutations(permutations_of(n, false), "S" + std::to_string(n));
}

GroupPtr make_alternating(int n) {
  if (n < 1 || n > 6) throw GroupError("alternating group degree must be in 1..6");
  return group_from_permutations(permutations_of(n, true), "A" + std::to_string(n));
}

ElementSet center(const FiniteGroup& g) {
  ElementSet out;
  for (int a = 0; a < g.order(); ++a) {
    bool central = true;
    for (int b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) out.push_back(a);
  }
  return out;
}

ElementSet subgroup_generated(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> members{g.identity()};
  in[g.identity()] = 1;
  for (size_t i = 0; i < members.size(); ++i) {
    for (int s : gens) {
      if (s < 0 || s >= g.order()) throw GroupError("generator index out of range");
      int y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

int element_order(const FiniteGroup& g, int a) {
  int k = 1;
  for (int x = a; x != g.identity(); x = g.mul(x, a)) ++k;
  return k;
}

bool is_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (s.empty()) return false;
  std::vector<char> in(g.order(), 0);
  for (int a : s) in[a] = 1;
  if (!in[g.identity()]) return false;
  for (int a : s)
    for (int b : s)
      if (!in[g.mul(a, g.inv(b))]) return false;
  return true;
}

ElementSet derived_subgroup(const FiniteGroup& g, const ElementSet& h) {
  std::set<int> comms;
  for (int a : h)
    for (int b : h) comms.insert(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  return subgroup_generated(g, std::vector<int>(comms.begin(), comms.end()));
}

bool is_solvable(const FiniteGroup& g, const ElementSet& h) {
  ElementSet cur = h;
  while (cur.size() > 1) {
    ElementSet next = derived_subgroup(g, cur);
    if (next.size() == cur.size()) return false;
    cur = std::move(next);
  }
  return true;
}

bool is_solvable(const FiniteGroup& g) {
  ElementSet all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return is_solvable(g, all);
}

std::vector<ElementSet> all_subgroups(const FiniteGroup& g) {
  std::set<ElementSet> found;
  std::vector<ElementSet> queue{{g.identity()}};
  found.insert(queue[0]);
  for (size_t i = 0; i < queue.size(); ++i) {
    const ElementSet cur = queue[i];
    std::vector<char> in(g.order(), 0);
    for (int a : cur) in[a] = 1;
    for (int x = 0; x < g.order(); ++x) {
      if (in[x]) continue;
      std::vector<int> gens = cur;
      gens.push_back(x);
      ElementSet s = subgroup_generated(g, gens);
      if (found.insert(s).second) queue.push_back(std::move(s));
    }
  }
  std::vector<ElementSet> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) { return a.size() < b.size(); });
  return out;
}

int Subgroup::from_parent(int parent_index) const {
  auto it = std::find(to_parent.begin(), to_parent.end(), parent_index);
  if (it == to_parent.end()) throw GroupError("element is not in the subgroup");
  return static_cast<int>(it - to_parent.begin());
}

Subgroup make_subgroup(const FiniteGroup& g, const ElementSet& elements) {
  if (!is_subgroup(g, elements)) throw GroupError("element set is not a subgroup");
  Subgroup s;
  s.to_parent = elements;
  // identity first so that index 0 is the identity
  std::stable_partition(s.to_parent.begin(), s.to_parent.end(), [&](int a) { return a == g.identity(); });
  const int n = static_cast<int>(s.to_parent.size());
  std::vector<int> local(g.order(), -1);
  for (int i = 0; i < n; ++i) local[s.to_parent[i]] = i;
  std::vector<int> table(static_cast<size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = g.label(s.to_parent[i]);
    for (int j = 0; j < n; ++j) table[static_cast<size_t>(i) * n + j] = local[g.mul(s.to_parent[i], s.to_parent[j])];
  }
  s.group = std::make_shared<FiniteGroup>(n, std::move(table), std::move(labels), g.name() + ".sub" + std::to_string(n));
  return s;
}

std::vector<int> generators(const FiniteGroup& g) {
  std::vector<int> elems(g.order());
  std::iota(elems.begin(), elems.end(), 0);
  std::vector<int> ord(g.order());
  for (int a = 0; a < g.order(); ++a) ord[a] = element_order(g, a);
  std::stable_sort(elems.begin(), elems.end(), [&](int a, int b) { return ord[a] > ord[b]; });
  std::vector<int> gens;
  ElementSet span{g.identity()};
  for (int a : elems) {
    if (static_cast<int>(span.size()) == g.order()) break;
    if (std::binary_search(span.begin(), span.end(), a)) continue;
    gens.push_back(a);
    span = subgroup_generated(g, gens);
  }
  return gens;
}

std::vector<std::vector<int>> isomorphisms(const FiniteGroup& src, const FiniteGroup& dst, size_t limit) {
  std::vector<std::vector<int>> out;
  if (src.order() != dst.order()) return out;
  if (order_census(src) != order_census(dst)) return out;
  const int n = src.order();
  const auto gens = generators(src);
  std::vector<int> gen_order(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) gen_order[i] = element_order(src, gens[i]);
  std::vector<std::vector<int>> candidates(gens.size());
  for (size_t i = 0; i < gens.size(); ++i)
    for (int y = 0; y < n; ++y)
      if (element_order(dst, y) == gen_order[i]) candidates[i].push_back(y);

  std::vector<int> images(gens.size());
  std::function<bool(size_t)> rec = [&](size_t depth) -> bool {
    if (depth == gens.size()) {
      std::vector<int> phi(n, -1);
      std::vector<char> used(n, 0);
      phi[src.identity()] = dst.identity();
      used[dst.identity()] = 1;
      std::vector<int> order{src.identity()};
      for (size_t i = 0; i < order.size(); ++i) {
        const int x = order[i];
        for (size_t k = 0; k < gens.size(); ++k) {
          const int y = src.mul(x, gens[k]);
          const int img = dst.mul(phi[x], images[k]);
          if (phi[y] < 0) {
            if (used[img]) return false;
            phi[y] = img;
            used[img] = 1;
            order.push_back(y);
          } else if (phi[y] != img) {
            return false;
          }
        }
      }
      out.push_back(std::move(phi));
      return limit != 0 && out.size() >= limit;
    }
    for (int c : candidates[depth]) {
      images[depth] = c;
      if (rec(depth + 1)) return true;
    }
    return false;
  };
  rec(0);
  return out;
}

std::vector<std::vector<int>> automorphisms(const FiniteGroup& g) { return isomorphisms(g, g); }

bool are_isomorphic(const FiniteGroup& a, const FiniteGroup& b) { return !isomorphisms(a, b, 1).empty(); }

namespace {

void invariant_factor_lists(int n, int min_factor, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  // factors listed d1 | d2 | ... ; we build from the smallest
  if (n == 1) {
    out.push_back(cur);
    return;
  }
  for (int d = std::max(2, min_factor); d <= n; ++d) {
    if (n % d != 0) continue;
    if (!cur.empty() && d % cur.back() != 0) continue;
    // remaining n/d must be expressible by multiples of d
    int rest = n / d;
    if (rest != 1 && rest % d != 0) continue;
    cur.push_back(d);
    invariant_factor_lists(rest, d, cur, out);
    cur.pop_back();
  }
}

GroupPtr named(GroupPtr g, const std::string& name) {
  auto copy = std::make_shared<FiniteGroup>(*g);
  copy->set_name(name);
  return copy;
}

GroupPtr factor_group(const std::string& f) {
  if (f.empty()) throw GroupError("empty group name factor");
  if (f == "Q8") return make_quaternion();
  if (f == "V4") return named(make_abelian({2, 2})->group(), "V4");
  auto number = [&](size_t pos) {
    if (pos >= f.size()) throw GroupError("malformed group name: " + f);
    for (size_t i = pos; i < f.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(f[i]))) throw GroupError("malformed group name: " + f);
    return std::stoi(f.substr(pos));
  };
  switch (f[0]) {
    case 'Z': return make_cyclic(number(1))->group();
    case 'D': return make_dihedral(number(1));
    case 'S': return make_symmetric(number(1));
    case 'A': return make_alternating(number(1));
    default: throw GroupError("unknown group name: " + f);
  }
}

}  // namespace

std::optional<CatalogGroup> catalog_group(const std::string& name) {
  std::vector<std::string> factors;
  std::stringstream ss(name);
  std::string part;
  while (std::getline(ss, part, 'x')) factors.push_back(part);
  if (factors.empty()) return std::nullopt;
  try {
    // abelian products of cyclic factors use the invariant-factor indexing
    bool all_cyclic = std::all_of(factors.begin(), factors.end(), [](const std::string& f) { return !f.empty() && f[0] == 'Z'; });
    GroupPtr g;
    if (all_cyclic) {
      std::vector<int> d;
      for (auto& f : factors) d.push_back(std::stoi(f.substr(1)));
      g = make_abelian(d)->group();
    } else {
      g = factor_group(factors[0]);
      for (size_t i = 1; i < factors.size(); ++i) g = direct_product(*g, *factor_group(factors[i]));
    }
    return CatalogGroup{name, named(g, name)};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::vector<CatalogGroup> group_catalog(int max_order) {
  if (max_order < 1) return {};
  std::vector<std::string> names;
  for (int n = 1; n <= max_order; ++n) {
    std::vector<std::vector<int>> lists;
    std::vector<int> cur;
    invariant_factor_lists(n, 2, cur, lists);
    for (auto& l : lists) {
      std::string s;
      for (size_t i = 0; i < l.size(); ++i) s += (i ? "xZ" : "Z") + std::to_string(l[i]);
      names.push_back(s.empty() ? "Z1" : s);
    }
  }
  std::vector<std::string> nonabelian = {"S3"};
  for (int n = 4; 2 * n <= max_order; ++n) nonabelian.push_back("D" + std::to_string(n));
  nonabelian.push_back("Q8");
  nonabelian.push_back("A4");
  nonabelian.push_back("S4");
  std::vector<CatalogGroup> out;
  auto try_add = [&](const std::string& name) {
    auto cg = catalog_group(name);
    if (!cg || cg->group->order() > max_order) return;
    for (const auto& existing : out)
      if (existing.group->order() == cg->group->order() && are_isomorphic(*existing.group, *cg->group)) return;
    out.push_back(*cg);
  };
  for (auto& n : names) try_add(n);
  std::vector<std::string> base_nonabelian;
  for (auto& n : nonabelian) {
    auto cg = catalog_group(n);
    if (cg && cg->group->order() <= max_order) base_nonabelian.push_back(n);
  }
  for (auto& n : base_nonabelian) try_add(n);
  for (auto& n : base_nonabelian)
    for (auto& a : names) {
      if (a == "Z1") continue;
      auto cg = catalog_group(n);
      auto ca = catalog_group(a);
      if (cg->group->order() * ca->group->order() > max_order) continue;
      try_add(n + "x" + a);
    }
  for (size_t i = 0; i < base_nonabelian.size(); ++i)
    for (size_t j = i; j < base_nonabelian.size(); ++j) {
      auto a = catalog_group(base_nonabelian[i]);
      auto b = catalog_group(base_nonabelian[j]);
      if (a->group->order() * b->group->order() <= max_order) try_add(base_nonabelian[i] + "x" + base_nonabelian[j]);
    }
  std::stable_sort(out.begin(), out.end(),
                   [](const CatalogGroup& a, const CatalogGroup& b) { return a.group->order() < b.group->order(); });
  return out;
}

std::vector<std::vector<int>> abelian_invariant_factors(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (n >= 1) invariant_factor_lists(n, 2, cur, out);
  return out;
}

std::vector<GroupAction> all_actions(const GroupPtr& g, const std::shared_ptr<const AbelianGroup>& a) {
  const auto autos = automorphisms(*a->group());
  const auto gens = generators(*g);
  const int n = g->order();
  const int m = a->order();
  std::vector<GroupAction> out;
  std::vector<size_t> pick(gens.size(), 0);
  auto compose = [&](const std::vector<int>& f, const std::vector<int>& h) {
    std::vector<int> c(m);
    for (int x = 0; x < m; ++x) c[x] = f[h[x]];
    return c;
  };
  std::vector<int> id(m);
  for (int x = 0; x < m; ++x) id[x] = x;
  while (true) {
    std::vector<std::vector<int>> img(n);
    img[g->identity()] = id;
    std::vector<int> queue{g->identity()};
    bool ok = true;
    for (size_t q = 0; q < queue.size() && ok; ++q)
      for (size_t k = 0; k < gens.size() && ok; ++k) {
        const int x = queue[q];
        const int y = g->mul(gens[k], x);
        auto c = compose(autos[pick[k]], img[x]);
        if (img[y].empty()) {
          img[y] = std::move(c);
          queue.push_back(y);
        } else if (img[y] != c) {
          ok = false;
        }
      }
    if (ok) {
      GroupAction act{g, a, std::move(img)};
      if (act.validate().empty()) out.push_back(std::move(act));
    }
    size_t k = 0;
    while (k < pick.size() && ++pick[k] == autos.size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  return out;
}

}  // namespace hopftwist
