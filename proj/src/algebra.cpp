#include "hopftwist/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>
#include <unordered_map>

namespace hopftwist {

TensorElement::TensorElement(GroupPtr group, int rank) : group_(std::move(group)), rank_(rank) {
  if (!group_) throw AlgebraError("tensor element needs a base group");
  if (rank < 1 || rank > 3) throw AlgebraError("tensor rank must be 1, 2 or 3");
}

TensorElement TensorElement::basis(GroupPtr group, const std::vector<int>& index, const Scalar& c) {
  TensorElement t(std::move(group), static_cast<int>(index.size()));
  t.add_term(index, c);
  return t;
}

TensorElement TensorElement::unit(GroupPtr group, int rank) {
  const int e = group->identity();
  return basis(group, std::vector<int>(rank, e));
}

TensorElement::Key TensorElement::pack(const std::vector<int>& index) const {
  if (static_cast<int>(index.size()) != rank_) throw AlgebraError("index tuple length does not match tensor rank");
  const Key n = static_cast<Key>(group_->order());
  Key k = 0;
  for (int s = rank_; s-- > 0;) {
    if (index[s] < 0 || index[s] >= group_->order()) throw AlgebraError("group element index out of range");
    k = k * n + static_cast<Key>(index[s]);
  }
  return k;
}

std::vector<int> TensorElement::unpack(Key key) const {
  std::vector<int> out(rank_);
  const Key n = static_cast<Key>(group_->order());
  for (int s = 0; s < rank_; ++s) {
    out[s] = static_cast<int>(key % n);
    key /= n;
  }
  return out;
}

int TensorElement::slot(Key key, int s) const {
  const Key n = static_cast<Key>(group_->order());
  for (int i = 0; i < s; ++i) key /= n;
  return static_cast<int>(key % n);
}

Scalar TensorElement::coefficient(const std::vector<int>& index) const {
  auto it = terms_.find(pack(index));
  return it == terms_.end() ? Scalar() : it->second;
}

void TensorElement::add_term(const std::vector<int>& index, const Scalar& c) { add_key(pack(index), c); }

void TensorElement::add_key(Key key, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TensorElement::check_compatible(const TensorElement& o) const {
  if (rank_ != o.rank_) throw AlgebraError("tensor rank mismatch");
  if (group_ != o.group_ && !(*group_ == *o.group_)) throw AlgebraError("tensor base group mismatch");
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  check_compatible(o);
  for (const auto& [k, c] : o.terms_) add_key(k, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  check_compatible(o);
  for (const auto& [k, c] : o.terms_) add_key(k, -c);
  return *this;
}

TensorElement TensorElement::operator-() const {
  TensorElement out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

TensorElement operator*(const Scalar& s, const TensorElement& a) {
  TensorElement out(a.group_, a.rank_);
  if (s.is_zero()) return out;
  for (const auto& [k, c] : a.terms_) out.terms_.emplace_hint(out.terms_.end(), k, s * c);
  return out;
}

namespace {

using i128 = __int128;

// Coefficients of one factor over a common integer scale: value = sum
// num * zeta_L^pow / den (cyclotomic) or a residue mod p.
struct IntegerForm {
  std::vector<std::vector<std::pair<int, std::int64_t>>> terms;
  mpz_class den = 1;
  double max_abs = 0;
  size_t max_nonzero = 0;
};

std::optional<IntegerForm> integer_form(const std::vector<const Scalar*>& cs, int L) {
  IntegerForm f;
  std::vector<std::vector<mpq_class>> raw;
  raw.reserve(cs.size());
  for (const Scalar* c : cs) {
    raw.push_back(c->coefficients_in(L));
    for (const auto& q : raw.back())
      if (q != 0) {
        mpz_lcm(f.den.get_mpz_t(), f.den.get_mpz_t(), q.get_den_mpz_t());
        if (mpz_sizeinbase(f.den.get_mpz_t(), 2) > 62) return std::nullopt;
      }
  }
  f.terms.resize(cs.size());
  for (size_t i = 0; i < raw.size(); ++i) {
    for (size_t k = 0; k < raw[i].size(); ++k) {
      if (raw[i][k] == 0) continue;
      mpz_class num = raw[i][k].get_num() * (f.den / raw[i][k].get_den());
      if (!num.fits_slong_p()) return std::nullopt;
      const long v = num.get_si();
      f.max_abs = std::max(f.max_abs, std::abs(static_cast<double>(v)));
      f.terms[i].emplace_back(static_cast<int>(k), v);
    }
    f.max_nonzero = std::max(f.max_nonzero, f.terms[i].size());
  }
  return f;
}

mpz_class to_mpz(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  mpz_class hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
  mpz_class out = hi << 64;
  out += mpz_class(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  return neg ? mpz_class(-out) : out;
}

// Output slot per packed key, dense when the key space is small.
class SlotIndex {
 public:
  SlotIndex(TensorElement::Key space, size_t expected) : dense_(space <= (TensorElement::Key{1} << 22)) {
    if (dense_)
      table_.assign(static_cast<size_t>(space), -1);
    else
      map_.reserve(expected * 2);
  }
  // Returns the slot and whether it is new.
  std::pair<size_t, bool> get(TensorElement::Key key) {
    if (dense_) {
      auto& s = table_[static_cast<size_t>(key)];
      if (s >= 0) return {static_cast<size_t>(s), false};
      s = static_cast<long>(keys.size());
    } else {
      auto [it, inserted] = map_.try_emplace(key, keys.size());
      if (!inserted) return {it->second, false};
    }
    keys.push_back(key);
    return {keys.size() - 1, true};
  }
  std::vector<TensorElement::Key> keys;

 private:
  bool dense_;
  std::vector<long> table_;
  std::unordered_map<TensorElement::Key, size_t> map_;
};

}  // namespace

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  a.check_compatible(b);
  TensorElement out(a.group_, a.rank_);
  if (a.is_zero() || b.is_zero()) return out;
  const auto& g = *a.group_;
  const int r = a.rank_;
  const TensorElement::Key n = static_cast<TensorElement::Key>(g.order());
  std::vector<std::vector<int>> ia, ib;
  std::vector<const Scalar*> ca, cb;
  for (const auto& [k, c] : a.terms_) {
    ia.push_back(a.unpack(k));
    ca.push_back(&c);
  }
  for (const auto& [k, c] : b.terms_) {
    ib.push_back(b.unpack(k));
    cb.push_back(&c);
  }
  // flat slot data: row pointers into the multiplication table for a, column
  // indices for b
  const int* table = g.table().data();
  std::vector<const int*> rows(ia.size() * r);
  std::vector<int> cols(ib.size() * r);
  std::vector<TensorElement::Key> weight(r);
  for (int s = 0; s < r; ++s) weight[s] = s == 0 ? 1 : weight[s - 1] * n;
  for (size_t x = 0; x < ia.size(); ++x)
    for (int s = 0; s < r; ++s) rows[x * r + s] = table + static_cast<size_t>(ia[x][s]) * n;
  for (size_t y = 0; y < ib.size(); ++y)
    for (int s = 0; s < r; ++s) cols[y * r + s] = ib[y][s];
  auto key_of = [&](size_t x, size_t y) {
    const int* const* rx = rows.data() + x * r;
    const int* cy = cols.data() + y * r;
    TensorElement::Key key = 0;
    for (int s = 0; s < r; ++s) key += static_cast<TensorElement::Key>(rx[s][cy[s]]) * weight[s];
    return key;
  };
  // slot indices in increasing key order, so output goes in with end hints
  auto by_key = [](const std::vector<TensorElement::Key>& keys) {
    std::vector<size_t> order(keys.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t u, size_t v) { return keys[u] < keys[v]; });
    return order;
  };
  TensorElement::Key space = 1;
  for (int s = 0; s < r; ++s) space *= n;

  // Large products run on machine integers; small ones and anything that
  // might overflow take the generic path below.
  const bool large = ia.size() * ib.size() >= 4096;
  bool all_prime = true, any_prime = false;
  long L = 1;
  for (const auto* v : {&ca, &cb})
    for (const Scalar* c : *v) {
      all_prime = all_prime && c->is_prime_field();
      any_prime = any_prime || c->is_prime_field();
      if (!c->is_prime_field()) L = lcm_long(L, c->conductor());
    }
  if (large && all_prime) {
    const auto ctx = ca[0]->prime_context();
    const std::uint64_t p = ctx->p;
    bool same = true;
    for (const auto* v : {&ca, &cb})
      for (const Scalar* c : *v) same = same && c->modulus() == p;
    if (same) {
      SlotIndex slots(space, ia.size() * ib.size());
      std::vector<std::uint64_t> acc;
      for (size_t x = 0; x < ia.size(); ++x) {
        const std::uint64_t ax = ca[x]->residue_value();
        for (size_t y = 0; y < ib.size(); ++y) {
          auto [slot, fresh] = slots.get(key_of(x, y));
          if (fresh) acc.push_back(0);
          const auto prod = static_cast<unsigned __int128>(ax) * cb[y]->residue_value() % p;
          acc[slot] = static_cast<std::uint64_t>((acc[slot] + prod) % p);
        }
      }
      for (size_t s : by_key(slots.keys))
        if (acc[s] != 0)
          out.terms_.emplace_hint(out.terms_.end(), slots.keys[s],
                                  Scalar::residue(ctx, static_cast<std::int64_t>(acc[s])));
      return out;
    }
  }
  if (large && !any_prime && L <= 1024) {
    auto fa = integer_form(ca, static_cast<int>(L));
    auto fb = fa ? integer_form(cb, static_cast<int>(L)) : std::nullopt;
    const double bound = fa && fb ? fa->max_abs * fb->max_abs * static_cast<double>(fa->max_nonzero) *
                                        static_cast<double>(fb->max_nonzero) *
                                        static_cast<double>(std::min(ia.size(), ib.size()))
                                  : 0;
    if (fa && fb && bound < 0x1p120) {
      const size_t width = 2 * static_cast<size_t>(euler_phi(static_cast<int>(L))) - 1;
      SlotIndex slots(space, ia.size() * ib.size());
      std::vector<i128> acc;
      for (size_t x = 0; x < ia.size(); ++x) {
        const auto& tx = fa->terms[x];
        for (size_t y = 0; y < ib.size(); ++y) {
          auto [slot, fresh] = slots.get(key_of(x, y));
          if (fresh) acc.resize(acc.size() + width, 0);
          i128* dst = acc.data() + slot * width;
          for (const auto& [px, vx] : tx)
            for (const auto& [py, vy] : fb->terms[y]) dst[px + py] += static_cast<i128>(vx) * vy;
        }
      }
      const mpz_class den = fa->den * fb->den;
      std::vector<mpq_class> poly(width);
      for (size_t s : by_key(slots.keys)) {
        const i128* src = acc.data() + s * width;
        if (L == 1) {
          if (src[0] == 0) continue;
          mpq_class q(to_mpz(src[0]), den);
          q.canonicalize();
          out.terms_.emplace_hint(out.terms_.end(), slots.keys[s], Scalar::rational(q));
          continue;
        }
        bool zero = true;
        for (size_t k = 0; k < width; ++k) {
          zero = zero && src[k] == 0;
          poly[k] = src[k] == 0 ? mpq_class(0) : mpq_class(to_mpz(src[k]), den);
          poly[k].canonicalize();
        }
        if (zero) continue;
        auto c = Scalar::cyclotomic(static_cast<int>(L), poly);
        if (!c.is_zero()) out.terms_.emplace_hint(out.terms_.end(), slots.keys[s], std::move(c));
      }
      return out;
    }
  }

  std::unordered_map<TensorElement::Key, Scalar> acc;
  acc.reserve(ia.size() * ib.size() * 2);
  for (size_t x = 0; x < ia.size(); ++x)
    for (size_t y = 0; y < ib.size(); ++y) {
      auto [it, inserted] = acc.try_emplace(key_of(x, y), *ca[x] * *cb[y]);
      if (!inserted) it->second += *ca[x] * *cb[y];
    }
  for (auto& [k, c] : acc)
    if (!c.is_zero()) out.terms_.emplace(k, std::move(c));
  return out;
}

bool operator==(const TensorElement& a, const TensorElement& b) {
  if (a.rank_ != b.rank_ || a.group_order() != b.group_order()) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [k, c] : a.terms_) {
    if (it->first != k || it->second != c) return false;
    ++it;
  }
  return true;
}

std::vector<Scalar> TensorElement::coefficient_list() const {
  std::vector<Scalar> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_) out.push_back(c);
  return out;
}

std::string TensorElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*[";
    auto idx = unpack(k);
    for (int s = 0; s < rank_; ++s) os << (s ? "|" : "") << group_->label(idx[s]);
    os << "]";
  }
  return os.str();
}

TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b) { return a * b; }

std::optional<TensorDifference> first_difference(const TensorElement& a, const TensorElement& b) {
  auto ia = a.terms().begin(), ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end() || (ia != a.terms().end() && ia->first < ib->first))
      return TensorDifference{a.unpack(ia->first), ia->second, Scalar()};
    if (ia == a.terms().end() || ib->first < ia->first)
      return TensorDifference{b.unpack(ib->first), Scalar(), ib->second};
    if (ia->second != ib->second) return TensorDifference{a.unpack(ia->first), ia->second, ib->second};
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

std::string describe_difference(const TensorElement& a, const TensorElement& b) {
  auto d = first_difference(a, b);
  if (!d) return {};
  std::string idx = "[";
  for (size_t s = 0; s < d->index.size(); ++s) idx += (s ? "|" : "") + a.group()->label(d->index[s]);
  return idx + "]: lhs " + d->left.to_string() + " vs rhs " + d->right.to_string();
}

TensorElement coproduct_leg(const TensorElement& x, int slot) {
  if (slot < 0 || slot >= x.rank()) throw AlgebraError("coproduct slot out of range");
  if (x.rank() + 1 > 3) throw AlgebraError("coproduct would exceed rank 3");
  TensorElement out(x.group(), x.rank() + 1);
  for (const auto& [k, c] : x.terms()) {
    auto idx = x.unpack(k);
    idx.insert(idx.begin() + slot, idx[slot]);
    out.add_term(idx, c);
  }
  return out;
}

TensorElement counit_leg(const TensorElement& x, int slot) {
  if (slot < 0 || slot >= x.rank()) throw AlgebraError("counit slot out of range");
  if (x.rank() == 1) throw AlgebraError("counit of a rank-1 tensor is a scalar; use hopf_counit");
  TensorElement out(x.group(), x.rank() - 1);
  for (const auto& [k, c] : x.terms()) {
    auto idx = x.unpack(k);
    idx.erase(idx.begin() + slot);
    out.add_term(idx, c);
  }
  return out;
}

TensorElement antipode_leg(const TensorElement& x, int slot) {
  if (slot < 0 || slot >= x.rank()) throw AlgebraError("antipode slot out of range");
  TensorElement out(x.group(), x.rank());
  for (const auto& [k, c] : x.terms()) {
    auto idx = x.unpack(k);
    idx[slot] = x.group()->inv(idx[slot]);
    out.add_term(idx, c);
  }
  return out;
}

TensorElement hopf_coproduct(const TensorElement& x) {
  if (x.rank() != 1) throw AlgebraError("coproduct expects a rank-1 element");
  return coproduct_leg(x, 0);
}

Scalar hopf_counit(const TensorElement& x) {
  if (x.rank() != 1) throw AlgebraError("counit expects a rank-1 element");
  Scalar s;
  for (const auto& [k, c] : x.terms()) s += c;
  return s;
}

TensorElement hopf_antipode(const TensorElement& x) {
  if (x.rank() != 1) throw AlgebraError("antipode expects a rank-1 element");
  return antipode_leg(x, 0);
}

TensorElement multiply_legs(const TensorElement& x) {
  if (x.rank() != 2) throw AlgebraError("multiplication map expects a rank-2 element");
  TensorElement out(x.group(), 1);
  for (const auto& [k, c] : x.terms()) {
    auto idx = x.unpack(k);
    out.add_term({x.group()->mul(idx[0], idx[1])}, c);
  }
  return out;
}

TensorElement embed(const TensorElement& x, const std::vector<int>& positions, int target_rank) {
  if (static_cast<int>(positions.size()) != x.rank()) throw AlgebraError("embedding needs one position per slot");
  std::vector<char> used(target_rank, 0);
  for (int p : positions) {
    if (p < 0 || p >= target_rank || used[p]) throw AlgebraError("invalid embedding positions");
    used[p] = 1;
  }
  TensorElement out(x.group(), target_rank);
  const int e = x.group()->identity();
  for (const auto& [k, c] : x.terms()) {
    auto idx = x.unpack(k);
    std::vector<int> t(target_rank, e);
    for (size_t s = 0; s < positions.size(); ++s) t[positions[s]] = idx[s];
    out.add_term(t, c);
  }
  return out;
}

TensorElement swap_legs(const TensorElement& x) {
  if (x.rank() != 2) throw AlgebraError("swap expects a rank-2 element");
  return embed(x, {1, 0}, 2);
}

TensorElement outer(const TensorElement& a, const TensorElement& b) {
  if (a.group_order() != b.group_order()) throw AlgebraError("tensor base group mismatch");
  TensorElement out(a.group(), a.rank() + b.rank());
  for (const auto& [ka, ca] : a.terms()) {
    auto ia = a.unpack(ka);
    for (const auto& [kb, cb] : b.terms()) {
      auto idx = ia;
      auto ib = b.unpack(kb);
      idx.insert(idx.end(), ib.begin(), ib.end());
      out.add_term(idx, ca * cb);
    }
  }
  return out;
}

TensorElement map_indices(const TensorElement& x, const GroupPtr& target, const std::vector<int>& index_map) {
  TensorElement out(target, x.rank());
  for (const auto& [k, c] : x.terms()) {
    auto idx = x.unpack(k);
    for (auto& i : idx) i = index_map.at(i);
    out.add_term(idx, c);
  }
  return out;
}

namespace {

// The subgroup of G^r generated by the support of a, as packed keys.
struct SupportGroup {
  std::vector<TensorElement::Key> elems;
  std::unordered_map<TensorElement::Key, int> pos;
};

TensorElement::Key key_mul(const TensorElement& t, TensorElement::Key a, TensorElement::Key b) {
  const auto& g = *t.group();
  const TensorElement::Key n = static_cast<TensorElement::Key>(g.order());
  TensorElement::Key out = 0, mult = 1;
  for (int s = 0; s < t.rank(); ++s) {
    out += mult * static_cast<TensorElement::Key>(g.mul(static_cast<int>(a % n), static_cast<int>(b % n)));
    a /= n;
    b /= n;
    mult *= n;
  }
  return out;
}

SupportGroup support_group(const TensorElement& a) {
  SupportGroup sg;
  const auto unit_key = a.pack(std::vector<int>(a.rank(), a.group()->identity()));
  std::vector<TensorElement::Key> gens;
  for (const auto& [k, c] : a.terms()) gens.push_back(k);
  sg.elems.push_back(unit_key);
  sg.pos[unit_key] = 0;
  for (size_t i = 0; i < sg.elems.size(); ++i)
    for (auto s : gens) {
      auto y = key_mul(a, sg.elems[i], s);
      if (sg.pos.emplace(y, static_cast<int>(sg.elems.size())).second) sg.elems.push_back(y);
    }
  return sg;
}

void certify_inverse(const TensorElement& a, const TensorElement& b) {
  const auto one = TensorElement::unit(a.group(), a.rank());
  if (a * b != one || b * a != one) throw AlgebraError("computed inverse failed the two-sided check");
}

TensorElement invert_dense(const TensorElement& a, const SupportGroup& sg) {
  const size_t d = sg.elems.size();
  Matrix L(d, d);
  for (size_t j = 0; j < d; ++j)
    for (const auto& [k, c] : a.terms()) L(sg.pos.at(key_mul(a, k, sg.elems[j])), j) += c;
  Vector rhs(d);
  rhs[0] = Scalar::integer(1);
  auto x = solve_unique(L, rhs);
  if (!x) throw NotInvertible("element is not invertible (singular regular representation)");
  TensorElement b(a.group(), a.rank());
  for (size_t j = 0; j < d; ++j) b.add_key(sg.elems[j], (*x)[j]);
  if (a * b != TensorElement::unit(a.group(), a.rank()))
    throw NotInvertible("element is not invertible (singular regular representation)");
  return b;
}

std::optional<TensorElement> invert_fourier(const TensorElement& a, const SupportGroup& sg) {
  const int d = static_cast<int>(sg.elems.size());
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (key_mul(a, sg.elems[i], sg.elems[j]) != key_mul(a, sg.elems[j], sg.elems[i])) return std::nullopt;
  // element orders and exponent
  std::vector<int> ord(d, 1);
  long exponent = 1;
  for (int i = 0; i < d; ++i) {
    auto x = sg.elems[i];
    while (x != sg.elems[0]) {
      x = key_mul(a, x, sg.elems[i]);
      ++ord[i];
    }
    exponent = lcm_long(exponent, ord[i]);
  }
  const int E = static_cast<int>(exponent);
  Field field = field_of(a.coefficient_list());
  if (!field.supports_root(E)) return std::nullopt;
  // greedy generators
  std::vector<int> gens;
  std::vector<char> in(d, 0);
  in[0] = 1;
  int covered = 1;
  auto closure = [&]() {
    std::vector<int> members;
    std::fill(in.begin(), in.end(), 0);
    in[0] = 1;
    members.push_back(0);
    for (size_t i = 0; i < members.size(); ++i)
      for (int s : gens) {
        int y = sg.pos.at(key_mul(a, sg.elems[members[i]], sg.elems[s]));
        if (!in[y]) {
          in[y] = 1;
          members.push_back(y);
        }
      }
    covered = static_cast<int>(members.size());
  };
  std::vector<int> by_order(d);
  for (int i = 0; i < d; ++i) by_order[i] = i;
  std::stable_sort(by_order.begin(), by_order.end(), [&](int x, int y) { return ord[x] > ord[y]; });
  for (int i : by_order) {
    if (covered == d) break;
    if (in[i]) continue;
    gens.push_back(i);
    closure();
  }
  // characters as exponent vectors of zeta_E
  std::vector<std::vector<int>> chars;
  std::vector<int> vals(gens.size(), 0);
  std::function<void(size_t)> rec = [&](size_t depth) {
    if (depth == gens.size()) {
      std::vector<int> chi(d, -1);
      chi[0] = 0;
      std::vector<int> queue{0};
      for (size_t i = 0; i < queue.size(); ++i)
        for (size_t s = 0; s < gens.size(); ++s) {
          int y = sg.pos.at(key_mul(a, sg.elems[queue[i]], sg.elems[gens[s]]));
          int v = (chi[queue[i]] + vals[s] * (E / ord[gens[s]])) % E;
          if (chi[y] < 0) {
            chi[y] = v;
            queue.push_back(y);
          } else if (chi[y] != v) {
            return;
          }
        }
      chars.push_back(std::move(chi));
      return;
    }
    for (int v = 0; v < ord[gens[depth]]; ++v) {
      vals[depth] = v;
      rec(depth + 1);
    }
  };
  rec(0);
  if (static_cast<int>(chars.size()) != d) throw AlgebraError("character enumeration failed");
  std::vector<Scalar> zeta(E);
  for (int j = 0; j < E; ++j) zeta[j] = field.root_power(E, j);
  std::vector<std::pair<int, Scalar>> coeffs;
  for (const auto& [k, c] : a.terms()) coeffs.emplace_back(sg.pos.at(k), c);
  std::vector<Scalar> inv_hat(d);
  for (int x = 0; x < d; ++x) {
    Scalar s;
    for (const auto& [p, c] : coeffs) s += c * zeta[chars[x][p]];
    if (s.is_zero()) throw NotInvertible("element is not invertible (vanishing character value)");
    inv_hat[x] = s.inverse();
  }
  const Scalar scale = Scalar::integer(d).inverse();
  TensorElement b(a.group(), a.rank());
  for (int p = 0; p < d; ++p) {
    Scalar s;
    for (int x = 0; x < d; ++x) s += inv_hat[x] * zeta[(E - chars[x][p]) % E];
    b.add_key(sg.elems[p], scale * s);
  }
  return b;
}

}  // namespace

TensorElement algebra_invert(const TensorElement& a) {
  if (a.is_zero()) throw NotInvertible("zero is not invertible");
  auto sg = support_group(a);
  TensorElement b;
  if (auto f = invert_fourier(a, sg)) {
    b = std::move(*f);
  } else {
    b = invert_dense(a, sg);
  }
  certify_inverse(a, b);
  return b;
}

TensorElement algebra_invert_dense(const TensorElement& a) {
  if (a.is_zero()) throw NotInvertible("zero is not invertible");
  auto b = invert_dense(a, support_group(a));
  certify_inverse(a, b);
  return b;
}

size_t leg_rank(const TensorElement& r) {
  if (r.rank() != 2) throw AlgebraError("leg rank expects a rank-2 element");
  const int n = r.group_order();
  // restrict to the rows/columns that occur
  std::vector<int> rows, cols;
  std::vector<int> rpos(n, -1), cpos(n, -1);
  for (const auto& [k, c] : r.terms()) {
    auto idx = r.unpack(k);
    if (rpos[idx[0]] < 0) {
      rpos[idx[0]] = static_cast<int>(rows.size());
      rows.push_back(idx[0]);
    }
    if (cpos[idx[1]] < 0) {
      cpos[idx[1]] = static_cast<int>(cols.size());
      cols.push_back(idx[1]);
    }
  }
  Matrix m(rows.size(), cols.size());
  for (const auto& [k, c] : r.terms()) {
    auto idx = r.unpack(k);
    m(rpos[idx[0]], cpos[idx[1]]) = c;
  }
  return rank(std::move(m));
}

StructureConstantAlgebra::StructureConstantAlgebra(int dim, std::vector<std::string> labels)
    : dim_(dim), labels_(std::move(labels)), mult_(static_cast<size_t>(dim) * dim), unit_(dim) {
  if (labels_.empty())
    for (int i = 0; i < dim; ++i) labels_.push_back(std::to_string(i));
  if (static_cast<int>(labels_.size()) != dim) throw AlgebraError("label count does not match algebra dimension");
}

void StructureConstantAlgebra::set_product(int i, int j, Sparse v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Sparse merged;
  for (auto& [k, c] : v) {
    if (!merged.empty() && merged.back().first == k)
      merged.back().second += c;
    else
      merged.emplace_back(k, c);
  }
  std::erase_if(merged, [](const auto& p) { return p.second.is_zero(); });
  mult_[static_cast<size_t>(i) * dim_ + j] = std::move(merged);
}

Scalar StructureConstantAlgebra::constant(int i, int j, int k) const {
  for (const auto& [kk, c] : product(i, j))
    if (kk == k) return c;
  return Scalar();
}

Vector StructureConstantAlgebra::basis_vector(int i) const {
  Vector v(dim_);
  v[i] = Scalar::integer(1);
  return v;
}

Vector StructureConstantAlgebra::multiply(const Vector& a, const Vector& b) const {
  Vector out(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (b[j].is_zero()) continue;
      const Scalar ab = a[i] * b[j];
      for (const auto& [k, c] : product(i, j)) out[k] += ab * c;
    }
  }
  return out;
}

Matrix StructureConstantAlgebra::left_multiplication(const Vector& a) const {
  Matrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    auto col = multiply(a, basis_vector(j));
    for (int k = 0; k < dim_; ++k) m(k, j) = col[k];
  }
  return m;
}

std::string StructureConstantAlgebra::check_associative() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      Vector ij(dim_);
      for (const auto& [k, c] : product(i, j)) ij[k] = c;
      for (int k = 0; k < dim_; ++k) {
        Vector left(dim_), right(dim_);
        for (int m = 0; m < dim_; ++m) {
          if (ij[m].is_zero()) continue;
          for (const auto& [t, c] : product(m, k)) left[t] += ij[m] * c;
        }
        for (const auto& [m, c1] : product(j, k))
          for (const auto& [t, c2] : product(i, m)) right[t] += c1 * c2;
        if (left != right)
          return "associativity fails at (" + labels_[i] + ", " + labels_[j] + ", " + labels_[k] + ")";
      }
    }
  return {};
}

std::string StructureConstantAlgebra::check_unit() const {
  for (int i = 0; i < dim_; ++i) {
    auto e = basis_vector(i);
    if (multiply(unit_, e) != e) return "unit fails on the left at " + labels_[i];
    if (multiply(e, unit_) != e) return "unit fails on the right at " + labels_[i];
  }
  return {};
}

std::string CoalgebraTable::check_coassociative() const {
  using Key = std::uint64_t;
  const Key d = static_cast<Key>(dim);
  for (int x = 0; x < dim; ++x) {
    std::map<Key, Scalar> left, right;
    auto add = [](std::map<Key, Scalar>& m, Key k, const Scalar& c) {
      auto [it, ins] = m.try_emplace(k, c);
      if (!ins) it->second += c;
    };
    for (const auto& [i, j, c] : coproduct[x]) {
      for (const auto& [a, b, c2] : coproduct[i]) add(left, static_cast<Key>(a) + d * (static_cast<Key>(b) + d * j), c * c2);
      for (const auto& [a, b, c2] : coproduct[j]) add(right, static_cast<Key>(i) + d * (static_cast<Key>(a) + d * b), c * c2);
    }
    std::erase_if(left, [](const auto& p) { return p.second.is_zero(); });
    std::erase_if(right, [](const auto& p) { return p.second.is_zero(); });
    if (left != right) return "coassociativity fails at " + labels[x];
  }
  return {};
}

std::string CoalgebraTable::check_counit() const {
  for (int x = 0; x < dim; ++x) {
    Vector l(dim), r(dim);
    for (const auto& [i, j, c] : coproduct[x]) {
      l[j] += counit[i] * c;
      r[i] += c * counit[j];
    }
    Vector e(dim);
    e[x] = Scalar::integer(1);
    if (l != e || r != e) return "counit axiom fails at " + labels[x];
  }
  return {};
}

StructureConstantAlgebra dualize_coalgebra(const CoalgebraTable& c, bool verify) {
  if (static_cast<int>(c.coproduct.size()) != c.dim || static_cast<int>(c.counit.size()) != c.dim)
    throw AlgebraError("coalgebra table has inconsistent dimensions");
  if (verify) {
    auto err = c.check_coassociative();
    if (!err.empty()) throw AlgebraError("input is not coassociative: " + err);
  }
  StructureConstantAlgebra a(c.dim, c.labels);
  std::vector<StructureConstantAlgebra::Sparse> prods(static_cast<size_t>(c.dim) * c.dim);
  for (int x = 0; x < c.dim; ++x)
    for (const auto& [i, j, s] : c.coproduct[x]) prods[static_cast<size_t>(i) * c.dim + j].emplace_back(x, s);
  for (int i = 0; i < c.dim; ++i)
    for (int j = 0; j < c.dim; ++j) a.set_product(i, j, std::move(prods[static_cast<size_t>(i) * c.dim + j]));
  a.set_unit(c.counit);
  return a;
}

size_t center_dimension(const StructureConstantAlgebra& a) {
  const int d = a.dim();
  if (d == 0) return 0;
  Subspace constraints(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    // rows of z -> z Y_i - Y_i z
    Matrix m(d, d);
    for (int k = 0; k < d; ++k) {
      for (const auto& [t, c] : a.product(k, i)) m(t, k) += c;
      for (const auto& [t, c] : a.product(i, k)) m(t, k) -= c;
    }
    for (int r = 0; r < d; ++r) {
      auto row = m.row(r);
      constraints.insert(Vector(row.begin(), row.end()));
      if (constraints.dimension() + 1 == static_cast<size_t>(d) && !a.unit().empty()) {
        bool unital = false;
        for (const auto& u : a.unit()) unital = unital || !u.is_zero();
        if (unital) return 1;
      }
    }
  }
  return static_cast<size_t>(d) - constraints.dimension();
}

size_t abelianization_dimension(const StructureConstantAlgebra& a) {
  const int d = a.dim();
  Subspace ideal(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Vector v(d);
      for (const auto& [k, c] : a.product(i, j)) v[k] += c;
      for (const auto& [k, c] : a.product(j, i)) v[k] -= c;
      ideal.insert(std::move(v));
      if (ideal.dimension() == static_cast<size_t>(d)) return 0;
    }
  for (size_t i = 0; i < ideal.dimension(); ++i) {
    const Vector v = ideal.basis()[i];
    for (int k = 0; k < d; ++k) {
      auto y = a.basis_vector(k);
      ideal.insert(a.multiply(y, v));
      ideal.insert(a.multiply(v, y));
      if (ideal.dimension() == static_cast<size_t>(d)) return 0;
    }
  }
  return static_cast<size_t>(d) - ideal.dimension();
}

}  // namespace hopftwist
