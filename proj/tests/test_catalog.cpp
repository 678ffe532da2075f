#include <map>

#include "doctest.h"
#include "hopftwist/catalog.hpp"

using namespace hopftwist;

namespace {

Matrix mat2(long a, long b, long c, long d) {
  Matrix m(2, 2);
  m(0, 0) = Scalar::integer(a);
  m(0, 1) = Scalar::integer(b);
  m(1, 0) = Scalar::integer(c);
  m(1, 1) = Scalar::integer(d);
  return m;
}

ProjectiveRep pauli_on(const GroupPtr& v) {
  auto sx = mat2(0, 1, 1, 0), sz = mat2(1, 0, 0, -1);
  return lift_projective(v, {Matrix::identity(2), sx, sz, sx * sz});
}

ElementSet all_of(const FiniteGroup& g) {
  ElementSet s(g.order());
  for (int x = 0; x < g.order(); ++x) s[x] = x;
  return s;
}

Quadruple trivial_h(const GroupPtr& g, int u) {
  auto sub = make_subgroup(*g, {g->identity()});
  return {g, {g->identity()}, lift_projective(sub.group, {Matrix::identity(1)}), u};
}

// Klein four as the subgroup {0,1,2,3} of G = Z2^3, u = 0 or the third generator.
Quadruple klein_in_z2cubed(int u) {
  auto g = make_abelian({2, 2, 2})->group();
  ElementSet h{0, 1, 2, 3};
  return {g, h, pauli_on(make_subgroup(*g, h).group), u};
}

Quadruple e2_quadruple(int n) {
  auto a = make_cyclic(n);
  std::vector<int> pi(n);
  for (int i = 0; i < n; ++i) pi[i] = i;
  Bijective1Cocycle data{trivial_action(a->group(), a), pi};
  auto v = heisenberg_rep(data);
  return {v.group, all_of(*v.group), v, v.group->identity()};
}

// Nondegenerate alternating bicharacters on an abelian group, counted by
// assigning exponents b(g_i, g_j) on a generating set and extending
// bilinearly.
long count_nondegenerate_bicharacters(const FiniteGroup& h) {
  const int n = h.order();
  if (n == 1) return 1;
  const int m = h.exponent();
  const auto gens = generators(h);
  const size_t r = gens.size();
  // coordinates of every element as a word in the generators
  std::vector<std::vector<int>> word(n);
  word[h.identity()] = std::vector<int>(r, 0);
  std::vector<int> queue{h.identity()};
  for (size_t q = 0; q < queue.size(); ++q)
    for (size_t i = 0; i < r; ++i) {
      const int y = h.mul(gens[i], queue[q]);
      if (!word[y].empty()) continue;
      word[y] = word[queue[q]];
      ++word[y][i];
      queue.push_back(y);
    }
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < r; ++i)
    for (size_t j = i + 1; j < r; ++j) pairs.emplace_back(i, j);
  long count = 0;
  std::vector<int> val(pairs.size(), 0);
  while (true) {
    std::vector<std::vector<int>> a(r, std::vector<int>(r, 0));
    for (size_t k = 0; k < pairs.size(); ++k) {
      a[pairs[k].first][pairs[k].second] = val[k];
      a[pairs[k].second][pairs[k].first] = (m - val[k]) % m;
    }
    auto b = [&](int x, int y) {
      long s = 0;
      for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) s += static_cast<long>(word[x][i]) * word[y][j] * a[i][j];
      return static_cast<int>(s % m);
    };
    // well defined: b(x, .) must be a function of x, i.e. compatible with the group law
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        for (int z = 0; z < n && ok; ++z) ok = b(h.mul(x, y), z) == (b(x, z) + b(y, z)) % m;
    if (ok) {
      bool nondegenerate = true;
      for (int x = 0; x < n && nondegenerate; ++x) {
        if (x == h.identity()) continue;
        bool radical = true;
        for (int y = 0; y < n; ++y) radical = radical && b(x, y) == 0;
        nondegenerate = !radical;
      }
      count += nondegenerate;
    }
    size_t k = 0;
    while (k < val.size() && ++val[k] == m) val[k++] = 0;
    if (k == val.size()) break;
  }
  return count;
}

long expected_inputs(const FiniteGroup& g) {
  long involutions = 0;
  for (int z : center(g)) involutions += g.mul(z, z) == g.identity();
  long total = 0;
  for (const auto& h : all_subgroups(g)) {
    int d = 0;
    while ((d + 1) * (d + 1) <= static_cast<int>(h.size())) ++d;
    if (d * d != static_cast<int>(h.size())) continue;
    total += count_nondegenerate_bicharacters(*make_subgroup(g, h).group) * involutions;
  }
  return total;
}

}  // namespace

TEST_CASE("quadruple validation") {
  auto z2 = make_cyclic(2)->group();
  CHECK(trivial_h(z2, 1).validate().empty());
  auto bad = trivial_h(z2, 1);
  bad.u = 5;
  CHECK_FALSE(bad.validate().empty());
  auto s3 = make_symmetric(3);
  int transposition = -1;
  for (int x = 0; x < 6; ++x)
    if (x != s3->identity() && s3->mul(x, x) == s3->identity()) transposition = x;
  CHECK_FALSE(trivial_h(s3, transposition).validate().empty());  // not central
  auto k = klein_in_z2cubed(0);
  k.h = {0, 1, 2, 4};
  CHECK_FALSE(k.validate().empty());
  CHECK_THROWS_AS(assign_datum(k), std::invalid_argument);

  // a one-dimensional V on a Klein four subgroup has the wrong dimension
  auto v = make_abelian({2, 2})->group();
  Quadruple wrong{v, all_of(*v), lift_projective(v, std::vector<Matrix>(4, Matrix::identity(1))), 0};
  CHECK_FALSE(wrong.validate().empty());
  // honest two-dimensional rep: right dimension, degenerate cocycle
  std::vector<Matrix> diag;
  for (int x = 0; x < 4; ++x) {
    auto t = make_abelian({2, 2})->tuple(x);
    diag.push_back(mat2(t[0] ? -1 : 1, 0, 0, t[1] ? -1 : 1));
  }
  Quadruple degenerate{v, all_of(*v), lift_projective(v, diag), 0};
  CHECK(degenerate.validate().empty());
  CHECK_THROWS_AS(assign_datum(degenerate), ConstructionError);
}

TEST_CASE("F on small quadruples") {
  auto z2 = make_cyclic(2)->group();
  auto d = assign_datum(trivial_h(z2, 1));
  CHECK(d.report.passed());
  CHECK(d.r == r_u(z2, 1));
  CHECK(d.drinfeld == TensorElement::basis(z2, {1}));
  CHECK(d.minimal);
  auto plain = assign_datum(trivial_h(z2, 0));
  CHECK(plain.r == TensorElement::unit(z2, 2));
  CHECK_FALSE(plain.minimal);
  CHECK(regular_trace(plain.drinfeld) == Scalar::integer(2));
  CHECK(regular_trace(d.drinfeld) == Scalar::integer(0));

  auto v = make_abelian({2, 2})->group();
  auto pauli = assign_datum({v, all_of(*v), pauli_on(v), 0});
  CHECK(pauli.report.passed());
  CHECK(pauli.minimal);
  CHECK(pauli.drinfeld == TensorElement::unit(v, 1));
  CHECK(regular_trace(pauli.drinfeld) == Scalar::integer(4));
  CHECK(match_projective_rep(pauli.twist, pauli_on(v)).passed());

  auto not_minimal = assign_datum(klein_in_z2cubed(0));
  CHECK(not_minimal.report.passed());
  CHECK_FALSE(not_minimal.minimal);
  CHECK(*not_minimal.report.value("leg rank") == "4");
  auto with_u = assign_datum(klein_in_z2cubed(4));
  CHECK(with_u.report.passed());
  CHECK(with_u.minimal);
  CHECK(with_u.drinfeld == TensorElement::basis(with_u.quad.g, {4}));
}

TEST_CASE("minimality criteria") {
  auto v = make_abelian({2, 2})->group();
  auto d = assign_datum({v, all_of(*v), pauli_on(v), 0});
  CHECK(is_minimal_datum(d));
  // H = G with u = e is minimal, a proper H with u = e is not
  CHECK_FALSE(is_minimal_datum(assign_datum(klein_in_z2cubed(0))));
  // an R whose legs contradict <H, u> = G
  CHECK_THROWS_AS(is_minimal_datum(v, all_of(*v), 0, TensorElement::unit(v, 2)), TheoremViolation);
  auto g = make_abelian({2, 2, 2})->group();
  CHECK_FALSE(is_minimal_datum(g, {0, 1, 2, 3}, 0, TensorElement::unit(g, 2)));
}

TEST_CASE("enumeration at small orders") {
  CHECK(enumerate_quadruple_inputs(1).size() == 1);
  auto two = enumerate_quadruples(2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].quad.u == two[0].quad.g->identity());
  CHECK(two[1].quad.u != two[1].quad.g->identity());
  for (const auto& d : two) CHECK(d.quad.h.size() == 1);

  auto four = enumerate_quadruples(4);
  bool pauli_found = false;
  for (const auto& d : four) {
    CHECK(d.report.passed());
    if (d.quad.h.size() == 4 && d.quad.u == d.quad.g->identity() && catalog_name(*d.quad.g) == "Z2xZ2")
      pauli_found = true;
  }
  CHECK(pauli_found);
  CHECK_THROWS_AS(enumerate_quadruple_inputs(33), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_quadruple_inputs(0), std::invalid_argument);
}

TEST_CASE("enumeration counts match a bicharacter oracle") {
  for (int n : {4, 8, 9, 16}) {
    std::map<std::string, long> got;
    for (const auto& q : enumerate_quadruple_inputs(n, Field(), false)) ++got[catalog_name(*q.g)];
    for (const auto& cg : group_catalog(n)) {
      if (cg.group->order() != n || !cg.group->is_abelian()) continue;
      INFO(cg.name);
      CHECK(got[cg.name] == expected_inputs(*cg.group));
    }
  }
}

TEST_CASE("deduplication merges automorphic quadruples") {
  // Z2 x Z2 with trivial H: u = e and one orbit of nontrivial u
  long klein_trivial = 0;
  for (const auto& q : enumerate_quadruple_inputs(4))
    if (catalog_name(*q.g) == "Z2xZ2" && q.h.size() == 1) ++klein_trivial;
  CHECK(klein_trivial == 2);
  // Z3 x Z3 carries two nondegenerate classes, swapped by an automorphism
  long z3z3 = 0;
  for (const auto& q : enumerate_quadruple_inputs(9))
    if (q.h.size() == 9) ++z3z3;
  CHECK(z3z3 == 1);
  long undeduped = 0;
  for (const auto& q : enumerate_quadruple_inputs(9, Field(), false))
    if (q.h.size() == 9) ++undeduped;
  CHECK(undeduped == 2);
}

TEST_CASE("enumerated data satisfy the classification invariants") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& d : enumerate_quadruples(n)) {
      INFO("order " << n << " " << catalog_name(*d.quad.g) << " |H| " << d.quad.h.size());
      CHECK(d.report.passed());
      CHECK(d.deduplicated);
      CHECK(d.drinfeld == TensorElement::basis(d.quad.g, {d.quad.u}));
      CHECK(d.minimal == (static_cast<int>(d.minimal_part.size()) == n));
      CHECK(d.solvable);
      if (n >= 2) CHECK(d.grouplikes >= 2);
    }
}

TEST_CASE("characteristic p mirror") {
  auto v = make_abelian({2, 2})->group();
  auto e1 = assign_datum({v, all_of(*v), pauli_on(v), 0});
  for (std::uint64_t p : {3, 5}) {
    auto r = char_p_mirror(e1, p);
    INFO(p);
    CHECK(r.passed());
  }
  CHECK_THROWS_AS(char_p_mirror(e1, 2), std::invalid_argument);
  CHECK_THROWS_AS(char_p_mirror(e1, 9), std::invalid_argument);

  auto e2 = assign_datum(e2_quadruple(3));
  CHECK(e2.report.passed());
  CHECK(e2.minimal);
  CHECK(char_p_mirror(e2, 7).passed());
  CHECK(char_p_mirror(e2, 13).passed());
  CHECK_THROWS_AS(char_p_mirror(e2, 3), std::invalid_argument);
  CHECK_THROWS_AS(char_p_mirror(e2, 5), std::invalid_argument);  // 5 is not 1 mod 3

  auto z2 = make_cyclic(2)->group();
  auto ru = assign_datum(trivial_h(z2, 1));
  CHECK(char_p_mirror(ru, 3).passed());
  CHECK(char_p_mirror(ru, 7).passed());
}

TEST_CASE("catalog names") {
  CHECK(catalog_name(*make_abelian({2, 2})->group()) == "Z2xZ2");
  CHECK(catalog_name(*make_symmetric(3)) == "S3");
  CHECK(catalog_name(*make_cyclic(1)->group()) == "Z1");
}
