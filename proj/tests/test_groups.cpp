#include <set>

#include "doctest.h"
#include "hopftwist/groups.hpp"

using namespace hopftwist;

namespace {

int count_of_order(const FiniteGroup& g, int k) {
  int n = 0;
  for (int a = 0; a < g.order(); ++a) {
    // oracle: iterate powers directly
    int x = a, o = 1;
    while (x != g.identity()) {
      x = g.mul(x, a);
      ++o;
    }
    if (o == k) ++n;
  }
  return n;
}

// Brute-force normal series search: is there a chain of normal subgroups with
// abelian factors (checked via commutators landing in the next term)?
bool solvable_by_search(const FiniteGroup& g) {
  auto subs = all_subgroups(g);
  auto normal_in = [&](const ElementSet& n, const ElementSet& h) {
    std::set<int> ns(n.begin(), n.end());
    for (int x : h)
      for (int y : n)
        if (!ns.count(g.conj(x, y))) return false;
    return true;
  };
  auto abelian_quotient = [&](const ElementSet& h, const ElementSet& n) {
    std::set<int> ns(n.begin(), n.end());
    for (int x : h)
      for (int y : h)
        if (!ns.count(g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y))))) return false;
    return true;
  };
  ElementSet all(g.order());
  for (int i = 0; i < g.order(); ++i) all[i] = i;
  std::set<ElementSet> reach{all};
  std::vector<ElementSet> stack{all};
  while (!stack.empty()) {
    auto h = stack.back();
    stack.pop_back();
    if (h.size() == 1) return true;
    for (const auto& n : subs)
      if (n.size() < h.size() && std::includes(h.begin(), h.end(), n.begin(), n.end()) && normal_in(n, h) &&
          abelian_quotient(h, n) && reach.insert(n).second)
        stack.push_back(n);
  }
  return false;
}

}  // namespace

TEST_CASE("cyclic and dual groups") {
  auto z1 = make_cyclic(1);
  CHECK(z1->order() == 1);
  auto a = make_abelian({2, 4});
  CHECK(dual_group(*a)->factors() == std::vector<int>{2, 4});
  CHECK(a->exponent() == 4);
  CHECK(a->index(a->tuple(5)) == 5);
}

TEST_CASE("Klein four as a direct product") {
  auto z2 = make_cyclic(2);
  auto v = direct_product(*z2->group(), *z2->group());
  CHECK(v->order() == 4);
  CHECK(count_of_order(*v, 2) == 3);
  CHECK(v->is_abelian());
}

TEST_CASE("semidirect products") {
  auto z2 = make_cyclic(2)->group();
  auto a2 = make_cyclic(2);
  auto v = semidirect_product(trivial_action(z2, a2));
  CHECK(v.group->order() == 4);
  CHECK(count_of_order(*v.group, 2) == 3);

  auto a3 = make_cyclic(3);
  GroupAction inv{z2, a3, {{0, 1, 2}, {0, 2, 1}}};
  CHECK(inv.validate().empty());
  auto s3 = semidirect_product(inv);
  CHECK(s3.group->order() == 6);
  CHECK(!s3.group->is_abelian());
  CHECK(count_of_order(*s3.group, 2) == 3);
  CHECK(count_of_order(*s3.group, 3) == 2);
  CHECK(are_isomorphic(*s3.group, *make_symmetric(3)));

  GroupAction bad{z2, a3, {{0, 1, 2}, {1, 2, 0}}};
  CHECK(!bad.validate().empty());
  CHECK_THROWS_AS(semidirect_product(bad), GroupError);
}

TEST_CASE("semidirect multiplication rule") {
  auto z2 = make_cyclic(2)->group();
  auto a3 = make_cyclic(3);
  GroupAction inv{z2, a3, {{0, 1, 2}, {0, 2, 1}}};
  auto h = semidirect_product(inv);
  for (int b = 0; b < 3; ++b)
    for (int g = 0; g < 2; ++g)
      for (int b2 = 0; b2 < 3; ++b2)
        for (int g2 = 0; g2 < 2; ++g2)
          CHECK(h.group->mul(h.element(b, g), h.element(b2, g2)) ==
                h.element(a3->add(b, inv.apply(g, b2)), (g + g2) % 2));
}

TEST_CASE("center, generated subgroups, orders") {
  auto a = make_abelian({2, 3})->group();
  CHECK(center(*a).size() == 6);
  auto v = make_abelian({2, 2})->group();
  CHECK(subgroup_generated(*v, {1}).size() == 2);
  auto s3 = make_symmetric(3);
  // oracle: brute-force commutation
  int central = 0;
  for (int x = 0; x < 6; ++x) {
    bool c = true;
    for (int y = 0; y < 6; ++y) c = c && s3->mul(x, y) == s3->mul(y, x);
    central += c;
  }
  CHECK(central == 1);
  CHECK(center(*s3) == ElementSet{s3->identity()});
  CHECK(element_order(*make_cyclic(6)->group(), 1) == 6);
}

TEST_CASE("subgroup_generated is idempotent and monotone") {
  auto g = make_symmetric(4);
  for (int a = 0; a < g->order(); a += 3)
    for (int b = 0; b < g->order(); b += 5) {
      auto s = subgroup_generated(*g, {a});
      auto t = subgroup_generated(*g, {a, b});
      CHECK(subgroup_generated(*g, s) == s);
      CHECK(std::includes(t.begin(), t.end(), s.begin(), s.end()));
    }
}

TEST_CASE("solvability") {
  CHECK(is_solvable(*make_abelian({2, 4})->group()));
  auto s3 = make_symmetric(3);
  CHECK(is_solvable(*s3));
  ElementSet all(6);
  for (int i = 0; i < 6; ++i) all[i] = i;
  auto d1 = derived_subgroup(*s3, all);
  CHECK(d1.size() == 3);
  CHECK(derived_subgroup(*s3, d1).size() == 1);
  CHECK(is_solvable(*make_symmetric(4)));
  CHECK(!is_solvable(*make_alternating(5)));
}

TEST_CASE("solvability agrees with a normal-series search up to order 24") {
  for (const auto& cg : group_catalog(24)) CHECK_MESSAGE(is_solvable(*cg.group) == solvable_by_search(*cg.group), cg.name);
}

TEST_CASE("pairing values") {
  auto q = make_field(FieldSpec::cyclotomic(4));
  auto z2 = make_cyclic(2);
  Pairing p2(z2);
  CHECK(pairing_value(p2, 0, 1, q) == Scalar::integer(1));
  CHECK(pairing_value(p2, 1, 1, q) == Scalar::integer(-1));
  Pairing p4(make_cyclic(4));
  CHECK(pairing_value(p4, 1, 1, q) == Scalar::zeta(4));
  CHECK(pairing_value(p4, 2, 1, q) == Scalar::integer(-1));
}

TEST_CASE("pairing is biadditive and nondegenerate") {
  auto a = make_abelian({2, 4});
  Pairing p(a);
  auto f = make_field(FieldSpec::cyclotomic(4));
  CHECK(p.is_nondegenerate());
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y)
      for (int b = 0; b < 8; ++b)
        CHECK(p.value(a->add(x, y), b, f) == p.value(x, b, f) * p.value(y, b, f));
}

TEST_CASE("dual action") {
  auto z2 = make_cyclic(2)->group();
  auto a3 = make_cyclic(3);
  GroupAction inv{z2, a3, {{0, 1, 2}, {0, 2, 1}}};
  Pairing p(a3);
  auto d = dual_action(inv, p);
  CHECK(d.validate().empty());
  for (int g = 0; g < 2; ++g)
    for (int b = 0; b < 3; ++b)
      for (int x = 0; x < 3; ++x) CHECK(p.exponent(x, d.apply(g, b)) == p.exponent(inv.apply(z2->inv(g), x), b));
}

TEST_CASE("constructed groups pass the table checks") {
  for (const auto& cg : group_catalog(16)) {
    CHECK_NOTHROW(FiniteGroup(cg.group->order(), cg.group->table()));
  }
  CHECK(make_quaternion()->order() == 8);
  CHECK(count_of_order(*make_quaternion(), 4) == 6);
  CHECK(make_dihedral(4)->order() == 8);
  CHECK(make_alternating(4)->order() == 12);
  CHECK_THROWS_AS(FiniteGroup(2, {0, 1, 1, 1}), GroupError);
  CHECK_THROWS_AS(FiniteGroup(3, {0, 1, 2, 1, 0, 2, 2, 2, 0}), GroupError);
}

TEST_CASE("catalog inventory") {
  auto cat = group_catalog(8);
  std::set<std::string> names;
  for (auto& c : cat) names.insert(c.name);
  CHECK(names.count("Z8"));
  CHECK(names.count("Z2xZ2xZ2"));
  CHECK(names.count("D4"));
  CHECK(names.count("Q8"));
  CHECK(names.count("S3"));
  int order8 = 0;
  for (auto& c : cat) order8 += c.group->order() == 8;
  CHECK(order8 == 5);
  for (size_t i = 0; i < cat.size(); ++i)
    for (size_t j = i + 1; j < cat.size(); ++j)
      if (cat[i].group->order() == cat[j].group->order()) CHECK(!are_isomorphic(*cat[i].group, *cat[j].group));
  CHECK(automorphisms(*make_abelian({2, 2})->group()).size() == 6);
  CHECK(automorphisms(*make_symmetric(3)).size() == 6);
  CHECK(automorphisms(*make_quaternion()).size() == 24);
}

TEST_CASE("subgroups") {
  CHECK(all_subgroups(*make_abelian({2, 2})->group()).size() == 5);
  CHECK(all_subgroups(*make_symmetric(3)).size() == 6);
  CHECK(all_subgroups(*make_symmetric(4)).size() == 30);
  auto v = make_abelian({2, 2})->group();
  auto sub = make_subgroup(*v, {0, 1});
  CHECK(sub.group->order() == 2);
  CHECK(sub.to_parent[0] == 0);
}
