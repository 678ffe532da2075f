#include <algorithm>
#include <functional>
#include <string>

#include "doctest.h"
#include "hopftwist/io.hpp"

using namespace hopftwist;

namespace {

Bijective1Cocycle cyclic_datum(int n) {
  auto a = make_cyclic(n);
  std::vector<int> pi(n);
  for (int i = 0; i < n; ++i) pi[i] = i;
  return {trivial_action(a->group(), a), pi};
}

std::string replace_line(const std::string& text, int line, const std::string& with) {
  std::string out;
  int n = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    ++n;
    out += (n == line ? with : text.substr(pos, end - pos)) + "\n";
    pos = end + 1;
  }
  return out;
}

int parse_error_line(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("group round trip") {
  for (const auto& g : {make_dihedral(4), make_quaternion(), make_symmetric(3), make_cyclic(1)->group()}) {
    auto text = write_group(*g);
    auto back = read_group(text);
    CHECK(*back == *g);
    CHECK(back->labels() == g->labels());
    CHECK(back->name() == g->name());
    CHECK(write_group(*back) == text);
    CHECK(document_kind(text) == "group");
  }
}

TEST_CASE("tensor round trip") {
  auto ct = twist_from_1cocycle(cyclic_datum(4));
  const auto& j = ct.twist.element();
  auto text = write_tensor(j);
  auto back = read_tensor(text);
  CHECK(back == j);
  CHECK(*back.group() == *j.group());
  CHECK(write_tensor(back) == text);

  auto r = r_matrix(ct.twist);
  CHECK(read_tensor(write_tensor(r)) == r);

  auto fp = twist_from_1cocycle(cyclic_datum(4), Field::make(FieldSpec::prime(13, 4)));
  auto ptext = write_tensor(fp.twist.element());
  CHECK(ptext.find("field prime 13") != std::string::npos);
  CHECK(read_tensor(ptext) == fp.twist.element());

  TensorElement zero(make_cyclic(3)->group(), 3);
  CHECK(read_tensor(write_tensor(zero)) == zero);
}

TEST_CASE("cocycle data round trip") {
  auto s3 = make_symmetric(3);
  for (const auto& act : all_actions(s3, make_cyclic(6))) {
    for (const auto& d : find_bijective_1cocycles(act)) {
      auto back = read_cocycle_data(write_cocycle_data(d));
      CHECK(back.pi == d.pi);
      CHECK(back.action.images == d.action.images);
      CHECK(*back.action.acting == *d.action.acting);
      CHECK(back.action.target->factors() == d.action.target->factors());
    }
  }
  for (const auto& act : all_actions(make_dihedral(4), make_abelian({2, 4}))) {
    auto back = read_action(write_action(act));
    CHECK(back.images == act.images);
  }
  auto e1 = cyclic_datum(2);
  auto bad = write_cocycle_data(cyclic_datum(4));
  bad.replace(bad.find("pi 0 1 2 3"), 10, "pi 0 2 1 3");
  CHECK_THROWS_AS(read_cocycle_data(bad), ParseError);
  CHECK(write_cocycle_data(read_cocycle_data(write_cocycle_data(e1))) == write_cocycle_data(e1));
}

TEST_CASE("rep and algebra round trip") {
  auto v = heisenberg_rep(cyclic_datum(3));
  auto back = read_rep(write_rep(v));
  CHECK(back.dim == v.dim);
  REQUIRE(back.matrices.size() == v.matrices.size());
  for (size_t h = 0; h < v.matrices.size(); ++h) CHECK(back.matrices[h] == v.matrices[h]);

  auto m = dual_movshev(twist_from_1cocycle(cyclic_datum(2)).twist);
  auto text = write_algebra(m.algebra);
  auto alg = read_algebra(text);
  CHECK(alg.dim() == m.algebra.dim());
  CHECK(alg.labels() == m.algebra.labels());
  CHECK(alg.unit() == m.algebra.unit());
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = 0; j < alg.dim(); ++j)
      for (int k = 0; k < alg.dim(); ++k) CHECK(alg.constant(i, j, k) == m.algebra.constant(i, j, k));
  CHECK(write_algebra(alg) == text);
}

TEST_CASE("parse errors carry line numbers") {
  auto text = write_group(*make_cyclic(3)->group());
  CHECK(parse_error_line([&] { read_group("hopftwist-group v2\n"); }) == 1);
  CHECK(parse_error_line([&] { read_group(""); }) == 0);
  CHECK(parse_error_line([&] { read_tensor(text); }) == 1);
  // line 2 is "order 3"
  CHECK(parse_error_line([&] { read_group(replace_line(text, 2, "order x")); }) == 2);
  // last table row with a missing entry
  CHECK(parse_error_line([&] { read_group(replace_line(text, 9, "2 0")); }) == 9);
  // a non-group table
  CHECK(parse_error_line([&] { read_group(replace_line(text, 9, "2 0 0")); }) > 0);

  auto t = write_tensor(twist_from_1cocycle(cyclic_datum(2)).twist.element());
  auto lines = std::count(t.begin(), t.end(), '\n');
  CHECK(parse_error_line([&] { read_tensor(replace_line(t, static_cast<int>(lines), "0 1 : (1/0)")); }) == lines);
  CHECK(parse_error_line([&] { read_tensor(replace_line(t, static_cast<int>(lines), "0 9 : 1")); }) == lines);
  CHECK(parse_error_line([&] { read_tensor(t + "extra\n"); }) == lines + 1);
  CHECK(parse_error_line([&] { read_tensor(replace_line(t, 2, "field real")); }) == 2);

  // comments and blank lines are skipped, numbering still counts them
  auto commented = "# leading comment\n\n" + text;
  CHECK(*read_group(commented) == *make_cyclic(3)->group());
  CHECK(parse_error_line([&] { read_group(replace_line(commented, 4, "order -1")); }) == 4);
}

TEST_CASE("reports and tables") {
  Report r("demo");
  r.add("first", true, "ok");
  r.add("second", false, "witness 3");
  r.record("size", 4);
  auto text = render_report(r);
  CHECK(text.rfind("hopftwist-report v1\n", 0) == 0);
  CHECK(text.find("[PASS] first: ok") != std::string::npos);
  CHECK(text.find("[FAIL] second: witness 3") != std::string::npos);
  CHECK(text.find("value size = 4") != std::string::npos);
  CHECK(text.find("--- json") != std::string::npos);
  CHECK(text.find("\"passed\": false") != std::string::npos);
  CHECK(document_kind(text) == "report");
  CHECK(render_report(r) == text);

  Table t{"groups", {"name", "order"}, {{"Z2", "2"}, {"S3", "6"}}};
  auto tt = render_table(t);
  CHECK(tt.find("rows 2") != std::string::npos);
  CHECK(tt.find("\"name\": \"S3\"") != std::string::npos);
}

TEST_CASE("field options") {
  CHECK_FALSE(parse_field_option("cyclotomic").is_prime());
  CHECK(parse_field_option("cyclotomic:12").root_order() == 12);
  auto f = parse_field_option("fp:13");
  CHECK(f.characteristic() == 13);
  CHECK(f.supports_root(4));
  CHECK(f.supports_root(12));
  CHECK_THROWS_AS(parse_field_option("fp:15"), std::invalid_argument);
  CHECK_THROWS_AS(parse_field_option("fp:2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_field_option("real"), std::invalid_argument);
  CHECK_THROWS_AS(parse_field_option("fp:1x"), std::invalid_argument);
}
