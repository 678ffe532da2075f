#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hopftwist/io.hpp"

using namespace hopftwist;

namespace {

struct RunConfig {
  std::string field = "cyclotomic";
  std::uint64_t seed = 1;
  std::string out;
  bool quiet = false;
};

// Outcome of one subcommand: a report or a table, plus an optional artifact.
struct Outcome {
  std::optional<Report> report;
  std::optional<Table> table;
  bool passed = true;
  std::string artifact;
};

int element_of(const FiniteGroup& g, const std::string& text) {
  if (auto x = g.find_label(text)) return *x;
  try {
    size_t used = 0;
    int v = std::stoi(text, &used);
    if (used == text.size() && v >= 0 && v < g.order()) return v;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("no element '" + text + "' in the group");
}

std::vector<int> parse_factors(const std::string& text) {
  std::vector<int> out;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, text.find('x') != std::string::npos ? 'x' : ',')) {
    if (!part.empty() && part[0] == 'Z') part = part.substr(1);
    try {
      out.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid abelian group '" + text + "'");
    }
  }
  if (out.empty()) throw std::invalid_argument("invalid abelian group '" + text + "'");
  return out;
}

GroupPtr named_group(const std::string& name) {
  auto cg = catalog_group(name);
  if (!cg) throw std::invalid_argument("unknown catalog group '" + name + "'");
  return cg->group;
}

TensorElement load_tensor(const std::string& path, const std::string& group_path) {
  auto t = read_tensor(read_text_file(path));
  if (!group_path.empty()) {
    auto g = read_group(read_text_file(group_path));
    if (!(*g == *t.group())) throw std::invalid_argument("the tensor is not over the given group");
  }
  return t;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

TensorElement full_r(const Twist& j, const std::string& u_text, int& u) {
  u = j.group()->identity();
  if (!u_text.empty()) u = element_of(*j.group(), u_text);
  auto r = r_matrix(j);
  if (u != j.group()->identity()) r = r * r_u(j.group(), u);
  return r;
}

// ---- subcommands ----

Outcome verify_twist_cmd(const std::string& twist, const std::string& group) {
  auto t = load_tensor(twist, group);
  auto rep = twist_report(t);
  Report r("verify-twist " + twist);
  r.record("group order", t.group_order());
  r.record("terms", static_cast<long>(t.size()));
  r.merge(rep);
  return {r, std::nullopt, r.passed(), {}};
}

Outcome r_matrix_cmd(const std::string& twist, const std::string& group, const std::string& u_text) {
  auto j = verify_twist(load_tensor(twist, group));
  int u = 0;
  auto r = full_r(j, u_text, u);
  Report rep("r-matrix " + twist);
  rep.record("u", j.group()->label(u));
  rep.record("terms", static_cast<long>(r.size()));
  rep.merge(verify_triangular(j, r));
  return {rep, std::nullopt, rep.passed(), write_tensor(r)};
}

Outcome drinfeld_cmd(const std::string& twist, const std::string& group, const std::string& u_text) {
  auto j = verify_twist(load_tensor(twist, group));
  int u = 0;
  auto r = full_r(j, u_text, u);
  auto d = drinfeld_element(r, twisted_antipode(j));
  Report rep("drinfeld " + twist);
  rep.merge(drinfeld_report(d, j));
  auto expect = TensorElement::basis(j.group(), {u});
  rep.add("drinfeld element", d == expect, "u = " + j.group()->label(u));
  const long n = j.group()->order();
  auto trace = regular_trace(d);
  auto want = Scalar::integer(u == j.group()->identity() ? n : 0);
  rep.add("regular trace", trace == field_of(trace).coerce(want), trace.to_string());
  return {rep, std::nullopt, rep.passed(), write_tensor(d)};
}

Outcome minimal_cmd(const std::string& twist, const std::string& group, const std::string& u_text) {
  auto j = verify_twist(load_tensor(twist, group));
  int u = 0;
  auto r = full_r(j, u_text, u);
  Report rep("minimal " + twist);
  bool m = verify_minimal(r);
  rep.record("minimal", yes_no(m));
  rep.add("minimal", m, m ? "both leg spans are all of k[G]" : "a leg span is a proper subspace");
  return {rep, std::nullopt, rep.passed(), {}};
}

Outcome movshev_cmd(const std::string& twist, const std::string& group, bool simple, bool regular, bool grouplikes) {
  if (!simple && !regular && !grouplikes) simple = regular = grouplikes = true;
  auto j = verify_twist(load_tensor(twist, group));
  auto m = dual_movshev(j);
  Report rep("movshev " + twist);
  rep.record("dimension", m.algebra.dim());
  if (simple) rep.merge(certify_simple(m));
  if (regular) rep.merge(certify_regular_action(m));
  if (grouplikes) rep.record("grouplikes", static_cast<long>(count_grouplikes(j)));
  return {rep, std::nullopt, rep.passed(), write_algebra(m.algebra)};
}

Outcome trivialize_cmd(const std::string& twist, const std::string& group, std::uint64_t seed) {
  auto j = verify_twist(load_tensor(twist, group));
  auto x = trivialize_symmetric_twist(j, seed);
  auto trivial = verify_twist(TensorElement::unit(j.group(), 2));
  Report rep("trivialize " + twist);
  rep.record("terms", static_cast<long>(x.size()));
  rep.add("gauge round trip", gauge_transform(trivial, x).element() == j.element(),
          "Delta(x)(x^-1 (x) x^-1) = J");
  return {rep, std::nullopt, rep.passed(), write_tensor(x)};
}

ProjectiveRep rep_in_field(const ProjectiveRep& v, const Field& f) {
  if (!f.is_prime()) return v;
  std::vector<Matrix> ms;
  for (const auto& m : v.matrices) {
    Matrix c(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
      for (size_t k = 0; k < m.cols(); ++k) c(i, k) = f.coerce(m(i, k));
    ms.push_back(std::move(c));
  }
  return lift_projective(v.group, std::move(ms));
}

Outcome build_twist_cmd(const std::string& cocycle_file, const std::string& rep_file, const RunConfig& cfg) {
  auto field = parse_field_option(cfg.field);
  Report rep;
  TensorElement j, jinv;
  if (!cocycle_file.empty()) {
    auto data = read_cocycle_data(read_text_file(cocycle_file));
    auto ct = twist_from_1cocycle(data, field);
    j = ct.twist.element();
    jinv = ct.twist.inverse();
    rep = Report("build-twist " + cocycle_file);
  } else {
    auto v = rep_in_field(read_rep(read_text_file(rep_file)), field);
    auto rt = twist_from_rep(v, cfg.seed);
    j = rt.twist.element();
    jinv = rt.twist.inverse();
    rep = Report("build-twist " + rep_file);
    rep.record("candidate", rt.candidate);
  }
  rep.record("group order", j.group_order());
  rep.record("terms", static_cast<long>(j.size()));
  rep.merge(twist_report(j, jinv));
  return {rep, std::nullopt, rep.passed(), write_tensor(j)};
}

Outcome find_cmd(const std::string& g_name, const std::string& a_text, const std::string& action_file,
                 const std::string& dir) {
  auto g = named_group(g_name);
  auto a = make_abelian(parse_factors(a_text));
  std::vector<GroupAction> actions;
  if (!action_file.empty()) {
    auto act = read_action(read_text_file(action_file));
    if (!(*act.acting == *g)) throw std::invalid_argument("the action file is not over " + g_name);
    if (act.target->factors() != a->factors()) throw std::invalid_argument("the action file is not on " + a_text);
    actions.push_back(std::move(act));
  } else {
    actions = all_actions(g, a);
  }
  Table t{"bijective 1-cocycles " + g_name + " on " + a_text, {"datum", "action", "pi", "valid"}, {}};
  bool ok = true;
  int k = 0;
  if (!dir.empty()) std::filesystem::create_directories(dir);
  for (size_t ai = 0; ai < actions.size(); ++ai) {
    for (const auto& d : find_bijective_1cocycles(actions[ai])) {
      std::string pi;
      for (int p : d.pi) pi += (pi.empty() ? "" : " ") + std::to_string(p);
      bool valid = check_bijective_1cocycle(d);
      ok = ok && valid;
      t.rows.push_back({std::to_string(k), std::to_string(ai), pi, yes_no(valid)});
      if (!dir.empty())
        write_text_file((std::filesystem::path(dir) / ("cocycle_" + std::to_string(k) + ".dat")).string(),
                        write_cocycle_data(d));
      ++k;
    }
  }
  return {std::nullopt, t, ok, {}};
}

Outcome eq2345_cmd(const std::string& file, const RunConfig& cfg) {
  auto data = read_cocycle_data(read_text_file(file));
  Report rep("verify-eq2345 " + file);
  rep.merge(verify_eq2345(data, parse_field_option(cfg.field)));
  return {rep, std::nullopt, rep.passed(), {}};
}

Outcome classify_cmd(int order, bool dedup, const RunConfig& cfg) {
  auto data = enumerate_quadruples(order, parse_field_option(cfg.field), dedup, cfg.seed);
  Table t{"triangular data of order " + std::to_string(order),
          {"G", "|H|", "dim V", "u", "minimal", "grouplikes", "solvable", "certificates"},
          {}};
  bool ok = true;
  for (const auto& d : data) {
    const auto& g = *d.quad.g;
    std::string cert = "pass";
    if (!d.report.passed()) {
      ok = false;
      cert = "fail: " + d.report.first_failure()->name;
    }
    t.rows.push_back({catalog_name(g), std::to_string(d.quad.h.size()), std::to_string(d.quad.v.dim),
                      g.label(d.quad.u), yes_no(d.minimal), std::to_string(d.grouplikes), yes_no(d.solvable),
                      cert});
  }
  return {std::nullopt, t, ok, {}};
}

Outcome catalog_list_cmd(int max_order) {
  Table t{"catalog groups up to order " + std::to_string(max_order), {"name", "order", "abelian", "solvable"}, {}};
  for (const auto& cg : group_catalog(max_order))
    t.rows.push_back({cg.name, std::to_string(cg.group->order()), yes_no(cg.group->is_abelian()),
                      yes_no(is_solvable(*cg.group))});
  return {std::nullopt, t, true, {}};
}

Outcome catalog_show_cmd(const std::string& name) {
  auto g = named_group(name);
  Report rep("catalog " + name);
  rep.record("order", g->order());
  return {rep, std::nullopt, true, write_group(*g)};
}

std::string summary_line(const std::string& doc) {
  auto pos = doc.find("\nsummary ");
  if (pos == std::string::npos) return {};
  return doc.substr(pos + 1, doc.find('\n', pos + 1) - pos);
}

int emit(const Outcome& o, const RunConfig& cfg) {
  std::string doc = o.report ? render_report(*o.report) : render_table(*o.table);
  // With no --out, an artifact goes to stdout and the report to stderr.
  std::ostream& report_stream = (!o.artifact.empty() && cfg.out.empty()) ? std::cerr : std::cout;
  if (!o.artifact.empty()) {
    if (cfg.out.empty())
      std::cout << o.artifact;
    else
      write_text_file(cfg.out, o.artifact);
  }
  if (cfg.quiet) {
    auto s = summary_line(doc);
    if (s.empty())
      s = "rows " + std::to_string(o.table->rows.size()) + ", " +
          (o.passed ? "all certificates hold" : "some certificates failed") + "\n";
    report_stream << s;
  } else {
    report_stream << doc;
  }
  if (!o.passed && o.report) {
    if (const auto* c = o.report->first_failure()) std::cerr << "failed: " << c->name << "\n";
  }
  return o.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact construction and verification of Drinfeld twists of finite group algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--field", cfg.field, "cyclotomic, cyclotomic:N or fp:P")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized searches")->capture_default_str();
  app.add_option("--out", cfg.out, "artifact output path");
  app.add_flag("-q,--quiet", cfg.quiet, "print only the summary line");

  std::string twist, group, u, cocycle_file, rep_file, g_name, a_text, action_file, data_file;
  int order = 0, max_order = 32;
  bool simple = false, regular = false, grouplikes = false, dedup = false;
  std::function<Outcome()> run;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--field", cfg.field, "cyclotomic, cyclotomic:N or fp:P");
    sub->add_option("--seed", cfg.seed, "seed for randomized searches");
    sub->add_option("--out", cfg.out, "artifact output path");
  };
  auto add_twist = [&](CLI::App* sub) {
    sub->add_option("--twist", twist, "tensor file holding J")->required()->check(CLI::ExistingFile);
    sub->add_option("--group", group, "group file the twist must live over")->check(CLI::ExistingFile);
    add_common(sub);
  };

  auto* vt = app.add_subcommand("verify-twist", "check the twist identities");
  add_twist(vt);
  vt->callback([&] { run = [&] { return verify_twist_cmd(twist, group); }; });

  auto* rm = app.add_subcommand("r-matrix", "R = J21^-1 J (times R_u) and the triangular axioms");
  add_twist(rm);
  rm->add_option("--u", u, "central element of order at most 2 (label or index)");
  rm->callback([&] { run = [&] { return r_matrix_cmd(twist, group, u); }; });

  auto* dr = app.add_subcommand("drinfeld", "Drinfeld element of R");
  add_twist(dr);
  dr->add_option("--u", u, "central element of order at most 2 (label or index)");
  dr->callback([&] { run = [&] { return drinfeld_cmd(twist, group, u); }; });

  auto* mn = app.add_subcommand("minimal", "whether R is minimal");
  add_twist(mn);
  mn->add_option("--u", u, "central element of order at most 2 (label or index)");
  mn->callback([&] { run = [&] { return minimal_cmd(twist, group, u); }; });

  auto* mv = app.add_subcommand("movshev", "the algebra B_J* and its certificates");
  add_twist(mv);
  mv->add_flag("--certify-simple", simple);
  mv->add_flag("--regular", regular);
  mv->add_flag("--grouplikes", grouplikes);
  mv->callback([&] { run = [&] { return movshev_cmd(twist, group, simple, regular, grouplikes); }; });

  auto* tr = app.add_subcommand("trivialize", "gauge x with J = Delta(x)(x^-1 (x) x^-1) for a symmetric J");
  add_twist(tr);
  tr->callback([&] { run = [&] { return trivialize_cmd(twist, group, cfg.seed); }; });

  auto* bt = app.add_subcommand("build-twist", "twist from a bijective 1-cocycle or a projective representation");
  auto* from = bt->add_option("--from-1cocycle", cocycle_file, "1-cocycle data file")->check(CLI::ExistingFile);
  bt->add_option("--from-rep", rep_file, "representation file")->check(CLI::ExistingFile)->excludes(from);
  add_common(bt);
  bt->callback([&] {
    if (cocycle_file.empty() && rep_file.empty()) throw CLI::ValidationError("give --from-1cocycle or --from-rep");
    run = [&] { return build_twist_cmd(cocycle_file, rep_file, cfg); };
  });

  auto* fc = app.add_subcommand("find-1cocycles", "bijective 1-cocycles G -> A");
  fc->add_option("--G", g_name, "catalog group name")->required();
  fc->add_option("--A", a_text, "abelian group, e.g. 2x2 or Z2xZ4")->required();
  fc->add_option("--action", action_file, "action file (default: every action)")->check(CLI::ExistingFile);
  add_common(fc);
  fc->callback([&] { run = [&] { return find_cmd(g_name, a_text, action_file, cfg.out); }; });

  auto* eq = app.add_subcommand("verify-eq2345", "closed forms for B_J and B_J* and the map onto End(V)");
  eq->add_option("data", data_file, "1-cocycle data file")->required()->check(CLI::ExistingFile);
  add_common(eq);
  eq->callback([&] { run = [&] { return eq2345_cmd(data_file, cfg); }; });

  auto* cl = app.add_subcommand("classify", "all triangular data (G, H, V, u) of a given order");
  cl->add_option("--order", order, "|G|")->required()->check(CLI::Range(1, 32));
  cl->add_flag("--dedup", dedup, "merge isomorphic quadruples");
  add_common(cl);
  cl->callback([&] { run = [&] { return classify_cmd(order, dedup, cfg); }; });

  auto* cat = app.add_subcommand("catalog", "built-in groups");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "list the built-in groups");
  cat_list->add_option("--max-order", max_order, "largest order")->check(CLI::Range(1, 32));
  cat_list->callback([&] { run = [&] { return catalog_list_cmd(max_order); }; });
  std::string show_name;
  auto* cat_show = cat->add_subcommand("show", "write a built-in group in the group format");
  cat_show->add_option("name", show_name)->required();
  cat_show->add_option("--out", cfg.out, "artifact output path");
  cat_show->callback([&] { run = [&] { return catalog_show_cmd(show_name); }; });

  CLI11_PARSE(app, argc, argv);

  try {
    return emit(run(), cfg);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CertificateFailure& e) {
    std::cout << render_report(e.report());
    std::cerr << "failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
