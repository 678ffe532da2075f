#include "hopftwist/io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace hopftwist {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

// Meaningful lines with their 1-based numbers.
class Lines {
 public:
  explicit Lines(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
      ++n;
      auto t = trim(line);
      if (t.empty() || t[0] == '#') continue;
      lines_.emplace_back(n, t);
    }
  }
  bool done() const { return pos_ >= lines_.size(); }
  int line() const { return done() ? (lines_.empty() ? 0 : lines_.back().first) : lines_[pos_].first; }
  const std::string& peek() const {
    if (done()) throw ParseError(line(), "unexpected end of document");
    return lines_[pos_].second;
  }
  std::string next() {
    const auto& s = peek();
    last_ = lines_[pos_].first;
    ++pos_;
    return s;
  }
  // Line of the most recently consumed entry.
  int consumed() const { return last_; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(last_, msg); }
  // "key rest" with the given key; returns rest.
  std::string expect(const std::string& key) {
    const int at = line();
    auto s = next();
    if (s == key) return {};
    if (s.compare(0, key.size() + 1, key + " ") != 0) throw ParseError(at, "expected '" + key + "'");
    return trim(s.substr(key.size() + 1));
  }
  void header(const std::string& kind) {
    const int at = line();
    auto s = next();
    const std::string want = "hopftwist-" + kind + " v1";
    if (s != want) {
      if (s.rfind("hopftwist-" + kind + " ", 0) == 0) throw ParseError(at, "unsupported version: " + s);
      throw ParseError(at, "expected header '" + want + "'");
    }
  }
  void finish() {
    if (!done()) throw ParseError(line(), "unexpected trailing content");
  }

 private:
  std::vector<std::pair<int, std::string>> lines_;
  size_t pos_ = 0;
  int last_ = 0;
};

long parse_int(const std::string& s, const Lines& in, const std::string& what) {
  try {
    size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError(in.consumed(), "invalid integer for " + what + ": '" + s + "'");
  }
}

std::vector<long> parse_ints(const std::string& s, const Lines& in, const std::string& what) {
  std::vector<long> out;
  for (const auto& w : split_ws(s)) out.push_back(parse_int(w, in, what));
  return out;
}

// Field of a collection and the conductor its scalars are written in.
struct FieldLine {
  Field field;
  int conductor = 1;
};

FieldLine field_for(const std::vector<Scalar>& xs) {
  FieldLine f{field_of(xs), 1};
  if (!f.field.is_prime()) f.conductor = f.field.root_order();
  return f;
}

std::string write_field(const FieldLine& f) { return "field " + f.field.describe() + "\n"; }

std::string scalar_text(const Scalar& x, const FieldLine& f) {
  return f.field.is_prime() ? x.to_string() : x.to_string(f.conductor);
}

FieldLine read_field(Lines& in) {
  const int at = in.line();
  auto w = split_ws(in.expect("field"));
  try {
    if (w.size() == 2 && w[0] == "cyclotomic") {
      const int n = static_cast<int>(parse_int(w[1], in, "conductor"));
      return {Field::make(FieldSpec::cyclotomic(n)), n};
    }
    if (w.size() == 4 && w[0] == "prime") {
      auto p = static_cast<std::uint64_t>(parse_int(w[1], in, "modulus"));
      auto n = static_cast<int>(parse_int(w[2], in, "root order"));
      auto r = static_cast<std::uint64_t>(parse_int(w[3], in, "root"));
      return {Field::make(FieldSpec::prime(p, n, r)), 1};
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(at, std::string("invalid field: ") + e.what());
  }
  throw ParseError(at, "expected 'field cyclotomic N' or 'field prime P N ROOT'");
}

Scalar read_scalar(const std::string& s, const FieldLine& f, int line) {
  try {
    return parse_scalar(trim(s), f.field, f.conductor);
  } catch (const std::exception& e) {
    throw ParseError(line, "invalid scalar '" + trim(s) + "': " + e.what());
  }
}

void write_group_body(std::ostringstream& out, const FiniteGroup& g) {
  if (!g.name().empty()) out << "name " << g.name() << "\n";
  out << "order " << g.order() << "\n";
  for (int x = 0; x < g.order(); ++x) {
    if (g.label(x).find('\n') != std::string::npos) throw std::invalid_argument("group label contains a newline");
    out << "label " << g.label(x) << "\n";
  }
  out << "table\n";
  for (int x = 0; x < g.order(); ++x) {
    for (int y = 0; y < g.order(); ++y) out << (y ? " " : "") << g.mul(x, y);
    out << "\n";
  }
}

GroupPtr read_group_body(Lines& in) {
  std::string name;
  if (in.peek().rfind("name", 0) == 0) name = in.expect("name");
  const long n = parse_int(in.expect("order"), in, "order");
  if (n < 1 || n > 4096) in.fail("order out of range");
  std::vector<std::string> labels;
  for (long x = 0; x < n; ++x) labels.push_back(in.expect("label"));
  in.expect("table");
  std::vector<int> table;
  for (long x = 0; x < n; ++x) {
    auto row = parse_ints(in.next(), in, "table entry");
    if (static_cast<long>(row.size()) != n) throw ParseError(in.consumed(), "table row " + std::to_string(x) + " needs " + std::to_string(n) + " entries");
    for (long v : row) table.push_back(static_cast<int>(v));
  }
  try {
    return std::make_shared<FiniteGroup>(static_cast<int>(n), std::move(table), std::move(labels), name);
  } catch (const std::exception& e) {
    throw ParseError(in.consumed(), std::string("invalid group: ") + e.what());
  }
}

void write_embedded_group(std::ostringstream& out, const FiniteGroup& g) {
  out << "group\n";
  write_group_body(out, g);
  out << "end group\n";
}

GroupPtr read_embedded_group(Lines& in) {
  in.expect("group");
  auto g = read_group_body(in);
  in.expect("end group");
  return g;
}

std::vector<Scalar> matrix_scalars(const std::vector<Matrix>& ms) {
  std::vector<Scalar> out;
  for (const auto& m : ms)
    for (size_t i = 0; i < m.rows(); ++i)
      for (size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

}  // namespace

std::string document_kind(const std::string& text) {
  Lines in(text);
  if (in.done()) throw ParseError(0, "empty document");
  const int at = in.line();
  auto w = split_ws(in.next());
  if (w.size() != 2 || w[0].rfind("hopftwist-", 0) != 0) throw ParseError(at, "missing hopftwist header");
  return w[0].substr(10);
}

std::string write_group(const FiniteGroup& g) {
  std::ostringstream out;
  out << "hopftwist-group v1\n";
  write_group_body(out, g);
  return out.str();
}

GroupPtr read_group(const std::string& text) {
  Lines in(text);
  in.header("group");
  auto g = read_group_body(in);
  in.finish();
  return g;
}

std::string write_tensor(const TensorElement& t) {
  std::ostringstream out;
  out << "hopftwist-tensor v1\n";
  auto f = field_for(t.coefficient_list());
  out << write_field(f);
  out << "rank " << t.rank() << "\n";
  write_embedded_group(out, *t.group());
  out << "terms " << t.size() << "\n";
  for (const auto& [k, c] : t.terms()) {
    for (int s = 0; s < t.rank(); ++s) out << (s ? " " : "") << t.slot(k, s);
    out << " : " << scalar_text(c, f) << "\n";
  }
  return out.str();
}

TensorElement read_tensor(const std::string& text) {
  Lines in(text);
  in.header("tensor");
  auto f = read_field(in);
  const long rank = parse_int(in.expect("rank"), in, "rank");
  if (rank < 1 || rank > 3) in.fail("rank must be 1, 2 or 3");
  auto g = read_embedded_group(in);
  const long terms = parse_int(in.expect("terms"), in, "term count");
  if (terms < 0) in.fail("negative term count");
  TensorElement t(g, static_cast<int>(rank));
  for (long i = 0; i < terms; ++i) {
    const int at = in.line();
    auto line = in.next();
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(at, "expected 'indices : scalar'");
    auto idx = parse_ints(line.substr(0, colon), in, "index");
    if (static_cast<long>(idx.size()) != rank) throw ParseError(at, "expected " + std::to_string(rank) + " indices");
    std::vector<int> ix;
    for (long v : idx) {
      if (v < 0 || v >= g->order()) throw ParseError(at, "index " + std::to_string(v) + " out of range");
      ix.push_back(static_cast<int>(v));
    }
    t.add_term(ix, read_scalar(line.substr(colon + 1), f, at));
  }
  in.finish();
  return t;
}

namespace {

void write_action_body(std::ostringstream& out, const GroupAction& act) {
  out << "abelian";
  for (int d : act.target->factors()) out << " " << d;
  out << "\n";
  write_embedded_group(out, *act.acting);
  out << "action\n";
  for (const auto& row : act.images) {
    for (size_t a = 0; a < row.size(); ++a) out << (a ? " " : "") << row[a];
    out << "\n";
  }
}

GroupAction read_action_body(Lines& in) {
  const int at = in.line();
  auto factors = parse_ints(in.expect("abelian"), in, "invariant factor");
  std::vector<int> fs;
  for (long d : factors) {
    if (d < 1 || d > 4096) in.fail("invariant factors must lie in 1..4096");
    fs.push_back(static_cast<int>(d));
  }
  std::shared_ptr<const AbelianGroup> a;
  try {
    a = make_abelian(fs);
  } catch (const std::exception& e) {
    throw ParseError(at, std::string("invalid abelian group: ") + e.what());
  }
  auto g = read_embedded_group(in);
  in.expect("action");
  std::vector<std::vector<int>> images;
  for (int x = 0; x < g->order(); ++x) {
    auto row = parse_ints(in.next(), in, "action entry");
    if (static_cast<int>(row.size()) != a->order())
      throw ParseError(in.consumed(), "action row needs " + std::to_string(a->order()) + " entries");
    for (long v : row)
      if (v < 0 || v >= a->order()) throw ParseError(in.consumed(), "action entry out of range");
    images.emplace_back(row.begin(), row.end());
  }
  GroupAction act{g, a, std::move(images)};
  auto err = act.validate();
  if (!err.empty()) throw ParseError(in.consumed(), "invalid action: " + err);
  return act;
}

}  // namespace

std::string write_action(const GroupAction& act) {
  std::ostringstream out;
  out << "hopftwist-action v1\n";
  write_action_body(out, act);
  return out.str();
}

GroupAction read_action(const std::string& text) {
  Lines in(text);
  in.header("action");
  auto act = read_action_body(in);
  in.finish();
  return act;
}

std::string write_cocycle_data(const Bijective1Cocycle& data) {
  std::ostringstream out;
  out << "hopftwist-1cocycle v1\n";
  write_action_body(out, data.action);
  out << "pi";
  for (int p : data.pi) out << " " << p;
  out << "\n";
  return out.str();
}

Bijective1Cocycle read_cocycle_data(const std::string& text) {
  Lines in(text);
  in.header("1cocycle");
  auto act = read_action_body(in);
  auto pi = parse_ints(in.expect("pi"), in, "pi entry");
  const int at = in.consumed();
  in.finish();
  if (pi.size() != act.images.size()) throw ParseError(at, "pi needs one entry per element of G");
  for (long p : pi)
    if (p < 0 || p >= act.target->order()) throw ParseError(at, "pi entry out of range");
  Bijective1Cocycle data{std::move(act), std::vector<int>(pi.begin(), pi.end())};
  auto err = check_bijective_1cocycle_detail(data);
  if (!err.empty()) throw ParseError(at, "not a bijective 1-cocycle: " + err);
  return data;
}

std::string write_rep(const ProjectiveRep& v) {
  std::ostringstream out;
  out << "hopftwist-rep v1\n";
  auto f = field_for(matrix_scalars(v.matrices));
  out << write_field(f);
  write_embedded_group(out, *v.group);
  out << "dim " << v.dim << "\n";
  for (int h = 0; h < v.group->order(); ++h) {
    out << "matrix " << h << "\n";
    const auto& m = v.matrices[h];
    for (size_t i = 0; i < m.rows(); ++i) {
      for (size_t j = 0; j < m.cols(); ++j) out << (j ? " ; " : "") << scalar_text(m(i, j), f);
      out << "\n";
    }
  }
  return out.str();
}

ProjectiveRep read_rep(const std::string& text) {
  Lines in(text);
  in.header("rep");
  auto f = read_field(in);
  auto g = read_embedded_group(in);
  const long d = parse_int(in.expect("dim"), in, "dimension");
  if (d < 1 || d > 64) in.fail("dimension out of range");
  std::vector<Matrix> mats;
  for (int h = 0; h < g->order(); ++h) {
    const int at = in.line();
    if (parse_int(in.expect("matrix"), in, "matrix index") != h) throw ParseError(at, "expected matrix " + std::to_string(h));
    Matrix m(static_cast<size_t>(d), static_cast<size_t>(d));
    for (long i = 0; i < d; ++i) {
      const int row_line = in.line();
      auto row = in.next();
      std::vector<std::string> cells;
      std::string cell;
      std::istringstream rs(row);
      while (std::getline(rs, cell, ';')) cells.push_back(cell);
      if (static_cast<long>(cells.size()) != d) throw ParseError(row_line, "matrix row needs " + std::to_string(d) + " entries");
      for (long j = 0; j < d; ++j) m(i, j) = read_scalar(cells[j], f, row_line);
    }
    mats.push_back(std::move(m));
  }
  in.finish();
  try {
    return lift_projective(g, std::move(mats));
  } catch (const std::exception& e) {
    throw ParseError(0, std::string("not a projective representation: ") + e.what());
  }
}

std::string write_algebra(const StructureConstantAlgebra& a) {
  std::vector<Scalar> all(a.unit().begin(), a.unit().end());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (const auto& [k, c] : a.product(i, j)) all.push_back(c);
  auto f = field_for(all);
  std::ostringstream out;
  out << "hopftwist-algebra v1\n" << write_field(f);
  out << "dim " << a.dim() << "\n";
  for (const auto& l : a.labels()) out << "label " << l << "\n";
  out << "unit\n";
  for (const auto& c : a.unit()) out << scalar_text(c, f) << "\n";
  size_t count = 0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (const auto& kc : a.product(i, j)) count += !kc.second.is_zero();
  out << "products " << count << "\n";
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      auto p = a.product(i, j);
      std::sort(p.begin(), p.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      for (const auto& [k, c] : p)
        if (!c.is_zero()) out << i << " " << j << " " << k << " : " << scalar_text(c, f) << "\n";
    }
  return out.str();
}

StructureConstantAlgebra read_algebra(const std::string& text) {
  Lines in(text);
  in.header("algebra");
  auto f = read_field(in);
  const long d = parse_int(in.expect("dim"), in, "dimension");
  if (d < 0 || d > 4096) in.fail("dimension out of range");
  std::vector<std::string> labels;
  for (long i = 0; i < d; ++i) labels.push_back(in.expect("label"));
  StructureConstantAlgebra a(static_cast<int>(d), labels);
  in.expect("unit");
  Vector unit;
  for (long i = 0; i < d; ++i) {
    const int at = in.line();
    unit.push_back(read_scalar(in.next(), f, at));
  }
  a.set_unit(std::move(unit));
  const long count = parse_int(in.expect("products"), in, "product count");
  std::vector<StructureConstantAlgebra::Sparse> prods(static_cast<size_t>(d * d));
  for (long t = 0; t < count; ++t) {
    const int at = in.line();
    auto line = in.next();
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(at, "expected 'i j k : scalar'");
    auto idx = parse_ints(line.substr(0, colon), in, "index");
    if (idx.size() != 3) throw ParseError(at, "expected three indices");
    for (long v : idx)
      if (v < 0 || v >= d) throw ParseError(at, "index out of range");
    prods[static_cast<size_t>(idx[0] * d + idx[1])].emplace_back(static_cast<int>(idx[2]), read_scalar(line.substr(colon + 1), f, at));
  }
  in.finish();
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j) a.set_product(static_cast<int>(i), static_cast<int>(j), std::move(prods[static_cast<size_t>(i * d + j)]));
  return a;
}

std::string render_report(const Report& r) {
  std::ostringstream out;
  out << "hopftwist-report v1\n";
  out << "title " << r.title() << "\n";
  size_t failed = 0;
  for (const auto& c : r.checks()) {
    failed += !c.passed;
    out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  for (const auto& [k, v] : r.values()) out << "value " << k << " = " << v << "\n";
  out << "summary " << (r.checks().size() - failed) << "/" << r.checks().size() << " checks passed, "
      << (failed == 0 ? "all certificates hold" : std::to_string(failed) + " failed") << "\n";
  nlohmann::ordered_json j;
  j["title"] = r.title();
  j["passed"] = r.passed();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks()) j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["values"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.values()) j["values"][k] = v;
  out << "--- json\n" << j.dump(2) << "\n";
  return out.str();
}

std::string render_table(const Table& t) {
  std::vector<size_t> width(t.columns.size(), 0);
  for (size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
  for (const auto& row : t.rows)
    for (size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  out << "hopftwist-table v1\n";
  out << "title " << t.title << "\n";
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (size_t c = 0; c < cells.size(); ++c) {
      std::string cell = cells[c];
      if (c + 1 < cells.size()) cell.resize(width[c], ' ');
      s += (c ? "  " : "") + cell;
    }
    out << trim(s) << "\n";
  };
  line(t.columns);
  for (const auto& row : t.rows) line(row);
  out << "rows " << t.rows.size() << "\n";
  nlohmann::ordered_json j;
  j["title"] = t.title;
  j["columns"] = t.columns;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj;
    for (size_t c = 0; c < row.size() && c < t.columns.size(); ++c) obj[t.columns[c]] = row[c];
    j["rows"].push_back(obj);
  }
  out << "--- json\n" << j.dump(2) << "\n";
  return out.str();
}

Field parse_field_option(const std::string& text) {
  if (text == "cyclotomic") return Field();
  if (text.rfind("cyclotomic:", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(text.substr(11));
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid field '" + text + "'");
    }
    return Field::make(FieldSpec::cyclotomic(n));
  }
  if (text.rfind("fp:", 0) == 0) {
    long p = 0;
    try {
      size_t used = 0;
      p = std::stol(text.substr(3), &used);
      if (used != text.size() - 3) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid field '" + text + "'");
    }
    if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) throw std::invalid_argument("fp:P needs an odd prime P");
    return Field::make(FieldSpec::prime(static_cast<std::uint64_t>(p), static_cast<int>(p - 1)));
  }
  throw std::invalid_argument("field must be 'cyclotomic' or 'fp:P', got '" + text + "'");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace hopftwist
