#include "hopftwist/projective.hpp"

namespace hopftwist {

Cocycle2 Cocycle2::trivial(const GroupPtr& g) {
  Cocycle2 c{g, std::vector<Scalar>(static_cast<size_t>(g->order()) * g->order(), Scalar::integer(1))};
  return c;
}

std::string Cocycle2::validate() const {
  const auto& g = *group;
  const int n = g.order();
  if (values.size() != static_cast<size_t>(n) * n) return "value table has the wrong size";
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if ((*this)(x, y).is_zero()) return "c(" + g.label(x) + "," + g.label(y) + ") = 0";
  const int e = g.identity();
  for (int x = 0; x < n; ++x)
    if (!(*this)(e, x).is_one() || !(*this)(x, e).is_one()) return "not normalized at " + g.label(x);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Scalar& cxy = (*this)(x, y);
      const int xy = g.mul(x, y);
      for (int z = 0; z < n; ++z)
        if (cxy * (*this)(xy, z) != (*this)(y, z) * (*this)(x, g.mul(y, z)))
          return "cocycle identity fails at (" + g.label(x) + "," + g.label(y) + "," + g.label(z) + ")";
    }
  return {};
}

Cocycle2 Cocycle2::times_coboundary(const std::vector<Scalar>& mu) const {
  Cocycle2 out = *this;
  const int n = group->order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) out.at(x, y) = (*this)(x, y) * mu[x] * mu[y] / mu[group->mul(x, y)];
  return out;
}

Cocycle2 Cocycle2::divide(const Cocycle2& d) const {
  if (d.group->order() != group->order()) throw ConstructionError("cocycles over different groups");
  Cocycle2 out = *this;
  for (size_t i = 0; i < values.size(); ++i) out.values[i] = values[i] / d.values[i];
  return out;
}

ProjectiveRep lift_projective(const GroupPtr& h, std::vector<Matrix> matrices) {
  const int n = h->order();
  if (static_cast<int>(matrices.size()) != n) throw ConstructionError("need one matrix per group element");
  const size_t d = matrices[0].rows();
  for (const auto& m : matrices)
    if (m.rows() != d || m.cols() != d) throw ConstructionError("representatives must be square of equal size");
  for (int x = 0; x < n; ++x)
    if (rank(matrices[x]) != d) throw ConstructionError("representative of " + h->label(x) + " is singular");

  auto proportional = [&](const Matrix& p, const Matrix& q, Scalar& ratio) {
    size_t r0 = 0, c0 = 0;
    bool found = false;
    for (size_t r = 0; r < d && !found; ++r)
      for (size_t c = 0; c < d && !found; ++c)
        if (!q(r, c).is_zero()) {
          r0 = r;
          c0 = c;
          found = true;
        }
    ratio = p(r0, c0) / q(r0, c0);
    return ratio * q == p;
  };

  const int e = h->identity();
  Scalar s;
  if (!proportional(matrices[e], Matrix::identity(d), s)) throw ConstructionError("representative of e is not scalar");
  matrices[e] = Matrix::identity(d);

  ProjectiveRep v{h, static_cast<int>(d), std::move(matrices), Cocycle2::trivial(h)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Scalar c;
      if (!proportional(v.matrices[x] * v.matrices[y], v.matrices[h->mul(x, y)], c))
        throw ConstructionError("pi(" + h->label(x) + ") pi(" + h->label(y) + ") is not a multiple of pi(" +
                                h->label(h->mul(x, y)) + ")");
      v.cocycle.at(x, y) = c;
    }
  auto err = v.cocycle.validate();
  if (!err.empty()) throw ConstructionError("derived cocycle invalid: " + err);
  return v;
}

StructureConstantAlgebra twisted_group_algebra(const Cocycle2& c) {
  auto err = c.validate();
  if (!err.empty()) throw ConstructionError("invalid cocycle: " + err);
  const auto& g = *c.group;
  const int n = g.order();
  std::vector<std::string> labels;
  for (int x = 0; x < n; ++x) labels.push_back("X_" + g.label(x));
  StructureConstantAlgebra a(n, labels);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) a.set_product(x, y, {{g.mul(x, y), c(x, y)}});
  a.set_unit(a.basis_vector(g.identity()));
  return a;
}

bool is_nondegenerate(const Cocycle2& c) { return center_dimension(twisted_group_algebra(c)) == 1; }

bool alternating_bicharacter_perfect(const Cocycle2& c) {
  const auto& g = *c.group;
  if (!g.is_abelian()) throw ConstructionError("alternating bicharacter needs an abelian group");
  const int n = g.order();
  for (int x = 0; x < n; ++x) {
    if (x == g.identity()) continue;
    bool radical = true;
    for (int y = 0; y < n && radical; ++y) radical = c(x, y) == c(y, x);
    if (radical) return false;
  }
  return true;
}

bool is_coboundary(const Cocycle2& c) { return abelianization_dimension(twisted_group_algebra(c)) > 0; }

size_t commutant_dimension(const ProjectiveRep& v) {
  const size_t d = static_cast<size_t>(v.dim);
  // unknown T (d x d, row-major); equations pi(h) T - T pi(h) = 0
  Subspace rows(d * d);
  for (const auto& p : v.matrices) {
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) {
        Vector row(d * d);
        for (size_t k = 0; k < d; ++k) {
          row[k * d + j] += p(i, k);
          row[i * d + k] -= p(k, j);
        }
        rows.insert(std::move(row));
      }
  }
  return d * d - rows.dimension();
}

}  // namespace hopftwist
