#include "galg/disintegration.hpp"

#include <stdexcept>
#include <string>

namespace galg {

namespace {

// a ≡ b as maps into R^rows / rel.
bool congruent(const Ring& R, const Matrix& a, const Matrix& b, const Subspace& rel) {
  Matrix diff = sub(R, a, b);
  for (std::size_t j = 0; j < diff.cols(); ++j) {
    Vec c = diff.column(j);
    if (!is_zero(R, c) && !rel.contains(c)) return false;
  }
  return true;
}

Matrix rows_of(const Ring& R, const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m = Matrix::zero(R, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace

std::vector<ObjectId> SheafData::support() const {
  std::vector<ObjectId> out;
  for (ObjectId u = 0; u < static_cast<ObjectId>(gens.size()); ++u)
    if (!stalk_is_zero(u)) out.push_back(u);
  return out;
}

std::vector<Violation> sheaf_validate(const SheafData& s) {
  std::vector<Violation> out;
  const auto& g = *s.groupoid;
  const Ring& R = s.ring;
  if (s.gens.size() != g.n_objects() || s.relations.size() != g.n_objects() || s.arrows.size() != g.n_arrows()) {
    out.push_back({"shape", "expected one stalk per object and one map per arrow"});
    return out;
  }
  for (ArrowId a = 0; a < static_cast<ArrowId>(g.n_arrows()); ++a) {
    const Matrix& m = s.arrows[a];
    if (m.rows() != s.gens[g.r(a)] || m.cols() != s.gens[g.d(a)]) {
      out.push_back({"shape", "arrow " + std::to_string(a) + " has the wrong stalk dimensions"});
      return out;
    }
  }
  for (ArrowId a = 0; a < static_cast<ArrowId>(g.n_arrows()); ++a)
    if (!is_subset(image(s.arrows[a], s.relations[g.d(a)]), s.relations[g.r(a)]))
      out.push_back({"relations", "arrow " + std::to_string(a) + " does not preserve the stalk relations"});
  for (ObjectId u = 0; u < static_cast<ObjectId>(g.n_objects()); ++u)
    if (!congruent(R, s.arrows[g.unit_of(u)], Matrix::identity(R, s.gens[u]), s.relations[u]))
      out.push_back({"unit", "unit at " + std::to_string(u) + " is not the identity on its stalk"});
  for (const auto& [x, y, z] : g.comp())
    if (!congruent(R, mul(R, s.arrows[x], s.arrows[y]), s.arrows[z], s.relations[g.r(x)]))
      out.push_back({"composition", "maps of " + std::to_string(x) + " and " + std::to_string(y) + " do not compose"});
  // with units and composition in place, γ⁻¹ is a two-sided inverse
  for (ArrowId a = 0; a < static_cast<ArrowId>(g.n_arrows()); ++a) {
    ObjectId u = g.d(a);
    if (!congruent(R, mul(R, s.arrows[g.inv(a)], s.arrows[a]), Matrix::identity(R, s.gens[u]), s.relations[u]))
      out.push_back({"invertible", "arrow " + std::to_string(a) + " is not invertible on stalks"});
  }
  return out;
}

SheafData sheaf_of(const Rep& rho) {
  const auto& g = *rho.groupoid;
  const Ring& R = rho.ring();
  const std::size_t m = rho.dim();
  SheafData s;
  s.groupoid = rho.groupoid;
  s.ring = R;
  const std::size_t k = g.n_objects();
  s.gens.resize(k);
  s.relations.resize(k);
  s.restriction.resize(k);

  // embed[u]: E_u → M on stalk coordinates (fields); identity over Z/n
  std::vector<Matrix> embed(k);
  for (ObjectId u = 0; u < static_cast<ObjectId>(k); ++u) {
    const Matrix& e = rho.op(g.unit_of(u));
    if (R.is_field()) {
      Subspace col = Subspace::span(R, m, [&] {
        std::vector<Vec> cols;
        for (std::size_t j = 0; j < m; ++j) cols.push_back(e.column(j));
        return cols;
      }());
      auto piv = col.pivots();
      s.gens[u] = col.rank();
      s.relations[u] = Subspace(R, col.rank());
      embed[u] = col.basis_columns();
      // reduced echelon basis: the coordinates of x are its pivot entries
      Matrix pick = Matrix::zero(R, col.rank(), m);
      for (std::size_t i = 0; i < piv.size(); ++i) pick(i, piv[i]) = R.one();
      s.restriction[u] = mul(R, pick, e);
    } else {
      Matrix comp = sub(R, Matrix::identity(R, m), e);
      s.gens[u] = m;
      s.relations[u] = subspace_sum(rho.module.relations, image(comp, Subspace::full(R, m)));
      embed[u] = Matrix::identity(R, m);
      s.restriction[u] = e;
    }
  }
  s.arrows.resize(g.n_arrows());
  for (ArrowId a = 0; a < static_cast<ArrowId>(g.n_arrows()); ++a)
    s.arrows[a] = mul(R, s.restriction[g.r(a)], mul(R, rho.op(a), embed[g.d(a)]));
  return s;
}

IsotropyModule stalk_isotropy_module(const SheafData& s, ObjectId u) {
  if (u < 0 || static_cast<std::size_t>(u) >= s.gens.size())
    throw std::out_of_range("object " + std::to_string(u) + " out of range");
  IsotropyGroup G = isotropy(*s.groupoid, u);
  std::vector<Matrix> ops;
  for (auto a : G.elements) ops.push_back(s.arrows[a]);
  return {G, normalized(ModuleAction(s.ring, s.gens[u], s.relations[u], std::move(ops)))};
}

Rep gamma_c(const SheafData& s) {
  const auto& g = *s.groupoid;
  const Ring& R = s.ring;
  std::vector<std::size_t> offset(s.gens.size() + 1, 0);
  for (std::size_t u = 0; u < s.gens.size(); ++u) offset[u + 1] = offset[u] + s.gens[u];
  const std::size_t total = offset.back();

  std::vector<Vec> rel;
  for (std::size_t u = 0; u < s.gens.size(); ++u)
    for (const auto& b : s.relations[u].basis()) {
      Vec v = zero_vec(R, total);
      std::copy(b.begin(), b.end(), v.begin() + static_cast<std::ptrdiff_t>(offset[u]));
      rel.push_back(std::move(v));
    }

  std::vector<Matrix> ops;
  ops.reserve(g.n_arrows());
  for (ArrowId a = 0; a < static_cast<ArrowId>(g.n_arrows()); ++a) {
    Matrix op = Matrix::zero(R, total, total);
    const Matrix& blk = s.arrows[a];
    const std::size_t r0 = offset[g.r(a)], c0 = offset[g.d(a)];
    for (std::size_t i = 0; i < blk.rows(); ++i)
      for (std::size_t j = 0; j < blk.cols(); ++j) op(r0 + i, c0 + j) = blk(i, j);
    ops.push_back(std::move(op));
  }
  return make_rep(s.groupoid, ModuleAction(R, total, Subspace::span(R, total, std::move(rel)), std::move(ops)));
}

Matrix disintegration_iso(const Rep& rho) {
  SheafData s = sheaf_of(rho);
  Rep sections = gamma_c(s);
  std::vector<Vec> rows;
  for (const auto& r : s.restriction)
    for (std::size_t i = 0; i < r.rows(); ++i) rows.emplace_back(r.row(i).begin(), r.row(i).end());
  Matrix t = rows_of(rho.ring(), rows, rho.dim());
  if (!is_homomorphism(rho.module, sections.module, t))
    throw std::logic_error("disintegration map does not intertwine the actions");
  if (!is_isomorphism(rho.module, sections.module, t)) throw std::logic_error("disintegration map is not bijective");
  return t;
}

}  // namespace galg
