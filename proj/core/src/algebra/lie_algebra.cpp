#include "aeplab/algebra/lie_algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace aeplab::algebra {

namespace {

int levi_civita(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0;
  if ((a == 0 && b == 1 && c == 2) || (a == 1 && b == 2 && c == 0) ||
      (a == 2 && b == 0 && c == 1))
    return 1;
  return -1;
}

std::size_t cidx(int dim, int c, int a, int b) {
  return (static_cast<std::size_t>(c) * dim + a) * dim + b;
}

} // namespace

const char* to_string(AlgebraId id) {
  switch (id) {
  case AlgebraId::so3: return "so3";
  case AlgebraId::cso3: return "cso3";
  case AlgebraId::soK: return "soK";
  case AlgebraId::csoK: return "csoK";
  case AlgebraId::gl3: return "gl3";
  case AlgebraId::u1: return "u1";
  case AlgebraId::quat: return "quat";
  case AlgebraId::pure_quat: return "pure_quat";
  }
  return "?";
}

std::optional<AlgebraId> algebra_id_from_string(const std::string& s) {
  if (s == "so3") return AlgebraId::so3;
  if (s == "cso3") return AlgebraId::cso3;
  if (s == "soK") return AlgebraId::soK;
  if (s == "csoK") return AlgebraId::csoK;
  if (s == "gl3") return AlgebraId::gl3;
  if (s == "u1") return AlgebraId::u1;
  if (s == "quat") return AlgebraId::quat;
  if (s == "pure_quat") return AlgebraId::pure_quat;
  return std::nullopt;
}

LieAlgebra make_from_parts(AlgebraId id, std::vector<std::string> basis,
                           std::vector<double> structure,
                           Eigen::MatrixXd pairing,
                           std::vector<Eigen::MatrixXd> rep,
                           std::optional<KMetric> km) {
  LieAlgebra g;
  g.id = id;
  g.dim = static_cast<int>(basis.size());
  g.basis = std::move(basis);
  g.structure_ = std::move(structure);
  g.pairing = std::move(pairing);
  g.rep = std::move(rep);
  g.km = std::move(km);
  g.finalize();
  return g;
}

LieAlgebra LieAlgebra::opposite(const LieAlgebra& g) {
  LieAlgebra o = g;
  for (double& c : o.structure_) c = -c;
  for (Eigen::MatrixXd& m : o.rep) m = -m;
  o.finalize();
  return o;
}

void LieAlgebra::finalize() {
  if (pairing.rows() != dim || pairing.cols() != dim)
    throw std::invalid_argument("pairing dimension mismatch");
  if (!pairing.isApprox(pairing.transpose(), 1e-14))
    throw std::invalid_argument("pairing must be symmetric");
  Eigen::FullPivLU<Eigen::MatrixXd> lu(pairing);
  if (!lu.isInvertible())
    throw std::invalid_argument("pairing must be nondegenerate");
  pairing_inv = lu.inverse();

  ad_star_tensor_.assign(static_cast<std::size_t>(dim) * dim * dim, 0.0);
  for (int c = 0; c < dim; ++c)
    for (int a = 0; a < dim; ++a)
      for (int f = 0; f < dim; ++f) {
        double s = 0.0;
        for (int d = 0; d < dim; ++d)
          for (int e = 0; e < dim; ++e)
            s += pairing_inv(c, d) * structure_[cidx(dim, e, a, d)] *
                 pairing(e, f);
        ad_star_tensor_[cidx(dim, c, a, f)] = s;
      }

  pairing_ad_invariant = invariance_residual(pairing) < 1e-12;
  if (invariant_metric.size() == 0 && pairing_ad_invariant)
    invariant_metric = pairing;
}

void LieAlgebra::bracket_span(const double* a, const double* b,
                              double* out) const {
  for (int c = 0; c < dim; ++c) {
    double s = 0.0;
    for (int i = 0; i < dim; ++i) {
      if (a[i] == 0.0) continue;
      for (int j = 0; j < dim; ++j)
        s += structure_[cidx(dim, c, i, j)] * a[i] * b[j];
    }
    out[c] = s;
  }
}

void LieAlgebra::ad_star_span(const double* xi, const double* mu,
                              double* out) const {
  for (int c = 0; c < dim; ++c) {
    double s = 0.0;
    for (int a = 0; a < dim; ++a) {
      if (xi[a] == 0.0) continue;
      for (int f = 0; f < dim; ++f)
        s += ad_star_tensor_[cidx(dim, c, a, f)] * xi[a] * mu[f];
    }
    out[c] = s;
  }
}

double LieAlgebra::pair_span(const double* w, const double* a) const {
  double s = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) s += w[i] * pairing(i, j) * a[j];
  return s;
}

Eigen::VectorXd LieAlgebra::bracket(const Eigen::VectorXd& a,
                                    const Eigen::VectorXd& b) const {
  Eigen::VectorXd out(dim);
  bracket_span(a.data(), b.data(), out.data());
  return out;
}

Eigen::VectorXd LieAlgebra::ad_star(const Eigen::VectorXd& xi,
                                    const Eigen::VectorXd& mu) const {
  Eigen::VectorXd out(dim);
  ad_star_span(xi.data(), mu.data(), out.data());
  return out;
}

double LieAlgebra::pair(const Eigen::VectorXd& w,
                        const Eigen::VectorXd& a) const {
  return pair_span(w.data(), a.data());
}

Eigen::MatrixXd LieAlgebra::to_matrix(const Eigen::VectorXd& a) const {
  if (!has_rep()) throw std::logic_error("algebra has no matrix realisation");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rep[0].rows(), rep[0].cols());
  for (int i = 0; i < dim; ++i) m += a[i] * rep[i];
  return m;
}

Eigen::VectorXd LieAlgebra::from_matrix(const Eigen::MatrixXd& m) const {
  if (!has_rep()) throw std::logic_error("algebra has no matrix realisation");
  Eigen::MatrixXd gram(dim, dim);
  Eigen::VectorXd rhs(dim);
  for (int i = 0; i < dim; ++i) {
    rhs[i] = (rep[i].transpose() * m).trace();
    for (int j = 0; j < dim; ++j)
      gram(i, j) = (rep[i].transpose() * rep[j]).trace();
  }
  return gram.ldlt().solve(rhs);
}

double LieAlgebra::antisymmetry_residual() const {
  double r = 0.0;
  for (int c = 0; c < dim; ++c)
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b)
        r = std::max(r, std::abs(structure_[cidx(dim, c, a, b)] +
                                 structure_[cidx(dim, c, b, a)]));
  return r;
}

double LieAlgebra::jacobi_residual() const {
  // max_c |[e_a,[e_b,e_c]] + [e_b,[e_c,e_a]] + [e_c,[e_a,e_b]]|
  double r = 0.0;
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      for (int c = 0; c < dim; ++c)
        for (int e = 0; e < dim; ++e) {
          double s = 0.0;
          for (int d = 0; d < dim; ++d)
            s += structure_[cidx(dim, d, b, c)] * structure_[cidx(dim, e, a, d)] +
                 structure_[cidx(dim, d, c, a)] * structure_[cidx(dim, e, b, d)] +
                 structure_[cidx(dim, d, a, b)] * structure_[cidx(dim, e, c, d)];
          r = std::max(r, std::abs(s));
        }
  return r;
}

double LieAlgebra::invariance_residual(const Eigen::MatrixXd& metric) const {
  double r = 0.0;
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      for (int c = 0; c < dim; ++c) {
        double s = 0.0;
        for (int e = 0; e < dim; ++e)
          s += structure_[cidx(dim, e, a, b)] * metric(e, c) +
               structure_[cidx(dim, e, a, c)] * metric(b, e);
        r = std::max(r, std::abs(s));
      }
  return r;
}

LieAlgebra LieAlgebra::so3() {
  const int n = 3;
  std::vector<double> cs(n * n * n, 0.0);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) cs[cidx(n, c, a, b)] = levi_civita(a, b, c);
  std::vector<Eigen::MatrixXd> rep;
  for (int i = 0; i < 3; ++i)
    rep.push_back(hat(Eigen::Vector3d::Unit(i)));
  return make_from_parts(AlgebraId::so3, {"x", "y", "z"}, std::move(cs),
                         Eigen::Matrix3d::Identity(), std::move(rep),
                         std::nullopt);
}

LieAlgebra LieAlgebra::cso3() {
  const int n = 4;
  std::vector<double> cs(n * n * n, 0.0);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        cs[cidx(n, c + 1, a + 1, b + 1)] = levi_civita(a, b, c);
  std::vector<Eigen::MatrixXd> rep;
  rep.push_back(Eigen::Matrix3d::Identity());
  for (int i = 0; i < 3; ++i)
    rep.push_back(hat(Eigen::Vector3d::Unit(i)));
  Eigen::Matrix4d k = Eigen::Vector4d(3, 2, 2, 2).asDiagonal();
  return make_from_parts(AlgebraId::cso3, {"s", "x", "y", "z"}, std::move(cs),
                         k, std::move(rep), std::nullopt);
}

LieAlgebra LieAlgebra::so_k(const KMetric& km) {
  const int n = 3;
  std::vector<double> cs(n * n * n, 0.0);
  // [u, v] = D (u x v): C^c_{ab} = sum_m eps_{abm} D_{cm}
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        double s = 0.0;
        for (int m = 0; m < 3; ++m) s += levi_civita(a, b, m) * km.D(c, m);
        cs[cidx(n, c, a, b)] = s;
      }
  std::vector<Eigen::MatrixXd> rep;
  for (int i = 0; i < 3; ++i)
    rep.push_back(hat_k(Eigen::Vector3d::Unit(i), km));
  LieAlgebra g =
      make_from_parts(AlgebraId::soK, {"x", "y", "z"}, std::move(cs),
                      Eigen::Matrix3d::Identity(), std::move(rep), km);
  g.invariant_metric = km.invariant_metric();
  return g;
}

LieAlgebra LieAlgebra::cso_k(const KMetric& km) {
  const int n = 4;
  std::vector<double> cs(n * n * n, 0.0);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        double s = 0.0;
        for (int m = 0; m < 3; ++m) s += levi_civita(a, b, m) * km.D(c, m);
        cs[cidx(n, c + 1, a + 1, b + 1)] = s;
      }
  std::vector<Eigen::MatrixXd> rep;
  rep.push_back(Eigen::Matrix3d::Identity());
  for (int i = 0; i < 3; ++i)
    rep.push_back(hat_k(Eigen::Vector3d::Unit(i), km));
  Eigen::Matrix4d k = Eigen::Matrix4d::Zero();
  k(0, 0) = 3.0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      k(a + 1, b + 1) = (rep[a + 1].transpose() * rep[b + 1]).trace();
  LieAlgebra g = make_from_parts(AlgebraId::csoK, {"s", "x", "y", "z"},
                                 std::move(cs), k, std::move(rep), km);
  Eigen::Matrix4d inv = Eigen::Matrix4d::Zero();
  inv(0, 0) = 3.0;
  inv.block<3, 3>(1, 1) = km.invariant_metric();
  g.invariant_metric = inv;
  return g;
}

LieAlgebra LieAlgebra::gl3() {
  const int n = 9;
  // basis E_{ij}, row-major index a = 3 i + j
  std::vector<double> cs(n * n * n, 0.0);
  auto idx = [](int i, int j) { return 3 * i + j; };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          // [E_ij, E_kl] = d_jk E_il - d_li E_kj
          if (j == k) cs[cidx(n, idx(i, l), idx(i, j), idx(k, l))] += 1.0;
          if (l == i) cs[cidx(n, idx(k, j), idx(i, j), idx(k, l))] -= 1.0;
        }
  std::vector<std::string> names;
  std::vector<Eigen::MatrixXd> rep;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      names.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
      Eigen::Matrix3d e = Eigen::Matrix3d::Zero();
      e(i, j) = 1.0;
      rep.push_back(e);
    }
  LieAlgebra g = make_from_parts(AlgebraId::gl3, std::move(names),
                                 std::move(cs), Eigen::MatrixXd::Identity(9, 9),
                                 std::move(rep), std::nullopt);
  // Tr(ab) in coordinates: <E_ij, E_kl> = d_il d_jk. Ad-invariant but
  // indefinite; kept separate from the Frobenius pairing used for duals.
  Eigen::MatrixXd tr = Eigen::MatrixXd::Zero(9, 9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) tr(3 * i + j, 3 * j + i) = 1.0;
  g.invariant_metric = tr;
  return g;
}

LieAlgebra LieAlgebra::u1() {
  return make_from_parts(AlgebraId::u1, {"t"}, {0.0},
                         Eigen::MatrixXd::Identity(1, 1), {}, std::nullopt);
}

namespace {

// left multiplication by i, j, k on coordinates (w, x, y, z)
Eigen::Matrix4d quat_left(int which) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  switch (which) {
  case 0:
    m << 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0;
    break;
  case 1:
    m << 0, 0, -1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, -1, 0, 0;
    break;
  default:
    m << 0, 0, 0, -1, 0, 0, -1, 0, 0, 1, 0, 0, 1, 0, 0, 0;
    break;
  }
  return m;
}

} // namespace

LieAlgebra LieAlgebra::quat() {
  const int n = 4;
  std::vector<double> cs(n * n * n, 0.0);
  // [q, p] = qp - pq; the real axis is central, pure parts give 2 eps
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        cs[cidx(n, c + 1, a + 1, b + 1)] = 2.0 * levi_civita(a, b, c);
  std::vector<Eigen::MatrixXd> rep;
  rep.push_back(Eigen::Matrix4d::Identity());
  for (int i = 0; i < 3; ++i) rep.push_back(quat_left(i));
  return make_from_parts(AlgebraId::quat, {"1", "i", "j", "k"}, std::move(cs),
                         Eigen::Matrix4d::Identity(), std::move(rep),
                         std::nullopt);
}

LieAlgebra LieAlgebra::pure_quat() {
  const int n = 3;
  std::vector<double> cs(n * n * n, 0.0);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        cs[cidx(n, c, a, b)] = 2.0 * levi_civita(a, b, c);
  std::vector<Eigen::MatrixXd> rep;
  for (int i = 0; i < 3; ++i) rep.push_back(quat_left(i));
  return make_from_parts(AlgebraId::pure_quat, {"i", "j", "k"}, std::move(cs),
                         Eigen::Matrix3d::Identity(), std::move(rep),
                         std::nullopt);
}

LieAlgebra LieAlgebra::make(AlgebraId id, const std::optional<KMetric>& km) {
  switch (id) {
  case AlgebraId::so3: return so3();
  case AlgebraId::cso3: return cso3();
  case AlgebraId::soK:
    if (!km) throw std::invalid_argument("soK requires a metric");
    return so_k(*km);
  case AlgebraId::csoK:
    if (!km) throw std::invalid_argument("csoK requires a metric");
    return cso_k(*km);
  case AlgebraId::gl3: return gl3();
  case AlgebraId::u1: return u1();
  case AlgebraId::quat: return quat();
  case AlgebraId::pure_quat: return pure_quat();
  }
  throw std::invalid_argument("unknown algebra id");
}

CsoDecomposition decompose_cso(const Eigen::Matrix3d& m, const KMetric& km) {
  // m = a I + hat_k(u); hat_k(u) is trace-free but not skew for general K,
  // so recover u through K: K hat_k(u) = (L u)^ exactly.
  CsoDecomposition d;
  d.scalar = m.trace() / 3.0;
  Eigen::Matrix3d rest = m - d.scalar * Eigen::Matrix3d::Identity();
  Eigen::Matrix3d s = km.K * rest;
  s = 0.5 * (s - s.transpose());
  d.vector = km.L.lu().solve(unhat(s));
  return d;
}

Eigen::Matrix3d project_to_cso3(const Eigen::Matrix3d& a) {
  return (a.trace() / 3.0) * Eigen::Matrix3d::Identity() +
         0.5 * (a - a.transpose());
}

Eigen::VectorXd project_to_subalgebra(const Eigen::Matrix3d& a,
                                      const LieAlgebra& target) {
  return target.from_matrix(a);
}

} // namespace aeplab::algebra
