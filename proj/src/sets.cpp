#include "zonoconform/sets.hpp"

#include <algorithm>
#include <cmath>

#include "zonoconform/simplex.hpp"

namespace zonoconform {

namespace {

double generator_scale(const Matrix& g) {
  double s = 0.0;
  for (Index j = 0; j < g.cols(); ++j)
    s = std::max(s, g.col(j).cwiseAbs().maxCoeff());
  return s;
}

// Membership of a 2-D zonotope through its facet half-spaces: x is inside
// the (1+tol)-inflated set iff |w'(x-c)| <= (1+tol) sum_i |w'g_i| for every
// generator perpendicular w. Requires rank-2 generators.
bool member_2d_support(const Zonotope& z, const Vector& x, double tol) {
  const Matrix& g = z.generators;
  const Vector d = x - z.center;
  const double inflate = 1.0 + tol;
  for (Index j = 0; j < g.cols(); ++j) {
    const double wx = -g(1, j), wy = g(0, j);
    const double norm = std::hypot(wx, wy);
    if (norm == 0.0) continue;
    double bound = 0.0;
    for (Index i = 0; i < g.cols(); ++i)
      bound += std::abs(wx * g(0, i) + wy * g(1, i));
    const double val = std::abs(wx * d[0] + wy * d[1]);
    if (val > inflate * bound + 1e-15 * norm) return false;
  }
  return true;
}

bool member_lp(const Zonotope& z, const Vector& x, double tol) {
  const Index n = z.dim();
  const Index p = z.num_generators();
  const double scale = std::max({1.0, generator_scale(z.generators),
                                 (x - z.center).cwiseAbs().maxCoeff()});
  LpProblem lp = LpProblem::make(n, p);
  lp.a = z.generators / scale;
  lp.b = (x - z.center) / scale;
  lp.lower.setConstant(-(1.0 + tol));
  lp.upper.setConstant(1.0 + tol);
  return solve_lp(lp).status == LpStatus::kOptimal;
}

}  // namespace

Zonotope::Zonotope(Vector c, Matrix g) : center(std::move(c)), generators(std::move(g)) {
  check_arg(center.size() == generators.rows() || generators.size() == 0,
            "Zonotope: center length must equal generator row count");
  if (generators.size() == 0 && generators.rows() != center.size())
    generators.resize(center.size(), 0);
  check_finite(center, "Zonotope center");
  check_finite(generators, "Zonotope generators");
}

Hyperrectangle::Hyperrectangle(Vector c, Vector r) : center(std::move(c)), radius(std::move(r)) {
  check_arg(center.size() == radius.size(), "Hyperrectangle: center/radius length mismatch");
  check_finite(center, "Hyperrectangle center");
  check_finite(radius, "Hyperrectangle radius");
  check_arg(radius.size() == 0 || radius.minCoeff() >= 0.0,
            "Hyperrectangle: negative radius");
}

HalfSpace::HalfSpace(Vector a, double b) : normal(std::move(a)), offset(b) {
  check_arg(normal.size() > 0 && normal.cwiseAbs().maxCoeff() > 0.0,
            "HalfSpace: normal must be nonzero");
}

NestedZonotopeFamily::NestedZonotopeFamily(Zonotope z, Vector p, double tol)
    : base(std::move(z)), core(std::move(p)) {
  check_arg(core.size() == base.dim(), "NestedZonotopeFamily: core dimension mismatch");
  check_arg(member(base, core, tol), "NestedZonotopeFamily: core is not a member of the base set");
}

Zonotope nested_at(const NestedZonotopeFamily& family, double alpha) {
  check_domain(alpha >= 0.0 && alpha <= 1.0, "nested_at: alpha outside [0,1]");
  return Zonotope((1.0 - alpha) * family.base.center + alpha * family.core,
                  (1.0 - alpha) * family.base.generators);
}

Hyperrectangle nested_box_at(const Hyperrectangle& box, const Vector& core,
                             double alpha, double tol) {
  check_domain(alpha >= 0.0 && alpha <= 1.0, "nested_box_at: alpha outside [0,1]");
  check_arg(core.size() == box.dim(), "nested_box_at: core dimension mismatch");
  check_domain(box_member(box, core, tol), "nested_box_at: core outside the box");
  return Hyperrectangle((1.0 - alpha) * box.center + alpha * core,
                        (1.0 - alpha) * box.radius);
}

bool box_member(const Hyperrectangle& box, const Vector& x, double tol) {
  check_arg(x.size() == box.dim(), "box_member: dimension mismatch");
  for (Index i = 0; i < box.dim(); ++i) {
    const double slack = tol * std::max(1.0, box.radius[i]);
    if (std::abs(x[i] - box.center[i]) > box.radius[i] + slack) return false;
  }
  return true;
}

bool member(const Zonotope& z, const Vector& x, double tol) {
  check_arg(x.size() == z.dim(), "member: dimension mismatch");
  check_arg(tol >= 0.0, "member: negative tolerance");
  const Index n = z.dim();
  const Index p = z.num_generators();
  if (n == 0) return true;

  const double scale = std::max(1.0, generator_scale(z.generators));
  if (p == 0)
    return (x - z.center).cwiseAbs().maxCoeff() <=
           tol * std::max(scale, z.center.cwiseAbs().maxCoeff() + 1.0);

  if (n == p) {
    if (n == 1) {
      const double g = z.generators(0, 0);
      if (std::abs(g) > 1e-14 * scale)
        return std::abs((x[0] - z.center[0]) / g) <= 1.0 + tol;
    } else if (n == 2) {
      const Matrix& g = z.generators;
      const double det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
      if (std::abs(det) > 1e-14 * scale * scale) {
        const double dx = x[0] - z.center[0], dy = x[1] - z.center[1];
        const double xi0 = (g(1, 1) * dx - g(0, 1) * dy) / det;
        const double xi1 = (-g(1, 0) * dx + g(0, 0) * dy) / det;
        return std::max(std::abs(xi0), std::abs(xi1)) <= 1.0 + tol;
      }
    } else {
      Eigen::FullPivLU<Matrix> lu(z.generators);
      lu.setThreshold(1e-12);
      if (lu.rank() == n) {
        const Vector xi = lu.solve(x - z.center);
        return xi.cwiseAbs().maxCoeff() <= 1.0 + tol;
      }
    }
    // Singular square generators fall through to the general paths.
  }

  if (n == 2) {
    Eigen::FullPivLU<Matrix> lu(z.generators);
    lu.setThreshold(1e-12);
    if (lu.rank() == 2) return member_2d_support(z, x, tol);
  }
  return member_lp(z, x, tol);
}

double min_coeff_norm(const Zonotope& z, const Vector& x) {
  check_arg(x.size() == z.dim(), "min_coeff_norm: dimension mismatch");
  const Index n = z.dim();
  const Index p = z.num_generators();
  if (p == 0) {
    return ((x - z.center).cwiseAbs().maxCoeff() == 0.0) ? 0.0 : kLpInfinity;
  }
  const double scale = std::max({1.0, generator_scale(z.generators),
                                 (x - z.center).cwiseAbs().maxCoeff()});
  // Variables (xi, t): min t subject to G xi = x - c, -t <= xi_i <= t.
  LpProblem lp = LpProblem::make(n + 2 * p, p + 1);
  lp.a.topLeftCorner(n, p) = z.generators / scale;
  lp.b.head(n) = (x - z.center) / scale;
  for (Index i = 0; i < p; ++i) {
    lp.a(n + 2 * i, i) = 1.0;
    lp.a(n + 2 * i, p) = -1.0;
    lp.rel[static_cast<size_t>(n + 2 * i)] = '<';
    lp.a(n + 2 * i + 1, i) = -1.0;
    lp.a(n + 2 * i + 1, p) = -1.0;
    lp.rel[static_cast<size_t>(n + 2 * i + 1)] = '<';
  }
  lp.c[p] = 1.0;
  lp.lower[p] = 0.0;
  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::kOptimal) return kLpInfinity;
  return sol.objective;
}

Zonotope linear_map(const Matrix& m, const Zonotope& z) {
  check_arg(m.cols() == z.dim(), "linear_map: matrix column count must match set dimension");
  return Zonotope(m * z.center, m * z.generators);
}

Zonotope translate(const Zonotope& z, const Vector& v) {
  check_arg(v.size() == z.dim(), "translate: dimension mismatch");
  return Zonotope(z.center + v, z.generators);
}

Zonotope cartesian_product(const Zonotope& a, const Zonotope& b) {
  if (a.dim() == 0) return b;
  if (b.dim() == 0) return a;
  Vector c(a.dim() + b.dim());
  c << a.center, b.center;
  Matrix g = Matrix::Zero(a.dim() + b.dim(), a.num_generators() + b.num_generators());
  g.topLeftCorner(a.dim(), a.num_generators()) = a.generators;
  g.bottomRightCorner(b.dim(), b.num_generators()) = b.generators;
  return Zonotope(std::move(c), std::move(g));
}

Zonotope from_hyperrectangle(const Hyperrectangle& box) {
  return Zonotope(box.center, Matrix(box.radius.asDiagonal()));
}

Hyperrectangle interval_hull(const SampleMatrix& points) {
  check_arg(points.rows() >= 1, "interval_hull: need at least one row");
  check_finite(points, "interval_hull points");
  const Vector lo = points.colwise().minCoeff();
  const Vector hi = points.colwise().maxCoeff();
  return Hyperrectangle((lo + hi) / 2.0, (hi - lo) / 2.0);
}

namespace {

// Canonical unsigned direction: unit norm, first non-negligible entry > 0.
Vector canonical_direction(Vector v) {
  v.normalize();
  for (Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > 1e-12) {
      if (v[i] < 0.0) v = -v;
      break;
    }
  }
  return v;
}

void push_unique_direction(std::vector<Vector>& dirs, Vector v) {
  v = canonical_direction(std::move(v));
  for (const Vector& d : dirs)
    if (std::abs(d.dot(v)) > 1.0 - 1e-12) return;
  dirs.push_back(std::move(v));
}

// Generalized cross product of the n-1 columns of m (n x (n-1)) via cofactor
// expansion: result_i = (-1)^i det(m with row i removed).
Vector generalized_cross(const Matrix& m) {
  const Index n = m.rows();
  Vector normal(n);
  Matrix minor(n - 1, n - 1);
  for (Index i = 0; i < n; ++i) {
    Index r = 0;
    for (Index k = 0; k < n; ++k) {
      if (k == i) continue;
      minor.row(r++) = m.row(k);
    }
    const double det = minor.determinant();
    normal[i] = (i % 2 == 0) ? det : -det;
  }
  return normal;
}

}  // namespace

std::vector<Vector> facet_normals(const Zonotope& z, double tol) {
  const Index n = z.dim();
  const Index p = z.num_generators();
  check_arg(n >= 1, "facet_normals: empty zonotope");
  const double scale = std::max(1.0, generator_scale(z.generators));

  Eigen::FullPivLU<Matrix> lu(z.generators);
  lu.setThreshold(1e-10);
  check_domain(lu.rank() == n, "facet_normals: zonotope is not full-dimensional");

  std::vector<Vector> dirs;
  if (n == 1) {
    Vector v(1);
    v[0] = 1.0;
    dirs.push_back(v);
    return dirs;
  }

  if (n == p) {
    const Matrix ginv_t = z.generators.inverse().transpose();
    for (Index i = 0; i < n; ++i) push_unique_direction(dirs, ginv_t.row(i).transpose());
    return dirs;
  }

  check_arg(n <= 10, "facet_normals: general path supported only for n <= 10");

  // Nonzero generator columns; zero-norm columns are retained in the matrix
  // for index stability but carry no facet.
  std::vector<Index> cols;
  for (Index j = 0; j < p; ++j)
    if (z.generators.col(j).cwiseAbs().maxCoeff() > tol * scale) cols.push_back(j);
  const Index q = static_cast<Index>(cols.size());
  check_domain(q >= n - 1, "facet_normals: too few independent generators");

  // Enumerate (n-1)-subsets of the nonzero generators.
  std::vector<Index> idx(static_cast<size_t>(n - 1));
  for (Index i = 0; i < n - 1; ++i) idx[static_cast<size_t>(i)] = i;
  Matrix sub(n, n - 1);
  double combos = 1.0;
  for (Index i = 0; i < n - 1; ++i) combos *= static_cast<double>(q - i) / (i + 1);
  check_arg(combos <= 2e6, "facet_normals: generator subset enumeration too large");

  while (true) {
    for (Index i = 0; i < n - 1; ++i) sub.col(i) = z.generators.col(cols[static_cast<size_t>(idx[static_cast<size_t>(i)])]);
    Vector normal = generalized_cross(sub);
    if (normal.cwiseAbs().maxCoeff() > 1e-10 * std::pow(scale, n - 1))
      push_unique_direction(dirs, std::move(normal));

    Index k = n - 2;
    while (k >= 0 && idx[static_cast<size_t>(k)] == q - (n - 1) + k) --k;
    if (k < 0) break;
    ++idx[static_cast<size_t>(k)];
    for (Index i = k + 1; i < n - 1; ++i) idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i - 1)] + 1;
  }
  return dirs;
}

double projected_area_2d(const Zonotope& z, Index i, Index j) {
  check_arg(i != j, "projected_area_2d: coordinates must differ");
  check_arg(i >= 0 && i < z.dim() && j >= 0 && j < z.dim(),
            "projected_area_2d: coordinate out of range");
  const Matrix& g = z.generators;
  double area = 0.0;
  for (Index a = 0; a < g.cols(); ++a)
    for (Index b = a + 1; b < g.cols(); ++b)
      area += std::abs(g(i, a) * g(j, b) - g(j, a) * g(i, b));
  return 4.0 * area;
}

Hyperrectangle axis_aligned_bounds(const Zonotope& z) {
  Vector radius = z.generators.cwiseAbs().rowwise().sum();
  return Hyperrectangle(z.center, std::move(radius));
}

Vector sample_point(const Zonotope& z, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  Vector xi(z.num_generators());
  for (Index i = 0; i < xi.size(); ++i) xi[i] = unit(rng);
  return z.center + z.generators * xi;
}

}  // namespace zonoconform
