#include "zonoconform/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>

#include "zonoconform/simplex.hpp"

namespace zonoconform {

namespace {

struct Plane {
  Vector normal;  // unit outward
  double offset;
};

struct HullResult {
  std::vector<int> vertex_ids;
  std::vector<Plane> planes;
};

double point_spread(const SampleMatrix& pts) {
  const Vector lo = pts.colwise().minCoeff();
  const Vector hi = pts.colwise().maxCoeff();
  return (hi - lo).maxCoeff();
}

// ---------------------------------------------------------------------
// 2-D hull: monotone chain, counter-clockwise output.
// ---------------------------------------------------------------------
HullResult hull_2d(const SampleMatrix& pts, double eps) {
  const Index n = pts.rows();
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (pts(a, 0) != pts(b, 0)) return pts(a, 0) < pts(b, 0);
    return pts(a, 1) < pts(b, 1);
  });
  order.erase(std::unique(order.begin(), order.end(),
                          [&](int a, int b) {
                            return pts(a, 0) == pts(b, 0) && pts(a, 1) == pts(b, 1);
                          }),
              order.end());

  const double eps_area = eps * std::max(point_spread(pts), 1e-300);
  auto cross = [&](int o, int a, int b) {
    return (pts(a, 0) - pts(o, 0)) * (pts(b, 1) - pts(o, 1)) -
           (pts(a, 1) - pts(o, 1)) * (pts(b, 0) - pts(o, 0));
  };

  std::vector<int> hull;
  auto build = [&](auto begin, auto end) {
    const size_t base = hull.size();
    for (auto it = begin; it != end; ++it) {
      while (hull.size() >= base + 2 &&
             cross(hull[hull.size() - 2], hull[hull.size() - 1], *it) <= eps_area)
        hull.pop_back();
      hull.push_back(*it);
    }
    hull.pop_back();  // endpoint repeats as the next chain's start
  };
  build(order.begin(), order.end());
  build(order.rbegin(), order.rend());

  if (hull.size() < 3)
    throw DegeneracyError("convex_hull: input points are collinear");

  HullResult res;
  res.vertex_ids = hull;
  for (size_t i = 0; i < hull.size(); ++i) {
    const int a = hull[i];
    const int b = hull[(i + 1) % hull.size()];
    Vector e(2);
    e << pts(b, 0) - pts(a, 0), pts(b, 1) - pts(a, 1);
    Vector normal(2);
    normal << e[1], -e[0];  // outward for a CCW polygon
    normal.normalize();
    res.planes.push_back({normal, normal[0] * pts(a, 0) + normal[1] * pts(a, 1)});
  }
  return res;
}

// ---------------------------------------------------------------------
// Quickhull for 3 <= d <= 6.
// ---------------------------------------------------------------------
struct Facet {
  std::vector<int> verts;      // d point ids
  std::vector<int> neighbors;  // d adjacent facet ids (unordered)
  Vector normal;
  double offset = 0.0;
  std::vector<int> outside;
  int furthest = -1;
  double furthest_dist = 0.0;
  bool alive = true;
};

Plane plane_through(const SampleMatrix& pts, const std::vector<int>& ids,
                    const Vector& interior) {
  const Index d = pts.cols();
  Matrix diff(d - 1, d);
  for (Index i = 1; i < d; ++i)
    diff.row(i - 1) = pts.row(ids[static_cast<size_t>(i)]) - pts.row(ids[0]);
  Eigen::JacobiSVD<Matrix> svd(diff, Eigen::ComputeFullV);
  Vector normal = svd.matrixV().col(d - 1);
  double offset = normal.dot(pts.row(ids[0]).transpose());
  if (normal.dot(interior) > offset) {
    normal = -normal;
    offset = -offset;
  }
  return {normal, offset};
}

std::vector<int> shared_vertices(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  for (int v : a)
    if (std::find(b.begin(), b.end(), v) != b.end()) out.push_back(v);
  return out;
}

HullResult quickhull(const SampleMatrix& pts, double eps) {
  const Index n = pts.rows();
  const Index d = pts.cols();

  // Affinely independent start simplex, greedily far-spread.
  std::vector<int> chosen;
  {
    int best_a = 0, best_b = 0;
    double best = -1.0;
    std::vector<int> extremes;
    for (Index j = 0; j < d; ++j) {
      Index lo, hi;
      pts.col(j).minCoeff(&lo);
      pts.col(j).maxCoeff(&hi);
      extremes.push_back(static_cast<int>(lo));
      extremes.push_back(static_cast<int>(hi));
    }
    for (int a : extremes)
      for (int b : extremes) {
        const double dist = (pts.row(a) - pts.row(b)).norm();
        if (dist > best) {
          best = dist;
          best_a = a;
          best_b = b;
        }
      }
    if (best <= eps) throw DegeneracyError("convex_hull: points are coincident");
    chosen = {best_a, best_b};

    Matrix basis(d, d);  // orthonormal columns spanning the chosen affine set
    Index nb = 0;
    basis.col(nb++) = (pts.row(best_b) - pts.row(best_a)).normalized().transpose();
    while (static_cast<Index>(chosen.size()) < d + 1) {
      int arg = -1;
      double far = eps;
      for (Index i = 0; i < n; ++i) {
        Vector r = (pts.row(i) - pts.row(chosen[0])).transpose();
        r -= basis.leftCols(nb) * (basis.leftCols(nb).transpose() * r);
        const double dist = r.norm();
        if (dist > far) {
          far = dist;
          arg = static_cast<int>(i);
        }
      }
      if (arg < 0)
        throw DegeneracyError("convex_hull: input is not full-dimensional");
      Vector r = (pts.row(arg) - pts.row(chosen[0])).transpose();
      r -= basis.leftCols(nb) * (basis.leftCols(nb).transpose() * r);
      basis.col(nb++) = r.normalized();
      chosen.push_back(arg);
    }
  }

  Vector interior = Vector::Zero(d);
  for (int id : chosen) interior += pts.row(id).transpose();
  interior /= static_cast<double>(chosen.size());

  std::vector<Facet> facets;
  for (size_t k = 0; k < chosen.size(); ++k) {
    Facet f;
    for (size_t i = 0; i < chosen.size(); ++i)
      if (i != k) f.verts.push_back(chosen[i]);
    const Plane pl = plane_through(pts, f.verts, interior);
    f.normal = pl.normal;
    f.offset = pl.offset;
    for (size_t j = 0; j < chosen.size(); ++j)
      if (j != k) f.neighbors.push_back(static_cast<int>(j));
    facets.push_back(std::move(f));
  }

  auto dist_to = [&](const Facet& f, int p) {
    return f.normal.dot(pts.row(p).transpose()) - f.offset;
  };

  std::deque<int> pending;
  {
    std::vector<int> all(static_cast<size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    std::vector<int> rest;
    for (int p : all)
      if (std::find(chosen.begin(), chosen.end(), p) == chosen.end()) rest.push_back(p);
    // Points beyond several facets go to the first claiming facet only.
    std::vector<int> remaining = rest;
    for (size_t fi = 0; fi < facets.size(); ++fi) {
      std::vector<int> next;
      for (int p : remaining) {
        const double dist = dist_to(facets[fi], p);
        if (dist > eps) {
          facets[fi].outside.push_back(p);
          if (dist > facets[fi].furthest_dist) {
            facets[fi].furthest_dist = dist;
            facets[fi].furthest = p;
          }
        } else {
          next.push_back(p);
        }
      }
      remaining.swap(next);
    }
    for (size_t fi = 0; fi < facets.size(); ++fi)
      if (!facets[fi].outside.empty()) pending.push_back(static_cast<int>(fi));
  }

  long guard = 0;
  while (!pending.empty()) {
    if (++guard > 200000)
      throw std::runtime_error("convex_hull: iteration limit (degenerate input?)");
    const int fi = pending.front();
    pending.pop_front();
    if (!facets[static_cast<size_t>(fi)].alive ||
        facets[static_cast<size_t>(fi)].outside.empty())
      continue;
    const int apex = facets[static_cast<size_t>(fi)].furthest;

    // Visible region around fi.
    std::vector<int> visible{fi};
    std::vector<char> seen(facets.size(), 0);
    seen[static_cast<size_t>(fi)] = 1;
    for (size_t head = 0; head < visible.size(); ++head) {
      for (int nb : facets[static_cast<size_t>(visible[head])].neighbors) {
        if (seen[static_cast<size_t>(nb)]) continue;
        seen[static_cast<size_t>(nb)] = 1;
        if (facets[static_cast<size_t>(nb)].alive && dist_to(facets[static_cast<size_t>(nb)], apex) > eps)
          visible.push_back(nb);
      }
    }
    std::vector<char> is_visible(facets.size(), 0);
    for (int v : visible) is_visible[static_cast<size_t>(v)] = 1;

    // Horizon ridges and the candidate points to redistribute.
    struct Ridge {
      std::vector<int> verts;
      int outer;
    };
    std::vector<Ridge> horizon;
    std::vector<int> candidates;
    for (int v : visible) {
      const Facet& f = facets[static_cast<size_t>(v)];
      candidates.insert(candidates.end(), f.outside.begin(), f.outside.end());
      for (int nb : f.neighbors) {
        if (is_visible[static_cast<size_t>(nb)]) continue;
        std::vector<int> ridge = shared_vertices(f.verts, facets[static_cast<size_t>(nb)].verts);
        if (static_cast<Index>(ridge.size()) != d - 1)
          throw std::runtime_error("convex_hull: inconsistent facet adjacency");
        horizon.push_back({std::move(ridge), nb});
      }
    }

    // One new facet per horizon ridge.
    std::vector<int> created;
    std::map<std::vector<int>, int> ridge_owner;
    for (const Ridge& ridge : horizon) {
      Facet f;
      f.verts = ridge.verts;
      f.verts.push_back(apex);
      const Plane pl = plane_through(pts, f.verts, interior);
      f.normal = pl.normal;
      f.offset = pl.offset;
      const int id = static_cast<int>(facets.size());
      f.neighbors.push_back(ridge.outer);
      // Patch the surviving neighbor to point at the new facet. The ridge has
      // exactly two incident facets, so the visible neighbor holding every
      // ridge vertex is the one being replaced.
      Facet& outer = facets[static_cast<size_t>(ridge.outer)];
      for (int& nb : outer.neighbors)
        if (is_visible[static_cast<size_t>(nb)] &&
            shared_vertices(facets[static_cast<size_t>(nb)].verts, ridge.verts).size() ==
                ridge.verts.size()) {
          nb = id;
          break;
        }
      facets.push_back(std::move(f));
      created.push_back(id);
    }

    // Wire adjacency among the new facets: two of them share a ridge made of
    // the apex plus all-but-one vertex of their horizon ridges.
    for (int id : created) {
      Facet& f = facets[static_cast<size_t>(id)];
      std::vector<int> base(f.verts.begin(), f.verts.end() - 1);
      for (size_t drop = 0; drop < base.size(); ++drop) {
        std::vector<int> key;
        for (size_t i = 0; i < base.size(); ++i)
          if (i != drop) key.push_back(base[i]);
        std::sort(key.begin(), key.end());
        auto it = ridge_owner.find(key);
        if (it == ridge_owner.end()) {
          ridge_owner.emplace(std::move(key), id);
        } else {
          facets[static_cast<size_t>(id)].neighbors.push_back(it->second);
          facets[static_cast<size_t>(it->second)].neighbors.push_back(id);
        }
      }
    }

    for (int v : visible) facets[static_cast<size_t>(v)].alive = false;

    std::sort(candidates.begin(), candidates.end());
    for (int id : created) {
      Facet& f = facets[static_cast<size_t>(id)];
      std::vector<int> claim;
      std::vector<int> rest;
      for (int p : candidates) {
        if (p == apex) continue;
        if (dist_to(f, p) > eps)
          claim.push_back(p);
        else
          rest.push_back(p);
      }
      f.outside = claim;
      for (int p : claim) {
        const double dist = dist_to(f, p);
        if (dist > f.furthest_dist) {
          f.furthest_dist = dist;
          f.furthest = p;
        }
      }
      candidates.swap(rest);
      if (!f.outside.empty()) pending.push_back(id);
    }
  }

  HullResult res;
  std::vector<char> used(static_cast<size_t>(n), 0);
  for (const Facet& f : facets) {
    if (!f.alive) continue;
    res.planes.push_back({f.normal, f.offset});
    for (int v : f.verts) used[static_cast<size_t>(v)] = 1;
  }
  for (Index i = 0; i < n; ++i)
    if (used[static_cast<size_t>(i)]) res.vertex_ids.push_back(static_cast<int>(i));
  return res;
}

HullResult run_hull(const SampleMatrix& points, double tol) {
  const Index d = points.cols();
  check_arg(points.rows() >= 1, "convex_hull: empty input");
  check_finite(points, "convex_hull points");
  if (d > 6)
    throw UnsupportedDimensionError(
        "convex_hull: dimension > 6 unsupported; use the rotated-box fit");
  check_arg(d >= 2, "convex_hull: dimension must be at least 2");
  if (points.rows() < d + 1)
    throw DegeneracyError("convex_hull: need at least d+1 points");
  const double eps = std::max(tol, 1e-12) * std::max(point_spread(points), 1e-300);
  return (d == 2) ? hull_2d(points, eps) : quickhull(points, eps);
}

SampleMatrix vertices_to_matrix(const VPolytope& poly) {
  check_arg(!poly.vertices.empty(), "polytope has no vertices");
  SampleMatrix m(static_cast<Index>(poly.vertices.size()), poly.dim());
  for (size_t i = 0; i < poly.vertices.size(); ++i) {
    check_arg(poly.vertices[i].size() == poly.dim(), "polytope vertex dimension mismatch");
    m.row(static_cast<Index>(i)) = poly.vertices[i].transpose();
  }
  return m;
}

std::vector<Plane> dedup_planes(const std::vector<Plane>& planes, double tol) {
  std::vector<Plane> out;
  for (const Plane& p : planes) {
    bool dup = false;
    for (const Plane& q : out)
      if (p.normal.dot(q.normal) > 1.0 - 1e-12 && std::abs(p.offset - q.offset) <= tol) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(p);
  }
  return out;
}

}  // namespace

VPolytope convex_hull(const SampleMatrix& points, double tol) {
  const HullResult hull = run_hull(points, tol);
  VPolytope poly;
  for (int id : hull.vertex_ids)
    poly.vertices.push_back(points.row(id).transpose());
  return poly;
}

HPolytope vrep_to_hrep(const VPolytope& poly, double tol) {
  const SampleMatrix pts = vertices_to_matrix(poly);
  const HullResult hull = run_hull(pts, tol);
  const double scale = std::max(point_spread(pts), 1e-300);
  HPolytope h;
  for (const Plane& p : dedup_planes(hull.planes, tol * scale))
    h.halfspaces.emplace_back(p.normal, p.offset);
  return h;
}

std::vector<Vector> facet_directions(const VPolytope& poly, double tol) {
  const SampleMatrix pts = vertices_to_matrix(poly);
  const HullResult hull = run_hull(pts, tol);
  std::vector<Vector> dirs;
  for (const Plane& p : hull.planes) {
    Vector v = p.normal;
    for (Index i = 0; i < v.size(); ++i) {
      if (std::abs(v[i]) > 1e-12) {
        if (v[i] < 0.0) v = -v;
        break;
      }
    }
    bool dup = false;
    for (const Vector& d : dirs)
      if (std::abs(d.dot(v)) > 1.0 - 1e-12) {
        dup = true;
        break;
      }
    if (!dup) dirs.push_back(v);
  }
  return dirs;
}

namespace {

// Reduction of the overapproximation LP in 2-D. The facet normals of any
// zonotope with generator directions d_k are the perpendiculars w_k, so
// hull(V) lies inside <c, alpha_k d_k> iff for every k
//   max_j w_k'v_j - w_k'c <= sum_i alpha_i |w_k'd_i|   (and the min side).
// This solves the same optimum with n + m variables and 2m rows.
Zonotope overapprox_2d(const SampleMatrix& verts, const std::vector<Vector>& dirs) {
  const Index m = static_cast<Index>(dirs.size());

  Matrix w(m, 2);
  for (Index k = 0; k < m; ++k) w.row(k) << -dirs[static_cast<size_t>(k)][1], dirs[static_cast<size_t>(k)][0];
  Matrix coef(m, m);  // coef(k,i) = |w_k . d_i|
  for (Index k = 0; k < m; ++k)
    for (Index i = 0; i < m; ++i)
      coef(k, i) = std::abs(w.row(k).dot(dirs[static_cast<size_t>(i)]));
  Vector hi(m), lo(m);
  for (Index k = 0; k < m; ++k) {
    const Vector vals = verts * w.row(k).transpose();
    hi[k] = vals.maxCoeff();
    lo[k] = vals.minCoeff();
  }

  // Variables [c0 c1 alpha_1..alpha_m].
  LpProblem lp = LpProblem::make(2 * m, 2 + m);
  for (Index k = 0; k < m; ++k) {
    lp.a.block(2 * k, 2, 1, m) = -coef.row(k);
    lp.a(2 * k, 0) = -w(k, 0);
    lp.a(2 * k, 1) = -w(k, 1);
    lp.b[2 * k] = -hi[k];
    lp.rel[static_cast<size_t>(2 * k)] = '<';
    lp.a.block(2 * k + 1, 2, 1, m) = -coef.row(k);
    lp.a(2 * k + 1, 0) = w(k, 0);
    lp.a(2 * k + 1, 1) = w(k, 1);
    lp.b[2 * k + 1] = lo[k];
    lp.rel[static_cast<size_t>(2 * k + 1)] = '<';
  }
  lp.c.tail(m).setOnes();
  lp.lower.tail(m).setZero();

  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::kOptimal)
    throw std::runtime_error("overapprox_zonotope: direction set cannot enclose the polytope");

  Vector center = sol.x.head(2);
  Matrix gens(2, m);
  for (Index k = 0; k < m; ++k) gens.col(k) = sol.x[2 + k] * dirs[static_cast<size_t>(k)];
  return Zonotope(std::move(center), std::move(gens));
}

// Direct transcription of the overapproximation LP for n >= 3:
// variables [c | b_kj | alpha_k].
Zonotope overapprox_direct(const SampleMatrix& verts, const std::vector<Vector>& dirs) {
  const Index n = verts.cols();
  const Index m = static_cast<Index>(dirs.size());
  const Index nv = verts.rows();
  const Index cols = n + m * nv + m;
  const Index rows = n * nv + 2 * m * nv;
  LpProblem lp = LpProblem::make(rows, cols);

  for (Index j = 0; j < nv; ++j) {
    for (Index r = 0; r < n; ++r) {
      const Index row = j * n + r;
      lp.a(row, r) = 1.0;
      for (Index k = 0; k < m; ++k) lp.a(row, n + k * nv + j) = dirs[static_cast<size_t>(k)][r];
      lp.b[row] = verts(j, r);
    }
  }
  Index row = n * nv;
  for (Index k = 0; k < m; ++k) {
    for (Index j = 0; j < nv; ++j) {
      lp.a(row, n + k * nv + j) = 1.0;
      lp.a(row, n + m * nv + k) = -1.0;
      lp.rel[static_cast<size_t>(row)] = '<';
      ++row;
      lp.a(row, n + k * nv + j) = -1.0;
      lp.a(row, n + m * nv + k) = -1.0;
      lp.rel[static_cast<size_t>(row)] = '<';
      ++row;
    }
  }
  lp.c.tail(m).setOnes();
  lp.lower.tail(m).setZero();

  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::kOptimal)
    throw std::runtime_error("overapprox_zonotope: direction set cannot enclose the polytope");

  Vector center = sol.x.head(n);
  Matrix gens(n, m);
  for (Index k = 0; k < m; ++k) gens.col(k) = sol.x[n + m * nv + k] * dirs[static_cast<size_t>(k)];
  return Zonotope(std::move(center), std::move(gens));
}

}  // namespace

Zonotope overapprox_zonotope(const VPolytope& poly, const std::vector<Vector>& directions,
                             double tol) {
  check_arg(!directions.empty(), "overapprox_zonotope: empty direction set");
  const SampleMatrix pts = vertices_to_matrix(poly);
  const Index n = pts.cols();

  // Unit-normalise and merge duplicate directions.
  std::vector<Vector> dirs;
  for (const Vector& d : directions) {
    check_arg(d.size() == n, "overapprox_zonotope: direction dimension mismatch");
    Vector v = d;
    const double norm = v.norm();
    check_arg(norm > 0.0, "overapprox_zonotope: zero direction");
    v /= norm;
    bool dup = false;
    for (const Vector& e : dirs)
      if (std::abs(e.dot(v)) > 1.0 - 1e-12) {
        dup = true;
        break;
      }
    if (!dup) dirs.push_back(std::move(v));
  }

  Matrix dmat(n, static_cast<Index>(dirs.size()));
  for (size_t k = 0; k < dirs.size(); ++k) dmat.col(static_cast<Index>(k)) = dirs[k];
  Eigen::FullPivLU<Matrix> lu(dmat);
  lu.setThreshold(1e-10);
  if (lu.rank() < n)
    throw std::runtime_error("overapprox_zonotope: directions do not span the space");

  // Normalise coordinates so the LP sees O(1) data.
  const Vector shift = pts.colwise().mean().transpose();
  SampleMatrix centered = pts.rowwise() - shift.transpose();
  const double scale = std::max(centered.cwiseAbs().maxCoeff(), 1e-300);
  centered /= scale;

  Zonotope raw = (n == 2) ? overapprox_2d(centered, dirs) : overapprox_direct(centered, dirs);

  // Undo scaling and drop zero-width generators.
  Vector center = raw.center * scale + shift;
  std::vector<Index> keep;
  Vector lengths = raw.generators.colwise().norm();
  const double drop = 1e-12 * std::max(1.0, lengths.maxCoeff());
  for (Index k = 0; k < raw.num_generators(); ++k)
    if (lengths[k] > drop) keep.push_back(k);
  Matrix gens(n, static_cast<Index>(keep.size()));
  for (size_t i = 0; i < keep.size(); ++i) gens.col(static_cast<Index>(i)) = raw.generators.col(keep[i]) * scale;
  (void)tol;
  return Zonotope(std::move(center), std::move(gens));
}

bool hpoly_contains(const HPolytope& poly, const Vector& x, double tol) {
  check_arg(!poly.halfspaces.empty(), "hpoly_contains: empty polytope");
  for (const HalfSpace& h : poly.halfspaces) {
    const double slack = tol * std::max({1.0, h.normal.cwiseAbs().maxCoeff() * x.cwiseAbs().maxCoeff(),
                                         std::abs(h.offset)});
    if (h.normal.dot(x) > h.offset + slack) return false;
  }
  return true;
}

bool vpoly_contains(const VPolytope& poly, const Vector& x, double tol) {
  const SampleMatrix pts = vertices_to_matrix(poly);
  const Index n = pts.cols();
  const Index nv = pts.rows();
  check_arg(x.size() == n, "vpoly_contains: dimension mismatch");
  const double scale = std::max({1.0, pts.cwiseAbs().maxCoeff(), x.cwiseAbs().maxCoeff()});
  // Convex combination weights: V' lambda = x, sum lambda = 1, lambda >= 0.
  LpProblem lp = LpProblem::make(n + 1, nv);
  lp.a.topRows(n) = pts.transpose() / scale;
  lp.b.head(n) = x / scale;
  lp.a.row(n).setOnes();
  lp.b[n] = 1.0;
  lp.lower.setZero();
  lp.upper.setOnes();
  (void)tol;
  return solve_lp(lp).status == LpStatus::kOptimal;
}

bool hpoly_bounded(const HPolytope& poly) {
  check_arg(!poly.halfspaces.empty(), "hpoly_bounded: empty polytope");
  const Index n = poly.halfspaces.front().normal.size();
  LpProblem lp = LpProblem::make(static_cast<Index>(poly.halfspaces.size()), n);
  for (size_t i = 0; i < poly.halfspaces.size(); ++i) {
    const double norm = poly.halfspaces[i].normal.norm();
    lp.a.row(static_cast<Index>(i)) = poly.halfspaces[i].normal.transpose() / norm;
    lp.b[static_cast<Index>(i)] = poly.halfspaces[i].offset / norm;
    lp.rel[i] = '<';
  }
  for (Index j = 0; j < n; ++j) {
    for (const double sign : {1.0, -1.0}) {
      lp.c.setZero();
      lp.c[j] = sign;
      if (solve_lp(lp).status == LpStatus::kUnbounded) return false;
    }
  }
  return true;
}

}  // namespace zonoconform
