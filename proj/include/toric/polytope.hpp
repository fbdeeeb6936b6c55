#pragma once

// Labeled rational polytopes in H-representation: canonicalization, vertex
// enumeration, face lattice, tangent cones and cone duality.
//
// Conventions: a halfspace is {x : <normal, x> <= offset} with a primitive
// outward normal. Edge directions at a vertex point into the polytope.

#include "toric/lattice.hpp"

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace toric {

struct Halfspace {
  LatticeVector normal;
  Rational offset;
  Integer label = 1;

  /// offset - <normal, x>; nonnegative inside.
  Rational slack(const RationalVector& x) const { return offset - dot(normal, x); }
  bool contains(const RationalVector& x) const { return slack(x) >= 0; }
  bool is_tight(const RationalVector& x) const { return slack(x) == 0; }

  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

inline bool lex_less(const LatticeVector& a, const LatticeVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline bool lex_less(const RationalVector& a, const RationalVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct Vertex {
  RationalVector point;
  std::vector<std::size_t> incident_facets;     // sorted
  std::vector<LatticeVector> edge_directions;   // primitive, lexicographic

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Cone generated by primitive lattice rays, kept sorted lexicographically
/// without duplicates.
class Cone {
 public:
  Cone() = default;
  Cone(std::size_t dim, std::vector<LatticeVector> rays) : dim_(dim) {
    for (auto& r : rays) {
      if (r.size() != dim) throw Error(Errc::DimensionMismatch, "ray length differs from cone dim");
      rays_.push_back(primitive_part(r));
    }
    std::sort(rays_.begin(), rays_.end(), [](auto& a, auto& b) { return lex_less(a, b); });
    rays_.erase(std::unique(rays_.begin(), rays_.end()), rays_.end());
  }

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<LatticeVector>& rays() const noexcept { return rays_; }

  friend bool operator==(const Cone&, const Cone&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<LatticeVector> rays_;
};

namespace detail {

/// Extreme rays of the pointed cone {x : <a, x> <= 0 for a in ineq,
/// <e, x> = 0 for e in eq}. The equalities must be linearly independent
/// and must make the cone pointed. Returned primitive and sorted.
inline std::vector<LatticeVector> extreme_rays(const std::vector<LatticeVector>& ineq,
                                               const std::vector<LatticeVector>& eq,
                                               std::size_t n) {
  std::vector<LatticeVector> rays;
  if (eq.size() >= n) return rays;
  const std::size_t pick = n - 1 - eq.size();
  for_each_combination(ineq.size(), pick, [&](const std::vector<std::size_t>& idx) {
    std::vector<LatticeVector> rows = eq;
    for (auto i : idx) rows.push_back(ineq[i]);
    const auto ker = lattice_kernel(IntMatrix::from_rows(rows, n));
    if (ker.size() != 1) return true;
    for (const LatticeVector& d : {ker[0], negated(ker[0])}) {
      if (std::all_of(ineq.begin(), ineq.end(), [&](auto& a) { return dot(a, d) <= 0; })) {
        rays.push_back(primitive_part(d));
        break;
      }
    }
    return true;
  });
  std::sort(rays.begin(), rays.end(), [](auto& a, auto& b) { return lex_less(a, b); });
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return rays;
}

/// Basic feasible points of {<h.normal, x> <= h.offset} restricted to the
/// linear subspace {<e, x> = 0 : e in eq}: every point obtained by making
/// n - |eq| independent constraints tight that satisfies all others.
/// Sorted and unique.
inline std::vector<RationalVector> basic_feasible_points(const std::vector<Halfspace>& hs,
                                                         const std::vector<LatticeVector>& eq,
                                                         std::size_t n) {
  std::vector<RationalVector> points;
  if (eq.size() > n) return points;
  for_each_combination(hs.size(), n - eq.size(), [&](const std::vector<std::size_t>& idx) {
    std::vector<LatticeVector> rows = eq;
    RationalVector rhs(eq.size(), Rational(0));
    for (auto i : idx) {
      rows.push_back(hs[i].normal);
      rhs.push_back(hs[i].offset);
    }
    auto x = solve(rows, rhs);
    if (!x) return true;
    if (std::all_of(hs.begin(), hs.end(), [&](const Halfspace& h) { return h.contains(*x); }))
      points.push_back(std::move(*x));
    return true;
  });
  std::sort(points.begin(), points.end(), [](auto& a, auto& b) { return lex_less(a, b); });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

inline std::vector<LatticeVector> normals_of(const std::vector<Halfspace>& hs) {
  std::vector<LatticeVector> out;
  out.reserve(hs.size());
  for (auto& h : hs) out.push_back(h.normal);
  return out;
}

}  // namespace detail

class LabeledPolytope;
inline LabeledPolytope canonicalize(std::vector<Halfspace> halfspaces);

/// A bounded, full-dimensional, irredundant labeled rational polytope.
/// Only `canonicalize` constructs one, so the invariants always hold.
/// The vertex list is derived data, computed once and sorted
/// lexicographically by point.
class LabeledPolytope {
 public:
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Halfspace>& halfspaces() const noexcept { return halfspaces_; }
  const Halfspace& facet(std::size_t i) const { return halfspaces_.at(i); }
  std::size_t facet_count() const noexcept { return halfspaces_.size(); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }

  /// Index of the vertex at `point`, if any.
  std::optional<std::size_t> find_vertex(const RationalVector& point) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (vertices_[i].point == point) return i;
    return std::nullopt;
  }

  friend bool operator==(const LabeledPolytope& a, const LabeledPolytope& b) {
    return a.dim_ == b.dim_ && a.halfspaces_ == b.halfspaces_;
  }

 private:
  friend LabeledPolytope canonicalize(std::vector<Halfspace> halfspaces);
  LabeledPolytope(std::size_t dim, std::vector<Halfspace> hs, std::vector<Vertex> vs)
      : dim_(dim), halfspaces_(std::move(hs)), vertices_(std::move(vs)) {}

  std::size_t dim_ = 0;
  std::vector<Halfspace> halfspaces_;
  std::vector<Vertex> vertices_;
};

/// Primitivizes normals (rescaling offsets), merges exact duplicates,
/// drops redundant constraints and checks that the result is a nonempty,
/// bounded, full-dimensional polytope. Surviving facets keep input order.
inline LabeledPolytope canonicalize(std::vector<Halfspace> halfspaces) {
  if (halfspaces.empty()) throw Error(Errc::Unbounded, "no halfspaces: the whole space is unbounded");
  const std::size_t n = halfspaces.front().normal.size();
  if (n == 0) throw Error(Errc::InvalidArgument, "ambient dimension must be positive");

  std::vector<Halfspace> hs;
  for (auto& h : halfspaces) {
    if (h.normal.size() != n)
      throw Error(Errc::DimensionMismatch, "normal of length " + std::to_string(h.normal.size()) +
                                               " in dimension " + std::to_string(n));
    if (h.label < 1) throw Error(Errc::InvalidArgument, "facet labels must be positive");
    const Integer g = gcd_of(h.normal);
    if (g == 0) throw Error(Errc::ZeroVector, "halfspace with zero normal");
    for (auto& x : h.normal) x /= g;
    h.offset /= Rational(g);

    auto same = std::find_if(hs.begin(), hs.end(), [&](const Halfspace& k) {
      return k.normal == h.normal && k.offset == h.offset;
    });
    if (same != hs.end()) {
      if (same->label != h.label)
        throw Error(Errc::DuplicateFacetLabelConflict,
                    "duplicate facet with labels " + to_string(same->label) + " and " +
                        to_string(h.label));
      continue;
    }
    hs.push_back(std::move(h));
  }

  const auto normals = detail::normals_of(hs);
  if (rank(IntMatrix::from_rows(normals, n)) < n) {
    // Decide emptiness on the orthogonal complement of the lineality space.
    const auto lineality = lattice_kernel(IntMatrix::from_rows(normals, n));
    if (detail::basic_feasible_points(hs, lineality, n).empty())
      throw Error(Errc::EmptyPolytope, "the constraints have no common solution");
    throw Error(Errc::Unbounded, "the polyhedron contains a line");
  }

  const auto points = detail::basic_feasible_points(hs, {}, n);
  if (points.empty()) throw Error(Errc::EmptyPolytope, "the constraints have no common solution");
  if (!detail::extreme_rays(normals, {}, n).empty())
    throw Error(Errc::Unbounded, "the polyhedron has a recession ray");
  if (const auto d = affine_dimension(points); d < n)
    throw Error(Errc::NotFullDimensional,
                "affine hull has dimension " + std::to_string(d) + " < " + std::to_string(n));

  std::vector<Halfspace> facets;
  for (auto& h : hs) {
    std::vector<RationalVector> tight;
    for (auto& p : points)
      if (h.is_tight(p)) tight.push_back(p);
    if (!tight.empty() && affine_dimension(tight) + 1 == n) facets.push_back(h);
  }

  std::vector<Vertex> vertices;
  for (auto& p : points) {
    Vertex v;
    v.point = p;
    std::vector<LatticeVector> incident_normals;
    for (std::size_t i = 0; i < facets.size(); ++i)
      if (facets[i].is_tight(p)) {
        v.incident_facets.push_back(i);
        incident_normals.push_back(facets[i].normal);
      }
    v.edge_directions = detail::extreme_rays(incident_normals, {}, n);
    vertices.push_back(std::move(v));
  }
  return LabeledPolytope(n, std::move(facets), std::move(vertices));
}

/// Vertices in lexicographic order of their coordinates.
inline std::vector<Vertex> enumerate_vertices(const LabeledPolytope& P) { return P.vertices(); }

/// Cone of directions from v into P, generated by the primitive edge
/// directions at v.
inline Cone tangent_cone(const LabeledPolytope& P, const Vertex& v) {
  return Cone(P.dim(), v.edge_directions);
}

/// {Y : <d, Y> >= 0 for every generator d of C}. When the dual contains a
/// line, a lattice basis L of its lineality space contributes both l and -l.
inline Cone dual_cone(const Cone& C) {
  const std::size_t n = C.dim();
  std::vector<LatticeVector> ineq;
  for (auto& r : C.rays()) ineq.push_back(negated(r));
  std::vector<LatticeVector> lineality;
  if (C.rays().empty()) {
    const IntMatrix id = IntMatrix::identity(n);
    for (std::size_t j = 0; j < n; ++j) lineality.push_back(id.column(j));
  } else {
    lineality = lattice_kernel(IntMatrix::from_rows(C.rays(), n));
  }
  auto rays = detail::extreme_rays(ineq, lineality, n);
  for (auto& l : lineality) {
    rays.push_back(l);
    rays.push_back(negated(l));
  }
  return Cone(n, std::move(rays));
}

/// A face of P, described by the vertices it contains and the facets
/// containing it.
struct Face {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> facets;
  std::size_t dim = 0;
};

/// Every proper nonempty face of P (dimensions 0..n-1), obtained by
/// closing the facet vertex-sets under intersection.
inline std::vector<Face> face_lattice(const LabeledPolytope& P) {
  const auto& vs = P.vertices();
  std::vector<std::vector<std::size_t>> facet_vertices(P.facet_count());
  for (std::size_t v = 0; v < vs.size(); ++v)
    for (auto f : vs[v].incident_facets) facet_vertices[f].push_back(v);

  std::set<std::vector<std::size_t>> seen(facet_vertices.begin(), facet_vertices.end());
  std::vector<std::vector<std::size_t>> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (auto& face : frontier)
      for (auto& fv : facet_vertices) {
        std::vector<std::size_t> meet;
        std::set_intersection(face.begin(), face.end(), fv.begin(), fv.end(),
                              std::back_inserter(meet));
        if (!meet.empty() && seen.insert(meet).second) next.push_back(std::move(meet));
      }
    frontier = std::move(next);
  }

  std::vector<Face> faces;
  for (auto& vset : seen) {
    Face f;
    f.vertices = vset;
    for (std::size_t i = 0; i < facet_vertices.size(); ++i)
      if (std::includes(facet_vertices[i].begin(), facet_vertices[i].end(), vset.begin(),
                        vset.end()))
        f.facets.push_back(i);
    std::vector<RationalVector> pts;
    for (auto v : vset) pts.push_back(vs[v].point);
    f.dim = affine_dimension(pts);
    faces.push_back(std::move(f));
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    return std::tie(a.dim, a.vertices) < std::tie(b.dim, b.vertices);
  });
  return faces;
}

/// f-vector (f_0, ..., f_{n-1}).
inline std::vector<std::size_t> f_vector(const LabeledPolytope& P) {
  std::vector<std::size_t> f(P.dim(), 0);
  for (auto& face : face_lattice(P)) ++f[face.dim];
  return f;
}

}  // namespace toric
