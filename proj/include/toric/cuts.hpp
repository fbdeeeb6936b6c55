#pragma once

// Cutting polytopes by rational halfspaces, Reeb covectors at vertices,
// excision of singular vertices, and link polytopes.
//
// Sign conventions. Edge directions d at a vertex v point into the
// polytope, and a Reeb covector Y at v satisfies <d, Y> > 0 for each of
// them, so <w - v, Y> > 0 for every other point w of the polytope. The cut
// excising v keeps {<x, Y> >= <v, Y> + eps}.

#include "toric/classify.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace toric {

enum class KeepSide { AtLeast, AtMost };  // keep {<x,X> >= a} or {<x,X> <= a}

/// Cutting halfspace. The direction is stored primitive; a non-primitive
/// direction is divided by its gcd together with the level.
class CutSpec {
 public:
  CutSpec(LatticeVector direction, Rational level, KeepSide keep) : keep_(keep) {
    const Integer g = gcd_of(direction);
    if (g == 0) throw Error(Errc::ZeroVector, "cut direction is zero");
    for (auto& x : direction) x /= g;
    direction_ = std::move(direction);
    level_ = level / Rational(g);
  }

  const LatticeVector& direction() const noexcept { return direction_; }
  const Rational& level() const noexcept { return level_; }
  KeepSide keep() const noexcept { return keep_; }

  /// The kept side as an outward halfspace with label 1.
  Halfspace halfspace() const {
    if (keep_ == KeepSide::AtMost) return {direction_, level_, 1};
    return {negated(direction_), -level_, 1};
  }

 private:
  LatticeVector direction_;
  Rational level_;
  KeepSide keep_;
};

struct CutResult {
  LabeledPolytope polytope;
  bool trivial = false;  // the halfspace already contained P
};

/// P intersected with the kept halfspace. The new facet has label 1; the
/// surviving facets keep theirs.
inline CutResult cut(const LabeledPolytope& P, const CutSpec& spec) {
  if (spec.direction().size() != P.dim())
    throw Error(Errc::DimensionMismatch, "cut direction has the wrong length");
  const Halfspace h = spec.halfspace();
  bool any_inside = false;
  bool all_inside = true;
  for (auto& v : P.vertices()) {
    const Rational s = h.slack(v.point);
    if (s > 0) any_inside = true;
    if (s < 0) all_inside = false;
  }
  if (all_inside) return {P, true};
  if (!any_inside)
    throw Error(Errc::EmptyCut, "the kept halfspace meets the polytope in no interior point");
  std::vector<Halfspace> hs = P.halfspaces();
  hs.push_back(h);
  return {canonicalize(std::move(hs)), false};
}

struct ReebCovector {
  LatticeVector y;
  Vertex vertex;
};

inline bool is_reeb_at(const Vertex& v, const LatticeVector& y) {
  if (v.edge_directions.empty()) return false;
  for (auto& d : v.edge_directions)
    if (dot(d, y) <= 0) return false;
  return true;
}

namespace detail {

/// Lexicographically smallest lattice point Y in the box [-r, r]^n with
/// <d, Y> > 0 for all rays, for the first r in 1..max_radius that has one.
inline std::optional<LatticeVector> box_search_interior(const std::vector<LatticeVector>& rays,
                                                        std::size_t n, int max_radius) {
  for (int r = 1; r <= max_radius; ++r) {
    LatticeVector y(n, Integer(-r));
    for (;;) {
      if (std::all_of(rays.begin(), rays.end(), [&](auto& d) { return dot(d, y) > 0; }))
        return y;
      std::size_t i = n;
      while (i > 0 && y[i - 1] == r) y[--i] = -r;
      if (i == 0) break;
      ++y[i - 1];
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Primitive Y pairing strictly positively with every edge direction at v:
/// the sum of the dual cone's generators, falling back to a box search.
inline ReebCovector find_reeb_covector(const LabeledPolytope& P, const Vertex& v) {
  const std::size_t n = P.dim();
  const Cone dual = dual_cone(tangent_cone(P, v));
  LatticeVector sum(n, Integer(0));
  for (auto& r : dual.rays())
    for (std::size_t i = 0; i < n; ++i) sum[i] += r[i];
  if (!is_zero(sum) && is_reeb_at(v, sum)) return {primitive_part(sum), v};
  if (auto y = detail::box_search_interior(v.edge_directions, n, 8); y && !is_zero(*y))
    return {primitive_part(*y), v};
  throw Error(Errc::NoInteriorPoint, "the tangent cone at the vertex is not pointed");
}

/// How far the excising cut sits from each singular vertex, measured in
/// units of <x - v, Y>. Unset means half of the smallest value of
/// <w - v, Y> over the other vertices w, halved again until no two cuts
/// meet.
struct EpsilonPolicy {
  std::optional<Rational> epsilon;
};

namespace detail {

struct Excision {
  LatticeVector y;
  Rational height;
  Rational gap;
};

inline LabeledPolytope apply_excisions(const LabeledPolytope& P, const std::vector<Excision>& cuts,
                                       const std::vector<Rational>& eps) {
  std::vector<Halfspace> hs = P.halfspaces();
  const std::size_t original = hs.size();
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (eps[i] >= cuts[i].gap)
      throw Error(Errc::EpsilonTooLarge, "epsilon " + to_string(eps[i]) +
                                             " reaches another vertex (gap " + to_string(cuts[i].gap) + ")");
    hs.push_back(CutSpec(cuts[i].y, cuts[i].height + eps[i], KeepSide::AtLeast).halfspace());
  }
  auto result = canonicalize(std::move(hs));
  if (result.facet_count() != original + cuts.size())
    throw Error(Errc::EpsilonTooLarge, "an excising cut was absorbed by another cut");
  for (auto& w : result.vertices()) {
    std::size_t cut_facets = 0;
    for (auto f : w.incident_facets)
      if (f >= original) ++cut_facets;
    if (cut_facets > 1) throw Error(Errc::EpsilonTooLarge, "two excising cuts meet");
  }
  for (auto& w : result.vertices())
    if (!is_simple_at_vertex(result, w))
      for (auto f : w.incident_facets)
        if (f >= original) throw Error(Errc::NonSimpleResult, "excision produced a non-simple vertex");
  return result;
}

/// Excises the given vertices of P, all cuts taken against P itself.
inline LabeledPolytope excise_vertices(const LabeledPolytope& P,
                                       const std::vector<std::size_t>& order,
                                       const EpsilonPolicy& policy) {
  if (order.empty()) return P;
  if (policy.epsilon && *policy.epsilon <= 0)
    throw Error(Errc::InvalidArgument, "epsilon must be positive");

  std::vector<Excision> cuts;
  for (auto vi : order) {
    const Vertex& v = P.vertices()[vi];
    const auto reeb = find_reeb_covector(P, v);
    const Rational height = dot(reeb.y, v.point);
    std::optional<Rational> gap;
    for (auto& w : P.vertices()) {
      if (w.point == v.point) continue;
      const Rational g = dot(reeb.y, w.point) - height;
      if (!gap || g < *gap) gap = g;
    }
    cuts.push_back({reeb.y, height, *gap});
  }

  if (policy.epsilon) return apply_excisions(P, cuts, std::vector<Rational>(cuts.size(), *policy.epsilon));

  std::vector<Rational> eps;
  for (auto& c : cuts) eps.push_back(c.gap / 2);
  for (int attempt = 0;; ++attempt) {
    try {
      return apply_excisions(P, cuts, eps);
    } catch (const Error& e) {
      if (e.code() != Errc::EpsilonTooLarge || attempt == 64) throw;
    }
    for (auto& x : eps) x /= 2;
  }
}

}  // namespace detail

/// Replaces every singular vertex by a label-1 facet. Orbifold vertices are
/// left alone. Vertices are processed in lexicographic order; the result
/// does not depend on that order.
inline LabeledPolytope desingularize(const LabeledPolytope& P, const EpsilonPolicy& policy = {}) {
  const auto verdict = validate_simple_away_from_vertices(P);
  if (!verdict.valid)
    throw Error(Errc::NotValid, "polytope is not simple away from its vertices");
  std::vector<std::size_t> singular;
  for (std::size_t i = 0; i < P.vertices().size(); ++i)
    if (!is_simple_at_vertex(P, P.vertices()[i])) singular.push_back(i);
  return detail::excise_vertices(P, singular, policy);
}

/// Cross-section of the tangent cone at v by {<d, Y> = c}, in lattice
/// coordinates t on the slice: d = origin + basis * t, where the columns
/// of `basis` are a lattice basis of Y-perp and <origin, Y> = c.
/// Facets of the link inherit the labels of the facets through v.
struct LinkPolytope {
  LabeledPolytope polytope;
  IntMatrix basis;        // n x (n-1)
  RationalVector origin;  // in the tangent-cone frame (apex at 0)
  LatticeVector reeb;
  Rational height;

  /// Slice coordinates back to a direction d from the apex.
  RationalVector lift(const RationalVector& t) const {
    RationalVector d = origin;
    for (std::size_t i = 0; i < basis.rows(); ++i)
      for (std::size_t j = 0; j < basis.cols(); ++j) d[i] += Rational(basis(i, j)) * t[j];
    return d;
  }
};

inline LinkPolytope link_polytope(const LabeledPolytope& P, const Vertex& v,
                                  const LatticeVector& y, const Rational& c) {
  const std::size_t n = P.dim();
  if (n < 2) throw Error(Errc::InvalidArgument, "links need ambient dimension at least 2");
  if (y.size() != n) throw Error(Errc::DimensionMismatch, "Reeb covector has the wrong length");
  if (c <= 0) throw Error(Errc::InvalidArgument, "link height must be positive");
  if (!is_reeb_at(v, y)) throw Error(Errc::InvalidReeb, "covector is not positive on every edge");

  // Y = g * Yp with Yp primitive. The first column of the HNF transform of
  // the row Yp is a u with <u, Yp> = 1; the slice basis is the canonical
  // kernel basis of Yp.
  const Integer g = gcd_of(y);
  const LatticeVector yp = primitive_part(y);
  const IntMatrix row = IntMatrix::from_rows({yp}, n);
  const LatticeVector u = hermite_decomposition(row).U.column(0);
  const IntMatrix basis = IntMatrix::from_columns(lattice_kernel(row), n);

  const Rational level = c / Rational(g);
  RationalVector origin(n);
  for (std::size_t i = 0; i < n; ++i) origin[i] = Rational(u[i]) * level;

  // <normal, origin + B t> <= 0  <=>  <B^T normal, t> <= -<normal, origin>
  std::vector<Halfspace> hs;
  const IntMatrix bt = basis.transpose();
  for (auto f : v.incident_facets) {
    const auto& facet = P.facet(f);
    hs.push_back({bt * facet.normal, -dot(facet.normal, origin), facet.label});
  }
  return {canonicalize(std::move(hs)), basis, std::move(origin), y, c};
}

/// The tangent cone at v with its apex moved to the origin.
inline Cone moment_cone(const LabeledPolytope& P, const Vertex& v) { return tangent_cone(P, v); }

}  // namespace toric
