#pragma once

// Vertex classification and the "simple away from the vertices" test.
//
// A simple vertex is smooth when the labeled normals label_i * normal_i of
// its facets form a basis of Z^n, and an orbifold point otherwise; the
// local structure group is Z^n modulo the labeled-normal lattice, reported
// by its invariant factors. A non-simple vertex is a genuine singularity.

#include "toric/polytope.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace toric {

struct VertexClass {
  enum class Kind { Smooth, Orbifold, Singular };

  Kind kind = Kind::Smooth;
  std::vector<Integer> invariant_factors;  // > 1, divisibility order; Orbifold only

  static VertexClass smooth() { return {Kind::Smooth, {}}; }
  static VertexClass orbifold(std::vector<Integer> factors) {
    return {Kind::Orbifold, std::move(factors)};
  }
  static VertexClass singular() { return {Kind::Singular, {}}; }

  friend bool operator==(const VertexClass&, const VertexClass&) = default;
};

constexpr std::string_view kind_name(VertexClass::Kind kind) {
  switch (kind) {
    case VertexClass::Kind::Smooth: return "smooth";
    case VertexClass::Kind::Orbifold: return "orbifold";
    case VertexClass::Kind::Singular: return "singular";
  }
  return "unknown";
}

inline bool is_simple_at_vertex(const LabeledPolytope& P, const Vertex& v) {
  return v.incident_facets.size() == P.dim();
}

/// n x n matrix whose columns are label_i * normal_i over the facets at v.
inline IntMatrix labeled_normal_matrix(const LabeledPolytope& P, const Vertex& v) {
  std::vector<LatticeVector> columns;
  for (auto f : v.incident_facets) {
    LatticeVector c = P.facet(f).normal;
    for (auto& x : c) x *= P.facet(f).label;
    columns.push_back(std::move(c));
  }
  return IntMatrix::from_columns(columns, P.dim());
}

inline VertexClass classify_vertex(const LabeledPolytope& P, const Vertex& v) {
  if (!is_simple_at_vertex(P, v)) return VertexClass::singular();
  auto factors = smith_normal_form(labeled_normal_matrix(P, v)).nontrivial_factors();
  if (factors.empty()) return VertexClass::smooth();
  return VertexClass::orbifold(std::move(factors));
}

/// Order of the local structure group at a simple vertex: the index of the
/// labeled-normal lattice in Z^n.
inline Integer orbifold_group_order(const LabeledPolytope& P, const Vertex& v) {
  if (!is_simple_at_vertex(P, v))
    throw Error(Errc::NotSimple, "vertex lies on " + std::to_string(v.incident_facets.size()) +
                                     " facets in dimension " + std::to_string(P.dim()));
  return abs(determinant(labeled_normal_matrix(P, v)));
}

struct SimplicityVerdict {
  bool valid = true;
  std::optional<Face> offending;  // first face of dim >= 1 on the wrong number of facets
};

/// True iff every face of dimension k >= 1 lies on exactly n - k facets.
inline SimplicityVerdict validate_simple_away_from_vertices(const LabeledPolytope& P) {
  for (auto& face : face_lattice(P)) {
    if (face.dim == 0) continue;
    if (face.facets.size() != P.dim() - face.dim) return {false, face};
  }
  return {};
}

struct ClassificationReport {
  std::size_t dim = 0;
  std::vector<Vertex> vertices;
  std::vector<VertexClass> classes;    // parallel to vertices
  std::vector<Integer> facet_labels;   // structure-group order over each facet
  SimplicityVerdict verdict;

  std::size_t count(VertexClass::Kind kind) const {
    std::size_t c = 0;
    for (auto& k : classes)
      if (k.kind == kind) ++c;
    return c;
  }
  bool valid() const { return verdict.valid; }
};

inline ClassificationReport classify(const LabeledPolytope& P) {
  ClassificationReport report;
  report.dim = P.dim();
  report.vertices = P.vertices();
  for (auto& v : P.vertices()) report.classes.push_back(classify_vertex(P, v));
  for (auto& h : P.halfspaces()) report.facet_labels.push_back(h.label);
  report.verdict = validate_simple_away_from_vertices(P);
  return report;
}

}  // namespace toric
