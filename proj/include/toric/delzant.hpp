#pragma once

// Quotient data for a labeled polytope. With d facets in dimension n, the
// labeled normals w_j = label_j * normal_j define W : Z^d -> Z^n. The
// reduction group K is the kernel of the induced map of tori T^d -> T^n:
// its identity component is the (d - n)-torus with Lie algebra ker W, and
// its component group is the torsion of coker W, given by the nontrivial
// Smith invariant factors of W.
//
// Level convention. Writing the polytope as {x : <w_j, x> <= b_j} with
// b_j = label_j * offset_j, the point x sits at (b_j - <w_j, x>)_j in the
// positive orthant of R^d. Pairing with a kernel vector k kills the
// x-dependence, so the K-level is the vector (<k_i, b>)_i over the kernel
// basis, i.e. K^T b.

#include "toric/classify.hpp"

#include <cstddef>
#include <vector>

namespace toric {

struct WeightMatrix {
  IntMatrix matrix;              // n x d, column j = label_j * normal_j
  RationalVector scaled_offsets; // label_j * offset_j
};

struct GroupPresentation {
  std::size_t torus_rank = 0;
  std::vector<Integer> finite_invariant_factors;
  std::vector<LatticeVector> kernel_basis;  // vectors in Z^d
  RationalVector level;                     // one entry per kernel basis vector
};

struct FacetReduction {
  std::size_t facet = 0;
  LatticeVector weight;
  Integer label;
  Rational offset;
  Rational scaled_offset;
};

struct SynthesisReport {
  WeightMatrix weights;
  GroupPresentation group;
  std::vector<FacetReduction> facets;
  ClassificationReport classification;
  std::size_t ambient_dimension = 0;  // d: the quotient is C^d // K
  std::size_t facets_minus_dim = 0;   // d - n
};

inline void require_valid(const LabeledPolytope& P) {
  if (!validate_simple_away_from_vertices(P).valid)
    throw Error(Errc::NotValid, "polytope is not simple away from its vertices");
}

inline WeightMatrix weight_matrix(const LabeledPolytope& P) {
  require_valid(P);
  std::vector<LatticeVector> columns;
  RationalVector offsets;
  for (auto& h : P.halfspaces()) {
    LatticeVector w = h.normal;
    for (auto& x : w) x *= h.label;
    columns.push_back(std::move(w));
    offsets.push_back(h.offset * Rational(h.label));
  }
  return {IntMatrix::from_columns(columns, P.dim()), std::move(offsets)};
}

inline GroupPresentation reduction_group(const WeightMatrix& W) {
  const std::size_t n = W.matrix.rows();
  const std::size_t d = W.matrix.cols();
  const auto snf = smith_normal_form(W.matrix);
  if (snf.rank() != n)
    throw Error(Errc::RankDeficient, "weight matrix has rank " + std::to_string(snf.rank()) +
                                         " < " + std::to_string(n));
  GroupPresentation g;
  g.torus_rank = d - n;
  g.finite_invariant_factors = snf.nontrivial_factors();
  g.kernel_basis = lattice_kernel(W.matrix);
  for (auto& k : g.kernel_basis) g.level.push_back(dot(k, W.scaled_offsets));
  return g;
}

inline SynthesisReport synthesize(const LabeledPolytope& P) {
  SynthesisReport report;
  report.weights = weight_matrix(P);
  report.group = reduction_group(report.weights);
  for (std::size_t j = 0; j < P.facet_count(); ++j) {
    const auto& h = P.facet(j);
    report.facets.push_back(
        {j, report.weights.matrix.column(j), h.label, h.offset, report.weights.scaled_offsets[j]});
  }
  report.classification = classify(P);
  report.ambient_dimension = P.facet_count();
  report.facets_minus_dim = P.facet_count() - P.dim();
  return report;
}

}  // namespace toric
