#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "trop/config.hpp"
#include "trop/matrix.hpp"
#include "trop/positivity.hpp"
#include "trop/tree.hpp"

namespace trop {

// One 2-face of a user-supplied tropical plane: conv(vertices) + cone(rays),
// read in the tropical projective torus (coordinates modulo the all-ones
// vector). Rays are 0/1 indicator vectors; wings may carry their flag
// H1 strictly inside H2.
struct PlaneFace {
  std::vector<std::vector<Rational>> vertices;
  std::vector<std::vector<int>> rays;
  std::optional<std::pair<std::vector<int>, std::vector<int>>> flag;  // (H1, H2), 0-based
};

struct TropicalPlane {
  int dim = 0;  // ambient coordinate count d
  std::vector<PlaneFace> faces;
};

// Ray indicators 0/1, flags strictly nested, every face 2-dimensional
// modulo the all-ones direction.
void validate_plane(const TropicalPlane& plane);

// For each column: the unique face whose relative interior contains it.
// Columns lying on no listed face, or only on boundaries, are reported
// non-generic; that is data, not an error.
struct FaceMarking {
  std::map<int, int> column_to_face;
  std::vector<int> nongeneric_columns;
};

FaceMarking marked_faces(const TropicalMatrix& a, const TropicalPlane& plane);

// Exact test: does the point lie in the relative interior of the face,
// modulo the all-ones vector?
bool face_contains_in_relint(const PlaneFace& face, const std::vector<Rational>& point, int dim);

struct Starship {
  std::array<int, 3> faces;  // indices into plane.faces, increasing
  std::vector<int> ray;      // the shared ray indicator
};

// First (in face-index order) triple of marked faces sharing a base vertex
// and a ray generator, i.e. a common unbounded 1-face.
std::optional<Starship> detect_starship(const FaceMarking& marking, const TropicalPlane& plane);

struct StarshipProjection {
  std::array<int, 4> coords;  // h1, h2, h3, f (0-based coordinates)
};

// Coordinates onto which the plane projects so the starship survives as
// three wings around the ray e_f: h_k taken from H2 of face k minus the
// other two H2 flats. Requires flags with a common singleton H1.
StarshipProjection starship_projection(const TropicalPlane& plane, const Starship& ship);

// Exhaustive 4x4-minor positivity scan for matrices in the rank-3
// prevariety; a detected starship predicts the not_positive outcome.
PositivityCertificate certify_nonpositive_rank3(const TropicalMatrix& a, const Budget& budget = {});

struct ArrangementTree {
  int facet = 0;                    // the coordinate direction i' (0-based)
  std::vector<int> row_labels;      // original row indices (all but i')
  std::vector<int> col_labels;      // original column indices
  BicoloredTree tree;
  bool caterpillar = false;
};

struct Arrangement {
  std::vector<ArrangementTree> trees;
  bool all_caterpillar = true;
};

// One bicolored tree per coordinate direction i': the tree of the submatrix
// on rows != i' and the columns assigned to that facet. Each submatrix must
// have tropical rank <= 2.
Arrangement tree_arrangement(const TropicalMatrix& a, const std::map<int, std::vector<int>>& jmap,
                             const Budget& budget = {});

// Facet assignment read off a marking: column j belongs to facet i' iff its
// marked face has a ray generator whose indicator set contains i'. All
// columns must be generic.
std::map<int, std::vector<int>> jmap_from_marking(const FaceMarking& marking,
                                                  const TropicalPlane& plane, int ambient_dim);

}  // namespace trop
