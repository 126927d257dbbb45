#include "trop/plane.hpp"

#include <algorithm>
#include <set>

#include "trop/errors.hpp"
#include "trop/rank.hpp"

namespace trop {

namespace {

using Vec = std::vector<Rational>;
using Point2 = std::pair<Rational, Rational>;

Vec to_vec(const std::vector<int>& indicator) {
  Vec out(indicator.size());
  for (std::size_t i = 0; i < indicator.size(); ++i) out[i] = indicator[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

// Solves [b1 b2 1] * (x, y, mu)^T = rhs exactly; nullopt when inconsistent.
// The basis columns are independent by construction, so solutions are unique.
std::optional<Point2> solve_in_chart(const Vec& b1, const Vec& b2, const Vec& rhs) {
  const int d = static_cast<int>(rhs.size());
  std::vector<std::array<Rational, 4>> rows(d);
  for (int i = 0; i < d; ++i) rows[i] = {b1[i], b2[i], Rational(1), rhs[i]};
  int rank = 0;
  for (int col = 0; col < 3 && rank < d; ++col) {
    int pivot = -1;
    for (int r = rank; r < d; ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < d; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational f = rows[r][col] / rows[rank][col];
      for (int c = col; c < 4; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  for (int r = rank; r < d; ++r)
    if (rows[r][3] != 0) return std::nullopt;
  // back-substitute from the echelon structure
  Rational sol[3] = {0, 0, 0};
  int row = 0;
  for (int col = 0; col < 3 && row < rank; ++col) {
    if (rows[row][col] == 0) continue;
    Rational value = rows[row][3];
    for (int c = col + 1; c < 3; ++c) value -= rows[row][c] * sol[c];
    sol[col] = value / rows[row][col];
    ++row;
  }
  return Point2{sol[0], sol[1]};
}

// A face reduced to exact 2D coordinates in its own affine chart.
struct FaceChart {
  Vec base;
  Vec b1, b2;
  std::vector<Point2> verts2d;
  std::vector<Point2> rays2d;
};

bool in_span_with_ones(const std::vector<Vec>& basis, const Vec& dir) {
  // Gaussian rank test: is dir in span(basis, all-ones)?
  std::vector<Vec> rows = basis;
  rows.push_back(Vec(dir.size(), Rational(1)));
  rows.push_back(dir);
  const int d = static_cast<int>(dir.size());
  int rank_without = 0, rank_with = 0;
  for (int pass = 0; pass < 2; ++pass) {
    std::vector<Vec> mat(rows.begin(), rows.end() - (pass == 0 ? 1 : 0));
    int rank = 0;
    for (int col = 0; col < d && rank < static_cast<int>(mat.size()); ++col) {
      int pivot = -1;
      for (int r = rank; r < static_cast<int>(mat.size()); ++r)
        if (mat[r][col] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) continue;
      std::swap(mat[rank], mat[pivot]);
      for (int r = 0; r < static_cast<int>(mat.size()); ++r) {
        if (r == rank || mat[r][col] == 0) continue;
        const Rational f = mat[r][col] / mat[rank][col];
        for (int c = col; c < d; ++c) mat[r][c] -= f * mat[rank][c];
      }
      ++rank;
    }
    (pass == 0 ? rank_without : rank_with) = rank;
  }
  return rank_with == rank_without;
}

FaceChart build_chart(const PlaneFace& face, int dim) {
  if (face.vertices.empty()) throw PreconditionError("face needs at least one vertex");
  for (const auto& v : face.vertices)
    if (static_cast<int>(v.size()) != dim) throw DimensionError("vertex has wrong dimension");
  for (const auto& r : face.rays)
    if (static_cast<int>(r.size()) != dim) throw DimensionError("ray has wrong dimension");

  FaceChart chart;
  chart.base = face.vertices.front();
  std::vector<Vec> dirs;
  for (std::size_t k = 1; k < face.vertices.size(); ++k)
    dirs.push_back(sub(face.vertices[k], chart.base));
  for (const auto& r : face.rays) dirs.push_back(to_vec(r));

  std::vector<Vec> basis;
  for (const auto& dir : dirs) {
    if (basis.size() == 2) break;
    if (!in_span_with_ones(basis, dir)) basis.push_back(dir);
  }
  if (basis.size() != 2) throw PreconditionError("face is not 2-dimensional");
  for (const auto& dir : dirs)
    if (!in_span_with_ones(basis, dir)) throw PreconditionError("face is not 2-dimensional");
  chart.b1 = basis[0];
  chart.b2 = basis[1];

  chart.verts2d.emplace_back(Rational(0), Rational(0));
  for (std::size_t k = 1; k < face.vertices.size(); ++k) {
    const auto p = solve_in_chart(chart.b1, chart.b2, sub(face.vertices[k], chart.base));
    if (!p) throw InternalError("vertex left its own chart");
    chart.verts2d.push_back(*p);
  }
  for (const auto& r : face.rays) {
    const auto p = solve_in_chart(chart.b1, chart.b2, to_vec(r));
    if (!p) throw InternalError("ray left its own chart");
    if (p->first == 0 && p->second == 0)
      throw PreconditionError("ray is parallel to the lineality direction");
    chart.rays2d.push_back(*p);
  }
  return chart;
}

Rational cross(const Point2& a, const Point2& b) { return a.first * b.second - a.second * b.first; }

Point2 minus(const Point2& a, const Point2& b) { return {a.first - b.first, a.second - b.second}; }

// Relative interior of conv(verts) + cone(rays) in 2D: strictly inside every
// valid supporting line spanned by generators.
bool relint_contains(const std::vector<Point2>& verts, const std::vector<Point2>& rays,
                     const Point2& p) {
  std::vector<Point2> dirs;
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b) {
      const Point2 d = minus(verts[b], verts[a]);
      if (d.first != 0 || d.second != 0) dirs.push_back(d);
    }
  for (const auto& r : rays) dirs.push_back(r);

  for (const auto& anchor : verts) {
    for (const auto& dir : dirs) {
      // candidate supporting line through anchor with direction dir
      int side = 0;
      bool valid = true;
      auto classify = [&](const Rational& c) {
        if (c == 0) return true;
        const int s = sgn(c) > 0 ? 1 : -1;
        if (side == 0) side = s;
        return side == s;
      };
      for (const auto& v : verts)
        if (!classify(cross(dir, minus(v, anchor)))) {
          valid = false;
          break;
        }
      if (valid)
        for (const auto& r : rays)
          if (!classify(cross(dir, r))) {
            valid = false;
            break;
          }
      if (!valid) continue;
      const Rational at_p = cross(dir, minus(p, anchor));
      if (at_p == 0) return false;  // on a supporting line: boundary or outside
      if (side != 0 && sgn(at_p) != side) return false;  // outside
    }
  }
  return true;
}

bool vertices_equal_mod_ones(const Vec& a, const Vec& b) {
  const Rational shift = a.front() - b.front();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] - b[i] != shift) return false;
  return true;
}

}  // namespace

void validate_plane(const TropicalPlane& plane) {
  if (plane.dim < 2) throw DimensionError("plane ambient dimension too small");
  for (const auto& face : plane.faces) {
    for (const auto& r : face.rays) {
      if (static_cast<int>(r.size()) != plane.dim) throw DimensionError("ray has wrong dimension");
      bool any = false;
      for (int x : r) {
        if (x != 0 && x != 1) throw PreconditionError("ray generators must be 0/1 indicators");
        any |= (x == 1);
      }
      if (!any) throw PreconditionError("ray indicator is empty");
    }
    if (face.flag) {
      const auto& [h1, h2] = *face.flag;
      std::set<int> s1(h1.begin(), h1.end()), s2(h2.begin(), h2.end());
      if (s1.empty() || s2.size() <= s1.size() ||
          !std::includes(s2.begin(), s2.end(), s1.begin(), s1.end()))
        throw PreconditionError("flag must satisfy H1 strictly inside H2");
      for (int x : s2)
        if (x < 0 || x >= plane.dim) throw DimensionError("flag coordinate out of range");
    }
    build_chart(face, plane.dim);  // throws unless the face is 2-dimensional
  }
}

bool face_contains_in_relint(const PlaneFace& face, const std::vector<Rational>& point, int dim) {
  const FaceChart chart = build_chart(face, dim);
  const auto p2 = solve_in_chart(chart.b1, chart.b2, sub(point, chart.base));
  if (!p2) return false;
  return relint_contains(chart.verts2d, chart.rays2d, *p2);
}

FaceMarking marked_faces(const TropicalMatrix& a, const TropicalPlane& plane) {
  validate_plane(plane);
  if (a.rows() != plane.dim) throw DimensionError("matrix rows must match the ambient dimension");
  FaceMarking marking;
  for (int j = 0; j < a.cols(); ++j) {
    const auto col = a.column(j);
    int hit = -1;
    bool unique = true;
    for (std::size_t f = 0; f < plane.faces.size(); ++f) {
      if (face_contains_in_relint(plane.faces[f], col, plane.dim)) {
        if (hit >= 0) unique = false;
        if (hit < 0) hit = static_cast<int>(f);
      }
    }
    if (hit >= 0 && unique)
      marking.column_to_face[j] = hit;
    else
      marking.nongeneric_columns.push_back(j);
  }
  return marking;
}

std::optional<Starship> detect_starship(const FaceMarking& marking, const TropicalPlane& plane) {
  std::vector<int> marked;
  for (const auto& [col, face] : marking.column_to_face) marked.push_back(face);
  std::sort(marked.begin(), marked.end());
  marked.erase(std::unique(marked.begin(), marked.end()), marked.end());

  const int count = static_cast<int>(marked.size());
  for (int x = 0; x < count; ++x) {
    for (int y = x + 1; y < count; ++y) {
      for (int z = y + 1; z < count; ++z) {
        const PlaneFace& fa = plane.faces[marked[x]];
        const PlaneFace& fb = plane.faces[marked[y]];
        const PlaneFace& fc = plane.faces[marked[z]];
        // shared base vertex, modulo the all-ones direction
        bool shared_vertex = false;
        for (const auto& va : fa.vertices) {
          for (const auto& vb : fb.vertices) {
            if (!vertices_equal_mod_ones(va, vb)) continue;
            for (const auto& vc : fc.vertices)
              if (vertices_equal_mod_ones(va, vc)) shared_vertex = true;
          }
        }
        if (!shared_vertex) continue;
        for (const auto& ray : fa.rays) {
          const bool in_b = std::find(fb.rays.begin(), fb.rays.end(), ray) != fb.rays.end();
          const bool in_c = std::find(fc.rays.begin(), fc.rays.end(), ray) != fc.rays.end();
          if (in_b && in_c)
            return Starship{{marked[x], marked[y], marked[z]}, ray};
        }
      }
    }
  }
  return std::nullopt;
}

StarshipProjection starship_projection(const TropicalPlane& plane, const Starship& ship) {
  std::array<std::set<int>, 3> h2;
  std::set<int> common_h1;
  for (int k = 0; k < 3; ++k) {
    const auto& face = plane.faces.at(ship.faces[k]);
    if (!face.flag) throw PreconditionError("starship faces need flag data for the projection");
    const auto& [f1, f2] = *face.flag;
    const std::set<int> s1(f1.begin(), f1.end());
    h2[k] = std::set<int>(f2.begin(), f2.end());
    if (k == 0)
      common_h1 = s1;
    else if (common_h1 != s1)
      throw PreconditionError("starship faces do not share the rank-1 flat");
  }
  if (common_h1.size() != 1)
    throw PreconditionError("shared rank-1 flat must be a single coordinate");
  if (h2[0] == h2[1] || h2[0] == h2[2] || h2[1] == h2[2])
    throw PreconditionError("starship faces must have distinct rank-2 flats");

  StarshipProjection proj;
  for (int k = 0; k < 3; ++k) {
    int chosen = -1;
    for (int x : h2[k]) {
      const auto& other1 = h2[(k + 1) % 3];
      const auto& other2 = h2[(k + 2) % 3];
      if (!other1.count(x) && !other2.count(x)) {
        chosen = x;
        break;
      }
    }
    if (chosen < 0)
      throw PreconditionError("rank-2 flat covered by the other two: invalid flats");
    proj.coords[k] = chosen;
  }
  proj.coords[3] = *common_h1.begin();
  return proj;
}

PositivityCertificate certify_nonpositive_rank3(const TropicalMatrix& a, const Budget& budget) {
  if (!prevariety_member(a, 3, budget).member)
    throw PreconditionError("matrix is not in the rank-3 prevariety");
  return positive_prevariety_member(a, 3, budget);
}

Arrangement tree_arrangement(const TropicalMatrix& a, const std::map<int, std::vector<int>>& jmap,
                             const Budget& budget) {
  const int d = a.rows();
  Arrangement arrangement;
  for (int facet = 0; facet < d; ++facet) {
    const auto it = jmap.find(facet);
    if (it == jmap.end() || it->second.empty())
      throw PreconditionError("missing facet assignment for direction " + std::to_string(facet + 1));
    std::vector<int> cols = it->second;
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    if (cols.front() < 0 || cols.back() >= a.cols())
      throw DimensionError("facet column out of range");

    std::vector<int> rows;
    for (int i = 0; i < d; ++i)
      if (i != facet) rows.push_back(i);
    TropicalMatrix sub(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j)
        sub(static_cast<int>(i), static_cast<int>(j)) = a(rows[i], cols[j]);
    if (tropical_rank(sub, budget) > 2)
      throw PreconditionError("facet " + std::to_string(facet + 1) +
                              " submatrix has tropical rank > 2");
    ArrangementTree entry;
    entry.facet = facet;
    entry.row_labels = rows;
    entry.col_labels = cols;
    entry.tree = bicolored_tree_from_matrix(sub, budget);
    entry.caterpillar = is_caterpillar(entry.tree);
    arrangement.all_caterpillar = arrangement.all_caterpillar && entry.caterpillar;
    arrangement.trees.push_back(std::move(entry));
  }
  return arrangement;
}

std::map<int, std::vector<int>> jmap_from_marking(const FaceMarking& marking,
                                                  const TropicalPlane& plane, int ambient_dim) {
  if (!marking.nongeneric_columns.empty()) {
    std::string cols;
    for (int j : marking.nongeneric_columns) cols += " " + std::to_string(j + 1);
    throw PreconditionError("non-generic columns:" + cols);
  }
  std::map<int, std::vector<int>> jmap;
  for (int facet = 0; facet < ambient_dim; ++facet) jmap[facet] = {};
  for (const auto& [col, face_idx] : marking.column_to_face) {
    for (const auto& ray : plane.faces.at(face_idx).rays)
      for (int coord = 0; coord < ambient_dim; ++coord)
        if (ray[coord] == 1) jmap[coord].push_back(col);
  }
  for (auto& [facet, cols] : jmap) {
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  }
  return jmap;
}

}  // namespace trop
