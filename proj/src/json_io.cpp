#include "trop/json_io.hpp"

#include <fstream>

#include "trop/errors.hpp"

namespace trop {

Rational rational_from_json(const Json& token) {
  if (token.is_number_integer()) return Rational(static_cast<long>(token.get<long long>()));
  if (token.is_string()) return parse_rational(token.get<std::string>());
  throw ParseError("expected an integer or a 'p/q' string, got: " + token.dump());
}

Json rational_to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p())
    return Json(static_cast<long long>(q.get_num().get_si()));
  return Json(rational_str(q));
}

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw ParseError(msg);
}

std::vector<std::vector<Rational>> entry_grid(const Json& j, int rows, int cols) {
  require(j.is_array() && static_cast<int>(j.size()) == rows, "entries must have 'rows' rows");
  std::vector<std::vector<Rational>> grid;
  for (const auto& row : j) {
    require(row.is_array() && static_cast<int>(row.size()) == cols,
            "every entry row must have 'cols' entries");
    std::vector<Rational> out;
    for (const auto& token : row) out.push_back(rational_from_json(token));
    grid.push_back(std::move(out));
  }
  return grid;
}

}  // namespace

TropicalMatrix matrix_from_json(const Json& j) {
  require(j.is_object() && j.contains("rows") && j.contains("cols") && j.contains("entries"),
          "matrix JSON needs rows, cols, entries");
  require(j["rows"].is_number_integer() && j["cols"].is_number_integer(),
          "matrix dimensions must be integers");
  const int rows = j["rows"].get<int>(), cols = j["cols"].get<int>();
  require(rows >= 1 && cols >= 1, "matrix dimensions must be positive");
  return TropicalMatrix(entry_grid(j["entries"], rows, cols));
}

Json matrix_to_json(const TropicalMatrix& a) {
  Json j;
  j["rows"] = a.rows();
  j["cols"] = a.cols();
  Json entries = Json::array();
  for (int i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < a.cols(); ++k) row.push_back(rational_to_json(a(i, k)));
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

SignPattern sign_pattern_from_json(const Json& j) {
  require(j.is_object() && j.contains("rows") && j.contains("cols") && j.contains("entries"),
          "sign pattern JSON needs rows, cols, entries");
  const int rows = j["rows"].get<int>(), cols = j["cols"].get<int>();
  require(rows >= 1 && cols >= 1, "sign pattern dimensions must be positive");
  SignPattern s(rows, cols, 1);
  const auto& entries = j["entries"];
  require(entries.is_array() && static_cast<int>(entries.size()) == rows,
          "entries must have 'rows' rows");
  for (int i = 0; i < rows; ++i) {
    const auto& row = entries[i];
    require(row.is_array() && static_cast<int>(row.size()) == cols,
            "every entry row must have 'cols' entries");
    for (int k = 0; k < cols; ++k) {
      require(row[k].is_number_integer(), "sign entries must be integers");
      s(i, k) = row[k].get<int>();
    }
  }
  validate_sign_pattern(s);
  return s;
}

PlueckerVector plucker_from_json(const Json& j) {
  require(j.is_object() && j.contains("m") && j.contains("coords"),
          "Pluecker JSON needs m and coords");
  PlueckerVector p;
  p.m = j["m"].get<int>();
  require(p.m >= 3, "Pluecker vector needs m >= 3");
  require(j["coords"].is_object(), "coords must be an object keyed by 'i,j'");
  for (const auto& [k, value] : j["coords"].items()) {
    const auto comma = k.find(',');
    require(comma != std::string::npos, "coordinate key must look like 'i,j': " + k);
    int i = 0, jj = 0;
    try {
      i = std::stoi(k.substr(0, comma));
      jj = std::stoi(k.substr(comma + 1));
    } catch (const std::exception&) {
      throw ParseError("coordinate key must look like 'i,j': " + k);
    }
    require(i >= 1 && jj >= 1 && i <= p.m && jj <= p.m && i != jj,
            "coordinate key out of range: " + k);
    p.coords[{std::min(i, jj) - 1, std::max(i, jj) - 1}] = rational_from_json(value);
  }
  require(static_cast<int>(p.coords.size()) == p.m * (p.m - 1) / 2,
          "coords must contain every pair exactly once");
  return p;
}

Json plucker_to_json(const PlueckerVector& p) {
  Json j;
  j["m"] = p.m;
  Json coords = Json::object();
  for (const auto& [ij, value] : p.coords)
    coords[std::to_string(ij.first + 1) + "," + std::to_string(ij.second + 1)] =
        rational_to_json(value);
  j["coords"] = std::move(coords);
  return j;
}

Json bicolored_tree_to_json(const BicoloredTree& t) {
  Json j;
  j["d"] = t.d;
  j["n"] = t.n;
  Json splits = Json::array();
  for (const auto& [s, w] : t.splits) {
    Json entry;
    Json part = Json::array();
    for (int leaf : s.part())
      part.push_back(leaf < t.d ? "r" + std::to_string(leaf + 1)
                                : "g" + std::to_string(leaf - t.d + 1));
    entry["part"] = std::move(part);
    entry["weight"] = rational_str(w);
    splits.push_back(std::move(entry));
  }
  j["splits"] = std::move(splits);
  return j;
}

PhyloTree phylo_tree_from_json(const Json& j) {
  require(j.is_object() && j.contains("m") && j.contains("splits"),
          "tree JSON needs m and splits");
  PhyloTree t;
  t.m = j["m"].get<int>();
  require(t.m >= 3, "tree needs at least 3 leaves");
  for (const auto& entry : j["splits"]) {
    require(entry.is_object() && entry.contains("part") && entry.contains("weight"),
            "each split needs part and weight");
    std::vector<int> part;
    for (const auto& leaf : entry["part"]) {
      require(leaf.is_number_integer(), "uncolored tree parts use 1-based leaf numbers");
      const int x = leaf.get<int>();
      require(x >= 1 && x <= t.m, "leaf out of range in split part");
      part.push_back(x - 1);
    }
    const Rational w = rational_from_json(entry["weight"]);
    t.splits.emplace(Split(std::move(part), t.m), w);
  }
  if (j.contains("leaf_lengths")) {
    for (const auto& token : j["leaf_lengths"]) t.leaf_lengths.push_back(rational_from_json(token));
    require(static_cast<int>(t.leaf_lengths.size()) == t.m,
            "leaf_lengths must have one entry per leaf");
  }
  return t;
}

Json phylo_tree_to_json(const PhyloTree& t) {
  Json j;
  j["m"] = t.m;
  Json splits = Json::array();
  for (const auto& [s, w] : t.splits) {
    Json entry;
    Json part = Json::array();
    for (int leaf : s.part()) part.push_back(leaf + 1);
    entry["part"] = std::move(part);
    entry["weight"] = rational_str(w);
    splits.push_back(std::move(entry));
  }
  j["splits"] = std::move(splits);
  Json lengths = Json::array();
  for (const auto& l : t.leaf_lengths) lengths.push_back(rational_to_json(l));
  j["leaf_lengths"] = std::move(lengths);
  return j;
}

TropicalPlane plane_from_json(const Json& j) {
  require(j.is_object() && j.contains("d") && j.contains("faces"),
          "plane JSON needs d and faces");
  TropicalPlane plane;
  plane.dim = j["d"].get<int>();
  for (const auto& face_json : j["faces"]) {
    PlaneFace face;
    require(face_json.is_object() && face_json.contains("base"), "each face needs base vertices");
    for (const auto& vertex : face_json["base"]) {
      std::vector<Rational> point;
      for (const auto& coord : vertex) point.push_back(rational_from_json(coord));
      face.vertices.push_back(std::move(point));
    }
    if (face_json.contains("rays")) {
      for (const auto& ray : face_json["rays"]) {
        std::vector<int> indicator;
        for (const auto& coord : ray) {
          require(coord.is_number_integer(), "ray coordinates must be 0/1 integers");
          indicator.push_back(coord.get<int>());
        }
        face.rays.push_back(std::move(indicator));
      }
    }
    if (face_json.contains("flag")) {
      const auto& flag = face_json["flag"];
      require(flag.is_object() && flag.contains("H1") && flag.contains("H2"),
              "flag needs H1 and H2");
      std::vector<int> h1, h2;
      for (const auto& x : flag["H1"]) h1.push_back(x.get<int>() - 1);
      for (const auto& x : flag["H2"]) h2.push_back(x.get<int>() - 1);
      face.flag = std::make_pair(std::move(h1), std::move(h2));
    }
    plane.faces.push_back(std::move(face));
  }
  validate_plane(plane);
  return plane;
}

Bicoloring coloring_from_json(const Json& j, int m) {
  require(j.is_object() && j.contains("R") && j.contains("G"), "coloring JSON needs R and G");
  std::vector<int> red, green;
  for (const auto& x : j["R"]) red.push_back(x.get<int>() - 1);
  for (const auto& x : j["G"]) green.push_back(x.get<int>() - 1);
  return make_bicoloring(std::move(red), std::move(green), m);
}

std::map<int, std::vector<int>> jmap_from_json(const Json& j) {
  require(j.is_object(), "facet map must be an object");
  std::map<int, std::vector<int>> jmap;
  for (const auto& [k, value] : j.items()) {
    int facet = 0;
    try {
      facet = std::stoi(k);
    } catch (const std::exception&) {
      throw ParseError("facet keys must be 1-based integers: " + k);
    }
    require(facet >= 1, "facet keys must be 1-based integers");
    std::vector<int> cols;
    for (const auto& x : value) cols.push_back(x.get<int>() - 1);
    jmap[facet - 1] = std::move(cols);
  }
  return jmap;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace trop
