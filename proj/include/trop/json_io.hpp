#pragma once

#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "trop/matrix.hpp"
#include "trop/plane.hpp"
#include "trop/plucker.hpp"
#include "trop/tree.hpp"

namespace trop {

using Json = nlohmann::ordered_json;

// Matrices: {"rows": d, "cols": n, "entries": [[...]]} where each entry is a
// JSON integer or a string "p/q". Float and NaN tokens are rejected.
TropicalMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const TropicalMatrix& a);

// Same layout, entries restricted to +-1.
SignPattern sign_pattern_from_json(const Json& j);

// {"m": 5, "coords": {"1,2": "0", ...}} with 1-based i < j keys.
PlueckerVector plucker_from_json(const Json& j);
Json plucker_to_json(const PlueckerVector& p);

// Bicolored tree: {"d":, "n":, "splits": [{"part": ["r3","g1"], "weight": "1"}...]}.
Json bicolored_tree_to_json(const BicoloredTree& t);

// Uncolored metric tree: {"m":, "splits": [{"part": [1,2], "weight": "1"}...],
// "leaf_lengths": [...]} with 1-based leaves; leaf_lengths optional.
PhyloTree phylo_tree_from_json(const Json& j);
Json phylo_tree_to_json(const PhyloTree& t);

// {"d":, "faces": [{"base": [[...]], "rays": [[0,1,...]], "flag": {"H1": [2], "H2": [2,3]}}...]}
// with 1-based flag coordinates; flag optional per face.
TropicalPlane plane_from_json(const Json& j);

// {"R": [1,4], "G": [2,3,5]} with 1-based leaves.
Bicoloring coloring_from_json(const Json& j, int m);

// {"1": [1,2], "2": [2,3], ...}: 1-based facet keys and column lists.
std::map<int, std::vector<int>> jmap_from_json(const Json& j);

Json load_json_file(const std::string& path);

Rational rational_from_json(const Json& token);
Json rational_to_json(const Rational& q);

}  // namespace trop
