#pragma once

// JSON and CSV formats. JSON objects are written with sorted keys, so equal
// values serialize to identical bytes.
//
//   function:   {"n", "pieces": [{"phi", "c"}], "domain": {"halfspaces": [{"normal", "offset"}]}}
//   polyhedron: {"dim", "vertices", "rays", "halfspaces", "flags"}
//   transform:  {"alpha", "U", "shift", "phi0", "r0", "mode"}
//   subspace:   {"n", "basis": [column, ...]}
//   grid CSV:   header "x,value", one node per line, "inf" for +infinity

#include "convdual/grid.hpp"
#include "convdual/lattice.hpp"
#include "convdual/transforms.hpp"
#include "convdual/verifier.hpp"

#include "json.hpp"

#include <iosfwd>
#include <string>

namespace convdual {

using Json = nlohmann::json;

Json to_json(const Vec& v);
Json to_json(const Mat& m);  // list of rows
Json to_json(const Polyhedron& p, bool with_flags = true);
Json to_json(const PLConvexFunction& f);
Json to_json(const CanonicalTransform& t);
Json to_json(const Subspace& s);
Json to_json(const CheckReport& r);
Json to_json(const SuiteReport& r);
Json to_json(const RecoveredMap& m);

// Readers throw InvalidArgument naming the offending field.
Vec vec_from_json(const Json& j);
Mat mat_from_json(const Json& j);
Polyhedron polyhedron_from_json(const Json& j);
PLConvexFunction function_from_json(const Json& j);
CanonicalTransform transform_from_json(const Json& j);
Subspace subspace_from_json(const Json& j);

// Parse errors are reported with line and column.
Json parse_json(const std::string& text, const std::string& source = "<input>");
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);
std::string dump(const Json& j);  // indented, trailing newline

void write_grid_csv(std::ostream& os, const GridFunction1D& g);
GridFunction1D read_grid_csv(std::istream& is);

}  // namespace convdual
