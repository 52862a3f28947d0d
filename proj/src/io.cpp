#include "convdual/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace convdual {

namespace {

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) throw InvalidArgument(std::string(what) + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw InvalidArgument(std::string(what) + ": missing field '" + key + "'");
  return *it;
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw InvalidArgument(std::string(what) + ": expected a number");
  return j.get<double>();
}

std::vector<Vec> vec_list(const Json& j, int dim, const char* what) {
  if (!j.is_array()) throw InvalidArgument(std::string(what) + ": expected an array");
  std::vector<Vec> out;
  for (const Json& e : j) {
    out.push_back(vec_from_json(e));
    if (out.back().size() != dim) throw InvalidArgument(std::string(what) + ": entry of the wrong dimension");
  }
  return out;
}

std::vector<Halfspace> halfspace_list(const Json& j, int dim) {
  if (!j.is_array()) throw InvalidArgument("halfspaces: expected an array");
  std::vector<Halfspace> out;
  for (const Json& h : j) {
    Halfspace hs{vec_from_json(field(h, "normal", "halfspace")), number(field(h, "offset", "halfspace"), "halfspace offset")};
    if (hs.normal.size() != dim) throw InvalidArgument("halfspace: normal of the wrong dimension");
    out.push_back(std::move(hs));
  }
  return out;
}

Json halfspaces_json(const std::vector<Halfspace>& hs) {
  Json out = Json::array();
  for (const Halfspace& h : hs) out.push_back({{"normal", to_json(h.normal)}, {"offset", h.offset}});
  return out;
}

std::string format_double(double x) {
  if (x == kInf) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json to_json(const Mat& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(to_json(Vec(m.row(i).transpose())));
  return out;
}

Json to_json(const Polyhedron& p, bool with_flags) {
  Json out{{"dim", p.dim()}};
  if (p.has_vrep()) {
    Json verts = Json::array(), rays = Json::array();
    for (const Vec& v : p.vertices()) verts.push_back(to_json(v));
    for (const Vec& r : p.rays()) rays.push_back(to_json(r));
    out["vertices"] = verts;
    out["rays"] = rays;
  }
  if (p.has_hrep()) out["halfspaces"] = halfspaces_json(p.halfspaces());
  if (with_flags) {
    const PolyhedronFlags f = flags(p);
    out["flags"] = {{"empty", f.empty}, {"bounded", f.bounded}, {"contains_origin", f.contains_origin}, {"symmetric", f.symmetric}};
  }
  return out;
}

Json to_json(const PLConvexFunction& f) {
  Json pieces = Json::array();
  for (const AffineFunctional& u : f.pieces()) pieces.push_back({{"phi", to_json(u.phi)}, {"c", u.c}});
  Json out{{"n", f.dim()}, {"pieces", pieces}};
  if (f.has_domain()) out["domain"] = {{"halfspaces", halfspaces_json(f.domain()->halfspaces())}};
  return out;
}

Json to_json(const CanonicalTransform& t) {
  return {{"alpha", t.alpha}, {"U", to_json(t.U)}, {"shift", to_json(t.shift)}, {"phi0", to_json(t.phi0)},
          {"r0", t.r0},       {"mode", to_string(t.mode)}};
}

Json to_json(const Subspace& s) {
  Json basis = Json::array();
  for (int j = 0; j < s.dim(); ++j) basis.push_back(to_json(Vec(s.basis().col(j))));
  return {{"n", s.ambient()}, {"basis", basis}};
}

Json to_json(const CheckReport& r) {
  Json out{{"check", r.check},
           {"seed", r.seed},
           {"samples", r.samples},
           {"violations", r.violations},
           {"witnesses", r.witnesses},
           {"max_error", std::isfinite(r.max_error) ? Json(r.max_error) : Json("inf")}};
  if (!r.series.empty()) out["series"] = r.series;
  return out;
}

Json to_json(const SuiteReport& r) {
  Json checks = Json::array();
  for (const CheckReport& c : r.checks) checks.push_back(to_json(c));
  return {{"suite", r.suite}, {"seed", r.seed}, {"violations", r.violations()}, {"checks", checks}};
}

Json to_json(const RecoveredMap& m) {
  return {{"matrix", to_json(m.matrix)}, {"scalar_class", to_string(m.scalar_class)}, {"residual", m.residual}};
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("vector: expected an array of numbers");
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = number(j[i], "vector entry");
  return v;
}

Mat mat_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InvalidArgument("matrix: expected a non-empty array of rows");
  const Vec first = vec_from_json(j[0]);
  Mat m(static_cast<Eigen::Index>(j.size()), first.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Vec row = vec_from_json(j[i]);
    if (row.size() != first.size()) throw InvalidArgument("matrix: ragged rows");
    m.row(static_cast<Eigen::Index>(i)) = row.transpose();
  }
  return m;
}

Polyhedron polyhedron_from_json(const Json& j) {
  const int dim = static_cast<int>(number(field(j, "dim", "polyhedron"), "polyhedron dim"));
  if (dim < 1) throw InvalidArgument("polyhedron: dim must be positive");
  const bool has_v = j.contains("vertices"), has_h = j.contains("halfspaces");
  std::vector<Vec> verts, rays;
  if (has_v) verts = vec_list(j["vertices"], dim, "vertices");
  if (j.contains("rays")) rays = vec_list(j["rays"], dim, "rays");
  if (has_v && has_h) return Polyhedron::from_both(dim, verts, rays, halfspace_list(j["halfspaces"], dim));
  if (has_h) return Polyhedron::from_halfspaces(dim, halfspace_list(j["halfspaces"], dim));
  if (has_v) return Polyhedron::from_vertices(dim, verts, rays);
  throw InvalidArgument("polyhedron: needs vertices or halfspaces");
}

PLConvexFunction function_from_json(const Json& j) {
  const int n = static_cast<int>(number(field(j, "n", "function"), "function n"));
  if (n < 1) throw InvalidArgument("function: n must be positive");
  const Json& ps = field(j, "pieces", "function");
  if (!ps.is_array() || ps.empty()) throw InvalidArgument("function: pieces must be a non-empty array");
  std::vector<AffineFunctional> pieces;
  for (const Json& p : ps) {
    AffineFunctional u{vec_from_json(field(p, "phi", "piece")), number(field(p, "c", "piece"), "piece c")};
    if (u.phi.size() != n) throw InvalidArgument("function: piece of the wrong dimension");
    pieces.push_back(std::move(u));
  }
  if (!j.contains("domain")) return PLConvexFunction(std::move(pieces));
  const Json& d = j["domain"];
  if (d.contains("halfspaces")) return PLConvexFunction(std::move(pieces), Polyhedron::from_halfspaces(n, halfspace_list(d["halfspaces"], n)));
  if (d.contains("vertices")) {
    std::vector<Vec> rays;
    if (d.contains("rays")) rays = vec_list(d["rays"], n, "domain rays");
    return PLConvexFunction(std::move(pieces), Polyhedron::from_vertices(n, vec_list(d["vertices"], n, "domain vertices"), rays));
  }
  throw InvalidArgument("function: domain needs halfspaces or vertices");
}

CanonicalTransform transform_from_json(const Json& j) {
  CanonicalTransform t;
  t.alpha = number(field(j, "alpha", "transform"), "transform alpha");
  t.U = mat_from_json(field(j, "U", "transform"));
  t.shift = vec_from_json(field(j, "shift", "transform"));
  t.phi0 = vec_from_json(field(j, "phi0", "transform"));
  t.r0 = number(field(j, "r0", "transform"), "transform r0");
  const Json& mode = field(j, "mode", "transform");
  if (!mode.is_string()) throw InvalidArgument("transform: mode must be a string");
  t.mode = parse_mode(mode.get<std::string>());
  t.validate();
  return t;
}

Subspace subspace_from_json(const Json& j) {
  const int n = static_cast<int>(number(field(j, "n", "subspace"), "subspace n"));
  const std::vector<Vec> cols = vec_list(field(j, "basis", "subspace"), n, "subspace basis");
  Mat m(n, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) m.col(static_cast<Eigen::Index>(k)) = cols[k];
  return Subspace::span(n, m);
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    const std::size_t pos = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InvalidArgument(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << dump(j);
}

void write_grid_csv(std::ostream& os, const GridFunction1D& g) {
  os << "x,value\n";
  for (std::size_t i = 0; i < g.size(); ++i) os << format_double(g.node(i)) << ',' << format_double(g[i]) << '\n';
}

GridFunction1D read_grid_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "x,value") throw InvalidArgument("grid CSV: expected header 'x,value'");
  std::vector<double> xs, vals;
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw InvalidArgument("grid CSV line " + std::to_string(lineno) + ": expected two columns");
    try {
      xs.push_back(std::stod(line.substr(0, comma)));
      const std::string v = line.substr(comma + 1);
      vals.push_back(v == "inf" ? kInf : std::stod(v));
    } catch (const std::logic_error&) {
      throw InvalidArgument("grid CSV line " + std::to_string(lineno) + ": not a number");
    }
  }
  if (xs.size() < 2) throw InvalidArgument("grid CSV: need at least two nodes");
  const double step = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (std::abs(xs[i] - (xs.front() + static_cast<double>(i) * step)) > 1e-9 * (1.0 + std::abs(xs[i]))) {
      throw InvalidArgument("grid CSV: nodes are not uniformly spaced");
    }
  }
  return GridFunction1D(xs.front(), step, std::move(vals));
}

}  // namespace convdual
