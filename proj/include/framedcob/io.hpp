#pragma once

// JSON readers for the complex, surface, map, framed-link and form formats.

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "framedcob/complex.hpp"
#include "framedcob/degree.hpp"
#include "framedcob/errors.hpp"
#include "framedcob/framed_loop.hpp"
#include "framedcob/quadratic.hpp"
#include "framedcob/surface.hpp"

namespace framedcob::io {

using Json = nlohmann::json;

/// Parse JSON text; syntax errors are reported with line and column.
inline Json parse_json(const std::string& text, const std::string& source = "<input>") {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": JSON syntax error");
  }
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

namespace detail {

inline const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing key \"" + key + "\"");
  return j.at(key);
}

inline Label to_label(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return j.get<Label>();
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    try {
      std::size_t used = 0;
      Label v = std::stol(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
  }
  throw InputError(where + ": vertex labels must be integers");
}

inline std::vector<std::vector<Label>> label_lists(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of arrays");
  std::vector<std::vector<Label>> out;
  for (const auto& s : j) {
    if (!s.is_array()) throw InputError(where + ": expected an array of labels");
    std::vector<Label> simplex;
    for (const auto& v : s) simplex.push_back(to_label(v, where));
    out.push_back(std::move(simplex));
  }
  return out;
}

inline Vector to_vector(const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n) throw InputError(where + ": expected " + std::to_string(n) + " coordinates");
  Vector v(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_number()) throw InputError(where + ": coordinates must be numbers");
    v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  }
  return v;
}

inline int to_bit(const Json& j, const std::string& where) {
  if (j.is_boolean()) return j.get<bool>() ? 1 : 0;
  if (j.is_number_integer()) {
    auto v = j.get<long>();
    if (v == 0 || v == 1) return static_cast<int>(v);
  }
  throw InputError(where + ": expected a bit (0 or 1)");
}

} // namespace detail

/// {"maximal_simplices": [[int, ...], ...]}
inline SimplicialComplex complex_from_json(const Json& j, const std::string& where = "complex") {
  return build_complex(detail::label_lists(detail::require(j, "maximal_simplices", where), where + ".maximal_simplices"));
}

/// Named edge cycles {"a": [[u, v], ...], ...} in key order.
inline std::vector<std::pair<std::string, CycleZ2>> cycles_from_json(const ClosedSurface& S, const Json& j,
                                                                     const std::string& where = "cycles") {
  if (!j.is_object()) throw InputError(where + ": expected an object of named edge lists");
  std::vector<std::pair<std::string, CycleZ2>> out;
  for (const auto& [name, edges] : j.items())
    out.emplace_back(name, cycle_from_edges(S, detail::label_lists(edges, where + "." + name)));
  return out;
}

/// {"domain": <complex>, "codomain": <complex>, "vertex_map": {"v": "w", ...}}
inline ValidatedMap map_from_json(const Json& j, const std::string& where = "map") {
  SimplicialMap f{complex_from_json(detail::require(j, "domain", where), where + ".domain"),
                  complex_from_json(detail::require(j, "codomain", where), where + ".codomain"),
                  {}};
  const auto& vm = detail::require(j, "vertex_map", where);
  if (!vm.is_object()) throw InputError(where + ".vertex_map: expected an object");
  for (const auto& [k, v] : vm.items()) f.vertex_map[detail::to_label(Json(k), where + ".vertex_map")] =
      detail::to_label(v, where + ".vertex_map");
  return validate_map(f);
}

/**
 * {"ambient": N, "components": [...]} where each component is either
 * {"points": [[...]], "frames": [[[...], ...], ...]} or
 * {"standard": {"twists": k, "samples": m, "center": [...]}} ("center" optional).
 */
inline FramedLink link_from_json(const Json& j, const std::string& where = "link") {
  const auto& amb = detail::require(j, "ambient", where);
  if (!amb.is_number_integer() || amb.get<long>() < 2) throw InputError(where + ".ambient: expected an integer >= 2");
  const auto N = static_cast<std::size_t>(amb.get<long>());
  const auto& comps = detail::require(j, "components", where);
  if (!comps.is_array() || comps.empty()) throw InputError(where + ".components: expected a nonempty array");
  std::vector<FramedLoop> loops;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const std::string cw = where + ".components[" + std::to_string(c) + "]";
    const auto& comp = comps[c];
    if (comp.is_object() && comp.contains("standard")) {
      const auto& st = comp.at("standard");
      const auto& tw = detail::require(st, "twists", cw + ".standard");
      const auto& sm = detail::require(st, "samples", cw + ".standard");
      if (!tw.is_number_integer() || !sm.is_number_integer() || sm.get<long>() < 3)
        throw InputError(cw + ".standard: twists must be an integer and samples an integer >= 3");
      auto loop = standard_circle(N, tw.get<long>(), static_cast<std::size_t>(sm.get<long>()));
      if (st.contains("center")) loop = translate(std::move(loop), detail::to_vector(st.at("center"), N, cw + ".center"));
      loops.push_back(std::move(loop));
      continue;
    }
    const auto& pts = detail::require(comp, "points", cw);
    const auto& frs = detail::require(comp, "frames", cw);
    if (!pts.is_array() || !frs.is_array() || pts.size() != frs.size())
      throw InputError(cw + ": points and frames must be arrays of equal length");
    FramedLoop loop;
    loop.ambient = N;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      loop.points.push_back(detail::to_vector(pts[i], N, cw + ".points[" + std::to_string(i) + "]"));
      const auto& fr = frs[i];
      const std::string fw = cw + ".frames[" + std::to_string(i) + "]";
      if (!fr.is_array() || fr.size() != N - 1) throw InputError(fw + ": expected N-1 normal vectors");
      Matrix f(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N - 1));
      for (std::size_t k = 0; k + 1 < N; ++k) f.col(static_cast<Eigen::Index>(k)) = detail::to_vector(fr[k], N, fw);
      loop.frames.push_back(std::move(f));
    }
    loops.push_back(std::move(loop));
  }
  return make_link(std::move(loops));
}

/// A refinement read from a form file, with coordinate names when the file
/// names surface cycles.
struct FormInput {
  QuadraticRefinement q;
  std::vector<std::string> names;
};

/// {"gram": [[bits]], "basis_q": [bits]} or
/// {"surface": <complex>, "cycles": {...}, "residues": {"a": bit, ...}}.
inline FormInput form_from_json(const Json& j, const std::string& where = "form") {
  if (j.is_object() && j.contains("gram")) {
    const auto& g = j.at("gram");
    const auto& bq = detail::require(j, "basis_q", where);
    if (!g.is_array() || !bq.is_array()) throw InputError(where + ": gram and basis_q must be arrays");
    const std::size_t n = g.size();
    Gf2Matrix gram(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      if (!g[r].is_array() || g[r].size() != n) throw InputError(where + ".gram: expected a square matrix");
      for (std::size_t c = 0; c < n; ++c) gram.set(r, c, detail::to_bit(g[r][c], where + ".gram"));
    }
    BitVector values(bq.size());
    for (std::size_t i = 0; i < bq.size(); ++i) values.set(i, detail::to_bit(bq[i], where + ".basis_q"));
    FormInput out{build_refinement(gram, values), {}};
    for (std::size_t i = 0; i < n; ++i) out.names.push_back("e" + std::to_string(i + 1));
    return out;
  }
  const auto surface = validate_surface(complex_from_json(detail::require(j, "surface", where), where + ".surface"));
  if (!surface.orientable) throw UnsupportedError(where + ".surface: non-orientable surfaces are not supported");
  const auto named = cycles_from_json(surface, detail::require(j, "cycles", where), where + ".cycles");
  const auto& res = detail::require(j, "residues", where);
  if (!res.is_object()) throw InputError(where + ".residues: expected an object");
  std::vector<NamedCycle> cycles;
  for (const auto& [name, cyc] : named) {
    if (!res.contains(name)) throw InputError(where + ".residues: no residue for cycle '" + name + "'");
    cycles.push_back({name, cyc, detail::to_bit(res.at(name), where + ".residues." + name)});
  }
  for (const auto& [name, _] : res.items()) {
    bool known = false;
    for (const auto& c : cycles) known = known || c.name == name;
    if (!known) throw InputError(where + ".residues: '" + name + "' is not a named cycle");
  }
  auto sr = refinement_from_surface(surface, cycles);
  return {std::move(sr.q), std::move(sr.names)};
}

} // namespace framedcob::io
