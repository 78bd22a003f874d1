#pragma once

// Subcommand bodies for the framedcob CLI. Each writes its report to `out`
// and throws on parse errors or invariant breaches.

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

#include "framedcob/degree.hpp"
#include "framedcob/framed_loop.hpp"
#include "framedcob/io.hpp"
#include "framedcob/quadratic.hpp"
#include "framedcob/surface.hpp"
#include "framedcob/triangulations.hpp"

namespace framedcob::cli {

using OrderedJson = nlohmann::ordered_json;

namespace detail {

inline std::string with_path(const std::string& path, const char* what) {
  const std::string msg(what);
  return msg.rfind(path, 0) == 0 ? msg : path + ": " + msg;
}

// Runs f, prefixing the file name to any input or structural error it raises.
template <class F>
void for_file(const std::string& path, F&& f) {
  try {
    f();
  } catch (const InputError& e) {
    throw InputError(with_path(path, e.what()));
  } catch (const StructuralError& e) {
    throw StructuralError(with_path(path, e.what()));
  } catch (const UnsupportedError& e) {
    throw UnsupportedError(with_path(path, e.what()));
  }
}

} // namespace detail

inline void print_complex_homology(const SimplicialComplex& K, Coefficients coeffs, std::ostream& out) {
  if (K.empty()) {
    out << "H0: 0\n";
    return;
  }
  for (int k = 0; k <= K.dimension(); ++k) out << 'H' << k << ": " << homology(K, k, coeffs).to_string(coeffs) << '\n';
}

inline void cmd_homology(const std::string& path, Coefficients coeffs, std::ostream& out) {
  detail::for_file(path, [&] { print_complex_homology(io::complex_from_json(io::read_json_file(path), path), coeffs, out); });
}

struct DegreePair {
  long preimage = 0;
  long homology = 0;
};

/// Both degree computations; disagreement is an invariant breach.
inline DegreePair checked_degree(const ValidatedMap& f) {
  const auto o = default_orientations(f);
  DegreePair d{degree_by_preimage(f, o), degree_by_homology(f, o)};
  if (d.preimage != d.homology)
    throw InternalError("degree methods disagree: preimage " + std::to_string(d.preimage) + ", homology " +
                        std::to_string(d.homology));
  return d;
}

inline void cmd_degree(const std::string& path, std::ostream& out) {
  detail::for_file(path, [&] {
    const auto f = io::map_from_json(io::read_json_file(path), path);
    const auto d = checked_degree(f);
    out << "degree (signed preimage count): " << d.preimage << '\n'
        << "degree (induced map on H" << f.map.domain.dimension() << "): " << d.homology << '\n'
        << "degree: " << d.preimage << '\n';
  });
}

inline void print_residue(const FramedLink& link, std::ostream& out) {
  const auto rep = residue_report(link);
  for (std::size_t i = 0; i < rep.classes.size(); ++i)
    out << "component " << i << ": samples " << link.components[i].samples() << ", pi1 class " << rep.classes[i].bit()
        << '\n';
  out << "components: " << rep.components << '\n' << "Res: " << rep.residue << '\n';
}

inline void cmd_residue(const std::string& path, std::ostream& out) {
  detail::for_file(path, [&] {
    const auto link = io::link_from_json(io::read_json_file(path), path);
    try {
      print_residue(link, out);
    } catch (const NumericalError& e) {
      throw NumericalError(path + ": " + e.what() + " (hint: increase the number of samples per component)");
    }
  });
}

struct ArfCheck {
  SymplecticBasis basis;
  int arf = 0;
  DemocraticCount counts;
  int democratic = 0;
};

inline ArfCheck checked_arf(const QuadraticRefinement& q) {
  ArfCheck c;
  c.basis = symplectic_basis(q.gram());
  c.arf = arf(q, c.basis);
  c.counts = democratic_count(q);
  c.democratic = arf_democratic(q);
  if (c.arf != c.democratic)
    throw InternalError("Arf formula (" + std::to_string(c.arf) + ") disagrees with majority value (" +
                        std::to_string(c.democratic) + ")");
  return c;
}

inline std::string combination(const BitVector& v, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v.get(i)) s += (s.empty() ? "" : "+") + names[i];
  return s.empty() ? "0" : s;
}

inline void cmd_arf(const std::string& path, std::ostream& out) {
  detail::for_file(path, [&] {
    const auto form = io::form_from_json(io::read_json_file(path), path);
    const auto c = checked_arf(form.q);
    out << "genus: " << form.q.genus() << '\n';
    for (std::size_t i = 0; i < c.basis.a.size(); ++i)
      out << "pair " << i + 1 << ": a = " << combination(c.basis.a[i], form.names) << " (q=" << form.q(c.basis.a[i])
          << "), b = " << combination(c.basis.b[i], form.names) << " (q=" << form.q(c.basis.b[i]) << ")\n";
    out << "Arf: " << c.arf << '\n'
        << "majority check: q=0 on " << c.counts.zeros << ", q=1 on " << c.counts.ones << " -> " << c.democratic
        << '\n';
  });
}

// ---------------------------------------------------------------------------
// stems report

inline constexpr std::size_t kReportSamples = 256;

struct StemsReport {
  struct DegreeRow {
    long expected;
    DegreePair circle;  // S^1 -> S^1
    DegreePair sphere;  // suspension, S^2 -> S^2
  };
  struct ResidueRow {
    long twists;
    std::vector<int> residue_by_ambient;  // N = 3, 4, 5
  };
  struct ArfRow {
    int qa, qb;
    int arf;
    int democratic;
  };

  std::vector<DegreeRow> stem0;
  std::vector<ResidueRow> stem1;
  int stem1_double = 0;  // two disjoint once-twisted circles
  std::vector<ArfRow> stem2;
};

inline constexpr std::size_t kStemAmbients[] = {3, 4, 5};

inline StemsReport compute_stems() {
  StemsReport r;
  for (long d : {-1L, 0L, 1L, 2L}) {
    StemsReport::DegreeRow row{d, checked_degree(witnesses::sphere_map(d, 1)), checked_degree(witnesses::sphere_map(d, 2))};
    if (row.circle.preimage != d || row.sphere.preimage != d)
      throw InternalError("stem 0: witness for degree " + std::to_string(d) + " has degree " +
                          std::to_string(row.circle.preimage) + " / " + std::to_string(row.sphere.preimage));
    r.stem0.push_back(row);
  }

  for (long k : {0L, 1L, 2L}) {
    StemsReport::ResidueRow row{k, {}};
    for (auto N : kStemAmbients) row.residue_by_ambient.push_back(residue(standard_circle(N, k, kReportSamples)));
    for (auto v : row.residue_by_ambient)
      if (v != row.residue_by_ambient.front()) throw InternalError("stem 1: residue changed under stabilization");
    r.stem1.push_back(row);
  }
  {
    auto a = standard_circle(4, 1, kReportSamples);
    Vector shift = Vector::Zero(4);
    shift(0) = 3.0;
    auto b = translate(standard_circle(4, 1, kReportSamples), shift);
    r.stem1_double = residue(make_link({a, b}));
  }

  // Torus refinements: the residues of the basis curves are realised by
  // framed circles with 0 or 1 twists, then fed through the surface pipeline.
  const auto torus = validate_surface(triangulations::torus7());
  const auto ca = cycle_from_edges(torus, triangulations::torus7_cycle_a());
  const auto cb = cycle_from_edges(torus, triangulations::torus7_cycle_b());
  for (int qa : {0, 1})
    for (int qb : {0, 1}) {
      const int ra = residue(standard_circle(5, qa, kReportSamples));
      const int rb = residue(standard_circle(5, qb, kReportSamples));
      auto sr = refinement_from_surface(torus, {{"a", ca, ra}, {"b", cb, rb}});
      const auto c = checked_arf(sr.q);
      r.stem2.push_back({ra, rb, c.arf, c.democratic});
    }
  return r;
}

/// Distinct values taken by a list of bits, as a sorted list.
inline std::vector<int> distinct_values(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline OrderedJson stems_json(const StemsReport& r) {
  OrderedJson j;
  OrderedJson s0 = OrderedJson::array();
  for (const auto& row : r.stem0)
    s0.push_back({{"degree", row.expected},
                  {"circle", {{"preimage", row.circle.preimage}, {"homology", row.circle.homology}}},
                  {"sphere", {{"preimage", row.sphere.preimage}, {"homology", row.sphere.homology}}}});
  j["stem0"] = {{"group", "Z"}, {"witnesses", s0}};

  OrderedJson s1 = OrderedJson::array();
  std::vector<int> seen;
  for (const auto& row : r.stem1) {
    OrderedJson by_n;
    for (std::size_t i = 0; i < row.residue_by_ambient.size(); ++i)
      by_n[std::to_string(kStemAmbients[i])] = row.residue_by_ambient[i];
    s1.push_back({{"twists", row.twists}, {"residue", by_n}});
    seen.push_back(row.residue_by_ambient.front());
  }
  j["stem1"] = {{"group", "Z/2"},
                {"circles", s1},
                {"two_twisted_circles", r.stem1_double},
                {"classes", distinct_values(seen)},
                {"generator_twists", 1}};

  OrderedJson s2 = OrderedJson::array();
  std::vector<int> arfs;
  for (const auto& row : r.stem2) {
    s2.push_back({{"q_a", row.qa}, {"q_b", row.qb}, {"arf", row.arf}, {"majority", row.democratic}});
    arfs.push_back(row.arf);
  }
  j["stem2"] = {{"group", "Z/2"}, {"torus_refinements", s2}, {"classes", distinct_values(arfs)}, {"generator", {1, 1}}};
  return j;
}

inline void print_stems_text(const StemsReport& r, std::ostream& out) {
  out << "stem 0: pi_0^S = Z (degree of sphere self-maps)\n";
  for (const auto& row : r.stem0)
    out << "  d=" << row.expected << ": S1 preimage " << row.circle.preimage << " homology " << row.circle.homology
        << " | S2 preimage " << row.sphere.preimage << " homology " << row.sphere.homology << '\n';
  out << "stem 1: pi_1^S = Z/2 (residue of framed circles)\n";
  std::vector<int> seen;
  for (const auto& row : r.stem1) {
    out << "  k=" << row.twists << ":";
    for (std::size_t i = 0; i < row.residue_by_ambient.size(); ++i)
      out << " N=" << kStemAmbients[i] << " Res " << row.residue_by_ambient[i];
    out << '\n';
    seen.push_back(row.residue_by_ambient.front());
  }
  out << "  two k=1 circles: Res " << r.stem1_double << '\n';
  out << "  classes: " << distinct_values(seen).size() << ", generator k=1, order 2\n";
  out << "stem 2: pi_2^S = Z/2 (Arf invariant of framed tori)\n";
  std::vector<int> arfs;
  for (const auto& row : r.stem2) {
    out << "  (q(a),q(b))=(" << row.qa << ',' << row.qb << "): Arf " << row.arf << " majority " << row.democratic << '\n';
    arfs.push_back(row.arf);
  }
  out << "  classes: " << distinct_values(arfs).size() << ", generator (1,1)\n";
}

inline void cmd_report_stems(bool as_json, std::ostream& out) {
  const auto r = compute_stems();
  if (as_json)
    out << stems_json(r).dump(2) << '\n';
  else
    print_stems_text(r, out);
}

} // namespace framedcob::cli
