#include "report.hpp"

#include "blowup.hpp"
#include "cohomology.hpp"
#include "error.hpp"
#include "json_io.hpp"
#include "ring.hpp"

#include <json.hpp>

#include <limits>
#include <sstream>

namespace qtorb {

namespace {

using nlohmann::json;

json int_to_json(const Int& x) {
  if (x >= Int(std::numeric_limits<long long>::min()) &&
      x <= Int(std::numeric_limits<long long>::max())) {
    return json(x.convert_to<long long>());
  }
  return json(x.str());
}

json rat_to_json(const Rat& x) { return json(rat_to_string(x)); }

json int_vec_to_json(const IntVec& v) {
  json out = json::array();
  for (const Int& x : v) {
    out.push_back(int_to_json(x));
  }
  return out;
}

json rat_vec_to_json(const RatVec& v) {
  json out = json::array();
  for (const Rat& x : v) {
    out.push_back(rat_to_json(x));
  }
  return out;
}

std::string finish_json(const std::string& command, json input, json result,
                        json diagnostics = json::array()) {
  json root = json::object();
  root["command"] = command;
  root["input"] = std::move(input);
  root["result"] = std::move(result);
  root["diagnostics"] = std::move(diagnostics);
  return root.dump(2) + "\n";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else if (c != ' ') {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

std::string vertex_label(const CombinatorialPolytope& p, std::size_t vi) {
  return face_label(p, Face{p.vertices()[vi], 0});
}

json sector_to_json(const CharacteristicModel& m, const TwistedSector& s) {
  json out = json::object();
  out["face"] = face_label(m.polytope, s.face);
  json facets = json::array();
  for (const std::string& name : face_names(m.polytope, s.face)) {
    facets.push_back(name);
  }
  out["facets"] = std::move(facets);
  out["lattice_point"] = int_vec_to_json(s.element.lattice_point);
  out["coeffs"] = rat_vec_to_json(s.element.coeffs);
  out["age"] = rat_to_json(s.element.age);
  out["degree_shift"] = rat_to_json(s.degree_shift);
  out["untwisted"] = s.is_untwisted();
  return out;
}

std::string sector_human(const CharacteristicModel& m, const TwistedSector& s) {
  std::ostringstream out;
  if (s.is_untwisted()) {
    out << "P: untwisted, age 0, degree shift 0";
    return out.str();
  }
  out << face_label(m.polytope, s.face) << ": element "
      << int_vec_to_string(s.element.lattice_point) << ", coeffs "
      << rat_vec_to_display(s.element.coeffs) << ", age "
      << rat_to_display(s.element.age) << ", degree shift "
      << rat_to_display(s.degree_shift);
  return out.str();
}

json betti_table_to_json(const CRBettiTable& t) {
  json rows = json::array();
  for (const auto& [degree, rank] : t.entries) {
    json row = json::object();
    row["degree"] = rat_to_json(degree);
    row["rank"] = int_to_json(rank);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string betti_table_human(const CRBettiTable& t, const std::string& indent) {
  std::ostringstream out;
  for (const auto& [degree, rank] : t.entries) {
    out << indent << "b[" << rat_to_display(degree) << "] = " << rank << "\n";
  }
  return out.str();
}

std::string betti_table_inline(const CRBettiTable& t) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [degree, rank] : t.entries) {
    if (!first) {
      out << "  ";
    }
    first = false;
    out << rat_to_display(degree) << ":" << rank;
  }
  return out.str();
}

const char* case_tag_name(FacetCase c) {
  switch (c) {
    case FacetCase::FracOnly:
      return "frac_only";
    case FacetCase::IntegerExact:
      return "integer_exact";
    case FacetCase::IntegerPlusFrac:
      return "integer_plus_frac";
  }
  return "unknown";
}

const char* case_tag_human(FacetCase c) {
  switch (c) {
    case FacetCase::FracOnly:
      return "fractional";
    case FacetCase::IntegerExact:
      return "integer";
    case FacetCase::IntegerPlusFrac:
      return "integer+fractional";
  }
  return "unknown";
}

// The two Euler formulas, computed independently of euler_cr's own cross-check
// so reports can show both sides.
Int euler_vertex_formula(const CharacteristicModel& m) {
  Int sum = 0;
  for (std::size_t vi = 0; vi < m.polytope.vertices().size(); ++vi) {
    sum += local_group_order(m, vertex_face(m.polytope, static_cast<int>(vi)));
  }
  return sum;
}

Int euler_sector_formula(const CharacteristicModel& m) {
  Int sum = 0;
  for (const Face& f : enumerate_faces(m.polytope)) {
    const Int vertices(static_cast<long long>(face_vertex_indices(m.polytope, f).size()));
    const Int chi = f.facet_set.empty()
                        ? Int(static_cast<long long>(m.polytope.vertices().size()))
                        : vertices;
    sum += chi * Int(static_cast<long long>(interior_box_elements(m, f).size()));
  }
  return sum;
}

} // namespace

Face parse_face_arg(const CombinatorialPolytope& p, const std::string& text) {
  if (text.empty() || text == "P") {
    return make_face(p, {});
  }
  std::vector<int> indices;
  for (const std::string& name : split(text, ',')) {
    if (name.empty()) {
      throw Error(ErrorCode::InvalidArgument,
                  "malformed face '" + text + "' (empty facet name)");
    }
    indices.push_back(p.facet_index(name));
  }
  return make_face(p, std::move(indices));
}

IntVec parse_lambda0_arg(const std::string& text, int dim) {
  const auto parts = split(text, ',');
  if (static_cast<int>(parts.size()) != dim) {
    throw Error(ErrorCode::InvalidArgument,
                "expected " + std::to_string(dim) + " comma-separated integers, got '" +
                    text + "'");
  }
  IntVec out;
  for (const std::string& part : parts) {
    const Rat r = rat_from_string(part);
    if (!rat_is_integer(r)) {
      throw Error(ErrorCode::InvalidArgument,
                  "entry '" + part + "' is not an integer");
    }
    out.push_back(numerator(r));
  }
  return out;
}

TwistedSector parse_sector_arg(const CharacteristicModel& m, const std::string& text) {
  if (text == "untwisted" || text == "P") {
    return twisted_sectors(m).front();
  }
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw Error(ErrorCode::InvalidArgument,
                "malformed sector '" + text +
                    "' (expected '<face>:<lattice point>' or 'untwisted')");
  }
  const Face f = parse_face_arg(m.polytope, text.substr(0, colon));
  if (f.facet_set.empty()) {
    throw Error(ErrorCode::InvalidArgument,
                "twisted sectors live over proper faces; use 'untwisted' for the "
                "untwisted sector");
  }
  const IntVec point = parse_lambda0_arg(text.substr(colon + 1), m.polytope.dim());
  for (const BoxElement& e : interior_box_elements(m, f)) {
    if (e.lattice_point == point) {
      return TwistedSector{f, e, Rat(2) * e.age};
    }
  }
  throw Error(ErrorCode::InvalidArgument,
              "no interior box element of face " + face_label(m.polytope, f) +
                  " has lattice point " + int_vec_to_string(point));
}

std::string validate_report_text(const std::string& file_text, const ReportOptions& opt,
                                 bool* valid) {
  const ParsedModel parsed = parse_model_file(file_text);
  const bool ok = parsed.model.has_value();
  if (valid != nullptr) {
    *valid = ok;
  }
  if (opt.json) {
    json diags = json::array();
    for (const std::string& d : parsed.diagnostics) {
      diags.push_back(d);
    }
    json result = json::object();
    result["valid"] = ok;
    return finish_json("validate", json::object(), std::move(result), std::move(diags));
  }
  std::ostringstream out;
  if (ok) {
    out << "model: valid\n";
  } else {
    out << "model: INVALID\n";
    for (const std::string& d : parsed.diagnostics) {
      out << "  - " << d << "\n";
    }
  }
  return out.str();
}

std::string info_report(const CharacteristicModel& m, const ReportOptions& opt) {
  const auto& p = m.polytope;
  const bool has_normals = m.normals.has_value();
  const Int euler = euler_cr(m);
  const bool manifold = is_manifold(m);
  const bool pos = has_normals && is_positively_omnioriented(m);

  if (opt.json) {
    json result = json::object();
    result["dimension"] = p.dim();
    result["real_dimension"] = 2 * p.dim();
    result["facet_count"] = p.facet_count();
    result["vertex_count"] = static_cast<int>(p.vertices().size());
    json facets = json::array();
    for (int i = 0; i < p.facet_count(); ++i) {
      json facet = json::object();
      facet["name"] = p.facet_names()[static_cast<std::size_t>(i)];
      facet["charvec"] = int_vec_to_json(m.charvecs[static_cast<std::size_t>(i)]);
      if (has_normals) {
        facet["normal"] = rat_vec_to_json((*m.normals)[static_cast<std::size_t>(i)]);
      }
      facets.push_back(std::move(facet));
    }
    result["facets"] = std::move(facets);
    json vertices = json::array();
    for (std::size_t vi = 0; vi < p.vertices().size(); ++vi) {
      json vertex = json::object();
      vertex["face"] = vertex_label(p, vi);
      vertex["order"] =
          int_to_json(local_group_order(m, vertex_face(p, static_cast<int>(vi))));
      if (has_normals) {
        vertex["sign"] = vertex_sign(m, static_cast<int>(vi));
      }
      vertices.push_back(std::move(vertex));
    }
    result["vertices"] = std::move(vertices);
    result["manifold"] = manifold;
    result["quasi_sl"] = is_quasi_sl(m);
    if (has_normals) {
      result["positively_omnioriented"] = pos;
    }
    result["euler"] = int_to_json(euler);
    return finish_json("info", json::object(), std::move(result));
  }

  std::ostringstream out;
  out << "dimension: " << p.dim() << " (orbifold real dimension " << 2 * p.dim()
      << ")\n";
  out << "facets: " << p.facet_count() << "\n";
  for (int i = 0; i < p.facet_count(); ++i) {
    out << "  " << p.facet_names()[static_cast<std::size_t>(i)] << ": lambda = "
        << int_vec_to_string(m.charvecs[static_cast<std::size_t>(i)]);
    if (has_normals) {
      out << ", normal = " << rat_vec_to_display((*m.normals)[static_cast<std::size_t>(i)]);
    }
    out << "\n";
  }
  out << "vertices: " << p.vertices().size() << "\n";
  for (std::size_t vi = 0; vi < p.vertices().size(); ++vi) {
    out << "  " << vertex_label(p, vi) << ": order "
        << local_group_order(m, vertex_face(p, static_cast<int>(vi)));
    if (has_normals) {
      const int sign = vertex_sign(m, static_cast<int>(vi));
      out << ", sign " << (sign > 0 ? "+1" : "-1");
    }
    out << "\n";
  }
  out << "manifold: " << yes_no(manifold) << "\n";
  out << "quasi-SL: " << yes_no(is_quasi_sl(m)) << "\n";
  if (has_normals) {
    out << "positively omnioriented: " << yes_no(pos) << "\n";
  }
  out << "euler (Chen-Ruan): " << euler << "\n";
  return out.str();
}

std::string sectors_report(const CharacteristicModel& m, const ReportOptions& opt) {
  const auto sectors = twisted_sectors(m);
  if (opt.json) {
    json result = json::object();
    result["count"] = static_cast<int>(sectors.size());
    result["twisted_count"] = static_cast<int>(sectors.size()) - 1;
    json rows = json::array();
    for (const TwistedSector& s : sectors) {
      rows.push_back(sector_to_json(m, s));
    }
    result["sectors"] = std::move(rows);
    return finish_json("sectors", json::object(), std::move(result));
  }
  std::ostringstream out;
  out << "sectors: 1 untwisted + " << sectors.size() - 1 << " twisted\n";
  for (const TwistedSector& s : sectors) {
    out << "  " << sector_human(m, s) << "\n";
  }
  return out.str();
}

std::string betti_report(const CharacteristicModel& m, const ReportOptions& opt) {
  const CRBettiTable t = cr_betti(m);
  if (opt.json) {
    json result = json::object();
    result["quasi_sl"] = t.quasi_sl;
    result["euler"] = int_to_json(t.euler);
    result["table"] = betti_table_to_json(t);
    return finish_json("betti", json::object(), std::move(result));
  }
  std::ostringstream out;
  out << "Chen-Ruan Betti table\n";
  out << "  quasi-SL: " << yes_no(t.quasi_sl) << "\n";
  out << betti_table_human(t, "  ");
  out << "  euler: " << t.euler << "\n";
  return out.str();
}

std::string euler_report(const CharacteristicModel& m, const ReportOptions& opt) {
  const Int vertex_sum = euler_vertex_formula(m);
  const Int sector_sum = euler_sector_formula(m);
  const Int euler = euler_cr(m); // runs the internal cross-check
  if (opt.json) {
    json result = json::object();
    result["euler"] = int_to_json(euler);
    result["vertex_formula"] = int_to_json(vertex_sum);
    result["sector_formula"] = int_to_json(sector_sum);
    return finish_json("euler", json::object(), std::move(result));
  }
  std::ostringstream out;
  out << "Chen-Ruan Euler characteristic: " << euler << "\n";
  out << "  vertex formula (sum of vertex group orders): " << vertex_sum << "\n";
  out << "  sector formula (faces weighted by interior box counts): " << sector_sum
      << "\n";
  return out.str();
}

std::string quasi_sl_report_text(const CharacteristicModel& m, const ReportOptions& opt) {
  const QuasiSlReport report = quasi_sl_report(m);
  if (opt.json) {
    json result = json::object();
    result["quasi_sl"] = report.quasi_sl;
    json offenders = json::array();
    for (const TwistedSector& s : report.offenders) {
      offenders.push_back(sector_to_json(m, s));
    }
    result["offenders"] = std::move(offenders);
    return finish_json("quasi-sl", json::object(), std::move(result));
  }
  std::ostringstream out;
  out << "quasi-SL: " << yes_no(report.quasi_sl) << "\n";
  if (!report.offenders.empty()) {
    out << "  sectors with non-integral age:\n";
    for (const TwistedSector& s : report.offenders) {
      out << "    " << sector_human(m, s) << "\n";
    }
  }
  return out.str();
}

std::string blowup_report(const CharacteristicModel& m, const std::string& face_arg,
                          const std::string& lambda0_arg, const ReportOptions& opt,
                          CharacteristicModel* out_model) {
  const Face f = parse_face_arg(m.polytope, face_arg);
  const IntVec lambda0 = parse_lambda0_arg(lambda0_arg, m.polytope.dim());
  const BlowupSpec spec = make_blowup_spec(m, f, lambda0);
  std::string new_facet;
  const CharacteristicModel result_model = blow_up(m, spec, &new_facet);
  const Int euler_before = euler_cr(m);
  const Int euler_after = euler_cr(result_model);
  if (out_model != nullptr) {
    *out_model = result_model;
  }

  json input = json::object();
  input["face"] = face_arg;
  input["lambda0"] = lambda0_arg;

  if (opt.json) {
    json result = json::object();
    result["face"] = face_label(m.polytope, f);
    result["lambda0"] = int_vec_to_json(spec.lambda0);
    result["b"] = rat_vec_to_json(spec.b);
    result["coefficient_sum"] = rat_to_json(spec.coefficient_sum());
    result["crepant"] = spec.crepant;
    result["resolution_step"] = spec.resolution_step;
    result["new_facet"] = new_facet;
    result["euler_before"] = int_to_json(euler_before);
    result["euler_after"] = int_to_json(euler_after);
    result["result_facets"] = result_model.polytope.facet_count();
    result["result_vertices"] = static_cast<int>(result_model.polytope.vertices().size());
    result["result_manifold"] = is_manifold(result_model);
    return finish_json("blowup", std::move(input), std::move(result));
  }
  std::ostringstream out;
  out << "blowup along " << face_label(m.polytope, f) << " with lambda0 = "
      << int_vec_to_string(spec.lambda0) << "\n";
  out << "  b = " << rat_vec_to_display(spec.b) << ", sum = "
      << rat_to_display(spec.coefficient_sum()) << "\n";
  out << "  crepant: " << yes_no(spec.crepant) << "\n";
  out << "  resolution step: " << yes_no(spec.resolution_step) << "\n";
  out << "  new facet: " << new_facet << "\n";
  out << "  result: " << result_model.polytope.facet_count() << " facets, "
      << result_model.polytope.vertices().size() << " vertices, euler " << euler_after
      << " (was " << euler_before << "), manifold: " << yes_no(is_manifold(result_model))
      << "\n";
  return out.str();
}

std::string crepant_candidates_report(const CharacteristicModel& m,
                                      const std::string& face_arg,
                                      const ReportOptions& opt) {
  const Face f = parse_face_arg(m.polytope, face_arg);
  const CrepantCandidateReport report = crepant_candidates(m, f);
  const Int order = local_group_order(m, f);

  json input = json::object();
  input["face"] = face_arg;

  if (opt.json) {
    json result = json::object();
    result["face"] = face_label(m.polytope, f);
    result["order"] = int_to_json(order);
    json duals = json::array();
    for (const auto& [vi, dual] : report.vertex_duals) {
      json row = json::object();
      row["vertex"] = vertex_label(m.polytope, static_cast<std::size_t>(vi));
      row["dual"] = rat_vec_to_json(dual);
      duals.push_back(std::move(row));
    }
    result["vertex_duals"] = std::move(duals);
    json candidates = json::array();
    for (const BoxElement& e : report.candidates) {
      json row = json::object();
      row["lattice_point"] = int_vec_to_json(e.lattice_point);
      row["coeffs"] = rat_vec_to_json(e.coeffs);
      row["age"] = rat_to_json(e.age);
      candidates.push_back(std::move(row));
    }
    result["candidates"] = std::move(candidates);
    return finish_json("crepant-candidates", std::move(input), std::move(result));
  }
  std::ostringstream out;
  out << "crepant candidates for face " << face_label(m.polytope, f)
      << " (local group order " << order << ")\n";
  out << "  vertex duals:\n";
  for (const auto& [vi, dual] : report.vertex_duals) {
    out << "    " << vertex_label(m.polytope, static_cast<std::size_t>(vi)) << ": v = "
        << rat_vec_to_display(dual) << "\n";
  }
  if (report.candidates.empty()) {
    out << "  candidates: none\n";
  } else {
    out << "  candidates (interior, age 1, primitive):\n";
    for (const BoxElement& e : report.candidates) {
      out << "    " << int_vec_to_string(e.lattice_point) << ", coeffs "
          << rat_vec_to_display(e.coeffs) << "\n";
    }
  }
  return out.str();
}

std::string mckay_report_text(const CharacteristicModel& m, const std::string& face_arg,
                              const std::string& lambda0_arg, const ReportOptions& opt) {
  const Face f = parse_face_arg(m.polytope, face_arg);
  const IntVec lambda0 = parse_lambda0_arg(lambda0_arg, m.polytope.dim());
  const BlowupSpec spec = make_blowup_spec(m, f, lambda0);
  const McKayReport report = verify_mckay(m, spec);

  json input = json::object();
  input["face"] = face_arg;
  input["lambda0"] = lambda0_arg;

  if (opt.json) {
    json result = json::object();
    result["dimension"] = report.dim;
    result["real_dimension"] = 2 * report.dim;
    result["crepant"] = report.crepant;
    result["quasi_sl_before"] = report.quasi_sl_before;
    result["quasi_sl_after"] = report.quasi_sl_after;
    result["in_theorem_scope"] = report.in_theorem_scope;
    result["euler_before"] = int_to_json(report.euler_before);
    result["euler_after"] = int_to_json(report.euler_after);
    result["euler_conserved"] = report.euler_conserved;
    result["betti_before"] = betti_table_to_json(report.betti_before);
    result["betti_after"] = betti_table_to_json(report.betti_after);
    result["betti_equal"] = report.betti_equal;
    result["betti_equality_expected"] = report.betti_equality_expected;
    result["h2_before"] = int_to_json(report.h2_before);
    result["h2_after"] = int_to_json(report.h2_after);
    result["h2_monotone"] = report.h2_monotone;
    result["h2_growth_expected"] = report.h2_growth_expected;
    return finish_json("mckay", std::move(input), std::move(result));
  }
  std::ostringstream out;
  out << "McKay verification: blowup along " << face_label(m.polytope, f)
      << " with lambda0 = " << int_vec_to_string(lambda0) << "\n";
  out << "  crepant: " << yes_no(report.crepant) << "\n";
  out << "  quasi-SL before: " << yes_no(report.quasi_sl_before) << ", after: "
      << yes_no(report.quasi_sl_after) << "\n";
  out << "  in theorem scope (crepant and quasi-SL): "
      << yes_no(report.in_theorem_scope) << "\n";
  if (!report.in_theorem_scope) {
    out << "  verdict: out of theorem scope (invariants reported without a verdict)\n";
  }
  out << "  euler: " << report.euler_before << " -> " << report.euler_after
      << " (conserved: " << yes_no(report.euler_conserved) << ")\n";
  out << "  betti before: " << betti_table_inline(report.betti_before) << "\n";
  out << "  betti after:  " << betti_table_inline(report.betti_after) << "\n";
  out << "  betti equal: " << yes_no(report.betti_equal)
      << " (equality guaranteed in scope for real dimension <= 6: "
      << yes_no(report.betti_equality_expected) << ")\n";
  out << "  h2: " << report.h2_before << " -> " << report.h2_after << " (monotone: "
      << yes_no(report.h2_monotone)
      << "; bound applies in scope for real dimension >= 8: "
      << yes_no(report.h2_growth_expected) << ")\n";
  return out.str();
}

std::string resolve_report(const CharacteristicModel& m, const ReportOptions& opt,
                           CharacteristicModel* out_model) {
  const ResolutionResult res = resolve(m);
  if (out_model != nullptr) {
    *out_model = res.final_model;
  }
  const Int euler = euler_cr(res.final_model);

  if (opt.json) {
    json steps = json::array();
    for (const ResolveStep& step : res.steps) {
      json row = json::object();
      std::string label;
      for (std::size_t i = 0; i < step.face.size(); ++i) {
        if (i > 0) {
          label += ",";
        }
        label += step.face[i];
      }
      row["face"] = label;
      row["lambda0"] = int_vec_to_json(step.lambda0);
      row["b"] = rat_vec_to_json(step.b);
      row["crepant"] = step.crepant;
      row["new_facet"] = step.new_facet;
      row["max_order_before"] = int_to_json(step.max_order_before);
      steps.push_back(std::move(row));
    }
    json final_obj = json::object();
    final_obj["manifold"] = is_manifold(res.final_model);
    final_obj["facet_count"] = res.final_model.polytope.facet_count();
    final_obj["vertex_count"] =
        static_cast<int>(res.final_model.polytope.vertices().size());
    final_obj["euler"] = int_to_json(euler);
    json result = json::object();
    result["step_count"] = static_cast<int>(res.steps.size());
    result["steps"] = std::move(steps);
    result["final"] = std::move(final_obj);
    return finish_json("resolve", json::object(), std::move(result));
  }
  std::ostringstream out;
  out << "resolution: " << res.steps.size() << " step"
      << (res.steps.size() == 1 ? "" : "s") << "\n";
  for (std::size_t i = 0; i < res.steps.size(); ++i) {
    const ResolveStep& step = res.steps[i];
    std::string label;
    for (std::size_t j = 0; j < step.face.size(); ++j) {
      if (j > 0) {
        label += ",";
      }
      label += step.face[j];
    }
    out << "  step " << i + 1 << ": face " << label << " (max vertex order "
        << step.max_order_before << ")\n";
    out << "    lambda0 = " << int_vec_to_string(step.lambda0) << ", b = "
        << rat_vec_to_display(step.b) << ", crepant: " << yes_no(step.crepant)
        << ", new facet " << step.new_facet << "\n";
  }
  out << "  final: manifold with " << res.final_model.polytope.vertices().size()
      << " vertices, " << res.final_model.polytope.facet_count() << " facets, euler "
      << euler << "\n";
  return out.str();
}

std::string product_report(const CharacteristicModel& m, const std::string& s1_arg,
                           const std::string& s2_arg, const ReportOptions& opt) {
  const TwistedSector s1 = parse_sector_arg(m, s1_arg);
  const TwistedSector s2 = parse_sector_arg(m, s2_arg);
  const SectorProduct p = sector_product(m, s1, s2);

  json input = json::object();
  input["s1"] = s1_arg;
  input["s2"] = s2_arg;

  if (opt.json) {
    json result = json::object();
    result["s1"] = sector_to_json(m, s1);
    result["s2"] = sector_to_json(m, s2);
    result["zero"] = p.zero;
    if (!p.zero) {
      result["target_face"] = face_label(m.polytope, p.target_face);
      result["untwisted"] = p.target_face.facet_set.empty();
      result["lattice_point"] = int_vec_to_json(p.product.lattice_point);
      result["coeffs"] = rat_vec_to_json(p.product.coeffs);
      result["age"] = rat_to_json(p.product.age);
      json theta = json::array();
      for (int fi : p.theta_facets) {
        theta.push_back(m.polytope.facet_names()[static_cast<std::size_t>(fi)]);
      }
      result["theta_facets"] = std::move(theta);
      json cases = json::array();
      for (const auto& [fi, tag] : p.case_tags) {
        json row = json::object();
        row["facet"] = m.polytope.facet_names()[static_cast<std::size_t>(fi)];
        row["case"] = case_tag_name(tag);
        cases.push_back(std::move(row));
      }
      result["cases"] = std::move(cases);
    }
    return finish_json("product", std::move(input), std::move(result));
  }
  std::ostringstream out;
  out << "product of " << sector_human(m, s1) << "\n";
  out << "    and     " << sector_human(m, s2) << "\n";
  if (p.zero) {
    out << "  result: zero (the sector faces lie on no common face)\n";
    return out.str();
  }
  if (p.target_face.facet_set.empty()) {
    out << "  result: untwisted sector\n";
  } else {
    out << "  result: face " << face_label(m.polytope, p.target_face) << ", element "
        << int_vec_to_string(p.product.lattice_point) << ", coeffs "
        << rat_vec_to_display(p.product.coeffs) << ", age "
        << rat_to_display(p.product.age) << "\n";
  }
  if (p.theta_facets.empty()) {
    out << "  theta facets: none\n";
  } else {
    out << "  theta facets:";
    for (int fi : p.theta_facets) {
      out << " " << m.polytope.facet_names()[static_cast<std::size_t>(fi)];
    }
    out << "\n";
  }
  for (const auto& [fi, tag] : p.case_tags) {
    out << "  case " << m.polytope.facet_names()[static_cast<std::size_t>(fi)] << ": "
        << case_tag_human(tag) << "\n";
  }
  out << "  degree check: " << rat_to_display(s1.element.age) << " + "
      << rat_to_display(s2.element.age) << " = " << rat_to_display(p.product.age)
      << " + " << p.theta_facets.size() << " (theta)\n";
  return out.str();
}

} // namespace qtorb
