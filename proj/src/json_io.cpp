#include "json_io.hpp"

#include "error.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>

namespace qtorb {

namespace {

using nlohmann::json;

bool parse_int_value(const json& value, Int& out) {
  if (value.is_number_integer()) {
    out = Int(value.get<long long>());
    return true;
  }
  if (value.is_number_unsigned()) {
    out = Int(value.get<unsigned long long>());
    return true;
  }
  if (value.is_string()) {
    try {
      const Rat r = rat_from_string(value.get<std::string>());
      if (!rat_is_integer(r)) {
        return false;
      }
      out = numerator(r);
      return true;
    } catch (const Error&) {
      return false;
    }
  }
  return false;
}

bool parse_rat_value(const json& value, Rat& out) {
  if (value.is_number_integer()) {
    out = Rat(value.get<long long>());
    return true;
  }
  if (value.is_number_unsigned()) {
    out = Rat(value.get<unsigned long long>());
    return true;
  }
  if (value.is_string()) {
    try {
      out = rat_from_string(value.get<std::string>());
      return true;
    } catch (const Error&) {
      return false;
    }
  }
  return false;
}

json int_to_json(const Int& x) {
  if (x >= Int(std::numeric_limits<long long>::min()) &&
      x <= Int(std::numeric_limits<long long>::max())) {
    return json(x.convert_to<long long>());
  }
  return json(x.str());
}

} // namespace

ParsedModel parse_model_file(const std::string& text) {
  ParsedModel result;
  auto& diags = result.diagnostics;

  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    diags.push_back(std::string("invalid JSON: ") + e.what());
    return result;
  }
  if (!root.is_object()) {
    diags.push_back("top level must be a JSON object");
    return result;
  }

  static const char* known_top[] = {"dimension", "facets", "format_version", "vertices"};
  for (auto it = root.begin(); it != root.end(); ++it) {
    if (std::find_if(std::begin(known_top), std::end(known_top),
                     [&](const char* k) { return it.key() == k; }) == std::end(known_top)) {
      diags.push_back("unknown key '" + it.key() + "'");
    }
  }

  if (!root.contains("format_version") || !root["format_version"].is_string()) {
    diags.push_back("missing or non-string 'format_version'");
  } else if (root["format_version"].get<std::string>() != "1") {
    diags.push_back("unsupported format_version '" +
                    root["format_version"].get<std::string>() + "' (expected \"1\")");
  }

  int dim = 0;
  if (!root.contains("dimension") || !root["dimension"].is_number_integer()) {
    diags.push_back("missing or non-integer 'dimension'");
  } else {
    dim = root["dimension"].get<int>();
    if (dim < 1 || dim > 16) {
      diags.push_back("'dimension' must be between 1 and 16");
    }
  }

  std::vector<std::string> names;
  std::vector<IntVec> charvecs;
  std::vector<RatVec> normals;
  std::size_t facets_with_normal = 0;
  if (!root.contains("facets") || !root["facets"].is_array()) {
    diags.push_back("missing or non-array 'facets'");
  } else {
    for (std::size_t i = 0; i < root["facets"].size(); ++i) {
      const json& facet = root["facets"][i];
      const std::string tag = "facets[" + std::to_string(i) + "]";
      if (!facet.is_object()) {
        diags.push_back(tag + " must be an object");
        continue;
      }
      static const char* known_facet[] = {"charvec", "name", "normal"};
      for (auto it = facet.begin(); it != facet.end(); ++it) {
        if (std::find_if(std::begin(known_facet), std::end(known_facet),
                         [&](const char* k) { return it.key() == k; }) ==
            std::end(known_facet)) {
          diags.push_back(tag + ": unknown key '" + it.key() + "'");
        }
      }
      if (!facet.contains("name") || !facet["name"].is_string()) {
        diags.push_back(tag + ": missing or non-string 'name'");
        names.push_back("");
      } else {
        names.push_back(facet["name"].get<std::string>());
      }
      IntVec cv;
      if (!facet.contains("charvec") || !facet["charvec"].is_array()) {
        diags.push_back(tag + ": missing or non-array 'charvec'");
      } else {
        for (const json& entry : facet["charvec"]) {
          Int x;
          if (!parse_int_value(entry, x)) {
            diags.push_back(tag + ": charvec entries must be integers");
            break;
          }
          cv.push_back(std::move(x));
        }
      }
      charvecs.push_back(std::move(cv));
      RatVec nv;
      if (facet.contains("normal")) {
        if (!facet["normal"].is_array()) {
          diags.push_back(tag + ": 'normal' must be an array");
        } else {
          bool ok = true;
          for (const json& entry : facet["normal"]) {
            Rat x;
            if (!parse_rat_value(entry, x)) {
              diags.push_back(tag + ": normal entries must be rationals ('p/q')");
              ok = false;
              break;
            }
            nv.push_back(std::move(x));
          }
          if (ok) {
            ++facets_with_normal;
          }
        }
      }
      normals.push_back(std::move(nv));
    }
  }
  if (facets_with_normal != 0 && facets_with_normal != names.size()) {
    diags.push_back("normals must be given for all facets or none");
  }

  std::vector<std::vector<int>> vertex_facets;
  if (!root.contains("vertices") || !root["vertices"].is_array()) {
    diags.push_back("missing or non-array 'vertices'");
  } else {
    for (std::size_t vi = 0; vi < root["vertices"].size(); ++vi) {
      const json& vertex = root["vertices"][vi];
      const std::string tag = "vertices[" + std::to_string(vi) + "]";
      if (!vertex.is_array()) {
        diags.push_back(tag + " must be an array of facet names");
        continue;
      }
      std::vector<int> vf;
      for (const json& entry : vertex) {
        if (!entry.is_string()) {
          diags.push_back(tag + ": entries must be facet names");
          continue;
        }
        const std::string name = entry.get<std::string>();
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) {
          diags.push_back(tag + ": unknown facet name '" + name + "'");
          continue;
        }
        vf.push_back(static_cast<int>(it - names.begin()));
      }
      vertex_facets.push_back(std::move(vf));
    }
  }

  if (!diags.empty()) {
    return result;
  }

  CharacteristicModel m;
  m.polytope = CombinatorialPolytope(dim, std::move(names), std::move(vertex_facets));
  m.charvecs = std::move(charvecs);
  if (facets_with_normal != 0) {
    m.normals = std::move(normals);
  }

  auto model_diags = validate_model(m);
  if (!model_diags.empty()) {
    diags.insert(diags.end(), model_diags.begin(), model_diags.end());
    return result;
  }
  result.model = std::move(m);
  return result;
}

CharacteristicModel parse_model_or_throw(const std::string& text) {
  ParsedModel parsed = parse_model_file(text);
  if (!parsed.model) {
    std::string message = "invalid model";
    for (const auto& d : parsed.diagnostics) {
      message += "\n  - " + d;
    }
    throw Error(ErrorCode::InvalidModel, message);
  }
  return *std::move(parsed.model);
}

std::string write_model_file(const CharacteristicModel& m) {
  json root = json::object();
  root["dimension"] = m.polytope.dim();
  root["format_version"] = "1";

  json facets = json::array();
  for (int i = 0; i < m.polytope.facet_count(); ++i) {
    json facet = json::object();
    facet["name"] = m.polytope.facet_names()[static_cast<std::size_t>(i)];
    json cv = json::array();
    for (const Int& x : m.charvecs[static_cast<std::size_t>(i)]) {
      cv.push_back(int_to_json(x));
    }
    facet["charvec"] = std::move(cv);
    if (m.normals) {
      json nv = json::array();
      for (const Rat& x : (*m.normals)[static_cast<std::size_t>(i)]) {
        nv.push_back(rat_to_string(x));
      }
      facet["normal"] = std::move(nv);
    }
    facets.push_back(std::move(facet));
  }
  root["facets"] = std::move(facets);

  json vertices = json::array();
  for (const auto& vf : m.polytope.vertices()) {
    json vertex = json::array();
    for (int fi : vf) {
      vertex.push_back(m.polytope.facet_names()[static_cast<std::size_t>(fi)]);
    }
    vertices.push_back(std::move(vertex));
  }
  root["vertices"] = std::move(vertices);

  return root.dump(2) + "\n";
}

} // namespace qtorb
