#include "qmat/json_io.hpp"

#include <fstream>
#include <sstream>

namespace qmat {

namespace {

std::string comma_key(const GroundSet& g, const Subset& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += g.label(s[i]);
  }
  return out;
}

Subset parse_comma_key(const GroundSet& g, const std::string& key) {
  Subset out;
  if (key.empty()) return out;
  std::stringstream ss(key);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(g.index(item));
  std::sort(out.begin(), out.end());
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i] == out[i - 1]) fail(ErrorKind::Parse, "repeated label in subset key '" + key + "'");
  return out;
}

GroundSet ground_from_json(const Json& j) {
  std::vector<std::string> labels;
  for (const auto& l : j) labels.push_back(l.get<std::string>());
  return GroundSet(std::move(labels));
}

Json ground_to_json(const GroundSet& g) { return Json(g.labels()); }

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Usage, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::Parse, path + ": " + e.what());
  }
}

Json matroid_to_json(const Matroid& m) {
  Json values = Json::object();
  for (const auto& [s, v] : m.pluecker().values())
    values[comma_key(m.ground(), s)] = v.to_string();
  return Json{{"idyll", m.idyll().name()},
              {"ground", ground_to_json(m.ground())},
              {"rank", m.rank()},
              {"values", values}};
}

Matroid matroid_from_json(const Json& j) {
  try {
    Idyll f = Idyll::parse(j.at("idyll").get<std::string>());
    GroundSet g = ground_from_json(j.at("ground"));
    int rank = j.at("rank").get<int>();
    PlueckerVector phi(g, rank, f);
    for (const auto& [key, value] : j.at("values").items())
      phi.set(parse_comma_key(g, key), IdyllElement::parse(f, value.get<std::string>()));
    return gp_validate(phi);
  } catch (const Json::exception& e) {
    fail(ErrorKind::Parse, std::string("bad matroid JSON: ") + e.what());
  }
}

Json matrix_to_json(const SubmonomialMatrix& phi) {
  Json entries = Json::array();
  for (int s = 0; s < phi.source().size(); ++s) {
    int t = phi.target_of_source(s);
    if (t < 0) continue;
    entries.push_back(Json{{"from", phi.source().label(s)},
                           {"to", phi.target().label(t)},
                           {"coeff", phi.coeff_at_source(s).to_string()}});
  }
  return Json{{"source", ground_to_json(phi.source())},
              {"target", ground_to_json(phi.target())},
              {"idyll", phi.idyll().name()},
              {"entries", entries}};
}

SubmonomialMatrix matrix_from_json(const Json& j) {
  try {
    Idyll f = Idyll::parse(j.at("idyll").get<std::string>());
    GroundSet source = ground_from_json(j.at("source"));
    GroundSet target = ground_from_json(j.at("target"));
    SubmonomialMatrix phi(source, target, f);
    for (const auto& e : j.at("entries")) {
      phi.set_entry(source.index(e.at("from").get<std::string>()),
                    target.index(e.at("to").get<std::string>()),
                    IdyllElement::parse(f, e.at("coeff").get<std::string>()));
    }
    return phi;
  } catch (const Json::exception& e) {
    fail(ErrorKind::Parse, std::string("bad morphism JSON: ") + e.what());
  }
}

Json classical_to_json(const ClassicalMatroid& m) {
  Json bases = Json::array();
  for (std::uint32_t b : m.bases())
    bases.push_back(Json(m.ground().labels_of(mask_to_subset(b))));
  return Json{{"ground", ground_to_json(m.ground())}, {"bases", bases}};
}

ClassicalMatroid classical_from_json(const Json& j) {
  try {
    GroundSet g = ground_from_json(j.at("ground"));
    std::vector<std::uint32_t> bases;
    for (const auto& b : j.at("bases")) {
      Subset s;
      for (const auto& l : b) s.push_back(g.index(l.get<std::string>()));
      std::sort(s.begin(), s.end());
      bases.push_back(subset_to_mask(s));
    }
    return ClassicalMatroid(g, std::move(bases));
  } catch (const Json::exception& e) {
    fail(ErrorKind::Parse, std::string("bad classical matroid JSON: ") + e.what());
  }
}

Json pointed_map_to_json(const PointedMap& sigma) {
  Json map = Json::object();
  for (int s = 0; s < static_cast<int>(sigma.to.size()); ++s)
    map[sigma.source.label(s)] =
        sigma.to[s] < 0 ? std::string("0") : sigma.target.label(sigma.to[s]);
  return Json{{"map", map}};
}

PointedMap pointed_map_from_json(const Json& j, const GroundSet& source,
                                 const GroundSet& target) {
  try {
    PointedMap sigma{source, target, std::vector<int>(source.size(), -1)};
    for (const auto& [from, to] : j.at("map").items()) {
      std::string t = to.get<std::string>();
      sigma.to[source.index(from)] = (t == "0" && !target.has("0")) ? -1 : target.index(t);
    }
    return sigma;
  } catch (const Json::exception& e) {
    fail(ErrorKind::Parse, std::string("bad strong map JSON: ") + e.what());
  }
}

Json rep_to_json(const F1Rep& rep) {
  Json arrows = Json::array();
  for (const auto& a : rep.quiver.arrows())
    arrows.push_back(Json{{"name", a.name},
                          {"from", rep.quiver.vertex(a.from)},
                          {"to", rep.quiver.vertex(a.to)}});
  Json sets = Json::object();
  for (int v = 0; v < rep.quiver.vertex_count(); ++v)
    sets[rep.quiver.vertex(v)] = Json(rep.sets[v].labels());
  Json maps = Json::object();
  for (int a = 0; a < rep.quiver.arrow_count(); ++a) {
    const auto& arrow = rep.quiver.arrow(a);
    Json entries = Json::object();
    for (int j = 0; j < rep.sets[arrow.from].size(); ++j) {
      int i = rep.maps[a].to[j];
      entries[rep.sets[arrow.from].label(j)] =
          i < 0 ? std::string("0") : rep.sets[arrow.to].label(i);
    }
    maps[arrow.name] = entries;
  }
  return Json{{"vertices", Json(rep.quiver.vertices())},
              {"arrows", arrows},
              {"sets", sets},
              {"maps", maps}};
}

F1Rep rep_from_json(const Json& j) {
  try {
    std::vector<std::string> vertices;
    for (const auto& v : j.at("vertices")) vertices.push_back(v.get<std::string>());
    std::vector<Quiver::Arrow> arrows;
    Quiver tmp(vertices, {});
    for (const auto& a : j.at("arrows")) {
      arrows.push_back(Quiver::Arrow{a.at("name").get<std::string>(),
                                     tmp.vertex_index(a.at("from").get<std::string>()),
                                     tmp.vertex_index(a.at("to").get<std::string>())});
    }
    F1Rep rep;
    rep.quiver = Quiver(vertices, arrows);
    rep.sets.reserve(vertices.size());
    for (const auto& v : vertices) {
      std::vector<std::string> labels;
      for (const auto& l : j.at("sets").at(v)) labels.push_back(l.get<std::string>());
      rep.sets.emplace_back(std::move(labels));
    }
    for (const auto& arrow : rep.quiver.arrows()) {
      const GroundSet& src = rep.sets[arrow.from];
      const GroundSet& tgt = rep.sets[arrow.to];
      F1LinearMap map{src, tgt, std::vector<int>(src.size(), -1)};
      if (j.at("maps").contains(arrow.name)) {
        for (const auto& [from, to] : j.at("maps").at(arrow.name).items()) {
          std::string t = to.get<std::string>();
          map.to[src.index(from)] = (t == "0" && !tgt.has("0")) ? -1 : tgt.index(t);
        }
      }
      rep.maps.push_back(std::move(map));
    }
    rep.validate();
    return rep;
  } catch (const Json::exception& e) {
    fail(ErrorKind::Parse, std::string("bad representation JSON: ") + e.what());
  }
}

Json grading_to_json(const Grading& g, const F1Rep& rep) {
  Json values = Json::object();
  for (int v = 0; v < rep.quiver.vertex_count(); ++v)
    for (int e = 0; e < rep.sets[v].size(); ++e)
      values[rep.element_name(v, e)] = g.at(v, e);
  return Json{{"values", values}};
}

Grading grading_from_json(const Json& j, const F1Rep& rep) {
  try {
    Grading g = Grading::constant(rep, 0);
    std::vector<std::vector<bool>> seen;
    for (const auto& s : rep.sets) seen.emplace_back(s.size(), false);
    for (const auto& [key, value] : j.at("values").items()) {
      bool found = false;
      auto colon = key.find(':');
      if (colon != std::string::npos) {
        int v = rep.quiver.vertex_index(key.substr(0, colon));
        int e = rep.sets[v].index(key.substr(colon + 1));
        g.values[v][e] = value.get<long long>();
        seen[v][e] = true;
        found = true;
      } else {
        for (int v = 0; v < rep.quiver.vertex_count() && !found; ++v) {
          if (rep.sets[v].has(key)) {
            int e = rep.sets[v].index(key);
            if (seen[v][e]) fail(ErrorKind::Parse, "grading key '" + key + "' is ambiguous");
            g.values[v][e] = value.get<long long>();
            seen[v][e] = true;
            found = true;
          }
        }
      }
      if (!found) fail(ErrorKind::Parse, "grading key '" + key + "' matches no element");
    }
    for (int v = 0; v < rep.quiver.vertex_count(); ++v)
      for (int e = 0; e < rep.sets[v].size(); ++e)
        if (!seen[v][e])
          fail(ErrorKind::Parse,
               "grading misses element '" + rep.element_name(v, e) + "'");
    return g;
  } catch (const Json::exception& e) {
    fail(ErrorKind::Parse, std::string("bad grading JSON: ") + e.what());
  }
}

std::vector<Grading> gradings_from_json(const Json& j, const F1Rep& rep) {
  std::vector<Grading> out;
  if (j.is_object() && j.contains("gradings")) {
    for (const auto& g : j.at("gradings")) out.push_back(grading_from_json(g, rep));
  } else if (j.is_array()) {
    for (const auto& g : j) out.push_back(grading_from_json(g, rep));
  } else {
    out.push_back(grading_from_json(j, rep));
  }
  return out;
}

Json vector_to_json(const VectorF& x) {
  Json entries = Json::object();
  for (int i = 0; i < x.ground.size(); ++i)
    if (!x.entries[i].is_zero()) entries[x.ground.label(i)] = x.entries[i].to_string();
  return entries;
}

VectorF vector_from_json(const Json& j, const GroundSet& ground, const Idyll& idyll) {
  try {
    VectorF x(ground, idyll);
    for (const auto& [key, value] : j.items())
      x.entries[ground.index(key)] = IdyllElement::parse(idyll, value.get<std::string>());
    return x;
  } catch (const Json::exception& e) {
    fail(ErrorKind::Parse, std::string("bad vector JSON: ") + e.what());
  }
}

Json point_to_json(const QuiverMatroid& m) {
  Json vertices = Json::object();
  for (int v = 0; v < m.quiver.vertex_count(); ++v)
    vertices[m.quiver.vertex(v)] = matroid_to_json(m.vertex_matroids[v]);
  return vertices;
}

Json euler_report_to_json(const EulerReport& r) {
  Json out{{"tits_count", r.tits_count},
           {"subrep_count", r.subrep_count},
           {"coordinate_count", r.coordinate_count},
           {"certificate", certificate_name(r.certificate)}};
  if (r.euler) out["euler"] = *r.euler;
  return out;
}

}  // namespace qmat
