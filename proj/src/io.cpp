#include "reflexpm/io.hpp"

#include <fstream>
#include <sstream>

#include "reflexpm/errors.hpp"

namespace reflexpm::io {

namespace {

// Runs a reader body, translating json library exceptions to InputError.
template <typename F>
auto guarded(const char* what, F&& body) {
  try {
    return body();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed ") + what + ": " + e.what());
  }
}

int read_d(const Json& j) {
  if (!j.is_object() || !j.contains("d")) throw InputError("document lacks field 'd'");
  const int d = j.at("d").get<int>();
  check_ground_size(d);
  return d;
}

Mask mask_of(int d, const Json& elements) {
  return Subset::from_elements(d, elements.get<std::vector<int>>()).mask();
}

Json int_list(const IntVector& v) { return Json(v); }

std::string join(const IntVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string family_cell(int d, const std::vector<Mask>& masks) {
  std::string s;
  for (std::size_t k = 0; k < masks.size(); ++k) {
    if (k != 0) s += ';';
    s += Subset(d, masks[k]).to_string();
  }
  return s;
}

}  // namespace

Json to_json(const Subset& s) { return Json(s.elements()); }

Json to_json(const SetFamily& f) {
  Json sets = Json::array();
  for (Mask m : f.masks()) sets.push_back(Subset(f.d(), m).elements());
  return {{"d", f.d()}, {"sets", sets}};
}

Json to_json(const RankFunction& rho) { return {{"d", rho.d()}, {"values", rho.values()}}; }

Json to_json(const PointSet& p) { return {{"d", p.d()}, {"points", p.points()}}; }

Json to_json(const Presentation& b) {
  Json blocks = Json::array();
  for (Mask m : b.blocks()) blocks.push_back(Subset(b.d(), m).elements());
  return {{"d", b.d()}, {"blocks", blocks}};
}

Json to_json(const HPolytope& h) {
  Json ineqs = Json::array();
  for (const auto& q : h.ineqs()) ineqs.push_back({{"a", q.a}, {"b", q.b}});
  return {{"d", h.d()}, {"ineqs", ineqs}};
}

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

Json to_json(const std::vector<RationalVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

Json to_json(const RankVerdict& v) {
  Json j{{"ok", v.ok}, {"loopless", v.loopless}};
  if (v.ok) {
    j["violation"] = nullptr;
  } else {
    j["violation"] = {{"kind", to_string(v.violation)}, {"X", to_json(*v.x)}, {"Y", to_json(*v.y)}};
  }
  return j;
}

Json to_json(const PolymatroidVerdict& v) {
  using Kind = PolymatroidVerdict::Kind;
  Json j{{"ok", v.ok}};
  if (v.kind == Kind::kNone) {
    j["violation"] = nullptr;
  } else {
    j["violation"] = {{"kind", v.kind == Kind::kExchange ? "exchange" : "not-down-closed"},
                      {"u", v.u},
                      {"v", v.v}};
  }
  return j;
}

Json to_json(const ReflexivityReport& r) {
  return {{"reflexive", r.reflexive},
          {"lattice_polytope", r.lattice_polytope},
          {"center", r.center ? int_list(*r.center) : Json(nullptr)}};
}

Json to_json(const ClassificationRecord& r) {
  Json sets = to_json(r.sublattice);
  return {{"sublattice", sets},
          {"rank", r.rank.values()},
          {"point_count", r.point_count},
          {"facet_count", r.facet_count},
          {"reflexive_lemma", r.reflexive_lemma},
          {"reflexive_direct", r.reflexive_direct},
          {"center", r.center ? int_list(*r.center) : Json(nullptr)},
          {"roundtrip_ok", r.roundtrip_ok},
          {"witness_law_ok", r.witness_law_ok},
          {"transversal", r.transversal ? to_json(*r.transversal)["blocks"] : Json(nullptr)}};
}

Json to_json(const SweepFinding& f) {
  return {{"rank", f.rank.values()},
          {"family", to_json(f.family)["sets"]},
          {"reflexive", f.reflexive},
          {"family_is_sublattice_with_empty", f.family_is_sublattice_with_empty}};
}

SetFamily family_from_json(const Json& j) {
  return guarded("set family", [&] {
    const int d = read_d(j);
    std::vector<Mask> masks;
    for (const auto& s : j.at("sets")) masks.push_back(mask_of(d, s));
    return SetFamily(d, std::move(masks));
  });
}

RankFunction rank_from_json(const Json& j) {
  return guarded("rank function", [&] {
    const int d = read_d(j);
    return RankFunction(d, j.at("values").get<std::vector<std::int64_t>>());
  });
}

PointSet points_from_json(const Json& j) {
  return guarded("point set", [&] {
    const int d = read_d(j);
    return PointSet(d, j.at("points").get<std::vector<IntVector>>());
  });
}

Presentation presentation_from_json(const Json& j) {
  return guarded("presentation", [&] {
    const int d = read_d(j);
    std::vector<Mask> blocks;
    for (const auto& b : j.at("blocks")) blocks.push_back(mask_of(d, b));
    return Presentation(d, std::move(blocks));
  });
}

HPolytope hpolytope_from_json(const Json& j) {
  return guarded("H-polytope", [&] {
    const int d = read_d(j);
    std::vector<Inequality> ineqs;
    for (const auto& q : j.at("ineqs")) {
      ineqs.push_back({q.at("a").get<IntVector>(), q.at("b").get<std::int64_t>()});
    }
    return HPolytope(d, std::move(ineqs));
  });
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

std::string dump(const Json& j) { return j.dump(); }

std::string tsv_header() {
  return "sublattice\trank\tpoint_count\tfacet_count\treflexive_lemma\treflexive_direct\tcenter\t"
         "roundtrip_ok\ttransversal";
}

std::string to_tsv(const ClassificationRecord& r) {
  auto flag = [](bool b) { return b ? "true" : "false"; };
  std::ostringstream os;
  os << family_cell(r.sublattice.d(), r.sublattice.masks()) << '\t' << join(r.rank.values()) << '\t'
     << r.point_count << '\t' << r.facet_count << '\t' << flag(r.reflexive_lemma) << '\t'
     << flag(r.reflexive_direct) << '\t' << (r.center ? join(*r.center) : "-") << '\t'
     << flag(r.roundtrip_ok) << '\t'
     << (r.transversal ? family_cell(r.transversal->d(), r.transversal->blocks()) : "-");
  return os.str();
}

}  // namespace reflexpm::io
