#include "tordeg/cli/json_io.hpp"

#include <sstream>

#include "tordeg/errors.hpp"

namespace tordeg {

Json to_json(const BigInt& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Json to_json(const IntVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const IntMatrix& m) { return to_json(m.row_vectors()); }

Json to_json(const std::vector<IntVec>& rows) {
  Json a = Json::array();
  for (const auto& r : rows) a.push_back(to_json(r));
  return a;
}

Json to_json(const RatVec& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

Json ideal_json(const Ideal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.gens) gens.push_back(g.to_string(ideal.ring));
  return {{"variables", ideal.ring.names}, {"generators", gens}, {"grading", to_json(ideal.grading)}};
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw Error(ErrorKind::InvalidInput, "expected an integer");
}

Ideal ideal_from_json(const Json& j) {
  if (!j.contains("variables") || !j.contains("generators"))
    throw Error(ErrorKind::InvalidInput, "ideal needs \"variables\" and \"generators\"");
  Ideal I;
  I.ring.names = j.at("variables").get<std::vector<std::string>>();
  for (const auto& g : j.at("generators")) I.gens.push_back(parse_polynomial(g.get<std::string>(), I.ring));
  if (j.contains("grading"))
    for (const auto& row : j.at("grading")) {
      IntVec r;
      for (const auto& x : row) r.push_back(bigint_from_json(x));
      if (r.size() != I.nvars()) throw Error(ErrorKind::DimensionMismatch, "grading row of the wrong length");
      I.grading.push_back(r);
    }
  return I;
}

Json polytope_json(const Polytope& p) {
  Json f = Json::array();
  for (size_t x : f_vector(p)) f.push_back(x);
  Json verts = Json::array();
  for (const auto& v : p.vertices()) verts.push_back(to_json(v));
  return {{"ambient_dim", p.ambient_dim()}, {"dim", p.dim()},           {"vertices", verts},
          {"facets", to_json(p.facets())},  {"equations", to_json(p.equations())}, {"f_vector", f}};
}

Polytope polytope_from_json(const Json& j) {
  if (!j.contains("vertices") || !j.contains("ambient_dim"))
    throw Error(ErrorKind::InvalidInput, "polytope needs \"ambient_dim\" and \"vertices\"");
  const size_t dim = j.at("ambient_dim").get<size_t>();
  std::vector<RatVec> pts;
  for (const auto& v : j.at("vertices")) {
    RatVec x;
    for (const auto& c : v) {
      x.push_back(parse_rational(c.is_string() ? c.get<std::string>() : std::to_string(c.get<long>())));
    }
    pts.push_back(x);
  }
  return Polytope::from_points(dim, pts);
}

Json cone_json(const MaximalCone& c, size_t index) {
  Json initial = Json::array();
  for (const auto& g : c.initial.gens) initial.push_back(g.to_string(c.initial.ring));
  Json j = {{"index", index},
            {"initial", initial},
            {"interior", to_json(c.interior)},
            {"W", to_json(c.W)},
            {"binomial", c.binomial},
            {"prime", c.prime},
            {"multiplicity", to_json(c.multiplicity)},
            {"multiplicity_one", c.multiplicity_one}};
  if (c.orbit >= 0) j["orbit"] = c.orbit + 1;
  return j;
}

Json membership_json(const MembershipReport& r) {
  Json initial = Json::array();
  for (const auto& g : r.initial.gens) initial.push_back(g.to_string(r.initial.ring));
  Json j = {{"weight", to_json(r.w)},
            {"convention", r.convention == WeightConvention::Max ? "max" : "min"},
            {"effective_weight", to_json(r.effective)},
            {"initial", initial},
            {"monomial_free", r.monomial_free},
            {"binomial", r.binomial},
            {"prime", r.prime},
            {"multiplicity_one", r.multiplicity_one},
            {"rescaling_obstruction", r.rescaling_obstruction}};
  j["cone"] = r.cone ? Json(*r.cone) : Json(nullptr);
  return j;
}

IntVec intvec_from_csv(const std::string& csv) {
  IntVec v;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t a = item.find_first_not_of(" \t"), b = item.find_last_not_of(" \t");
    if (a == std::string::npos) throw Error(ErrorKind::InvalidInput, "empty entry in a comma-separated vector");
    std::string t = item.substr(a, b - a + 1);
    BigInt z;
    if (z.set_str(t, 10) != 0) throw Error(ErrorKind::InvalidInput, "not an integer: " + t);
    v.push_back(z);
  }
  if (v.empty()) throw Error(ErrorKind::InvalidInput, "empty vector");
  return v;
}

}  // namespace tordeg
