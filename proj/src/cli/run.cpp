#include "tordeg/cli/run.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "tordeg/cli/reference_tables.hpp"
#include "tordeg/errors.hpp"
#include "tordeg/flag/plucker.hpp"
#include "tordeg/flag/reduced_word.hpp"
#include "tordeg/poly/ideal_ops.hpp"
#include "tordeg/polytopes/normalization.hpp"
#include "tordeg/reembed/reembed.hpp"
#include "tordeg/repweights/weights.hpp"
#include "tordeg/stringfflv/fflv.hpp"
#include "tordeg/stringfflv/string_cone.hpp"
#include "tordeg/tropfan/orbits.hpp"

namespace tordeg {

std::string content_hash(const std::string& text) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

namespace fs = std::filesystem;

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
  }
}

class Runner {
 public:
  explicit Runner(const RunConfig& c) : cfg_(c) {}

  Report dispatch() {
    static const std::map<std::string, Report (Runner::*)()> commands = {
        {"ideal", &Runner::ideal},       {"trop", &Runner::trop},
        {"trop-check", &Runner::trop_check}, {"string", &Runner::string_cmd},
        {"fflv", &Runner::fflv},         {"mp-check", &Runner::mp_check},
        {"wvec", &Runner::wvec},         {"reembed", &Runner::reembed},
        {"polytope-compare", &Runner::polytope_compare}, {"report", &Runner::report},
    };
    auto it = commands.find(cfg_.command);
    if (it == commands.end()) throw Error(ErrorKind::InvalidInput, "unknown command: " + cfg_.command);
    validate();
    return (this->*(it->second))();
  }

 private:
  void validate() const {
    if (cfg_.n < 2 || cfg_.n > 8) throw Error(ErrorKind::InvalidInput, "n must be between 2 and 8");
    if (cfg_.layout != "plucker" && cfg_.layout != "extension")
      throw Error(ErrorKind::InvalidInput, "layout must be plucker or extension");
    if (cfg_.convention && *cfg_.convention != "min" && *cfg_.convention != "max")
      throw Error(ErrorKind::InvalidInput, "convention must be min or max");
    if (cfg_.depth < 1 || cfg_.depth > 3) throw Error(ErrorKind::InvalidInput, "depth must be between 1 and 3");
    if (cfg_.threads < 1) throw Error(ErrorKind::InvalidInput, "threads must be positive");
  }

  WeightConvention convention(WeightConvention fallback) const {
    if (!cfg_.convention) return fallback;
    return *cfg_.convention == "max" ? WeightConvention::Max : WeightConvention::Min;
  }

  FanOptions fan_options() const {
    FanOptions o;
    o.cell_budget = cfg_.budget;
    o.threads = cfg_.threads;
    return o;
  }

  bool plucker_input() const { return cfg_.ideal_file.empty(); }

  Ideal load_ideal() const {
    if (plucker_input()) return plucker_ideal(cfg_.n);
    return ideal_from_json(read_json_file(cfg_.ideal_file));
  }

  std::vector<int> word() const {
    if (cfg_.word.empty()) throw Error(ErrorKind::InvalidInput, "--word is required");
    std::vector<int> w = parse_word(cfg_.word);
    require_reduced_word(w, cfg_.n);
    return w;
  }

  std::vector<long> lambda() const {
    if (cfg_.weight == "rho") return rho(cfg_.n);
    std::vector<long> out;
    for (const auto& x : intvec_from_csv(cfg_.weight)) {
      if (!x.fits_slong_p()) throw Error(ErrorKind::InvalidInput, "weight coefficient out of range");
      out.push_back(x.get_si());
    }
    if (out.size() != static_cast<size_t>(cfg_.n - 1))
      throw Error(ErrorKind::DimensionMismatch, "a weight needs n-1 coefficients");
    return out;
  }

  // Runs compute() unless the cache holds a result for (tag, key).
  Json cached(const std::string& tag, const std::string& key, const std::function<Json()>& compute) const {
    if (cfg_.cache_dir.empty()) return compute();
    fs::path path = fs::path(cfg_.cache_dir) / (tag + "-" + content_hash(tag + "\n" + key) + ".json");
    if (fs::exists(path)) return read_json_file(path.string());
    Json j = compute();
    fs::create_directories(cfg_.cache_dir);
    fs::path tmp = path;
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      out << j.dump();
    }
    fs::rename(tmp, path);
    return j;
  }

  std::string ideal_key(const Ideal& I) const {
    std::string k;
    for (const auto& v : I.ring.names) k += v + ",";
    k += "\n" + serialize_polys(I.gens, I.ring) + "\n";
    for (const auto& r : I.grading) k += to_string(r);
    return k;
  }

  Report ideal() {
    Report r;
    r.json = ideal_json(load_ideal());
    r.json["n"] = cfg_.n;
    return r;
  }

  TropicalFan fan_of(const Ideal& I) const {
    TropicalFan fan = enumerate_tropical_fan(I, fan_options());
    if (plucker_input()) label_orbits(fan, plucker_ring(cfg_.n));
    return fan;
  }

  static Json fan_json(const TropicalFan& fan) {
    Json cones = Json::array();
    size_t prime = 0;
    std::map<int, std::pair<size_t, bool>> orbits;
    for (size_t i = 0; i < fan.cones.size(); ++i) {
      const auto& c = fan.cones[i];
      cones.push_back(cone_json(c, i));
      prime += c.prime;
      if (c.orbit >= 0) {
        auto& o = orbits.try_emplace(c.orbit, 0, true).first->second;
        ++o.first;
        o.second = o.second && c.prime;
      }
    }
    Json orbit_rows = Json::array();
    for (const auto& [o, info] : orbits)
      orbit_rows.push_back({{"orbit", o + 1}, {"size", info.first}, {"prime", info.second}});
    const size_t lin = fan.lineality.size();
    return {{"ambient_dim", fan.ambient_dim},
            {"target_dim", fan.target_dim},
            {"lineality", to_json(fan.lineality)},
            {"cells", fan.cells},
            {"cones", cones},
            {"summary",
             {{"cones", fan.cones.size()},
              {"prime", prime},
              {"dim_mod_lineality", fan.target_dim - lin},
              {"orbits", orbit_rows}}}};
  }

  Report trop() {
    Ideal I = load_ideal();
    Report r;
    r.json = cached("trop", ideal_key(I) + (plucker_input() ? "plucker" : "file"), [&] { return fan_json(fan_of(I)); });
    return r;
  }

  Report trop_check() {
    Ideal I = load_ideal();
    IntVec w = intvec_from_csv(cfg_.weight);
    if (w.size() != I.nvars()) throw Error(ErrorKind::DimensionMismatch, "weight length differs from the number of variables");
    if (cfg_.layout == "extension") {
      if (!plucker_input()) throw Error(ErrorKind::InvalidInput, "the extension layout applies to Plücker ideals only");
      w = from_extension_layout(plucker_ring(cfg_.n), w);
    }
    WeightConvention conv = convention(WeightConvention::Min);
    Report r;
    r.json = cached("trop-check", ideal_key(I) + "\n" + to_string(w) + (conv == WeightConvention::Max ? "max" : "min"),
                    [&] { return membership_json(weight_vector_membership(I, w, nullptr, conv)); });
    r.json["layout"] = cfg_.layout;
    r.json["n"] = cfg_.n;
    return r;
  }

  static Json polytope_with_points(const Polytope& p) {
    Json j = polytope_json(p);
    j["lattice_points"] = lattice_points(p).size();
    return j;
  }

  Report string_cmd() {
    std::vector<int> w = word();
    std::vector<long> l = lambda();
    Report r;
    r.json = {{"n", cfg_.n}, {"word", word_string(w)}, {"lambda", l}, {"polytope", polytope_with_points(string_polytope(w, cfg_.n, l))}};
    return r;
  }

  Report fflv() {
    std::vector<long> l = lambda();
    Report r;
    r.json = {{"n", cfg_.n},
              {"lambda", l},
              {"dyck_paths", dyck_paths(cfg_.n).size()},
              {"polytope", polytope_with_points(fflv_polytope(cfg_.n, l))}};
    return r;
  }

  static Json mp_json(const MinkowskiReport& m) {
    return {{"sum_lattice_points", m.sum_lattice_points},
            {"sums_of_lattice_points", m.sums_of_lattice_points},
            {"expected", to_json(m.expected)},
            {"holds", m.holds},
            {"holds_exactly", m.holds_exactly}};
  }

  Report mp_check() {
    std::vector<int> w = word();
    Report r;
    r.json = mp_json(minkowski_property(w, cfg_.n));
    r.json["n"] = cfg_.n;
    r.json["word"] = word_string(w);
    return r;
  }

  Json vector_entry(const IntVec& v, WeightConvention conv) const {
    PlueckerRing pr = plucker_ring(cfg_.n);
    Json j = {{"vector", to_json(v)}, {"membership", membership_json(weight_vector_membership(plucker_ideal(pr), v, nullptr, conv))}};
    if (cfg_.n >= 5) j["vector_extension_layout"] = to_json(to_extension_layout(pr, v));
    return j;
  }

  Report wvec() {
    Report r;
    if (cfg_.fflv) {
      FflvWeights fw = fflv_weight_vectors(cfg_.n);
      WeightConvention conv = convention(WeightConvention::Min);
      r.json = {{"n", cfg_.n}, {"w_min", vector_entry(fw.w_min, conv)}, {"w_reg", vector_entry(fw.w_reg, conv)}};
      return r;
    }
    std::vector<int> w = word();
    r.json = vector_entry(string_weight_vector(cfg_.n, w), convention(WeightConvention::Max));
    r.json["n"] = cfg_.n;
    r.json["word"] = word_string(w);
    return r;
  }

  static Json harvest_json(const ReembeddingStep& step, const HarvestResult& h) {
    Json missing = Json::array();
    for (const auto& f : step.missing) missing.push_back(f.to_string(step.base.ring));
    Json lifts = Json::array();
    for (const auto& l : h.lifts)
      lifts.push_back({{"cone", cone_json(h.fan.cones[l.index], l.index)}, {"polytope", polytope_json(l.polytope)}});
    size_t prime = 0;
    for (const auto& c : h.fan.cones) prime += c.prime;
    Json deeper = Json::array();
    for (const auto& [s, sub] : h.deeper) deeper.push_back(harvest_json(s, sub));
    return {{"missing", missing},
            {"extended", ideal_json(step.extended)},
            {"fan", {{"cones", h.fan.cones.size()}, {"prime", prime}}},
            {"lifts", lifts},
            {"nonprime_over", h.nonprime_over},
            {"deeper", deeper}};
  }

  Report reembed() {
    Ideal I = load_ideal();
    std::string key = ideal_key(I) + "\n" + (cfg_.cone ? std::to_string(*cfg_.cone) : "first") + "\n" +
                      std::to_string(cfg_.depth) + (plucker_input() ? "plucker" : "file");
    Report r;
    r.json = cached("reembed", key, [&] {
      TropicalFan fan = fan_of(I);
      size_t idx = fan.cones.size();
      if (cfg_.cone) {
        idx = *cfg_.cone;
      } else {
        for (size_t i = 0; i < fan.cones.size() && idx == fan.cones.size(); ++i)
          if (!fan.cones[i].prime) idx = i;
      }
      if (idx >= fan.cones.size()) throw Error(ErrorKind::InvalidInput, "no such cone (or no non-prime cone)");
      ReembeddingStep step = extend_ideal(I, fan.cones[idx]);
      HarvestResult h = harvest_new_degenerations(step, fan_options(), cfg_.depth);
      Json j = harvest_json(step, h);
      j["base_cone"] = cone_json(fan.cones[idx], idx);
      return j;
    });
    return r;
  }

  Report polytope_compare() {
    if (cfg_.inputs.size() != 2) throw Error(ErrorKind::InvalidInput, "polytope-compare takes two files");
    std::vector<Polytope> ps;
    Json fv = Json::array();
    for (const auto& path : cfg_.inputs) {
      Json j = read_json_file(path);
      ps.push_back(polytope_from_json(j.contains("polytope") ? j.at("polytope") : j));
      fv.push_back(f_vector(ps.back()));
    }
    Report r;
    r.json = {{"f_vectors", fv},
              {"equal_f_vector", f_vector(ps[0]) == f_vector(ps[1])},
              {"combinatorially_equivalent", combinatorially_equivalent(ps[0], ps[1])}};
    return r;
  }

  // Tables

  static std::string tuple_text(const std::vector<std::string>& xs) {
    std::string s = "(";
    for (size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i];
    return s + ")";
  }
  template <class V>
  static std::string tuple_of(const V& v) {
    std::vector<std::string> xs;
    for (const auto& x : v) {
      std::ostringstream os;
      os << x;
      xs.push_back(os.str());
    }
    return tuple_text(xs);
  }
  static std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  static std::string csv_line(const std::vector<std::string>& fields) {
    std::string s;
    for (size_t i = 0; i < fields.size(); ++i) s += (i ? "," : "") + csv_field(fields[i]);
    return s + "\n";
  }
  static const char* yn(bool b) { return b ? "Yes" : "No"; }

  Report report() {
    if (cfg_.table == "flag4-trop") return flag4_trop_table();
    if (cfg_.table == "flag4-string") return string_table(4);
    if (cfg_.table == "flag5-string") return string_table(5);
    throw Error(ErrorKind::InvalidInput, "unknown table: " + cfg_.table + " (flag4-trop, flag4-string, flag5-string)");
  }

  Report flag4_trop_table() {
    Json rows = cached("report-flag4-trop", std::to_string(cfg_.budget), [&] {
      PlueckerRing pr = plucker_ring(4);
      TropicalFan fan = enumerate_tropical_fan(plucker_ideal(pr), fan_options());
      auto orbits = label_orbits(fan, pr);
      Json out = Json::array();
      for (const auto& members : orbits) {
        const MaximalCone& c = fan.cones[members[0]];
        bool prime = true;
        for (size_t i : members) prime = prime && fan.cones[i].prime;
        Json row = {{"size", members.size()},
                    {"prime", prime},
                    {"generators", minimal_generators(c.initial).size()},
                    {"cohen_macaulay", "not computed"}};
        row["f_vector"] = prime ? Json(f_vector(normalization_polytope(c, pr.grading))) : Json(nullptr);
        out.push_back(row);
      }
      return out;
    });
    // Present the computed orbits in the order of the reference table when they match it.
    std::vector<bool> used(rows.size(), false);
    Json ordered = Json::array();
    bool match = rows.size() == golden::kFlag4Orbits.size();
    for (const auto& g : golden::kFlag4Orbits) {
      bool found = false;
      for (size_t i = 0; i < rows.size() && !found; ++i) {
        const Json& row = rows[i];
        std::vector<size_t> fv = row["f_vector"].is_null() ? std::vector<size_t>{} : row["f_vector"].get<std::vector<size_t>>();
        if (!used[i] && row["size"] == g.size && row["prime"] == g.prime && row["generators"] == g.generators &&
            fv == g.f_vector) {
          used[i] = found = true;
          Json r = row;
          r["orbit"] = g.orbit;
          ordered.push_back(r);
        }
      }
      match = match && found;
    }
    if (!match) {
      ordered = Json::array();
      for (size_t i = 0; i < rows.size(); ++i) {
        Json r = rows[i];
        r["orbit"] = i + 1;
        ordered.push_back(r);
      }
    }
    Report rep;
    rep.csv = csv_line({"Orbit", "Size", "Cohen-Macaulay", "Prime", "#Generators", "F-vector"});
    for (const auto& r : ordered)
      rep.csv += csv_line({std::to_string(r["orbit"].get<int>()), std::to_string(r["size"].get<size_t>()),
                           r["cohen_macaulay"].get<std::string>(), yn(r["prime"].get<bool>()),
                           std::to_string(r["generators"].get<size_t>()),
                           r["f_vector"].is_null() ? "Not applicable" : tuple_of(r["f_vector"].get<std::vector<size_t>>())});
    rep.json = {{"table", cfg_.table}, {"rows", ordered}, {"matches_reference", match}};
    rep.exit_code = match ? kExitOk : kExitMismatch;
    return rep;
  }

  Report string_table(int n) {
    const auto& ref = n == 4 ? golden::kFlag4Rows : golden::kFlag5Rows;
    Json rows = cached("report-flag" + std::to_string(n) + "-string", "", [&] {
      PlueckerRing pr = plucker_ring(n);
      Ideal I = plucker_ideal(pr);
      std::vector<Polytope> classes;
      Json out = Json::array();
      for (const auto& g : ref) {
        std::vector<int> w = parse_word(g.word);
        // Table rows stand for commutation classes; take the member whose vector is tabulated, if any.
        std::vector<int> source = w;
        IntVec v = string_weight_vector(n, w);
        const IntVec target = golden::to_intvec(g.vector);
        for (const auto& u : commutation_class(w)) {
          IntVec x = string_weight_vector(n, u);
          if ((n == 4 ? x : to_extension_layout(pr, x)) == target) {
            source = u;
            v = x;
            break;
          }
        }
        MembershipReport m = weight_vector_membership(I, v, nullptr, WeightConvention::Max);
        Json row = {{"word", g.word},
                    {"vector_word", word_string(source)},
                    {"vector", to_json(n == 4 ? v : to_extension_layout(pr, v))},
                    {"mp", minkowski_property(w, n).holds},
                    {"binomial", m.binomial},
                    {"prime", m.prime}};
        if (n == 4) {
          // Classes up to combinatorial equivalence, numbered by first appearance.
          Polytope q = string_polytope(w, n, rho(n));
          size_t k = 0;
          while (k < classes.size() && !combinatorially_equivalent(classes[k], q)) ++k;
          if (k == classes.size()) classes.push_back(q);
          row["class"] = "String " + std::to_string(k + 1);
        } else {
          row["class"] = g.name;
        }
        out.push_back(row);
      }
      return out;
    });
    bool match = rows.size() == ref.size();
    Json mismatches = Json::array();
    for (size_t i = 0; i < rows.size() && i < ref.size(); ++i) {
      const auto& g = ref[i];
      const Json& row = rows[i];
      std::vector<std::string> bad;
      if (row["vector"] != to_json(golden::to_intvec(g.vector))) bad.push_back("vector");
      if (row["mp"] != g.mp) bad.push_back("mp");
      if (row["prime"] != g.prime) bad.push_back("prime");
      if (row["binomial"] != true) bad.push_back("binomial");
      if (row["class"] != g.name) bad.push_back("class");
      if (!bad.empty()) {
        match = false;
        mismatches.push_back({{"word", g.word}, {"fields", bad}});
      }
    }
    Report rep;
    rep.csv = csv_line({"Class", "Reduced word", "Vector word", "Weight vector", "MP", "Prime"});
    for (const auto& r : rows) {
      std::vector<std::string> v;
      for (const auto& x : r["vector"]) v.push_back(x.dump());
      rep.csv += csv_line({r["class"].get<std::string>(), r["word"].get<std::string>(),
                           r["vector_word"].get<std::string>(), tuple_text(v),
                           yn(r["mp"].get<bool>()), yn(r["prime"].get<bool>())});
    }
    rep.json = {{"table", cfg_.table}, {"rows", rows}, {"matches_reference", match}, {"mismatches", mismatches}};
    rep.exit_code = match ? kExitOk : kExitMismatch;
    return rep;
  }

  const RunConfig& cfg_;
};

}  // namespace

Report run(const RunConfig& config) {
  auto failure = [](const std::string& kind, const std::string& message, int code) {
    Report r;
    r.json = {{"error", {{"kind", kind}, {"message", message}}}};
    r.exit_code = code;
    return r;
  };
  try {
    return Runner(config).dispatch();
  } catch (const Error& e) {
    return failure(error_kind_name(e.kind()), e.message(),
                   e.kind() == ErrorKind::CellBudgetExceeded ? kExitBudget : kExitError);
  } catch (const std::exception& e) {
    return failure("InvalidInput", e.what(), kExitError);
  }
}

}  // namespace tordeg
