#include "medianlab/reports.hpp"

#include <set>
#include <sstream>

#include "medianlab/error.hpp"
#include "medianlab/experiments.hpp"

namespace medianlab {

const char* const kSchema = "median-lab/1";

namespace {

Json header(const char* kind) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = kind;
  return j;
}

Json triple_json(const std::optional<Triple>& t) {
  if (!t) return nullptr;
  return Json::array({(*t)[0], (*t)[1], (*t)[2]});
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

std::string rational_text(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Json report_median(const std::string& graph, const MedianReport& r) {
  Json j = header("median_check");
  j["graph"] = graph;
  j["is_median"] = r.is_median;
  j["witness"] = triple_json(r.witness);
  j["witness_medians"] = r.witness_medians;
  return j;
}

Json report_frontier(const std::string& graph, const AlmostMedianFrontier& f) {
  Json j = header("frontier");
  j["graph"] = graph;
  j["delta_max"] = f.delta_max;
  Json entries = Json::array();
  for (const FrontierEntry& e : f.entries) {
    Json row;
    row["delta"] = e.delta;
    row["feasible"] = e.feasible;
    row["Delta"] = e.feasible ? Json(e.max_diameter) : Json(nullptr);
    row["witness"] = triple_json(e.witness);
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

Json report_hyperplanes(const std::string& graph, const std::vector<Hyperplane>& hs,
                        int dimension) {
  Json j = header("hyperplanes");
  j["graph"] = graph;
  j["count"] = hs.size();
  j["dimension"] = dimension;
  Json list = Json::array();
  for (const Hyperplane& h : hs) {
    Json row;
    Json edges = Json::array();
    for (const Edge& e : h.edge_class) edges.push_back(Json::array({e.first, e.second}));
    row["edges"] = std::move(edges);
    row["halfspace_sizes"] = Json::array({h.halfspaces[0].size(), h.halfspaces[1].size()});
    list.push_back(std::move(row));
  }
  j["classes"] = std::move(list);
  return j;
}

Json report_ball(const CayleyBall& ball, std::size_t element_cap) {
  Json j = header("cayley_ball");
  j["model"] = ball.model;
  j["radius"] = ball.radius;
  j["size"] = ball.size();
  j["sphere_sizes"] = ball.sphere_sizes;
  if (ball.size() <= element_cap) {
    Json elems = Json::array();
    for (std::size_t i = 0; i < ball.size(); ++i) {
      Json row;
      row["text"] = ball.elements[i].str();
      row["length"] = ball.lengths[i];
      elems.push_back(std::move(row));
    }
    j["elements"] = std::move(elems);
  } else {
    j["elements_omitted"] = true;
  }
  return j;
}

Json report_distortion(const DistortionProfile& p) {
  Json j = header("distortion");
  j["model"] = p.model;
  j["central"] = p.central;
  j["radius"] = p.radius;
  Json points = Json::array();
  for (const DistortionPoint& pt : p.points) {
    Json row;
    row["k"] = pt.k;
    row["length"] = pt.length;
    points.push_back(std::move(row));
  }
  j["points"] = std::move(points);
  if (p.fit_ok)
    j["exponent"] = p.exponent;
  else
    j["note"] = p.note;
  return j;
}

Json report_coarse(const CoarseEmbeddingReport& r) {
  Json j = header("coarse_embedding");
  j["model"] = r.model;
  j["radius"] = r.radius;
  Json rows = Json::array();
  for (const EnvelopeRow& row : r.rows) {
    Json e;
    e["r"] = row.r;
    e["min_image"] = row.count ? Json(row.min_image) : Json(nullptr);
    e["max_image"] = row.count ? Json(row.max_image) : Json(nullptr);
    e["count"] = row.count;
    rows.push_back(std::move(e));
  }
  j["rows"] = std::move(rows);
  j["lower_slope"] = r.lower_slope;
  j["lower_intercept"] = r.lower_intercept;
  j["upper_slope"] = r.upper_slope;
  j["upper_intercept"] = r.upper_intercept;
  j["lower_positive"] = r.lower_positive;
  return j;
}

Json report_cocycle_check(const CocycleCheckReport& r) {
  Json j = header("cocycle_check");
  j["name"] = r.name;
  j["samples"] = r.samples;
  j["pass"] = r.pass;
  j["witness"] = r.witness;
  if (!r.pass) j["violation"] = r.violation;
  j["bound_ok"] = r.bound_ok;
  j["max_abs"] = r.max_abs ? Json(*r.max_abs) : Json(nullptr);
  return j;
}

Json report_defect(const std::string& model, const DefectReport& r) {
  Json j = header("defect");
  j["model"] = model;
  j["defect"] = r.defect;
  j["max_abs_cocycle"] = r.max_abs_cocycle;
  j["pairs"] = r.pairs;
  j["witness"] = r.witness;
  return j;
}

Json report_translation(const std::string& model, const std::string& element,
                        const TranslationReport& r) {
  Json j = header("translation");
  j["model"] = model;
  j["element"] = element;
  j["value"] = rational_text(r.value);
  j["n"] = r.n;
  j["phi_n"] = r.phi_n;
  j["half_width"] = r.half_width ? Json(rational_text(*r.half_width)) : Json(nullptr);
  return j;
}

Json report_euler(const std::string& g, const std::string& h, int value) {
  Json j = header("euler");
  j["g"] = g;
  j["h"] = h;
  j["value"] = value;
  return j;
}

Json report_order(const std::string& model, const std::string& element,
                  const std::optional<long long>& order, long long bound) {
  Json j = header("order");
  j["model"] = model;
  j["element"] = element;
  j["order"] = order ? Json(*order) : Json(nullptr);
  j["bound"] = bound;
  return j;
}

Json report_relators(const std::string& presentation, const std::string& model, long long n_bound,
                     const RelatorCheckReport& r) {
  Json j = header("relator_check");
  j["presentation"] = presentation;
  j["model"] = model;
  j["n_bound"] = n_bound;
  j["pass"] = r.pass;
  j["checked"] = r.checked;
  if (!r.pass) {
    j["failed_relator"] = r.failed_relator;
    j["failed_n"] = r.failed_n;
    j["value"] = r.value;
  }
  return j;
}

Json report_homcount(const HomCountReport& r) {
  Json j = header("homcount");
  j["presentation"] = r.presentation;
  j["target"] = r.target;
  j["count"] = r.count;
  j["truncation_bound"] = r.truncation_bound;
  return j;
}

Json report_separation(const std::string& a, const std::string& b,
                       const std::vector<std::string>& targets, const SeparationVerdict& v) {
  Json j = header("separation");
  j["a"] = a;
  j["b"] = b;
  j["targets"] = targets;
  j["separated"] = v.separated;
  if (v.separated) {
    j["target"] = v.target;
    j["count_a"] = v.count_a;
    j["count_b"] = v.count_b;
    j["verdict"] = v.text();
  } else {
    j["verdict"] = "indistinguishable by given targets";
  }
  return j;
}

std::string report_csv(const Json& report) {
  std::string kind = report.value("kind", "");
  std::ostringstream os;
  if (kind == "cayley_ball") {
    os << "r,sphere_size\n";
    const auto& spheres = report.at("sphere_sizes");
    for (std::size_t r = 0; r < spheres.size(); ++r)
      os << r << ',' << spheres[r].get<std::size_t>() << '\n';
  } else if (kind == "distortion") {
    os << "k,length\n";
    for (const auto& row : report.at("points"))
      os << row.at("k").get<long long>() << ',' << row.at("length").get<long long>() << '\n';
  } else if (kind == "coarse_embedding") {
    os << "r,min_image,max_image,count\n";
    for (const auto& row : report.at("rows")) {
      os << row.at("r").get<long long>() << ',';
      if (!row.at("min_image").is_null()) os << row.at("min_image").get<long long>();
      os << ',';
      if (!row.at("max_image").is_null()) os << row.at("max_image").get<long long>();
      os << ',' << row.at("count").get<std::size_t>() << '\n';
    }
  } else if (kind == "frontier") {
    os << "delta,feasible,Delta,witness\n";
    for (const auto& row : report.at("entries")) {
      os << row.at("delta").get<int>() << ',' << (row.at("feasible").get<bool>() ? 1 : 0) << ',';
      if (!row.at("Delta").is_null()) os << row.at("Delta").get<int>();
      os << ',';
      if (!row.at("witness").is_null()) os << csv_escape(row.at("witness").dump());
      os << '\n';
    }
  } else {
    os << "key,value\n";
    for (const auto& [key, value] : report.items())
      if (!value.is_array() && !value.is_object())
        os << csv_escape(key) << ',' << csv_escape(scalar_text(value)) << '\n';
  }
  return os.str();
}

std::string ball_dot(const CayleyBall& ball, const Group& g, std::size_t element_cap) {
  if (ball.size() > element_cap)
    throw Error(ErrorKind::CapExceeded, "ball too large for DOT output (" +
                                            std::to_string(ball.size()) + " > " +
                                            std::to_string(element_cap) + " elements)");
  std::unordered_map<std::size_t, std::vector<std::size_t>> by_hash;
  for (std::size_t i = 0; i < ball.size(); ++i) by_hash[ball.elements[i].hash()].push_back(i);
  auto find = [&](const Element& e) -> long long {
    auto it = by_hash.find(e.hash());
    if (it == by_hash.end()) return -1;
    for (std::size_t i : it->second)
      if (ball.elements[i] == e) return static_cast<long long>(i);
    return -1;
  };
  std::ostringstream os;
  os << "graph ball {\n";
  for (std::size_t i = 0; i < ball.size(); ++i)
    os << "  v" << i << " [label=\"" << ball.elements[i].str() << "\"];\n";
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t i = 0; i < ball.size(); ++i)
    for (const Generator& s : g.generators()) {
      long long j = find(g.mul(ball.elements[i], s.value));
      if (j < 0 || j == static_cast<long long>(i)) continue;
      std::size_t lo = std::min(i, static_cast<std::size_t>(j));
      std::size_t hi = std::max(i, static_cast<std::size_t>(j));
      if (!seen.insert({lo, hi}).second) continue;
      os << "  v" << lo << " -- v" << hi << " [label=\"" << s.name << "\"];\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace medianlab
