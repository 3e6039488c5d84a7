#include "liftlab/json_io.hpp"

#include <fstream>

namespace liftlab {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<std::string> names(const Json& j, const char* key) {
  const Json& list = field(j, key);
  if (!list.is_array()) throw ValidationError(std::string("\"") + key + "\" must be a list of names");
  std::vector<std::string> out;
  for (const auto& item : list) {
    if (!item.is_string()) throw ValidationError(std::string("\"") + key + "\" must be a list of names");
    out.push_back(item.get<std::string>());
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t k = i + 1; k < out.size(); ++k) {
      if (out[i] == out[k]) throw ValidationError("duplicate point \"" + out[i] + "\"");
    }
  }
  return out;
}

RationalMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw ValidationError("matrix must have " + std::to_string(rows) + " rows");
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) {
      throw ValidationError("matrix row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
    }
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

std::size_t point_index(const std::vector<std::string>& points, const std::string& name) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] == name) return i;
  }
  throw ValidationError("unknown point \"" + name + "\"");
}

// An inline space must agree with the carrier the caller supplies.
void check_space_reference(const Json& j, const std::vector<std::string>& points) {
  if (!j.is_object() || !j.contains("space")) return;
  const Json& space = j.at("space");
  if (space.is_object() && space.contains("points") && names(space, "points") != points) {
    throw ValidationError("inline space does not match the given carrier");
  }
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open \"" + path + "\"");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError("\"" + path + "\" is not valid JSON: " + e.what());
  }
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ValidationError("rationals are written as \"p/q\" strings, got " + j.dump());
}

Json to_json(const Rational& value) { return to_string(value); }

Json scalar_to_json(const Scalar& value, int digits) {
  Json out;
  if (const auto* q = std::get_if<Rational>(&value)) {
    out["exact"] = to_string(*q);
    out["decimal"] = to_decimal_string(*q, digits);
  } else {
    out["decimal"] = to_decimal_string(value, digits);
    out["digits"] = std::min(digits, kMaxDecimalDigits);
  }
  return out;
}

PseudometricSpace space_from_json(const Json& j) {
  std::vector<std::string> points = names(j, "points");
  RationalMatrix d = matrix_from_json(field(j, "d"), points.size(), points.size());
  return make_space(std::move(points), std::move(d));
}

Json to_json(const PseudometricSpace& space) {
  Json out;
  out["points"] = space.points;
  out["d"] = to_json(space.d);
  return out;
}

FuzzyRelation relation_from_json(const Json& j) {
  FuzzyRelation r;
  r.sources = names(j, "points");
  r.targets = j.contains("targets") ? names(j, "targets") : r.sources;
  const Json& values = j.contains("r") ? j.at("r") : field(j, "d");
  r.r = matrix_from_json(values, r.sources.size(), r.targets.size());
  check_relation(r);
  return r;
}

Distribution distribution_from_json(const Json& j, const std::vector<std::string>& points) {
  check_space_reference(j, points);
  const Json& mass = field(j, "mass");
  std::vector<Rational> masses(points.size());
  if (mass.is_object()) {
    for (const auto& [name, value] : mass.items()) masses[point_index(points, name)] = rational_from_json(value);
  } else if (mass.is_array() && mass.size() == points.size()) {
    for (std::size_t i = 0; i < points.size(); ++i) masses[i] = rational_from_json(mass[i]);
  } else {
    throw ValidationError("\"mass\" must map point names to rationals");
  }
  return Distribution::from_masses(std::move(masses));
}

Json to_json(const Distribution& mu, const std::vector<std::string>& points) {
  Json mass = Json::object();
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] != 0) mass[points[i]] = to_string(mu[i]);
  }
  return Json{{"mass", mass}};
}

PointSet point_set_from_json(const Json& j, const std::vector<std::string>& points) {
  check_space_reference(j, points);
  const Json& set = field(j, "set");
  if (!set.is_array()) throw ValidationError("\"set\" must be a list of point names");
  std::vector<std::size_t> members;
  for (const auto& item : set) {
    if (!item.is_string()) throw ValidationError("\"set\" must be a list of point names");
    members.push_back(point_index(points, item.get<std::string>()));
  }
  return make_point_set(std::move(members), points.size());
}

Json to_json(const PointSet& set, const std::vector<std::string>& points) {
  Json out = Json::array();
  for (std::size_t i : set) out.push_back(points[i]);
  return Json{{"set", out}};
}

ConvexSet convex_set_from_json(const Json& j, const std::vector<std::string>& points) {
  check_space_reference(j, points);
  const Json& gens = field(j, "generators");
  if (!gens.is_array()) throw ValidationError("\"generators\" must be a list of distributions");
  std::vector<Distribution> out;
  for (const auto& g : gens) out.push_back(distribution_from_json(g, points));
  return ConvexSet(std::move(out));
}

Coalgebra coalgebra_from_json(const Json& j) {
  Coalgebra c;
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "markov_chain") {
    c.kind = CoalgebraKind::markov_chain;
  } else if (kind == "labelled_markov_chain") {
    c.kind = CoalgebraKind::labelled_markov_chain;
  } else if (kind == "convex_automaton") {
    c.kind = CoalgebraKind::convex_automaton;
  } else {
    throw ValidationError("unknown coalgebra kind \"" + kind + "\"");
  }
  c.states = names(j, "states");
  const Json& gamma = field(j, "gamma");
  for (const auto& s : c.states) {
    if (!gamma.contains(s)) throw ValidationError("state \"" + s + "\" has no transition");
    const Json& step = gamma.at(s);
    switch (c.kind) {
      case CoalgebraKind::markov_chain:
        c.next.push_back(distribution_from_json(step, c.states));
        break;
      case CoalgebraKind::labelled_markov_chain:
        c.output.push_back(rational_from_json(field(step, "out")));
        c.next.push_back(distribution_from_json(field(step, "next"), c.states));
        break;
      case CoalgebraKind::convex_automaton:
        c.choices.push_back(convex_set_from_json(step, c.states));
        break;
    }
  }
  c.validate();
  return c;
}

Modality modality_from_json(const Json& j) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name == "expectation") return Modality::expectation();
    if (name == "sup") return Modality::sup();
    if (name == "inf") return Modality::inf();
    if (name == "generally") return Modality::generally();
    if (name == "convex_sup_expectation") return Modality::convex_sup_expectation();
    throw ValidationError("unknown modality \"" + name + "\"");
  }
  if (j.is_object() && j.contains("p_moment")) {
    const int digits = j.contains("digits") ? j.at("digits").get<int>() : kDefaultDecimalDigits;
    return Modality::p_moment(rational_from_json(j.at("p_moment")), digits);
  }
  throw ValidationError("unknown modality " + j.dump());
}

Modality parse_modality(const std::string& text) {
  if (!text.empty() && text.front() == '{') {
    try {
      return modality_from_json(Json::parse(text));
    } catch (const Json::parse_error& e) {
      throw ValidationError("modality is not valid JSON: " + std::string(e.what()));
    }
  }
  const std::string prefix = "p_moment:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string rest = text.substr(prefix.size());
    const auto colon = rest.find(':');
    if (colon == std::string::npos) return Modality::p_moment(parse_rational(rest));
    int digits = 0;
    try {
      digits = std::stoi(rest.substr(colon + 1));
    } catch (const std::exception&) {
      throw ValidationError("bad precision in \"" + text + "\"");
    }
    return Modality::p_moment(parse_rational(rest.substr(0, colon)), digits);
  }
  return modality_from_json(Json(text));
}

Json to_json(const FuzzyPredicate& f, const std::vector<std::string>& points) {
  Json out = Json::object();
  for (std::size_t i = 0; i < f.size(); ++i) out[points[i]] = to_string(f[i]);
  return out;
}

Json to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const Coupling& c, const std::vector<std::string>& xs, const std::vector<std::string>& ys) {
  Json support = Json::array();
  for (const auto& [x, y] : c.support()) support.push_back({xs[x], ys[y], to_string(c.joint()(x, y))});
  return Json{{"joint", to_json(c.joint())}, {"support", support}};
}

Json to_json(const LiftedValue& v, const std::vector<std::string>& xs, const std::vector<std::string>& ys,
             int digits, bool with_witness) {
  Json out;
  out["value"] = scalar_to_json(v.value, digits);
  out["exactness"] = to_string(v.exactness);
  if (v.upper) out["upper_bound"] = scalar_to_json(*v.upper, digits);
  if (v.epsilon_star) out["epsilon_star"] = to_string(*v.epsilon_star);
  if (v.margin) out["certified_margin"] = to_string(*v.margin);
  if (!with_witness) return out;
  if (const auto* c = std::get_if<Coupling>(&v.witness)) {
    out["witness"] = {{"coupling", to_json(*c, xs, ys)}};
  } else if (const auto* rel = std::get_if<PointCoupling>(&v.witness)) {
    Json pairs = Json::array();
    for (const auto& [x, y] : *rel) pairs.push_back({xs[x], ys[y]});
    out["witness"] = {{"relation", pairs}};
  } else if (const auto* f = std::get_if<FuzzyPredicate>(&v.witness)) {
    out["witness"] = {{"f", to_json(*f, xs)}};
  } else if (const auto* pair = std::get_if<NonexpansivePair>(&v.witness)) {
    out["witness"] = {{"f", to_json(pair->f, xs)}, {"g", to_json(pair->g, ys)}};
  }
  return out;
}

Json to_json(const HkResult& hk, const std::vector<std::string>& points) {
  Json out;
  out["algorithm"] = hk.algorithm;
  out["value"] = scalar_to_json(hk.value);
  auto direction = [&](const DirectionWitness& w) {
    Json coefficients = Json::array();
    for (const auto& c : w.coefficients) coefficients.push_back(to_string(c));
    return Json{{"generator", w.generator},
                {"value", to_string(w.value)},
                {"coefficients", coefficients},
                {"nearest", to_json(w.nearest, points)}};
  };
  if (hk.a_to_b) out["a_to_b"] = direction(*hk.a_to_b);
  if (hk.b_to_a) out["b_to_a"] = direction(*hk.b_to_a);
  if (hk.dual) out["dual"] = to_json(*hk.dual, points);
  return out;
}

Json to_json(const CrispPricePair& pair, const std::vector<std::string>& xs, const std::vector<std::string>& ys) {
  return Json{{"p", to_json(pair.p, xs)},
              {"q", to_json(pair.q, ys)},
              {"margin", to_string(pair.margin)},
              {"transport_cost", to_string(pair.transport_cost)}};
}

Json to_json(const DualityWitness& w, const std::vector<std::string>& xs, const std::vector<std::string>& ys) {
  return Json{{"epsilon", to_string(w.epsilon)},
              {"low", to_string(w.a)},
              {"high", to_string(Rational(w.a + w.epsilon))},
              {"f", to_json(w.pair.f, xs)},
              {"g", to_json(w.pair.g, ys)},
              {"margin", to_string(w.margin)},
              {"crisp", to_json(w.crisp, xs, ys)}};
}

}  // namespace liftlab
