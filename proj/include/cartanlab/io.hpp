#pragma once

// JSON serialization of subalgebra files and reports.

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cartanlab/cartan.hpp"
#include "cartanlab/classify.hpp"
#include "cartanlab/growth.hpp"
#include "cartanlab/properness.hpp"
#include "cartanlab/subalgebra.hpp"
#include "cartanlab/verdict.hpp"

namespace cartanlab {

using json = nlohmann::ordered_json;

inline const char* kToolVersion = "0.1.0";

// Integers as JSON numbers, anything else as an exact string ("1/2", "2*sqrt6").
inline json number_json(const Q6& v) {
  if (v.is_rational() && v.rational_part().get_den() == 1 && v.rational_part().get_num().fits_slong_p())
    return v.rational_part().get_num().get_si();
  return v.str();
}

inline Q6 number_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Q6(static_cast<long>(j.get<long long>()));
  if (j.is_number_float()) return Q6::parse(j.dump());  // shortest decimal form, taken exactly
  if (j.is_string()) {
    try {
      return Q6::parse(j.get<std::string>());
    } catch (const Error& e) {
      throw Error(ErrorCode::parse_error, field + ": " + e.what());
    }
  }
  throw Error(ErrorCode::parse_error, field + ": expected a number or numeric string");
}

inline json vector_json(const ExactVector& v) {
  json a = json::array();
  for (auto& e : v) a.push_back(number_json(e));
  return a;
}

inline json matrix_json(const ExactMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(number_json(m(i, j)));
    a.push_back(r);
  }
  return a;
}

inline ExactVector vector_from_json(const json& j, const std::string& field, std::size_t len) {
  if (!j.is_array()) throw Error(ErrorCode::parse_error, field + ": expected an array");
  if (j.size() != len)
    throw Error(ErrorCode::parse_error, field + ": expected " + std::to_string(len) + " entries, got " + std::to_string(j.size()));
  ExactVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(number_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  return v;
}

inline ExactMatrix matrix_from_json(const json& j, const std::string& field, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    throw Error(ErrorCode::parse_error, field + ": expected " + std::to_string(rows) + " rows");
  std::vector<ExactVector> rs;
  for (std::size_t i = 0; i < rows; ++i) rs.push_back(vector_from_json(j[i], field + "[" + std::to_string(i) + "]", cols));
  return rows_to_matrix(rs, cols);
}

inline json subalgebra_json(const Subalgebra& h) {
  json j;
  j["ambient"] = h.ambient().kind == AmbientKind::so2n ? "so2n" : "sl3";
  if (h.ambient().kind == AmbientKind::so2n) j["n"] = h.n();
  if (!h.label().empty()) j["label"] = h.label();
  if (h.reductive() != ReductiveKind::none) j["reductive"] = reductive_name(h.reductive());
  json basis = json::array();
  const bool coords = h.in_an();
  for (auto& b : h.basis()) {
    json e;
    if (coords) {
      const ANCoords& c = *b.coords();
      e["t1"] = number_json(c.t1);
      e["t2"] = number_json(c.t2);
      e["phi"] = number_json(c.phi);
      e["x"] = vector_json(c.x);
      e["y"] = vector_json(c.y);
      e["eta"] = number_json(c.eta);
    } else {
      e["matrix"] = matrix_json(b.matrix());
    }
    basis.push_back(e);
  }
  j["basis"] = basis;
  return j;
}

inline Subalgebra subalgebra_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::parse_error, "document: expected a JSON object");
  if (!j.contains("ambient") || !j["ambient"].is_string()) throw Error(ErrorCode::parse_error, "ambient: missing");
  std::string a = j["ambient"];
  Ambient amb;
  if (a == "so2n") {
    if (!j.contains("n") || !j["n"].is_number_integer()) throw Error(ErrorCode::parse_error, "n: missing integer");
    amb = so2n_ambient(j["n"].get<int>());
  } else if (a == "sl3") {
    amb = sl3_ambient();
  } else {
    throw Error(ErrorCode::parse_error, "ambient: expected \"so2n\" or \"sl3\"");
  }
  if (!j.contains("basis") || !j["basis"].is_array()) throw Error(ErrorCode::parse_error, "basis: missing array");
  const int n = amb.n;
  const std::size_t N = static_cast<std::size_t>(amb.size());
  std::vector<AlgElement> basis;
  for (std::size_t i = 0; i < j["basis"].size(); ++i) {
    const json& e = j["basis"][i];
    const std::string f = "basis[" + std::to_string(i) + "]";
    if (!e.is_object()) throw Error(ErrorCode::parse_error, f + ": expected an object");
    if (e.contains("matrix")) {
      basis.push_back(make_element(amb, matrix_from_json(e["matrix"], f + ".matrix", N, N)));
      continue;
    }
    if (amb.kind != AmbientKind::so2n) throw Error(ErrorCode::parse_error, f + ": sl3 elements need \"matrix\"");
    auto c = ANCoords::zero(n);
    auto scalar = [&](const char* k, Q6& out) {
      if (e.contains(k)) out = number_from_json(e[k], f + "." + k);
    };
    scalar("t1", c.t1);
    scalar("t2", c.t2);
    scalar("phi", c.phi);
    scalar("eta", c.eta);
    if (e.contains("x")) c.x = vector_from_json(e["x"], f + ".x", n - 2);
    if (e.contains("y")) c.y = vector_from_json(e["y"], f + ".y", n - 2);
    for (auto it = e.begin(); it != e.end(); ++it) {
      static const std::vector<std::string> known{"t1", "t2", "phi", "x", "y", "eta"};
      if (std::find(known.begin(), known.end(), it.key()) == known.end())
        throw Error(ErrorCode::parse_error, f + ": unknown field '" + it.key() + "'");
    }
    basis.push_back(an_element(n, c));
  }
  Subalgebra h = Subalgebra::make(amb, std::move(basis), j.value("label", std::string{}));
  if (j.contains("reductive")) {
    std::string r = j["reductive"];
    if (r == "SO(1,n)") h.set_reductive(ReductiveKind::so1n);
    else if (r == "SU(1,m)") h.set_reductive(ReductiveKind::su1m);
    else if (r == "L5") h.set_reductive(ReductiveKind::l5);
    else if (r != "none") throw Error(ErrorCode::parse_error, "reductive: unknown kind '" + r + "'");
  }
  return h;
}

inline Subalgebra parse_subalgebra(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::parse_error, std::string("JSON syntax: ") + e.what());
  }
  return subalgebra_from_json(j);
}

inline json window_json(const GrowthWindow& w) {
  json j;
  j["p"] = w.p;
  j["q"] = w.q;
  if (w.p_exact) j["p_exact"] = w.p_exact->str();
  if (w.q_exact) j["q_exact"] = w.q_exact->str();
  j["lower_correction"] = correction_name(w.lower);
  j["upper_correction"] = correction_name(w.upper);
  j["confidence"] = confidence_name(w.confidence);
  if (!w.notes.empty()) j["notes"] = w.notes;
  return j;
}

inline json type_json(const TypeVerdict& v) {
  json j;
  j["label"] = v.label;
  if (!v.aliases.empty()) j["aliases"] = v.aliases;
  j["n"] = v.n;
  j["dim"] = v.dim;
  j["dim_nil"] = v.dim_nil;
  j["semidirect"] = v.semidirect;
  j["normalized"] = v.normalized;
  if (v.exponent) j["exponent"] = v.exponent->str();
  if (v.p) j["p"] = v.p->str();
  if (v.omega) j["omega"] = root_name(*v.omega);
  if (v.gamma) j["gamma"] = root_name(*v.gamma);
  if (v.tau) j["tau"] = json::array({(*v.tau)[0].str(), (*v.tau)[1].str()});
  if (v.torus_kernel) j["torus_kernel"] = *v.torus_kernel;
  if (v.x0_basis) {
    json a = json::array();
    for (auto& r : *v.x0_basis) a.push_back(vector_json(r));
    j["x0_basis"] = a;
  }
  if (v.b) j["b"] = vector_json(*v.b);
  if (v.c) j["c"] = vector_json(*v.c);
  if (v.B) j["B"] = matrix_json(*v.B);
  if (!v.notes.empty()) j["notes"] = v.notes;
  return j;
}

inline json ck_json(const CKVerdict& v) {
  json j;
  j["verdict"] = ck_name(v.verdict);
  j["justification"] = v.justification;
  if (!v.notes.empty()) j["notes"] = v.notes;
  return j;
}

inline json properness_json(const PropernessReport& r) {
  json j;
  j["left"] = r.left;
  j["right"] = r.right;
  j["predicted"] = prediction_name(r.predicted);
  j["slope"] = r.slope;
  j["intercept"] = r.intercept;
  j["left_samples"] = r.left_samples;
  j["right_samples"] = r.right_samples;
  j["seed"] = r.seed;
  json a = json::array();
  for (auto& d : r.annuli)
    a.push_back({{"radius", d.radius}, {"distance", d.distance}, {"left_points", d.left_points},
                 {"right_points", d.right_points}});
  j["annuli"] = a;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

}  // namespace cartanlab
