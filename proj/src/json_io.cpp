#include "logtor/json_io.hpp"

namespace logtor {

namespace {

std::vector<Rational> rational_vector(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(rational_from_json(v));
  return out;
}

}  // namespace

Json rational_to_json(const Rational& q) {
  if (den(q) == 1 && num(q) >= std::numeric_limits<long long>::min() &&
      num(q) <= std::numeric_limits<long long>::max())
    return Json(static_cast<long long>(num(q)));
  return Json(to_string(q));
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("rational must be an integer or a \"p/q\" string");
}

Json quadext_to_json(const QuadExt& q) {
  if (q.is_rational()) return rational_to_json(q.a());
  Json out;
  out["a"] = rational_to_json(q.a());
  out["b"] = rational_to_json(q.b());
  out["d"] = q.d().str();
  out["repr"] = q.str();
  return out;
}

MPoly mpoly_from_json(const Json& j) {
  if (!j.contains("shape") || !j.contains("degree") || !j.contains("terms"))
    throw std::invalid_argument("polynomial needs shape, degree and terms");
  Shape shape(j.at("shape").get<std::vector<int>>());
  MultiDegree degree(j.at("degree").get<std::vector<int>>());
  MPoly f(shape, degree);
  for (const auto& term : j.at("terms")) {
    const auto& exp_groups = term.at("exp");
    if (exp_groups.size() != shape.factors())
      throw std::invalid_argument("term exponents must be grouped per factor");
    std::vector<int> exp;
    for (std::size_t i = 0; i < exp_groups.size(); ++i) {
      auto group = exp_groups[i].get<std::vector<int>>();
      if (group.size() != shape.vars(i))
        throw std::invalid_argument("exponent group length does not match the factor");
      exp.insert(exp.end(), group.begin(), group.end());
    }
    Integer numv(term.at("num").is_string() ? Integer(term.at("num").get<std::string>())
                                            : Integer(term.at("num").get<long long>()));
    Integer denv = term.contains("den")
                       ? (term.at("den").is_string() ? Integer(term.at("den").get<std::string>())
                                                     : Integer(term.at("den").get<long long>()))
                       : Integer(1);
    if (denv == 0) throw std::invalid_argument("term denominator is zero");
    f.add_term(exp, Rational(numv, denv));
  }
  return f;
}

Json mpoly_to_json(const MPoly& f) {
  Json out;
  out["shape"] = f.shape().n;
  out["degree"] = f.degree().a;
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) {
    Json term;
    Json groups = Json::array();
    for (std::size_t i = 0; i < f.shape().factors(); ++i) {
      Json g = Json::array();
      for (std::size_t k = 0; k < f.shape().vars(i); ++k) g.push_back(e[f.shape().offset(i) + k]);
      groups.push_back(g);
    }
    term["exp"] = groups;
    // integer pairs; strings only when they would overflow a JSON number
    auto emit_int = [](const Integer& v) -> Json {
      if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return Json(static_cast<long long>(v));
      return Json(v.str());
    };
    term["num"] = emit_int(num(c));
    term["den"] = emit_int(den(c));
    terms.push_back(term);
  }
  out["terms"] = terms;
  return out;
}

Quadric quadric_from_json(const Json& j) {
  if (!j.contains("matrix")) throw std::invalid_argument("quadric needs a matrix");
  const auto& rows = j.at("matrix");
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto row = rational_vector(rows[i]);
    if (row.size() != m.cols()) throw std::invalid_argument("quadric matrix is ragged");
    for (std::size_t k = 0; k < row.size(); ++k) m(i, k) = row[k];
  }
  Quadric q(std::move(m));
  if (j.contains("dim") && j.at("dim").get<std::size_t>() != q.dim())
    throw std::invalid_argument("quadric dim does not match the matrix size");
  return q;
}

Json quadric_to_json(const Quadric& q) {
  Json out;
  out["dim"] = q.dim();
  Json rows = Json::array();
  for (std::size_t i = 0; i < q.matrix().rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < q.matrix().cols(); ++k) row.push_back(rational_to_json(q.matrix()(i, k)));
    rows.push_back(row);
  }
  out["matrix"] = rows;
  return out;
}

Hyperplane hyperplane_from_json(const Json& j) {
  if (j.is_array()) return Hyperplane(rational_vector(j));
  if (j.contains("h")) return Hyperplane(rational_vector(j.at("h")));
  throw std::invalid_argument("hyperplane must be an array or {\"h\": [...]}");
}

HArrangement arrangement_from_json(const Json& j) {
  if (!j.contains("r") || !j.contains("hyperplanes"))
    throw std::invalid_argument("arrangement needs r and hyperplanes");
  std::vector<Hyperplane> hs;
  for (const auto& h : j.at("hyperplanes")) hs.push_back(hyperplane_from_json(h));
  return HArrangement(j.at("r").get<int>(), std::move(hs));
}

SectionConfig section_config_from_json(const Json& j) {
  if (!j.contains("quadric") || !j.contains("hyperplanes"))
    throw std::invalid_argument("section configuration needs quadric and hyperplanes");
  std::vector<Hyperplane> hs;
  for (const auto& h : j.at("hyperplanes")) hs.push_back(hyperplane_from_json(h));
  return SectionConfig(quadric_from_json(j.at("quadric")), std::move(hs));
}

std::vector<CurveClass> curves_from_json(const Json& j) {
  const Json& arr = j.is_array() ? j : j.at("curves");
  std::vector<CurveClass> out;
  for (const auto& c : arr) {
    if (c.is_array() && c.size() == 2) {
      out.emplace_back(c[0].get<long long>(), c[1].get<long long>());
    } else if (c.contains("a") && c.contains("b")) {
      out.emplace_back(c.at("a").get<long long>(), c.at("b").get<long long>());
    } else {
      throw std::invalid_argument("curve class must be [a,b] or {\"a\":..,\"b\":..}");
    }
  }
  if (out.empty()) throw std::invalid_argument("arrangement of curves is empty");
  return out;
}

Json span_to_json(const Span& s) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < s.basis.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < s.basis.cols(); ++c) row.push_back(rational_to_json(s.basis(i, c)));
    rows.push_back(row);
  }
  Json out;
  out["degree"] = s.degree.a;
  out["dim"] = s.dim();
  out["rref"] = rows;
  return out;
}

namespace {

Json point_to_json(const std::vector<QuadExt>& pt) {
  Json out = Json::array();
  for (const auto& c : pt) out.push_back(quadext_to_json(c));
  return out;
}

}  // namespace

Json smoothness_to_json(const SmoothnessReport& r) {
  Json out;
  switch (r.status) {
    case SmoothnessReport::Status::Smooth:
      out["verdict"] = "Smooth";
      break;
    case SmoothnessReport::Status::Singular:
      out["verdict"] = "Singular";
      break;
    case SmoothnessReport::Status::ProbabilisticSmooth:
      out["verdict"] = "ProbabilisticSmooth";
      break;
  }
  out["provenance"] = r.exact ? "exact" : "probabilistic";
  if (r.witness_x) out["witness_x"] = point_to_json(*r.witness_x);
  if (r.witness_y) out["witness_y"] = point_to_json(*r.witness_y);
  if (!r.primes_used.empty()) out["primes"] = r.primes_used;
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

Json pencil_to_json(const PencilReport& r) {
  Json out;
  out["family_singular"] = r.family_singular;
  Json members = Json::array();
  for (const auto& m : r.members) {
    Json jm;
    jm["u"] = quadext_to_json(m.u);
    jm["v"] = quadext_to_json(m.v);
    jm["multiplicity"] = m.multiplicity;
    jm["provenance"] = m.verified ? "exact" : "unverified";
    if (!m.note.empty()) jm["note"] = m.note;
    members.push_back(jm);
  }
  out["members"] = members;
  if (!r.unresolved_factors.empty()) {
    Json fs = Json::array();
    for (const auto& p : r.unresolved_factors) {
      Json coeffs = Json::array();
      for (const auto& c : p.coeffs()) coeffs.push_back(rational_to_json(c));
      fs.push_back(coeffs);
    }
    out["unresolved_factors"] = fs;
  }
  return out;
}

}  // namespace logtor
