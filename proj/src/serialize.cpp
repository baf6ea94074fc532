#include "quadharm/serialize.hpp"

#include <stdexcept>

namespace quadharm {

template <typename S>
nlohmann::json poly_to_json(const Poly<S>& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::json t;
    t["e"] = e.exponents();
    if constexpr (ScalarTraits<S>::exact) {
      t["c"] = ScalarTraits<S>::to_string(c);
    } else {
      t["c"] = c;
    }
    terms.push_back(std::move(t));
  }
  return terms;
}

Poly<Rational> poly_from_json(const nlohmann::json& terms, std::size_t n) {
  if (!terms.is_array()) throw std::invalid_argument("poly_from_json: expected an array of terms");
  Poly<Rational> p(n);
  for (const auto& t : terms) {
    const auto e = t.at("e").get<std::vector<MultiIndex::value_type>>();
    if (e.size() != n) throw std::invalid_argument("poly_from_json: exponent length != n");
    const auto& c = t.at("c");
    Rational value;
    if (c.is_string()) {
      value = parse_rational(c.get<std::string>());
    } else if (c.is_number_integer()) {
      value = Rational(c.get<long>());
    } else {
      throw std::invalid_argument("poly_from_json: exact coefficients must be strings or integers");
    }
    p.add_term(MultiIndex(e), value);
  }
  return p;
}

template <typename S>
nlohmann::json to_json(const SolutionDocument<S>& doc) {
  nlohmann::json j;
  j["n"] = doc.n;
  j["mode"] = ScalarTraits<S>::name;
  j["boundary"] = doc.boundary;
  j["surface"] = doc.surface;
  j["surface_kind"] = doc.surface_kind;
  j["h"] = poly_to_json(doc.decomposition.h);
  j["f"] = poly_to_json(doc.decomposition.f);
  if (doc.report) {
    nlohmann::json v;
    v["harmonic"] = doc.report->harmonic_ok;
    v["residual_zero"] = doc.report->residual_ok;
    if (doc.report->oracle_match) v["oracle_match"] = *doc.report->oracle_match;
    v["surface_nondegenerate"] = doc.report->surface_nondegenerate;
    v["notes"] = doc.report->notes;
    j["verify"] = std::move(v);
  }
  j["timing_ms"] = doc.timing_ms;
  return j;
}

FischerDecomposition<Rational> decomposition_from_json(const nlohmann::json& doc) {
  const std::size_t n = doc.at("n").get<std::size_t>();
  if (doc.contains("mode") && doc["mode"] != "exact") {
    throw std::invalid_argument("decomposition_from_json: only exact documents can be read back");
  }
  return {poly_from_json(doc.at("h"), n), poly_from_json(doc.at("f"), n)};
}

template nlohmann::json poly_to_json(const Poly<Rational>&);
template nlohmann::json poly_to_json(const Poly<double>&);
template nlohmann::json to_json(const SolutionDocument<Rational>&);
template nlohmann::json to_json(const SolutionDocument<double>&);

}  // namespace quadharm
