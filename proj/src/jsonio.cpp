#include "sclab/jsonio.hpp"

namespace sclab {

nlohmann::json ring_to_json(const RingSpec& ring) {
  nlohmann::json j;
  j["kind"] = ring.kind_name();
  if (ring.kind == RingKind::PrimeField) {
    j["modulus"] = std::to_string(ring.modulus ? ring.modulus : Fp::default_modulus());
  }
  if (ring.kind == RingKind::Symbolic) {
    std::vector<std::string> names;
    if (ring.vars) {
      for (std::size_t i = 0; i < ring.vars->size(); ++i) names.push_back(ring.vars->name(static_cast<VarIdx>(i)));
    }
    j["vars"] = names;
  }
  return j;
}

RingSpec ring_from_json(const nlohmann::json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "rational") return RingSpec::rational();
  if (kind == "fp") {
    std::uint64_t p = Fp::default_modulus();
    if (j.contains("modulus")) {
      const auto& m = j.at("modulus");
      p = m.is_string() ? std::stoull(m.get<std::string>()) : m.get<std::uint64_t>();
    }
    if (!is_prime_u64(p)) fail(ErrKind::ConfigError, "ring modulus is not prime");
    return RingSpec::prime_field(p);
  }
  if (kind == "symbolic") {
    auto vt = std::make_shared<VarTable>();
    if (j.contains("vars")) {
      for (const auto& n : j.at("vars")) vt->add(n.get<std::string>());
    }
    return RingSpec::symbolic(vt);
  }
  fail(ErrKind::ParseError, "unknown ring kind '" + kind + "'");
}

nlohmann::json matrix_to_json(const Mat& m) {
  nlohmann::json j;
  j["ring"] = ring_to_json(m.ring());
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 1; i <= m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int jj = 1; jj <= m.cols(); ++jj) row.push_back(m.at(i, jj).str(m.ring()));
    rows.push_back(row);
  }
  j["entries"] = rows;
  return j;
}

Mat matrix_from_json(const nlohmann::json& j, const RingSpec* default_ring) {
  RingSpec ring = j.contains("ring") ? ring_from_json(j.at("ring"))
                                     : (default_ring ? *default_ring : RingSpec::rational());
  int rows = j.at("rows").get<int>();
  int cols = j.at("cols").get<int>();
  Mat m(rows, cols, ring);
  const auto& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != rows) fail(ErrKind::ParseError, "matrix entries row count mismatch");
  for (int i = 0; i < rows; ++i) {
    const auto& row = entries.at(static_cast<std::size_t>(i));
    if (static_cast<int>(row.size()) != cols) fail(ErrKind::ParseError, "matrix entries column count mismatch");
    for (int c = 0; c < cols; ++c) {
      m.at(i + 1, c + 1) = Value::parse(row.at(static_cast<std::size_t>(c)).get<std::string>(), ring);
    }
  }
  return m;
}

}  // namespace sclab
