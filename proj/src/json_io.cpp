#include "mw/json_io.hpp"

namespace mw {

namespace {

[[noreturn]] void bad(const std::string& what) { throw FormatError(what); }

Index dim_from_json(const Json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad("dim must be a nonnegative integer");
  return static_cast<Index>(j.get<long long>());
}

}  // namespace

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with key \"") + key + "\"");
  const auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing key \"") + key + "\"");
  return *it;
}

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) bad("rational must be a string \"p/q\" or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
}

Json vector_to_json(const QVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(rational_to_json(v(i)));
  return out;
}

QVector vector_from_json(const Json& j, Index expected_dim) {
  if (!j.is_array()) bad("vector must be an array");
  if (expected_dim >= 0 && static_cast<Index>(j.size()) != expected_dim)
    bad("vector has length " + std::to_string(j.size()) + ", expected " +
        std::to_string(expected_dim));
  QVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = rational_from_json(j[i]);
  return v;
}

Json vectors_to_json(const std::vector<QVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(vector_to_json(v));
  return out;
}

std::vector<QVector> vectors_from_json(const Json& j, Index expected_dim) {
  if (!j.is_array()) bad("expected an array of vectors");
  std::vector<QVector> out;
  for (const auto& e : j) out.push_back(vector_from_json(e, expected_dim));
  return out;
}

Json wedge_to_json(const Wedge& w) {
  return {{"dim", w.dim()},
          {"generators", vectors_to_json(w.generators())},
          {"halfspaces", vectors_to_json(w.halfspaces())}};
}

Wedge wedge_from_json(const Json& j) {
  const Index n = dim_from_json(field(j, "dim"));
  const bool has_g = j.contains("generators"), has_h = j.contains("halfspaces");
  if (!has_g && !has_h) bad("wedge needs \"generators\" or \"halfspaces\"");
  if (!has_h) return Wedge::from_generators(n, vectors_from_json(j["generators"], n));
  if (!has_g) return Wedge::from_halfspaces(n, vectors_from_json(j["halfspaces"], n));
  Wedge w = Wedge::from_generators(n, vectors_from_json(j["generators"], n));
  if (!wedge_equal(w, Wedge::from_halfspaces(n, vectors_from_json(j["halfspaces"], n))))
    bad("generators and halfspaces describe different wedges");
  return w;
}

std::vector<Wedge> wedges_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of wedges");
  std::vector<Wedge> out;
  for (const auto& e : j) out.push_back(wedge_from_json(e));
  return out;
}

Json family_to_json(const Family& f) {
  Json out = Json::array();
  for (const auto& p : f) out.push_back({{"apex", vector_to_json(p.apex)}, {"wedge", wedge_to_json(p.wedge)}});
  return out;
}

Family family_from_json(const Json& j) {
  if (!j.is_array()) bad("family must be an array of {apex, wedge}");
  Family f;
  for (const auto& e : j) {
    Wedge w = wedge_from_json(field(e, "wedge"));
    QVector apex = vector_from_json(field(e, "apex"), w.dim());
    f.push_back({std::move(apex), std::move(w)});
  }
  return f;
}

Json msup_set_to_json(const MultiSupSet& s) {
  return {{"witness", vector_to_json(s.witness)}, {"lineality", vectors_to_json(s.lineality_basis)}};
}

Json operator_to_json(const LinearOperator& t) {
  Json rows = Json::array();
  for (Index r = 0; r < t.rows(); ++r) rows.push_back(vector_to_json(t.row(r).transpose()));
  return {{"rows", t.rows()}, {"cols", t.cols()}, {"entries", rows}};
}

LinearOperator operator_from_json(const Json& j) {
  const Index m = dim_from_json(field(j, "rows"));
  const Index n = dim_from_json(field(j, "cols"));
  const auto rows = vectors_from_json(field(j, "entries"), n);
  if (static_cast<Index>(rows.size()) != m) bad("operator entries do not match \"rows\"");
  LinearOperator t(m, n);
  for (Index r = 0; r < m; ++r) t.row(r) = rows[static_cast<std::size_t>(r)].transpose();
  return t;
}

Json operators_to_json(const std::vector<LinearOperator>& ts) {
  Json out = Json::array();
  for (const auto& t : ts) out.push_back(operator_to_json(t));
  return out;
}

std::vector<LinearOperator> operators_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of operators");
  std::vector<LinearOperator> out;
  for (const auto& e : j) out.push_back(operator_from_json(e));
  return out;
}

Json rdp_instance_to_json(const RdpInstance& inst) {
  Json ws = Json::array();
  for (const auto& w : inst.wedges) ws.push_back(wedge_to_json(w));
  return {{"wedges", ws}, {"xs", vectors_to_json(inst.xs)}, {"ys", vectors_to_json(inst.ys)}};
}

RdpInstance rdp_instance_from_json(const Json& j) {
  RdpInstance inst;
  inst.wedges = wedges_from_json(field(j, "wedges"));
  const Index n = inst.wedges.empty() ? -1 : inst.wedges.front().dim();
  inst.xs = vectors_from_json(field(j, "xs"), n);
  inst.ys = vectors_from_json(field(j, "ys"), n);
  return inst;
}

Json decomposition_to_json(const Decomposition& z) {
  Json out = Json::array();
  for (const auto& row : z) out.push_back(vectors_to_json(row));
  return out;
}

Json op_msup_to_json(const OperatorMSupResult& r) {
  return {{"representative", operator_to_json(r.representative)},
          {"lineality_ops", operators_to_json(r.lineality_ops)}};
}

}  // namespace mw
