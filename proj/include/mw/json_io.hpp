#ifndef MW_JSON_IO_HPP
#define MW_JSON_IO_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mw/multi_order.hpp"
#include "mw/rational.hpp"
#include "mw/riesz.hpp"
#include "mw/wedge.hpp"

namespace mw {

using Json = nlohmann::json;

/// Input that does not match the expected schema.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Rationals are written as "p/q" strings; integers are also accepted on input.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json vector_to_json(const QVector& v);
/// expected_dim < 0 accepts any length.
QVector vector_from_json(const Json& j, Index expected_dim = -1);

Json vectors_to_json(const std::vector<QVector>& vs);
std::vector<QVector> vectors_from_json(const Json& j, Index expected_dim = -1);

/// { "dim", "generators", "halfspaces" } in canonical form.
Json wedge_to_json(const Wedge& w);
/// Either array may be omitted; if both are given they must describe the
/// same wedge.
Wedge wedge_from_json(const Json& j);

std::vector<Wedge> wedges_from_json(const Json& j);

/// [{ "apex", "wedge" }]
Json family_to_json(const Family& f);
Family family_from_json(const Json& j);

/// { "witness", "lineality" }
Json msup_set_to_json(const MultiSupSet& s);

/// { "rows", "cols", "entries" }
Json operator_to_json(const LinearOperator& t);
LinearOperator operator_from_json(const Json& j);

Json operators_to_json(const std::vector<LinearOperator>& ts);
std::vector<LinearOperator> operators_from_json(const Json& j);

/// { "wedges", "xs", "ys" }
Json rdp_instance_to_json(const RdpInstance& inst);
RdpInstance rdp_instance_from_json(const Json& j);

Json decomposition_to_json(const Decomposition& z);

/// { "representative", "lineality_ops" }
Json op_msup_to_json(const OperatorMSupResult& r);

/// Member lookup that reports a missing key as a FormatError.
const Json& field(const Json& j, const char* key);

}  // namespace mw

#endif  // MW_JSON_IO_HPP
