#pragma once

#include <memory>
#include <nlohmann/json_fwd.hpp>

#include "yanglab/matrix.hpp"
#include "yanglab/relations.hpp"
#include "yanglab/simplicity.hpp"

namespace yanglab {

/// Builds a module from its JSON descriptor:
///   {"type":"wm","m":2,"a":"3/2"}
///   {"type":"dense","mu":"1","tau":"9","b_mu":"0"}
///   {"type":"tensor","left":{...},"right":{...}}
/// Rational fields accept integers or scalar strings. All scalars of one
/// descriptor must live in a single quadratic extension; a dense factor
/// pins it to Q(sqrt(tau)).
std::shared_ptr<const Module> module_from_descriptor(const nlohmann::json& j);

nlohmann::json descriptor_of(const Module& m);

nlohmann::json basis_index_to_json(const BasisIndex& i);
BasisIndex basis_index_from_json(const nlohmann::json& j);

/// ["index"/"coeff" records sorted by index order]
nlohmann::json weight_vector_to_json(const WeightVector& v);
WeightVector weight_vector_from_json(const nlohmann::json& j,
                                     std::optional<FieldContext> ctx = {});

nlohmann::json matrix_to_json(const Matrix& m);
nlohmann::json relation_report_to_json(const RelationReport& r);
nlohmann::json verdict_to_json(const SimplicityVerdict& v);

} // namespace yanglab
