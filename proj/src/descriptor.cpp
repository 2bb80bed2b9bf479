#include "yanglab/descriptor.hpp"

#include <nlohmann/json.hpp>

#include "yanglab/dense.hpp"
#include "yanglab/tensor.hpp"
#include "yanglab/wm.hpp"

namespace yanglab {

namespace {

using nlohmann::json;

std::string string_field(const json& j, const char* key) {
    if (!j.contains(key)) throw validation_error(std::string("descriptor missing field '") + key + "'");
    const json& v = j.at(key);
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw validation_error(std::string("descriptor field '") + key + "' must be a string or integer");
}

// A dense factor pins the extension to Q(sqrt(tau)); otherwise any sqrt(...)
// named by a scalar fixes it. Conflicts are rejected.
std::optional<FieldContext> scan_context(const json& j) {
    std::string type = string_field(j, "type");
    if (type == "dense") return FieldContext(Rational::parse(string_field(j, "tau")));
    if (type == "tensor") {
        auto l = scan_context(j.at("left"));
        auto r = scan_context(j.at("right"));
        if (l && r) return merge_contexts(*l, *r);
        return l ? l : r;
    }
    if (type == "wm") {
        QuadScalar a = QuadScalar::parse(string_field(j, "a"));
        if (!a.context().degenerate()) return a.context();
        return std::nullopt;
    }
    throw validation_error("unknown module type '" + type + "'");
}

std::shared_ptr<const Module> build(const json& j, const FieldContext& ctx) {
    std::string type = string_field(j, "type");
    if (type == "wm") {
        if (!j.contains("m") || !j.at("m").is_number_integer())
            throw validation_error("wm descriptor needs integer field 'm'");
        int m = j.at("m").get<int>();
        QuadScalar a = QuadScalar::parse(string_field(j, "a"), ctx);
        return std::make_shared<WmModule>(m, std::move(a));
    }
    if (type == "dense") {
        Rational mu = Rational::parse(string_field(j, "mu"));
        Rational tau = Rational::parse(string_field(j, "tau"));
        QuadScalar b = QuadScalar::parse(string_field(j, "b_mu"), FieldContext(tau));
        return std::make_shared<DenseModule>(std::move(mu), std::move(tau), std::move(b));
    }
    return std::make_shared<TensorModule>(build(j.at("left"), ctx), build(j.at("right"), ctx));
}

} // namespace

std::shared_ptr<const Module> module_from_descriptor(const json& j) {
    if (!j.is_object()) throw validation_error("module descriptor must be a JSON object");
    std::optional<FieldContext> ctx = scan_context(j);
    return build(j, ctx.value_or(FieldContext::rationals()));
}

nlohmann::json descriptor_of(const Module& m) {
    if (const auto* wm = dynamic_cast<const WmModule*>(&m)) {
        return json{{"type", "wm"}, {"m", wm->highest()}, {"a", wm->evaluation().str()}};
    }
    if (const auto* dense = dynamic_cast<const DenseModule*>(&m)) {
        return json{{"type", "dense"},
                    {"mu", dense->mu().str()},
                    {"tau", dense->tau().str()},
                    {"b_mu", dense->b_origin().str()}};
    }
    const auto& tensor = dynamic_cast<const TensorModule&>(m);
    return json{{"type", "tensor"},
                {"left", descriptor_of(tensor.left())},
                {"right", descriptor_of(tensor.right())}};
}

nlohmann::json basis_index_to_json(const BasisIndex& i) {
    if (!i.is_pair()) return i.slot();
    return json::array({basis_index_to_json(i.left()), basis_index_to_json(i.right())});
}

BasisIndex basis_index_from_json(const json& j) {
    if (j.is_number_integer()) return BasisIndex(j.get<long>());
    if (j.is_array() && j.size() == 2)
        return BasisIndex::pair(basis_index_from_json(j[0]), basis_index_from_json(j[1]));
    throw validation_error("basis index must be an integer or a pair");
}

nlohmann::json weight_vector_to_json(const WeightVector& v) {
    json out = json::array();
    for (const auto& [i, c] : v.terms())
        out.push_back(json{{"index", basis_index_to_json(i)}, {"coeff", c.str()}});
    return out;
}

WeightVector weight_vector_from_json(const json& j, std::optional<FieldContext> ctx) {
    if (!j.is_array()) throw validation_error("weight vector must be a JSON array");
    WeightVector v;
    for (const json& term : j) {
        v.add_term(basis_index_from_json(term.at("index")),
                   QuadScalar::parse(string_field(term, "coeff"), ctx));
    }
    return v;
}

nlohmann::json matrix_to_json(const Matrix& m) {
    json rows = json::array(), cols = json::array(), entries = json::array();
    for (const BasisIndex& i : m.row_labels) rows.push_back(basis_index_to_json(i));
    for (const BasisIndex& i : m.col_labels) cols.push_back(basis_index_to_json(i));
    for (const QuadScalar& e : m.entries) entries.push_back(e.str());
    return json{{"rows", m.rows()}, {"cols", m.cols()},
                {"row_labels", rows}, {"col_labels", cols}, {"entries", entries}};
}

nlohmann::json relation_report_to_json(const RelationReport& r) {
    json out{{"relation", relation_name(r.id)},
             {"k", r.k},
             {"l", r.l},
             {"index", basis_index_to_json(r.index)},
             {"pass", r.pass()},
             {"residual", weight_vector_to_json(r.residual)}};
    if (r.sign != 0) out["sign"] = r.sign > 0 ? "+" : "-";
    return out;
}

nlohmann::json verdict_to_json(const SimplicityVerdict& v) {
    json witnesses = json::array();
    for (const SimplicityWitness& w : v.witnesses)
        witnesses.push_back(json{{"sign", w.sign > 0 ? "+" : "-"},
                                 {"t", w.t.str()},
                                 {"b_critical", w.b_critical.str()}});
    return json{{"simple", v.simple},
                {"witnesses", witnesses},
                {"field_obstruction", v.field_obstruction}};
}

} // namespace yanglab
