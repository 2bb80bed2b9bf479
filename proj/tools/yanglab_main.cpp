#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include <yanglab/dense.hpp>
#include <yanglab/descriptor.hpp>
#include <yanglab/matrix.hpp>
#include <yanglab/relations.hpp>
#include <yanglab/simplicity.hpp>
#include <yanglab/tensor.hpp>
#include <yanglab/wm.hpp>

using namespace yanglab;
using nlohmann::json;

namespace {

constexpr const char* kUsage = R"(yanglab - exact computations in Y(sl2) weight modules

usage: yanglab <command> [flags]

commands:
  act         apply a generator to a basis vector or weight vector
  relations   verify the defining relations on sample vectors
  bcoeff      table of ladder coefficients a(k), b(k) of a dense module
  matrix      matrix of a generator restricted to a weight space
  simplicity  closed-form simplicity verdict for V(mu,tau,b) (x) W_1(r)
  probe       windowed submodule search on V(mu,tau,b) (x) W_1(r)
  drinfeld    highest-weight series of W_m(a) vs its Drinfeld expansion
  dims        weight-space dimension table

flags:
  --module JSON|FILE   module descriptor (inline JSON or a file path)
  --mu, --tau, --bmu   dense module parameters (exact scalar strings)
  --r                  W_1 evaluation parameter
  --gen SYM            generator, e.g. X+0, X-2, H1
  --index JSON         basis index: integer or [left,right] pair
  --vector JSON        weight vector as emitted by act
  --weight RAT         source weight for matrix
  --K N                relation / series level bound       (default 3)
  --window N           ladder window                        (default 6)
  --format json|csv    output format                        (default json)
  --out FILE           write the report to FILE instead of stdout

exit codes: 0 ok, 2 validation error, 3 relation failure, 4 window error.
YANGLAB_THREADS caps the worker count of the parallel relation checker.
)";

struct Args {
    std::string command;
    std::map<std::string, std::string> flags;

    const std::string* find(const std::string& name) const {
        auto it = flags.find(name);
        return it == flags.end() ? nullptr : &it->second;
    }
    std::string require(const std::string& name) const {
        if (const std::string* v = find(name)) return *v;
        throw validation_error("missing required flag --" + name);
    }
    std::string value_or(const std::string& name, std::string fallback) const {
        const std::string* v = find(name);
        return v ? *v : std::move(fallback);
    }
    int int_or(const std::string& name, int fallback) const {
        const std::string* v = find(name);
        if (!v) return fallback;
        try {
            size_t used = 0;
            int n = std::stoi(*v, &used);
            if (used != v->size()) throw std::invalid_argument(*v);
            return n;
        } catch (const std::exception&) {
            throw validation_error("flag --" + name + " expects an integer, got '" + *v + "'");
        }
    }
};

Args parse_args(int argc, char** argv) {
    Args args;
    if (argc < 2) throw validation_error("no command given; run with --help");
    args.command = argv[1];
    for (int i = 2; i < argc; ++i) {
        std::string token = argv[i];
        if (token.rfind("--", 0) != 0)
            throw validation_error("unexpected argument '" + token + "'");
        std::string name = token.substr(2);
        std::string value;
        if (auto eq = name.find('='); eq != std::string::npos) {
            value = name.substr(eq + 1);
            name = name.substr(0, eq);
        } else {
            if (i + 1 >= argc) throw validation_error("flag --" + name + " expects a value");
            value = argv[++i];
        }
        if (!args.flags.emplace(name, value).second)
            throw validation_error("duplicate flag --" + name);
    }
    return args;
}

json load_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw validation_error("malformed JSON: " + text);
    return j;
}

std::shared_ptr<const Module> module_arg(const Args& args) {
    std::string text = args.require("module");
    if (!text.empty() && text[0] != '{') {  // a file path rather than inline JSON
        std::ifstream in(text);
        if (!in) throw validation_error("cannot open descriptor file '" + text + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    return module_from_descriptor(load_json(text));
}

std::shared_ptr<DenseModule> dense_arg(const Args& args) {
    Rational mu = Rational::parse(args.require("mu"));
    Rational tau = Rational::parse(args.require("tau"));
    QuadScalar b = QuadScalar::parse(args.require("bmu"), FieldContext(tau));
    return std::make_shared<DenseModule>(std::move(mu), std::move(tau), std::move(b));
}

std::shared_ptr<TensorModule> tensor_u_arg(const Args& args) {
    auto dense = dense_arg(args);
    QuadScalar r = QuadScalar::parse(args.require("r"), dense->context());
    return std::make_shared<TensorModule>(dense, std::make_shared<WmModule>(1, std::move(r)));
}

enum class Format { Json, Csv };

Format format_arg(const Args& args, bool csv_allowed) {
    std::string fmt = args.value_or("format", "json");
    if (fmt == "json") return Format::Json;
    if (fmt == "csv") {
        if (!csv_allowed)
            throw validation_error("csv format is only available for relations, bcoeff and dims");
        return Format::Csv;
    }
    throw validation_error("unknown format '" + fmt + "'");
}

void emit(const Args& args, const std::string& text) {
    if (const std::string* path = args.find("out")) {
        std::ofstream out(*path, std::ios::binary);
        if (!out) throw validation_error("cannot open output file '" + *path + "'");
        out << text;
    } else {
        std::cout << text;
    }
}

void emit(const Args& args, const json& doc) { emit(args, doc.dump(2) + "\n"); }

// ---- commands ------------------------------------------------------------

int cmd_act(const Args& args) {
    auto m = module_arg(args);
    GeneratorSymbol gen = GeneratorSymbol::parse(args.require("gen"));
    WeightVector v;
    if (const std::string* idx = args.find("index")) {
        v = WeightVector::unit(basis_index_from_json(load_json(*idx)));
    } else if (const std::string* vec = args.find("vector")) {
        v = weight_vector_from_json(load_json(*vec), m->context());
    } else {
        throw validation_error("act needs --index or --vector");
    }
    emit(args, weight_vector_to_json(apply_generator(*m, gen, v)));
    return 0;
}

int cmd_relations(const Args& args) {
    auto m = module_arg(args);
    unsigned K = static_cast<unsigned>(args.int_or("K", 3));
    int window = args.int_or("window", 6);
    auto reports = check_defining_relations(*m, K, m->basis_window(window));

    size_t failed = 0;
    for (const RelationReport& r : reports)
        if (!r.pass()) ++failed;
    std::string summary = failed == 0
        ? "PASS " + std::to_string(reports.size()) + "/" + std::to_string(reports.size())
        : "FAIL " + std::to_string(failed) + "/" + std::to_string(reports.size());

    if (format_arg(args, true) == Format::Csv) {
        std::ostringstream out;
        out << "relation,k,l,sign,index,pass\n";
        for (const RelationReport& r : reports) {
            out << relation_name(r.id) << ',' << r.k << ',' << r.l << ','
                << (r.sign == 0 ? "" : (r.sign > 0 ? "+" : "-")) << ','
                << '"' << r.index.str() << "\"," << (r.pass() ? "1" : "0") << '\n';
        }
        out << summary << '\n';
        emit(args, out.str());
    } else {
        json doc{{"module", descriptor_of(*m)},
                 {"K", K},
                 {"total", reports.size()},
                 {"failed", failed},
                 {"summary", summary}};
        json rep = json::array();
        for (const RelationReport& r : reports) rep.push_back(relation_report_to_json(r));
        doc["reports"] = std::move(rep);
        emit(args, doc);
    }
    std::cerr << summary << "\n";
    return failed == 0 ? 0 : 3;
}

int cmd_bcoeff(const Args& args) {
    auto m = dense_arg(args);
    int window = args.int_or("window", 6);
    if (format_arg(args, true) == Format::Csv) {
        std::ostringstream out;
        out << "k,a,b\n";
        for (long k = -window; k <= window; ++k)
            out << k << ',' << m->a_coeff(k).str() << ',' << m->b_coeff(k).str() << '\n';
        emit(args, out.str());
    } else {
        json rows = json::array();
        for (long k = -window; k <= window; ++k)
            rows.push_back(json{{"k", k}, {"a", m->a_coeff(k).str()}, {"b", m->b_coeff(k).str()}});
        emit(args, json{{"module", descriptor_of(*m)}, {"rows", rows}});
    }
    return 0;
}

int cmd_matrix(const Args& args) {
    auto m = module_arg(args);
    GeneratorSymbol gen = GeneratorSymbol::parse(args.require("gen"));
    Rational weight = Rational::parse(args.require("weight"));
    int window = args.int_or("window", 6);
    format_arg(args, false);
    Matrix mat = operator_matrix(*m, gen, weight, window);
    json doc = matrix_to_json(mat);
    doc["generator"] = gen.str();
    doc["weight"] = weight.str();
    emit(args, doc);
    return 0;
}

int cmd_simplicity(const Args& args) {
    Rational mu = Rational::parse(args.require("mu"));
    Rational tau = Rational::parse(args.require("tau"));
    FieldContext ctx(tau);
    QuadScalar b = QuadScalar::parse(args.require("bmu"), ctx);
    QuadScalar r = QuadScalar::parse(args.require("r"), ctx);
    format_arg(args, false);
    SimplicityVerdict v = simplicity_criterion(mu, tau, b, r);
    json doc = verdict_to_json(v);
    doc["mu"] = mu.str();
    doc["tau"] = tau.str();
    doc["b_mu"] = b.str();
    doc["r"] = r.str();
    emit(args, doc);
    return 0;
}

int cmd_probe(const Args& args) {
    auto u = tensor_u_arg(args);
    int window = args.int_or("window", 6);
    format_arg(args, false);
    auto ladder = submodule_probe(*u, window);
    json doc{{"module", descriptor_of(*u)}, {"window", window}, {"found", ladder.has_value()}};
    if (ladder) {
        json rungs = json::array();
        for (const LadderRung& rung : *ladder)
            rungs.push_back(json{{"weight", rung.weight.str()},
                                 {"vector", weight_vector_to_json(rung.vector)}});
        doc["ladder"] = std::move(rungs);
    } else {
        doc["ladder"] = nullptr;
    }
    emit(args, doc);
    return 0;
}

int cmd_drinfeld(const Args& args) {
    auto m = module_arg(args);
    const auto* wm = dynamic_cast<const WmModule*>(m.get());
    if (wm == nullptr) throw validation_error("drinfeld expects a wm module descriptor");
    unsigned K = static_cast<unsigned>(args.int_or("K", 3));
    format_arg(args, false);

    std::vector<QuadScalar> highest = wm_highest_series(wm->highest(), wm->evaluation(), K);
    std::vector<QuadScalar> expansion =
        drinfeld_series(DrinfeldPoly::for_wm(wm->highest(), wm->evaluation()), K);
    json hs = json::array(), ds = json::array();
    for (const QuadScalar& s : highest) hs.push_back(s.str());
    for (const QuadScalar& s : expansion) ds.push_back(s.str());
    emit(args, json{{"module", descriptor_of(*m)},
                    {"K", K},
                    {"highest_series", hs},
                    {"drinfeld_series", ds},
                    {"agree", highest == expansion}});
    return 0;
}

int cmd_dims(const Args& args) {
    auto m = module_arg(args);
    int window = args.int_or("window", 6);
    std::map<Rational, size_t> dims;
    for (const BasisIndex& i : m->basis_window(window)) ++dims[m->weight(i)];
    if (format_arg(args, true) == Format::Csv) {
        std::ostringstream out;
        out << "weight,dim\n";
        for (const auto& [w, d] : dims) out << w.str() << ',' << d << '\n';
        emit(args, out.str());
    } else {
        json rows = json::array();
        for (const auto& [w, d] : dims) rows.push_back(json{{"weight", w.str()}, {"dim", d}});
        emit(args, json{{"module", descriptor_of(*m)}, {"window", window}, {"dims", rows}});
    }
    return 0;
}

int run(const Args& args) {
    if (args.command == "act") return cmd_act(args);
    if (args.command == "relations") return cmd_relations(args);
    if (args.command == "bcoeff") return cmd_bcoeff(args);
    if (args.command == "matrix") return cmd_matrix(args);
    if (args.command == "simplicity") return cmd_simplicity(args);
    if (args.command == "probe") return cmd_probe(args);
    if (args.command == "drinfeld") return cmd_drinfeld(args);
    if (args.command == "dims") return cmd_dims(args);
    if (args.command == "--help" || args.command == "help") {
        std::cout << kUsage;
        return 0;
    }
    throw validation_error("unknown command '" + args.command + "'");
}

void emit_error(const char* kind, const std::string& message) {
    std::cerr << json{{"error", message}, {"kind", kind}}.dump() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(parse_args(argc, argv));
    } catch (const window_error& e) {
        emit_error("window", e.what());
        return 4;
    } catch (const validation_error& e) {
        emit_error("validation", e.what());
        return 2;
    } catch (const json::exception& e) {
        emit_error("validation", e.what());
        return 2;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return 1;
    }
}
