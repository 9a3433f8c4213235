// Command-line front end: every subcommand consumes JSON, emits a JSON
// report with a schema_version field, and exits 0 on success, 1 when a
// checked bound fails, 2 on malformed input, 3 on internal errors.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ccr/battery.hpp"
#include "ccr/decompose.hpp"
#include "ccr/fock.hpp"
#include "ccr/host_action.hpp"
#include "ccr/ideals.hpp"
#include "ccr/json_io.hpp"

namespace {

using ccr::Json;

constexpr int kSchemaVersion = 1;

struct RunConfig {
    std::vector<int> modes = {2, 2};
    int cutoff = 64;
    double tol_relation = 1e-12;
    double tol_distance = 1e-6;
    double tol_decomposition = 1e-8;
    unsigned long seed = 1;
    std::string out;
};

Json read_input(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream in(path);
        if (!in) throw ccr::SchemaError("cannot open input file: " + path);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ccr::SchemaError(std::string("invalid JSON: ") + e.what());
    }
}

void emit(const RunConfig& config, const Json& report) {
    const std::string text = report.dump(2) + "\n";
    if (config.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(config.out);
    if (!out) throw std::runtime_error("cannot open output file: " + config.out);
    out << text;
}

Json envelope(const char* command) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    return j;
}

Json run_darboux(const RunConfig& config, const Json& input) {
    const ccr::BilinearForm form = ccr::form_from_json(input);
    const ccr::DarbouxBasis basis = ccr::darboux_basis(form);

    bool exact = true;
    for (std::size_t i = 0; i < basis.pairs(); ++i)
        for (std::size_t j = 0; j < basis.pairs(); ++j) {
            exact = exact && form.eval(basis.p[i], basis.q[j]) == ccr::Rational(i == j ? 1 : 0);
            exact = exact && form.eval(basis.p[i], basis.p[j]) == 0;
            exact = exact && form.eval(basis.q[i], basis.q[j]) == 0;
        }

    const ccr::ComplexStructure I = ccr::complex_structure(form, basis);
    bool squares = true;
    for (std::size_t k = 0; k < basis.pairs(); ++k) {
        squares = squares && I.apply(basis.p[k]) == basis.q[k];
        squares = squares && I.apply(basis.q[k]) == ccr::negate(basis.p[k]);
    }

    Json report = envelope("darboux");
    Json p = Json::array(), q = Json::array();
    for (const auto& v : basis.p) p.push_back(ccr::rat_vector_to_json(v));
    for (const auto& v : basis.q) q.push_back(ccr::rat_vector_to_json(v));
    report["pairs"] = basis.pairs();
    report["p"] = std::move(p);
    report["q"] = std::move(q);
    report["relations_exact"] = exact;
    report["complex_structure_exact"] = squares;
    report["tolerance"] = 0.0;
    report["passed"] = exact && squares;
    (void)config;
    return report;
}

Json run_weyl_check(const RunConfig& config, const Json& input) {
    std::vector<int> moduli = {2, 3, 5, 7};
    if (input.is_object() && input.contains("moduli"))
        moduli = input.at("moduli").get<std::vector<int>>();

    Json report = envelope("weyl-check");
    Json finite = Json::array();
    bool ok = true;
    for (int d : moduli) {
        ccr::FiniteWeylSystem sys(d);
        double worst_relation = 0.0;
        double worst_unitary = 0.0;
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                const ccr::Mat w = ccr::weyl_matrix(sys, a, b);
                worst_unitary = std::max(
                    worst_unitary,
                    (w * w.adjoint() - ccr::Mat::Identity(d, d)).cwiseAbs().maxCoeff());
                for (int a2 = 0; a2 < d; ++a2)
                    for (int b2 = 0; b2 < d; ++b2) {
                        const ccr::Mat lhs = w * ccr::weyl_matrix(sys, a2, b2);
                        const ccr::Mat rhs = ccr::sigma_d(sys, a, b, a2, b2) *
                                             ccr::weyl_matrix(sys, a + a2, b + b2);
                        worst_relation =
                            std::max(worst_relation, (lhs - rhs).cwiseAbs().maxCoeff());
                    }
            }
        const int span = ccr::span_dimension(sys);
        ok = ok && worst_relation < config.tol_relation && span == d * d &&
             worst_unitary < config.tol_relation;
        finite.push_back(Json{{"d", d},
                              {"relation_error", worst_relation},
                              {"unitarity_error", worst_unitary},
                              {"span_dimension", span},
                              {"tolerance", config.tol_relation}});
    }
    report["finite"] = std::move(finite);

    const ccr::FockTruncation trunc(config.cutoff);
    const double fock_error = ccr::relation_error({1.0, 0.0}, {0.0, 1.0}, trunc);
    Json fock{{"cutoff", config.cutoff}, {"relation_error", fock_error}};
    if (config.cutoff >= 64) {
        fock["tolerance"] = 1e-6;
        ok = ok && fock_error < 1e-6;
    } else {
        fock["tolerance"] = nullptr;
    }
    report["fock"] = std::move(fock);
    report["passed"] = ok;
    return report;
}

ccr::TensorPolynomial eval_expr(const Json& node, const ccr::ModeModel& model,
                                const std::vector<ccr::TensorPolynomial>& values) {
    if (!node.is_object() || !node.contains("op"))
        throw ccr::SchemaError("expression nodes need an 'op'");
    const std::string op = node.at("op").get<std::string>();
    if (op == "ref") {
        const auto idx = node.at("index").get<std::size_t>();
        if (idx >= values.size()) throw ccr::SchemaError("ref index out of range");
        return values[idx];
    }
    const Json& args = node.contains("args") ? node.at("args") : Json::array();
    if (op == "mul") {
        if (args.size() < 2) throw ccr::SchemaError("mul needs at least two arguments");
        ccr::TensorPolynomial acc = eval_expr(args[0], model, values);
        for (std::size_t i = 1; i < args.size(); ++i)
            acc = ccr::poly_mul(model, acc, eval_expr(args[i], model, values));
        return acc;
    }
    if (op == "add") {
        ccr::TensorPolynomial acc;
        for (const auto& a : args) acc = ccr::poly_add(acc, eval_expr(a, model, values));
        return acc;
    }
    if (op == "star") {
        if (args.size() != 1) throw ccr::SchemaError("star takes one argument");
        return ccr::poly_star(eval_expr(args[0], model, values));
    }
    if (op == "scale") {
        if (args.size() != 1) throw ccr::SchemaError("scale takes one argument");
        return ccr::poly_scale(eval_expr(args[0], model, values),
                               ccr::complex_from_json(node.at("factor")));
    }
    throw ccr::SchemaError("unknown op: " + op);
}

Json run_tensor_calc(const RunConfig& config, const Json& input) {
    ccr::ModeModel model;
    if (input.contains("model")) {
        model = ccr::model_from_json(input.at("model"));
    } else {
        model.dims = config.modes;
    }
    std::vector<ccr::TensorPolynomial> values;
    for (const auto& v : input.contains("values") ? input.at("values") : Json::array()) {
        if (v.is_array())
            values.push_back(ccr::polynomial_from_json(v));
        else
            values.push_back(ccr::TensorPolynomial(ccr::tensor_from_json(v)));
    }
    const Json& expr = input.at("expr");

    Json report = envelope("tensor-calc");
    if (expr.is_object() && expr.value("op", "") == "eval") {
        const auto modes = expr.at("modes").get<std::size_t>();
        const ccr::TensorPolynomial arg = eval_expr(expr.at("args")[0], model, values);
        const ccr::Mat image = ccr::eval_on_modes(model, arg, modes);
        report["modes"] = modes;
        report["matrix"] = ccr::matrix_to_json(image);
        report["norm"] = ccr::operator_norm(image);
    } else {
        const ccr::TensorPolynomial out = eval_expr(expr, model, values);
        report["polynomial"] = ccr::polynomial_to_json(out);
        report["classes"] = [&] {
            Json classes = Json::array();
            for (const auto& [cls, list] : out.terms())
                classes.push_back(ccr::sequence_to_json(cls));
            return classes;
        }();
    }
    return report;
}

Json run_ideal_distance(const RunConfig& config, const Json& input) {
    const ccr::ModeModel model = ccr::model_from_json(input.at("model"));
    const ccr::ElementaryTensor c = ccr::tensor_from_json(input.at("C"));
    std::vector<ccr::SequenceClass> gens;
    for (const auto& g : input.at("ideal").at("generators"))
        gens.push_back(ccr::sequence_from_json(g));
    std::vector<ccr::TensorPolynomial> samples;
    for (const auto& s : input.contains("samples") ? input.at("samples") : Json::array())
        samples.push_back(ccr::polynomial_from_json(s));
    const auto modes = input.contains("modes") ? input.at("modes").get<std::size_t>()
                                               : model.dims.size();

    ccr::DistanceOptions opt;
    opt.seed = config.seed;
    opt.tolerance = config.tol_distance;
    opt.run_grid_oracle = input.value("oracle", samples.size() <= 1);

    ccr::DistanceResult res;
    try {
        res = ccr::distance_lower_bound(model, c, ccr::IdealDescriptor(gens), samples, modes, opt);
    } catch (const ccr::PreconditionViolation& e) {
        throw ccr::SchemaError(e.what());
    }

    Json report = envelope("ideal-distance");
    report["distance"] = res.distance;
    report["norm_C"] = res.norm_c;
    report["bound_satisfied"] = res.bound_satisfied;
    Json lambda = Json::array();
    for (const auto& l : res.lambda) lambda.push_back(ccr::complex_to_json(l));
    report["lambda_star"] = std::move(lambda);
    report["oracle_gap"] = res.oracle_gap ? Json(*res.oracle_gap) : Json(nullptr);
    report["strict_slot"] = res.strict_slot;
    report["tolerance"] = config.tol_distance;
    report["passed"] = res.bound_satisfied;
    return report;
}

ccr::ModeRepresentation rep_from_json(const Json& j, const RunConfig& config) {
    ccr::ModeModel model;
    if (j.contains("dims"))
        model.dims = j.at("dims").get<std::vector<int>>();
    else
        model.dims = config.modes;
    for (int d : model.dims)
        if (d < 2) throw ccr::SchemaError("mode dimensions must be >= 2");
    const int multiplicity = j.value("multiplicity", 1);
    auto rep = ccr::ModeRepresentation::standard(model, model.dims.size(), multiplicity);
    if (j.contains("conjugate_seed") && !j.at("conjugate_seed").is_null())
        rep = rep.conjugated(
            ccr::random_unitary(rep.dim(), j.at("conjugate_seed").get<unsigned long>()));
    if (j.contains("compress_class") && !j.at("compress_class").is_null()) {
        const ccr::SequenceClass cls = ccr::sequence_from_json(j.at("compress_class"));
        rep = rep.compressed(ccr::limit_projection(rep, cls, 0).matrix);
    }
    return rep;
}

Json run_regularity(const RunConfig& config, const Json& input) {
    const ccr::ModeRepresentation rep = rep_from_json(input.at("rep"), config);
    const ccr::SequenceClass cls = ccr::sequence_from_json(input.at("class"));
    const ccr::RegularityReport reg = ccr::regularity_criterion(rep, cls);

    Json report = envelope("regularity");
    report["criterion"] = reg.regular;
    report["ranks"] = reg.ranks;
    report["stabilization_index"] = reg.stabilization_index;
    report["dimension"] = rep.dim();
    return report;
}

Json run_decompose(const RunConfig& config, const Json& input) {
    std::vector<ccr::Mat> gens;
    if (input.contains("generators")) {
        for (const auto& g : input.at("generators")) gens.push_back(ccr::matrix_from_json(g));
    } else {
        const int d = input.at("d").get<int>();
        const int copies = input.value("copies", 1);
        if (d < 2 || copies < 1) throw ccr::SchemaError("need d >= 2 and copies >= 1");
        ccr::FiniteWeylSystem sys(d);
        const Eigen::Index n = static_cast<Eigen::Index>(d) * copies;
        for (auto [a, b] : {std::pair<int, int>{1, 0}, {0, 1}}) {
            ccr::Mat g = ccr::Mat::Zero(n, n);
            for (int c = 0; c < copies; ++c)
                g.block(c * d, c * d, d, d) = ccr::weyl_matrix(sys, a, b);
            gens.push_back(std::move(g));
        }
        if (input.contains("conjugate_seed") && !input.at("conjugate_seed").is_null()) {
            const ccr::Mat u =
                ccr::random_unitary(n, input.at("conjugate_seed").get<unsigned long>());
            for (auto& g : gens) g = u * g * u.adjoint();
        }
    }

    const ccr::DecompositionReport res = ccr::decompose(gens, config.seed);

    Json report = envelope("decompose");
    Json blocks = Json::array();
    for (const auto& b : res.blocks)
        blocks.push_back(Json{{"dimension", b.basis.cols()},
                              {"commutant_dimension", b.commutant_dimension},
                              {"equivalence_class", b.equivalence_class},
                              {"basis", ccr::matrix_to_json(b.basis)}});
    report["blocks"] = std::move(blocks);
    report["multiplicities"] = res.multiplicities;
    report["gram_error"] = res.gram_error;
    report["reconstruction_error"] = res.reconstruction_error;
    report["retries"] = res.retries;
    report["tolerance"] = config.tol_decomposition;
    report["passed"] =
        res.gram_error < 1e-10 && res.reconstruction_error < config.tol_decomposition;
    return report;
}

Json run_suite(const RunConfig& config) {
    const auto results = ccr::run_battery(config.seed);
    Json report = envelope("suite");
    Json rows = Json::array();
    bool all = true;
    for (const auto& r : results) {
        all = all && r.passed;
        rows.push_back(Json{{"name", r.name},
                            {"passed", r.passed},
                            {"observed", r.observed},
                            {"tolerance", r.tolerance},
                            {"seconds", r.seconds},
                            {"detail", r.detail}});
    }
    report["criteria"] = std::move(rows);
    report["all_passed"] = all;
    report["passed"] = all;
    return report;
}

void apply_config_file(const std::string& path, CLI::App& app, RunConfig& config) {
    if (path.empty()) return;
    const Json j = read_input(path);
    if (!j.is_object()) throw ccr::SchemaError("config file must be a JSON object");
    // Values from the file fill in whatever the command line left unset.
    if (j.contains("modes") && app.count("--modes") == 0)
        config.modes = j.at("modes").get<std::vector<int>>();
    if (j.contains("cutoff") && app.count("--cutoff") == 0)
        config.cutoff = j.at("cutoff").get<int>();
    if (j.contains("seed") && app.count("--seed") == 0)
        config.seed = j.at("seed").get<unsigned long>();
    if (j.contains("tol_relation") && app.count("--tol-relation") == 0)
        config.tol_relation = j.at("tol_relation").get<double>();
    if (j.contains("tol_distance") && app.count("--tol-distance") == 0)
        config.tol_distance = j.at("tol_distance").get<double>();
    if (j.contains("tol_decomposition")) config.tol_decomposition = j.at("tol_decomposition").get<double>();
    if (j.contains("out") && app.count("--out") == 0)
        config.out = j.at("out").get<std::string>();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"host-algebra verification workbench"};
    app.require_subcommand(1);

    RunConfig config;
    std::string input_path;
    std::string config_path;
    app.add_option("--modes", config.modes, "per-mode dimensions used when input omits them");
    app.add_option("--cutoff", config.cutoff, "ladder truncation level")->check(CLI::Range(8, 4096));
    app.add_option("--seed", config.seed, "seed for every randomized step");
    app.add_option("--tol-relation", config.tol_relation, "tolerance for algebraic relations");
    app.add_option("--tol-distance", config.tol_distance, "tolerance for norm distance bounds");
    app.add_option("--out", config.out, "write the JSON report to this file");
    app.add_option("--config", config_path, "JSON config supplying flags not given");

    auto* darboux = app.add_subcommand("darboux", "construct an exact paired basis");
    darboux->add_option("input", input_path, "input JSON (default stdin)");
    auto* weyl = app.add_subcommand("weyl-check", "verify discrete and truncated Weyl relations");
    weyl->add_option("input", input_path, "input JSON (default stdin; optional)");
    auto* tensor = app.add_subcommand("tensor-calc", "evaluate a tensor expression tree");
    tensor->add_option("input", input_path, "input JSON (default stdin)");
    auto* ideal = app.add_subcommand("ideal-distance", "optimize a norm distance to an ideal");
    ideal->add_option("input", input_path, "input JSON (default stdin)");
    auto* regularity = app.add_subcommand("regularity", "evaluate the projection criterion");
    regularity->add_option("input", input_path, "input JSON (default stdin)");
    auto* decompose_cmd = app.add_subcommand("decompose", "split a representation into blocks");
    decompose_cmd->add_option("input", input_path, "input JSON (default stdin)");
    auto* suite = app.add_subcommand("suite", "run the full verification battery");

    CLI11_PARSE(app, argc, argv);

    try {
        apply_config_file(config_path, app, config);

        Json report;
        if (darboux->parsed())
            report = run_darboux(config, read_input(input_path));
        else if (weyl->parsed())
            report = run_weyl_check(config, input_path.empty() ? Json::object()
                                                               : read_input(input_path));
        else if (tensor->parsed())
            report = run_tensor_calc(config, read_input(input_path));
        else if (ideal->parsed())
            report = run_ideal_distance(config, read_input(input_path));
        else if (regularity->parsed())
            report = run_regularity(config, read_input(input_path));
        else if (decompose_cmd->parsed())
            report = run_decompose(config, read_input(input_path));
        else if (suite->parsed())
            report = run_suite(config);

        emit(config, report);
        if (report.contains("passed") && !report.at("passed").get<bool>()) return 1;
        return 0;
    } catch (const ccr::SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        // precondition violations from op-level validation of the input
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const ccr::DegenerateForm& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
