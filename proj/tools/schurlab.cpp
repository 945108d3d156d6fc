// schurlab: curvature positivity classes, Chern/Schur forms, positivity
// verdicts for (k,k)-forms, and the identity-verification suites, with JSON
// input and output throughout.

#include <CLI11.hpp>
#include <iostream>

#include "schurlab/classify.hpp"
#include "schurlab/extract.hpp"
#include "schurlab/generate.hpp"
#include "schurlab/json_io.hpp"
#include "schurlab/parallel.hpp"
#include "schurlab/positivity.hpp"
#include "schurlab/verify.hpp"

namespace {

using namespace schurlab;

std::vector<int> parse_axis_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item) - 1);
    }
    return out;
}

Partition parse_partition(const std::string& csv) {
    std::vector<int> parts;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        parts.push_back(std::stoi(item));
    }
    return Partition(parts);
}

// gen output bundles curvature and factorization; accept either shape.
Json unwrap(const Json& j, const char* key) { return j.contains(key) ? j.at(key) : j; }

struct GlobalOpts {
    uint64_t seed = 0;
    double tolerance = kDefaultCutoffRel;
    int threads = 0;
    std::string output;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"curvature positivity classes and Schur form positivity at a point"};
    app.require_subcommand(1);

    GlobalOpts global;
    app.add_option("--seed", global.seed, "root seed for all randomized work")->capture_default_str();
    app.add_option("--tolerance", global.tolerance,
                   "relative eigenvalue cutoff for float definiteness checks")
        ->capture_default_str();
    app.add_option("--threads", global.threads,
                   "worker threads (0 = auto; SCHURLAB_THREADS overrides)");
    app.add_option("--output", global.output, "output path (default stdout)");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a curvature instance of a positivity class");
    std::string gen_class = "nakano";
    int gen_n = 2, gen_r = 2;
    std::string u_axes, e1_axes;
    gen->add_option("--class", gen_class, "nakano|dual-nakano|type1|type2|decomposable")
        ->required();
    gen->add_option("--n", gen_n, "base dimension")->required();
    gen->add_option("--r", gen_r, "fiber rank")->required();
    gen->add_option("--u-axes", u_axes, "type1 split: comma list of base axes spanning U");
    gen->add_option("--e1-axes", e1_axes, "type2 split: comma list of fiber indices spanning E1");

    // chern
    auto* chern = app.add_subcommand("chern", "Chern forms of a curvature tensor");
    std::string chern_input;
    chern->add_option("input", chern_input, "curvature JSON path (- for stdin)")->required();

    // schur
    auto* schur = app.add_subcommand("schur", "Schur forms of a curvature tensor");
    std::string schur_input, schur_partition;
    int schur_all_k = 0;
    schur->add_option("input", schur_input, "curvature JSON path (- for stdin)")->required();
    schur->add_option("--partition", schur_partition, "comma-separated partition, e.g. 2,1");
    schur->add_option("--all-k", schur_all_k, "emit all partitions in Lambda(k,r) for k=1..K");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "positivity class verdicts");
    std::string classify_input, hint_type1, hint_type2;
    int cl_restarts = 64, cl_sweeps = 200;
    long cl_samples = 1000;
    classify_cmd->add_option("input", classify_input, "curvature JSON path (- for stdin)")
        ->required();
    classify_cmd->add_option("--hint-u-axes", hint_type1, "type1 split hint (comma list)");
    classify_cmd->add_option("--hint-e1-axes", hint_type2, "type2 split hint (comma list)");
    classify_cmd->add_option("--restarts", cl_restarts, "Griffiths search restarts");
    classify_cmd->add_option("--sweeps", cl_sweeps, "alternation sweeps per restart");
    classify_cmd->add_option("--samples", cl_samples, "pure random samples");

    // positivity
    auto* pos = app.add_subcommand("positivity", "positivity verdict for a real (k,k)-form");
    std::string pos_input, pos_mode = "positive";
    int pos_restarts = 64, pos_sweeps = 200;
    long pos_samples = 1000;
    pos->add_option("input", pos_input, "form JSON path (- for stdin)")->required();
    pos->add_option("--mode", pos_mode, "positive|nonneg|weak")->required();
    pos->add_option("--restarts", pos_restarts, "weak-positivity restarts");
    pos->add_option("--sweeps", pos_sweeps, "weak-positivity sweeps");
    pos->add_option("--samples", pos_samples, "weak-positivity random samples");

    // verify
    auto* verify = app.add_subcommand("verify", "run identity/positivity suites");
    std::string suite = "all";
    int trials = 20;
    verify->add_option("--suite", suite, "all|lr|fl|psi|nakano|type1|type2|criteria");
    verify->add_option("--trials", trials, "trials per suite")->capture_default_str();

    // global flags may follow the subcommand, e.g. `gen --class ... --seed 7`
    for (CLI::App* sub : {gen, chern, schur, classify_cmd, pos, verify}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        const int threads = resolve_threads(global.threads);
        if (gen->parsed()) {
            const auto cls = positivity_class_from_string(gen_class);
            if (!cls) throw std::invalid_argument("unknown class: " + gen_class);
            std::optional<SplitSpec> split;
            if (!u_axes.empty()) split = SplitSpec{SplitSpec::Kind::TypeI, parse_axis_list(u_axes)};
            if (!e1_axes.empty())
                split = SplitSpec{SplitSpec::Kind::TypeII, parse_axis_list(e1_axes)};
            const GenResult res = generate(*cls, gen_n, gen_r, global.seed, split);
            std::cerr << "split used: " << to_json(res.split).dump() << "\n";
            Json out{{"class", to_string(*cls)},   {"n", gen_n},
                     {"r", gen_r},                 {"seed", global.seed},
                     {"split", to_json(res.split)}, {"curvature", to_json(res.R)},
                     {"factorization", to_json(res.F)}};
            write_output(out, global.output);
            return 0;
        }
        if (chern->parsed()) {
            const CurvatureTensor R = curvature_from_json(unwrap(read_json_file(chern_input), "curvature"));
            Json forms = Json::array();
            for (const Form& c : chern_forms(R)) forms.push_back(to_json(c));
            write_output(Json{{"normalization", "2pi-dropped"}, {"chern", std::move(forms)}},
                         global.output);
            return 0;
        }
        if (schur->parsed()) {
            const CurvatureTensor R = curvature_from_json(unwrap(read_json_file(schur_input), "curvature"));
            const auto chern_seq = chern_forms(R);
            Json forms = Json::array();
            auto emit = [&](const Partition& lambda) {
                if (lambda.max_part() > R.r)
                    throw std::invalid_argument("partition " + lambda.to_string() +
                                                " not in Lambda(k," + std::to_string(R.r) + ")");
                forms.push_back(Json{{"lambda", Json(lambda.parts())},
                                     {"form", to_json(schur_form(lambda, chern_seq, R.n, R.r))}});
            };
            if (!schur_partition.empty()) {
                emit(parse_partition(schur_partition));
            } else if (schur_all_k > 0) {
                for (int k = 1; k <= schur_all_k; ++k)
                    for (const Partition& lambda : partitions_in(k, R.r)) emit(lambda);
            } else {
                throw std::invalid_argument("need --partition or --all-k");
            }
            write_output(Json{{"normalization", "2pi-dropped"}, {"forms", std::move(forms)}},
                         global.output);
            return 0;
        }
        if (classify_cmd->parsed()) {
            const CurvatureTensor R =
                curvature_from_json(unwrap(read_json_file(classify_input), "curvature"));
            std::optional<SplitSpec> hint;
            if (!hint_type1.empty())
                hint = SplitSpec{SplitSpec::Kind::TypeI, parse_axis_list(hint_type1)};
            if (!hint_type2.empty())
                hint = SplitSpec{SplitSpec::Kind::TypeII, parse_axis_list(hint_type2)};
            SearchBudget budget;
            budget.restarts = cl_restarts;
            budget.sweeps = cl_sweeps;
            budget.samples = cl_samples;
            budget.seed = global.seed;
            budget.cutoff_rel = global.tolerance;
            write_output(to_json(classify(R, hint, budget)), global.output);
            return 0;
        }
        if (pos->parsed()) {
            const Form u = form_from_json(unwrap(read_json_file(pos_input), "form"));
            PositivityVerdict verdict;
            Json extra;
            if (pos_mode == "positive") {
                verdict = is_positive(u, global.tolerance);
            } else if (pos_mode == "nonneg") {
                auto [v, dec] = is_nonnegative(u, global.tolerance);
                verdict = std::move(v);
                if (dec) {
                    Json terms = Json::array();
                    for (const auto& t : dec->terms)
                        terms.push_back(Json{{"weight", rational_to_string(t.weight)},
                                             {"alpha", to_json(t.alpha)}});
                    extra["decomposition"] = std::move(terms);
                }
            } else if (pos_mode == "weak") {
                SearchBudget budget;
                budget.restarts = pos_restarts;
                budget.sweeps = pos_sweeps;
                budget.samples = pos_samples;
                budget.seed = global.seed;
                budget.cutoff_rel = global.tolerance;
                verdict = is_weakly_positive(u, budget);
            } else {
                throw std::invalid_argument("unknown mode: " + pos_mode);
            }
            Json out = to_json(verdict);
            for (auto& [k, v] : extra.items()) out[k] = v;
            write_output(out, global.output);
            return (verdict.level == PosLevel::NotNonNegative ||
                    verdict.level == PosLevel::WeakCounterexample)
                       ? 2
                       : 0;
        }
        if (verify->parsed()) {
            SearchBudget budget;
            budget.seed = global.seed;
            budget.cutoff_rel = global.tolerance;
            std::vector<std::string> names;
            if (suite == "all") {
                names = suite_names();
            } else {
                names.push_back(suite);
            }
            Json reports = Json::array();
            bool all_green = true;
            for (const std::string& name : names) {
                const SuiteReport report = run_suite(name, trials, global.seed, budget, threads);
                all_green &= report.green();
                reports.push_back(to_json(report));
            }
            write_output(names.size() == 1 ? reports[0] : Json{{"reports", std::move(reports)}},
                         global.output);
            return all_green ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
