#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "crystals/demazure.hpp"
#include "crystals/graph.hpp"
#include "crystals/path.hpp"
#include "crystals/schedule.hpp"

namespace {

using namespace crystals;

struct CommonOpts {
    std::string family = "A1";
    int n = 3;
    int k = 1;
    int l = 1;
    std::string lambda_csv;      // empty means l*Lambda_0
    std::string schedule_file;   // JSON file; overrides the builtin table
    std::string variant;         // builtin variant selector
    std::size_t budget = 0;
    std::string out;             // output file; empty means stdout
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_schedule = true) {
    cmd->add_option("--family", o.family, "family tag (A1,B1,C1,D1,A2odd,A2even,D2)");
    cmd->add_option("--n", o.n, "rank");
    cmd->add_option("--k", o.k, "column height (type A only)");
    cmd->add_option("--l", o.l, "level");
    cmd->add_option("--lambda", o.lambda_csv, "highest weight coefficients m0,m1,...");
    cmd->add_option("--budget", o.budget, "closure element cap");
    cmd->add_option("--out", o.out, "write output to this file instead of stdout");
    if (with_schedule) {
        cmd->add_option("--schedule", o.schedule_file, "schedule JSON file");
        cmd->add_option("--variant", o.variant,
                        "builtin schedule variant (formula, intro, alt)");
    }
}

Weight parse_weight(const AffineType& t, const std::string& csv, int l) {
    if (csv.empty()) return multiple_of_fundamental(t, 0, l);
    Weight w;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) w.push_back(std::stoi(tok));
    if (static_cast<int>(w.size()) != t.n + 1)
        throw CLI::ValidationError("--lambda needs " + std::to_string(t.n + 1) +
                                   " coefficients");
    return w;
}

Schedule resolve_schedule(const CommonOpts& o, const AffineType& t, const Weight& lambda) {
    if (!o.schedule_file.empty()) {
        std::ifstream in(o.schedule_file);
        if (!in) throw CLI::ValidationError("cannot read schedule file " + o.schedule_file);
        std::stringstream ss;
        ss << in.rdbuf();
        return schedule_from_json(ss.str());
    }
    return builtin_schedule(t, lambda, o.k, o.variant);
}

void emit(const CommonOpts& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream f(o.out);
        f << text;
    }
}

int run(int argc, char** argv) {
    CLI::App app{"perfect crystals, paths, and Demazure subsets for classical affine families"};
    app.require_subcommand(1);

    CommonOpts g_opt;
    std::string g_format = "dot";
    auto* graph_cmd = app.add_subcommand("graph", "emit the full crystal graph");
    add_common(graph_cmd, g_opt, false);
    graph_cmd->add_option("--format", g_format, "dot or json")
        ->check(CLI::IsMember({"dot", "json"}));

    CommonOpts d_opt;
    int d_steps = 0, d_kappa = 1;
    std::string d_format = "json";
    auto* dem_cmd = app.add_subcommand("demazure", "enumerate a Demazure path set");
    add_common(dem_cmd, d_opt);
    dem_cmd->add_option("--steps", d_steps, "Weyl word length k")->required();
    dem_cmd->add_option("--kappa", d_kappa, "mixing index (1 or 2)")
        ->check(CLI::IsMember({1, 2}));
    dem_cmd->add_option("--format", d_format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    CommonOpts v_opt;
    int v_jmax = 1;
    bool v_kappa2 = false;
    auto* ver_cmd = app.add_subcommand("verify", "run the condition checks");
    add_common(ver_cmd, v_opt);
    ver_cmd->add_option("--jmax", v_jmax, "check j = 1..jmax")->required();
    ver_cmd->add_flag("--kappa2", v_kappa2, "check (II') and (III) instead of (II)(III)(IV')");

    CommonOpts o_opt;
    int o_steps = 0;
    auto* orc_cmd = app.add_subcommand(
        "oracle", "compare the direct recursion against the tensor-form path sets");
    add_common(orc_cmd, o_opt);
    orc_cmd->add_option("--steps", o_steps, "compare for k = 0..steps")->required();

    CommonOpts p_opt;
    auto* per_cmd = app.add_subcommand("perfect", "perfectness report");
    add_common(per_cmd, p_opt, false);

    CommonOpts e_opt;
    int e_dmax = 0;
    auto* exp_cmd = app.add_subcommand("experiment", "experimental searches");
    auto* k2_cmd = exp_cmd->add_subcommand(
        "kappa2", "search for single- and two-slot closure sequences");
    add_common(k2_cmd, e_opt, false);
    k2_cmd->add_option("--dmax", e_dmax, "sequence length bound (default 2n)");

    CommonOpts i_opt;
    int i_L = 1;
    auto* inv_cmd = app.add_subcommand("invariance", "classical invariance check");
    add_common(inv_cmd, i_opt);
    inv_cmd->add_option("--L", i_L, "number of d-blocks")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ? 0 : 2;
    }

    try {
        if (graph_cmd->parsed()) {
            AffineType t(family_from_name(g_opt.family), g_opt.n);
            auto B = make_crystal(t, g_opt.l, g_opt.k);
            std::vector<int> labels(t.index_count());
            for (int i = 0; i <= t.n; ++i) labels[i] = i;
            auto graph = build_graph(*B, B->elements(), labels,
                                     g_opt.budget ? g_opt.budget : default_budget());
            emit(g_opt, g_format == "dot" ? graph_to_dot(graph) : graph_to_json(graph));
            return 0;
        }

        if (dem_cmd->parsed()) {
            AffineType t(family_from_name(d_opt.family), d_opt.n);
            auto B = make_crystal(t, d_opt.l, d_opt.k);
            Weight lambda = parse_weight(t, d_opt.lambda_csv, d_opt.l);
            DemazureContext ctx{B.get(), lambda, resolve_schedule(d_opt, t, lambda),
                                d_opt.budget};
            auto paths = demazure_paths(ctx, d_steps, d_kappa);
            PathSpace spec = ctx.space();
            if (d_format == "text") {
                std::ostringstream os;
                for (const auto& p : paths) os << path_to_string(spec, p) << "\n";
                os << "count: " << paths.size() << "\n";
                emit(d_opt, os.str());
            } else {
                nlohmann::json out;
                out["count"] = paths.size();
                out["paths"] = nlohmann::json::array();
                for (const auto& p : paths)
                    out["paths"].push_back(nlohmann::json::parse(path_to_json(spec, p)));
                out["character"] =
                    nlohmann::json::parse(character_to_json(character(spec, paths)));
                emit(d_opt, out.dump(2));
            }
            return 0;
        }

        if (ver_cmd->parsed()) {
            AffineType t(family_from_name(v_opt.family), v_opt.n);
            auto B = make_crystal(t, v_opt.l, v_opt.k);
            Weight lambda = parse_weight(t, v_opt.lambda_csv, v_opt.l);
            DemazureContext ctx{B.get(), lambda, resolve_schedule(v_opt, t, lambda),
                                v_opt.budget};
            auto rep = v_kappa2 ? check_conditions_kappa2(ctx, v_jmax)
                                : check_conditions(ctx, v_jmax);
            emit(v_opt, rep.to_json());
            return rep.pass() ? 0 : 1;
        }

        if (orc_cmd->parsed()) {
            AffineType t(family_from_name(o_opt.family), o_opt.n);
            auto B = make_crystal(t, o_opt.l, o_opt.k);
            Weight lambda = parse_weight(t, o_opt.lambda_csv, o_opt.l);
            DemazureContext ctx{B.get(), lambda, resolve_schedule(o_opt, t, lambda),
                                o_opt.budget};
            for (int k = 0; k <= o_steps; ++k) {
                auto lhs = recursive_oracle(ctx, k);
                auto rhs = demazure_paths(ctx, k, 1);
                if (lhs != rhs) {
                    nlohmann::json out;
                    out["k"] = k;
                    out["recursive_count"] = lhs.size();
                    out["tensor_count"] = rhs.size();
                    emit(o_opt, out.dump(2));
                    return 1;
                }
            }
            emit(o_opt, "{\"equal\": true, \"k_max\": " + std::to_string(o_steps) + "}");
            return 0;
        }

        if (per_cmd->parsed()) {
            AffineType t(family_from_name(p_opt.family), p_opt.n);
            auto B = make_crystal(t, p_opt.l, p_opt.k);
            auto rep = check_perfectness(*B);
            nlohmann::json out;
            out["perfect"] = rep.ok;
            out["detail"] = rep.detail;
            emit(p_opt, out.dump(2));
            return rep.ok ? 0 : 1;
        }

        if (k2_cmd->parsed()) {
            AffineType t(family_from_name(e_opt.family), e_opt.n);
            auto B = make_crystal(t, e_opt.l, e_opt.k);
            Weight lambda = parse_weight(t, e_opt.lambda_csv, e_opt.l);
            const int dmax = e_dmax > 0 ? e_dmax : 2 * t.n;
            auto r1 = search_schedule_kappa1(*B, lambda, dmax, e_opt.budget);
            auto r2 = search_schedule_kappa2(*B, lambda, dmax, e_opt.budget);
            nlohmann::json out;
            out["kappa1"] = {{"found", r1.found}, {"detail", r1.detail}};
            if (r1.found)
                out["kappa1"]["schedule"] = nlohmann::json::parse(schedule_to_json(r1.sched));
            out["kappa2"] = {{"found", r2.found}, {"detail", r2.detail}};
            if (r2.found)
                out["kappa2"]["schedule"] = nlohmann::json::parse(schedule_to_json(r2.sched));
            emit(e_opt, out.dump(2));
            return 0;
        }

        if (inv_cmd->parsed()) {
            AffineType t(family_from_name(i_opt.family), i_opt.n);
            auto B = make_crystal(t, i_opt.l, i_opt.k);
            Weight lambda = parse_weight(t, i_opt.lambda_csv, i_opt.l);
            DemazureContext ctx{B.get(), lambda, resolve_schedule(i_opt, t, lambda),
                                i_opt.budget};
            auto rep = classical_invariance_check(ctx, i_L);
            nlohmann::json out;
            out["ok"] = rep.ok;
            out["i_L"] = rep.i_L;
            out["cardinality"] = rep.cardinality;
            out["expected"] = rep.expected;
            out["characters_equal"] = rep.characters_equal;
            out["detail"] = rep.detail;
            emit(i_opt, out.dump(2));
            return rep.ok ? 0 : 1;
        }
    } catch (const ConditionError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
