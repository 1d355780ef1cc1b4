#include "pcg/census.hpp"
#include "pcg/construct.hpp"
#include "pcg/exact.hpp"
#include "pcg/graph.hpp"
#include "pcg/leaders.hpp"
#include "pcg/spectral.hpp"
#include "pcg/steering.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

// exit codes shared by all subcommands:
//   0 success / property holds, 1 property fails, 2 input error,
//   3 numerically indeterminate, 4 exact and numeric checkers disagree
constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;
constexpr int kExitIndeterminate = 3;
constexpr int kExitDisagreement = 4;

pcg::Graph load_or_exit(const std::string& path) {
    try {
        return pcg::load_graph_file(path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::exit(kExitInputError);
    }
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        std::exit(kExitInputError);
    }
    out << content;
}

std::string verdict_name(pcg::PcVerdict::Verdict v) {
    using V = pcg::PcVerdict::Verdict;
    switch (v) {
        case V::perfect: return "perfect";
        case V::not_perfect: return "not-perfect";
        case V::indeterminate_numeric: return "indeterminate-numeric";
    }
    return "?";
}

int run_check(const std::string& graph_path, const std::string& mode, double tol_gap, double tol_zero) {
    pcg::Graph g = load_or_exit(graph_path);
    pcg::SpectralReport report = pcg::eigendecompose(g);
    std::cout << "graph: n=" << g.node_count() << " m=" << g.edge_count() << "\n";
    std::cout << "spectrum: " << pcg::format_spectrum(report.eigenvalues) << "\n";

    std::optional<bool> exact_perfect;
    std::optional<pcg::PcVerdict> numeric;

    if (mode == "exact" || mode == "both") {
        pcg::ExactCertificate cert = pcg::check_perfect_exact(g);
        exact_perfect = cert.perfect;
        std::cout << "exact verdict: " << (cert.perfect ? "perfect" : "not-perfect") << "\n";
        std::cout << cert.render();
    }
    if (mode == "numeric" || mode == "both") {
        double effective_gap = tol_gap > 0 ? tol_gap : pcg::default_tol_gap(report);
        pcg::PcVerdict v = pcg::check_perfect_numeric(g, effective_gap, tol_zero);
        numeric = v;
        std::cout << "numeric verdict: " << verdict_name(v.verdict) << "\n";
        std::cout << "numeric margin: " << v.margin << " (tol_gap=" << effective_gap
                  << ", tol_zero=" << tol_zero << ")\n";
        if (v.reason == pcg::PcVerdict::Reason::repeated_eigenvalue)
            std::cout << "numeric witness: eigenvalues " << v.witness_eigenvalue_a << " and "
                      << v.witness_eigenvalue_b << "\n";
        if (v.reason == pcg::PcVerdict::Reason::zero_eigenvector_entry)
            std::cout << "numeric witness: eigenvalue " << v.witness_eigenvalue << ", node "
                      << v.witness_entry << "\n";
    }

    if (mode == "both" && numeric->verdict != pcg::PcVerdict::Verdict::indeterminate_numeric) {
        bool numeric_perfect = numeric->verdict == pcg::PcVerdict::Verdict::perfect;
        if (numeric_perfect != *exact_perfect) {
            std::cout << "verdict agreement: NO\n";
            return kExitDisagreement;
        }
        std::cout << "verdict agreement: yes\n";
    }
    if (exact_perfect) return *exact_perfect ? kExitOk : kExitNegative;
    switch (numeric->verdict) {
        case pcg::PcVerdict::Verdict::perfect: return kExitOk;
        case pcg::PcVerdict::Verdict::not_perfect: return kExitNegative;
        case pcg::PcVerdict::Verdict::indeterminate_numeric: return kExitIndeterminate;
    }
    return kExitOk;
}

int run_leaders(const std::string& graph_path, const std::string& set_arg, bool all, bool singletons) {
    pcg::Graph g = load_or_exit(graph_path);
    try {
        if (!set_arg.empty()) {
            pcg::LeaderSet s = pcg::LeaderSet::parse(set_arg, g.node_count());
            bool ok = pcg::kalman_controllable(pcg::partition_laplacian(g, s));
            std::cout << s.str() << " " << (ok ? "controllable" : "uncontrollable") << "\n";
            return ok ? kExitOk : kExitNegative;
        }
        if (all) {
            auto table = pcg::classify_all_leader_sets(g);
            std::uint64_t good = 0;
            for (const auto& [s, ok] : table) {
                std::cout << s.str() << " " << (ok ? "controllable" : "uncontrollable") << "\n";
                good += ok;
            }
            std::cout << "summary: " << good << "/" << table.size() << " controllable\n";
            return good == table.size() ? kExitOk : kExitNegative;
        }
        if (singletons) {
            bool all_good = true;
            for (int v = 1; v <= g.node_count(); ++v) {
                bool ok = pcg::kalman_controllable(pcg::partition_laplacian(g, pcg::LeaderSet({v})));
                std::cout << v << " " << (ok ? "controllable" : "uncontrollable") << "\n";
                all_good = all_good && ok;
            }
            // singleton sufficiency: leader monotonicity reduces Definition 1
            // to the n singleton checks
            std::cout << "perfectly controllable: " << (all_good ? "yes" : "no") << "\n";
            return all_good ? kExitOk : kExitNegative;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    std::cerr << "error: one of --set/--all/--singletons is required\n";
    return kExitInputError;
}

int run_construct(const std::string& script_path, const std::string& base_path,
                  const std::string& enumerate_stage) {
    pcg::Graph base = load_or_exit(base_path);
    std::ifstream in(script_path);
    if (!in) {
        std::cerr << "error: cannot open script: " << script_path << "\n";
        return kExitInputError;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        pcg::ConstructionScript script = pcg::parse_script(buf.str(), base);
        pcg::RunResult run = pcg::run_script(script);
        for (const auto& entry : run.log)
            std::cout << "# op " << entry.op_index << " " << entry.text << "\n";
        if (enumerate_stage.empty()) {
            std::cout << pcg::serialize_graph(run.graph);
            return kExitOk;
        }
        pcg::EnumerationResult variants =
            pcg::enumerate_variants(run.scheme, run.graph, pcg::parse_stage(enumerate_stage));
        std::cout << "# stage " << enumerate_stage << ": " << variants.graphs.size() << " variants\n";
        for (size_t i = 0; i < variants.graphs.size(); ++i) {
            pcg::ExactCertificate cert = pcg::check_perfect_exact(variants.graphs[i]);
            std::cout << "# variant " << (i + 1) << ": " << variants.notes[i] << " -> "
                      << (cert.perfect ? "perfect" : "not-perfect") << "\n";
            std::cout << pcg::serialize_graph(variants.graphs[i]);
        }
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

int run_census(int exhaustive_n, const std::string& random_arg) {
    try {
        if (exhaustive_n > 0) {
            pcg::CensusRow row = pcg::pc_census(exhaustive_n);
            std::cout << row.csv() << "\n";
            for (size_t i = 0; i < row.exemplars.size(); ++i) {
                std::cout << "# exemplar " << (i + 1) << "\n";
                std::cout << pcg::serialize_graph(row.exemplars[i]);
            }
            return kExitOk;
        }
        if (!random_arg.empty()) {
            std::istringstream ls(random_arg);
            int n;
            double p;
            std::uint64_t count, seed;
            char c1, c2, c3;
            if (!(ls >> n >> c1 >> p >> c2 >> count >> c3 >> seed) || c1 != ',' || c2 != ',' || c3 != ',') {
                std::cerr << "error: --random expects n,p,count,seed\n";
                return kExitInputError;
            }
            pcg::CensusRow row = pcg::random_census(n, p, count, seed);
            std::cout << row.csv() << "\n";
            if (row.total_graphs > 0)
                std::cout << "# perfect fraction: "
                          << static_cast<double>(row.perfect_graphs) / row.total_graphs << "\n";
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    std::cerr << "error: one of --n/--random is required\n";
    return kExitInputError;
}

int run_reconstruct(const std::string& spectrum_path, const std::string& overlay_path, double tol,
                    int base_nodes) {
    try {
        pcg::SpectrumTarget target = pcg::load_spectrum_file(spectrum_path);
        if (tol > 0) target.tolerance = tol;
        pcg::Graph overlay = pcg::load_graph_file(overlay_path);
        pcg::ReconstructionResult result = pcg::reconstruct_base(target, overlay, base_nodes);
        std::cout << "eigenvalue sum: " << result.trace_sum << "\n";
        if (!result.trace_consistent) {
            std::cout << "inconsistent: eigenvalue sum does not give an integer base edge count\n";
            return kExitInputError;
        }
        std::cout << "implied base edges: " << result.implied_base_edges << "\n";
        std::cout << "bases searched: " << result.bases_searched << "\n";
        std::cout << "candidates: " << result.candidates.size() << "\n";
        for (size_t i = 0; i < result.candidates.size(); ++i) {
            const auto& cand = result.candidates[i];
            Eigen::Map<const Eigen::VectorXd> spec(cand.spectrum.data(), cand.spectrum.size());
            std::cout << "# candidate " << (i + 1) << (i == 0 ? " (pinned)" : "") << ", spectrum "
                      << pcg::format_spectrum(spec) << ", exact "
                      << (cand.exact_perfect ? "perfect" : "not-perfect") << "\n";
            std::cout << pcg::serialize_graph(cand.base);
        }
        if (result.candidates.empty())
            std::cout << "irreproducible: no base matches the published spectrum at this tolerance\n";
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

int run_steer(const std::string& graph_path, const std::string& leaders_arg,
              const std::string& target_arg, const std::string& x0_arg, double horizon,
              const std::string& out_path) {
    pcg::Graph g = load_or_exit(graph_path);
    try {
        pcg::LeaderSet s = pcg::LeaderSet::parse(leaders_arg, g.node_count());
        pcg::FollowerSystem sys = pcg::follower_system(g, s);

        auto parse_vector = [&](const std::string& text, int expected) {
            std::vector<double> vals;
            std::istringstream ls(text);
            std::string token;
            while (std::getline(ls, token, ','))
                if (token.find_first_not_of(" \t") != std::string::npos) vals.push_back(std::stod(token));
            if (static_cast<int>(vals.size()) != expected)
                throw std::invalid_argument("expected " + std::to_string(expected) + " follower values, got " +
                                            std::to_string(vals.size()));
            return Eigen::Map<const Eigen::VectorXd>(vals.data(), vals.size()).eval();
        };
        Eigen::VectorXd target = parse_vector(target_arg, sys.follower_count());
        Eigen::VectorXd x0 = x0_arg.empty() ? Eigen::VectorXd::Zero(sys.follower_count()).eval()
                                            : parse_vector(x0_arg, sys.follower_count());

        pcg::SteeringResult result = pcg::steer(sys, x0, target, horizon);
        std::cout << "gramian condition: " << result.gramian_condition << "\n";
        if (result.status == pcg::SteeringResult::Status::uncontrollable_detected) {
            std::cout << "status: uncontrollable-detected\n";
            return kExitNegative;
        }
        std::cout << "status: steered\n";
        std::cout << "residual: " << result.residual << "\n";
        std::cout << "input energy: " << result.input_energy << "\n";
        if (!out_path.empty()) write_file(out_path, pcg::trajectory_csv(result.input_trajectory));
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

int run_export(const std::string& graph_path, const std::string& dot_path, const std::string& leaders_arg) {
    pcg::Graph g = load_or_exit(graph_path);
    try {
        std::vector<int> leaders;
        if (!leaders_arg.empty()) {
            pcg::LeaderSet s = pcg::LeaderSet::parse(leaders_arg, g.node_count());
            leaders = s.members();
        }
        std::string dot = pcg::to_dot(g, leaders);
        if (dot_path.empty() || dot_path == "-")
            std::cout << dot;
        else
            write_file(dot_path, dot);
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"perfectly controllable multi-agent graph toolkit"};
    app.require_subcommand(1);

    auto* check = app.add_subcommand("check", "decide perfect controllability of a graph");
    std::string check_path, check_mode = "both";
    double check_tol_gap = -1, check_tol_zero = pcg::kDefaultTolZero;
    check->add_option("graph", check_path, "graph file (edge list or JSON)")->required();
    check->add_option("--mode", check_mode, "exact|numeric|both")
        ->check(CLI::IsMember({"exact", "numeric", "both"}));
    check->add_option("--tol-gap", check_tol_gap, "eigengap tolerance (default 1e-8*max(1,lambda_max))");
    check->add_option("--tol-zero", check_tol_zero, "relative eigenvector-entry tolerance");

    auto* leaders = app.add_subcommand("leaders", "controllability per leader subset");
    std::string leaders_path, leaders_set;
    bool leaders_all = false, leaders_singletons = false;
    leaders->add_option("graph", leaders_path)->required();
    leaders->add_option("--set", leaders_set, "comma-separated leader nodes");
    leaders->add_flag("--all", leaders_all, "classify every nonempty subset (n <= 20)");
    leaders->add_flag("--singletons", leaders_singletons, "classify singletons and conclude");

    auto* construct = app.add_subcommand("construct", "replay a construction script");
    std::string construct_script, construct_base, construct_stage;
    construct->add_option("script", construct_script, "script file")->required();
    construct->add_option("base", construct_base, "base graph file")->required();
    construct->add_option("--enumerate", construct_stage,
                          "emit all variants of a stage: step3|step4a|step4b|step4c|step5|step6|step7");

    auto* census = app.add_subcommand("census", "perfect-controllability censuses");
    int census_n = 0;
    std::string census_random;
    census->add_option("--n", census_n, "exhaustive census over all labeled graphs (n <= 7)");
    census->add_option("--random", census_random, "sampled census: n,p,count,seed");

    auto* reconstruct = app.add_subcommand("reconstruct", "search base graphs matching a target spectrum");
    std::string rec_spectrum, rec_overlay;
    double rec_tol = -1;
    int rec_base_nodes = -1;
    reconstruct->add_option("--target-spectrum", rec_spectrum, "file with ascending eigenvalues")->required();
    reconstruct->add_option("--overlay", rec_overlay, "overlay edge-list file")->required();
    reconstruct->add_option("--tol", rec_tol, "per-eigenvalue absolute tolerance (default 1e-3)");
    reconstruct->add_option("--base-nodes", rec_base_nodes, "restrict base edges to nodes 1..k");

    auto* steer_cmd = app.add_subcommand("steer", "minimum-energy steering of followers");
    std::string steer_path, steer_leaders, steer_target, steer_x0, steer_out;
    double steer_T = 5.0;
    steer_cmd->add_option("graph", steer_path)->required();
    steer_cmd->add_option("--leaders", steer_leaders, "comma-separated leader nodes")->required();
    steer_cmd->add_option("--target", steer_target, "comma-separated follower target state")->required();
    steer_cmd->add_option("--x0", steer_x0, "initial follower state (default zero)");
    steer_cmd->add_option("--T", steer_T, "horizon");
    steer_cmd->add_option("--out", steer_out, "write the leader input trajectory CSV here");

    auto* export_cmd = app.add_subcommand("export", "DOT export");
    std::string export_path, export_dot, export_leaders;
    export_cmd->add_option("graph", export_path)->required();
    export_cmd->add_option("--dot", export_dot, "output path ('-' for stdout)");
    export_cmd->add_option("--leaders", export_leaders, "leaders to highlight");

    CLI11_PARSE(app, argc, argv);

    if (check->parsed()) return run_check(check_path, check_mode, check_tol_gap, check_tol_zero);
    if (leaders->parsed()) return run_leaders(leaders_path, leaders_set, leaders_all, leaders_singletons);
    if (construct->parsed()) return run_construct(construct_script, construct_base, construct_stage);
    if (census->parsed()) return run_census(census_n, census_random);
    if (reconstruct->parsed()) return run_reconstruct(rec_spectrum, rec_overlay, rec_tol, rec_base_nodes);
    if (steer_cmd->parsed()) return run_steer(steer_path, steer_leaders, steer_target, steer_x0, steer_T, steer_out);
    if (export_cmd->parsed()) return run_export(export_path, export_dot, export_leaders);
    return kExitInputError;
}
