#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "graphqfi/counting.hpp"
#include "graphqfi/dephasing.hpp"
#include "graphqfi/erasure.hpp"
#include "graphqfi/graph.hpp"
#include "graphqfi/measurement.hpp"
#include "graphqfi/oracle.hpp"
#include "graphqfi/partition.hpp"
#include "graphqfi/qfi.hpp"
#include "graphqfi/stabilizer.hpp"
#include "graphqfi/sweep.hpp"
#include "graphqfi/verify.hpp"

namespace {

using namespace graphqfi;

struct GraphInput {
    std::string file;
    std::string family;
    std::vector<int> params;

    void attach(CLI::App* cmd, bool required = true) {
        auto* f = cmd->add_option("--graph", file, "graph JSON file");
        auto* fam = cmd->add_option("--family", family,
                                    "family name: star|cycle|path|complete|grid");
        cmd->add_option("--params", params, "family parameters (e.g. 10 or 2,3)")
            ->delimiter(',');
        f->excludes(fam);
        if (required) {
            // one of the two input forms must be present; checked in load()
        }
    }

    Graph load(std::string* id_out = nullptr) const {
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw std::invalid_argument("cannot open graph file " + file);
            std::stringstream buf;
            buf << in.rdbuf();
            if (id_out) {
                const auto slash = file.find_last_of('/');
                *id_out = slash == std::string::npos ? file : file.substr(slash + 1);
            }
            return parse_graph(buf.str());
        }
        if (!family.empty()) {
            if (id_out) {
                *id_out = family;
                for (int p : params) *id_out += "_" + std::to_string(p);
            }
            return make_family(family, params);
        }
        throw std::invalid_argument("no graph given: use --graph FILE or --family NAME --params ...");
    }
};

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open output file " + path);
    return file;
}

void print_classes(const char* label, const std::vector<PartitionClass>& classes,
                   std::ostream& out) {
    out << label << " (" << classes.size() << "):\n";
    for (const auto& cls : classes) {
        out << "  {";
        for (std::size_t i = 0; i < cls.members.size(); ++i)
            out << (i ? "," : "") << cls.members[i];
        out << "} size=" << cls.size() << " shared_neighborhood={";
        for (std::size_t i = 0; i < cls.shared_neighborhood.size(); ++i)
            out << (i ? "," : "") << cls.shared_neighborhood[i];
        out << "}\n";
    }
}

int run_verify(const std::string& suite, int max_n, int random_count, std::uint64_t seed) {
    std::vector<verify::CheckResult> results;
    auto want = [&suite](const char* name) { return suite == "all" || suite == name; };
    if (want("noiseless")) results.push_back(verify::check_noiseless(max_n, random_count, seed));
    if (want("lc")) results.push_back(verify::check_lc(max_n, random_count, seed));
    if (want("dephasing")) results.push_back(verify::check_dephasing(std::min(max_n, 6)));
    if (want("erasure")) results.push_back(verify::check_erasure_patterns(std::min(max_n, 6)));
    if (want("erasure-average")) results.push_back(verify::check_erasure_averages());
    if (want("fig2")) results.push_back(verify::check_fig2_formulas());
    if (want("measurement")) results.push_back(verify::check_measurement());
    if (want("counting")) results.push_back(verify::check_counting());
    if (results.empty()) throw std::invalid_argument("unknown verify suite \"" + suite + "\"");

    bool all_pass = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << ": max deviation "
                  << (r.max_dev <= r.tolerance ? "<= " : "> ") << format_value(r.tolerance)
                  << " (worst " << format_value(r.max_dev) << ", " << r.cases << " cases)\n";
        for (const auto& note : r.notes) std::cout << "      " << note << "\n";
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"QFI of graph and stabilizer states: closed forms, noise models, "
                 "measurement plans and a dense verification oracle"};
    app.require_subcommand(1);

    // ---- qfi
    GraphInput qfi_in;
    bool qfi_lc = false;
    auto* cmd_qfi = app.add_subcommand("qfi", "QFI of a graph state");
    qfi_in.attach(cmd_qfi);
    cmd_qfi->add_flag("--lc", qfi_lc, "also print the local-Clifford boosted value");
    cmd_qfi->callback([&] {
        const Graph g = qfi_in.load();
        std::cout << "Q = " << format_value(qfi_graph(g).value) << "\n";
        if (qfi_lc) std::cout << "Q_LC = " << format_value(qfi_graph_lc(g).value) << "\n";
    });

    // ---- partition
    GraphInput part_in;
    auto* cmd_part = app.add_subcommand("partition", "neighborhood classes of a graph");
    part_in.attach(cmd_part);
    cmd_part->callback([&] {
        const auto report = partition(part_in.load());
        std::cout << "n = " << report.n << "\n";
        print_classes("open classes", report.open_classes, std::cout);
        print_classes("closed classes", report.closed_classes, std::cout);
    });

    // ---- bundle
    GraphInput base_in;
    std::vector<int> sizes;
    int uniform = 0;
    std::string bundle_out;
    auto* cmd_bundle = app.add_subcommand("bundle", "build a bundled graph JSON");
    base_in.attach(cmd_bundle);
    cmd_bundle->add_option("--sizes", sizes, "bundle sizes per base vertex")->delimiter(',');
    cmd_bundle->add_option("--uniform", uniform, "same bundle size for every base vertex");
    cmd_bundle->add_option("--out", bundle_out, "output file (default stdout)");
    cmd_bundle->callback([&] {
        const Graph base = base_in.load();
        std::vector<int> s = sizes;
        if (uniform > 0) {
            if (!s.empty()) throw std::invalid_argument("give either --sizes or --uniform");
            s.assign(base.size(), uniform);
        }
        const auto bundled = build_bundle(base, s);
        std::ofstream file;
        open_output(file, bundle_out) << to_json(bundled.graph) << "\n";
    });

    // ---- dephase
    GraphInput deph_in;
    std::string p_grid = "0:0.5:0.05", deph_out;
    bool deph_exact = false, deph_approx = false, deph_oracle = false;
    auto* cmd_deph = app.add_subcommand("dephase", "QFI sweep under iid dephasing");
    deph_in.attach(cmd_deph);
    cmd_deph->add_option("--p-grid", p_grid, "probability grid start:stop:step");
    cmd_deph->add_flag("--exact", deph_exact, "exact closed form");
    cmd_deph->add_flag("--approx", deph_approx, "large-neighborhood approximation");
    cmd_deph->add_flag("--oracle", deph_oracle, "dense mixed-state oracle");
    cmd_deph->add_option("--out", deph_out, "output CSV (default stdout)");
    cmd_deph->callback([&] {
        std::string id;
        const Graph g = deph_in.load(&id);
        if (!deph_exact && !deph_approx && !deph_oracle) deph_exact = true;
        std::vector<SweepRecord> records;
        oracle::StateVector psi;
        if (deph_oracle) psi = oracle::graph_state_vector(g);
        for (double p : parse_grid(p_grid)) {
            if (deph_exact) {
                const auto q = qfi_dephasing_exact(g, p);
                records.push_back({p, q.value, q.method, id});
            }
            if (deph_approx) {
                const auto q = qfi_dephasing_approx(g, p);
                records.push_back({p, q.value, q.method, id});
            }
            if (deph_oracle)
                records.push_back(
                    {p, oracle::qfi_mixed(oracle::apply_dephasing(psi, p)), "oracle_mixed", id});
        }
        std::ofstream file;
        emit_csv(records, open_output(file, deph_out));
    });

    // ---- erase
    GraphInput erase_in;
    std::vector<int> sites;
    int e_max = 0, shape_k = 0;
    bool erase_avg = false, erase_exact = false, erase_formula = false, erase_oracle = false;
    std::string shape, erase_out;
    auto* cmd_erase = app.add_subcommand("erase", "QFI under finite erasures");
    erase_in.attach(cmd_erase);
    cmd_erase->add_option("--sites", sites, "explicit erasure sites")->delimiter(',');
    cmd_erase->add_flag("--average", erase_avg, "average over all erasure subsets");
    cmd_erase->add_option("--e-max", e_max, "sweep e = 1..e-max (with --average)");
    cmd_erase->add_flag("--exact", erase_exact, "exact enumeration average");
    cmd_erase->add_flag("--formula", erase_formula,
                        "closed form: per-pattern/single-erasure, or family form with --shape");
    cmd_erase->add_flag("--oracle", erase_oracle, "dense partial-trace oracle");
    cmd_erase->add_option("--shape", shape, "family formula: star or cyclic");
    cmd_erase->add_option("--k", shape_k, "bundle count for --shape");
    cmd_erase->add_option("--out", erase_out, "output CSV (default stdout)");
    cmd_erase->callback([&] {
        std::string id;
        const Graph g = erase_in.load(&id);
        std::vector<SweepRecord> records;
        if (!sites.empty()) {
            const ErasurePattern pat(sites);
            if (!erase_formula && !erase_oracle) erase_formula = true;
            if (erase_formula) {
                const auto q = qfi_erasure_pattern(g, pat);
                records.push_back({double(pat.count()), q.value, q.method, id});
            }
            if (erase_oracle) {
                const auto rho = oracle::density(oracle::graph_state_vector(g));
                const double q = oracle::qfi_mixed(oracle::partial_trace(rho, pat.sites));
                records.push_back({double(pat.count()), q, "oracle_partial_trace", id});
            }
        } else if (erase_avg) {
            if (e_max < 1) throw std::invalid_argument("erase --average needs --e-max >= 1");
            if (!erase_exact && !erase_formula) erase_exact = true;
            for (int e = 1; e <= e_max; ++e) {
                if (erase_exact)
                    records.push_back(
                        {double(e), qfi_erasure_average_exact(g, e), "erasure_avg_exact", id});
                if (erase_formula) {
                    if (shape == "star")
                        records.push_back({double(e),
                                           qfi_erasure_star_formula(g.size(), shape_k, e),
                                           "erasure_avg_star", id});
                    else if (shape == "cyclic")
                        records.push_back({double(e),
                                           qfi_erasure_cyclic_formula(g.size(), shape_k, e),
                                           "erasure_avg_cyclic", id});
                    else if (e == 1)
                        records.push_back({1.0, qfi_erasure_single_avg_formula(g),
                                           "erasure_avg_single", id});
                    else
                        throw std::invalid_argument(
                            "closed-form averages for e > 1 need --shape star|cyclic with --k");
                }
            }
        } else {
            throw std::invalid_argument("erase needs --sites or --average");
        }
        std::ofstream file;
        emit_csv(records, open_output(file, erase_out));
    });

    // ---- measure
    GraphInput meas_in;
    std::string theta_grid = "0.005:0.05:0.005", meas_out;
    bool force_ext = false;
    auto* cmd_meas = app.add_subcommand("measure", "local Y/Z measurement plan and precision");
    meas_in.attach(cmd_meas);
    cmd_meas->add_option("--theta-grid", theta_grid, "phase grid start:stop:step (exclude 0)");
    cmd_meas->add_flag("--extended", force_ext, "force the one-extra-qubit fallback plan");
    cmd_meas->add_option("--out", meas_out, "output CSV (default stdout)");
    cmd_meas->callback([&] {
        std::string id;
        const Graph g = meas_in.load(&id);
        const auto plan = make_measurement_plan(g, force_ext);
        const auto thetas = parse_grid(theta_grid);
        const auto expectations = expectation_curve(plan, thetas);
        const auto precisions = precision_curve(plan, thetas);
        std::ofstream file;
        auto& out = open_output(file, meas_out);
        out << "# graph_id = " << id << "\n";
        out << "# observable = " << plan.observable.str() << "\n";
        out << "# extended = " << (plan.extended ? "yes" : "no") << "\n";
        out << "# qubits = " << plan.graph.size() << "\n";
        out << "theta,expectation,delta_theta_sq\n";
        for (std::size_t i = 0; i < thetas.size(); ++i)
            out << format_value(thetas[i]) << ',' << format_value(expectations[i]) << ','
                << format_value(precisions[i]) << "\n";
    });

    // ---- verify
    std::string suite = "all";
    int max_n = 7, random_count = 200;
    std::uint64_t seed = 20240901;
    auto* cmd_verify = app.add_subcommand("verify", "formula-vs-oracle verification suites");
    cmd_verify->add_option("--suite", suite,
                           "noiseless|lc|dephasing|erasure|erasure-average|fig2|measurement|"
                           "counting|all");
    cmd_verify->add_option("--max-n", max_n, "largest oracle instance");
    cmd_verify->add_option("--random-graphs", random_count, "random connected graph count");
    cmd_verify->add_option("--seed", seed, "random graph seed");
    bool verify_failed = false;
    cmd_verify->callback(
        [&] { verify_failed = run_verify(suite, max_n, random_count, seed) != 0; });

    // ---- count
    int count_n = -1;
    double epsilon = 0.0, threshold = 0.0;
    bool census = false;
    auto* cmd_count = app.add_subcommand("count", "stabilizer-state counts and bounds");
    cmd_count->add_option("--n", count_n, "qubit count")->required();
    cmd_count->add_option("--epsilon", epsilon, "print bounds for QFI >= n^(2-eps)");
    cmd_count->add_flag("--census", census, "exhaustive census (n <= 3)");
    cmd_count->add_option("--threshold", threshold, "census QFI threshold");
    cmd_count->callback([&] {
        const BigCount total = stabilizer_state_count(count_n);
        std::cout << "N_" << count_n << " = " << total.str() << " (~"
                  << approx_scientific(total) << ")\n";
        if (epsilon > 0.0) {
            const auto bound = metrology_bound(count_n, epsilon);
            std::cout << "k = " << bound.k << "\n";
            std::cout << "count(QFI >= n^(2-eps)) >= " << bound.full.str() << " (~"
                      << approx_scientific(bound.full) << ")\n";
            std::cout << "single-term bound = " << bound.simple.str() << " (~"
                      << approx_scientific(bound.simple) << ")\n";
        }
        if (census) {
            const auto result = empirical_census(count_n, threshold);
            std::cout << "census total = " << result.total << "\n";
            std::cout << "census(QFI >= " << format_value(threshold)
                      << ") = " << result.at_least << "\n";
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return verify_failed ? 2 : 0;
}
