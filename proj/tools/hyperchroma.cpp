// hyperchroma CLI: color hypergraphs with the two-phase randomized
// algorithm, run seeded Monte Carlo sweeps, evaluate the closed-form
// bounds, verify colorings, and query the brute-force oracles.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <hyperchroma/hyperchroma.hpp>

namespace hc = hyperchroma;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

hc::Hypergraph load_hypergraph(const std::string& path) {
    hc::Hypergraph h = hc::parse_hypergraph(read_file(path));
    auto result = hc::validate(h);
    if (!result.ok) throw std::runtime_error(path + ": " + result.violation);
    return h;
}

std::optional<double> parse_p_flag(const std::string& p_flag) {
    if (p_flag == "auto") return std::nullopt;
    return std::stod(p_flag);
}

int cmd_color(const std::string& input, std::uint32_t r, const std::string& p_flag,
              std::size_t max_retries, std::uint64_t seed, const std::string& out,
              const std::string& report_path) {
    hc::Hypergraph h = load_hypergraph(input);
    hc::ColorerConfig config;
    config.r = r;
    config.p = parse_p_flag(p_flag);
    config.max_retries = max_retries;
    config.seed = seed;
    hc::ColoringResult result = hc::color_hypergraph(h, config);
    if (!report_path.empty())
        write_file(report_path, hc::attempts_to_csv(result.attempts));
    if (!result.success()) {
        std::cerr << "failed after " << result.attempts.size() << " attempts ("
                  << result.phase1_failures() << " phase-1 bad edges, "
                  << result.chain_failures() << " strong chains)\n";
        return 1;
    }
    std::string text = hc::serialize_coloring(*result.coloring);
    if (out.empty())
        std::cout << text;
    else
        write_file(out, text);
    std::cout << "success after " << result.attempts.size() << " attempt(s)\n";
    return 0;
}

int cmd_experiment(const hc::ExperimentSpec& spec, const std::string& out) {
    hc::ExperimentReport report = hc::run_experiment(spec);
    std::string csv = hc::report_to_csv(spec, report);
    if (out.empty())
        std::cout << csv;
    else
        write_file(out, csv);
    std::cerr << "success rate " << report.success_rate << " over " << spec.trials
              << " trials; analytic per-attempt failure upper bound "
              << report.analytic_failure_upper << "\n";
    return 0;
}

int cmd_bounds(std::size_t n, std::size_t r, std::optional<double> q) {
    using hc::BoundFormula;
    std::cout << "q_prime(" << r << ") = " << hc::q_prime(r) << "\n";
    try {
        std::cout << "default_p(" << n << "," << r << ") = " << hc::default_p(n, r)
                  << "\n";
    } catch (const std::exception& e) {
        std::cout << "default_p(" << n << "," << r << ") unavailable: " << e.what()
                  << "\n";
    }
    std::vector<std::pair<BoundFormula, double>> rows;
    if (r == 2 && q) rows.emplace_back(BoundFormula::eq1, 0.0);
    rows.emplace_back(BoundFormula::eq2, 0.0);
    rows.emplace_back(BoundFormula::eq3, 0.0);
    rows.emplace_back(BoundFormula::eq4, 0.0);
    rows.emplace_back(BoundFormula::eq5, 0.0);
    if (q) rows.emplace_back(BoundFormula::eq6, 0.0);
    double best = -1e300;
    for (auto& [formula, value] : rows) {
        value = hc::evaluate_bound(formula, n, r, q);
        best = std::max(best, value);
    }
    std::cout << "name,log_value,value,dominates\n";
    for (const auto& [formula, value] : rows) {
        std::cout << hc::to_string(formula) << ',' << value << ',';
        if (value < 700.0)
            std::cout << std::exp(value);
        else
            std::cout << "overflow";
        std::cout << ',' << (value == best ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& input, const std::string& coloring_path,
               std::uint32_t r, const std::string& labels_path) {
    hc::Hypergraph h = load_hypergraph(input);
    auto colors = hc::parse_coloring(read_file(coloring_path), h.vertex_count());
    if (!labels_path.empty()) {
        auto labels = hc::parse_labeling(read_file(labels_path), h.edge_count());
        if (hc::is_good_coloring(h, labels, colors)) {
            std::cout << "good coloring\n";
            return 0;
        }
        for (hc::EdgeId i = 0; i < h.edge_count(); ++i) {
            bool all_label = true;
            for (hc::VertexId v : h.edge(i))
                if (colors[v] != labels[i]) { all_label = false; break; }
            if (all_label) {
                std::cout << "edge " << i << " is entirely in its label color "
                          << labels[i] << "\n";
                break;
            }
        }
        return 1;
    }
    if (hc::is_proper_coloring(h, colors, r)) {
        std::cout << "proper coloring\n";
        return 0;
    }
    for (hc::EdgeId i = 0; i < h.edge_count(); ++i) {
        bool mono = true;
        for (hc::VertexId v : h.edge(i))
            if (colors[v] != colors[h.edge(i).front()]) { mono = false; break; }
        if (mono) {
            std::cout << "edge " << i << " is monochromatic in color "
                      << colors[h.edge(i).front()] << "\n";
            break;
        }
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-phase randomized hypergraph coloring toolkit"};
    app.require_subcommand(1);

    // color
    auto* color = app.add_subcommand("color", "color a hypergraph with r colors");
    std::string color_input, color_out, color_report, color_p = "auto";
    std::uint32_t color_r = 0;
    std::size_t color_retries = 50;
    std::uint64_t color_seed = 0;
    color->add_option("--input", color_input, "hypergraph file")->required();
    color->add_option("--r", color_r, "number of colors")->required();
    color->add_option("--p", color_p, "colorless probability or `auto`");
    color->add_option("--max-retries", color_retries, "attempt cap");
    color->add_option("--seed", color_seed, "master seed");
    color->add_option("--out", color_out, "coloring output file (default stdout)");
    color->add_option("--report", color_report, "per-attempt CSV report file");

    // experiment
    auto* experiment = app.add_subcommand("experiment", "seeded Monte Carlo sweep");
    std::string exp_input, exp_out, exp_p = "auto";
    hc::ExperimentSpec spec;
    experiment->add_option("--input", exp_input, "fixed hypergraph file");
    experiment->add_option("--gen-vertices", spec.gen_vertices, "generator: vertex count");
    experiment->add_option("--gen-n", spec.gen_n, "generator: edge size");
    experiment->add_option("--gen-edges", spec.gen_edges, "generator: edge count");
    experiment->add_option("--r", spec.r, "number of colors")->required();
    experiment->add_option("--p", exp_p, "colorless probability or `auto`");
    experiment->add_option("--trials", spec.trials, "trial count")->required();
    experiment->add_option("--max-retries", spec.max_retries, "attempt cap per trial");
    experiment->add_option("--seed", spec.seed, "master seed");
    experiment->add_option("--threads", spec.threads, "worker pool size");
    experiment->add_option("--out", exp_out, "CSV output file (default stdout)");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "evaluate the closed-form bounds");
    std::size_t bounds_n = 0, bounds_r = 0;
    double bounds_q = 0.0;
    bool bounds_has_q = false;
    bounds->add_option("--n", bounds_n, "uniformity")->required();
    bounds->add_option("--r", bounds_r, "number of colors")->required();
    auto* qopt = bounds->add_option("--q", bounds_q, "coefficient for eq1/eq6");

    // verify
    auto* verify = app.add_subcommand("verify", "check a coloring file");
    std::string verify_input, verify_coloring, verify_labels;
    std::uint32_t verify_r = 2;
    verify->add_option("--input", verify_input, "hypergraph file")->required();
    verify->add_option("--coloring", verify_coloring, "coloring file")->required();
    verify->add_option("--r", verify_r, "number of colors");
    verify->add_option("--labels", verify_labels, "labeling file (good-coloring mode)");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "brute-force ground truth");
    oracle->require_subcommand(1);
    auto* chromatic = oracle->add_subcommand("chromatic", "exact chromatic number");
    std::string chrom_input;
    chromatic->add_option("--input", chrom_input, "hypergraph file")->required();
    auto* prop2 = oracle->add_subcommand("prop2", "good-coloring / chain-free equivalence");
    std::string prop2_input, prop2_labels;
    std::uint32_t prop2_r = 2;
    prop2->add_option("--input", prop2_input, "hypergraph file")->required();
    prop2->add_option("--labels", prop2_labels, "labeling file")->required();
    prop2->add_option("--r", prop2_r, "number of colors")->required();
    auto* morc = oracle->add_subcommand("m", "desk-scale minimum-edge search");
    std::size_t m_n = 0, m_r = 0, m_maxv = 5, m_maxe = 8;
    morc->add_option("--n", m_n, "uniformity")->required();
    morc->add_option("--r", m_r, "number of colors")->required();
    morc->add_option("--max-vertices", m_maxv, "vertex budget");
    morc->add_option("--max-edges", m_maxe, "edge budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*color)
            return cmd_color(color_input, color_r, color_p, color_retries, color_seed,
                             color_out, color_report);
        if (*experiment) {
            if (!exp_input.empty()) spec.fixed_instance = load_hypergraph(exp_input);
            else if (spec.gen_vertices == 0 || spec.gen_n == 0)
                throw std::runtime_error("need --input or --gen-vertices/--gen-n/--gen-edges");
            spec.p = parse_p_flag(exp_p);
            return cmd_experiment(spec, exp_out);
        }
        if (*bounds) {
            bounds_has_q = qopt->count() > 0;
            return cmd_bounds(bounds_n, bounds_r,
                              bounds_has_q ? std::optional<double>(bounds_q)
                                           : std::nullopt);
        }
        if (*verify)
            return cmd_verify(verify_input, verify_coloring, verify_r, verify_labels);
        if (*chromatic) {
            std::cout << hc::oracle::chromatic_number(load_hypergraph(chrom_input))
                      << "\n";
            return 0;
        }
        if (*prop2) {
            hc::Hypergraph h = load_hypergraph(prop2_input);
            auto labels = hc::parse_labeling(read_file(prop2_labels), h.edge_count());
            bool good = hc::oracle::exists_good_coloring(h, labels, prop2_r);
            bool chain_free = hc::oracle::exists_chain_free_ordering(h, &labels, prop2_r);
            std::cout << "exists_good_coloring=" << good
                      << " exists_chain_free_ordering=" << chain_free << "\n";
            return good == chain_free ? 0 : 1;
        }
        if (*morc) {
            hc::oracle::SearchBudget budget{m_maxv, m_maxe};
            auto result = hc::oracle::min_edges_uncolorable(m_n, m_r, budget);
            if (result.found) {
                std::cout << "m(" << m_n << "," << m_r << ") = " << result.min_edges
                          << " within budget\n"
                          << hc::serialize_hypergraph(*result.witness);
            } else {
                std::cout << "no witness up to " << result.searched_edges
                          << " edges on " << m_maxv << " vertices\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
