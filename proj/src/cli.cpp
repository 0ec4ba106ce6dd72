#include "gsu/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gsu/bounds.hpp"
#include "gsu/graph.hpp"
#include "gsu/oracle.hpp"
#include "gsu/rihaczek.hpp"
#include "gsu/spectral.hpp"

namespace gsu {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr int kDefaultSizeCap = 2000;

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Graph graph_from_gen_spec(const std::string& spec) {
    // ring:N | ring:N:chord=U,V,W | random:N,P,SEED
    if (spec.rfind("ring:", 0) == 0) {
        const std::string rest = spec.substr(5);
        const auto colon = rest.find(':');
        const std::string nstr = rest.substr(0, colon);
        int n = 0;
        if (std::sscanf(nstr.c_str(), "%d", &n) != 1)
            throw std::invalid_argument("gen spec: bad ring size in '" + spec + "'");
        Graph g = Graph::ring(n, false);
        if (colon == std::string::npos) return g;
        const std::string chord = rest.substr(colon + 1);
        int u = 0, v = 0;
        double w = 0.0;
        if (std::sscanf(chord.c_str(), "chord=%d,%d,%lf", &u, &v, &w) != 3)
            throw std::invalid_argument("gen spec: bad chord in '" + spec + "'");
        return g.with_chord(u, v, w);
    }
    if (spec.rfind("random:", 0) == 0) {
        int n = 0;
        double p = 0.0;
        long long seed = 0;
        if (std::sscanf(spec.c_str() + 7, "%d,%lf,%lld", &n, &p, &seed) != 3)
            throw std::invalid_argument("gen spec: expected random:N,P,SEED in '" + spec + "'");
        return Graph::random(n, p, static_cast<std::uint64_t>(seed));
    }
    throw std::invalid_argument("gen spec: unknown generator '" + spec + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty()) {
        out << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + path);
    f << content;
}

GraphSignal read_signal(const std::string& path) {
    std::istringstream in(read_file(path));
    std::vector<std::complex<double>> values;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        double re = 0.0, im = 0.0;
        if (!(ls >> re)) continue;
        if (!(ls >> im)) im = 0.0;
        values.emplace_back(re, im);
    }
    GraphSignal x(values.size());
    for (size_t i = 0; i < values.size(); ++i) x(i) = values[i];
    return x;
}

struct SourceOptions {
    std::string graph_path;
    std::string gen_spec;
    int dft_n = 0;
    double eig_tol = 1e-12;
    bool allow_slow = false;
};

void add_source_options(CLI::App* cmd, SourceOptions& src) {
    auto* g = cmd->add_option("--graph", src.graph_path, "edge-list file");
    auto* s = cmd->add_option("--gen", src.gen_spec, "generator spec (ring:N[:chord=U,V,W] | random:N,P,SEED)");
    auto* d = cmd->add_option("--dft", src.dft_n, "use the N-point DFT basis directly");
    g->excludes(s)->excludes(d);
    s->excludes(d);
    cmd->add_option("--eig-tol", src.eig_tol, "eigensolver relative off-diagonal tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--allow-slow", src.allow_slow, "lift the default size cap of 2000");
}

SpectralBasis basis_from_source(const SourceOptions& src) {
    if (src.dft_n > 0) return dft_basis(src.dft_n);
    Graph g = src.graph_path.empty() ? graph_from_gen_spec(src.gen_spec)
                                     : Graph::from_edge_list(read_file(src.graph_path));
    if (g.size() > kDefaultSizeCap && !src.allow_slow)
        throw std::invalid_argument("graph larger than " + std::to_string(kDefaultSizeCap) +
                                    " vertices; pass --allow-slow");
    try {
        return eig_sym(g.laplacian(), src.eig_tol);
    } catch (const std::runtime_error& ex) {
        throw NumericalError(ex.what());
    }
}

std::string fmt10(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string fmt4(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

int do_bound(const SourceOptions& src, const std::string& variant,
             const std::string& out_path, std::ostream& out) {
    const SpectralBasis b = basis_from_source(src);
    std::vector<BoundReport> reports;
    if (variant == "squared" || variant == "both")
        reports.push_back(improved_bound(b, Variant::squared));
    if (variant == "linear" || variant == "both")
        reports.push_back(improved_bound(b, Variant::linear));
    for (const BoundReport& r : reports) {
        out << "variant " << variant_name(r.variant) << ": classical_q = " << fmt10(r.classical_q)
            << " (" << fmt4(r.classical_q) << "), improved_q = " << fmt10(r.improved_q) << " ("
            << fmt4(r.improved_q) << "), sum_bound = " << fmt10(r.sum_bound) << " ("
            << fmt4(r.sum_bound) << ")\n";
    }
    std::string json;
    if (reports.size() == 1) {
        json = report_to_json(reports[0]);
    } else {
        json = "[" + report_to_json(reports[0]) + "," + report_to_json(reports[1]) + "]";
    }
    json += "\n";
    if (out_path.empty()) {
        out << json;
    } else {
        write_output(out_path, json, out);
    }
    return kExitOk;
}

int do_rihaczek(const SourceOptions& src, const std::string& signal_path,
                const std::string& convention, const std::string& out_path,
                std::ostream& out) {
    const SpectralBasis b = basis_from_source(src);
    const GraphSignal x = read_signal(signal_path);
    if (x.size() != b.size())
        throw std::invalid_argument("signal length " + std::to_string(x.size()) +
                                    " does not match graph size " + std::to_string(b.size()));
    const Convention conv =
        (convention == "classical") ? Convention::classical : Convention::graph;
    const EnergyDistribution d = rihaczek(b, x, conv);

    const double energy = d.e.sum().real();
    const Eigen::VectorXd vm = vertex_marginal(d);
    const Eigen::VectorXd sm = spectral_marginal(d);
    double vres = 0.0, sres = 0.0;
    for (int i = 0; i < b.size(); ++i) {
        vres = std::max(vres, std::abs(vm(i) - std::norm(d.x(i))));
        sres = std::max(sres, std::abs(sm(i) - std::norm(d.spec(i))));
    }

    nlohmann::ordered_json j;
    j["n"] = b.size();
    j["convention"] = (conv == Convention::graph) ? "graph" : "classical";
    j["scale"] = d.scale;
    j["energy"] = energy;
    j["l1_norm"] = l1_norm(d);
    j["vertex_marginal_residual"] = vres;
    j["spectral_marginal_residual"] = sres;
    out << j.dump() << "\n";

    write_output(out_path, distribution_to_csv(d), out);
    if (std::abs(energy - 1.0) > 1e-8)
        throw NumericalError("energy property violated: sum = " + fmt10(energy));
    return kExitOk;
}

int do_oracle(const SourceOptions& src, bool exhaustive, int trials,
              std::uint64_t seed, double rank_tol, const std::string& out_path,
              std::ostream& out) {
    const SpectralBasis b = basis_from_source(src);
    OracleReport report;
    if (exhaustive) {
        report = min_feasible_product(b, rank_tol);
        const double needed =
            std::max(std::ceil(report.bound_squared - 1e-9), std::ceil(report.bound_linear - 1e-9));
        if (static_cast<double>(report.min_feasible_product) < needed) ++report.violations;
    } else {
        report = random_signal_check(b, trials, seed);
    }
    write_output(out_path, oracle_report_to_json(report) + "\n", out);
    if (report.violations > 0)
        throw NumericalError("oracle reported " + std::to_string(report.violations) +
                             " bound violations");
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"graph spectra, Rihaczek energy distributions, and support uncertainty bounds"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate an edge-list file");
    std::string gen_spec;
    std::string gen_out;
    gen->add_option("spec", gen_spec, "ring:N[:chord=U,V,W] | random:N,P,SEED")->required();
    gen->add_option("--out", gen_out, "output path (default stdout)");

    // bound
    auto* bound = app.add_subcommand("bound", "compute uncertainty bounds for a basis");
    SourceOptions bound_src;
    add_source_options(bound, bound_src);
    std::string variant = "both";
    std::string bound_out;
    bound->add_option("--variant", variant, "squared|linear|both")
        ->check(CLI::IsMember({"squared", "linear", "both"}));
    bound->add_option("--out", bound_out, "JSON report path (default stdout)");

    // rihaczek
    auto* rih = app.add_subcommand("rihaczek", "compute the Rihaczek energy distribution");
    SourceOptions rih_src;
    add_source_options(rih, rih_src);
    std::string signal_path, convention = "graph", rih_out;
    rih->add_option("--signal", signal_path, "signal file, one value per line")->required();
    rih->add_option("--convention", convention, "graph|classical")
        ->check(CLI::IsMember({"graph", "classical"}));
    rih->add_option("--out", rih_out, "distribution CSV path (default stdout)");

    // oracle
    auto* orc = app.add_subcommand("oracle", "brute-force bound verification");
    SourceOptions orc_src;
    add_source_options(orc, orc_src);
    bool exhaustive = false;
    int trials = 0;
    long long seed = 0;
    double rank_tol = 1e-9;
    std::string orc_out;
    orc->add_flag("--exhaustive", exhaustive, "exhaustive support enumeration (n <= 8)");
    orc->add_option("--trials", trials, "randomized trials");
    orc->add_option("--seed", seed, "random seed");
    orc->add_option("--rank-tol", rank_tol, "relative pivot tolerance")->check(CLI::PositiveNumber);
    orc->add_option("--out", orc_out, "JSON report path (default stdout)");

    std::vector<const char*> argv;
    argv.push_back("gsu");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (gen->parsed()) {
            write_output(gen_out, graph_from_gen_spec(gen_spec).to_edge_list(), out);
            return kExitOk;
        }
        if (bound->parsed()) return do_bound(bound_src, variant, bound_out, out);
        if (rih->parsed())
            return do_rihaczek(rih_src, signal_path, convention, rih_out, out);
        if (orc->parsed()) {
            if (!exhaustive && trials < 1) {
                err << "oracle: pass --exhaustive or --trials N\n";
                return kExitUsage;
            }
            return do_oracle(orc_src, exhaustive, trials, static_cast<std::uint64_t>(seed),
                             rank_tol, orc_out, out);
        }
        err << "no subcommand\n";
        return kExitUsage;
    } catch (const NumericalError& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace gsu
