#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "grassvol/flag.hpp"
#include "grassvol/gates.hpp"
#include "grassvol/grassmann.hpp"
#include "grassvol/harness.hpp"
#include "grassvol/holonomy.hpp"
#include "grassvol/pauli.hpp"
#include "grassvol/synthesis.hpp"

namespace {

using namespace grassvol;

struct GlobalOpts {
    HarnessConfig config;
    bool json = false;
    std::string config_path;
    std::string output_path;
};

void write_out(const GlobalOpts& g, const std::string& text) {
    if (g.output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(g.output_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + g.output_path);
    out << text;
}

int run_checks(const GlobalOpts& g, const std::string& prefix) {
    const auto ids = check_ids_with_prefix(prefix);
    const auto records = run_suite(ids, g.config);
    write_out(g, format_report(records, g.json ? ReportFormat::json : ReportFormat::csv));
    for (const auto& r : records)
        if (!r.pass) return 1;
    return 0;
}

nlohmann::json matrix_json(const ComplexMatrix& m) {
    return nlohmann::json::parse(matrix_to_json(m));
}

int cmd_verify_volume(const GlobalOpts& g, unsigned k, unsigned n,
                      std::uint64_t samples) {
    const double closed = grassmann_volume(k, n);
    const VolumeEstimate est = mc_volume(k, n, samples, g.config.seed, g.config.workers);
    const double z = est.standard_error > 0.0
                         ? (est.mean - closed) / est.standard_error
                         : 0.0;
    const bool pass = std::abs(est.mean - closed) <= 3.0 * est.standard_error &&
                      std::abs(est.mean - closed) <= 0.01 * closed;
    if (g.json) {
        nlohmann::json j;
        j["k"] = k;
        j["n"] = n;
        j["closed_form"] = closed;
        j["mc_mean"] = est.mean;
        j["mc_stderr"] = est.standard_error;
        j["z_score"] = z;
        j["samples"] = est.samples;
        j["seed"] = est.seed;
        j["status"] = pass ? "pass" : "fail";
        write_out(g, j.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "G(" << k << "," << n << ") closed_form=" << closed
            << " mc_mean=" << est.mean << " mc_stderr=" << est.standard_error
            << " z_score=" << z << " samples=" << est.samples
            << " seed=" << est.seed << " status=" << (pass ? "pass" : "fail") << "\n";
        write_out(g, out.str());
    }
    return pass ? 0 : 1;
}

int cmd_flag_classify(const GlobalOpts& g, const std::string& input) {
    std::ifstream in(input);
    if (!in) throw std::invalid_argument("cannot open " + input);
    std::ostringstream buf;
    buf << in.rdbuf();
    const ComplexMatrix x = matrix_from_json(buf.str());
    nlohmann::json j;
    const bool kernel = in_kernel(x, g.config.tol);
    j["in_kernel"] = kernel;
    if (kernel) {
        const SpectralType t = spectral_type(x);
        const FlagDescriptor d = flag_descriptor(t);
        auto spec = nlohmann::json::array();
        for (const auto& p : t.pairs)
            spec.push_back({{"eigenvalue", p.eigenvalue}, {"multiplicity", p.multiplicity}});
        j["spectral_type"] = std::move(spec);
        j["blocks"] = d.quotient;
        j["complex_dimension"] = d.complex_dimension;
        j["flag_volume"] = flag_volume(t);
    }
    write_out(g, j.dump(2) + "\n");
    return kernel ? 0 : 1;
}

int cmd_synth_verify(const GlobalOpts& g, unsigned controls, unsigned trials) {
    CounterRng rng(g.config.seed, 900 + controls);
    double worst = 0.0;
    const double tol = controls == 2 ? 1e-10 : 1e-9;
    std::size_t gate_count = 0;
    for (unsigned i = 0; i < trials; ++i) {
        const ComplexMatrix u = random_unitary(2, rng);
        const SynthesisReport r = controls == 2 ? synthesize_ccu(u) : synthesize_cccu(u);
        worst = std::max(worst, r.max_error);
        gate_count = r.gate_count;
    }
    const bool pass = worst <= tol;
    if (g.json) {
        nlohmann::json j;
        j["controls"] = controls;
        j["trials"] = trials;
        j["gate_count"] = gate_count;
        j["max_error"] = worst;
        j["tolerance"] = tol;
        j["seed"] = g.config.seed;
        j["status"] = pass ? "pass" : "fail";
        write_out(g, j.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "controls=" << controls << " trials=" << trials
            << " gate_count=" << gate_count << " max_error=" << worst
            << " status=" << (pass ? "pass" : "fail") << "\n";
        write_out(g, out.str());
    }
    return pass ? 0 : 1;
}

int cmd_holonomy_run(const GlobalOpts& g, const std::string& family,
                     const std::string& loop_kind, double radius, double theta,
                     std::size_t steps) {
    const NamedFamily fam = make_named_family(family);
    ParameterLoop loop;
    if (loop_kind == "circle")
        loop = circle_loop(radius, steps);
    else if (loop_kind == "latitude")
        loop = latitude_loop(theta, steps);
    else
        throw std::invalid_argument("unknown loop kind: " + loop_kind);

    const ComplexMatrix gamma = holonomy(fam.family, fam.vacuum, loop);
    const double deviation =
        (gamma.adjoint() * gamma - ComplexMatrix::identity(gamma.rows())).max_norm();

    // Convergence of the first-order product integral toward unitarity.
    auto table = nlohmann::json::array();
    for (std::size_t s = steps / 4; s <= steps; s *= 2) {
        if (s < 8) continue;
        const ParameterLoop l =
            loop_kind == "circle" ? circle_loop(radius, s) : latitude_loop(theta, s);
        const ComplexMatrix e = holonomy_first_order(fam.family, fam.vacuum, l);
        const double dev =
            (e.adjoint() * e - ComplexMatrix::identity(e.rows())).max_norm();
        table.push_back({{"steps", s}, {"unitarity_deviation", dev}});
    }

    if (g.json) {
        nlohmann::json j;
        j["family"] = family;
        j["loop"] = loop_kind;
        j["steps"] = steps;
        j["holonomy"] = matrix_json(gamma);
        j["unitarity_deviation"] = deviation;
        j["convergence"] = std::move(table);
        write_out(g, j.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "family=" << family << " loop=" << loop_kind << " steps=" << steps
            << " unitarity_deviation=" << deviation << "\n";
        for (std::size_t i = 0; i < gamma.rows(); ++i) {
            for (std::size_t j = 0; j < gamma.cols(); ++j)
                out << "  gamma(" << i << "," << j << ") = " << gamma(i, j).real()
                    << (gamma(i, j).imag() < 0 ? " - " : " + ")
                    << std::abs(gamma(i, j).imag()) << "i\n";
        }
        for (const auto& row : table)
            out << "  first-order steps=" << row.at("steps").get<std::size_t>()
                << " deviation=" << row.at("unitarity_deviation").get<double>() << "\n";
        write_out(g, out.str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grassmannian volumes, gate identities, and holonomy verification"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    bool seed_set = false, tol_set = false, workers_set = false;
    std::uint64_t seed_flag = 42;
    double tol_flag = 1e-9;
    unsigned workers_flag = 1;
    bool timings = false;

    app.add_option("--seed", seed_flag, "Seed for every randomized check")
        ->each([&](const std::string&) { seed_set = true; });
    app.add_option("--tol", tol_flag, "Predicate tolerance override")
        ->each([&](const std::string&) { tol_set = true; });
    app.add_flag("--json", g.json, "Emit JSON instead of text/CSV");
    app.add_option("--workers", workers_flag, "Concurrent worker count")
        ->each([&](const std::string&) { workers_set = true; });
    app.add_option("--config", g.config_path, "Flat key=value config file");
    app.add_option("--output", g.output_path, "Write the report to a file");
    app.add_flag("--timings", timings, "Record wall-clock runtimes in reports");

    auto* grassmann_cmd = app.add_subcommand("grassmann", "Grassmannian volume checks");
    grassmann_cmd->fallthrough();
    unsigned vk = 1, vn = 2;
    std::uint64_t vsamples = 1'000'000;
    auto* verify_volume =
        grassmann_cmd->add_subcommand("verify-volume", "Monte Carlo volume identity");
    verify_volume->fallthrough();
    verify_volume->add_option("--k", vk, "Plane dimension")->required();
    verify_volume->add_option("--n", vn, "Ambient dimension")->required();
    verify_volume->add_option("--samples", vsamples, "Monte Carlo sample count");

    auto* flag_cmd = app.add_subcommand("flag", "Spectral classification");
    flag_cmd->fallthrough();
    std::string flag_input;
    auto* classify = flag_cmd->add_subcommand("classify", "Classify a Hermitian matrix");
    classify->fallthrough();
    classify->add_option("--input", flag_input, "Matrix JSON file")->required();

    auto* gates_cmd = app.add_subcommand("gates", "Gate-algebra identity suite");
    gates_cmd->fallthrough();
    unsigned gates_t = 4;
    auto* gates_verify = gates_cmd->add_subcommand("verify", "Run the identity suite");
    gates_verify->fallthrough();
    gates_verify->add_option("--t", gates_t, "Maximum wire count")
        ->check(CLI::Range(2u, kMaxQubits));

    auto* pauli_cmd = app.add_subcommand("pauli", "Clock/shift identity suite");
    pauli_cmd->fallthrough();
    unsigned pauli_n = 12;
    auto* pauli_verify = pauli_cmd->add_subcommand("verify", "Run the identity suite");
    pauli_verify->fallthrough();
    pauli_verify->add_option("--n", pauli_n, "Dimension to spot-check")
        ->check(CLI::Range(2u, 64u));

    auto* synth_cmd = app.add_subcommand("synth", "Controlled-gate synthesis");
    synth_cmd->fallthrough();
    unsigned controls = 2, trials = 50;
    auto* synth_verify = synth_cmd->add_subcommand("verify", "Random-unitary synthesis check");
    synth_verify->fallthrough();
    synth_verify->add_option("--controls", controls, "Control count")
        ->check(CLI::IsMember({2, 3}));
    synth_verify->add_option("--trials", trials, "Random unitary count");

    auto* holonomy_cmd = app.add_subcommand("holonomy", "Adiabatic holonomy");
    holonomy_cmd->fallthrough();
    std::string family = "rotation", loop_kind = "circle";
    double radius = 0.5, theta = M_PI / 3.0;
    std::size_t steps = 4096;
    auto* holonomy_run = holonomy_cmd->add_subcommand("run", "Holonomy around a loop");
    holonomy_run->fallthrough();
    holonomy_run->add_option("--family", family, "Built-in family name");
    holonomy_run->add_option("--loop", loop_kind, "circle or latitude");
    holonomy_run->add_option("--radius", radius, "Circle radius");
    holonomy_run->add_option("--theta", theta, "Latitude angle");
    holonomy_run->add_option("--steps", steps, "Loop segments");

    auto* verify_all = app.add_subcommand("verify-all", "Run every registered check");
    verify_all->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        // Precedence: flags > config file > built-in defaults.
        if (g.config_path.empty()) {
            if (const char* env = std::getenv("GRASSVOL_CONFIG")) g.config_path = env;
        }
        if (!g.config_path.empty()) g.config = load_config_file(g.config_path, g.config);
        if (seed_set) g.config.seed = seed_flag;
        if (tol_set) g.config.tol = tol_flag;
        if (workers_set) g.config.workers = workers_flag;
        if (timings) g.config.timings = true;

        if (verify_all->parsed()) return run_checks(g, "");
        if (verify_volume->parsed()) return cmd_verify_volume(g, vk, vn, vsamples);
        if (grassmann_cmd->parsed()) return run_checks(g, "grassmann.");
        if (classify->parsed()) return cmd_flag_classify(g, flag_input);
        if (flag_cmd->parsed()) return run_checks(g, "flag.");
        if (gates_verify->parsed()) {
            if (!f_recursion_check(gates_t))
                throw std::runtime_error("reflection recursion failed at requested t");
            return run_checks(g, "gates.");
        }
        if (gates_cmd->parsed()) return run_checks(g, "gates.");
        if (pauli_verify->parsed()) {
            if (!diagonalize_shift(pauli_n))
                throw std::runtime_error("shift diagonalization failed at requested n");
            return run_checks(g, "pauli.");
        }
        if (pauli_cmd->parsed()) return run_checks(g, "pauli.");
        if (synth_verify->parsed()) return cmd_synth_verify(g, controls, trials);
        if (synth_cmd->parsed()) return run_checks(g, "synth.");
        if (holonomy_run->parsed())
            return cmd_holonomy_run(g, family, loop_kind, radius, theta, steps);
        if (holonomy_cmd->parsed()) return run_checks(g, "holonomy.");
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
