// choreme: fit a disk choreme to a two-class region map, or run the
// strategy comparison experiment.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "choreme/harness.hpp"

namespace {

choreme::AlphaMode parse_alpha(const std::string& text) {
    if (text == "auto") return choreme::AlphaMode::automatic();
    std::size_t used = 0;
    double a = 0.0;
    try {
        a = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || !(a >= 0.0 && a <= 1.0))
        throw choreme::ConfigError("--alpha must be 'auto' or a number in [0, 1]");
    return choreme::AlphaMode::fixed_value(a);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Disk choremes for two-class region maps"};
    app.require_subcommand(1);

    auto* fit = app.add_subcommand("fit", "Sample a map, fit the best disk and score it exactly");
    std::string input, class_field, value_field, strategy = "voronoi", scope = "local", alpha = "auto";
    std::string out_json, out_svg;
    int target = 1;
    long long samples = -1;
    std::size_t iterations = 25;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    fit->add_option("--input", input, "GeoJSON FeatureCollection")->required();
    auto* cf = fit->add_option("--class-field", class_field, "Property holding the class (1 or 2)");
    auto* vf = fit->add_option("--value-field", value_field, "Numeric property split into two classes");
    cf->excludes(vf);
    vf->excludes(cf);
    fit->add_option("--target-class", target, "Class the disk should cover")->required()->check(CLI::IsMember({1, 2}));
    fit->add_option("--strategy", strategy)
        ->check(CLI::IsMember({"random", "voronoi", "grid-square", "grid-hex"}))
        ->required();
    fit->add_option("--scope", scope)->check(CLI::IsMember({"local", "global"}))->required();
    fit->add_option("--samples", samples, "Number of sample points")->required();
    fit->add_option("--iterations", iterations, "Lloyd iterations for the voronoi strategy")->capture_default_str();
    fit->add_option("--seed", seed, "Random seed")->capture_default_str();
    fit->add_option("--alpha", alpha, "'auto' or a fixed weight in [0, 1]")->capture_default_str();
    fit->add_option("--out-json", out_json, "Result JSON (default: standard output)");
    fit->add_option("--out-svg", out_svg, "SVG rendering of map, samples and disk");
    fit->add_option("--threads", threads, "Worker threads (0: all cores)")->capture_default_str();

    auto* exp = app.add_subcommand("experiment", "Run the strategy comparison and write a CSV");
    std::string config_path, out_csv;
    exp->add_option("--config", config_path, "Experiment description (JSON)")->required();
    exp->add_option("--out-csv", out_csv, "CSV output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (fit->parsed()) {
        choreme::FitRunConfig cfg;
        try {
            if (class_field.empty() == value_field.empty())
                throw choreme::ConfigError("exactly one of --class-field and --value-field is required");
            if (samples < 1) throw choreme::ConfigError("--samples must be at least 1");
            cfg.input = input;
            cfg.source = class_field.empty() ? choreme::ClassSource::by_value(value_field)
                                             : choreme::ClassSource::by_class(class_field);
            cfg.target = choreme::class_from_int(target);
            cfg.spec.strategy = choreme::parse_strategy(strategy);
            cfg.spec.scope = choreme::parse_scope(scope);
            cfg.spec.n_target = static_cast<std::size_t>(samples);
            cfg.spec.voronoi_iterations = iterations;
            cfg.spec.seed = seed;
            cfg.alpha = parse_alpha(alpha);
            cfg.out_json = out_json;
            cfg.out_svg = out_svg;
            cfg.threads = threads;
        } catch (const std::exception& e) {
            std::cerr << "configuration error: " << e.what() << '\n';
            return 2;
        }
        return choreme::run_fit(cfg, std::cout, std::cerr);
    }

    try {
        choreme::ExperimentConfig cfg = choreme::load_experiment_config(config_path);
        cfg.out_csv = out_csv;
        const auto rows = choreme::run_experiment(cfg);
        std::ofstream out(out_csv, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open '" + out_csv + "' for writing");
        choreme::write_csv(out, rows);
        if (!out.flush()) throw std::runtime_error("failed writing '" + out_csv + "'");
        std::size_t failed = 0;
        for (const auto& r : rows) failed += r.status != "ok";
        if (failed) std::cerr << failed << " of " << rows.size() << " runs failed; see the status column\n";
        return 0;
    } catch (const choreme::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
