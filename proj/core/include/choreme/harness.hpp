#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "choreme/disk_fit.hpp"
#include "choreme/map_model.hpp"
#include "choreme/sampling.hpp"
#include "choreme/scoring.hpp"

namespace choreme {

/// Raised for invalid run or experiment configuration.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct StageTimings {
    double load_ms = 0.0;
    double sample_ms = 0.0;
    double weights_ms = 0.0;
    double fit_ms = 0.0;
    double score_ms = 0.0;
};

/// Everything produced by one sample-and-fit pass over a map.
struct FitOutcome {
    ClassStats stats;
    Sample sample;
    std::vector<WeightedPoint> weighted;
    FitResult fit;
    ScoreReport score;
    StageTimings timings;
};

/// sample -> assign_weights -> max_weight_smallest_disk -> exact scoring.
FitOutcome fit_map(const RegionMap& map, ClassId target, const SampleSpec& spec, AlphaMode alpha,
                   unsigned threads = 0);

struct FitRunConfig {
    std::string input;
    ClassSource source;
    ClassId target = ClassId::first;
    SampleSpec spec;
    AlphaMode alpha;
    std::string out_json;  // empty: write JSON to stdout
    std::string out_svg;   // empty: no SVG
    unsigned threads = 0;
};

/// Result document {disk, raw_score, normalized_score, sample, timings_ms}.
std::string fit_json(const FitOutcome& outcome, const SampleSpec& spec);

/// Runs the full pipeline and writes the requested artifacts. Returns the
/// process exit status; diagnostics go to `err`.
int run_fit(const FitRunConfig& config, std::ostream& out, std::ostream& err);

struct ExperimentConfig {
    std::vector<std::string> inputs;
    ClassSource source = ClassSource::by_class("class");
    std::vector<ClassId> targets{ClassId::first, ClassId::second};
    std::vector<Strategy> strategies{Strategy::random, Strategy::voronoi, Strategy::grid_square,
                                     Strategy::grid_hex};
    std::vector<Scope> scopes{Scope::local, Scope::global};
    std::vector<std::size_t> sample_counts{100, 200, 300, 400, 500, 600, 700, 800, 900, 1000};
    std::vector<std::uint64_t> seeds{0};
    std::optional<SampleSpec> reference = SampleSpec{Strategy::voronoi, Scope::local, 10000, 25, 0};
    AlphaMode alpha;
    std::size_t voronoi_iterations = 25;
    /// Concurrent runs; 0 uses the hardware concurrency.
    unsigned workers = 0;
    std::string out_csv;
};

/// Parses a JSON experiment description. Relative input paths are resolved
/// against `base_dir`.
ExperimentConfig parse_experiment_config(const std::string& text, const std::string& base_dir = {});
ExperimentConfig load_experiment_config(const std::string& path);

struct ExperimentRow {
    std::string map;
    ClassId target = ClassId::first;
    Strategy strategy = Strategy::voronoi;
    Scope scope = Scope::local;
    std::size_t n_requested = 0;
    std::size_t n_actual = 0;
    std::uint64_t seed = 0;
    double raw_score = 0.0;
    double normalized_score = 0.0;
    /// NaN when no run of the group scored above zero.
    double relative_quality = 0.0;
    double fit_ms = 0.0;
    double sample_ms = 0.0;
    std::string status = "ok";
    bool reference = false;
};

/// One row per (map, target, strategy, scope, count, seed), followed in each
/// (map, target) group by the reference run.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config);

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);

}  // namespace choreme
