#include "choreme/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "choreme/svg.hpp"
#include "parallel.hpp"

namespace choreme {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    if (!out.flush()) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace

FitOutcome fit_map(const RegionMap& map, ClassId target, const SampleSpec& spec, AlphaMode alpha,
                   unsigned threads) {
    FitOutcome o;
    o.stats = class_stats(map, target, alpha);

    auto t = Clock::now();
    o.sample = sample_map(map, spec, threads);
    o.timings.sample_ms = ms_since(t);

    t = Clock::now();
    o.weighted = assign_weights(o.sample, map, target, o.stats);
    o.timings.weights_ms = ms_since(t);

    t = Clock::now();
    o.fit = max_weight_smallest_disk(o.weighted, {threads});
    o.timings.fit_ms = ms_since(t);

    t = Clock::now();
    // An empty disk covers nothing and scores exactly zero.
    if (o.fit.empty()) {
        o.score.alpha = o.stats.alpha;
        o.score.normalized = 0.0;
    } else {
        o.score = disk_score(map, o.fit.disk, target, o.stats);
    }
    o.timings.score_ms = ms_since(t);
    return o;
}

std::string fit_json(const FitOutcome& o, const SampleSpec& spec) {
    json doc;
    if (o.fit.empty())
        doc["disk"] = nullptr;
    else
        doc["disk"] = {{"cx", o.fit.disk.center.x}, {"cy", o.fit.disk.center.y}, {"r", o.fit.disk.radius}};
    doc["sample_weight"] = o.fit.weight;
    doc["raw_score"] = o.score.raw_score;
    doc["normalized_score"] = std::isfinite(o.score.normalized) ? json(o.score.normalized) : json(nullptr);
    doc["alpha"] = o.stats.alpha;
    doc["covered_target"] = o.score.covered_target;
    doc["covered_other"] = o.score.covered_other;
    doc["target_class"] = to_int(o.stats.target);
    doc["sample"] = {{"strategy", std::string(to_string(spec.strategy))},
                     {"scope", std::string(to_string(spec.scope))},
                     {"n", o.sample.points.size()},
                     {"n_requested", spec.n_target},
                     {"exact", o.sample.exact},
                     {"seed", spec.seed},
                     {"iterations", spec.voronoi_iterations}};
    doc["timings_ms"] = {{"load", o.timings.load_ms},
                         {"sample", o.timings.sample_ms},
                         {"weights", o.timings.weights_ms},
                         {"fit", o.timings.fit_ms},
                         {"score", o.timings.score_ms}};
    return doc.dump(2) + "\n";
}

int run_fit(const FitRunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.spec.n_target == 0) throw ConfigError("--samples must be at least 1");
        if (config.source.field.empty()) throw ConfigError("a class or value field is required");
        auto t = Clock::now();
        const RegionMap map = load_map_file(config.input, config.source);
        const double load_ms = ms_since(t);

        FitOutcome o = fit_map(map, config.target, config.spec, config.alpha, config.threads);
        o.timings.load_ms = load_ms;

        const std::string doc = fit_json(o, config.spec);
        if (config.out_json.empty())
            out << doc;
        else
            write_file(config.out_json, doc);
        if (!config.out_svg.empty()) {
            const std::optional<Disk> disk = o.fit.empty() ? std::nullopt : std::optional<Disk>(o.fit.disk);
            write_file(config.out_svg, render_svg(map, disk, o.weighted));
        }
        return 0;
    } catch (const ConfigError& e) {
        err << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

namespace {

template <typename T, typename F>
std::vector<T> parse_list(const json& doc, const char* key, F&& parse) {
    std::vector<T> out;
    const json& v = doc.at(key);
    if (!v.is_array() || v.empty()) throw ConfigError(std::string("'") + key + "' must be a non-empty array");
    for (const json& item : v) out.push_back(parse(item));
    return out;
}

std::size_t parse_count(const json& v, const char* what) {
    if (!v.is_number_integer() || v.get<long long>() < 1)
        throw ConfigError(std::string(what) + " must be a positive integer");
    return v.get<std::size_t>();
}

SampleSpec parse_spec(const json& v, std::size_t default_iterations) {
    if (!v.is_object()) throw ConfigError("'reference' must be an object or null");
    SampleSpec s;
    s.strategy = parse_strategy(v.value("strategy", std::string("voronoi")));
    s.scope = parse_scope(v.value("scope", std::string("local")));
    s.n_target = v.contains("samples") ? parse_count(v["samples"], "reference samples") : 10000;
    s.voronoi_iterations = v.value("iterations", default_iterations);
    s.seed = v.value("seed", std::uint64_t{0});
    return s;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

std::string csv_number(double v) {
    if (std::isnan(v)) return "nan";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_ms(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

}  // namespace

ExperimentConfig parse_experiment_config(const std::string& text, const std::string& base_dir) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("experiment config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("experiment config must be a JSON object");

    ExperimentConfig cfg;
    try {
        cfg.inputs = parse_list<std::string>(doc, "inputs", [&](const json& v) {
            std::filesystem::path p(v.get<std::string>());
            if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
            return p.string();
        });
        if (doc.contains("class_field") && doc.contains("value_field"))
            throw ConfigError("give either 'class_field' or 'value_field', not both");
        if (doc.contains("value_field")) cfg.source = ClassSource::by_value(doc["value_field"].get<std::string>());
        if (doc.contains("class_field")) cfg.source = ClassSource::by_class(doc["class_field"].get<std::string>());
        if (doc.contains("target_classes"))
            cfg.targets = parse_list<ClassId>(doc, "target_classes",
                                              [](const json& v) { return class_from_int(v.get<long long>()); });
        if (doc.contains("strategies"))
            cfg.strategies = parse_list<Strategy>(doc, "strategies",
                                                  [](const json& v) { return parse_strategy(v.get<std::string>()); });
        if (doc.contains("scopes"))
            cfg.scopes =
                parse_list<Scope>(doc, "scopes", [](const json& v) { return parse_scope(v.get<std::string>()); });
        if (doc.contains("sample_counts"))
            cfg.sample_counts = parse_list<std::size_t>(
                doc, "sample_counts", [](const json& v) { return parse_count(v, "sample count"); });
        if (doc.contains("seeds"))
            cfg.seeds = parse_list<std::uint64_t>(doc, "seeds", [](const json& v) { return v.get<std::uint64_t>(); });
        cfg.voronoi_iterations = doc.value("iterations", cfg.voronoi_iterations);
        if (doc.contains("reference"))
            cfg.reference = doc["reference"].is_null()
                                ? std::nullopt
                                : std::optional<SampleSpec>(parse_spec(doc["reference"], cfg.voronoi_iterations));
        if (doc.contains("alpha")) {
            const json& a = doc["alpha"];
            if (a.is_string() && a.get<std::string>() == "auto")
                cfg.alpha = AlphaMode::automatic();
            else if (a.is_number())
                cfg.alpha = AlphaMode::fixed_value(a.get<double>());
            else
                throw ConfigError("'alpha' must be \"auto\" or a number");
        }
        cfg.workers = doc.value("workers", 0u);
        if (doc.contains("out_csv")) cfg.out_csv = doc["out_csv"].get<std::string>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad experiment config: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    } catch (const MapError& e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_experiment_config(buf.str(), std::filesystem::path(path).parent_path().string());
}

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config) {
    if (config.inputs.empty() || config.targets.empty() || config.strategies.empty() || config.scopes.empty() ||
        config.sample_counts.empty() || config.seeds.empty())
        throw ConfigError("experiment lists must be non-empty");

    struct Job {
        std::size_t map;
        SampleSpec spec;
        ClassId target;
        bool reference;
    };
    std::vector<Job> jobs;
    for (std::size_t m = 0; m < config.inputs.size(); ++m)
        for (ClassId target : config.targets) {
            for (Strategy st : config.strategies)
                for (Scope sc : config.scopes)
                    for (std::size_t n : config.sample_counts)
                        for (std::uint64_t seed : config.seeds)
                            jobs.push_back({m, {st, sc, n, config.voronoi_iterations, seed}, target, false});
            if (config.reference) jobs.push_back({m, *config.reference, target, true});
        }

    std::vector<std::optional<RegionMap>> maps(config.inputs.size());
    std::vector<std::string> load_errors(config.inputs.size());
    for (std::size_t m = 0; m < config.inputs.size(); ++m) {
        try {
            maps[m] = load_map_file(config.inputs[m], config.source);
        } catch (const std::exception& e) {
            load_errors[m] = e.what();
        }
    }

    const unsigned workers = detail::resolve_threads(config.workers);
    const unsigned fit_threads = workers > 1 ? 1u : 0u;
    std::vector<ExperimentRow> rows(jobs.size());
    detail::parallel_for(jobs.size(), workers, [&](std::size_t k, unsigned) {
        const Job& job = jobs[k];
        ExperimentRow& row = rows[k];
        row.map = config.inputs[job.map];
        row.target = job.target;
        row.strategy = job.spec.strategy;
        row.scope = job.spec.scope;
        row.n_requested = job.spec.n_target;
        row.seed = job.spec.seed;
        row.reference = job.reference;
        row.raw_score = row.normalized_score = row.relative_quality = std::numeric_limits<double>::quiet_NaN();
        if (!maps[job.map]) {
            row.status = "error: " + load_errors[job.map];
            return;
        }
        try {
            const FitOutcome o = fit_map(*maps[job.map], job.target, job.spec, config.alpha, fit_threads);
            row.n_actual = o.sample.points.size();
            row.raw_score = o.score.raw_score;
            row.normalized_score = o.score.normalized;
            row.fit_ms = o.timings.weights_ms + o.timings.fit_ms;
            row.sample_ms = o.timings.sample_ms;
            row.status = "ok";
        } catch (const std::exception& e) {
            row.status = std::string("error: ") + e.what();
        }
    });

    // Relative quality against the best exact score of each (map, target).
    for (std::size_t begin = 0; begin < rows.size();) {
        std::size_t end = begin;
        double best = -std::numeric_limits<double>::infinity();
        while (end < rows.size() && jobs[end].map == jobs[begin].map && jobs[end].target == jobs[begin].target) {
            if (rows[end].status == "ok") best = std::max(best, rows[end].raw_score);
            ++end;
        }
        for (std::size_t k = begin; k < end; ++k)
            if (rows[k].status == "ok" && best > 0.0) rows[k].relative_quality = relative_quality(rows[k].raw_score, best);
        begin = end;
    }
    return rows;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
    out << "map,target_class,strategy,scope,n_requested,n_actual,seed,raw_score,normalized_score,"
           "relative_quality,fit_ms,sample_ms,status\n";
    for (const ExperimentRow& r : rows) {
        out << csv_field(r.map) << ',' << to_int(r.target) << ',' << to_string(r.strategy) << ','
            << to_string(r.scope) << ',' << r.n_requested << ',' << r.n_actual << ',' << r.seed << ','
            << csv_number(r.raw_score) << ',' << csv_number(r.normalized_score) << ','
            << csv_number(r.relative_quality) << ',' << csv_ms(r.fit_ms) << ',' << csv_ms(r.sample_ms) << ','
            << csv_field(r.status) << '\n';
    }
}

}  // namespace choreme
