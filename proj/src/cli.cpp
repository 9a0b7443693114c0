#include "blockage/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "blockage/analytic.hpp"
#include "blockage/layout.hpp"
#include "blockage/montecarlo.hpp"

namespace blockage::cli {

using nlohmann::json;
using nlohmann::ordered_json;
namespace fs = std::filesystem;

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

// ---------------------------------------------------------------------------
// Config parsing

namespace {

double get_number(const json& v, const std::string& key) {
    if (!v.is_number()) throw ConfigError(key + ": expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ConfigError(key + ": must be finite");
    return x;
}

std::uint64_t get_count(const json& v, const std::string& key) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) throw ConfigError(key + ": expected a non-negative integer");
    return v.get<std::uint64_t>();
}

bool get_bool(const json& v, const std::string& key) {
    if (!v.is_boolean()) throw ConfigError(key + ": expected true or false");
    return v.get<bool>();
}

std::string get_string(const json& v, const std::string& key) {
    if (!v.is_string()) throw ConfigError(key + ": expected a string");
    return v.get<std::string>();
}

void reject_unknown(const json& obj, const std::set<std::string>& known, const std::string& where) {
    for (const auto& [key, _] : obj.items()) {
        if (!known.count(key)) throw ConfigError(where + key + ": unknown key");
    }
}

/// Either an explicit array or {"start", "stop", "count"} (inclusive linspace).
std::vector<double> get_grid(const json& v, const std::string& key) {
    std::vector<double> grid;
    if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i) grid.push_back(get_number(v[i], key + "[" + std::to_string(i) + "]"));
    } else if (v.is_object()) {
        reject_unknown(v, {"start", "stop", "count"}, key + ".");
        if (!v.contains("start") || !v.contains("stop") || !v.contains("count")) {
            throw ConfigError(key + ": range form needs start, stop and count");
        }
        const double start = get_number(v["start"], key + ".start");
        const double stop = get_number(v["stop"], key + ".stop");
        const auto count = get_count(v["count"], key + ".count");
        if (count < 2) throw ConfigError(key + ".count: must be >= 2");
        for (std::uint64_t i = 0; i < count; ++i) {
            grid.push_back(i + 1 == count ? stop : start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1));
        }
    } else {
        throw ConfigError(key + ": expected an array or a {start, stop, count} object");
    }
    return grid;
}

void check_grid(const std::vector<double>& grid, const std::string& key, bool strictly_positive) {
    if (grid.empty()) throw ConfigError(key + ": must not be empty");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (strictly_positive ? !(grid[i] > 0.0) : !(grid[i] >= 0.0)) {
            throw ConfigError(key + "[" + std::to_string(i) + "]: must be " + (strictly_positive ? "> 0" : ">= 0"));
        }
        if (i > 0 && grid[i] < grid[i - 1]) throw ConfigError(key + ": must be sorted ascending");
    }
}

LayoutSpec parse_layout_spec(const json& v, const fs::path& base_dir) {
    if (!v.is_object()) throw ConfigError("layout: expected an object");
    reject_unknown(v, {"path", "thinning", "thinning_seed", "queries", "random_bs"}, "layout.");
    LayoutSpec spec;
    if (!v.contains("path")) throw ConfigError("layout.path: missing");
    spec.path = get_string(v["path"], "layout.path");
    if (spec.path.is_relative()) spec.path = base_dir / spec.path;
    if (v.contains("thinning")) spec.thinning = get_number(v["thinning"], "layout.thinning");
    if (v.contains("thinning_seed")) spec.thinning_seed = get_count(v["thinning_seed"], "layout.thinning_seed");
    if (!(spec.thinning > 0.0 && spec.thinning <= 1.0)) throw ConfigError("layout.thinning: must be in (0, 1]");
    if (v.contains("queries")) {
        const json& qs = v["queries"];
        if (!qs.is_array()) throw ConfigError("layout.queries: expected an array");
        for (std::size_t i = 0; i < qs.size(); ++i) {
            const std::string where = "layout.queries[" + std::to_string(i) + "]";
            const json& q = qs[i];
            if (!q.is_object()) throw ConfigError(where + ": expected an object");
            reject_unknown(q, {"bs_u", "bs_v", "u_lo", "u_hi", "side"}, where + ".");
            QuerySpec spec_q;
            for (const char* key : {"bs_u", "bs_v", "u_lo", "u_hi"}) {
                if (!q.contains(key)) throw ConfigError(where + "." + key + ": missing");
            }
            spec_q.bs_u = get_number(q["bs_u"], where + ".bs_u");
            spec_q.bs_v = get_number(q["bs_v"], where + ".bs_v");
            spec_q.u_lo = get_number(q["u_lo"], where + ".u_lo");
            spec_q.u_hi = get_number(q["u_hi"], where + ".u_hi");
            if (q.contains("side")) {
                if (!q["side"].is_number_integer() || (q["side"] != 1 && q["side"] != -1)) {
                    throw ConfigError(where + ".side: must be 1 or -1");
                }
                spec_q.side = q["side"].get<int>();
            }
            spec.queries.push_back(spec_q);
        }
    }
    if (v.contains("random_bs")) {
        const json& rb = v["random_bs"];
        if (!rb.is_object()) throw ConfigError("layout.random_bs: expected an object");
        reject_unknown(rb, {"count", "seed", "trajectory_length"}, "layout.random_bs.");
        RandomBsSpec spec_rb;
        if (!rb.contains("count") || !rb.contains("trajectory_length")) {
            throw ConfigError("layout.random_bs: needs count and trajectory_length");
        }
        spec_rb.count = get_count(rb["count"], "layout.random_bs.count");
        if (rb.contains("seed")) spec_rb.seed = get_count(rb["seed"], "layout.random_bs.seed");
        spec_rb.trajectory_length = get_number(rb["trajectory_length"], "layout.random_bs.trajectory_length");
        if (!(spec_rb.trajectory_length > 0.0)) throw ConfigError("layout.random_bs.trajectory_length: must be > 0");
        spec.random_bs = spec_rb;
    }
    if (spec.queries.empty() && !spec.random_bs) throw ConfigError("layout: needs queries or random_bs");
    return spec;
}

}  // namespace

Config parse_config(const std::string& json_text, const fs::path& base_dir) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config: top level must be an object");
    reject_unknown(doc,
                   {"lambda", "r", "d", "h_bs", "h_user", "l_min", "l_max", "h_min", "h_max", "r_values", "z_grid",
                    "n_trials", "seed", "include_censored", "threads", "out", "export_scene", "layout"},
                   "");

    Config c;
    const std::pair<const char*, double ScenarioParams::*> scalars[] = {
        {"lambda", &ScenarioParams::lambda}, {"r", &ScenarioParams::r},         {"d", &ScenarioParams::d},
        {"h_bs", &ScenarioParams::h_bs},     {"h_user", &ScenarioParams::h_user}, {"l_min", &ScenarioParams::l_min},
        {"l_max", &ScenarioParams::l_max},   {"h_min", &ScenarioParams::h_min}, {"h_max", &ScenarioParams::h_max}};
    for (const auto& [key, member] : scalars) {
        if (doc.contains(key)) c.params.*member = get_number(doc[key], key);
    }
    if (doc.contains("r_values")) c.r_values = get_grid(doc["r_values"], "r_values");
    if (doc.contains("z_grid")) {
        c.z_grid = get_grid(doc["z_grid"], "z_grid");
        check_grid(c.z_grid, "z_grid", false);
    }
    if (doc.contains("n_trials")) c.n_trials = get_count(doc["n_trials"], "n_trials");
    if (doc.contains("seed")) c.seed = get_count(doc["seed"], "seed");
    if (doc.contains("include_censored")) c.include_censored = get_bool(doc["include_censored"], "include_censored");
    if (doc.contains("threads")) c.threads = static_cast<unsigned>(get_count(doc["threads"], "threads"));
    if (doc.contains("out")) {
        c.out_dir = get_string(doc["out"], "out");
        if (c.out_dir.is_relative()) c.out_dir = base_dir / c.out_dir;
    }
    if (doc.contains("export_scene")) c.export_scene = fs::path(get_string(doc["export_scene"], "export_scene"));
    if (doc.contains("layout")) c.layout = parse_layout_spec(doc["layout"], base_dir);
    if (c.n_trials < 1) throw ConfigError("n_trials: must be >= 1");
    return c;
}

Config load_config(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    const fs::path base = path.has_parent_path() ? path.parent_path() : fs::path(".");
    Config c = parse_config(buffer.str(), base);
    return c;
}

void apply(Config& c, const Overrides& o) {
    if (o.seed) c.seed = *o.seed;
    if (o.trials) {
        if (*o.trials < 1) throw ConfigError("--trials: must be >= 1");
        c.n_trials = *o.trials;
    }
    if (o.out_dir) c.out_dir = *o.out_dir;
    if (o.r_values) c.r_values = *o.r_values;
    if (o.threads) c.threads = *o.threads;
    if (o.include_censored) c.include_censored = true;
}

// ---------------------------------------------------------------------------
// Output helpers

namespace {

class CsvWriter {
  public:
    CsvWriter(const fs::path& path, std::initializer_list<const char*> header) : path_(path), out_(path) {
        if (!out_) throw IoError("cannot write " + path.string());
        bool first = true;
        for (const char* h : header) {
            out_ << (first ? "" : ",") << h;
            first = false;
        }
        out_ << '\n';
    }

    CsvWriter& num(double v) { return cell(format_number(v)); }
    CsvWriter& integer(std::uint64_t v) { return cell(std::to_string(v)); }
    CsvWriter& text(const std::string& v) { return cell(v); }

    void end_row() {
        out_ << '\n';
        fresh_ = true;
    }

    void close() {
        out_.close();
        if (!out_) throw IoError("failed writing " + path_.string());
    }

  private:
    CsvWriter& cell(const std::string& v) {
        if (!fresh_) out_ << ',';
        out_ << v;
        fresh_ = false;
        return *this;
    }

    fs::path path_;
    std::ofstream out_;
    bool fresh_ = true;
};

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    out << text;
    out.close();
    if (!out) throw IoError("failed writing " + path.string());
}

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
}

/// JSON number that survives NaN (as null).
ordered_json jnum(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

ordered_json summary_json(const analytic::AnalyticSummary& s) {
    ordered_json j;
    j["eta_x"] = jnum(s.eta.eta_x);
    j["eta_tilde"] = jnum(s.eta.eta_tilde);
    j["regime"] = to_string(s.eta.regime);
    j["p_los"] = jnum(s.p_los_point);
    j["p_nlos"] = jnum(s.p_nlos_point);
    j["mean_Z"] = jnum(s.mean_los_len);
    j["mean_S"] = jnum(s.mean_nlos_len);
    j["density"] = jnum(s.density_per_m);
    j["r_max_density"] = jnum(s.r_max_density);
    j["r_equal"] = jnum(s.r_equal_lengths);
    j["max_density"] = jnum(s.max_density_value);
    j["equal_length"] = jnum(s.equal_length_value);
    return j;
}

std::vector<double> default_z_grid(double mean_z) {
    std::vector<double> grid;
    constexpr int kPoints = 101;
    for (int i = 0; i < kPoints; ++i) grid.push_back(5.0 * mean_z * i / (kPoints - 1));
    return grid;
}

std::vector<double> cdf_column(const std::vector<double>& samples, const std::vector<double>& grid) {
    std::vector<double> col(grid.size(), std::nan(""));
    if (samples.empty()) return col;
    const auto cdf = montecarlo::empirical_cdf(samples, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) col[i] = cdf[i].value;
    return col;
}

}  // namespace

// ---------------------------------------------------------------------------
// Commands

std::vector<fs::path> cmd_analytic(const Config& c) {
    const ScenarioParams p = validate(c.params);
    if (!c.r_values.empty()) check_grid(c.r_values, "r_values", true);
    ensure_dir(c.out_dir);
    std::vector<fs::path> written;

    const fs::path summary_path = c.out_dir / "analytic_summary.json";
    ordered_json doc = summary_json(analytic::summarize(p));
    write_text(summary_path, doc.dump(2) + "\n");
    written.push_back(summary_path);

    if (!c.r_values.empty()) {
        const fs::path path = c.out_dir / "analytic_r.csv";
        CsvWriter csv(path, {"r", "eta_x", "eta_tilde", "p_los", "p_nlos", "mean_Z", "mean_S", "density"});
        for (double r : c.r_values) {
            ScenarioParams q = p;
            q.r = r;
            const auto s = analytic::summarize(q);
            csv.num(r).num(s.eta.eta_x).num(s.eta.eta_tilde).num(s.p_los_point).num(s.p_nlos_point);
            csv.num(s.mean_los_len).num(s.mean_nlos_len).num(s.density_per_m);
            csv.end_row();
        }
        csv.close();
        written.push_back(path);
    }
    if (!c.z_grid.empty()) {
        const fs::path path = c.out_dir / "analytic_z.csv";
        CsvWriter csv(path, {"z", "p_segment_los", "cdf_bound", "pdf_approx"});
        for (double z : c.z_grid) {
            csv.num(z).num(analytic::p_segment_los(p, z)).num(analytic::cdf_los_bound(p, z)).num(analytic::pdf_los_approx(p, z));
            csv.end_row();
        }
        csv.close();
        written.push_back(path);
    }
    return written;
}

std::vector<fs::path> cmd_simulate(const Config& c) {
    const ScenarioParams p = validate(c.params);
    ensure_dir(c.out_dir);
    std::vector<fs::path> written;

    montecarlo::TrialConfig trial;
    trial.params = p;
    trial.n_trials = c.n_trials;
    trial.seed = c.seed;
    trial.include_censored = c.include_censored;
    trial.threads = c.threads;

    const fs::path intervals_path = c.out_dir / "simulate_intervals.csv";
    CsvWriter rows(intervals_path, {"trial", "kind", "start", "end", "length", "censored"});
    montecarlo::RunStats stats;
    montecarlo::for_each_trial(trial, [&](std::uint64_t index, const geometry::IntervalSet& set) {
        for (const auto& iv : set) {
            rows.integer(index).text(geometry::to_string(iv.kind)).num(iv.start).num(iv.end).num(iv.length());
            rows.integer(iv.censored ? 1 : 0);
            rows.end_row();
        }
        stats.add_trial(set, trial.include_censored);
    });
    rows.close();
    written.push_back(intervals_path);

    const std::vector<double> grid = c.z_grid.empty() ? default_z_grid(analytic::mean_los_length(p)) : c.z_grid;
    const auto los_cdf = cdf_column(stats.los_lengths, grid);
    const auto nlos_cdf = cdf_column(stats.nlos_lengths, grid);
    const double n_los = static_cast<double>(stats.los_lengths.size());
    const fs::path cdf_path = c.out_dir / "simulate_cdf.csv";
    CsvWriter cdf(cdf_path, {"z", "cdf_los_empirical", "cdf_nlos_empirical", "cdf_los_bound", "tol_3sigma"});
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double bound = analytic::cdf_los_bound(p, grid[i]);
        const double tol = n_los > 0 ? 3.0 * std::sqrt(bound * (1.0 - bound) / n_los) : std::nan("");
        cdf.num(grid[i]).num(los_cdf[i]).num(nlos_cdf[i]).num(bound).num(tol);
        cdf.end_row();
    }
    cdf.close();
    written.push_back(cdf_path);

    if (c.export_scene) {
        const fs::path scene_path = c.export_scene->is_absolute() ? *c.export_scene : c.out_dir / *c.export_scene;
        const auto scene = montecarlo::trial_scene(p, c.seed, 0);
        write_text(scene_path, layout::to_json(layout::scene_to_layout(scene, p, "trial-0")));
        written.push_back(scene_path);
    }

    ordered_json doc;
    doc["n_trials"] = c.n_trials;
    doc["seed"] = c.seed;
    doc["include_censored"] = c.include_censored;
    doc["total_trajectory_length"] = stats.total_trajectory_length;
    doc["point_los_frequency"] = jnum(stats.point_los_frequency());
    doc["mean_Z"] = jnum(stats.mean_los_length());
    doc["mean_S"] = jnum(stats.mean_nlos_length());
    doc["los_density"] = jnum(stats.los_density());
    doc["nlos_density"] = jnum(stats.nlos_density());
    doc["n_los_intervals"] = stats.n_los_intervals;
    doc["n_nlos_intervals"] = stats.n_nlos_intervals;
    doc["n_los_censored"] = stats.n_los_censored;
    doc["n_nlos_censored"] = stats.n_nlos_censored;
    doc["analytic"] = summary_json(analytic::summarize(p));
    const fs::path summary_path = c.out_dir / "simulate_summary.json";
    write_text(summary_path, doc.dump(2) + "\n");
    written.push_back(summary_path);
    return written;
}

std::vector<fs::path> cmd_sweep(const Config& c) {
    const ScenarioParams p = validate(c.params);
    if (c.r_values.empty()) throw ConfigError("r_values: sweep needs at least one r (config r_values or --r)");
    check_grid(c.r_values, "r_values", true);
    ensure_dir(c.out_dir);

    const auto rows = montecarlo::density_sweep(p, c.r_values, c.n_trials, c.seed, c.include_censored, c.threads);
    const fs::path csv_path = c.out_dir / "sweep.csv";
    CsvWriter csv(csv_path, {"r", "density_los", "density_nlos", "meanZ_emp", "meanS_emp", "meanZ_theory",
                             "meanS_theory", "density_theory"});
    for (const auto& row : rows) {
        ScenarioParams q = p;
        q.r = row.r;
        csv.num(row.r).num(row.los_density).num(row.nlos_density).num(row.mean_z).num(row.mean_s);
        csv.num(analytic::mean_los_length(q)).num(analytic::mean_nlos_length(q)).num(analytic::interval_density(q));
        csv.end_row();
    }
    csv.close();

    const auto features = montecarlo::sweep_features(rows);
    const auto radii = analytic::critical_radii(p);
    ordered_json doc;
    doc["n_trials"] = c.n_trials;
    doc["seed"] = c.seed;
    doc["peak_r_grid"] = jnum(features.peak_r_grid);
    doc["peak_r"] = jnum(features.peak_r);
    doc["peak_density"] = jnum(features.peak_density);
    doc["crossing_r"] = features.has_crossing ? jnum(features.crossing_r) : ordered_json(nullptr);
    doc["crossing_length"] = features.has_crossing ? jnum(features.crossing_length) : ordered_json(nullptr);
    doc["r_max_density_theory"] = radii.r_max_density;
    doc["max_density_theory"] = analytic::max_density_value(p);
    doc["r_equal_theory"] = radii.r_equal;
    doc["equal_length_theory"] = analytic::equal_length_value(p);
    const fs::path summary_path = c.out_dir / "sweep_summary.json";
    write_text(summary_path, doc.dump(2) + "\n");
    return {csv_path, summary_path};
}

std::vector<fs::path> cmd_layout(const Config& c) {
    if (!c.layout) throw ConfigError("layout: the layout command needs a \"layout\" section");
    const LayoutSpec& spec = *c.layout;
    const layout::LayoutFile file = layout::load_layout(spec.path);
    const bool line_layout = file.buildings.empty();

    std::vector<double> rs = c.r_values;
    if (rs.empty()) {
        if (!(c.params.r > 0.0)) throw ConfigError("r: the layout command needs r or r_values");
        rs.push_back(c.params.r);
    }
    check_grid(rs, "r_values", true);
    const double lambda_buildings =
        (file.buildings.empty() && file.lines.empty()) ? 0.0 : layout::estimate_density(file) * spec.thinning;
    ensure_dir(c.out_dir);

    const fs::path intervals_path = c.out_dir / "layout_intervals.csv";
    const fs::path cdf_path = c.out_dir / "layout_cdf.csv";
    CsvWriter rows(intervals_path, {"r", "query", "kind", "start", "end", "length", "censored"});
    CsvWriter cdf(cdf_path, {"r", "z", "cdf_empirical", "cdf_analytic", "n_samples"});

    ordered_json doc;
    doc["name"] = file.name;
    doc["n_buildings"] = file.buildings.size();
    doc["n_lines"] = file.lines.size();
    doc["thinning"] = spec.thinning;
    doc["lambda_buildings"] = lambda_buildings;
    doc["per_r"] = ordered_json::array();

    for (std::size_t ir = 0; ir < rs.size(); ++ir) {
        const double r = rs[ir];
        const double factor = line_layout ? 1.0 : layout::effective_line_factor(r);

        layout::LayoutQuery proto;
        proto.h_bs = c.params.h_bs;
        proto.h_user = c.params.h_user;
        proto.r = r;
        proto.thinning = spec.thinning;
        proto.thinning_seed = spec.thinning_seed;

        std::vector<layout::LayoutQuery> queries;
        for (const QuerySpec& qs : spec.queries) {
            layout::LayoutQuery q = proto;
            q.bs_u = qs.bs_u;
            q.bs_v = qs.bs_v;
            q.u_lo = qs.u_lo;
            q.u_hi = qs.u_hi;
            q.side = qs.side;
            queries.push_back(q);
        }
        if (spec.random_bs) {
            const auto extra = layout::random_queries(file, proto, spec.random_bs->trajectory_length,
                                                      spec.random_bs->count, stream_seed(spec.random_bs->seed, ir));
            queries.insert(queries.end(), extra.begin(), extra.end());
        }

        montecarlo::RunStats pooled;
        for (std::size_t iq = 0; iq < queries.size(); ++iq) {
            const auto result = layout::evaluate_layout(file, queries[iq], c.include_censored);
            for (const auto& iv : result.intervals) {
                rows.num(r).integer(iq).text(geometry::to_string(iv.kind)).num(iv.start).num(iv.end).num(iv.length());
                rows.integer(iv.censored ? 1 : 0);
                rows.end_row();
            }
            pooled.merge(result.stats);
        }

        ordered_json entry;
        entry["r"] = r;
        entry["line_factor"] = factor;
        entry["lambda_lines"] = factor * lambda_buildings;
        entry["n_queries"] = queries.size();
        entry["n_los_samples"] = pooled.los_lengths.size();
        entry["point_los_frequency"] = jnum(pooled.point_los_frequency());
        entry["mean_Z_empirical"] = jnum(pooled.mean_los_length());

        // Analytic overlay: the model with lambda replaced by the line density.
        std::optional<ScenarioParams> overlay;
        if (lambda_buildings > 0.0) {
            ScenarioParams p = c.params;
            p.lambda = factor * lambda_buildings;
            p.r = r;
            p.d = queries.empty() ? 1.0 : queries.front().u_hi - queries.front().u_lo;
            overlay = validate(p);
            entry["mean_Z_analytic"] = analytic::mean_los_length(*overlay);
            entry["eta_tilde"] = analytic::eta_tilde(*overlay);
        }
        std::vector<double> grid = c.z_grid;
        if (grid.empty()) {
            const double mean = overlay ? analytic::mean_los_length(*overlay)
                                        : (pooled.los_lengths.empty() ? 1.0 : pooled.mean_los_length());
            grid = default_z_grid(mean);
        }
        const auto empirical = cdf_column(pooled.los_lengths, grid);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            cdf.num(r).num(grid[i]).num(empirical[i]);
            cdf.num(overlay ? analytic::cdf_los_bound(*overlay, grid[i]) : std::nan(""));
            cdf.integer(pooled.los_lengths.size());
            cdf.end_row();
        }
        doc["per_r"].push_back(entry);
    }
    rows.close();
    cdf.close();

    const fs::path summary_path = c.out_dir / "layout_summary.json";
    write_text(summary_path, doc.dump(2) + "\n");
    return {intervals_path, cdf_path, summary_path};
}

int run(const std::string& command, const Config& config, std::ostream& err) {
    try {
        if (command == "analytic") {
            cmd_analytic(config);
        } else if (command == "simulate") {
            cmd_simulate(config);
        } else if (command == "sweep") {
            cmd_sweep(config);
        } else if (command == "layout") {
            cmd_layout(config);
        } else {
            err << "error: unknown command '" << command << "' (expected analytic, simulate, sweep or layout)\n";
            return kExitConfig;
        }
        return kExitOk;
    } catch (const ValidationError& e) {
        err << "invalid parameters: " << e.what() << '\n';
        return kExitConfig;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const layout::LayoutError& e) {
        err << "layout error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const layout::QueryError& e) {
        err << "query error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::ios_base::failure& e) {
        err << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const fs::filesystem_error& e) {
        err << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << '\n';
        return kExitConfig;
    }
}

}  // namespace blockage::cli
