// irumap command-line tool: compute pixelwise U-value maps from paired
// infrared surface-temperature rasters, plus the supporting average / diff /
// stats / validate / synth plumbing.
//
// Exit codes: 0 success, 1 validation or configuration error, 2 I/O error,
// 3 degenerate computation (empty map).

#include <cmath>
#include <cstddef>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "irumap/errors.hpp"
#include "irumap/grid_io.hpp"
#include "irumap/heatmap.hpp"
#include "irumap/io_util.hpp"
#include "irumap/keyvalue.hpp"
#include "irumap/pipeline.hpp"
#include "irumap/scene_io.hpp"
#include "irumap/synth.hpp"

namespace {

using namespace irumap;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;
constexpr int kExitDegenerate = 3;

GridUnit unit_from_flag(const std::string& token) {
    if (token == "K") return GridUnit::Kelvin;
    if (token == "C") return GridUnit::Celsius;
    throw ConfigError("--unit must be K or C, got '" + token + "'");
}

double to_kelvin(double value, GridUnit unit) {
    return unit == GridUnit::Celsius ? value + 273.15 : value;
}

// Layers a flat key=value config file under the command line: explicit flags
// win, file values fill whatever was left unset, defaults cover the rest.
// Options registered through option()/flag() are addressable in the file by
// their long name without dashes (`--mesh-rows` -> `mesh-rows=30`).
class ConfigLayer {
public:
    explicit ConfigLayer(CLI::App* sub) : sub_(sub) {
        sub->add_option("--config", path_, "Flat key=value config file (flags override it)");
    }

    template <typename T>
    CLI::Option* option(const std::string& name, T& target, const std::string& description) {
        CLI::Option* opt = sub_->add_option(name, target, description);
        bindings_.emplace(opt->get_single_name(), Binding{opt, [&target](const std::string& raw) {
                                                      return assign(raw, target);
                                                  }});
        return opt;
    }

    CLI::Option* flag(const std::string& name, bool& target, const std::string& description) {
        CLI::Option* opt = sub_->add_flag(name, target, description);
        bindings_.emplace(opt->get_single_name(), Binding{opt, [&target](const std::string& raw) {
                                                      return assign(raw, target);
                                                  }});
        return opt;
    }

    CLI::Option* require(CLI::Option* opt) {
        required_.push_back(opt);
        return opt;
    }

    // Loads the config file (if any), fills in options the command line left
    // unset, then enforces the required set across both sources.
    void finalize() const {
        std::set<std::string> from_file;
        if (!path_.empty()) {
            const KeyValueDoc doc = KeyValueDoc::load(path_);
            for (const auto& [key, raw] : doc.entries()) {
                const auto found = bindings_.find(key);
                if (found == bindings_.end())
                    throw ParseError(path_ + ": unknown key '" + key + "' for '" +
                                     sub_->get_name() + "'");
                if (found->second.opt->count() > 0) continue;  // flag overrides file
                if (!found->second.apply(raw))
                    throw ParseError(path_ + ": key '" + key + "': invalid value '" + raw + "'");
                from_file.insert(key);
            }
        }
        for (const CLI::Option* opt : required_) {
            if (opt->count() == 0 && from_file.count(opt->get_single_name()) == 0)
                throw ConfigError("--" + opt->get_single_name() + " is required");
        }
    }

private:
    struct Binding {
        CLI::Option* opt;
        std::function<bool(const std::string&)> apply;
    };

    static bool assign(const std::string& raw, std::string& target) {
        target = raw;
        return true;
    }
    static bool assign(const std::string& raw, bool& target) {
        if (raw == "true" || raw == "1") target = true;
        else if (raw == "false" || raw == "0") target = false;
        else return false;
        return true;
    }
    static bool assign(const std::string& raw, double& target) {
        return parse_double(raw, target);
    }
    static bool assign(const std::string& raw, std::size_t& target) {
        return parse_index(raw, target);
    }
    static bool assign(const std::string& raw, std::optional<double>& target) {
        double value = 0.0;
        if (!parse_double(raw, value)) return false;
        target = value;
        return true;
    }
    static bool assign(const std::string& raw, std::vector<std::string>& target) {
        std::istringstream stream{raw};
        std::vector<std::string> items;
        for (std::string item; stream >> item;) items.push_back(item);
        if (items.empty()) return false;
        target = std::move(items);
        return true;
    }

    CLI::App* sub_;
    std::string path_;
    std::map<std::string, Binding> bindings_;
    std::vector<const CLI::Option*> required_;
};

struct HeatmapOptions {
    std::string path;
    std::optional<double> range_min;
    std::optional<double> range_max;
    std::size_t scale = 1;
};

void add_heatmap_flags(ConfigLayer& cfg, HeatmapOptions& opts) {
    cfg.option("--heatmap", opts.path, "Also render the result as a PPM image");
    cfg.option("--heatmap-min", opts.range_min, "Fixed lower bound of the color ramp");
    cfg.option("--heatmap-max", opts.range_max, "Fixed upper bound of the color ramp");
    cfg.option("--scale", opts.scale, "Integer pixel upscale factor for heatmaps")
        ->capture_default_str();
}

void maybe_emit_heatmap(const Grid& grid, const HeatmapOptions& opts, HeatmapStyle style) {
    if (opts.path.empty()) return;
    style.range_min = opts.range_min;
    style.range_max = opts.range_max;
    style.scale = opts.scale;
    emit_heatmap(grid, style, opts.path);
}

struct ComputeOptions {
    std::string ts_out_path;
    std::optional<double> indoor_single;
    std::string indoor_matrix_path;
    std::string indoor_surface_path;
    std::string setting;  // empty = inferred from the indoor input
    std::string expansion = "block";
    bool apply_films = false;
    double t_in = 293.15;
    double t_out = 0.0;
    double emissivity = 0.95;
    double wind = 0.0;
    double rh = 0.5;
    double height = 0.0;
    double width = 1.0;
    std::size_t mesh_rows = 30;
    std::size_t mesh_cols = 40;
    double r_film_in = 0.12;
    double r_film_out = 0.03;
    std::string unit = "K";
    std::string out_path;
    HeatmapOptions heatmap;
};

SensorMatrix matrix_from_grid(const TemperatureRaster& raster, const std::string& origin) {
    if (raster.unmasked_count() != raster.rows() * raster.cols())
        throw ValidationError(origin + ": sensor matrix must not contain NA cells");
    SensorMatrix matrix;
    matrix.rows = raster.rows();
    matrix.cols = raster.cols();
    matrix.temperatures.reserve(matrix.rows * matrix.cols);
    for (std::size_t r = 0; r < matrix.rows; ++r)
        for (std::size_t c = 0; c < matrix.cols; ++c)
            matrix.temperatures.push_back(raster.value(r, c));
    return matrix;
}

int run_compute(const ComputeOptions& opts, const ConfigLayer& cfg) {
    cfg.finalize();
    const GridUnit unit = unit_from_flag(opts.unit);

    TemperatureRaster ts_out = load_raster(opts.ts_out_path, unit);

    int indoor_kinds = 0;
    indoor_kinds += opts.indoor_single.has_value() ? 1 : 0;
    indoor_kinds += opts.indoor_matrix_path.empty() ? 0 : 1;
    indoor_kinds += opts.indoor_surface_path.empty() ? 0 : 1;
    if (indoor_kinds != 1)
        throw ConfigError(
            "exactly one of --indoor-single, --indoor-matrix, --indoor-surface is required");

    IndoorTemperatureInput indoor;
    ComputationSetting inferred = ComputationSetting::SinglePoint;
    if (opts.indoor_single.has_value()) {
        indoor = SinglePoint{to_kelvin(*opts.indoor_single, unit)};
        inferred = ComputationSetting::SinglePoint;
    } else if (!opts.indoor_matrix_path.empty()) {
        indoor = matrix_from_grid(load_raster(opts.indoor_matrix_path, unit),
                                  opts.indoor_matrix_path);
        inferred = ComputationSetting::Matrix;
    } else {
        indoor = load_raster(opts.indoor_surface_path, unit);
        inferred = ComputationSetting::Surface;
    }

    ComputationSetting setting = inferred;
    if (!opts.setting.empty()) {
        if (opts.setting == "single") setting = ComputationSetting::SinglePoint;
        else if (opts.setting == "matrix") setting = ComputationSetting::Matrix;
        else if (opts.setting == "surface") setting = ComputationSetting::Surface;
        else throw ConfigError("--setting must be single, matrix or surface");
    }

    MatrixExpansion expansion = MatrixExpansion::Block;
    if (opts.expansion == "bilinear") expansion = MatrixExpansion::Bilinear;
    else if (opts.expansion != "block")
        throw ConfigError("--expansion must be block or bilinear");

    AmbientConditions ambient;
    ambient.t_in = to_kelvin(opts.t_in, unit);
    ambient.t_out = to_kelvin(opts.t_out, unit);
    ambient.emissivity = opts.emissivity;
    ambient.wind_speed = opts.wind;
    ambient.relative_humidity = opts.rh;

    WallGeometry geometry;
    geometry.height = opts.height;
    geometry.width = opts.width;

    MeshSpec mesh;
    mesh.rows = opts.mesh_rows;
    mesh.cols = opts.mesh_cols;

    PhysicalConstants constants;
    constants.r_film_in = opts.r_film_in;
    constants.r_film_out = opts.r_film_out;

    UValueMap map = compute_umap(ts_out, indoor, ambient, geometry, mesh, setting,
                                 opts.apply_films, constants, expansion);

    write_grid_file(opts.out_path, map.grid, GridUnit::UValue);
    maybe_emit_heatmap(map.grid, opts.heatmap, HeatmapStyle::sequential());

    const std::size_t masked =
        map.masked_input + map.masked_film_range + map.masked_degenerate;
    if (masked > 0)
        std::cerr << "irumap: " << masked << " masked cell(s): input=" << map.masked_input
                  << " film-range=" << map.masked_film_range
                  << " degenerate=" << map.masked_degenerate << '\n';
    return kExitOk;
}

struct AverageOptions {
    std::vector<std::string> inputs;
    std::string out_path;
    HeatmapOptions heatmap;
};

int run_average(const AverageOptions& opts, const ConfigLayer& cfg) {
    cfg.finalize();
    std::vector<Grid> grids;
    grids.reserve(opts.inputs.size());
    for (const std::string& path : opts.inputs) grids.push_back(load_u_grid(path));
    Grid averaged = average_rasters(grids);
    write_grid_file(opts.out_path, averaged, GridUnit::UValue);
    maybe_emit_heatmap(averaged, opts.heatmap, HeatmapStyle::sequential());
    return kExitOk;
}

struct DiffOptions {
    std::string a_path;
    std::string b_path;
    std::string out_path;
    HeatmapOptions heatmap;
};

int run_diff(const DiffOptions& opts, const ConfigLayer& cfg) {
    cfg.finalize();
    UValueMap a;
    a.grid = load_u_grid(opts.a_path);
    UValueMap b;
    b.grid = load_u_grid(opts.b_path);
    Grid diff = difference_map(a, b);
    write_grid_file(opts.out_path, diff, GridUnit::UValue);

    if (!opts.heatmap.path.empty()) {
        HeatmapOptions style_opts = opts.heatmap;
        if (!style_opts.range_min && !style_opts.range_max) {
            // Symmetric range about zero so the mid color lands on zero.
            UValueMap wrapped;
            wrapped.grid = diff;
            const MapStats stats = map_stats(wrapped);
            const double extent = std::max(std::fabs(stats.min), std::fabs(stats.max));
            if (extent > 0.0) {
                style_opts.range_min = -extent;
                style_opts.range_max = extent;
            }
        }
        maybe_emit_heatmap(diff, style_opts, HeatmapStyle::diverging());
    }
    return kExitOk;
}

struct StatsOptions {
    std::string map_path;
    std::optional<double> hfm;
    std::string out_path;
};

int run_stats(const StatsOptions& opts, const ConfigLayer& cfg) {
    cfg.finalize();
    UValueMap map;
    map.grid = load_u_grid(opts.map_path);
    const MapStats stats = map_stats(map);

    KeyValueDoc doc("stats");
    doc.set_double("min", stats.min);
    doc.set_double("max", stats.max);
    doc.set_double("mean", stats.mean);
    doc.set_index("count", stats.count);
    doc.set_index("masked", map.grid.rows() * map.grid.cols() - stats.count);
    if (opts.hfm.has_value()) {
        doc.set_double("hfm", *opts.hfm);
        doc.set_double("hfm_deviation", hfm_deviation(stats.mean, *opts.hfm));
    }

    const std::string text = doc.to_text();
    std::cout << text;
    if (!opts.out_path.empty()) atomic_write_file(opts.out_path, text);
    return kExitOk;
}

struct ValidateOptions {
    double t_in = 293.15;
    double t_out = 0.0;
    double emissivity = 0.95;
    double wind = 0.0;
    double rh = 0.5;
    double ts_in_mean = 0.0;
    double ts_out_mean = 0.0;
    std::string unit = "K";
    std::string out_path;
};

int run_validate(const ValidateOptions& opts, const ConfigLayer& cfg) {
    cfg.finalize();
    const GridUnit unit = unit_from_flag(opts.unit);
    AmbientConditions ambient;
    ambient.t_in = to_kelvin(opts.t_in, unit);
    ambient.t_out = to_kelvin(opts.t_out, unit);
    ambient.emissivity = opts.emissivity;
    ambient.wind_speed = opts.wind;
    ambient.relative_humidity = opts.rh;

    const QualityReport report = validate_conditions(ambient, to_kelvin(opts.ts_in_mean, unit),
                                                     to_kelvin(opts.ts_out_mean, unit));

    KeyValueDoc doc("report");
    doc.set_double("delta_t_across_wall", report.delta_t_across_wall);
    doc.set("delta_t_ok", report.delta_t_ok ? "true" : "false");
    doc.set("wind_ok", report.wind_ok ? "true" : "false");
    for (std::size_t i = 0; i < report.messages.size(); ++i)
        doc.set("message_" + std::to_string(i + 1), report.messages[i]);

    const std::string text = doc.to_text();
    std::cout << text;
    if (!opts.out_path.empty()) atomic_write_file(opts.out_path, text);
    // The report itself is the product; marginal conditions are not an error.
    return kExitOk;
}

struct SynthOptions {
    std::string spec_path;
    std::string out_dir;
};

int run_synth(const SynthOptions& opts, const ConfigLayer& cfg) {
    cfg.finalize();
    const KeyValueDoc manifest = KeyValueDoc::load(opts.spec_path);
    const SyntheticWallSpec spec = spec_from_manifest(manifest);
    const SceneBundle bundle = std::holds_alternative<StratifiedProfile>(spec.indoor_air_profile)
                                   ? stratified_air_scene(spec)
                                   : generate_scene(spec);
    write_scene_directory(opts.out_dir, spec, bundle);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"In-situ U-value maps from paired infrared surface-temperature rasters"};
    app.require_subcommand(1);

    ComputeOptions compute_opts;
    CLI::App* compute = app.add_subcommand(
        "compute", "Compute a U-value map from an outdoor surface raster and an indoor input");
    ConfigLayer compute_cfg(compute);
    compute_cfg.require(compute_cfg.option("--ts-out", compute_opts.ts_out_path,
                                           "Outdoor surface-temperature raster"));
    compute_cfg.option("--indoor-single", compute_opts.indoor_single,
                       "Single indoor air temperature");
    compute_cfg.option("--indoor-matrix", compute_opts.indoor_matrix_path,
                       "Indoor sensor-matrix grid file");
    compute_cfg.option("--indoor-surface", compute_opts.indoor_surface_path,
                       "Indoor surface-temperature raster");
    compute_cfg.option("--setting", compute_opts.setting,
                       "Computation setting: single, matrix or surface (default: inferred)");
    compute_cfg.option("--expansion", compute_opts.expansion,
                       "Sensor-matrix expansion: block or bilinear")->capture_default_str();
    compute_cfg.flag("--apply-films", compute_opts.apply_films,
                     "Add standard air-film resistances (surface setting only)");
    compute_cfg.option("--t-in", compute_opts.t_in, "Indoor air temperature")
        ->capture_default_str();
    compute_cfg.require(compute_cfg.option("--t-out", compute_opts.t_out,
                                           "Outdoor air temperature"));
    compute_cfg.option("--emissivity", compute_opts.emissivity, "Wall surface emissivity")
        ->capture_default_str();
    compute_cfg.option("--wind", compute_opts.wind, "Wind speed [m/s]")->capture_default_str();
    compute_cfg.option("--rh", compute_opts.rh, "Relative humidity [0..1]")
        ->capture_default_str();
    compute_cfg.require(compute_cfg.option("--height", compute_opts.height, "Wall height [m]"));
    compute_cfg.option("--width", compute_opts.width, "Wall width [m]")->capture_default_str();
    compute_cfg.option("--mesh-rows", compute_opts.mesh_rows, "Output mesh rows")
        ->capture_default_str();
    compute_cfg.option("--mesh-cols", compute_opts.mesh_cols, "Output mesh columns")
        ->capture_default_str();
    compute_cfg.option("--r-film-in", compute_opts.r_film_in,
                       "Indoor film resistance [K m^2/W]")->capture_default_str();
    compute_cfg.option("--r-film-out", compute_opts.r_film_out,
                       "Outdoor film resistance [K m^2/W]")->capture_default_str();
    compute_cfg.option("--unit", compute_opts.unit,
                       "Temperature unit of scalar flags and expected raster headers: K or C")
        ->capture_default_str();
    compute_cfg.require(compute_cfg.option("--out", compute_opts.out_path,
                                           "Output U-value grid file"));
    add_heatmap_flags(compute_cfg, compute_opts.heatmap);

    AverageOptions average_opts;
    CLI::App* average = app.add_subcommand("average", "Average several U-value maps cellwise");
    ConfigLayer average_cfg(average);
    average_cfg.require(average_cfg.option("--inputs", average_opts.inputs,
                                           "U-value grid files to average")->expected(-1));
    average_cfg.require(average_cfg.option("--out", average_opts.out_path,
                                           "Output U-value grid file"));
    add_heatmap_flags(average_cfg, average_opts.heatmap);

    DiffOptions diff_opts;
    CLI::App* diff = app.add_subcommand("diff", "Signed cellwise difference of two U-value maps");
    ConfigLayer diff_cfg(diff);
    diff_cfg.require(diff_cfg.option("--a", diff_opts.a_path, "Left U-value grid"));
    diff_cfg.require(diff_cfg.option("--b", diff_opts.b_path, "Right U-value grid"));
    diff_cfg.require(diff_cfg.option("--out", diff_opts.out_path, "Output difference grid"));
    add_heatmap_flags(diff_cfg, diff_opts.heatmap);

    StatsOptions stats_opts;
    CLI::App* stats = app.add_subcommand("stats", "Key-value statistics of a U-value map");
    ConfigLayer stats_cfg(stats);
    stats_cfg.require(stats_cfg.option("--map", stats_opts.map_path, "U-value grid file"));
    stats_cfg.option("--hfm", stats_opts.hfm,
                     "Reference heat-flux-meter U-value; adds hfm_deviation to the output");
    stats_cfg.option("--out", stats_opts.out_path, "Also write the stats to this file");

    ValidateOptions validate_opts;
    CLI::App* validate = app.add_subcommand(
        "validate", "Check measurement conditions (wall delta-T, wind) and report");
    ConfigLayer validate_cfg(validate);
    validate_cfg.option("--t-in", validate_opts.t_in, "Indoor air temperature")
        ->capture_default_str();
    validate_cfg.require(validate_cfg.option("--t-out", validate_opts.t_out,
                                             "Outdoor air temperature"));
    validate_cfg.option("--emissivity", validate_opts.emissivity, "Wall surface emissivity")
        ->capture_default_str();
    validate_cfg.option("--wind", validate_opts.wind, "Wind speed [m/s]")
        ->capture_default_str();
    validate_cfg.option("--rh", validate_opts.rh, "Relative humidity [0..1]")
        ->capture_default_str();
    validate_cfg.require(validate_cfg.option("--ts-in-mean", validate_opts.ts_in_mean,
                                             "Mean indoor surface temperature"));
    validate_cfg.require(validate_cfg.option("--ts-out-mean", validate_opts.ts_out_mean,
                                             "Mean outdoor surface temperature"));
    validate_cfg.option("--unit", validate_opts.unit, "Temperature unit of the flags: K or C")
        ->capture_default_str();
    validate_cfg.option("--out", validate_opts.out_path, "Also write the report to this file");

    SynthOptions synth_opts;
    CLI::App* synth = app.add_subcommand(
        "synth", "Generate a synthetic wall scene (rasters + ground truth) from a manifest");
    ConfigLayer synth_cfg(synth);
    synth_cfg.require(synth_cfg.option("--spec", synth_opts.spec_path,
                                       "Scene manifest (key=value)"));
    synth_cfg.require(synth_cfg.option("--out", synth_opts.out_dir, "Output scene directory"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (compute->parsed()) return run_compute(compute_opts, compute_cfg);
        if (average->parsed()) return run_average(average_opts, average_cfg);
        if (diff->parsed()) return run_diff(diff_opts, diff_cfg);
        if (stats->parsed()) return run_stats(stats_opts, stats_cfg);
        if (validate->parsed()) return run_validate(validate_opts, validate_cfg);
        if (synth->parsed()) return run_synth(synth_opts, synth_cfg);
        std::cerr << "irumap: no subcommand given\n";
        return kExitValidation;
    } catch (const DegenerateError& e) {
        std::cerr << "irumap: " << e.what() << '\n';
        return kExitDegenerate;
    } catch (const IoError& e) {
        std::cerr << "irumap: " << e.what() << '\n';
        return kExitIo;
    } catch (const ValidationError& e) {
        std::cerr << "irumap: " << e.what() << '\n';
        return kExitValidation;
    } catch (const Error& e) {
        std::cerr << "irumap: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "irumap: " << e.what() << '\n';
        return kExitValidation;
    }
}
