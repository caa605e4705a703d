#include "irumap/scene_io.hpp"

#include <string_view>
#include <system_error>

#include "irumap/errors.hpp"
#include "irumap/grid_io.hpp"
#include "irumap/io_util.hpp"

namespace irumap {

namespace {

const char* const kKnownKeys[] = {
    "mesh_rows",  "mesh_cols",  "u_insulation",      "u_stud",
    "stud_columns", "profile",  "t_uniform",         "t_bottom",
    "t_top",      "t_out",      "emissivity",        "wind_speed",
    "relative_humidity", "wall_height", "wall_width", "surface_offset",
    "perturbation_amplitude", "indoor_reference_K",
};

bool known_key(std::string_view key) {
    for (const char* k : kKnownKeys)
        if (key == k) return true;
    return false;
}

std::vector<std::size_t> parse_stud_columns(const KeyValueDoc& doc) {
    std::vector<std::size_t> cols;
    const std::string raw = doc.get_or("stud_columns", "");
    std::string_view rest = raw;
    while (!rest.empty()) {
        const std::size_t comma = rest.find(',');
        std::string_view cell = rest.substr(0, comma);
        while (!cell.empty() && cell.front() == ' ') cell.remove_prefix(1);
        while (!cell.empty() && cell.back() == ' ') cell.remove_suffix(1);
        if (!cell.empty()) {
            std::size_t idx = 0;
            if (!parse_index(cell, idx))
                throw ParseError(doc.origin() + ": key 'stud_columns': invalid column index '" +
                                 std::string(cell) + "'");
            cols.push_back(idx);
        }
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return cols;
}

std::string join_stud_columns(const std::vector<std::size_t>& cols) {
    std::string out;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(cols[i]);
    }
    return out;
}

}  // namespace

SyntheticWallSpec spec_from_manifest(const KeyValueDoc& doc) {
    for (const auto& [key, value] : doc.entries())
        if (!known_key(key))
            throw ParseError(doc.origin() + ": unknown key '" + key + "'");

    SyntheticWallSpec spec;
    spec.mesh.rows = doc.get_index_or("mesh_rows", 30);
    spec.mesh.cols = doc.get_index_or("mesh_cols", 40);
    spec.u_insulation = doc.get_double("u_insulation");
    spec.u_stud = doc.get_double("u_stud");
    spec.stud_columns = parse_stud_columns(doc);

    const std::string profile = doc.get("profile");
    if (profile == "uniform") {
        if (doc.has("t_bottom") || doc.has("t_top"))
            throw ParseError(doc.origin() +
                             ": t_bottom/t_top only apply to the stratified profile");
        spec.indoor_air_profile = UniformProfile{doc.get_double("t_uniform")};
    } else if (profile == "stratified") {
        if (doc.has("t_uniform"))
            throw ParseError(doc.origin() + ": t_uniform only applies to the uniform profile");
        spec.indoor_air_profile =
            StratifiedProfile{doc.get_double("t_bottom"), doc.get_double("t_top")};
    } else {
        throw ParseError(doc.origin() + ": key 'profile': expected 'uniform' or 'stratified', "
                                        "got '" + profile + "'");
    }

    spec.ambient.t_out = doc.get_double("t_out");
    spec.ambient.emissivity = doc.get_double_or("emissivity", 0.95);
    spec.ambient.wind_speed = doc.get_double_or("wind_speed", 0.0);
    spec.ambient.relative_humidity = doc.get_double_or("relative_humidity", 0.5);
    spec.geometry.height = doc.get_double("wall_height");
    spec.geometry.width = doc.get_double_or("wall_width", 1.0);
    spec.surface_offset = doc.get_double_or("surface_offset", 5.0);
    spec.perturbation_amplitude = doc.get_double_or("perturbation_amplitude", 0.0);
    spec.ambient.t_in = spec.indoor_reference();
    return spec;
}

KeyValueDoc manifest_from_spec(const SyntheticWallSpec& spec) {
    KeyValueDoc doc("scene manifest");
    doc.set_index("mesh_rows", spec.mesh.rows);
    doc.set_index("mesh_cols", spec.mesh.cols);
    doc.set_double("u_insulation", spec.u_insulation);
    doc.set_double("u_stud", spec.u_stud);
    doc.set("stud_columns", join_stud_columns(spec.stud_columns));
    if (const auto* uni = std::get_if<UniformProfile>(&spec.indoor_air_profile)) {
        doc.set("profile", "uniform");
        doc.set_double("t_uniform", uni->t);
    } else {
        const auto& strat = std::get<StratifiedProfile>(spec.indoor_air_profile);
        doc.set("profile", "stratified");
        doc.set_double("t_bottom", strat.t_bottom);
        doc.set_double("t_top", strat.t_top);
    }
    doc.set_double("t_out", spec.ambient.t_out);
    doc.set_double("emissivity", spec.ambient.emissivity);
    doc.set_double("wind_speed", spec.ambient.wind_speed);
    doc.set_double("relative_humidity", spec.ambient.relative_humidity);
    doc.set_double("wall_height", spec.geometry.height);
    doc.set_double("wall_width", spec.geometry.width);
    doc.set_double("surface_offset", spec.surface_offset);
    doc.set_double("perturbation_amplitude", spec.perturbation_amplitude);
    return doc;
}

void write_scene_directory(const std::filesystem::path& dir, const SyntheticWallSpec& spec,
                           const SceneBundle& bundle) {
    // Render everything up front; only I/O can fail past this point.
    const std::string t_s_out = format_grid_text(bundle.t_s_out, GridUnit::Kelvin);
    const std::string t_s_in = format_grid_text(bundle.t_s_in, GridUnit::Kelvin);
    const std::string indoor_air = format_grid_text(bundle.indoor_air, GridUnit::Kelvin);
    const std::string u_truth = format_grid_text(bundle.u_truth.grid, GridUnit::UValue);
    KeyValueDoc manifest = manifest_from_spec(spec);
    manifest.set_double("indoor_reference_K", bundle.indoor_reference);

    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw IoError("cannot create scene directory '" + dir.string() + "': " + ec.message());

    atomic_write_file(dir / "t_s_out.grid", t_s_out);
    atomic_write_file(dir / "t_s_in.grid", t_s_in);
    atomic_write_file(dir / "indoor_air.grid", indoor_air);
    atomic_write_file(dir / "u_truth.grid", u_truth);
    atomic_write_file(dir / "manifest.kv", manifest.to_text());
}

}  // namespace irumap
