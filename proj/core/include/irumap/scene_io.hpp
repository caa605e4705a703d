#pragma once

#include <filesystem>

#include "irumap/keyvalue.hpp"
#include "irumap/synth.hpp"

namespace irumap {

// Manifest keys for a SyntheticWallSpec (flat key=value):
//   mesh_rows, mesh_cols          defaults 30, 40
//   u_insulation, u_stud          required
//   stud_columns                  comma-separated column indices, may be empty
//   profile                       "uniform" or "stratified"
//   t_uniform                     required for uniform
//   t_bottom, t_top               required for stratified
//   t_out, wall_height            required
//   emissivity                    default 0.95
//   wind_speed                    default 0
//   relative_humidity             default 0.5
//   wall_width                    default 1
//   surface_offset                default 5
//   perturbation_amplitude        default 0
// Unknown keys are rejected; indoor_reference_K (emitted by scene writes) is
// accepted and ignored so an emitted manifest feeds straight back in.
SyntheticWallSpec spec_from_manifest(const KeyValueDoc& doc);
KeyValueDoc manifest_from_spec(const SyntheticWallSpec& spec);

// Scene directory layout: t_s_out.grid, t_s_in.grid, indoor_air.grid (unit K),
// u_truth.grid (unit U) and manifest.kv. Creates the directory if needed; all
// content is generated before the first write so a failed generation leaves
// nothing behind.
void write_scene_directory(const std::filesystem::path& dir, const SyntheticWallSpec& spec,
                           const SceneBundle& bundle);

}  // namespace irumap
