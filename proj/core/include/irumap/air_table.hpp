#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace irumap {

struct AirProperties {
    double k = 0.0;   // thermal conductivity [W/(m K)]
    double nu = 0.0;  // kinematic viscosity [m^2/s]
    double pr = 0.0;  // Prandtl number [-]
};

// Piecewise-linear dry-air property table at 1 atm. Format: one header line
// `# dry-air 1atm v1`, then CSV rows `T_K,k,nu,Pr` with strictly increasing
// T_K; blank lines ignored. The canonical table is embedded in the library
// (see data/dry_air_1atm_v1.txt) and spans 200-400 K.
class AirPropertyTable {
public:
    static const AirPropertyTable& builtin();
    static AirPropertyTable parse(std::string_view text, const std::string& origin);
    static AirPropertyTable load(const std::filesystem::path& file);

    AirProperties at(double t_kelvin) const;  // RangeError outside the node range
    bool covers(double t_kelvin) const;
    double min_temperature() const { return nodes_.front().t; }
    double max_temperature() const { return nodes_.back().t; }
    std::size_t node_count() const { return nodes_.size(); }

private:
    struct Node {
        double t, k, nu, pr;
    };
    std::vector<Node> nodes_;
};

// Interpolates the builtin table; the supported domain is its node range.
AirProperties air_properties_at(double t_m);

// Verbatim text of the embedded table (byte-identical to the shipped data file).
std::string_view builtin_air_table_text();

}  // namespace irumap
