#include "irumap/air_table.hpp"

#include <algorithm>
#include <cmath>

#include "irumap/errors.hpp"
#include "irumap/io_util.hpp"

namespace irumap {

namespace {

constexpr std::string_view kMagic = "# dry-air 1atm v1";

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

[[noreturn]] void fail(const std::string& origin, std::size_t line, const std::string& what) {
    throw ParseError(origin + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

AirPropertyTable AirPropertyTable::parse(std::string_view text, const std::string& origin) {
    AirPropertyTable table;
    std::size_t line_no = 0;
    bool saw_magic = false;

    while (!text.empty()) {
        const std::size_t eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
        ++line_no;

        if (!saw_magic) {
            if (trim(line) != kMagic)
                fail(origin, line_no, "expected header '" + std::string(kMagic) + "'");
            saw_magic = true;
            continue;
        }
        line = trim(line);
        if (line.empty()) continue;

        Node node{};
        double* fields[4] = {&node.t, &node.k, &node.nu, &node.pr};
        std::size_t field = 0;
        std::string_view rest = line;
        while (true) {
            const std::size_t comma = rest.find(',');
            std::string_view cell = trim(rest.substr(0, comma));
            if (field >= 4 || !parse_double(cell, *fields[field]))
                fail(origin, line_no, "expected 'T_K,k,nu,Pr', got '" + std::string(line) + "'");
            ++field;
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        if (field != 4)
            fail(origin, line_no, "expected 4 fields, got " + std::to_string(field));
        if (!std::isfinite(node.t) || !std::isfinite(node.k) || !std::isfinite(node.nu) ||
            !std::isfinite(node.pr) || node.k <= 0.0 || node.nu <= 0.0 || node.pr <= 0.0)
            fail(origin, line_no, "properties must be finite and positive");
        if (!table.nodes_.empty() && node.t <= table.nodes_.back().t)
            fail(origin, line_no, "T_K must be strictly increasing");
        table.nodes_.push_back(node);
    }

    if (!saw_magic)
        throw ParseError(origin + ": empty file, expected header '" + std::string(kMagic) + "'");
    if (table.nodes_.size() < 2)
        throw ParseError(origin + ": need at least 2 rows for interpolation");
    return table;
}

AirPropertyTable AirPropertyTable::load(const std::filesystem::path& file) {
    return parse(read_text_file(file), file.string());
}

const AirPropertyTable& AirPropertyTable::builtin() {
    static const AirPropertyTable table = parse(builtin_air_table_text(), "builtin air table");
    return table;
}

bool AirPropertyTable::covers(double t_kelvin) const {
    return std::isfinite(t_kelvin) && t_kelvin >= nodes_.front().t &&
           t_kelvin <= nodes_.back().t;
}

AirProperties AirPropertyTable::at(double t_kelvin) const {
    if (!std::isfinite(t_kelvin))
        throw RangeError("air_properties_at: t_m must be finite");
    if (t_kelvin < nodes_.front().t)
        throw RangeError("air_properties_at: t_m = " + format_double(t_kelvin) +
                         " K is below the table minimum " + format_double(nodes_.front().t) + " K");
    if (t_kelvin > nodes_.back().t)
        throw RangeError("air_properties_at: t_m = " + format_double(t_kelvin) +
                         " K is above the table maximum " + format_double(nodes_.back().t) + " K");

    const auto it = std::upper_bound(
        nodes_.begin(), nodes_.end(), t_kelvin,
        [](double t, const Node& n) { return t < n.t; });
    if (it == nodes_.end()) {  // t_kelvin == max temperature
        const Node& n = nodes_.back();
        return {n.k, n.nu, n.pr};
    }
    const Node& hi = *it;
    const Node& lo = *(it - 1);
    if (t_kelvin == lo.t) return {lo.k, lo.nu, lo.pr};  // node values verbatim

    const double f = (t_kelvin - lo.t) / (hi.t - lo.t);
    return {lo.k + f * (hi.k - lo.k), lo.nu + f * (hi.nu - lo.nu),
            lo.pr + f * (hi.pr - lo.pr)};
}

AirProperties air_properties_at(double t_m) {
    return AirPropertyTable::builtin().at(t_m);
}

}  // namespace irumap
