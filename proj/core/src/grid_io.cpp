#include "irumap/grid_io.hpp"

#include <cmath>
#include <vector>

#include "irumap/errors.hpp"
#include "irumap/io_util.hpp"

namespace irumap {

namespace {

[[noreturn]] void fail(const std::string& origin, std::size_t line, const std::string& what) {
    throw ParseError(origin + ":" + std::to_string(line) + ": " + what);
}

[[noreturn]] void fail_at(const std::string& origin, std::size_t line, std::size_t column,
                          const std::string& what) {
    throw ParseError(origin + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " +
                     what);
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

// Pulls the next line (without the terminator); false at end of input.
bool next_line(std::string_view& text, std::string_view& line) {
    if (text.empty()) return false;
    const std::size_t eol = text.find('\n');
    line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return true;
}

constexpr std::size_t kMaxCells = 100'000'000;  // refuse absurd headers before allocating

}  // namespace

const char* grid_unit_token(GridUnit unit) {
    switch (unit) {
        case GridUnit::Kelvin: return "K";
        case GridUnit::Celsius: return "C";
        case GridUnit::UValue: return "U";
    }
    return "?";
}

std::optional<GridUnit> parse_grid_unit(std::string_view token) {
    if (token == "K") return GridUnit::Kelvin;
    if (token == "C") return GridUnit::Celsius;
    if (token == "U") return GridUnit::UValue;
    return std::nullopt;
}

ParsedGrid parse_grid_text(std::string_view text, const std::string& origin) {
    std::string_view line;
    std::size_t line_no = 0;

    if (!next_line(text, line))
        throw ParseError(origin + ": empty file, expected 'rows cols unit' header");
    ++line_no;

    const auto header = split_ws(line);
    if (header.size() != 3)
        fail(origin, line_no, "header must be 'rows cols unit', got '" + std::string(line) + "'");
    std::size_t rows = 0, cols = 0;
    if (!parse_index(header[0], rows) || rows == 0)
        fail(origin, line_no, "invalid row count '" + std::string(header[0]) + "'");
    if (!parse_index(header[1], cols) || cols == 0)
        fail(origin, line_no, "invalid column count '" + std::string(header[1]) + "'");
    const auto unit = parse_grid_unit(header[2]);
    if (!unit)
        fail(origin, line_no,
             "unknown unit '" + std::string(header[2]) + "' (expected K, C, or U)");
    if (rows > kMaxCells / cols)
        fail(origin, line_no, "grid size " + std::to_string(rows) + "x" + std::to_string(cols) +
                                  " exceeds the supported cell count");

    ParsedGrid out{Grid(rows, cols), *unit};
    for (std::size_t r = 0; r < rows; ++r) {
        if (!next_line(text, line))
            throw ParseError(origin + ": unexpected end of file, expected " +
                             std::to_string(rows) + " data rows, got " + std::to_string(r));
        ++line_no;
        const auto tokens = split_ws(line);
        if (tokens.size() != cols)
            fail(origin, line_no,
                 "row-length mismatch: expected " + std::to_string(cols) + " values, got " +
                     std::to_string(tokens.size()));
        for (std::size_t c = 0; c < cols; ++c) {
            if (tokens[c] == "NA") {
                out.grid.mask_cell(r, c);
                continue;
            }
            double v = 0.0;
            if (!parse_double(tokens[c], v))
                fail_at(origin, line_no, c + 1,
                        "non-numeric token '" + std::string(tokens[c]) + "'");
            if (!std::isfinite(v))
                fail_at(origin, line_no, c + 1,
                        "non-finite value '" + std::string(tokens[c]) + "'");
            out.grid.set(r, c, v);
        }
    }

    while (next_line(text, line)) {
        ++line_no;
        if (!split_ws(line).empty())
            fail(origin, line_no, "unexpected trailing content '" + std::string(line) + "'");
    }
    return out;
}

std::string format_grid_text(const Grid& grid, GridUnit unit) {
    if (grid.empty())
        throw ValidationError("format_grid_text: grid is empty");
    std::string out = std::to_string(grid.rows()) + " " + std::to_string(grid.cols()) + " " +
                      grid_unit_token(unit) + "\n";
    for (std::size_t r = 0; r < grid.rows(); ++r) {
        for (std::size_t c = 0; c < grid.cols(); ++c) {
            if (c > 0) out += ' ';
            if (grid.is_masked(r, c)) {
                out += "NA";
            } else {
                const double v = grid.value(r, c);
                if (!std::isfinite(v))
                    throw ValidationError("format_grid_text: unmasked non-finite value at (" +
                                          std::to_string(r) + ", " + std::to_string(c) + ")");
                out += format_double(v);
            }
        }
        out += '\n';
    }
    return out;
}

TemperatureRaster load_raster(const std::filesystem::path& path,
                              std::optional<GridUnit> expected) {
    const std::string origin = path.string();
    ParsedGrid parsed = parse_grid_text(read_text_file(path), origin);
    if (parsed.unit == GridUnit::UValue)
        throw ParseError(origin + ": header unit 'U' is not a temperature unit (expected K or C)");
    if (expected && parsed.unit != *expected)
        throw ParseError(origin + ": header unit '" + grid_unit_token(parsed.unit) +
                         "' does not match the configured unit '" + grid_unit_token(*expected) +
                         "'");

    Grid& g = parsed.grid;
    for (std::size_t r = 0; r < g.rows(); ++r) {
        for (std::size_t c = 0; c < g.cols(); ++c) {
            if (g.is_masked(r, c)) continue;
            double v = g.value(r, c);
            if (parsed.unit == GridUnit::Celsius) v += 273.15;
            if (v <= 0.0)
                fail_at(origin, r + 2, c + 1,
                        "non-physical temperature " + format_double(v) +
                            " K after conversion (must be > 0 K)");
            g.set(r, c, v);
        }
    }
    return std::move(parsed.grid);
}

Grid load_u_grid(const std::filesystem::path& path) {
    const std::string origin = path.string();
    ParsedGrid parsed = parse_grid_text(read_text_file(path), origin);
    if (parsed.unit != GridUnit::UValue)
        throw ParseError(origin + ": header unit '" + grid_unit_token(parsed.unit) +
                         "' is not a U-value grid (expected U)");
    return std::move(parsed.grid);
}

void write_grid_file(const std::filesystem::path& path, const Grid& grid, GridUnit unit) {
    atomic_write_file(path, format_grid_text(grid, unit));
}

}  // namespace irumap
