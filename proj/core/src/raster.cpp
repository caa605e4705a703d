#include "irumap/raster.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "irumap/errors.hpp"

namespace irumap {

void MeshSpec::validate() const {
    if (rows == 0 || cols == 0)
        throw ValidationError("mesh spec: rows and cols must be >= 1");
}

void SensorMatrix::validate() const {
    if (rows == 0 || cols == 0)
        throw ValidationError("sensor matrix: rows and cols must be >= 1");
    if (temperatures.size() != rows * cols)
        throw ValidationError("sensor matrix: expected " + std::to_string(rows * cols) +
                              " temperatures, got " + std::to_string(temperatures.size()));
    for (double t : temperatures)
        if (!std::isfinite(t) || t <= 0.0)
            throw ValidationError("sensor matrix: temperatures must be finite and > 0 K");
}

void validate_temperature_raster(const TemperatureRaster& raster, const std::string& label) {
    if (raster.empty())
        throw ValidationError(label + ": raster is empty");
    for (std::size_t r = 0; r < raster.rows(); ++r)
        for (std::size_t c = 0; c < raster.cols(); ++c) {
            if (raster.is_masked(r, c)) continue;
            const double v = raster.value(r, c);
            if (!std::isfinite(v) || v <= 0.0)
                throw ValidationError(label + ": unmasked temperature at (" +
                                      std::to_string(r) + ", " + std::to_string(c) +
                                      ") must be finite and > 0 K");
        }
}

namespace {

// Per-axis overlap weights between source and destination cells. Destination
// cell d spans [d*src_n, (d+1)*src_n) and source cell s spans
// [s*dst_n, (s+1)*dst_n) in units of 1/(src_n*dst_n) of the axis, so every
// overlap is an exact integer.
struct AxisOverlap {
    std::size_t first = 0;                 // first overlapping source index
    std::vector<std::uint64_t> weights;    // one per overlapping source cell
};

std::vector<AxisOverlap> axis_overlaps(std::size_t src_n, std::size_t dst_n) {
    std::vector<AxisOverlap> out(dst_n);
    for (std::size_t d = 0; d < dst_n; ++d) {
        const std::uint64_t lo = static_cast<std::uint64_t>(d) * src_n;
        const std::uint64_t hi = lo + src_n;
        const std::size_t s0 = static_cast<std::size_t>(lo / dst_n);
        const std::size_t s1 = static_cast<std::size_t>((hi - 1) / dst_n);
        out[d].first = s0;
        out[d].weights.reserve(s1 - s0 + 1);
        for (std::size_t s = s0; s <= s1; ++s) {
            const std::uint64_t a = std::max<std::uint64_t>(lo, static_cast<std::uint64_t>(s) * dst_n);
            const std::uint64_t b =
                std::min<std::uint64_t>(hi, static_cast<std::uint64_t>(s + 1) * dst_n);
            out[d].weights.push_back(b - a);
        }
    }
    return out;
}

}  // namespace

TemperatureRaster resample_to_mesh(const TemperatureRaster& raster, const MeshSpec& mesh) {
    mesh.validate();
    if (raster.empty())
        throw ValidationError("resample_to_mesh: raster is empty");
    if (mesh.rows > raster.rows() || mesh.cols > raster.cols())
        throw ValidationError("resample_to_mesh: mesh " + std::to_string(mesh.rows) + "x" +
                              std::to_string(mesh.cols) + " exceeds raster " +
                              std::to_string(raster.rows()) + "x" +
                              std::to_string(raster.cols()) + " (no upsampling)");
    if (mesh.rows == raster.rows() && mesh.cols == raster.cols())
        return raster;

    const auto row_ov = axis_overlaps(raster.rows(), mesh.rows);
    const auto col_ov = axis_overlaps(raster.cols(), mesh.cols);

    Grid out(mesh.rows, mesh.cols);
    for (std::size_t r = 0; r < mesh.rows; ++r) {
        for (std::size_t c = 0; c < mesh.cols; ++c) {
            double sum = 0.0;
            double weight = 0.0;
            for (std::size_t i = 0; i < row_ov[r].weights.size(); ++i) {
                const std::size_t sr = row_ov[r].first + i;
                for (std::size_t j = 0; j < col_ov[c].weights.size(); ++j) {
                    const std::size_t sc = col_ov[c].first + j;
                    if (raster.is_masked(sr, sc)) continue;
                    const double w =
                        static_cast<double>(row_ov[r].weights[i] * col_ov[c].weights[j]);
                    sum += w * raster.value(sr, sc);
                    weight += w;
                }
            }
            if (weight == 0.0)
                out.mask_cell(r, c);  // all-masked coverage stays masked
            else
                out.set(r, c, sum / weight);
        }
    }
    return out;
}

TemperatureRaster indoor_field(const IndoorTemperatureInput& input, const MeshSpec& mesh,
                               MatrixExpansion expansion) {
    mesh.validate();

    if (const auto* sp = std::get_if<SinglePoint>(&input)) {
        if (!std::isfinite(sp->t) || sp->t <= 0.0)
            throw ValidationError("indoor_field: single-point temperature must be finite and > 0 K");
        return Grid(mesh.rows, mesh.cols, sp->t);
    }

    if (const auto* m = std::get_if<SensorMatrix>(&input)) {
        m->validate();
        Grid out(mesh.rows, mesh.cols);
        if (expansion == MatrixExpansion::Block) {
            // pixel (i,j) -> sensor (floor(m_rows*i/rows), floor(m_cols*j/cols))
            for (std::size_t i = 0; i < mesh.rows; ++i) {
                const std::size_t si = i * m->rows / mesh.rows;
                for (std::size_t j = 0; j < mesh.cols; ++j)
                    out.set(i, j, m->at(si, j * m->cols / mesh.cols));
            }
        } else {
            // Bilinear between sensor block centers, clamped at the edges.
            for (std::size_t i = 0; i < mesh.rows; ++i) {
                double u = (static_cast<double>(i) + 0.5) * static_cast<double>(m->rows) /
                               static_cast<double>(mesh.rows) -
                           0.5;
                u = std::clamp(u, 0.0, static_cast<double>(m->rows - 1));
                const std::size_t r0 = static_cast<std::size_t>(u);
                const std::size_t r1 = std::min(r0 + 1, m->rows - 1);
                const double fr = u - static_cast<double>(r0);
                for (std::size_t j = 0; j < mesh.cols; ++j) {
                    double v = (static_cast<double>(j) + 0.5) * static_cast<double>(m->cols) /
                                   static_cast<double>(mesh.cols) -
                               0.5;
                    v = std::clamp(v, 0.0, static_cast<double>(m->cols - 1));
                    const std::size_t c0 = static_cast<std::size_t>(v);
                    const std::size_t c1 = std::min(c0 + 1, m->cols - 1);
                    const double fc = v - static_cast<double>(c0);
                    const double lo = m->at(r0, c0) * (1.0 - fc) + m->at(r0, c1) * fc;
                    const double hi = m->at(r1, c0) * (1.0 - fc) + m->at(r1, c1) * fc;
                    out.set(i, j, lo * (1.0 - fr) + hi * fr);
                }
            }
        }
        return out;
    }

    const auto& raster = std::get<TemperatureRaster>(input);
    validate_temperature_raster(raster, "indoor_field: surface raster");
    return resample_to_mesh(raster, mesh);
}

Grid average_rasters(const std::vector<Grid>& rasters) {
    if (rasters.empty())
        throw ValidationError("average_rasters: need at least one raster");
    const Grid& first = rasters.front();
    if (first.empty())
        throw ValidationError("average_rasters: raster is empty");
    for (const Grid& g : rasters)
        if (g.rows() != first.rows() || g.cols() != first.cols())
            throw ValidationError("average_rasters: shape mismatch (" +
                                  std::to_string(g.rows()) + "x" + std::to_string(g.cols()) +
                                  " vs " + std::to_string(first.rows()) + "x" +
                                  std::to_string(first.cols()) + ")");

    const double n = static_cast<double>(rasters.size());
    Grid out(first.rows(), first.cols());
    for (std::size_t r = 0; r < first.rows(); ++r) {
        for (std::size_t c = 0; c < first.cols(); ++c) {
            bool masked = false;
            double sum = 0.0;
            for (const Grid& g : rasters) {
                if (g.is_masked(r, c)) {
                    masked = true;
                    break;
                }
                sum += g.value(r, c);
            }
            if (masked)
                out.mask_cell(r, c);
            else
                out.set(r, c, sum / n);
        }
    }
    return out;
}

}  // namespace irumap
