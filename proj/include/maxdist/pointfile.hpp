#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "maxdist/geom.hpp"

namespace maxdist {

// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double v);

// Strict full-token parse; throws on trailing junk or empty input.
double parse_double(std::string_view token);

struct PointFileHeader {
    int dim = 2;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::string dist = "custom";
};

struct PointFileData {
    PointFileHeader header;
    std::vector<double> coords;  // row-major, header.n * header.dim values

    template <int Dim>
    PointSet<Dim> points() const {
        if (header.dim != Dim) throw std::invalid_argument("dimension mismatch");
        PointSet<Dim> ps(header.n);
        for (std::size_t i = 0; i < header.n; ++i)
            for (int j = 0; j < Dim; ++j) ps[i][j] = coords[i * Dim + j];
        return ps;
    }
};

// Text format: one header line
//   # maxdist v1 dim=<k> n=<n> seed=<s> dist=<name>
// then n lines of k space-separated round-trip doubles. Unknown header keys
// are ignored on read.
PointFileData read_point_file(const std::filesystem::path& path);

void write_point_file(const std::filesystem::path& path, const PointFileHeader& header,
                      const std::vector<double>& coords);

template <int Dim>
void write_point_file(const std::filesystem::path& path, PointFileHeader header,
                      const PointSet<Dim>& ps) {
    header.dim = Dim;
    header.n = ps.size();
    std::vector<double> coords;
    coords.reserve(ps.size() * Dim);
    for (const auto& p : ps)
        for (int j = 0; j < Dim; ++j) coords.push_back(p[j]);
    write_point_file(path, header, coords);
}

}  // namespace maxdist
