#include "maxdist/pointfile.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace maxdist {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view token) {
    double v = 0.0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
    if (res.ec != std::errc{} || res.ptr != token.data() + token.size())
        throw std::invalid_argument("bad number: " + std::string(token));
    return v;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

}  // namespace

PointFileData read_point_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());

    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty file: " + path.string());
    const std::vector<std::string> head = split_ws(line);
    if (head.size() < 3 || head[0] != "#" || head[1] != "maxdist" || head[2] != "v1")
        throw std::runtime_error("bad header in " + path.string());

    PointFileData data;
    bool have_dim = false, have_n = false;
    for (std::size_t i = 3; i < head.size(); ++i) {
        const auto eq = head[i].find('=');
        if (eq == std::string::npos) continue;
        const std::string key = head[i].substr(0, eq);
        const std::string val = head[i].substr(eq + 1);
        if (key == "dim") {
            data.header.dim = static_cast<int>(std::stol(val));
            have_dim = true;
        } else if (key == "n") {
            data.header.n = static_cast<std::size_t>(std::stoull(val));
            have_n = true;
        } else if (key == "seed") {
            data.header.seed = std::stoull(val);
        } else if (key == "dist") {
            data.header.dist = val;
        }
        // unknown keys ignored
    }
    if (!have_dim || !have_n) throw std::runtime_error("header missing dim or n: " + path.string());
    if (data.header.dim != 2 && data.header.dim != 3)
        throw std::runtime_error("unsupported dim in " + path.string());

    data.coords.reserve(data.header.n * data.header.dim);
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        const std::vector<std::string> toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks.size() != static_cast<std::size_t>(data.header.dim))
            throw std::runtime_error("bad row width in " + path.string());
        for (const std::string& t : toks) data.coords.push_back(parse_double(t));
        ++rows;
    }
    if (rows != data.header.n)
        throw std::runtime_error("row count does not match header n in " + path.string());
    return data;
}

void write_point_file(const std::filesystem::path& path, const PointFileHeader& header,
                      const std::vector<double>& coords) {
    if (coords.size() != header.n * static_cast<std::size_t>(header.dim))
        throw std::invalid_argument("coordinate count does not match header");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << "# maxdist v1 dim=" << header.dim << " n=" << header.n << " seed=" << header.seed
        << " dist=" << header.dist << "\n";
    for (std::size_t i = 0; i < header.n; ++i) {
        for (int j = 0; j < header.dim; ++j) {
            if (j) out << ' ';
            out << format_double(coords[i * header.dim + j]);
        }
        out << "\n";
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace maxdist
