#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "ramsey/coloring.hpp"
#include "ramsey/search.hpp"

namespace ramsey {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg),
          line(line) {}
};

// One parsed coloring file: a vector (circulant / blocks kinds) or an
// explicit edge coloring, plus optional targets from the header.
struct ColoringFile {
    std::optional<ColoringVector> vec;
    std::optional<EdgeColoring> edges;
    std::optional<Targets> targets;

    int n() const { return vec ? vec->shape.n() : edges->n; }
    int r() const { return vec ? vec->r : edges->r; }
    EdgeColoring to_edge_coloring() const { return vec ? expand(*vec) : *edges; }
};

ColoringFile read_coloring(std::istream& in);
ColoringFile read_coloring(const std::string& path);

void write_coloring(const ColoringFile& file, std::ostream& out);
void write_coloring(const ColoringFile& file, const std::string& path);

inline ColoringFile make_file(const ColoringVector& v,
                              std::optional<Targets> t = {}) {
    return ColoringFile{v, {}, std::move(t)};
}
inline ColoringFile make_file(const EdgeColoring& col,
                              std::optional<Targets> t = {}) {
    return ColoringFile{{}, col, std::move(t)};
}

// One line per accepted move / cooling epoch, then a result line.
void log_trajectory(const SearchResult& result, std::ostream& out);

std::string format_number(double x);

} // namespace ramsey
