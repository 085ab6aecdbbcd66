#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ramsey/coloring.hpp"

namespace ramsey {

// Per-color counts of monochromatic K_{k_c}; all zero iff the coloring is good.
using CliqueCounts = std::vector<long long>;

// Per-color adjacency held as per-vertex bit rows; supports in-place edge
// recoloring so searches can evaluate moves without rebuilding.
class ColoredGraph {
public:
    explicit ColoredGraph(const EdgeColoring& col);

    int n() const { return n_; }
    int r() const { return r_; }
    int words() const { return words_; }

    std::uint8_t color(int u, int v) const { return color_[edge_index(u, v)]; }
    void recolor(int u, int v, std::uint8_t c_new);

    const std::uint64_t* row(int c, int v) const {
        return adj_.data() + (static_cast<std::size_t>(c - 1) * n_ + v) * words_;
    }

    EdgeColoring to_edge_coloring() const;

private:
    std::uint64_t* mutable_row(int c, int v) {
        return adj_.data() + (static_cast<std::size_t>(c - 1) * n_ + v) * words_;
    }

    int n_, r_, words_;
    std::vector<std::uint8_t> color_;
    std::vector<std::uint64_t> adj_;
};

long long count_cliques(const ColoredGraph& g, int c, int k);
long long count_cliques(const EdgeColoring& col, int c, int k);

CliqueCounts count_all(const ColoredGraph& g, const Targets& t);
CliqueCounts count_all(const EdgeColoring& col, const Targets& t);

// Visits every monochromatic k-clique in color c (vertex list, ascending).
void for_each_clique(const ColoredGraph& g, int c, int k,
                     const std::function<void(const std::vector<int>&)>& fn);

// Sorted indices of edges contained in at least one bad subgraph.
std::vector<std::size_t> bad_edge_set(const EdgeColoring& col, const Targets& t);

// Monochromatic k-cliques in color c meeting E, each counted once (attributed
// to its lowest-index member edge of E). E must be sorted by edge index.
long long cliques_through_edges(const ColoredGraph& g, const std::vector<Edge>& E,
                                int c, int k);
long long cliques_through_edges(const EdgeColoring& col, const std::vector<Edge>& E,
                                int c, int k);

// Counts after recoloring component i of v to c_new, computed from `counts`
// by restricting enumeration to cliques through the component's orbit.
CliqueCounts recount_delta(const ColoringVector& v, const CliqueCounts& counts,
                           std::size_t i, std::uint8_t c_new, const Targets& t);

// Number of bad subgraphs each vertex lies in.
std::vector<long long> bad_vertex_incidence(const EdgeColoring& col, const Targets& t);

struct Verdict {
    bool good = false;
    int color = 0;            // color of the witness clique when bad
    std::vector<int> witness; // vertex list of one monochromatic K_{k_c}
};

// Independent check: good iff no color holds a monochromatic K_{k_c}.
// Malformed input (color out of range, target/r mismatch) throws.
Verdict verify(const EdgeColoring& col, const Targets& t);

} // namespace ramsey
