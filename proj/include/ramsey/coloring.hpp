#pragma once

#include <cstdint>
#include <cstddef>
#include <utility>
#include <vector>

namespace ramsey {

using Edge = std::pair<int, int>; // unordered pair, stored u < v

// Canonical index of the unordered pair {u,v}, u < v.
inline std::size_t edge_index(int u, int v) {
    if (u > v) std::swap(u, v);
    return static_cast<std::size_t>(v) * (v - 1) / 2 + u;
}

inline std::size_t num_edges(int n) {
    return static_cast<std::size_t>(n) * (n - 1) / 2;
}

enum class ShapeKind { Circulant, BlockCirculant, FreeEdges };

// A coloring-vector shape: how vector components map onto edge orbits of K_n.
class Shape {
public:
    static Shape circulant(int n);
    static Shape block_circulant(int m, int d, bool symmetric_offdiag);
    static Shape free_edges(int n);

    ShapeKind kind() const { return kind_; }
    int n() const { return n_; }
    int m() const { return m_; }
    int d() const { return d_; }
    bool symmetric_offdiag() const { return sym_; }

    std::size_t vector_length() const;

    // Edges controlled by component i. Orbits partition E(K_n).
    std::vector<Edge> orbit_edges(std::size_t i) const;

    // Component index owning edge {u,v}.
    std::size_t component_of(int u, int v) const;

    bool operator==(const Shape&) const = default;

private:
    Shape(ShapeKind k, int n, int m, int d, bool sym)
        : kind_(k), n_(n), m_(m), d_(d), sym_(sym) {}

    // Block-circulant component layout: blocks in row-major upper-triangular
    // order (0,0),(0,1),...,(0,m-1),(1,1),...; diagonal blocks carry floor(d/2)
    // distance components, off-diagonal blocks d offsets (asym) or
    // floor(d/2)+1 merged offsets (sym).
    std::size_t block_linear(int p, int q) const; // p <= q
    std::size_t block_base(int p, int q) const;   // first component of block
    std::size_t block_width(int p, int q) const;

    ShapeKind kind_;
    int n_;
    int m_ = 0;
    int d_ = 0;
    bool sym_ = false;
};

// Explicit symmetric r-coloring of E(K_n); colors are 1..r.
struct EdgeColoring {
    int n = 0;
    int r = 0;
    std::vector<std::uint8_t> colors; // indexed by edge_index, size C(n,2)

    EdgeColoring() = default;
    EdgeColoring(int n, int r) : n(n), r(r), colors(num_edges(n), 1) {}

    std::uint8_t color(int u, int v) const { return colors[edge_index(u, v)]; }
    void set_color(int u, int v, std::uint8_t c) { colors[edge_index(u, v)] = c; }

    bool operator==(const EdgeColoring&) const = default;
};

// Shape-tagged vector of color choices; expands to a full edge coloring.
struct ColoringVector {
    Shape shape;
    int r = 0;
    std::vector<std::uint8_t> values; // 1..r, length = shape.vector_length()

    ColoringVector(Shape s, int r)
        : shape(s), r(r), values(s.vector_length(), 1) {}
    ColoringVector(Shape s, int r, std::vector<std::uint8_t> vals);

    bool operator==(const ColoringVector&) const = default;
};

// Per-color clique-order bounds k_1..k_r.
using Targets = std::vector<int>;

EdgeColoring expand(const ColoringVector& v);

// Color of edge {u,w} straight from the vector, no expansion.
std::uint8_t edge_color(const ColoringVector& v, int u, int w);

// Induced coloring on V \ S, vertices relabeled preserving order.
EdgeColoring delete_vertices(const EdgeColoring& col, const std::vector<int>& S);

} // namespace ramsey
