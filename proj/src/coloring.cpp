#include "ramsey/coloring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ramsey {

Shape Shape::circulant(int n) {
    if (n < 2) throw std::invalid_argument("circulant: n must be >= 2");
    return Shape(ShapeKind::Circulant, n, 0, 0, false);
}

Shape Shape::block_circulant(int m, int d, bool symmetric_offdiag) {
    if (m < 2 || d < 2)
        throw std::invalid_argument("block_circulant: need m >= 2 and d >= 2");
    return Shape(ShapeKind::BlockCirculant, m * d, m, d, symmetric_offdiag);
}

Shape Shape::free_edges(int n) {
    if (n < 2) throw std::invalid_argument("free_edges: n must be >= 2");
    return Shape(ShapeKind::FreeEdges, n, 0, 0, false);
}

std::size_t Shape::vector_length() const {
    switch (kind_) {
    case ShapeKind::Circulant:
        return static_cast<std::size_t>(n_ / 2);
    case ShapeKind::FreeEdges:
        return num_edges(n_);
    case ShapeKind::BlockCirculant: {
        std::size_t diag = static_cast<std::size_t>(m_) * (d_ / 2);
        std::size_t pairs = static_cast<std::size_t>(m_) * (m_ - 1) / 2;
        std::size_t per = sym_ ? static_cast<std::size_t>(d_ / 2 + 1)
                               : static_cast<std::size_t>(d_);
        return diag + pairs * per;
    }
    }
    return 0;
}

std::size_t Shape::block_linear(int p, int q) const {
    // blocks before row p: sum_{i<p} (m - i)
    return static_cast<std::size_t>(p) * m_ - static_cast<std::size_t>(p) * (p - 1) / 2
        + (q - p);
}

std::size_t Shape::block_width(int p, int q) const {
    if (p == q) return static_cast<std::size_t>(d_ / 2);
    return sym_ ? static_cast<std::size_t>(d_ / 2 + 1) : static_cast<std::size_t>(d_);
}

std::size_t Shape::block_base(int p, int q) const {
    std::size_t base = 0;
    for (int pp = 0; pp < m_; ++pp) {
        for (int qq = pp; qq < m_; ++qq) {
            if (pp == p && qq == q) return base;
            base += block_width(pp, qq);
        }
    }
    throw std::out_of_range("block_base: bad block");
}

std::vector<Edge> Shape::orbit_edges(std::size_t i) const {
    if (i >= vector_length()) throw std::out_of_range("orbit_edges: component index");
    std::vector<Edge> out;
    auto add = [&out](int a, int b) {
        if (a > b) std::swap(a, b);
        out.emplace_back(a, b);
    };
    switch (kind_) {
    case ShapeKind::Circulant: {
        int t = static_cast<int>(i) + 1; // 1-based distance
        if (2 * t == n_) {
            for (int u = 0; u < n_ / 2; ++u) add(u, u + t);
        } else {
            for (int u = 0; u < n_; ++u) add(u, (u + t) % n_);
        }
        return out;
    }
    case ShapeKind::FreeEdges: {
        // invert edge_index: find v with v(v-1)/2 <= i < v(v+1)/2
        int v = 1;
        while (num_edges(v + 1) <= i) ++v;
        int u = static_cast<int>(i - num_edges(v));
        add(u, v);
        return out;
    }
    case ShapeKind::BlockCirculant: {
        std::size_t base = 0;
        for (int p = 0; p < m_; ++p) {
            for (int q = p; q < m_; ++q) {
                std::size_t w = block_width(p, q);
                if (i < base + w) {
                    int t = static_cast<int>(i - base);
                    if (p == q) {
                        int dist = t + 1;
                        if (2 * dist == d_) {
                            for (int j = 0; j < d_ / 2; ++j)
                                add(p * d_ + j, p * d_ + j + dist);
                        } else {
                            for (int j = 0; j < d_; ++j)
                                add(p * d_ + j, p * d_ + (j + dist) % d_);
                        }
                    } else if (!sym_) {
                        for (int j = 0; j < d_; ++j)
                            add(p * d_ + j, q * d_ + (j + t) % d_);
                    } else {
                        for (int j = 0; j < d_; ++j)
                            add(p * d_ + j, q * d_ + (j + t) % d_);
                        if (t != 0 && 2 * t != d_) {
                            for (int j = 0; j < d_; ++j)
                                add(p * d_ + j, q * d_ + (j - t + d_) % d_);
                        }
                    }
                    return out;
                }
                base += w;
            }
        }
        throw std::out_of_range("orbit_edges: component index");
    }
    }
    return out;
}

std::size_t Shape::component_of(int u, int v) const {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("component_of: bad vertex pair");
    if (u > v) std::swap(u, v);
    switch (kind_) {
    case ShapeKind::Circulant: {
        int diff = v - u;
        int dist = std::min(diff, n_ - diff);
        return static_cast<std::size_t>(dist - 1);
    }
    case ShapeKind::FreeEdges:
        return edge_index(u, v);
    case ShapeKind::BlockCirculant: {
        int p = u / d_, q = v / d_;
        int j = u % d_, l = v % d_;
        if (p == q) {
            int diff = (l - j + d_) % d_;
            int dist = std::min(diff, d_ - diff);
            return block_base(p, p) + (dist - 1);
        }
        int t = (l - j + d_) % d_;
        if (sym_) t = std::min(t, d_ - t);
        return block_base(p, q) + t;
    }
    }
    throw std::logic_error("component_of: unreachable");
}

ColoringVector::ColoringVector(Shape s, int r, std::vector<std::uint8_t> vals)
    : shape(s), r(r), values(std::move(vals)) {
    if (values.size() != shape.vector_length())
        throw std::invalid_argument("ColoringVector: wrong length " +
                                    std::to_string(values.size()));
    for (auto c : values)
        if (c < 1 || c > r)
            throw std::invalid_argument("ColoringVector: color out of range");
}

EdgeColoring expand(const ColoringVector& v) {
    EdgeColoring col(v.shape.n(), v.r);
    std::size_t len = v.shape.vector_length();
    for (std::size_t i = 0; i < len; ++i)
        for (auto [u, w] : v.shape.orbit_edges(i))
            col.set_color(u, w, v.values[i]);
    return col;
}

std::uint8_t edge_color(const ColoringVector& v, int u, int w) {
    return v.values[v.shape.component_of(u, w)];
}

EdgeColoring delete_vertices(const EdgeColoring& col, const std::vector<int>& S) {
    std::vector<bool> dead(col.n, false);
    for (int s : S) {
        if (s < 0 || s >= col.n) throw std::invalid_argument("delete_vertices: bad vertex");
        dead[s] = true;
    }
    std::vector<int> keep;
    for (int u = 0; u < col.n; ++u)
        if (!dead[u]) keep.push_back(u);
    if (keep.empty()) throw std::invalid_argument("delete_vertices: all vertices removed");
    EdgeColoring out(static_cast<int>(keep.size()), col.r);
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = a + 1; b < keep.size(); ++b)
            out.set_color(static_cast<int>(a), static_cast<int>(b),
                          col.color(keep[a], keep[b]));
    return out;
}

} // namespace ramsey
