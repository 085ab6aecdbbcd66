#include "ramsey/cliques.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <stdexcept>

namespace ramsey {

namespace {

inline int popcount_row(const std::uint64_t* row, int words) {
    int c = 0;
    for (int w = 0; w < words; ++w) c += std::popcount(row[w]);
    return c;
}

inline void and_rows(const std::uint64_t* a, const std::uint64_t* b,
                     std::uint64_t* out, int words) {
    for (int w = 0; w < words; ++w) out[w] = a[w] & b[w];
}

inline bool intersects(const std::uint64_t* a, const std::uint64_t* b, int words) {
    for (int w = 0; w < words; ++w)
        if (a[w] & b[w]) return true;
    return false;
}

// Counts cliques extending the implicit prefix within `cand`, vertices taken
// in ascending order by destructively popping the working copy.
struct CliqueCounter {
    const ColoredGraph* g;
    int c;
    int words;
    long long count = 0;
    std::vector<std::uint64_t> scratch; // (k+1) rows

    void run(std::uint64_t* cand, int rem) {
        if (rem <= 0) {
            ++count;
            return;
        }
        int pc = popcount_row(cand, words);
        if (pc < rem) return;
        if (rem == 1) {
            count += pc;
            return;
        }
        if (rem == 2) {
            // pairs within cand: pop ascending, pair each v with later neighbors
            for (int w = 0; w < words; ++w) {
                std::uint64_t bits = cand[w];
                while (bits) {
                    int v = w * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    cand[w] = bits; // bits <= v cleared in this word
                    const std::uint64_t* nv = g->row(c, v);
                    for (int w2 = w; w2 < words; ++w2)
                        count += std::popcount(cand[w2] & nv[w2]);
                }
            }
            return;
        }
        std::uint64_t* next = cand + words; // caller-provided depth slot
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = cand[w];
            while (bits) {
                int v = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                cand[w] = bits;
                and_rows(cand, g->row(c, v), next, words);
                run(next, rem - 1);
            }
        }
    }
};

} // namespace

ColoredGraph::ColoredGraph(const EdgeColoring& col)
    : n_(col.n), r_(col.r), words_((col.n + 63) / 64),
      color_(col.colors),
      adj_(static_cast<std::size_t>(col.r) * col.n * ((col.n + 63) / 64), 0) {
    for (int v = 1; v < n_; ++v)
        for (int u = 0; u < v; ++u) {
            std::uint8_t c = col.color(u, v);
            if (c < 1 || c > r_)
                throw std::invalid_argument("ColoredGraph: color out of range");
            mutable_row(c, u)[v / 64] |= 1ull << (v % 64);
            mutable_row(c, v)[u / 64] |= 1ull << (u % 64);
        }
}

void ColoredGraph::recolor(int u, int v, std::uint8_t c_new) {
    std::uint8_t c_old = color(u, v);
    if (c_old == c_new) return;
    mutable_row(c_old, u)[v / 64] &= ~(1ull << (v % 64));
    mutable_row(c_old, v)[u / 64] &= ~(1ull << (u % 64));
    mutable_row(c_new, u)[v / 64] |= 1ull << (v % 64);
    mutable_row(c_new, v)[u / 64] |= 1ull << (u % 64);
    color_[edge_index(u, v)] = c_new;
}

EdgeColoring ColoredGraph::to_edge_coloring() const {
    EdgeColoring col(n_, r_);
    col.colors = color_;
    return col;
}

long long count_cliques(const ColoredGraph& g, int c, int k) {
    if (c < 1 || c > g.r()) throw std::invalid_argument("count_cliques: bad color");
    if (k < 2) throw std::invalid_argument("count_cliques: k must be >= 2");
    int words = g.words();
    CliqueCounter ctr{&g, c, words, 0, {}};
    ctr.scratch.assign(static_cast<std::size_t>(k + 1) * words, 0);
    std::uint64_t* cand = ctr.scratch.data();
    for (int v = 0; v < g.n(); ++v) cand[v / 64] |= 1ull << (v % 64);
    ctr.run(cand, k);
    return ctr.count;
}

long long count_cliques(const EdgeColoring& col, int c, int k) {
    return count_cliques(ColoredGraph(col), c, k);
}

CliqueCounts count_all(const ColoredGraph& g, const Targets& t) {
    if (static_cast<int>(t.size()) != g.r())
        throw std::invalid_argument("count_all: targets/r mismatch");
    CliqueCounts f(t.size());
    for (std::size_t c = 0; c < t.size(); ++c)
        f[c] = count_cliques(g, static_cast<int>(c + 1), t[c]);
    return f;
}

CliqueCounts count_all(const EdgeColoring& col, const Targets& t) {
    return count_all(ColoredGraph(col), t);
}

namespace {

struct CliqueVisitor {
    const ColoredGraph* g;
    int c;
    int words;
    const std::function<void(const std::vector<int>&)>* fn;
    std::vector<int> stack;
    std::vector<std::uint64_t> scratch;
    bool stop = false; // set by find-first use

    bool run(std::uint64_t* cand, int rem) {
        if (rem == 0) {
            (*fn)(stack);
            return stop;
        }
        if (popcount_row(cand, words) < rem) return false;
        std::uint64_t* next = cand + words;
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = cand[w];
            while (bits) {
                int v = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                cand[w] = bits;
                and_rows(cand, g->row(c, v), next, words);
                stack.push_back(v);
                bool halt = run(next, rem - 1);
                stack.pop_back();
                if (halt) return true;
            }
        }
        return false;
    }
};

} // namespace

void for_each_clique(const ColoredGraph& g, int c, int k,
                     const std::function<void(const std::vector<int>&)>& fn) {
    if (k < 2) throw std::invalid_argument("for_each_clique: k must be >= 2");
    int words = g.words();
    CliqueVisitor vis{&g, c, words, &fn, {}, {}};
    vis.scratch.assign(static_cast<std::size_t>(k + 1) * words, 0);
    std::uint64_t* cand = vis.scratch.data();
    for (int v = 0; v < g.n(); ++v) cand[v / 64] |= 1ull << (v % 64);
    vis.run(cand, k);
}

std::vector<std::size_t> bad_edge_set(const EdgeColoring& col, const Targets& t) {
    if (static_cast<int>(t.size()) != col.r)
        throw std::invalid_argument("bad_edge_set: targets/r mismatch");
    ColoredGraph g(col);
    std::vector<bool> bad(num_edges(col.n), false);
    for (std::size_t c = 0; c < t.size(); ++c)
        for_each_clique(g, static_cast<int>(c + 1), t[c],
                        [&bad](const std::vector<int>& q) {
                            for (std::size_t a = 0; a < q.size(); ++a)
                                for (std::size_t b = a + 1; b < q.size(); ++b)
                                    bad[edge_index(q[a], q[b])] = true;
                        });
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < bad.size(); ++e)
        if (bad[e]) out.push_back(e);
    return out;
}

namespace {

// Counts color-c k-cliques through edge (u,v) avoiding every forbidden edge,
// where forb holds bit rows of the already-attributed edges.
struct ThroughCounter {
    const ColoredGraph* g;
    const std::uint64_t* forb; // n rows
    int c;
    int words;
    long long count = 0;
    std::vector<std::uint64_t> scratch; // rows: P at slot 0, cands after

    void run(std::uint64_t* state, int rem) {
        // state layout: [P (words)] [cand (words)]; deeper calls get fresh slots
        std::uint64_t* P = state;
        std::uint64_t* cand = state + words;
        if (rem == 0) {
            ++count;
            return;
        }
        if (popcount_row(cand, words) < rem) return;
        std::uint64_t* next = state + 2 * words; // next P, next cand follow
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = cand[w];
            while (bits) {
                int v = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                cand[w] = bits;
                if (intersects(forb + static_cast<std::size_t>(v) * words, P, words))
                    continue;
                std::memcpy(next, P, sizeof(std::uint64_t) * words);
                next[v / 64] |= 1ull << (v % 64);
                and_rows(cand, g->row(c, v), next + words, words);
                run(next, rem - 1);
            }
        }
    }
};

} // namespace

long long cliques_through_edges(const ColoredGraph& g, const std::vector<Edge>& E,
                                int c, int k) {
    if (E.empty()) throw std::invalid_argument("cliques_through_edges: empty edge set");
    if (k < 2) throw std::invalid_argument("cliques_through_edges: k must be >= 2");
    std::vector<Edge> edges = E;
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return edge_index(a.first, a.second) < edge_index(b.first, b.second);
    });
    int words = g.words();
    std::vector<std::uint64_t> forb(static_cast<std::size_t>(g.n()) * words, 0);
    ThroughCounter ctr{&g, forb.data(), c, words, 0, {}};
    ctr.scratch.assign(static_cast<std::size_t>(2 * (k + 1)) * words, 0);
    for (const auto& [u, v] : edges) {
        if (g.color(u, v) == c) {
            std::uint64_t* P = ctr.scratch.data();
            std::uint64_t* cand = P + words;
            std::fill(P, P + 2 * static_cast<std::ptrdiff_t>(words), 0);
            P[u / 64] |= 1ull << (u % 64);
            P[v / 64] |= 1ull << (v % 64);
            and_rows(g.row(c, u), g.row(c, v), cand, words);
            ctr.run(P, k - 2);
        }
        forb[static_cast<std::size_t>(u) * words + v / 64] |= 1ull << (v % 64);
        forb[static_cast<std::size_t>(v) * words + u / 64] |= 1ull << (u % 64);
    }
    return ctr.count;
}

long long cliques_through_edges(const EdgeColoring& col, const std::vector<Edge>& E,
                                int c, int k) {
    return cliques_through_edges(ColoredGraph(col), E, c, k);
}

CliqueCounts recount_delta(const ColoringVector& v, const CliqueCounts& counts,
                           std::size_t i, std::uint8_t c_new, const Targets& t) {
    std::uint8_t c_old = v.values[i];
    if (c_new == c_old) return counts;
    ColoredGraph g(expand(v));
    std::vector<Edge> orbit = v.shape.orbit_edges(i);
    CliqueCounts out = counts;
    out[c_old - 1] -= cliques_through_edges(g, orbit, c_old, t[c_old - 1]);
    for (auto [a, b] : orbit) g.recolor(a, b, c_new);
    out[c_new - 1] += cliques_through_edges(g, orbit, c_new, t[c_new - 1]);
    return out;
}

std::vector<long long> bad_vertex_incidence(const EdgeColoring& col, const Targets& t) {
    if (static_cast<int>(t.size()) != col.r)
        throw std::invalid_argument("bad_vertex_incidence: targets/r mismatch");
    ColoredGraph g(col);
    std::vector<long long> inc(col.n, 0);
    for (std::size_t c = 0; c < t.size(); ++c)
        for_each_clique(g, static_cast<int>(c + 1), t[c],
                        [&inc](const std::vector<int>& q) {
                            for (int v : q) ++inc[v];
                        });
    return inc;
}

Verdict verify(const EdgeColoring& col, const Targets& t) {
    if (static_cast<int>(t.size()) != col.r)
        throw std::invalid_argument("verify: targets/r mismatch");
    for (auto c : col.colors)
        if (c < 1 || c > col.r)
            throw std::invalid_argument("verify: malformed coloring, color out of range");
    ColoredGraph g(col);
    for (std::size_t c = 0; c < t.size(); ++c) {
        int words = g.words();
        Verdict found;
        std::function<void(const std::vector<int>&)> grab =
            [&found, &c](const std::vector<int>& q) {
                found.good = false;
                found.color = static_cast<int>(c + 1);
                found.witness = q;
            };
        // find-first via visitor with stop flag
        CliqueVisitor vis{&g, static_cast<int>(c + 1), words, &grab, {}, {}};
        vis.stop = true;
        vis.scratch.assign(static_cast<std::size_t>(t[c] + 1) * words, 0);
        std::uint64_t* cand = vis.scratch.data();
        for (int v = 0; v < g.n(); ++v) cand[v / 64] |= 1ull << (v % 64);
        if (vis.run(cand, t[c])) return found;
    }
    return Verdict{true, 0, {}};
}

} // namespace ramsey
