#include "ramsey/constructors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ramsey {

namespace {

long long pow_mod(long long base, long long exp, long long mod) {
    long long result = 1;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

} // namespace

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

bool is_quadratic_residue(int x, int p) {
    x = ((x % p) + p) % p;
    if (x == 0) return false;
    return pow_mod(x, (p - 1) / 2, p) == 1;
}

bool is_cubic_residue(int x, int p) {
    x = ((x % p) + p) % p;
    if (x == 0) return false;
    return pow_mod(x, (p - 1) / 3, p) == 1;
}

EdgeColoring paley(int p) {
    if (!is_prime(p) || p % 4 != 1)
        throw std::invalid_argument("paley: p must be a prime = 1 (mod 4)");
    EdgeColoring col(p, 2);
    for (int v = 1; v < p; ++v)
        for (int u = 0; u < v; ++u)
            col.set_color(u, v, is_quadratic_residue(v - u, p) ? 1 : 2);
    return col;
}

EdgeColoring cubic(int p) {
    if (!is_prime(p) || p % 3 != 1)
        throw std::invalid_argument("cubic: p must be a prime = 1 (mod 3)");
    EdgeColoring col(p, 2);
    for (int v = 1; v < p; ++v)
        for (int u = 0; u < v; ++u)
            col.set_color(u, v, is_cubic_residue(v - u, p) ? 1 : 2);
    return col;
}

ColoringVector tile(const ColoringVector& base, int m, int n_target) {
    if (base.shape.kind() != ShapeKind::Circulant)
        throw std::invalid_argument("tile: base must be circulant");
    int b = base.shape.n();
    if (m < 1 || n_target > m * b)
        throw std::invalid_argument("tile: n_target exceeds m*b");
    if (m == 1) {
        if (n_target == b) return base;
        EdgeColoring col = expand(base);
        std::vector<int> drop;
        for (int v = n_target; v < b; ++v) drop.push_back(v);
        EdgeColoring cut = delete_vertices(col, drop);
        ColoringVector out(Shape::free_edges(cut.n), cut.r, cut.colors);
        return out;
    }
    Shape shape = Shape::block_circulant(m, b, false);
    ColoringVector v(shape, base.r);
    // every block is a copy of the base circulant; offset-0 components of
    // off-diagonal blocks have no base distance class, they get the
    // distance-1 color
    auto base_color = [&base, b](int offset) -> std::uint8_t {
        if (offset == 0) return base.values[0];
        int dist = std::min(offset, b - offset);
        return base.values[dist - 1];
    };
    std::size_t comp = 0;
    for (int p = 0; p < m; ++p) {
        for (int q = p; q < m; ++q) {
            if (p == q) {
                for (int t = 1; t <= b / 2; ++t) v.values[comp++] = base.values[t - 1];
            } else {
                for (int t = 0; t < b; ++t) v.values[comp++] = base_color(t);
            }
        }
    }
    if (n_target == m * b) return v;
    EdgeColoring col = expand(v);
    std::vector<int> drop;
    for (int x = n_target; x < m * b; ++x) drop.push_back(x);
    EdgeColoring cut = delete_vertices(col, drop);
    return ColoringVector(Shape::free_edges(cut.n), cut.r, cut.colors);
}

Extension extend_layer(const EdgeColoring& col, int d, std::mt19937_64& rng) {
    if (d < 2 || col.n % d != 0)
        throw std::invalid_argument("extend_layer: incompatible layer size");
    int n = col.n;
    int m_new = n / d + 1;
    Shape shape = Shape::block_circulant(m_new, d, false);
    ColoringVector v(shape, col.r);
    Extension ext{v, {}};
    std::uniform_int_distribution<int> pick(1, col.r);
    std::size_t len = shape.vector_length();
    for (std::size_t i = 0; i < len; ++i) {
        auto orbit = shape.orbit_edges(i);
        bool old = orbit.front().second < n; // orbits never straddle block rows
        if (old) {
            std::uint8_t c = col.color(orbit.front().first, orbit.front().second);
            for (auto [a, b2] : orbit)
                if (col.color(a, b2) != c)
                    throw std::invalid_argument(
                        "extend_layer: coloring is not block-circulant at this d");
            ext.vec.values[i] = c;
            ext.frozen.push_back(i);
        } else {
            ext.vec.values[i] = static_cast<std::uint8_t>(pick(rng));
        }
    }
    return ext;
}

EdgeColoring greedy_delete(const EdgeColoring& col, const Targets& t, int count) {
    if (count >= col.n)
        throw std::invalid_argument("greedy_delete: count must leave a vertex");
    EdgeColoring cur = col;
    for (int step = 0; step < count; ++step) {
        auto inc = bad_vertex_incidence(cur, t);
        int worst = 0;
        for (int v = 1; v < cur.n; ++v)
            if (inc[v] > inc[worst]) worst = v;
        cur = delete_vertices(cur, {worst});
    }
    return cur;
}

namespace {

// Distances whose edges all share one color; empty when col is not circulant.
std::vector<std::uint8_t> circulant_profile(const EdgeColoring& col) {
    int n = col.n;
    std::vector<std::uint8_t> prof(n / 2, 0);
    for (int dist = 1; dist <= n / 2; ++dist) {
        std::uint8_t c = col.color(0, dist);
        for (int u = 0; u < n; ++u) {
            int v = (u + dist) % n;
            if (col.color(std::min(u, v), std::max(u, v)) != c) return {};
        }
        prof[dist - 1] = c;
    }
    return prof;
}

} // namespace

SplitResult split(const EdgeColoring& col, const Targets& t, int g,
                  std::pair<int, int> into, const SearchConfig& cfg) {
    int r = col.r;
    if (g < 1 || g > r) throw std::invalid_argument("split: bad source color");
    if (static_cast<int>(t.size()) != r)
        throw std::invalid_argument("split: targets/r mismatch");
    if (!(into == std::pair<int, int>{3, 3} || into == std::pair<int, int>{3, 4}))
        throw std::invalid_argument("split: into must be 3,3 or 3,4");

    auto [a, b] = into;
    Targets new_targets;
    for (int c = 1; c <= r; ++c) {
        if (c == g) {
            new_targets.push_back(a);
            new_targets.push_back(b);
        } else {
            new_targets.push_back(t[c - 1]);
        }
    }
    // old color c maps to c for c <= g and c+1 beyond; class g splits into
    // new colors g (bound a) and g+1 (bound b)
    auto remap = [g](std::uint8_t c) -> std::uint8_t {
        return c <= g ? c : c + 1;
    };

    std::mt19937_64 rng(cfg.seed);
    int n = col.n;
    EdgeColoring start(n, r + 1);

    auto prof = circulant_profile(col);
    bool have_start = false;
    if (!prof.empty()) {
        // stage 1: assign whole distance classes of color g to the two groups
        std::vector<int> gclasses;
        for (std::size_t i = 0; i < prof.size(); ++i)
            if (prof[i] == g) gclasses.push_back(static_cast<int>(i) + 1);
        auto build = [&](const std::vector<char>& assign) {
            EdgeColoring out(n, r + 1);
            for (int v2 = 1; v2 < n; ++v2)
                for (int u = 0; u < v2; ++u) {
                    int diff = v2 - u;
                    int dist = std::min(diff, n - diff);
                    std::uint8_t c = prof[dist - 1];
                    if (c != g) {
                        out.set_color(u, v2, remap(c));
                    } else {
                        auto it = std::find(gclasses.begin(), gclasses.end(), dist);
                        std::size_t bit = it - gclasses.begin();
                        out.set_color(u, v2, assign[bit] ? g + 1 : g);
                    }
                }
            return out;
        };
        auto badness = [&](const EdgeColoring& cand) {
            return count_cliques(cand, g, a) + count_cliques(cand, g + 1, b);
        };
        long long best_bad = -1;
        std::vector<char> assign(gclasses.size(), 0), best_assign = assign;
        if (gclasses.size() <= 20) {
            std::uint64_t limit = 1ull << gclasses.size();
            for (std::uint64_t mask = 0; mask < limit && best_bad != 0; ++mask) {
                for (std::size_t bit = 0; bit < assign.size(); ++bit)
                    assign[bit] = (mask >> bit) & 1;
                long long bad = badness(build(assign));
                if (best_bad < 0 || bad < best_bad) {
                    best_bad = bad;
                    best_assign = assign;
                }
            }
        } else {
            // class count too large to enumerate: multistart hill climb
            std::uniform_int_distribution<int> coin(0, 1);
            for (int attempt = 0; attempt < 50 && best_bad != 0; ++attempt) {
                for (auto& x : assign) x = static_cast<char>(coin(rng));
                long long bad = badness(build(assign));
                bool improved = true;
                while (improved && bad > 0) {
                    improved = false;
                    for (std::size_t bit = 0; bit < assign.size(); ++bit) {
                        assign[bit] ^= 1;
                        long long b2 = badness(build(assign));
                        if (b2 < bad) {
                            bad = b2;
                            improved = true;
                        } else {
                            assign[bit] ^= 1;
                        }
                    }
                }
                if (best_bad < 0 || bad < best_bad) {
                    best_bad = bad;
                    best_assign = assign;
                }
            }
        }
        start = build(best_assign);
        have_start = true;
        if (best_bad == 0) {
            // express the result as a circulant vector
            std::vector<std::uint8_t> vals(n / 2);
            for (int dist = 1; dist <= n / 2; ++dist)
                vals[dist - 1] = start.color(0, dist);
            ColoringVector vec(Shape::circulant(n), r + 1, std::move(vals));
            SearchResult res{vec, CliqueCounts(new_targets.size(), 0), true,
                             {}, 0, 0, cfg.seed};
            res.counts = count_all(start, new_targets);
            res.good = std::all_of(res.counts.begin(), res.counts.end(),
                                   [](long long f) { return f == 0; });
            return {res, new_targets, SplitStage::CirculantSplit};
        }
    }
    if (!have_start) {
        // non-circulant source: random two-way split of class g
        std::uniform_int_distribution<int> coin(0, 1);
        for (int v2 = 1; v2 < n; ++v2)
            for (int u = 0; u < v2; ++u) {
                std::uint8_t c = col.color(u, v2);
                start.set_color(u, v2,
                                c == g ? (coin(rng) ? g + 1 : g) : remap(c));
            }
    }

    // stage 2: single-edge recoloring inside class g, everything else frozen
    Shape shape = Shape::free_edges(n);
    ColoringVector init(shape, r + 1, start.colors);
    SearchConfig cfg2 = cfg;
    cfg2.frozen.clear();
    for (std::size_t e = 0; e < init.values.size(); ++e)
        if (init.values[e] != g && init.values[e] != g + 1) cfg2.frozen.push_back(e);
    cfg2.allowed_colors = {g, g + 1};
    SearchResult res2 = tabu_search(shape, r + 1, new_targets, cfg2, init);
    if (res2.good) return {res2, new_targets, SplitStage::EdgeRecolorFrozen};

    // stage 3: only worth it when the remaining damage is small
    long long remaining = std::accumulate(res2.counts.begin(), res2.counts.end(), 0ll);
    if (remaining > 100) return {res2, new_targets, SplitStage::EdgeRecolorFrozen};
    SearchConfig cfg3 = cfg;
    cfg3.frozen.clear();
    cfg3.allowed_colors.clear();
    SearchResult res3 = tabu_search(shape, r + 1, new_targets, cfg3, res2.vec);
    return {res3, new_targets, SplitStage::EdgeRecolorFree};
}

} // namespace ramsey
