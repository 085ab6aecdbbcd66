#include "ramsey/search.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace ramsey {

SearchState::SearchState(ColoringVector v, Targets t)
    : v_(std::move(v)), t_(std::move(t)), g_(expand(v_)),
      counts_(count_all(g_, t_)) {
    std::size_t len = v_.shape.vector_length();
    orbits_.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
        orbits_.push_back(v_.shape.orbit_edges(i));
}

CliqueCounts SearchState::probe(std::size_t i, std::uint8_t c) {
    std::uint8_t c_old = v_.values[i];
    if (c == c_old) return counts_;
    const auto& orbit = orbits_[i];
    CliqueCounts out = counts_;
    out[c_old - 1] -= cliques_through_edges(g_, orbit, c_old, t_[c_old - 1]);
    for (auto [a, b] : orbit) g_.recolor(a, b, c);
    out[c - 1] += cliques_through_edges(g_, orbit, c, t_[c - 1]);
    for (auto [a, b] : orbit) g_.recolor(a, b, c_old);
    return out;
}

void SearchState::apply(std::size_t i, std::uint8_t c) {
    std::uint8_t c_old = v_.values[i];
    if (c == c_old) return;
    counts_ = probe(i, c);
    for (auto [a, b] : orbits_[i]) g_.recolor(a, b, c);
    v_.values[i] = c;
}

std::vector<std::size_t> SearchState::candidate_set() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < orbits_.size(); ++i) {
        std::uint8_t c = v_.values[i];
        if (cliques_through_edges(g_, orbits_[i], c, t_[c - 1]) > 0)
            out.push_back(i);
    }
    return out;
}

bool SearchState::solved() const {
    return std::all_of(counts_.begin(), counts_.end(),
                       [](long long f) { return f == 0; });
}

std::vector<std::size_t> candidate_set(const ColoringVector& v, const Targets& t) {
    return SearchState(v, t).candidate_set();
}

bool metropolis_accept(double s, double s_star, double T, std::mt19937_64& rng) {
    if (T <= 0.0) throw std::invalid_argument("metropolis_accept: T must be positive");
    if (s_star - s <= 0.0) return true;
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    return std::exp((s - s_star) / T) > unif(rng);
}

ColoringVector random_vector(const Shape& shape, int r, std::mt19937_64& rng) {
    ColoringVector v(shape, r);
    std::uniform_int_distribution<int> pick(1, r);
    for (auto& x : v.values) x = static_cast<std::uint8_t>(pick(rng));
    return v;
}

namespace {

// Zobrist keys for O(1) tabu hashing of coloring vectors; fixed seed so runs
// are reproducible across processes.
std::vector<std::uint64_t> zobrist_table(std::size_t len, int r) {
    std::mt19937_64 z(0x9e3779b97f4a7c15ull);
    std::vector<std::uint64_t> tab(len * (r + 1));
    for (auto& x : tab) x = z();
    return tab;
}

std::uint64_t vector_hash(const std::vector<std::uint64_t>& tab,
                          const ColoringVector& v, int r) {
    std::uint64_t h = 0;
    for (std::size_t i = 0; i < v.values.size(); ++i)
        h ^= tab[i * (r + 1) + v.values[i]];
    return h;
}

std::vector<int> colors_for(const SearchConfig& cfg, int r) {
    if (cfg.allowed_colors.empty()) {
        std::vector<int> all(r);
        for (int c = 0; c < r; ++c) all[c] = c + 1;
        return all;
    }
    for (int c : cfg.allowed_colors)
        if (c < 1 || c > r)
            throw std::invalid_argument("allowed color out of range");
    return cfg.allowed_colors;
}

std::vector<bool> frozen_mask(const SearchConfig& cfg, std::size_t len) {
    std::vector<bool> mask(len, false);
    for (std::size_t i : cfg.frozen) {
        if (i >= len) throw std::invalid_argument("frozen index out of range");
        mask[i] = true;
    }
    return mask;
}

long long total_bad(const CliqueCounts& f) {
    long long s = 0;
    for (auto x : f) s += x;
    return s;
}

void randomize_free(ColoringVector& v, const std::vector<bool>& frozen,
                    const std::vector<int>& colors, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(colors.size()) - 1);
    for (std::size_t i = 0; i < v.values.size(); ++i)
        if (!frozen[i]) v.values[i] = static_cast<std::uint8_t>(colors[pick(rng)]);
}

} // namespace

SearchResult tabu_search(const Shape& shape, int r, const Targets& t,
                         const SearchConfig& cfg,
                         const std::optional<ColoringVector>& initial) {
    if (static_cast<int>(t.size()) != r)
        throw std::invalid_argument("tabu_search: targets/r mismatch");
    if (cfg.L < 0 || cfg.alpha <= 0 || cfg.alpha >= 1)
        throw std::invalid_argument("tabu_search: bad config");
    if (initial && !(initial->shape == shape && initial->r == r))
        throw std::invalid_argument("tabu_search: initial vector shape mismatch");

    std::mt19937_64 rng(cfg.seed);
    std::size_t len = shape.vector_length();
    auto colors = colors_for(cfg, r);
    auto frozen = frozen_mask(cfg, len);
    auto ztab = zobrist_table(len, r);

    ColoringVector base = initial ? *initial : random_vector(shape, r, rng);

    SearchResult result{base, CliqueCounts(t.size()), false, {}, 0, 0, cfg.seed};
    long long best_bad = -1;

    long iter = 0;
    for (int restart = 0; restart <= cfg.max_restarts; ++restart) {
        ColoringVector v = base;
        if (restart > 0 || !initial)
            randomize_free(v, frozen, colors, rng);
        SearchState state(v, t);
        WeightVector w = init_weights(t, cfg.exponent);

        std::unordered_set<std::uint64_t> tabu;
        std::deque<std::uint64_t> order;
        std::uint64_t h = vector_hash(ztab, state.vec(), r);

        while (iter < cfg.max_iters) {
            if (best_bad < 0 || total_bad(state.counts()) < best_bad) {
                best_bad = total_bad(state.counts());
                result.vec = state.vec();
                result.counts = state.counts();
            }
            if (state.solved()) {
                result.good = true;
                result.iterations = iter;
                result.restarts = restart;
                return result;
            }

            double best_score = 0.0;
            bool have = false;
            std::vector<std::pair<std::size_t, std::uint8_t>> argmin;
            for (std::size_t i = 0; i < len; ++i) {
                if (frozen[i]) continue;
                std::uint8_t cur = state.vec().values[i];
                for (int c : colors) {
                    if (c == cur) continue;
                    std::uint64_t h2 =
                        h ^ ztab[i * (r + 1) + cur] ^ ztab[i * (r + 1) + c];
                    if (tabu.count(h2)) continue;
                    double s = score(state.probe(i, static_cast<std::uint8_t>(c)), w);
                    if (!have || s < best_score) {
                        have = true;
                        best_score = s;
                        argmin.clear();
                        argmin.emplace_back(i, static_cast<std::uint8_t>(c));
                    } else if (s == best_score) {
                        argmin.emplace_back(i, static_cast<std::uint8_t>(c));
                    }
                }
            }
            if (!have) break; // every neighbor tabu: restart

            std::uniform_int_distribution<std::size_t> pick(0, argmin.size() - 1);
            auto [mi, mc] = argmin[pick(rng)];
            std::uint8_t prev = state.vec().values[mi];
            state.apply(mi, mc);
            h ^= ztab[mi * (r + 1) + prev] ^ ztab[mi * (r + 1) + mc];
            ++iter;

            tabu.insert(h);
            order.push_back(h);
            if (static_cast<int>(order.size()) > cfg.L) {
                tabu.erase(order.front());
                order.pop_front();
            }

            result.trajectory.push_back(
                {iter, score(state.counts(), w), state.counts(), 0.0, false, w});

            if (!state.solved()) {
                w = update_weights(w, state.counts(), cfg.K);
                if (cfg.perturb_amp > 0.0)
                    w = perturb_weights(w, cfg.perturb_amp, rng);
            }
        }
        if (iter >= cfg.max_iters) {
            result.restarts = restart;
            break;
        }
        result.restarts = restart;
    }
    result.iterations = iter;
    return result;
}

SearchResult anneal_search(const ColoringVector& v, const Targets& t,
                           const SearchConfig& cfg) {
    if (static_cast<int>(t.size()) != v.r)
        throw std::invalid_argument("anneal_search: targets/r mismatch");
    if (cfg.alpha <= 0 || cfg.alpha >= 1 || cfg.T_min <= 0)
        throw std::invalid_argument("anneal_search: bad config");

    std::mt19937_64 rng(cfg.seed);
    std::size_t len = v.shape.vector_length();
    auto colors = colors_for(cfg, v.r);
    auto frozen = frozen_mask(cfg, len);
    std::vector<std::size_t> movable;
    for (std::size_t i = 0; i < len; ++i)
        if (!frozen[i]) movable.push_back(i);
    if (movable.empty())
        throw std::invalid_argument("anneal_search: every component frozen");

    int j_max = cfg.j_max > 0
                    ? cfg.j_max
                    : static_cast<int>((len + 3) / 4);

    SearchState state(v, t);
    WeightVector w = init_weights(t, cfg.exponent);
    double s = score(state.counts(), w);

    // T0 calibration: mean |score delta| over random probe moves.
    double T0 = cfg.T0;
    if (T0 <= 0.0) {
        std::uniform_int_distribution<std::size_t> pick_i(0, movable.size() - 1);
        std::uniform_int_distribution<int> pick_c(0, static_cast<int>(colors.size()) - 1);
        double acc = 0.0;
        int probes = 0;
        for (int p = 0; p < 100; ++p) {
            std::size_t i = movable[pick_i(rng)];
            int c = colors[pick_c(rng)];
            if (c == state.vec().values[i]) continue;
            acc += std::abs(score(state.probe(i, static_cast<std::uint8_t>(c)), w) - s);
            ++probes;
        }
        T0 = probes > 0 ? acc / probes : 1.0;
        if (T0 <= 0.0) T0 = 1.0;
    }

    SearchResult result{state.vec(), state.counts(), false, {}, 0, 0, cfg.seed};
    long long best_bad = total_bad(state.counts());
    const WeightVector w0 = init_weights(t, cfg.exponent);

    long epoch = 0;
    for (int restart = 0; restart <= cfg.max_restarts; ++restart) {
        result.restarts = restart;
        double T = T0;
        double run_start = score(state.counts(), w0);

        while (T > cfg.T_min && !state.solved() && epoch < cfg.max_iters) {
            std::vector<std::size_t> I = state.candidate_set();
            std::erase_if(I, [&frozen](std::size_t i) { return frozen[i]; });
            if (I.empty()) I = movable; // only multi-orbit interactions left

            std::uniform_int_distribution<std::size_t> pick_i(0, I.size() - 1);
            std::uniform_int_distribution<int> pick_c(0, static_cast<int>(colors.size()) - 1);
            for (int j = 0; j < j_max; ++j) {
                std::size_t i = I[pick_i(rng)];
                std::uint8_t cur = state.vec().values[i];
                if (colors.size() == 1 && colors[0] == cur) continue;
                int c = colors[pick_c(rng)];
                while (c == cur) c = colors[pick_c(rng)];
                double s_star = score(state.probe(i, static_cast<std::uint8_t>(c)), w);
                if (metropolis_accept(s, s_star, T, rng)) {
                    state.apply(i, static_cast<std::uint8_t>(c));
                    s = s_star;
                }
            }

            T *= cfg.alpha;
            if (!state.solved()) {
                w = update_weights(w, state.counts(), cfg.K);
                if (cfg.perturb_amp > 0.0)
                    w = perturb_weights(w, cfg.perturb_amp, rng);
            }
            s = score(state.counts(), w);
            ++epoch;
            result.trajectory.push_back({epoch, s, state.counts(), T, true, w});

            if (total_bad(state.counts()) < best_bad) {
                best_bad = total_bad(state.counts());
                result.vec = state.vec();
                result.counts = state.counts();
            }
        }

        if (state.solved()) {
            result.vec = state.vec();
            result.counts = state.counts();
            result.good = true;
            break;
        }
        if (epoch >= cfg.max_iters) break;

        // T bottomed out without success. Judge the run on a fixed weight
        // scale: continue from the obtained vector while it keeps improving,
        // otherwise restart the procedure from the original vector.
        double run_end = score(state.counts(), w0);
        if (!(run_end < 0.99 * run_start)) state = SearchState(v, t);
        w = w0;
        s = score(state.counts(), w);
    }

    result.iterations = epoch;
    return result;
}

} // namespace ramsey
