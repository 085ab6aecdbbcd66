#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "ramsey/cliques.hpp"
#include "ramsey/objective.hpp"

namespace ramsey {

struct SearchConfig {
    int L = 1000;              // tabu capacity
    double K = 50.0;           // weight smoothing constant
    double exponent = 1.5;     // initial-weight ratio exponent, in [1,2]
    double perturb_amp = 0.0;  // random weight noise amplitude, in [0,1]
    double T0 = 0.0;           // initial temperature; 0 = calibrate from probes
    double alpha = 0.999;      // geometric cooling factor, in (0,1)
    double T_min = 1e-3;
    int j_max = 0;             // inner-loop iterations; 0 = ceil(|V|/4)
    long max_iters = 200000;   // tabu moves / annealing epochs, across restarts
    int max_restarts = 100;
    std::vector<std::size_t> frozen;   // components never recolored
    std::vector<int> allowed_colors;   // empty = all of 1..r
    std::uint64_t seed = 1;
};

struct TrajectoryPoint {
    long iter = 0;
    double score = 0.0;
    CliqueCounts f;
    double T = 0.0;
    bool has_T = false;
    WeightVector w;
};

struct SearchResult {
    ColoringVector vec;
    CliqueCounts counts;
    bool good = false;
    std::vector<TrajectoryPoint> trajectory;
    long iterations = 0;
    int restarts = 0;
    std::uint64_t seed = 0;
};

// Incremental move evaluation: holds the expanded coloring as per-color bit
// adjacency and recounts only cliques through the touched orbit.
class SearchState {
public:
    SearchState(ColoringVector v, Targets t);

    const ColoringVector& vec() const { return v_; }
    const CliqueCounts& counts() const { return counts_; }
    const Targets& targets() const { return t_; }
    std::size_t length() const { return v_.values.size(); }

    // Counts after recoloring component i to c; state unchanged.
    CliqueCounts probe(std::size_t i, std::uint8_t c);
    void apply(std::size_t i, std::uint8_t c);

    // Components whose recoloring away from their current color strictly
    // decreases that color's bad count.
    std::vector<std::size_t> candidate_set() const;

    bool solved() const;

private:
    ColoringVector v_;
    Targets t_;
    ColoredGraph g_;
    CliqueCounts counts_;
    std::vector<std::vector<Edge>> orbits_;
};

std::vector<std::size_t> candidate_set(const ColoringVector& v, const Targets& t);

// Metropolis criterion: accept when s_star <= s, else with probability
// exp((s - s_star)/T).
bool metropolis_accept(double s, double s_star, double T, std::mt19937_64& rng);

// Algorithm: steepest descent over all non-tabu single-component recolorings,
// uniform tie-break, oldest-entry tabu eviction, weight adaptation per move.
SearchResult tabu_search(const Shape& shape, int r, const Targets& t,
                         const SearchConfig& cfg,
                         const std::optional<ColoringVector>& initial = {});

// Simulated annealing over the bad-candidate component set with geometric
// cooling, weight adaptation per epoch, improvement and stagnation restarts.
SearchResult anneal_search(const ColoringVector& v, const Targets& t,
                           const SearchConfig& cfg);

// Vector with non-frozen components drawn uniformly from the allowed colors.
ColoringVector random_vector(const Shape& shape, int r, std::mt19937_64& rng);

} // namespace ramsey
