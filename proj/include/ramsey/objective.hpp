#pragma once

#include <random>
#include <vector>

#include "ramsey/cliques.hpp"

namespace ramsey {

// Per-color positive weights; floored at kWeightFloor so a color with a long
// run of zero counts never drops out of the score entirely.
using WeightVector = std::vector<double>;

inline constexpr double kWeightFloor = 1e-6;

// Weighted sum of bad-subgraph counts; zero exactly for good colorings.
double score(const CliqueCounts& counts, const WeightVector& w);

// Starting weights w_c proportional to (max_j k_j / k_c)^exponent, normalized
// to sum 1. exponent must lie in [1,2].
WeightVector init_weights(const Targets& t, double exponent);

// Moving-average update w_c = (K w_c + f_c) / ((K+1) sum_i f_i), then floored.
// Caller must not invoke with all counts zero (the search is already done).
WeightVector update_weights(const WeightVector& w, const CliqueCounts& counts,
                            double K);

// Each weight scaled by a uniform factor from [1-amp, 1+amp], refloored.
WeightVector perturb_weights(const WeightVector& w, double amp, std::mt19937_64& rng);

} // namespace ramsey
