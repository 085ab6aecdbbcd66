#include "ramsey/objective.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ramsey {

double score(const CliqueCounts& counts, const WeightVector& w) {
    if (counts.size() != w.size())
        throw std::invalid_argument("score: length mismatch");
    double s = 0.0;
    for (std::size_t c = 0; c < counts.size(); ++c)
        s += w[c] * static_cast<double>(counts[c]);
    return s;
}

WeightVector init_weights(const Targets& t, double exponent) {
    if (exponent < 1.0 || exponent > 2.0)
        throw std::invalid_argument("init_weights: exponent must be in [1,2]");
    if (t.empty()) throw std::invalid_argument("init_weights: empty targets");
    int k_max = *std::max_element(t.begin(), t.end());
    WeightVector w(t.size());
    double sum = 0.0;
    for (std::size_t c = 0; c < t.size(); ++c) {
        w[c] = std::pow(static_cast<double>(k_max) / t[c], exponent);
        sum += w[c];
    }
    for (auto& x : w) x = std::max(x / sum, kWeightFloor);
    return w;
}

WeightVector update_weights(const WeightVector& w, const CliqueCounts& counts,
                            double K) {
    if (w.size() != counts.size())
        throw std::invalid_argument("update_weights: length mismatch");
    if (K <= 0.0) throw std::invalid_argument("update_weights: K must be positive");
    long long total = 0;
    for (auto f : counts) total += f;
    if (total <= 0)
        throw std::logic_error("update_weights: all counts zero, search is done");
    WeightVector out(w.size());
    for (std::size_t c = 0; c < w.size(); ++c) {
        out[c] = (K * w[c] + static_cast<double>(counts[c])) /
                 ((K + 1.0) * static_cast<double>(total));
        out[c] = std::max(out[c], kWeightFloor);
    }
    return out;
}

WeightVector perturb_weights(const WeightVector& w, double amp, std::mt19937_64& rng) {
    if (amp < 0.0 || amp > 1.0)
        throw std::invalid_argument("perturb_weights: amp must be in [0,1]");
    if (amp == 0.0) return w;
    WeightVector out(w.size());
    std::uniform_real_distribution<double> factor(1.0 - amp, 1.0 + amp);
    for (std::size_t c = 0; c < w.size(); ++c)
        out[c] = std::max(w[c] * factor(rng), kWeightFloor);
    return out;
}

} // namespace ramsey
