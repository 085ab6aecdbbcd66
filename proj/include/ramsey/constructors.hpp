#pragma once

#include <random>
#include <utility>

#include "ramsey/cliques.hpp"
#include "ramsey/search.hpp"

namespace ramsey {

// Quadratic-residue 2-coloring of K_p; requires p prime, p = 1 (mod 4).
EdgeColoring paley(int p);

// Cubic-residue 2-coloring of K_p; requires p prime, p = 1 (mod 3).
EdgeColoring cubic(int p);

bool is_prime(int p);
bool is_quadratic_residue(int x, int p);
bool is_cubic_residue(int x, int p);

// Block-circulant vector on m*b vertices built from copies of a circulant
// base coloring of order b, then trimmed (highest-indexed rows/columns first)
// down to n_target. Returns a free-edges vector when trimming happened.
ColoringVector tile(const ColoringVector& base, int m, int n_target);

struct Extension {
    ColoringVector vec;                // block-circulant on n+d vertices
    std::vector<std::size_t> frozen;   // components covering the old edges
};

// Appends one d-sized block layer; requires d | n and the input coloring to
// be block-circulant with block size d (every orbit monochromatic).
Extension extend_layer(const EdgeColoring& col, int d, std::mt19937_64& rng);

// Repeatedly removes the vertex lying in the most bad subgraphs (ties broken
// by lowest index), recounting after each removal.
EdgeColoring greedy_delete(const EdgeColoring& col, const Targets& t, int count);

enum class SplitStage { CirculantSplit, EdgeRecolorFrozen, EdgeRecolorFree };

struct SplitResult {
    SearchResult result;   // over the (r+1)-coloring
    Targets new_targets;   // source targets with k_g replaced by (a, b)
    SplitStage stage = SplitStage::CirculantSplit; // last stage reached
};

// Splits color class g of a good r-coloring into two classes with clique
// bounds (a,b), yielding an (r+1)-coloring. Three stages: assignment of
// circulant distance classes, single-edge recoloring inside class g with
// everything else frozen, then fully free single-edge recoloring.
SplitResult split(const EdgeColoring& col, const Targets& t, int g,
                  std::pair<int, int> into, const SearchConfig& cfg);

} // namespace ramsey
