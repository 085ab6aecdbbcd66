// Command-line front end: seed constructions, searches, pipelines, and the
// verifier over the text coloring format.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "ramsey/constructors.hpp"
#include "ramsey/io.hpp"

using namespace ramsey;

namespace {

constexpr int kExitGood = 0;
constexpr int kExitExhausted = 1;
constexpr int kExitBad = 2;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Targets parse_targets_arg(const std::string& s) {
    Targets t;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string part = s.substr(pos, comma == std::string::npos
                                             ? std::string::npos
                                             : comma - pos);
        try {
            t.push_back(std::stoi(part));
        } catch (...) {
            throw UsageError("bad targets list '" + s + "'");
        }
        if (t.back() < 3) throw UsageError("targets must be >= 3");
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (t.empty()) throw UsageError("empty targets list");
    return t;
}

// circulant | blocks:<m>[:sym] | edges
Shape parse_shape_arg(const std::string& spec, int n) {
    if (spec == "circulant") return Shape::circulant(n);
    if (spec == "edges") return Shape::free_edges(n);
    if (spec.rfind("blocks:", 0) == 0) {
        std::string rest = spec.substr(7);
        bool sym = false;
        if (rest.size() > 4 && rest.substr(rest.size() - 4) == ":sym") {
            sym = true;
            rest = rest.substr(0, rest.size() - 4);
        }
        int m = 0;
        try {
            m = std::stoi(rest);
        } catch (...) {
            throw UsageError("bad blocks spec '" + spec + "'");
        }
        if (m < 2 || n % m != 0)
            throw UsageError("blocks: m must divide n and be >= 2");
        return Shape::block_circulant(m, n / m, sym);
    }
    throw UsageError("unknown shape '" + spec + "'");
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> given) {
    if (given) return *given;
    std::uint64_t s = std::random_device{}();
    std::cout << "rng-seed=" << s << " (generated)\n";
    return s;
}

void print_counts(const CliqueCounts& f) {
    std::cout << "color k-clique-count\n";
    for (std::size_t c = 0; c < f.size(); ++c)
        std::cout << (c + 1) << " " << f[c] << "\n";
}

int finish_search(const SearchResult& res, const Targets& t,
                  const std::string& out_path) {
    log_trajectory(res, std::cout);
    if (!out_path.empty())
        write_coloring(make_file(res.vec, t), out_path);
    if (res.good) {
        // independent re-check from the expanded coloring
        if (!verify(expand(res.vec), t).good) {
            std::cout << "internal error: verifier rejected a claimed-good result\n";
            return kExitBad;
        }
        return kExitGood;
    }
    return kExitExhausted;
}

int run(int argc, char** argv) {
    CLI::App app{"search and verification of Ramsey lower-bound edge colorings"};
    app.require_subcommand(1);

    // ---- seed ----
    auto* seed = app.add_subcommand("seed", "construct a starting coloring");
    seed->require_subcommand(1);
    int seed_p = 0;
    std::string seed_out;
    auto* seed_paley = seed->add_subcommand("paley", "quadratic-residue coloring");
    seed_paley->add_option("--p", seed_p, "prime = 1 (mod 4)")->required();
    seed_paley->add_option("-o,--output", seed_out, "output file")->required();
    auto* seed_cubic = seed->add_subcommand("cubic", "cubic-residue coloring");
    seed_cubic->add_option("--p", seed_p, "prime = 1 (mod 3)")->required();
    seed_cubic->add_option("-o,--output", seed_out, "output file")->required();

    std::string rand_shape;
    int rand_n = 0, rand_r = 0;
    std::optional<std::uint64_t> rand_seed;
    auto* seed_random = seed->add_subcommand("random", "random coloring vector");
    seed_random->add_option("--shape", rand_shape,
                            "circulant | blocks:<m>[:sym] | edges")->required();
    seed_random->add_option("--n", rand_n, "vertex count")->required();
    seed_random->add_option("--r", rand_r, "color count")->required();
    seed_random->add_option("--rng-seed", rand_seed, "RNG seed");
    seed_random->add_option("-o,--output", seed_out, "output file")->required();

    // ---- search ----
    auto* search = app.add_subcommand("search", "run a coloring search");
    search->require_subcommand(1);
    auto* search_tabu = search->add_subcommand("tabu", "steepest descent with tabu");
    auto* search_anneal = search->add_subcommand("anneal", "simulated annealing");
    std::string s_targets, s_shape, s_init, s_frozen_from, s_out;
    int s_n = 0;
    SearchConfig s_cfg;
    std::optional<std::uint64_t> s_seed;
    for (auto* sub : {search_tabu, search_anneal}) {
        sub->add_option("--targets", s_targets, "k1,k2[,k3...]")->required();
        sub->add_option("--shape", s_shape,
                        "circulant | blocks:<m>[:sym] | edges")->required();
        sub->add_option("--n", s_n, "vertex count")->required();
        sub->add_option("--init", s_init, "initial coloring file");
        sub->add_option("--frozen-from", s_frozen_from,
                        "coloring file pinning the first vertices");
        sub->add_option("--L", s_cfg.L, "tabu capacity");
        sub->add_option("--K", s_cfg.K, "weight smoothing constant");
        sub->add_option("--exponent", s_cfg.exponent, "initial-weight exponent");
        sub->add_option("--perturb", s_cfg.perturb_amp, "weight noise amplitude");
        sub->add_option("--T0", s_cfg.T0, "initial temperature (0 = calibrate)");
        sub->add_option("--alpha", s_cfg.alpha, "cooling factor");
        sub->add_option("--jmax", s_cfg.j_max, "inner-loop iterations");
        sub->add_option("--max-iters", s_cfg.max_iters, "iteration budget");
        sub->add_option("--max-restarts", s_cfg.max_restarts, "restart budget");
        sub->add_option("--rng-seed", s_seed, "RNG seed");
        sub->add_option("-o,--output", s_out, "output file");
    }

    // ---- split ----
    auto* split_cmd = app.add_subcommand("split", "split one color class in two");
    std::string sp_input, sp_into, sp_out;
    int sp_color = 0;
    SearchConfig sp_cfg;
    std::optional<std::uint64_t> sp_seed;
    std::string sp_targets;
    split_cmd->add_option("--input", sp_input, "source coloring file")->required();
    split_cmd->add_option("--color", sp_color, "color class to split")->required();
    split_cmd->add_option("--into", sp_into, "3,3 or 3,4")->required();
    split_cmd->add_option("--targets", sp_targets,
                          "source targets (defaults to the file header)");
    split_cmd->add_option("--max-iters", sp_cfg.max_iters, "iteration budget");
    split_cmd->add_option("--max-restarts", sp_cfg.max_restarts, "restart budget");
    split_cmd->add_option("--rng-seed", sp_seed, "RNG seed");
    split_cmd->add_option("-o,--output", sp_out, "output file");

    // ---- extend ----
    auto* extend_cmd = app.add_subcommand("extend", "append one block layer");
    std::string ex_input, ex_out;
    int ex_d = 0;
    std::optional<std::uint64_t> ex_seed;
    extend_cmd->add_option("--input", ex_input, "coloring file")->required();
    extend_cmd->add_option("--d", ex_d, "layer size")->required();
    extend_cmd->add_option("--rng-seed", ex_seed, "RNG seed");
    extend_cmd->add_option("-o,--output", ex_out, "output file")->required();

    // ---- delete ----
    auto* delete_cmd = app.add_subcommand("delete", "remove vertices");
    std::string dl_input, dl_out, dl_targets;
    int dl_count = 0;
    bool dl_greedy = false;
    delete_cmd->add_option("--input", dl_input, "coloring file")->required();
    delete_cmd->add_option("--count", dl_count, "vertices to remove")->required();
    delete_cmd->add_flag("--greedy", dl_greedy,
                         "remove highest bad-subgraph incidence first");
    delete_cmd->add_option("--targets", dl_targets, "targets (needed for --greedy)");
    delete_cmd->add_option("-o,--output", dl_out, "output file")->required();

    // ---- verify / count ----
    auto* verify_cmd = app.add_subcommand("verify", "check a coloring file");
    auto* count_cmd = app.add_subcommand("count", "print bad-subgraph counts");
    std::string vc_input, vc_targets;
    for (auto* sub : {verify_cmd, count_cmd}) {
        sub->add_option("--input", vc_input, "coloring file")->required();
        sub->add_option("--targets", vc_targets, "k1,k2[,k3...]");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitGood : kExitUsage;
    }

    if (seed_paley->parsed() || seed_cubic->parsed()) {
        bool quad = seed_paley->parsed();
        if (!is_prime(seed_p) || seed_p % (quad ? 4 : 3) != 1)
            throw UsageError(quad ? "paley needs a prime = 1 (mod 4)"
                                  : "cubic needs a prime = 1 (mod 3)");
        // residue colorings are circulant: store the distance profile
        std::vector<std::uint8_t> vals(seed_p / 2);
        for (int dist = 1; dist <= seed_p / 2; ++dist)
            vals[dist - 1] = (quad ? is_quadratic_residue(dist, seed_p)
                                   : is_cubic_residue(dist, seed_p))
                                 ? 1
                                 : 2;
        ColoringVector v(Shape::circulant(seed_p), 2, std::move(vals));
        write_coloring(make_file(v), seed_out);
        std::cout << "wrote " << seed_out << "\n";
        return kExitGood;
    }
    if (seed_random->parsed()) {
        if (rand_r < 2 || rand_r > 9) throw UsageError("r must be in 2..9");
        Shape shape = parse_shape_arg(rand_shape, rand_n);
        std::mt19937_64 rng(resolve_seed(rand_seed));
        write_coloring(make_file(random_vector(shape, rand_r, rng)), seed_out);
        std::cout << "wrote " << seed_out << "\n";
        return kExitGood;
    }

    if (search_tabu->parsed() || search_anneal->parsed()) {
        Targets t = parse_targets_arg(s_targets);
        Shape shape = parse_shape_arg(s_shape, s_n);
        int r = static_cast<int>(t.size());
        s_cfg.seed = resolve_seed(s_seed);

        std::optional<ColoringVector> init;
        if (!s_init.empty()) {
            ColoringFile f = read_coloring(s_init);
            if (f.vec && f.vec->shape == shape) {
                init = f.vec;
            } else {
                EdgeColoring col = f.to_edge_coloring();
                if (col.n != s_n)
                    throw UsageError("--init order does not match --n");
                if (shape.kind() != ShapeKind::FreeEdges)
                    throw UsageError("--init shape does not match --shape");
                init = ColoringVector(shape, r, col.colors);
            }
            if (init->r != r) throw UsageError("--init color count mismatch");
        }
        if (!s_frozen_from.empty()) {
            EdgeColoring pin = read_coloring(s_frozen_from).to_edge_coloring();
            if (pin.n > s_n) throw UsageError("--frozen-from order exceeds --n");
            if (pin.r != r) throw UsageError("--frozen-from color count mismatch");
            if (!init) {
                std::mt19937_64 rng(s_cfg.seed + 1);
                init = random_vector(shape, r, rng);
            }
            for (std::size_t i = 0; i < shape.vector_length(); ++i) {
                auto orbit = shape.orbit_edges(i);
                bool inside = true;
                for (auto [u, v] : orbit)
                    if (v >= pin.n) inside = false;
                if (!inside) continue;
                std::uint8_t c = pin.color(orbit[0].first, orbit[0].second);
                for (auto [u, v] : orbit)
                    if (pin.color(u, v) != c)
                        throw UsageError(
                            "--frozen-from coloring does not respect the shape");
                init->values[i] = c;
                s_cfg.frozen.push_back(i);
            }
        }

        SearchResult res =
            search_tabu->parsed()
                ? tabu_search(shape, r, t, s_cfg, init)
                : anneal_search(init ? *init
                                     : [&] {
                                           std::mt19937_64 rng(s_cfg.seed + 1);
                                           return random_vector(shape, r, rng);
                                       }(),
                                t, s_cfg);
        return finish_search(res, t, s_out);
    }

    if (split_cmd->parsed()) {
        ColoringFile f = read_coloring(sp_input);
        Targets t;
        if (!sp_targets.empty())
            t = parse_targets_arg(sp_targets);
        else if (f.targets)
            t = *f.targets;
        else
            throw UsageError("split needs --targets or targets in the file header");
        auto into_t = parse_targets_arg(sp_into);
        if (into_t.size() != 2) throw UsageError("--into must name two targets");
        sp_cfg.seed = resolve_seed(sp_seed);
        auto out = split(f.to_edge_coloring(), t, sp_color,
                         {into_t[0], into_t[1]}, sp_cfg);
        log_trajectory(out.result, std::cout);
        if (!sp_out.empty())
            write_coloring(make_file(out.result.vec, out.new_targets), sp_out);
        if (out.result.good &&
            verify(expand(out.result.vec), out.new_targets).good)
            return kExitGood;
        return kExitExhausted;
    }

    if (extend_cmd->parsed()) {
        ColoringFile f = read_coloring(ex_input);
        std::mt19937_64 rng(resolve_seed(ex_seed));
        Extension ext = extend_layer(f.to_edge_coloring(), ex_d, rng);
        write_coloring(make_file(ext.vec, f.targets), ex_out);
        std::cout << "wrote " << ex_out << " frozen=";
        for (std::size_t i = 0; i < ext.frozen.size(); ++i)
            std::cout << (i ? "," : "") << ext.frozen[i];
        std::cout << "\n";
        return kExitGood;
    }

    if (delete_cmd->parsed()) {
        ColoringFile f = read_coloring(dl_input);
        EdgeColoring col = f.to_edge_coloring();
        if (dl_count >= col.n) throw UsageError("--count must leave a vertex");
        EdgeColoring cut(2, 2);
        if (dl_greedy) {
            if (dl_targets.empty() && !f.targets)
                throw UsageError("--greedy needs targets");
            Targets t = dl_targets.empty() ? *f.targets
                                           : parse_targets_arg(dl_targets);
            cut = greedy_delete(col, t, dl_count);
        } else {
            std::vector<int> drop;
            for (int v = col.n - dl_count; v < col.n; ++v) drop.push_back(v);
            cut = delete_vertices(col, drop);
        }
        write_coloring(make_file(cut, f.targets), dl_out);
        std::cout << "wrote " << dl_out << " n=" << cut.n << "\n";
        return kExitGood;
    }

    if (verify_cmd->parsed() || count_cmd->parsed()) {
        ColoringFile f = read_coloring(vc_input);
        Targets t;
        if (!vc_targets.empty())
            t = parse_targets_arg(vc_targets);
        else if (f.targets)
            t = *f.targets;
        else
            throw UsageError("needs --targets or targets in the file header");
        if (static_cast<int>(t.size()) != f.r())
            throw UsageError("targets length does not match the coloring");
        EdgeColoring col = f.to_edge_coloring();
        if (count_cmd->parsed()) {
            CliqueCounts fc = count_all(col, t);
            print_counts(fc);
            bool good = true;
            for (auto x : fc) good = good && x == 0;
            std::cout << (good ? "good\n" : "bad\n");
            return good ? kExitGood : kExitBad;
        }
        Verdict v = verify(col, t);
        if (v.good) {
            std::cout << "good\n";
            return kExitGood;
        }
        std::cout << "bad color=" << v.color << " witness=";
        for (std::size_t i = 0; i < v.witness.size(); ++i)
            std::cout << (i ? "," : "") << v.witness[i];
        std::cout << "\n";
        return kExitBad;
    }

    throw UsageError("no subcommand");
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
