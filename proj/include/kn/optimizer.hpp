#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kn/core.hpp"
#include "kn/rerouted.hpp"

namespace kn {

enum class search_mode { exhaustive, stochastic, reroute };

struct search_stats {
    std::int64_t assignments_examined = 0;
    std::int64_t wall_ms = 0;
    std::uint64_t seed = 0;
};

struct search_result {
    int n = 0;
    search_mode mode = search_mode::exhaustive;
    std::int64_t best_value = 0;
    page_matrix witness;                       // best page assignment found
    std::optional<extended_diagram> rerouted;  // reroute-mode witness, if any
    std::vector<vpair> tree;                   // crossing-free spanning path of the reroute witness
    bool inconsistent = false;                 // a stochastic value below the floor bound
    search_stats stats;
};

// Exact minimum of epsilon over all 2^C page assignments. The witness is the
// lexicographically least minimizing bit vector (chords in lexicographic
// order, North=0 before South=1). Refuses n above the cap.
search_result exhaustive_min(int n, int cap = 8);

struct anneal_params {
    int restarts = 20;
    int steps = 50'000;
    double cooling = 0.999;       // geometric temperature decay per step
    double t0 = 2.0;
    std::optional<page_matrix> start;  // fixed start for every restart; random if absent
};

// Simulated annealing over single-chord page flips, restarted with seeds
// derived from the master seed. Reproducible; never legitimately beats
// z_value(n), so a smaller value sets the inconsistent flag.
search_result stochastic_min(int n, std::uint64_t seed, anneal_params params = {});

// Change in epsilon from flipping c's page: opposite-page interleaving
// partners minus same-page ones, counted in O(C).
std::int64_t delta_epsilon(const page_matrix& m, chord c);

// First single-reroute diagram, in deterministic enumeration order, that
// attains z_value(n) crossings, has no free hamiltonian cycle, and carries a
// crossing-free spanning path. Scans optimal matrices in witness order, each
// chord in lexicographic order, gaps in spine order, smaller north endpoint
// first. Absent when the whole space fails some clause.
std::optional<search_result> reroute_witness_search(int n);

}  // namespace kn
