#pragma once

#include <vector>

#include "kn/cross_index.hpp"
#include "kn/rerouted.hpp"

namespace kn {

// Edges of K_n (spine and chords alike) that cross nothing in the diagram.
std::vector<vpair> free_subgraph(const page_matrix& m);
std::vector<vpair> free_subgraph(const extended_diagram& d);

enum class cycle_search_status { found, absent, budget_exhausted };

struct cycle_search_result {
    cycle_search_status status;
    std::vector<int> cycle;          // vertex sequence, empty unless found
    std::int64_t nodes_visited = 0;
};

// Hamiltonian cycle through the free subgraph, if one exists. Deterministic:
// depth-first from vertex 1 with neighbors in ascending order, so the first
// cycle found is the lexicographically least one starting at 1. The budget
// caps search-tree nodes; exceeding it yields budget_exhausted.
cycle_search_result find_free_hamiltonian_cycle(const std::vector<vpair>& free_edges, int n,
                                                std::int64_t node_budget = 100'000'000);
cycle_search_result find_free_hamiltonian_cycle(const page_matrix& m,
                                                std::int64_t node_budget = 100'000'000);
cycle_search_result find_free_hamiltonian_cycle(const extended_diagram& d,
                                                std::int64_t node_budget = 100'000'000);

struct theorem_check {
    int n;
    std::int64_t total;
    std::int64_t z;
    bool optimal;          // total == z
    bool tree_free;        // the spine path 2..n plus (1,n) is crossing-free
    bool no_free_cycle;    // no hamiltonian cycle in the free subgraph
    cycle_search_result cycle_search;
    bool ok() const { return optimal && tree_free && no_free_cycle; }
};

// For odd n >= 9, checks that the rerouted diagram attains the quadruple
// floor bound, contains the crossing-free spanning linear tree
// v_2 v_3 ... v_n v_1, and admits no free hamiltonian cycle.
theorem_check verify_theorem_1(int n);

// True when every chord of the matrix crosses at least one other edge.
bool check_no_free_edges(const page_matrix& m);

}  // namespace kn
