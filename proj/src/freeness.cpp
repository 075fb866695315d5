#include "kn/freeness.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "kn/canonical.hpp"

namespace kn {

namespace {

std::vector<vpair> free_edges_of(const crossing_report& report) {
    std::vector<vpair> out;
    for (const auto& [e, count] : report.per_edge)
        if (count == 0) out.push_back(e);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<vpair> free_subgraph(const page_matrix& m) {
    return free_edges_of(make_crossing_report(m));
}

std::vector<vpair> free_subgraph(const extended_diagram& d) {
    return free_edges_of(extended_crossing_report(d));
}

cycle_search_result find_free_hamiltonian_cycle(const std::vector<vpair>& free_edges, int n,
                                                std::int64_t node_budget) {
    std::vector<std::vector<int>> adj(n + 1);
    for (auto [a, b] : free_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (int v = 1; v <= n; ++v) {
        std::sort(adj[v].begin(), adj[v].end());
        if (adj[v].size() < 2) return {cycle_search_status::absent, {}, 0};
    }

    cycle_search_result result{cycle_search_status::absent, {}, 0};
    std::vector<int> path{1};
    std::vector<bool> on_path(n + 1, false);
    on_path[1] = true;

    // Depth-first extension with ascending neighbors: the first hamiltonian
    // cycle reached is the lexicographically least vertex sequence from 1.
    auto dfs = [&](auto&& self, int v) -> bool {
        if (++result.nodes_visited > node_budget) {
            result.status = cycle_search_status::budget_exhausted;
            return true;
        }
        if (static_cast<int>(path.size()) == n) {
            if (std::binary_search(adj[v].begin(), adj[v].end(), 1)) {
                result.status = cycle_search_status::found;
                result.cycle = path;
                return true;
            }
            return false;
        }
        for (int u : adj[v]) {
            if (on_path[u]) continue;
            on_path[u] = true;
            path.push_back(u);
            if (self(self, u)) return true;
            path.pop_back();
            on_path[u] = false;
        }
        return false;
    };
    dfs(dfs, 1);
    return result;
}

cycle_search_result find_free_hamiltonian_cycle(const page_matrix& m, std::int64_t node_budget) {
    return find_free_hamiltonian_cycle(free_subgraph(m), m.n, node_budget);
}

cycle_search_result find_free_hamiltonian_cycle(const extended_diagram& d,
                                                std::int64_t node_budget) {
    return find_free_hamiltonian_cycle(free_subgraph(d), d.n(), node_budget);
}

theorem_check verify_theorem_1(int n) {
    if (n < 9 || n % 2 == 0)
        throw std::invalid_argument("verify_theorem_1 needs odd n >= 9, got " + std::to_string(n));
    auto d = build_dprime(n);
    auto report = extended_crossing_report(d);

    theorem_check check;
    check.n = n;
    check.total = report.total;
    check.z = z_value(n);
    check.optimal = check.total == check.z;

    std::vector<vpair> linear_tree;
    for (int v = 2; v < n; ++v) linear_tree.push_back({v, v + 1});
    linear_tree.push_back({1, n});
    check.tree_free = tree_is_crossing_free(d, linear_tree);

    check.cycle_search = find_free_hamiltonian_cycle(free_edges_of(report), n);
    check.no_free_cycle = check.cycle_search.status == cycle_search_status::absent;
    return check;
}

bool check_no_free_edges(const page_matrix& m) {
    auto report = make_crossing_report(m);
    for (const auto& [e, count] : report.per_edge)
        if (is_chord(m.n, e.first, e.second) && count == 0) return false;
    return true;
}

}  // namespace kn
