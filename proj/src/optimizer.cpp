#include "kn/optimizer.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "kn/cross_index.hpp"
#include "kn/freeness.hpp"
#include "kn/kernel.hpp"

namespace kn {

namespace {

using clock_type = std::chrono::steady_clock;

std::int64_t elapsed_ms(clock_type::time_point since) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(clock_type::now() - since)
        .count();
}

// Walks assignments in lexicographic bit-vector order (chord 0 is the most
// significant position) by incrementing a counter whose bit j mirrors chord
// c-1-j, flipping one chord at a time and paying only the O(W) partner count
// per flip. visit(eps) sees every assignment exactly once, in order.
template <typename Visit>
void walk_assignments(const kernel::packed_masks& masks, Visit&& visit) {
    const int c = masks.c;
    std::vector<std::uint64_t> pages(masks.w, 0);
    std::int64_t eps = static_cast<std::int64_t>(kernel::select_pair_count()(masks, pages.data()));
    visit(eps, pages);
    const std::uint64_t total = std::uint64_t{1} << c;
    for (std::uint64_t t = 1; t < total; ++t) {
        int carry = std::countr_one(t - 1);
        for (int j = carry; j >= 0; --j) {
            int k = c - 1 - j;
            int same = kernel::same_page_partners(masks, pages.data(), k);
            eps += masks.degree[k] - 2 * same;
            pages[k >> 6] ^= std::uint64_t{1} << (k & 63);
        }
        visit(eps, pages);
    }
}

search_result exhaustive_min_impl(int n, int cap) {
    if (n < 4) throw std::invalid_argument("exhaustive_min needs n >= 4, got " + std::to_string(n));
    if (n > cap) {
        int c = chord_count(n);
        throw std::invalid_argument("exhaustive_min: n=" + std::to_string(n) + " means 2^" +
                                    std::to_string(c) + " assignments, above cap " +
                                    std::to_string(cap) + "; raise the cap to force it");
    }
    const auto started = clock_type::now();
    const auto masks = kernel::build_masks(n);

    search_result result;
    result.n = n;
    result.mode = search_mode::exhaustive;
    result.best_value = -1;
    std::vector<std::uint64_t> best_pages;
    walk_assignments(masks, [&](std::int64_t eps, const std::vector<std::uint64_t>& pages) {
        ++result.stats.assignments_examined;
        if (result.best_value < 0 || eps < result.best_value) {
            result.best_value = eps;
            best_pages = pages;
        }
    });
    result.witness = kernel::unpack_pages(n, best_pages);
    result.stats.wall_ms = elapsed_ms(started);
    return result;
}

}  // namespace

search_result exhaustive_min(int n, int cap) { return exhaustive_min_impl(n, cap); }

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

search_result stochastic_min(int n, std::uint64_t seed, anneal_params params) {
    if (n < 4)
        throw std::invalid_argument("stochastic_min needs n >= 4, got " + std::to_string(n));
    if (params.start && params.start->n != n)
        throw std::invalid_argument("start matrix is on " + std::to_string(params.start->n) +
                                    " vertices, expected " + std::to_string(n));
    const auto started = clock_type::now();
    const auto masks = kernel::build_masks(n);
    const int c = masks.c;
    const auto count = kernel::select_pair_count();

    search_result result;
    result.n = n;
    result.mode = search_mode::stochastic;
    result.best_value = -1;
    result.stats.seed = seed;
    std::vector<std::uint64_t> best_pages;

    std::uint64_t derive_state = seed;
    std::vector<std::uint64_t> restart_seeds(static_cast<std::size_t>(params.restarts));
    for (auto& s : restart_seeds) s = splitmix64(derive_state);

    std::vector<std::uint64_t> start_pages;
    if (params.start) start_pages = kernel::pack_pages(*params.start);

    for (int r = 0; r < params.restarts; ++r) {
        std::mt19937_64 rng(restart_seeds[static_cast<std::size_t>(r)]);
        std::vector<std::uint64_t> pages(static_cast<std::size_t>(masks.w), 0);
        if (params.start) {
            pages = start_pages;
        } else {
            for (int k = 0; k < c; ++k)
                if (rng() & 1) pages[k >> 6] |= std::uint64_t{1} << (k & 63);
        }
        std::int64_t eps = static_cast<std::int64_t>(count(masks, pages.data()));
        if (result.best_value < 0 || eps < result.best_value) {
            result.best_value = eps;
            best_pages = pages;
        }
        std::uniform_int_distribution<int> pick(0, c - 1);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        double temperature = params.t0;
        for (int s = 0; s < params.steps; ++s) {
            ++result.stats.assignments_examined;
            int k = pick(rng);
            int same = kernel::same_page_partners(masks, pages.data(), k);
            std::int64_t delta = masks.degree[k] - 2 * same;
            if (delta <= 0 || unit(rng) < std::exp(-static_cast<double>(delta) / temperature)) {
                pages[k >> 6] ^= std::uint64_t{1} << (k & 63);
                eps += delta;
                if (eps < result.best_value) {
                    result.best_value = eps;
                    best_pages = pages;
                }
            }
            temperature *= params.cooling;
        }
    }

    result.witness = kernel::unpack_pages(n, best_pages);
    result.inconsistent = result.best_value < z_value(n);
    result.stats.wall_ms = elapsed_ms(started);
    return result;
}

std::int64_t delta_epsilon(const page_matrix& m, chord c) {
    if (!is_chord(m.n, c.i, c.j))
        throw std::invalid_argument("delta_epsilon: (" + std::to_string(c.i) + "," +
                                    std::to_string(c.j) + ") is not a chord");
    std::int64_t same = 0, opposite = 0;
    page pc = m.at(c);
    for (auto d : chords(m.n)) {
        if (d == c || !chords_interleave(m.n, c, d)) continue;
        (m.at(d) == pc ? same : opposite) += 1;
    }
    return opposite - same;
}

namespace {

// Spanning paths to offer a reroute witness: the n cyclic rotations of the
// spine first, then any hamiltonian path of the free subgraph by depth-first
// search from each start vertex, neighbors ascending.
std::optional<std::vector<vpair>> find_free_spanning_path(const extended_diagram& d) {
    const int n = d.n();
    auto report = extended_crossing_report(d);
    auto count_of = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        return report.count_of({a, b});
    };
    for (int r = 1; r <= n; ++r) {
        std::vector<vpair> path;
        bool clean = true;
        for (int s = 0; s + 1 < n && clean; ++s) {
            int a = (r - 1 + s) % n + 1;
            int b = (r - 1 + s + 1) % n + 1;
            clean = count_of(a, b) == 0;
            path.push_back({std::min(a, b), std::max(a, b)});
        }
        if (clean) return path;
    }
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
    for (const auto& [e, cnt] : report.per_edge)
        if (cnt == 0) {
            adj[static_cast<std::size_t>(e.first)].push_back(e.second);
            adj[static_cast<std::size_t>(e.second)].push_back(e.first);
        }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    std::vector<int> path;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    auto dfs = [&](auto&& self, int v) -> bool {
        if (static_cast<int>(path.size()) == n) return true;
        for (int u : adj[static_cast<std::size_t>(v)]) {
            if (used[static_cast<std::size_t>(u)]) continue;
            used[static_cast<std::size_t>(u)] = true;
            path.push_back(u);
            if (self(self, u)) return true;
            path.pop_back();
            used[static_cast<std::size_t>(u)] = false;
        }
        return false;
    };
    for (int start = 1; start <= n; ++start) {
        path = {start};
        std::fill(used.begin(), used.end(), false);
        used[static_cast<std::size_t>(start)] = true;
        if (dfs(dfs, start)) {
            std::vector<vpair> edges;
            for (std::size_t s = 0; s + 1 < path.size(); ++s)
                edges.push_back({std::min(path[s], path[s + 1]), std::max(path[s], path[s + 1])});
            return edges;
        }
    }
    return std::nullopt;
}

std::optional<search_result> try_reroutes(const page_matrix& m, std::int64_t target) {
    const int n = m.n;
    auto gaps = spine_edges(n);
    for (auto c : chords(n)) {
        for (auto gap : gaps) {
            if (c.i == gap.first || c.i == gap.second || c.j == gap.first || c.j == gap.second)
                continue;
            for (int ne : {c.i, c.j}) {
                auto d = reroute_chord(m, c, gap, ne);
                auto report = extended_crossing_report(d);
                if (report.total != target) continue;
                if (find_free_hamiltonian_cycle(d).status != cycle_search_status::absent) continue;
                auto tree = find_free_spanning_path(d);
                if (!tree) continue;
                search_result result;
                result.n = n;
                result.mode = search_mode::reroute;
                result.best_value = report.total;
                result.witness = m;
                result.rerouted = std::move(d);
                result.tree = std::move(*tree);
                return result;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<search_result> reroute_witness_search(int n) {
    if (n < 4) throw std::invalid_argument("reroute_witness_search needs n >= 4");
    if (n > 9)
        throw std::invalid_argument("reroute_witness_search: n=" + std::to_string(n) +
                                    " means scanning 2^" + std::to_string(chord_count(n)) +
                                    " assignments for optimal matrices; capped at 9");
    const auto started = clock_type::now();
    auto base = exhaustive_min(n, 9);
    const std::int64_t target = base.best_value;
    const auto masks = kernel::build_masks(n);

    std::optional<search_result> found;
    std::int64_t examined = base.stats.assignments_examined;
    walk_assignments(masks, [&](std::int64_t eps, const std::vector<std::uint64_t>& pages) {
        ++examined;
        if (found || eps != target) return;
        found = try_reroutes(kernel::unpack_pages(n, pages), target);
    });
    if (found) {
        found->stats.assignments_examined = examined;
        found->stats.wall_ms = elapsed_ms(started);
    }
    return found;
}

}  // namespace kn
