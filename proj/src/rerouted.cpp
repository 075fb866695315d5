#include "kn/rerouted.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "kn/canonical.hpp"

namespace kn {

namespace {

std::string pair_str(vpair e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

void validate_reroute(int n, const std::vector<reroute>& existing, chord c, vpair gap,
                      int north_endpoint) {
    if (!is_chord(n, c.i, c.j))
        throw std::invalid_argument("reroute of non-chord " + pair_str({c.i, c.j}));
    if (gap.first > gap.second) std::swap(gap.first, gap.second);
    if (!is_spine_edge(n, gap.first, gap.second))
        throw std::invalid_argument("reroute gap " + pair_str(gap) + " is not a spine edge");
    if (north_endpoint != c.i && north_endpoint != c.j)
        throw std::invalid_argument("north endpoint " + std::to_string(north_endpoint) +
                                    " is not an endpoint of " + pair_str({c.i, c.j}));
    if (c.i == gap.first || c.i == gap.second || c.j == gap.first || c.j == gap.second)
        throw std::invalid_argument("degenerate reroute: chord " + pair_str({c.i, c.j}) +
                                    " shares a vertex with gap " + pair_str(gap));
    for (const auto& r : existing) {
        if (r.edge == c)
            throw std::invalid_argument("chord " + pair_str({c.i, c.j}) + " is already rerouted");
    }
}

}  // namespace

bool extended_diagram::is_rerouted(chord c) const {
    return std::any_of(reroutes.begin(), reroutes.end(),
                       [&](const reroute& r) { return r.edge == c; });
}

extended_diagram build_dprime(int n) {
    if (n < 5 || n % 2 == 0)
        throw std::invalid_argument("build_dprime needs odd n >= 5, got " + std::to_string(n));
    int m = (n + 1) / 2;
    return reroute_chord(canonical_matrix(n), {m, n}, {1, 2}, m);
}

extended_diagram reroute_chord(const page_matrix& m, chord c, vpair gap, int north_endpoint,
                               int rank) {
    extended_diagram d{m, {}};
    return add_reroute(std::move(d), c, gap, north_endpoint, rank);
}

extended_diagram add_reroute(extended_diagram d, chord c, vpair gap, int north_endpoint, int rank) {
    validate_reroute(d.n(), d.reroutes, c, gap, north_endpoint);
    if (gap.first > gap.second) std::swap(gap.first, gap.second);
    for (const auto& r : d.reroutes)
        if (r.gap == gap && r.rank == rank)
            throw std::invalid_argument("duplicate rank " + std::to_string(rank) + " in gap " +
                                        pair_str(gap));
    d.reroutes.push_back({c, gap, north_endpoint, rank});
    return d;
}

namespace {

struct arc {
    int lo, hi;    // extended-order positions, lo < hi
    page pg;
    vpair owner;   // the diagram edge this arc belongs to
    int reroute_index;  // -1 for base chords
};

// Extended cyclic order: vertex v sits at its spine slot; the w point of a
// reroute through gap (g, g+1) sits just after v_g (gap (1,n): after v_n),
// ordered by rank within the gap.
struct extended_order {
    std::vector<int> vertex_pos;             // 1-based vertex -> position
    std::vector<int> w_pos;                  // reroute index -> position
};

extended_order make_order(const extended_diagram& d) {
    const int n = d.n();
    std::vector<std::vector<std::pair<int, int>>> per_host(n + 1);  // host vertex -> (rank, reroute)
    for (std::size_t r = 0; r < d.reroutes.size(); ++r) {
        vpair g = d.reroutes[r].gap;
        int host = (g == vpair{1, n}) ? n : g.first;
        per_host[host].push_back({d.reroutes[r].rank, static_cast<int>(r)});
    }
    extended_order ord;
    ord.vertex_pos.assign(n + 1, 0);
    ord.w_pos.assign(d.reroutes.size(), 0);
    int pos = 0;
    for (int v = 1; v <= n; ++v) {
        ord.vertex_pos[v] = pos++;
        auto& ws = per_host[v];
        std::sort(ws.begin(), ws.end());
        for (auto [rank, r] : ws) ord.w_pos[r] = pos++;
    }
    return ord;
}

std::vector<arc> make_arcs(const extended_diagram& d, const extended_order& ord) {
    std::vector<arc> arcs;
    auto ch = chords(d.n());
    for (std::size_t k = 0; k < ch.size(); ++k) {
        if (d.is_rerouted(ch[k])) continue;
        arcs.push_back({ord.vertex_pos[ch[k].i], ord.vertex_pos[ch[k].j], d.base.pages[k],
                        {ch[k].i, ch[k].j}, -1});
    }
    for (std::size_t r = 0; r < d.reroutes.size(); ++r) {
        const reroute& rr = d.reroutes[r];
        int ne = rr.north_endpoint;
        int se = ne == rr.edge.i ? rr.edge.j : rr.edge.i;
        vpair owner{rr.edge.i, rr.edge.j};
        int w = ord.w_pos[r];
        int a = ord.vertex_pos[ne];
        arcs.push_back({std::min(a, w), std::max(a, w), page::north, owner, static_cast<int>(r)});
        int b = ord.vertex_pos[se];
        arcs.push_back({std::min(b, w), std::max(b, w), page::south, owner, static_cast<int>(r)});
    }
    return arcs;
}

}  // namespace

crossing_report extended_crossing_report(const extended_diagram& d) {
    const int n = d.n();
    const auto ord = make_order(d);
    const auto arcs = make_arcs(d, ord);

    crossing_report report;
    std::map<vpair, std::int64_t> per;
    for (auto c : chords(n)) per[{c.i, c.j}] = 0;
    for (auto e : spine_edges(n)) per[e] = 0;

    report.half_arcs.reserve(d.reroutes.size());
    for (const auto& r : d.reroutes) report.half_arcs.push_back({r.edge, {}, {}});

    for (std::size_t a = 0; a < arcs.size(); ++a)
        for (std::size_t b = a + 1; b < arcs.size(); ++b) {
            const arc &x = arcs[a], &y = arcs[b];
            if (x.pg != y.pg) continue;
            if (x.lo == y.lo || x.lo == y.hi || x.hi == y.lo || x.hi == y.hi) continue;
            bool lo_in = x.lo < y.lo && y.lo < x.hi;
            bool hi_in = x.lo < y.hi && y.hi < x.hi;
            if (lo_in == hi_in) continue;
            report.pairs.push_back({x.owner, y.owner});
            ++per[x.owner];
            ++per[y.owner];
            for (auto [self, other] : {std::pair{&x, &y}, std::pair{&y, &x}}) {
                if (self->reroute_index < 0) continue;
                auto& ha = report.half_arcs[self->reroute_index];
                (self->pg == page::north ? ha.north_crossers : ha.south_crossers)
                    .push_back(other->owner);
            }
        }

    // One piercing per reroute: the rerouted edge crosses its gap's spine edge at w.
    for (const auto& r : d.reroutes) {
        report.pairs.push_back({{r.edge.i, r.edge.j}, r.gap});
        ++per[{r.edge.i, r.edge.j}];
        ++per[r.gap];
    }

    report.total = static_cast<std::int64_t>(report.pairs.size());
    for (auto c : chords(n)) report.per_edge.push_back({{c.i, c.j}, per[{c.i, c.j}]});
    for (auto e : spine_edges(n)) report.per_edge.push_back({e, per[e]});
    for (auto& ha : report.half_arcs) {
        std::sort(ha.north_crossers.begin(), ha.north_crossers.end());
        std::sort(ha.south_crossers.begin(), ha.south_crossers.end());
    }
    return report;
}

bool check_lemma_3_2(int n) {
    if (n < 5 || n % 2 == 0)
        throw std::invalid_argument("check_lemma_3_2 needs odd n >= 5, got " + std::to_string(n));
    auto mat = canonical_matrix(n);
    int m = (n + 1) / 2;
    return edge_crossing_count(mat, {m, n}) ==
           edge_crossing_count(mat, {1, m}) + edge_crossing_count(mat, {2, n}) + 1;
}

namespace {

// Spanning tree: n-1 edges, connected, acyclic. Hamiltonian cycle: n edges,
// connected, every degree 2.
void validate_tree_or_cycle(int n, const std::vector<vpair>& edges) {
    auto fail = [](const std::string& why) {
        throw std::invalid_argument("not a spanning tree or hamiltonian cycle: " + why);
    };
    const auto sz = static_cast<int>(edges.size());
    if (sz != n - 1 && sz != n) fail("expected n-1 or n edges, got " + std::to_string(sz));
    std::vector<int> parent(n + 1);
    for (int v = 1; v <= n; ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    std::vector<int> degree(n + 1, 0);
    int merges = 0;
    for (auto [a, b] : edges) {
        if (a < 1 || a > n || b < 1 || b > n || a == b) fail("bad edge " + pair_str({a, b}));
        ++degree[a];
        ++degree[b];
        int ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            ++merges;
        } else if (sz == n - 1) {
            fail("cycle through " + pair_str({a, b}));
        }
    }
    if (merges != n - 1) fail("not connected");
    if (sz == n)
        for (int v = 1; v <= n; ++v)
            if (degree[v] != 2) fail("vertex " + std::to_string(v) + " has degree " +
                                     std::to_string(degree[v]));
}

}  // namespace

bool tree_is_crossing_free(const extended_diagram& d, const std::vector<vpair>& tree_edges) {
    validate_tree_or_cycle(d.n(), tree_edges);
    auto report = extended_crossing_report(d);
    for (auto e : tree_edges) {
        if (e.first > e.second) std::swap(e.first, e.second);
        if (report.count_of(e) != 0) return false;
    }
    return true;
}

}  // namespace kn
