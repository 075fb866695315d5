// Diagrams obtained from a 2-page drawing by rerouting chords through
// interior points of spine edges. A rerouted chord is drawn as two half-arcs
// meeting at a point w inside its gap, one half per page, so it crosses that
// spine edge exactly once.
#pragma once

#include <cstdint>
#include <vector>

#include "kn/core.hpp"
#include "kn/cross_index.hpp"

namespace kn {

struct reroute {
    chord edge;          // the rerouted chord
    vpair gap;           // spine edge whose interior holds w
    int north_endpoint;  // this endpoint's half-arc lies North, the other South
    int rank = 0;        // tie order among w points sharing a gap

    friend bool operator==(const reroute&, const reroute&) = default;
};

// A full page matrix plus reroutes; each reroute's chord is treated as
// removed from the base drawing and drawn through its w point instead.
struct extended_diagram {
    page_matrix base;
    std::vector<reroute> reroutes;

    int n() const { return base.n; }
    bool is_rerouted(chord c) const;

    friend bool operator==(const extended_diagram&, const extended_diagram&) = default;
};

// Canonical matrix minus chord (m, n) with m = (n+1)/2, rerouted through
// gap (1, 2) with the v_m half North; odd n only.
extended_diagram build_dprime(int n);

// Single reroute of one chord of m. Throws on degenerate reroutes (chord
// sharing a vertex with its gap) and invalid gaps.
extended_diagram reroute_chord(const page_matrix& m, chord c, vpair gap, int north_endpoint,
                               int rank = 0);

// Adds one more reroute to an existing diagram.
extended_diagram add_reroute(extended_diagram d, chord c, vpair gap, int north_endpoint,
                             int rank = 0);

// Crossings on the extended cyclic order (vertices plus w points): same-page
// strictly interleaving arc pairs, plus one piercing per reroute against its
// gap's spine edge. Per-edge counts attribute half-arc crossings and the
// piercing to the rerouted chord; half-arc crossing sets are reported too.
crossing_report extended_crossing_report(const extended_diagram& d);

// c_D identity on the canonical matrix: count(m,n) = count(1,m) + count(2,n) + 1.
bool check_lemma_3_2(int n);

// True iff no tree edge carries a crossing. Accepts spanning trees and
// Hamiltonian cycles; anything else is a domain error.
bool tree_is_crossing_free(const extended_diagram& d, const std::vector<vpair>& tree_edges);

}  // namespace kn
