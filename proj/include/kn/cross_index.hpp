// Cross-index of a 2-page drawing: total same-page interleaving pairs via
// the floor formula, per-edge counts sigma / sigma-tilde / c_D(e), and the
// explicit crossing-pair list.
#pragma once

#include <cstdint>
#include <vector>

#include "kn/core.hpp"

namespace kn {

struct half_arc_crossings {
    chord parent;                       // the rerouted edge
    std::vector<vpair> north_crossers;  // chords crossing the North half-arc
    std::vector<vpair> south_crossers;  // chords crossing the South half-arc
};

struct crossing_report {
    std::int64_t total = 0;
    // Chords in lexicographic order, then spine edges (reported 0 unless
    // pierced by a reroute). Invariant: sum of counts = 2 * total.
    std::vector<std::pair<vpair, std::int64_t>> per_edge;
    std::vector<std::pair<vpair, vpair>> pairs;  // one entry per crossing
    std::vector<half_arc_crossings> half_arcs;   // empty for plain matrices

    std::int64_t count_of(vpair e) const;
};

// Total crossings: sum over interleaving quadruples i<k<j<l of
// floor((a_{(i,j)} * a_{(k,l)} + 1) / 2), i.e. the same-page pair count.
std::int64_t epsilon(const page_matrix& m);

// Same-page chords (k,l) with i<k<j<l for c=(i,j).
std::int64_t sigma(const page_matrix& m, chord c);

// Same-page chords (k,l) with k<i<l<j.
std::int64_t sigma_tilde(const page_matrix& m, chord c);

// c_D(e) = sigma + sigma_tilde: chords crossing c in the drawing.
std::int64_t edge_crossing_count(const page_matrix& m, chord c);

crossing_report make_crossing_report(const page_matrix& m);

}  // namespace kn
