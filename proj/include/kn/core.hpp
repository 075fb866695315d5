// Core vocabulary for 2-page drawings of K_n: a spine cycle v_1..v_n v_1,
// chords assigned to one of two pages, and the interleaving predicate that
// decides crossings. Vertices are 1-indexed throughout.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace kn {

using vpair = std::pair<int, int>;  // unordered vertex pair, stored (lo, hi)

struct chord {
    int i;  // 1 <= i < j <= n, j >= i+2, (i,j) != (1,n)
    int j;

    friend bool operator==(const chord&, const chord&) = default;
    friend auto operator<=>(const chord&, const chord&) = default;
};

enum class page : std::int8_t { north = +1, south = -1 };

inline page opposite(page p) { return p == page::north ? page::south : page::north; }

// Z(n) = (1/4) * floor(n/2) * floor((n-1)/2) * floor((n-2)/2) * floor((n-3)/2).
// Exact: the product of the four floors is always divisible by 4.
std::int64_t z_value(int n);

bool is_chord(int n, int i, int j);
int chord_count(int n);  // n(n-3)/2

// All chords in lexicographic (i, j) order.
std::vector<chord> chords(int n);

// Position of c in chords(n); O(1).
int chord_index(int n, chord c);

// Spine edges (1,2), (2,3), ..., (n-1,n), (1,n) in that order.
std::vector<vpair> spine_edges(int n);
bool is_spine_edge(int n, int i, int j);

// True iff the endpoint pairs strictly interleave in the cyclic order 1..n;
// false on any shared endpoint. Throws on invalid chords.
bool chords_interleave(int n, chord c1, chord c2);

// Page assignment for every chord of K_n, indexed by chord_index.
struct page_matrix {
    int n = 0;
    std::vector<page> pages;  // size chord_count(n), lexicographic chord order

    page at(chord c) const;
    void set(chord c, page p);
    std::int8_t entry(int i, int j) const;  // a_{(i,j)}: +1, -1, or 0 off-chord

    friend bool operator==(const page_matrix&, const page_matrix&) = default;
};

// Validates every chord assigned exactly once and nothing else; throws
// std::invalid_argument naming the offending entry otherwise.
page_matrix make_page_matrix(int n, const std::vector<std::pair<chord, page>>& entries);

}  // namespace kn
