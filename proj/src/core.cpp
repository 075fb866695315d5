#include "kn/core.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace kn {

std::int64_t z_value(int n) {
    if (n < 1) throw std::invalid_argument("z_value: n must be >= 1, got " + std::to_string(n));
    std::int64_t a = n / 2, b = (n - 1) / 2, c = (n - 2) / 2, d = (n - 3) / 2;
    std::int64_t prod = a * b * c * d;
    assert(prod % 4 == 0);
    return prod / 4;
}

bool is_chord(int n, int i, int j) {
    return 1 <= i && i < j && j <= n && j >= i + 2 && !(i == 1 && j == n);
}

int chord_count(int n) { return n * (n - 3) / 2; }

static void require_n(int n) {
    if (n < 4) throw std::invalid_argument("chords exist only for n >= 4, got " + std::to_string(n));
}

static void require_chord(int n, chord c) {
    if (!is_chord(n, c.i, c.j))
        throw std::invalid_argument("not a chord for n=" + std::to_string(n) + ": (" +
                                    std::to_string(c.i) + "," + std::to_string(c.j) + ")");
}

std::vector<chord> chords(int n) {
    require_n(n);
    std::vector<chord> out;
    out.reserve(chord_count(n));
    for (int i = 1; i <= n - 2; ++i)
        for (int j = i + 2; j <= n; ++j)
            if (!(i == 1 && j == n)) out.push_back({i, j});
    return out;
}

int chord_index(int n, chord c) {
    require_chord(n, c);
    // Row 1 holds j = 3..n-1; row i >= 2 holds j = i+2..n and starts after
    // (n-3) + sum_{r=2}^{i-1} (n-1-r) earlier entries.
    if (c.i == 1) return c.j - 3;
    int before = (n - 3) + ((n - 3) + (n - c.i)) * (c.i - 2) / 2;
    return before + (c.j - (c.i + 2));
}

std::vector<vpair> spine_edges(int n) {
    require_n(n);
    std::vector<vpair> out;
    out.reserve(n);
    for (int i = 1; i < n; ++i) out.push_back({i, i + 1});
    out.push_back({1, n});
    return out;
}

bool is_spine_edge(int n, int i, int j) {
    if (i > j) std::swap(i, j);
    return (j == i + 1 && i >= 1 && j <= n) || (i == 1 && j == n);
}

bool chords_interleave(int n, chord c1, chord c2) {
    require_chord(n, c1);
    require_chord(n, c2);
    if (c1.i == c2.i || c1.i == c2.j || c1.j == c2.i || c1.j == c2.j) return false;
    if (c2.i < c1.i) std::swap(c1, c2);
    return c1.i < c2.i && c2.i < c1.j && c1.j < c2.j;
}

page page_matrix::at(chord c) const { return pages[chord_index(n, c)]; }

void page_matrix::set(chord c, page p) { pages[chord_index(n, c)] = p; }

std::int8_t page_matrix::entry(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (!is_chord(n, i, j)) return 0;
    return static_cast<std::int8_t>(at({i, j}));
}

page_matrix make_page_matrix(int n, const std::vector<std::pair<chord, page>>& entries) {
    require_n(n);
    const int count = chord_count(n);
    page_matrix m{n, std::vector<page>(count, page::north)};
    std::vector<bool> seen(count, false);
    for (const auto& [c, p] : entries) {
        if (!is_chord(n, c.i, c.j))
            throw std::invalid_argument("entry (" + std::to_string(c.i) + "," + std::to_string(c.j) +
                                        ") is not a chord for n=" + std::to_string(n));
        int idx = chord_index(n, c);
        if (seen[idx])
            throw std::invalid_argument("duplicate entry for chord (" + std::to_string(c.i) + "," +
                                        std::to_string(c.j) + ")");
        seen[idx] = true;
        m.pages[idx] = p;
    }
    for (int k = 0; k < count; ++k)
        if (!seen[k]) {
            chord c = chords(n)[k];
            throw std::invalid_argument("missing assignment for chord (" + std::to_string(c.i) + "," +
                                        std::to_string(c.j) + ")");
        }
    return m;
}

}  // namespace kn
