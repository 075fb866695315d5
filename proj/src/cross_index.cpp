#include "kn/cross_index.hpp"

#include <stdexcept>

namespace kn {

std::int64_t crossing_report::count_of(vpair e) const {
    if (e.first > e.second) std::swap(e.first, e.second);
    for (const auto& [edge, cnt] : per_edge)
        if (edge == e) return cnt;
    throw std::invalid_argument("edge not present in report");
}

std::int64_t epsilon(const page_matrix& m) {
    const auto ch = chords(m.n);
    const int c = static_cast<int>(ch.size());
    std::int64_t total = 0;
    for (int a = 0; a < c; ++a)
        for (int b = a + 1; b < c; ++b)
            if (chords_interleave(m.n, ch[a], ch[b])) {
                int prod = static_cast<int>(m.pages[a]) * static_cast<int>(m.pages[b]);
                total += (prod + 1) / 2;  // 1 iff same page
            }
    return total;
}

std::int64_t sigma(const page_matrix& m, chord c) {
    const page pc = m.at(c);
    std::int64_t count = 0;
    for (int k = c.i + 1; k < c.j; ++k)
        for (int l = c.j + 1; l <= m.n; ++l)
            if (is_chord(m.n, k, l) && m.at({k, l}) == pc) ++count;
    return count;
}

std::int64_t sigma_tilde(const page_matrix& m, chord c) {
    const page pc = m.at(c);
    std::int64_t count = 0;
    for (int k = 1; k < c.i; ++k)
        for (int l = c.i + 1; l < c.j; ++l)
            if (is_chord(m.n, k, l) && m.at({k, l}) == pc) ++count;
    return count;
}

std::int64_t edge_crossing_count(const page_matrix& m, chord c) {
    return sigma(m, c) + sigma_tilde(m, c);
}

crossing_report make_crossing_report(const page_matrix& m) {
    const auto ch = chords(m.n);
    const int c = static_cast<int>(ch.size());
    crossing_report report;
    std::vector<std::int64_t> per(c, 0);
    for (int a = 0; a < c; ++a)
        for (int b = a + 1; b < c; ++b)
            if (m.pages[a] == m.pages[b] && chords_interleave(m.n, ch[a], ch[b])) {
                report.pairs.push_back({{ch[a].i, ch[a].j}, {ch[b].i, ch[b].j}});
                ++per[a];
                ++per[b];
            }
    report.total = static_cast<std::int64_t>(report.pairs.size());
    report.per_edge.reserve(c + m.n);
    for (int k = 0; k < c; ++k) report.per_edge.push_back({{ch[k].i, ch[k].j}, per[k]});
    for (auto e : spine_edges(m.n)) report.per_edge.push_back({e, 0});
    return report;
}

}  // namespace kn
