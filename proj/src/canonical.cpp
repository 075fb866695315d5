#include "kn/canonical.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "kn/cross_index.hpp"

namespace kn {

page_matrix canonical_matrix(int n) {
    if (n < 4) throw std::invalid_argument("canonical_matrix needs n >= 4, got " + std::to_string(n));
    auto ch = chords(n);
    page_matrix m{n, std::vector<page>(ch.size(), page::south)};
    for (std::size_t k = 0; k < ch.size(); ++k) {
        int s = ch[k].i + ch[k].j;
        bool north;
        if (n % 2 == 0)
            north = ((n + 2) / 2 <= s && s <= n) || 2 * s >= 3 * n + 2;
        else
            north = ((n + 3) / 2 <= s && s <= n) || 2 * s >= 3 * n + 1;
        if (north) m.pages[k] = page::north;
    }
    return m;
}

namespace {

using cells_t = std::vector<vpair>;

// Column-major helper: cells (i,j) for j in [jlo, jhi], i in [ilo(j), ihi(j)].
template <class Lo, class Hi>
cells_t by_column(int jlo, int jhi, Lo ilo, Hi ihi) {
    cells_t out;
    for (int j = jlo; j <= jhi; ++j)
        for (int i = ilo(j); i <= ihi(j); ++i) out.push_back({i, j});
    return out;
}

// Row-major helper: cells (i,j) for i in [ilo, ihi], j in [jlo(i), jhi(i)].
template <class Lo, class Hi>
cells_t by_row(int ilo, int ihi, Lo jlo, Hi jhi) {
    cells_t out;
    for (int i = ilo; i <= ihi; ++i)
        for (int j = jlo(i); j <= jhi(i); ++j) out.push_back({i, j});
    return out;
}

void add(std::vector<block>& bs, std::string name, bool north, cells_t cells, std::int64_t num,
         std::int64_t den) {
    bs.push_back({std::move(name), north, std::move(cells), num, den});
}

std::vector<block> blocks_mod0(std::int64_t n) {
    const int N = static_cast<int>(n);
    std::vector<block> bs;
    auto c1 = [](int) { return 1; };
    add(bs, "N1", true, by_column((N + 8) / 4, N / 2, [N](int j) { return (N + 2) / 2 - j; },
                                  [](int j) { return j - 2; }),
        n * n * (n - 2) * (n - 4), 384);
    add(bs, "N2", true, by_column((N + 2) / 2, 3 * N / 4, c1, [N](int j) { return N - j; }),
        n * (5 * n - 4) * (n - 4) * (n - 4), 1536);
    add(bs, "N3", true, by_column((3 * N + 4) / 4, N - 1, c1, [N](int j) { return N - j; }),
        n * (n - 4) * (n * n - 4 * n + 16), 768);
    add(bs, "N4", true, by_column((3 * N + 8) / 4, N, [N](int j) { return (3 * N + 2) / 2 - j; },
                                  [](int j) { return j - 2; }),
        n * n * (n - 4) * (n - 8), 1536);
    add(bs, "S1", false, by_column(3, N / 4, c1, [](int j) { return j - 2; }),
        n * (n - 4) * (n - 8) * (5 * n - 12), 6144);
    add(bs, "S2", false, by_column((N + 4) / 4, (N - 2) / 2, c1, [N](int j) { return N / 2 - j; }),
        n * (n - 4) * (11 * n * n - 44 * n + 32), 6144);
    add(bs, "S3", false, by_column((N + 4) / 2, 3 * N / 4, [N](int j) { return N - j + 1; },
                                   [N](int) { return N / 2; }),
        n * (n + 4) * (n - 4) * (3 * n - 8), 1536);
    add(bs, "S4", false, by_column((N + 6) / 2, 3 * N / 4, [N](int) { return (N + 2) / 2; },
                                   [](int j) { return j - 2; }),
        n * (n - 4) * (n - 8) * (3 * n - 20), 6144);
    add(bs, "S5", false, by_column((3 * N + 4) / 4, N - 1, [N](int j) { return N - j + 1; },
                                   [N](int) { return N / 2; }),
        n * (n + 1) * (n - 4) * (n - 4), 384);
    add(bs, "S6", false, by_row(2, N / 2, [N](int) { return N; }, [N](int) { return N; }), 0, 1);
    add(bs, "S7", false, by_column((3 * N + 4) / 4, N - 1, [N](int) { return (N + 2) / 2; },
                                   [N](int j) { return 3 * N / 2 - j; }),
        n * (n - 4) * (n - 8) * (n - 12), 6144);
    return bs;
}

std::vector<block> blocks_mod1(std::int64_t n) {
    const int N = static_cast<int>(n);
    std::vector<block> bs;
    auto c1 = [](int) { return 1; };
    add(bs, "N1", true, by_column((N + 7) / 4, (N - 1) / 2, [N](int j) { return (N + 3) / 2 - j; },
                                  [](int j) { return j - 2; }),
        (n - 1) * (n - 3) * (n - 5) * (n - 5), 384);
    add(bs, "N2", true, by_row(1, (N - 3) / 2, [N](int) { return (N + 1) / 2; },
                               [N](int) { return (N + 1) / 2; }),
        (n - 1) * (n - 3) * (n - 5), 48);
    add(bs, "N3", true, by_column((N + 3) / 2, (3 * N + 1) / 4, c1, [N](int j) { return N - j; }),
        (n - 1) * (5 * n * n * n - 43 * n * n + 231 * n - 321), 1536);
    add(bs, "N4", true, by_column((3 * N + 5) / 4, N - 1, c1, [N](int j) { return N - j; }),
        (n - 1) * (n - 5) * (n * n - 2 * n + 9), 768);
    add(bs, "N5", true, by_column((3 * N + 5) / 4, N, [N](int j) { return (3 * N + 1) / 2 - j; },
                                  [](int j) { return j - 2; }),
        (n + 3) * (n - 1) * (n - 5) * (n - 5), 1536);
    add(bs, "S1", false, by_column(3, (N - 1) / 4, c1, [](int j) { return j - 2; }),
        (n - 1) * (n - 5) * (n - 9) * (5 * n - 1), 6144);
    add(bs, "S2", false, by_row(1, (N - 5) / 4, [N](int) { return (N + 3) / 4; },
                                [N](int i) { return (N + 1) / 2 - i; }),
        (n + 3) * (n - 1) * (n - 5) * (11 * n + 13), 6144);
    add(bs, "S3", false, by_column((N + 3) / 2, (3 * N - 3) / 4, [N](int j) { return N - j + 1; },
                                   [N](int) { return (N - 1) / 2; }),
        (n - 1) * (n - 1) * (n - 5) * (n - 5), 512);
    add(bs, "S4", false, by_column((N + 5) / 2, (3 * N - 3) / 4, [N](int) { return (N + 1) / 2; },
                                   [](int j) { return j - 2; }),
        (n - 1) * (n - 5) * (n - 9) * (3 * n - 7), 6144);
    add(bs, "S5", false, by_column((3 * N + 1) / 4, N - 1, [N](int j) { return N - j + 1; },
                                   [N](int) { return (N - 1) / 2; }),
        (n + 3) * (n - 1) * (n - 2) * (n - 5), 384);
    add(bs, "S6", false, by_row(2, (N - 1) / 2, [N](int) { return N; }, [N](int) { return N; }), 0, 1);
    add(bs, "S7", false, by_row((N + 1) / 2, (3 * N - 7) / 4, [N](int) { return (3 * N + 1) / 4; },
                                [N](int i) { return (3 * N - 1) / 2 - i; }),
        (n + 3) * (n - 1) * (n - 5) * (n - 9), 6144);
    return bs;
}

std::vector<block> blocks_mod2(std::int64_t n) {
    const int N = static_cast<int>(n);
    std::vector<block> bs;
    auto c1 = [](int) { return 1; };
    add(bs, "N1", true, by_column((N + 6) / 4, N / 2, [N](int j) { return (N + 2) / 2 - j; },
                                  [](int j) { return j - 2; }),
        (n + 2) * (n - 2) * (n * n - 6 * n + 12), 384);
    add(bs, "N2", true, by_column((N + 2) / 2, (3 * N + 2) / 4, c1, [N](int j) { return N - j; }),
        (n + 2) * (n - 2) * (5 * n * n - 36 * n + 84), 1536);
    add(bs, "N3", true, by_column((3 * N + 6) / 4, N - 1, c1, [N](int j) { return N - j; }),
        (n - 2) * (n - 6) * (n * n - 4 * n + 12), 768);
    add(bs, "N4", true, by_column((3 * N + 6) / 4, N, [N](int j) { return (3 * N + 2) / 2 - j; },
                                  [](int j) { return j - 2; }),
        (n - 2) * (n + 2) * (n - 6) * (n - 6), 1536);
    add(bs, "S1", false, by_column(3, (N - 2) / 4, c1, [](int j) { return j - 2; }),
        (n - 2) * (n - 6) * (n - 10) * (5 * n - 6), 6144);
    add(bs, "S2", false, by_row(1, (N - 6) / 4, [N](int) { return (N + 2) / 4; },
                                [N](int i) { return N / 2 - i; }),
        (n + 2) * (n - 2) * (n - 6) * (11 * n + 2), 6144);
    add(bs, "S3", false, by_column((N + 4) / 2, (3 * N - 2) / 4, [N](int j) { return N - j + 1; },
                                   [N](int) { return N / 2; }),
        (n + 2) * (n - 2) * (n - 6) * (3 * n - 2), 1536);
    add(bs, "S4", false, by_column((N + 6) / 2, (3 * N - 2) / 4, [N](int) { return (N + 2) / 2; },
                                   [](int j) { return j - 2; }),
        (n - 2) * (n - 6) * (n - 10) * (3 * n - 10), 6144);
    add(bs, "S5", false, by_column((3 * N + 2) / 4, N - 1, [N](int j) { return N - j + 1; },
                                   [N](int) { return N / 2; }),
        n * (n + 2) * (n - 2) * (n - 4), 384);
    add(bs, "S6", false, by_row(2, N / 2, [N](int) { return N; }, [N](int) { return N; }), 0, 1);
    add(bs, "S7", false, by_row((N + 2) / 2, (3 * N - 6) / 4, [N](int) { return (3 * N + 2) / 4; },
                                [N](int i) { return 3 * N / 2 - i; }),
        (n + 2) * (n - 2) * (n - 6) * (n - 10), 6144);
    return bs;
}

std::vector<block> blocks_mod3(std::int64_t n) {
    const int N = static_cast<int>(n);
    std::vector<block> bs;
    auto c1 = [](int) { return 1; };
    add(bs, "N1", true, by_column((N + 9) / 4, (N - 1) / 2, [N](int j) { return (N + 3) / 2 - j; },
                                  [](int j) { return j - 2; }),
        (n - 3) * (n - 7) * (n * n - 4 * n + 7), 384);
    add(bs, "N2", true, by_row(1, (N - 3) / 2, [N](int) { return (N + 1) / 2; },
                               [N](int) { return (N + 1) / 2; }),
        (n - 1) * (n - 3) * (n - 5), 48);
    add(bs, "N3", true, by_column((N + 3) / 2, (3 * N - 1) / 4, c1, [N](int j) { return N - j; }),
        (n - 3) * (5 * n * n * n - 41 * n * n + 175 * n - 163), 1536);
    add(bs, "N4", true, by_column((3 * N + 3) / 4, N - 1, c1, [N](int j) { return N - j; }),
        (n + 1) * (n - 3) * (n * n - 2 * n + 13), 768);
    add(bs, "N5", true, by_column((3 * N + 7) / 4, N, [N](int j) { return (3 * N + 1) / 2 - j; },
                                  [](int j) { return j - 2; }),
        (n - 3) * (n - 7) * (n + 1) * (n + 1), 1536);
    add(bs, "S1", false, by_column(3, (N + 1) / 4, c1, [](int j) { return j - 2; }),
        (n + 1) * (n - 3) * (n - 7) * (5 * n - 7), 6144);
    add(bs, "S2", false, by_row(1, (N - 3) / 4, [N](int) { return (N + 5) / 4; },
                                [N](int i) { return (N + 1) / 2 - i; }),
        (n - 3) * (n + 1) * (11 * n * n - 22 * n - 1), 6144);
    add(bs, "S3", false, by_column((N + 3) / 2, (3 * N - 1) / 4, [N](int j) { return N - j + 1; },
                                   [N](int) { return (N - 1) / 2; }),
        (n + 1) * (n - 3) * (n - 3) * (n - 3), 512);
    add(bs, "S4", false, by_column((N + 5) / 2, (3 * N - 1) / 4, [N](int) { return (N + 1) / 2; },
                                   [](int j) { return j - 2; }),
        (n + 1) * (n - 3) * (n - 7) * (3 * n - 17), 6144);
    add(bs, "S5", false, by_column((3 * N + 3) / 4, N - 1, [N](int j) { return N - j + 1; },
                                   [N](int) { return (N - 1) / 2; }),
        (n + 1) * (n - 1) * (n - 3) * (n - 5), 384);
    add(bs, "S6", false, by_row(2, (N - 1) / 2, [N](int) { return N; }, [N](int) { return N; }), 0, 1);
    add(bs, "S7", false, by_row((N + 1) / 2, (3 * N - 5) / 4, [N](int) { return (3 * N + 3) / 4; },
                                [N](int i) { return (3 * N - 1) / 2 - i; }),
        (n + 1) * (n - 3) * (n - 7) * (n - 11), 6144);
    return bs;
}

}  // namespace

block_layout block_decomposition(int n) {
    if (n < 8)
        throw std::invalid_argument("block_decomposition needs n >= 8, got " + std::to_string(n));
    block_layout layout{n, n % 4, {}};
    switch (n % 4) {
        case 0: layout.blocks = blocks_mod0(n); break;
        case 1: layout.blocks = blocks_mod1(n); break;
        case 2: layout.blocks = blocks_mod2(n); break;
        default: layout.blocks = blocks_mod3(n); break;
    }
    return layout;
}

const std::vector<std::string>& block_boundary_notes() {
    static const std::vector<std::string> notes = {
        "N3 for n%4==1 starts at j=(n+3)/2, matching its sum limits; starting at (n+5)/2 "
        "would leave column (n+3)/2 uncovered by any North block.",
        "N3 for n%4==3 starts at j=(n+3)/2 for the same reason.",
        "S5 for n%4==2 starts at j=(3n+2)/4, matching its sum limits; starting at (3n+10)/4 "
        "would leave two columns uncovered by any South block.",
        "S5 keeps upper bound j=n-1 in every case; the column j=n belongs to S6 and every "
        "sigma there is 0, so sum limits that run to j=n agree anyway.",
        "N5's closed form for n%4==3 is read with n (not an undeclared m) in its inner "
        "lower limit; this matches enumeration for every tested n.",
    };
    return notes;
}

block_report verify_blocks(int n) {
    block_report report;
    report.n = n;
    report.residue = n % 4;
    report.z = z_value(n);
    report.notes = block_boundary_notes();
    auto layout = block_decomposition(n);
    auto m = canonical_matrix(n);

    auto check_partition = [&](bool north, bool& ok, std::vector<vpair>& defects) {
        std::set<vpair> target;
        for (auto c : chords(n))
            if ((m.at(c) == page::north) == north) target.insert({c.i, c.j});
        std::map<vpair, int> seen;
        for (const auto& b : layout.blocks)
            if (b.north == north)
                for (auto cell : b.cells) ++seen[cell];
        ok = true;
        for (const auto& [cell, count] : seen)
            if (count > 1 || !target.count(cell)) {
                ok = false;
                if (defects.size() < 8) defects.push_back(cell);
            }
        for (const auto& cell : target)
            if (!seen.count(cell)) {
                ok = false;
                if (defects.size() < 8) defects.push_back(cell);
            }
    };
    check_partition(true, report.north_partition_ok, report.north_defects);
    check_partition(false, report.south_partition_ok, report.south_defects);

    report.grand_total = 0;
    for (const auto& b : layout.blocks) {
        block_check chk;
        chk.name = b.name;
        chk.integral = b.integral();
        chk.closed_form = chk.integral ? b.closed_form() : 0;
        chk.enumerated = 0;
        for (auto cell : b.cells) chk.enumerated += sigma(m, {cell.first, cell.second});
        chk.matches = chk.integral && chk.enumerated == chk.closed_form;
        report.grand_total += chk.enumerated;
        report.checks.push_back(std::move(chk));
    }
    report.total_ok = report.grand_total == report.z;
    return report;
}

bool block_report::all_ok() const {
    if (!north_partition_ok || !south_partition_ok || !total_ok) return false;
    return std::all_of(checks.begin(), checks.end(), [](const block_check& c) { return c.matches; });
}

}  // namespace kn
