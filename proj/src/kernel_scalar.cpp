#include "kn/kernel.hpp"

#include <bit>
#include <stdexcept>

namespace kn::kernel {

packed_masks build_masks(int n) {
    auto ch = chords(n);
    const int c = static_cast<int>(ch.size());
    const int w = (c + 63) / 64;
    packed_masks masks;
    masks.n = n;
    masks.c = c;
    masks.w = w;
    masks.full.assign(std::size_t(c) * w, 0);
    masks.upper.assign(std::size_t(c) * w, 0);
    masks.degree.assign(c, 0);
    for (int a = 0; a < c; ++a)
        for (int b = a + 1; b < c; ++b)
            if (chords_interleave(n, ch[a], ch[b])) {
                masks.full[std::size_t(a) * w + b / 64] |= 1ull << (b % 64);
                masks.full[std::size_t(b) * w + a / 64] |= 1ull << (a % 64);
                masks.upper[std::size_t(a) * w + b / 64] |= 1ull << (b % 64);
                ++masks.degree[a];
                ++masks.degree[b];
            }
    return masks;
}

std::vector<std::uint64_t> pack_pages(const page_matrix& m) {
    const int c = chord_count(m.n);
    std::vector<std::uint64_t> words((c + 63) / 64, 0);
    for (int k = 0; k < c; ++k)
        if (m.pages[k] == page::south) words[k / 64] |= 1ull << (k % 64);
    return words;
}

page_matrix unpack_pages(int n, const std::vector<std::uint64_t>& words) {
    const int c = chord_count(n);
    page_matrix m{n, std::vector<page>(c, page::north)};
    for (int k = 0; k < c; ++k)
        if ((words[k / 64] >> (k % 64)) & 1) m.pages[k] = page::south;
    return m;
}

std::uint64_t same_page_pairs_scalar(const packed_masks& masks, const std::uint64_t* pages) {
    // Pair (a,b), a<b, counts iff b interleaves a and both bits agree. The
    // upper rows have no bits at or below their own index, so complementing
    // the page vector never leaks padding bits into the count.
    std::uint64_t total = 0;
    for (int a = 0; a < masks.c; ++a) {
        const std::uint64_t* row = masks.upper_row(a);
        const bool south = (pages[a / 64] >> (a % 64)) & 1;
        for (int t = 0; t < masks.w; ++t) {
            std::uint64_t match = south ? pages[t] : ~pages[t];
            total += std::popcount(row[t] & match);
        }
    }
    return total;
}

int same_page_partners(const packed_masks& masks, const std::uint64_t* pages, int k) {
    const std::uint64_t* row = masks.full_row(k);
    const bool south = (pages[k / 64] >> (k % 64)) & 1;
    int count = 0;
    for (int t = 0; t < masks.w; ++t) {
        std::uint64_t match = south ? pages[t] : ~pages[t];
        count += std::popcount(row[t] & match);
    }
    return count;
}

}  // namespace kn::kernel
