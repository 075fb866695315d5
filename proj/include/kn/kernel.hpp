// Bit-packed counting kernel for the search hot path: pages live in a
// C-bit vector (bit k = 1 when chord k is South), interleaving partners in
// precomputed per-chord mask rows. A scalar reference implementation and an
// AVX2 variant are selected at runtime and must agree bit for bit.
#pragma once

#include <cstdint>
#include <vector>

#include "kn/core.hpp"

namespace kn::kernel {

struct packed_masks {
    int n = 0;
    int c = 0;  // chord count
    int w = 0;  // words per row = ceil(c / 64)
    std::vector<std::uint64_t> full;   // c rows: every interleaving partner
    std::vector<std::uint64_t> upper;  // c rows: partners with index > row
    std::vector<int> degree;           // popcount of full row

    const std::uint64_t* full_row(int k) const { return full.data() + std::size_t(k) * w; }
    const std::uint64_t* upper_row(int k) const { return upper.data() + std::size_t(k) * w; }
};

packed_masks build_masks(int n);

std::vector<std::uint64_t> pack_pages(const page_matrix& m);
page_matrix unpack_pages(int n, const std::vector<std::uint64_t>& words);

// Number of unordered same-page interleaving chord pairs; equals the
// cross-index of the packed assignment.
std::uint64_t same_page_pairs_scalar(const packed_masks& masks, const std::uint64_t* pages);
std::uint64_t same_page_pairs_avx2(const packed_masks& masks, const std::uint64_t* pages);

// Same-page interleaving partners of chord k under the given assignment.
int same_page_partners(const packed_masks& masks, const std::uint64_t* pages, int k);

bool avx2_available();

using pair_count_fn = std::uint64_t (*)(const packed_masks&, const std::uint64_t*);

// Best implementation for this machine, chosen once at first call.
pair_count_fn select_pair_count();
const char* selected_kernel_name();

}  // namespace kn::kernel
