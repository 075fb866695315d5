// The optimal matrix family M_n and the machine verification of its
// block-decomposition optimality argument, one case per residue of n mod 4.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kn/core.hpp"

namespace kn {

// North iff, for even n, (n+2)/2 <= i+j <= n or i+j >= (3n+2)/2;
// for odd n, (n+3)/2 <= i+j <= n or i+j >= (3n+1)/2.
page_matrix canonical_matrix(int n);

struct block {
    std::string name;  // N1..N5, S1..S7
    bool north = false;
    std::vector<vpair> cells;
    std::int64_t form_num = 0;  // closed form = form_num / form_den, exact
    std::int64_t form_den = 1;

    bool integral() const { return form_num % form_den == 0; }
    std::int64_t closed_form() const { return form_num / form_den; }
};

struct block_layout {
    int n = 0;
    int residue = 0;  // n mod 4
    std::vector<block> blocks;
};

// Explicit index sets and closed forms for every block; n >= 8.
block_layout block_decomposition(int n);

struct block_check {
    std::string name;
    std::int64_t enumerated = 0;
    std::int64_t closed_form = 0;
    bool integral = false;
    bool matches = false;
};

struct block_report {
    int n = 0;
    int residue = 0;
    bool north_partition_ok = false;
    bool south_partition_ok = false;
    std::vector<vpair> north_defects;  // missing/extra/duplicated cells, capped
    std::vector<vpair> south_defects;
    std::vector<block_check> checks;
    std::int64_t grand_total = 0;
    std::int64_t z = 0;
    bool total_ok = false;
    std::vector<std::string> notes;  // boundary-resolution log

    bool all_ok() const;
};

// (a) blocks partition the North/South chord sets, (b) each enumerated
// per-block sigma sum equals its closed form, (c) grand total equals Z(n).
block_report verify_blocks(int n);

// The boundary choices that make the blocks partition N and S exactly;
// logged in every report.
const std::vector<std::string>& block_boundary_notes();

}  // namespace kn
