#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qlzoc/errors.hpp"

namespace qlzoc {

/// An m-bit unsigned word, value < 2^width, width <= 64.
struct BitWord {
    std::uint64_t value = 0;
    std::uint32_t width = 0;

    BitWord() = default;
    BitWord(std::uint64_t v, std::uint32_t w);

    bool bit(std::uint32_t i) const { return (value >> i) & 1u; }
    bool operator==(const BitWord&) const = default;
};

BitWord complement(BitWord x);

/// Leading-zero count: m when x = 0, else the offset of the first 1 from the
/// MSB. Defined by bit scan; that definition is the contract.
std::uint32_t lzc(BitWord x);

/// Leading-one count: m when x is all ones, else the offset of the first 0
/// from the MSB. Satisfies loc(x) = lzc(complement(x)).
std::uint32_t loc(BitWord x);

/// The bitwise difference between i-1 and i: exactly the n LSBs, where n is
/// the unique integer with i mod 2^n = 2^(n-1).
struct FlipMask {
    std::uint32_t n = 0;
    std::uint64_t delta = 0;  // == 2^n - 1
};

FlipMask flip_mask(std::uint64_t i);  // throws DomainError on i == 0

/// Modular LOC, executed literally: gamma starts at 0; for i = 1..m, if the
/// top i bits are all 1, flip the gamma bits selected by flip_mask(i).
std::uint32_t mloc(BitWord x);

/// Same, recording each fired iteration as (i, delta).
std::uint32_t mloc_traced(BitWord x, std::vector<std::pair<std::uint64_t, std::uint64_t>>& fired);

/// Combines the counts of two m-wide halves (m a power of two):
/// gamma_h + gamma_l when the high half was all-zero (gamma_h = m), else
/// gamma_h.
std::uint32_t merge_reference(std::uint32_t gamma_h, std::uint32_t gamma_l, std::uint32_t m);

}  // namespace qlzoc
