#include "qlzoc/oracle.hpp"

#include <bit>

namespace qlzoc {

BitWord::BitWord(std::uint64_t v, std::uint32_t w) : value(v), width(w) {
    if (w == 0 || w > 64) throw InvalidWidthError("word width must be in [1, 64]");
    if (w < 64 && v >> w) throw DomainError("value does not fit the stated width");
}

BitWord complement(BitWord x) {
    const std::uint64_t mask = x.width == 64 ? ~0ull : (1ull << x.width) - 1;
    return BitWord{(~x.value) & mask, x.width};
}

std::uint32_t lzc(BitWord x) {
    for (std::uint32_t k = 0; k < x.width; ++k) {
        if (x.bit(x.width - 1 - k)) return k;
    }
    return x.width;
}

std::uint32_t loc(BitWord x) {
    for (std::uint32_t k = 0; k < x.width; ++k) {
        if (!x.bit(x.width - 1 - k)) return k;
    }
    return x.width;
}

FlipMask flip_mask(std::uint64_t i) {
    if (i == 0) throw DomainError("flip_mask is defined for i >= 1");
    const auto n = static_cast<std::uint32_t>(std::countr_zero(i)) + 1;
    FlipMask fm;
    fm.n = n;
    fm.delta = (i - 1) ^ i;
    return fm;  // delta == 2^n - 1 by construction of n
}

static bool top_bits_all_one(BitWord x, std::uint32_t i) {
    for (std::uint32_t k = 0; k < i; ++k) {
        if (!x.bit(x.width - 1 - k)) return false;
    }
    return true;
}

std::uint32_t mloc(BitWord x) {
    std::uint64_t gamma = 0;
    for (std::uint64_t i = 1; i <= x.width; ++i) {
        if (top_bits_all_one(x, static_cast<std::uint32_t>(i))) {
            gamma ^= (i - 1) ^ i;
        }
    }
    return static_cast<std::uint32_t>(gamma);
}

std::uint32_t mloc_traced(BitWord x, std::vector<std::pair<std::uint64_t, std::uint64_t>>& fired) {
    std::uint64_t gamma = 0;
    for (std::uint64_t i = 1; i <= x.width; ++i) {
        if (top_bits_all_one(x, static_cast<std::uint32_t>(i))) {
            const std::uint64_t delta = (i - 1) ^ i;
            fired.emplace_back(i, delta);
            gamma ^= delta;
        }
    }
    return static_cast<std::uint32_t>(gamma);
}

std::uint32_t merge_reference(std::uint32_t gamma_h, std::uint32_t gamma_l, std::uint32_t m) {
    if (m == 0 || !std::has_single_bit(m)) throw DomainError("half width must be a power of two");
    if (gamma_h > m || gamma_l > m) throw DomainError("count out of range [0, m]");
    return gamma_h == m ? gamma_h + gamma_l : gamma_h;
}

}  // namespace qlzoc
