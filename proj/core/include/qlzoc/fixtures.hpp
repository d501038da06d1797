#pragma once

#include <cstdint>
#include <vector>

#include "qlzoc/generate.hpp"

namespace qlzoc {

/// One published correctness vector: width, input word, expected count.
struct PublishedVector {
    std::uint32_t n;
    std::uint64_t x;
    std::uint32_t expected;
};

/// Leading-zero vectors (mode bit 1 for the reconfigurable design).
const std::vector<PublishedVector>& lzc_vectors();

/// Leading-one vectors (mode bit 0).
const std::vector<PublishedVector>& loc_vectors();

/// The four circuit families each vector table is checked against.
const std::vector<DesignId>& lzc_vector_designs();
const std::vector<DesignId>& loc_vector_designs();

}  // namespace qlzoc
