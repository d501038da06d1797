#include "qlzoc/fixtures.hpp"

namespace qlzoc {

const std::vector<PublishedVector>& lzc_vectors() {
    static const std::vector<PublishedVector> v = {
        {11, 0, 11},        {13, 1, 12},       {16, 291, 7},    {20, 241, 12},
        {24, 42480, 8},     {28, 8388608, 4},  {32, 15790320, 8},
    };
    return v;
}

const std::vector<PublishedVector>& loc_vectors() {
    static const std::vector<PublishedVector> v = {
        {11, 2047, 11},     {13, 8190, 12},      {16, 65475, 10},  {20, 1044241, 7},
        {24, 16711680, 8},  {28, 259522560, 4},  {32, 4043309040, 4},
    };
    return v;
}

const std::vector<DesignId>& lzc_vector_designs() {
    static const std::vector<DesignId> d = {
        DesignId::TaOpQlzc,
        DesignId::TaOpPqlzc,
        DesignId::FoTaOpPqlzc,
        DesignId::ReconfigurableQlzoc,
    };
    return d;
}

const std::vector<DesignId>& loc_vector_designs() {
    static const std::vector<DesignId> d = {
        DesignId::TaOpQloc,
        DesignId::TaOpPqloc,
        DesignId::FoTaOpPqloc,
        DesignId::ReconfigurableQlzoc,
    };
    return d;
}

}  // namespace qlzoc
