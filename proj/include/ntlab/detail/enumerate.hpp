#pragma once

#include <bit>
#include <string>

#include "ntlab/error.hpp"

namespace ntlab {

namespace detail {

inline void check_enumeration_budget(std::size_t k) {
    if (k > enumeration_limit)
        throw BudgetError("enumerating 2^" + std::to_string(k) + " codewords exceeds the budget of 2^" +
                          std::to_string(enumeration_limit));
}

} // namespace detail

template <class Visitor>
void for_each_codeword(const LinearCode& c, Visitor&& visit) {
    const std::size_t k = c.dimension();
    detail::check_enumeration_budget(k);
    BitVector word(c.length());
    visit(static_cast<const BitVector&>(word));
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t i = 1; i < total; ++i) {
        word ^= c.generator().row(static_cast<std::size_t>(std::countr_zero(i)));
        visit(static_cast<const BitVector&>(word));
    }
}

} // namespace ntlab
