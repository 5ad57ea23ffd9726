#pragma once
// Small codes built directly from textbook generator data.

#include <string>
#include <vector>

#include "ntlab/code.hpp"

namespace fixtures {

// Cyclic shifts of the generator polynomial 1 + x^2 + x^4 + x^5 + x^6 + x^10 + x^11.
inline ntlab::LinearCode golay23_cyclic() {
    const std::vector<std::size_t> g = {0, 2, 4, 5, 6, 10, 11};
    std::vector<ntlab::BitVector> rows;
    for (std::size_t s = 0; s < 12; ++s) {
        ntlab::BitVector v(23);
        for (auto e : g) v.set((e + s) % 23);
        rows.push_back(v);
    }
    return ntlab::LinearCode(23, ntlab::BitMatrix::from_rows(rows, 23));
}

inline ntlab::LinearCode from_strings(const std::vector<std::string>& rows) {
    return ntlab::LinearCode(ntlab::BitMatrix::from_strings(rows));
}

inline ntlab::LinearCode hamming7() { return from_strings({"1000110", "0100011", "0010111", "0001101"}); }

inline ntlab::LinearCode repetition(std::size_t m) {
    return ntlab::LinearCode(m, ntlab::BitMatrix::from_rows({ntlab::BitVector::ones(m)}, m));
}

inline ntlab::LinearCode even_weight(std::size_t m) { return repetition(m).dual(); }

// First-order Reed-Muller code: constants and coordinate functions on F2^t.
inline ntlab::LinearCode rm1(std::size_t t) {
    const std::size_t m = std::size_t{1} << t;
    std::vector<ntlab::BitVector> rows{ntlab::BitVector::ones(m)};
    for (std::size_t b = 0; b < t; ++b) {
        ntlab::BitVector v(m);
        for (std::size_t x = 0; x < m; ++x)
            if (x >> b & 1u) v.set(x);
        rows.push_back(v);
    }
    return ntlab::LinearCode(m, ntlab::BitMatrix::from_rows(rows, m));
}

inline std::vector<std::string> words_of(const ntlab::LinearCode& c) {
    std::vector<std::string> rows;
    for (const auto& r : c.generator().row_vectors()) rows.push_back(r.to_string());
    return rows;
}

} // namespace fixtures
