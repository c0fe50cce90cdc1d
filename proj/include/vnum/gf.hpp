#ifndef VNUM_GF_HPP
#define VNUM_GF_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "vnum/bits.hpp"

namespace vnum {

struct PrimeField {
    std::uint32_t p = 2;

    explicit PrimeField(std::uint32_t prime = 2) : p(prime) {
        if (p < 2 || p >= (1u << 31)) throw std::invalid_argument("field characteristic out of range");
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw std::invalid_argument("field characteristic must be prime");
    }

    bool operator==(const PrimeField& o) const { return p == o.p; }
};

namespace gf {

inline std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) { return pow_mod(a, p - 2, p); }

// Row-reduction rank over GF(p), p odd. Rows are dense.
inline int rank_dense(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p) {
    const std::size_t nrows = rows.size();
    if (nrows == 0) return 0;
    const std::size_t ncols = rows[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t pivot = row;
        while (pivot < nrows && rows[pivot][col] == 0) ++pivot;
        if (pivot == nrows) continue;
        std::swap(rows[pivot], rows[row]);
        const std::uint64_t inv = inv_mod(rows[row][col], p);
        for (std::size_t j = col; j < ncols; ++j)
            rows[row][j] = static_cast<std::uint32_t>(rows[row][j] * inv % p);
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == row || rows[i][col] == 0) continue;
            const std::uint64_t c = p - rows[i][col];
            for (std::size_t j = col; j < ncols; ++j)
                rows[i][j] = static_cast<std::uint32_t>((rows[i][j] + c * rows[row][j]) % p);
        }
        ++row;
        ++rank;
    }
    return rank;
}

// Rank over GF(2) with 64 columns per word.
inline int rank_packed2(std::vector<std::vector<std::uint64_t>> rows, std::size_t ncols) {
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < rows.size(); ++col) {
        const std::size_t w = col >> 6;
        const std::uint64_t bit = std::uint64_t{1} << (col & 63);
        std::size_t pivot = row;
        while (pivot < rows.size() && !(rows[pivot][w] & bit)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[row]);
        for (std::size_t i = row + 1; i < rows.size(); ++i)
            if (rows[i][w] & bit)
                for (std::size_t k = w; k < rows[i].size(); ++k) rows[i][k] ^= rows[row][k];
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace gf
}  // namespace vnum

#endif
