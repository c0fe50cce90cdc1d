#ifndef VNUM_BITS_HPP
#define VNUM_BITS_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vnum {

// A subset of the vertex set [n], n <= 64, one bit per vertex.
using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask full_mask(int n) {
    return n == 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
}

inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

// Lowest set bit index; undefined for m == 0.
inline int lowest_bit(Mask m) { return std::countr_zero(m); }

// Visits every submask of m (including 0 and m itself).
template <typename F>
void for_each_submask(Mask m, F&& f) {
    Mask s = m;
    while (true) {
        f(s);
        if (s == 0) break;
        s = (s - 1) & m;
    }
}

inline std::vector<int> mask_bits(Mask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(lowest_bit(m));
        m &= m - 1;
    }
    return out;
}

inline Mask mask_of_bits(const std::vector<int>& bits) {
    Mask m = 0;
    for (int b : bits) m |= Mask{1} << b;
    return m;
}

// Thrown when an operation would exceed one of the explicit size caps.
// Callers can distinguish a refused computation from a malformed input.
class guard_error : public std::runtime_error {
public:
    guard_error(const std::string& cap, std::size_t limit, std::size_t actual)
        : std::runtime_error("resource guard '" + cap + "' exceeded: limit " +
                             std::to_string(limit) + ", input size " +
                             std::to_string(actual)),
          cap_(cap), limit_(limit), actual_(actual) {}

    const std::string& cap() const { return cap_; }
    std::size_t limit() const { return limit_; }
    std::size_t actual() const { return actual_; }

private:
    std::string cap_;
    std::size_t limit_;
    std::size_t actual_;
};

inline void check_guard(const std::string& cap, std::size_t limit, std::size_t actual) {
    if (actual > limit) throw guard_error(cap, limit, actual);
}

}  // namespace vnum

#endif
