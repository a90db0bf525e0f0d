#pragma once

#include <cstdint>
#include <random>

namespace aec {

// Seeded generator for corpus construction.  mt19937_64 output is fixed
// by the standard, and the modulo draw below avoids the
// implementation-defined std::uniform_int_distribution, so a given
// (n, seed) reproduces the same artifact everywhere.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // uniform-ish draw in [0, k); k >= 1
    int below(int k) { return k <= 1 ? 0 : static_cast<int>(next() % k); }

private:
    std::mt19937_64 eng_;
};

}  // namespace aec
