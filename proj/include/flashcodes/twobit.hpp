#pragma once

#include <optional>
#include <string>

#include "flashcodes/core.hpp"

namespace flashcodes::twobit {

// Two bits in n cells of q levels. Bits are written one at a time; writing
// bit j (j in {1,2}) flips its value.
struct TwoBitConfig {
    int n = 2;
    int q = 3;

    TwoBitConfig(int n_, int q_);
    bool odd_q() const { return q % 2 == 1; }
};

// Position of the leftmost / rightmost cell below q-1, if any.
std::optional<int> frontier_left(const CellVector& x);
std::optional<int> frontier_right(const CellVector& x);

InfoVector decode(const TwoBitConfig& cfg, const CellVector& x);

// One write of bit j in {1, 2}. Erase when the required level increase is
// not available.
WriteOutcome encode(const TwoBitConfig& cfg, const CellVector& x, int j);

// (n-1)(q-1) + floor((q-1)/2); only established for odd q, throws otherwise.
long long guaranteed_writes(long long n, long long q);

std::string serialize(const TwoBitConfig& cfg, const CellVector& x);
std::pair<TwoBitConfig, CellVector> parse(const std::string& text);

}  // namespace flashcodes::twobit
