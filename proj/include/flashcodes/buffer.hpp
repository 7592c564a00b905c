#pragma once

#include <optional>
#include <string>

#include "flashcodes/core.hpp"

namespace flashcodes::buffer {

// Sliding window of the last r input bits kept in n q-ary cells. The codec is
// defined for bit inputs (ell = 2) and n >= 2r; the single-cell bounds below
// also cover larger alphabets.
struct BufferConfig {
    int n = 0;
    int q = 2;
    int r = 1;
    int ell = 2;

    BufferConfig(int n_, int q_, int r_, int ell_ = 2);
};

using BufferOutcome = WriteResult<CellVector>;

CellVector initial_state(const BufferConfig& cfg);

// Window newest-first: result[0] is the most recent bit, result[r-1] the
// oldest. Missing history reads as zeros.
InfoVector decode(const BufferConfig& cfg, const CellVector& st);
BufferOutcome encode(const BufferConfig& cfg, const CellVector& st, int bit);

// (q-1)(n-r): writes guaranteed before any erase, adversary-independent.
long long guaranteed_writes(const BufferConfig& cfg);
// (q-1)(n-2r+1) + r - 1: what storing the window position-by-position gets.
long long baseline_writes(const BufferConfig& cfg);

long long euler_phi(long long n);
// Number of length-r cyclic sequences over an ell-letter alphabet, counting
// rotations as equal.
long long cycle_count(int ell, int r);

// Writes a single cell of q levels supports when one level is spent per
// distinct window cycle; requires q >= ell^r.
long long bound_single_cell_new(long long q, int ell, int r);
// Same storage when each window is kept verbatim in base ell.
long long bound_single_cell_old(long long q, int ell, int r);
// Earlier published guarantee for bit windows, for comparison.
long long prior_single_cell_writes(long long q, int r);

// "w=<idx> b=<bit|-> cells=<l1,...> buffer=<v1,...>" with the window printed
// oldest-first.
std::string trace_line(long long w, std::optional<int> bit, const CellVector& cells,
                       const InfoVector& window_newest_first);

std::string serialize(const BufferConfig& cfg, const CellVector& st);
std::pair<BufferConfig, CellVector> parse(const std::string& text);

}  // namespace flashcodes::buffer
