#pragma once

#include <string>
#include <utility>
#include <vector>

#include "flashcodes/core.hpp"

namespace flashcodes::staged {

// How the per-stage bookkeeping blocks store their values.
//   per_stage:      each stage's batch gets its own cells, values in base q.
//   stacked_binary: batches share cell groups, one binary layer per batch.
enum class IndexVariant { per_stage, stacked_binary };

// k bits in a parity region of m*k cells plus an index region that lets later
// stages re-partition the parity region into ever smaller blocks. Stage r
// uses parity blocks of k/2^r cells, paired positionally with the live index
// blocks of batch r.
struct StagedConfig {
    int n = 0;  // total cells: parity region then index region
    int k = 2;
    int q = 2;
    IndexVariant variant = IndexVariant::per_stage;

    int internal_k = 2;    // k rounded up to a power of two; extra bits frozen 0
    int stages = 1;        // s = log2(internal_k); stage indices run 0..s-1
    int digits = 1;        // cells per index block
    int batch_blocks = 0;  // index blocks per batch: 2(internal_k - 1)
    int index_cells = 0;   // total index-region size
    int parity_cells = 0;  // n - index_cells
    int block_count = 0;   // m = floor(parity_cells / internal_k)

    StagedConfig(int n_, int k_, int q_, IndexVariant variant_);

    // Smallest legal n for these parameters (k^2 parity cells + index region).
    static int minimum_cells(int k, int q, IndexVariant variant);
};

struct StagedState {
    CellVector parity;
    std::vector<int> index;  // raw levels; empty when the config has no stages past 0

    bool operator==(const StagedState&) const = default;
};

using StagedOutcome = WriteResult<StagedState>;

StagedState initial_state(const StagedConfig& cfg);

// Largest r whose index batch has been written; 0 on fresh memory.
int current_stage(const StagedConfig& cfg, const StagedState& st);

InfoVector decode(const StagedConfig& cfg, const StagedState& st);
StagedOutcome encode(const StagedConfig& cfg, const StagedState& st, int bit);

// Stage plumbing, exposed for direct testing. `info` carries internal_k bits.
bool transition(const StagedConfig& cfg, StagedState& st, int r, const InfoVector& info);
InfoVector decode_stage(const StagedConfig& cfg, const StagedState& st, int r);
StagedOutcome encode_stage(const StagedConfig& cfg, const StagedState& st, int r, int bit);

// Live (non-full) parity and index block counts for stage r >= 1.
std::pair<int, int> live_counts(const StagedConfig& cfg, const StagedState& st, int r);

// Closed-form deficiency ceilings for the two variants; s = ceil(log2 k).
long long bound_per_stage(long long k, long long q);
long long bound_stacked(long long k, long long q);

std::string serialize(const StagedConfig& cfg, const StagedState& st);
std::pair<StagedConfig, StagedState> parse(const std::string& text);

const char* variant_name(IndexVariant v);
IndexVariant variant_from_name(const std::string& name);

}  // namespace flashcodes::staged
