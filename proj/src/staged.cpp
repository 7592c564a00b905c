#include "flashcodes/staged.hpp"

#include <algorithm>
#include <sstream>

#include "flashcodes/indexless.hpp"
#include "flashcodes/traceio.hpp"
#include "intmath.hpp"

namespace flashcodes::staged {

namespace {

void check_shape(const StagedConfig& cfg, const StagedState& st) {
    if (st.parity.q != cfg.q || st.parity.n() != cfg.parity_cells ||
        static_cast<int>(st.index.size()) != cfg.index_cells) {
        throw ContractError("staged: state does not match config");
    }
}

int layer_of(const StagedConfig& cfg, int r) {
    return cfg.variant == IndexVariant::stacked_binary ? (r - 1) % (cfg.q - 1) : 0;
}

int group_of(const StagedConfig& cfg, int r) {
    return cfg.variant == IndexVariant::stacked_binary ? (r - 1) / (cfg.q - 1) : r - 1;
}

// First index-region cell of batch r (batches of a stacked group share cells).
int batch_base(const StagedConfig& cfg, int r) {
    return group_of(cfg, r) * cfg.batch_blocks * cfg.digits;
}

long long all_max_value(const StagedConfig& cfg) {
    long long radix = cfg.variant == IndexVariant::per_stage ? cfg.q : 2;
    return intmath::ipow(radix, cfg.digits) - 1;
}

long long read_index_value(const StagedConfig& cfg, const StagedState& st, int r, int b) {
    int base = batch_base(cfg, r) + b * cfg.digits;
    int layer = layer_of(cfg, r);
    long long radix = cfg.variant == IndexVariant::per_stage ? cfg.q : 2;
    long long value = 0;
    long long place = 1;
    for (int d = 0; d < cfg.digits; ++d) {
        long long digit = st.index[base + d] - layer;
        if (digit < 0 || digit >= radix) {
            throw CorruptionError("staged: index cell outside its batch's levels");
        }
        value += digit * place;
        place *= radix;
    }
    return value;
}

void write_index_value(const StagedConfig& cfg, StagedState& st, int r, int b, long long value) {
    int base = batch_base(cfg, r) + b * cfg.digits;
    int layer = layer_of(cfg, r);
    long long radix = cfg.variant == IndexVariant::per_stage ? cfg.q : 2;
    for (int d = 0; d < cfg.digits; ++d) {
        int level = layer + static_cast<int>(value % radix);
        if (level < st.index[base + d]) {
            throw ContractError("staged: index write would lower a cell");
        }
        st.index[base + d] = level;
        value /= radix;
    }
}

int parity_block_size(const StagedConfig& cfg, int r) {
    return cfg.internal_k >> r;
}

int parity_block_count(const StagedConfig& cfg, int r) {
    return cfg.block_count << r;
}

std::span<const int> parity_block(const StagedConfig& cfg, const StagedState& st, int r, int j) {
    int size = parity_block_size(cfg, r);
    return std::span<const int>(st.parity.levels).subspan(static_cast<std::size_t>(j) * size, size);
}

std::span<int> parity_block(const StagedConfig& cfg, StagedState& st, int r, int j) {
    int size = parity_block_size(cfg, r);
    return std::span<int>(st.parity.levels).subspan(static_cast<std::size_t>(j) * size, size);
}

bool block_full(std::span<const int> block, int q) {
    return std::all_of(block.begin(), block.end(), [q](int v) { return v == q - 1; });
}

int block_parity(std::span<const int> block) {
    long long sum = 0;
    for (int v : block) sum += v;
    return static_cast<int>(sum & 1);
}

void block_increment(std::span<int> block, int q) {
    for (int& v : block) {
        if (v < q - 1) {
            ++v;
            return;
        }
    }
    throw ContractError("staged: cannot increment a full parity block");
}

// Positionally matched (parity block, index block) pairs that are both still
// writable in stage r.
struct LivePair {
    int parity_block;
    int index_block;
    long long value;
};

std::vector<LivePair> live_pairs(const StagedConfig& cfg, const StagedState& st, int r) {
    long long all_max = all_max_value(cfg);
    std::vector<int> live_parity;
    for (int j = 0; j < parity_block_count(cfg, r); ++j) {
        if (!block_full(parity_block(cfg, st, r, j), cfg.q)) live_parity.push_back(j);
    }
    std::vector<LivePair> pairs;
    int pi = 0;
    for (int b = 0; b < cfg.batch_blocks; ++b) {
        long long value = read_index_value(cfg, st, r, b);
        if (value == all_max) continue;
        if (pi >= static_cast<int>(live_parity.size())) {
            throw CorruptionError("staged: more live index blocks than live parity blocks");
        }
        pairs.push_back({live_parity[pi], b, value});
        ++pi;
    }
    if (pi != static_cast<int>(live_parity.size())) {
        throw CorruptionError("staged: more live parity blocks than live index blocks");
    }
    return pairs;
}

indexless::IndexlessConfig stage0_config(const StagedConfig& cfg) {
    return indexless::IndexlessConfig(cfg.parity_cells, cfg.internal_k, cfg.q);
}

bool batch_written(const StagedConfig& cfg, const StagedState& st, int r) {
    int base = batch_base(cfg, r);
    int cells = cfg.batch_blocks * cfg.digits;
    int layer = layer_of(cfg, r);
    for (int c = base; c < base + cells; ++c) {
        if (st.index[c] > layer) return true;
    }
    return false;
}

}  // namespace

StagedConfig::StagedConfig(int n_, int k_, int q_, IndexVariant variant_)
    : n(n_), k(k_), q(q_), variant(variant_) {
    if (k < 2) throw ContractError("staged: k must be at least 2");
    if (q < 2) throw ContractError("staged: q must be at least 2");
    if (q > kMaxLevels) throw ContractError("staged: q exceeds the 2^16 limit");

    stages = intmath::ceil_log(2, k);
    internal_k = static_cast<int>(intmath::ipow(2, stages));
    batch_blocks = 2 * (internal_k - 1);
    if (variant == IndexVariant::per_stage) {
        digits = intmath::ceil_log(q, internal_k + 2);
        index_cells = (stages - 1) * batch_blocks * digits;
    } else {
        digits = intmath::ceil_log(2, internal_k + 2);
        int groups = static_cast<int>(intmath::ceil_div(stages - 1, q - 1));
        index_cells = groups * batch_blocks * digits;
    }
    parity_cells = n - index_cells;
    block_count = parity_cells > 0 ? parity_cells / internal_k : 0;
    if (block_count < internal_k) {
        throw ContractError("staged: n too small, minimum is " +
                            std::to_string(internal_k * internal_k + index_cells) +
                            " cells for these parameters");
    }
}

int StagedConfig::minimum_cells(int k, int q, IndexVariant variant) {
    StagedConfig probe(1 << 28, k, q, variant);
    return probe.internal_k * probe.internal_k + probe.index_cells;
}

StagedState initial_state(const StagedConfig& cfg) {
    return StagedState{CellVector::zeros(cfg.q, cfg.parity_cells),
                       std::vector<int>(cfg.index_cells, 0)};
}

int current_stage(const StagedConfig& cfg, const StagedState& st) {
    check_shape(cfg, st);
    for (int r = cfg.stages - 1; r >= 1; --r) {
        if (batch_written(cfg, st, r)) return r;
    }
    return 0;
}

InfoVector decode_stage(const StagedConfig& cfg, const StagedState& st, int r) {
    check_shape(cfg, st);
    if (r == 0) {
        InfoVector bits = indexless::decode(stage0_config(cfg), st.parity);
        bits.resize(cfg.internal_k, 0);
        return bits;
    }
    if (r < 1 || r >= cfg.stages) throw ContractError("staged: stage out of range");
    InfoVector bits(cfg.internal_k, 0);
    for (const LivePair& p : live_pairs(cfg, st, r)) {
        if (p.value == 0) continue;
        if (p.value > cfg.internal_k) throw CorruptionError("staged: index value out of range");
        bits[p.value - 1] = block_parity(parity_block(cfg, st, r, p.parity_block));
    }
    return bits;
}

InfoVector decode(const StagedConfig& cfg, const StagedState& st) {
    InfoVector bits = decode_stage(cfg, st, current_stage(cfg, st));
    bits.resize(cfg.k);
    return bits;
}

StagedOutcome encode_stage(const StagedConfig& cfg, const StagedState& st, int r, int bit) {
    check_shape(cfg, st);
    if (r == 0) {
        WriteOutcome out = indexless::encode(stage0_config(cfg), st.parity, bit);
        if (out.erased()) return StagedOutcome::erase();
        return StagedOutcome::next(StagedState{out.state(), st.index});
    }
    if (r < 1 || r >= cfg.stages) throw ContractError("staged: stage out of range");

    auto pairs = live_pairs(cfg, st, r);
    // First a live pair already assigned to this bit.
    for (const LivePair& p : pairs) {
        if (p.value != bit + 1) continue;
        StagedState y = st;
        auto block = parity_block(cfg, y, r, p.parity_block);
        block_increment(block, cfg.q);
        if (block_full(block, cfg.q)) {
            write_index_value(cfg, y, r, p.index_block, all_max_value(cfg));
        }
        return StagedOutcome::next(std::move(y));
    }
    // Then the first unassigned pair. The bit currently reads 0, so the new
    // value is 1 and the parity block is brought to odd weight.
    for (const LivePair& p : pairs) {
        if (p.value != 0) continue;
        StagedState y = st;
        write_index_value(cfg, y, r, p.index_block, bit + 1);
        auto block = parity_block(cfg, y, r, p.parity_block);
        if (block_parity(block) != 1) {
            block_increment(block, cfg.q);
            if (block_full(block, cfg.q)) {
                write_index_value(cfg, y, r, p.index_block, all_max_value(cfg));
            }
        }
        return StagedOutcome::next(std::move(y));
    }
    return StagedOutcome::erase();
}

bool transition(const StagedConfig& cfg, StagedState& st, int r, const InfoVector& info) {
    check_shape(cfg, st);
    if (r < 1 || r >= cfg.stages) throw ContractError("staged: transition stage out of range");
    if (static_cast<int>(info.size()) != cfg.internal_k) {
        throw ContractError("staged: transition needs internal_k info bits");
    }

    // Retire the previous batch: its whole cell group moves to the layer
    // ceiling so the next batch (when stacked in the same group) starts from
    // a clean base.
    if (cfg.variant == IndexVariant::stacked_binary && r >= 2) {
        int ceiling = layer_of(cfg, r - 1) + 1;
        int base = batch_base(cfg, r - 1);
        int cells = cfg.batch_blocks * cfg.digits;
        for (int c = base; c < base + cells; ++c) {
            st.index[c] = std::max(st.index[c], ceiling);
        }
    }

    std::vector<int> live;
    for (int j = 0; j < parity_block_count(cfg, r); ++j) {
        if (!block_full(parity_block(cfg, st, r, j), cfg.q)) live.push_back(j);
    }
    if (static_cast<int>(live.size()) > cfg.batch_blocks) {
        throw CorruptionError("staged: more live parity blocks than the batch can index");
    }
    if (static_cast<int>(live.size()) < cfg.internal_k) return false;

    for (int b = 0; b < cfg.batch_blocks; ++b) {
        long long value;
        if (b < cfg.internal_k) {
            value = b + 1;
        } else if (b < static_cast<int>(live.size())) {
            value = 0;
        } else {
            value = all_max_value(cfg);
        }
        write_index_value(cfg, st, r, b, value);
    }
    // Carry the stored bits over: force the parity of the k indexed blocks.
    for (int i = 0; i < cfg.internal_k; ++i) {
        auto block = parity_block(cfg, st, r, live[i]);
        if (block_parity(block) != info[i]) {
            block_increment(block, cfg.q);
            if (block_full(block, cfg.q)) {
                write_index_value(cfg, st, r, i, all_max_value(cfg));
            }
        }
    }
    return true;
}

StagedOutcome encode(const StagedConfig& cfg, const StagedState& st, int bit) {
    check_shape(cfg, st);
    if (bit < 0 || bit >= cfg.k) throw ContractError("staged: bit index out of range");

    int r0 = current_stage(cfg, st);
    InfoVector info = decode_stage(cfg, st, r0);
    StagedOutcome attempt = encode_stage(cfg, st, r0, bit);
    if (!attempt.erased()) return attempt;

    StagedState work = st;
    for (int r = r0 + 1; r < cfg.stages; ++r) {
        if (!transition(cfg, work, r, info)) return StagedOutcome::erase();
        attempt = encode_stage(cfg, work, r, bit);
        if (!attempt.erased()) return attempt;
    }
    return StagedOutcome::erase();
}

std::pair<int, int> live_counts(const StagedConfig& cfg, const StagedState& st, int r) {
    check_shape(cfg, st);
    if (r < 1 || r >= cfg.stages) throw ContractError("staged: stage out of range");
    int live_parity = 0;
    for (int j = 0; j < parity_block_count(cfg, r); ++j) {
        if (!block_full(parity_block(cfg, st, r, j), cfg.q)) ++live_parity;
    }
    int live_index = 0;
    long long all_max = all_max_value(cfg);
    for (int b = 0; b < cfg.batch_blocks; ++b) {
        if (read_index_value(cfg, st, r, b) != all_max) ++live_index;
    }
    return {live_parity, live_index};
}

long long bound_per_stage(long long k, long long q) {
    if (k < 1 || q < 2) throw ContractError("bound_per_stage: needs k >= 1 and q >= 2");
    long long s = intmath::ceil_log(2, k);
    long long sm1 = std::max<long long>(s - 1, 0);
    long long mu = intmath::ceil_log(q, k + 2);
    return (q - 1) * (k - 1) * (2 * sm1 * mu + 3) + k * sm1;
}

long long bound_stacked(long long k, long long q) {
    if (k < 1 || q < 2) throw ContractError("bound_stacked: needs k >= 1 and q >= 2");
    long long s = intmath::ceil_log(2, k);
    long long sm1 = std::max<long long>(s - 1, 0);
    long long mu2 = intmath::ceil_log(2, k + 2);
    long long groups = intmath::ceil_div(sm1, q - 1);
    return 2 * (q - 1) * (k - 1) * groups * mu2 + 3 * (q - 1) * (k - 1) + k * sm1;
}

std::string serialize(const StagedConfig& cfg, const StagedState& st) {
    check_shape(cfg, st);
    std::ostringstream out;
    out << "scheme=staged variant=" << variant_name(cfg.variant) << " n=" << cfg.n
        << " k=" << cfg.k << " q=" << cfg.q << '\n'
        << to_text(st.parity) << '\n'
        << levels_line(cfg.q, st.index) << '\n';
    return out.str();
}

std::pair<StagedConfig, StagedState> parse(const std::string& text) {
    std::istringstream in(text);
    std::string header, parity_line, index_line;
    if (!std::getline(in, header) || !std::getline(in, parity_line) ||
        !std::getline(in, index_line)) {
        throw ContractError("staged state: expected a header line and two cell lines");
    }
    auto kv = traceio::parse_kv_line(header);
    if (traceio::kv_str(kv, "scheme") != "staged") throw ContractError("not a staged state");
    StagedConfig cfg(static_cast<int>(traceio::kv_int(kv, "n")),
                     static_cast<int>(traceio::kv_int(kv, "k")),
                     static_cast<int>(traceio::kv_int(kv, "q")),
                     variant_from_name(traceio::kv_str(kv, "variant")));
    StagedState st{cell_vector_from_text(parity_line), parse_levels_line(index_line).second};
    check_shape(cfg, st);
    return {cfg, std::move(st)};
}

const char* variant_name(IndexVariant v) {
    return v == IndexVariant::per_stage ? "per-stage-index" : "stacked-binary";
}

IndexVariant variant_from_name(const std::string& name) {
    if (name == "per-stage-index") return IndexVariant::per_stage;
    if (name == "stacked-binary") return IndexVariant::stacked_binary;
    throw ContractError("staged: unknown index variant '" + name + "'");
}

}  // namespace flashcodes::staged
