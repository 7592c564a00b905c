#include "flashcodes/constrate.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "flashcodes/traceio.hpp"
#include "intmath.hpp"

namespace flashcodes::constrate {

namespace {

int block_cell(const ConstRateConfig& cfg, int block, int digit) {
    return block * cfg.index_block_cells + digit;
}

// Maximum level over the m index blocks. Leftover index cells (when
// n-k is not a multiple of the block size) are never written and ignored.
int block_region_max(const ConstRateConfig& cfg, const ConstRateState& st) {
    int m = 0;
    for (int c = 0; c < cfg.block_count * cfg.index_block_cells; ++c)
        m = std::max(m, st.index_group.levels[c]);
    return m;
}

int block_max(const ConstRateConfig& cfg, const ConstRateState& st, int block) {
    int m = 0;
    for (int d = 0; d < cfg.index_block_cells; ++d)
        m = std::max(m, st.index_group.levels[block_cell(cfg, block, d)]);
    return m;
}

}  // namespace

ConstRateConfig::ConstRateConfig(int n_, int k_, int q_, Alphabet alphabet)
    : n(n_), k(k_), q(q_) {
    if (alphabet != Alphabet::binary)
        throw ContractError("constrate: only the binary alphabet is implemented");
    if (k < 1) throw ContractError("constrate: k must be at least 1");
    if (q < 2 || q > kMaxLevels) throw ContractError("constrate: q out of range");
    index_block_cells = intmath::ceil_log(2, k + 1);
    if (n <= k) throw ContractError("constrate: need more than k cells");
    block_count = (n - k) / index_block_cells;
    if (block_count < 1)
        throw ContractError("constrate: need at least " +
                            std::to_string(k + index_block_cells) + " cells for k=" +
                            std::to_string(k));
}

ConstRateState initial_state(const ConstRateConfig& cfg) {
    return {CellVector::zeros(cfg.q, cfg.n - cfg.k), CellVector::zeros(cfg.q, cfg.k)};
}

int current_phase(const ConstRateConfig& cfg, const ConstRateState& st) {
    return std::max(block_region_max(cfg, st), 1);
}

int used_blocks(const ConstRateConfig& cfg, const ConstRateState& st) {
    int p = current_phase(cfg, st);
    int used = 0;
    for (int b = 0; b < cfg.block_count; ++b)
        if (block_max(cfg, st, b) == p) ++used;
    return used;
}

long long writes_recorded(const ConstRateConfig& cfg, const ConstRateState& st) {
    return static_cast<long long>(current_phase(cfg, st) - 1) * cfg.block_count +
           used_blocks(cfg, st);
}

InfoVector decode(const ConstRateConfig& cfg, const ConstRateState& st) {
    if (st.index_group.q != cfg.q || st.index_group.n() != cfg.n - cfg.k ||
        st.parity_group.q != cfg.q || st.parity_group.n() != cfg.k)
        throw ContractError("constrate: state shape does not match config");
    for (int c = cfg.block_count * cfg.index_block_cells; c < cfg.n - cfg.k; ++c)
        if (st.index_group.levels[c] != 0)
            throw CorruptionError("constrate: unused index cell is nonzero");

    int p = block_region_max(cfg, st);
    InfoVector bits(cfg.k, 0);
    if (p == 0) {
        for (int j = 0; j < cfg.k; ++j)
            if (st.parity_group.levels[j] != 0)
                throw CorruptionError("constrate: parity cell written before any data");
        return bits;
    }

    // Bits at the start of phase p live in the parity snapshot, offset so the
    // cells stay monotone across phases. Phase 1 starts from all zeros.
    if (p >= 2) {
        for (int j = 0; j < cfg.k; ++j) {
            int v = st.parity_group.levels[j] - (p - 2);
            if (v != 0 && v != 1)
                throw CorruptionError("constrate: parity snapshot outside current phase");
            bits[j] = v;
        }
    } else {
        for (int j = 0; j < cfg.k; ++j)
            if (st.parity_group.levels[j] != 0)
                throw CorruptionError("constrate: parity cell written in first phase");
    }

    // Replay this phase's writes from the used prefix of index blocks.
    bool seen_unused = false;
    for (int b = 0; b < cfg.block_count; ++b) {
        int hi = block_max(cfg, st, b);
        if (hi < p) {
            seen_unused = true;
            continue;
        }
        if (seen_unused)
            throw CorruptionError("constrate: used index block after an unused one");
        int u = 0;
        for (int d = 0; d < cfg.index_block_cells; ++d) {
            int digit = st.index_group.levels[block_cell(cfg, b, d)] - (p - 1);
            if (digit != 0 && digit != 1)
                throw CorruptionError("constrate: index digit outside current phase");
            u += digit << d;
        }
        if (u < 1 || u > cfg.k)
            throw CorruptionError("constrate: stored bit index out of range");
        bits[u - 1] ^= 1;
    }
    return bits;
}

ConstRateOutcome encode(const ConstRateConfig& cfg, const ConstRateState& st, int bit) {
    if (bit < 0 || bit >= cfg.k) throw ContractError("constrate: bit index out of range");
    int p = current_phase(cfg, st);
    int used = used_blocks(cfg, st);
    ConstRateState y = st;

    if (used == cfg.block_count) {
        // Phase full: snapshot the current bits into the parity group, raise
        // every block cell to p, and record this write as the first of p+1.
        if (p == cfg.q - 1) return ConstRateOutcome::erase();
        // Snapshot the bits as they stand; the pending write itself lands in
        // the new phase's first index block and is replayed from there.
        InfoVector bits = decode(cfg, st);
        for (int j = 0; j < cfg.k; ++j)
            y.parity_group.levels[j] = (p - 1) + bits[j];
        for (int c = 0; c < cfg.block_count * cfg.index_block_cells; ++c)
            y.index_group.levels[c] = p;
        ++p;
        used = 0;
    }

    int u = bit + 1;  // one-based so a written block is never all zero digits
    for (int d = 0; d < cfg.index_block_cells; ++d)
        y.index_group.levels[block_cell(cfg, used, d)] = (p - 1) + ((u >> d) & 1);
    return ConstRateOutcome::next(std::move(y));
}

long long guaranteed_writes(const ConstRateConfig& cfg) {
    return static_cast<long long>(cfg.block_count) * (cfg.q - 1);
}

std::string serialize(const ConstRateConfig& cfg, const ConstRateState& st) {
    std::ostringstream out;
    out << "scheme=constrate n=" << cfg.n << " k=" << cfg.k << " q=" << cfg.q << '\n';
    out << to_text(st.index_group) << '\n';
    out << to_text(st.parity_group) << '\n';
    return out.str();
}

std::pair<ConstRateConfig, ConstRateState> parse(const std::string& text) {
    std::istringstream in(text);
    std::string header, index_line, parity_line;
    if (!std::getline(in, header) || !std::getline(in, index_line) ||
        !std::getline(in, parity_line))
        throw ContractError("constrate: expected header and two cell lines");
    auto kv = traceio::parse_kv_line(header);
    if (traceio::kv_str(kv, "scheme") != "constrate")
        throw ContractError("constrate: wrong scheme in header");
    ConstRateConfig cfg(traceio::kv_int(kv, "n"), traceio::kv_int(kv, "k"), traceio::kv_int(kv, "q"));
    ConstRateState st{cell_vector_from_text(index_line), cell_vector_from_text(parity_line)};
    if (st.index_group.q != cfg.q || st.index_group.n() != cfg.n - cfg.k ||
        st.parity_group.q != cfg.q || st.parity_group.n() != cfg.k)
        throw ContractError("constrate: cell lines do not match header");
    return {cfg, st};
}

}  // namespace flashcodes::constrate
