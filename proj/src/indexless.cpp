#include "flashcodes/indexless.hpp"

#include <sstream>

#include "flashcodes/traceio.hpp"

namespace flashcodes::indexless {

namespace {

void check_shape(const IndexlessConfig& cfg, const CellVector& x) {
    if (x.q != cfg.q || x.n() != cfg.n) throw ContractError("index-less: state does not match config");
}

std::span<int> block_span(CellVector& x, const IndexlessConfig& cfg, int b) {
    return std::span<int>(x.levels).subspan(static_cast<std::size_t>(b) * cfg.internal_k,
                                            cfg.internal_k);
}

std::span<const int> block_span(const CellVector& x, const IndexlessConfig& cfg, int b) {
    return std::span<const int>(x.levels).subspan(static_cast<std::size_t>(b) * cfg.internal_k,
                                                  cfg.internal_k);
}

int block_parity(std::span<const int> block) {
    long long sum = 0;
    for (int v : block) sum += v;
    return static_cast<int>(sum & 1);
}

// Start of the single cyclic run of zero cells, or -1 when the block has no
// zeros. Throws when the zeros do not form one contiguous cyclic run, which
// no reachable block exhibits.
int zero_run_start(std::span<const int> block) {
    int k = static_cast<int>(block.size());
    int zeros = 0;
    for (int v : block) zeros += (v == 0);
    if (zeros == 0) return -1;
    if (zeros == k) throw ContractError("index-less: empty block has no index");
    int start = -1;
    for (int j = 0; j < k; ++j) {
        if (block[j] == 0 && block[(j + k - 1) % k] != 0) {
            if (start != -1) throw ContractError("index-less: zero cells form more than one run");
            start = j;
        }
    }
    return start;
}

int lone_open_cell(std::span<const int> block, int q) {
    int pos = -1;
    for (int j = 0; j < static_cast<int>(block.size()); ++j) {
        if (block[j] < q - 1) {
            if (pos != -1) throw ContractError("index-less: several open cells but no zero cells");
            pos = j;
        }
    }
    return pos;
}

}  // namespace

IndexlessConfig::IndexlessConfig(int n_, int k_, int q_) : n(n_), k(k_), q(q_) {
    if (k < 1) throw ContractError("index-less: k must be positive");
    if (q < 2) throw ContractError("index-less: q must be at least 2");
    if (q > kMaxLevels) throw ContractError("index-less: q exceeds the 2^16 limit");
    // A full block must have even weight so its bit reads as zero; pad with a
    // permanently-zero bit when k(q-1) would be odd.
    internal_k = (k % 2 == 1 && q % 2 == 0) ? k + 1 : k;
    block_count = n / internal_k;
    if (block_count < internal_k) {
        throw ContractError("index-less: needs at least k blocks of k cells (n >= " +
                            std::to_string(internal_k * internal_k) + ")");
    }
}

BlockStatus block_status(std::span<const int> block, int q) {
    bool any_open = false;
    bool any_set = false;
    for (int v : block) {
        if (v < q - 1) any_open = true;
        if (v > 0) any_set = true;
    }
    if (!any_open) return BlockStatus::full;
    if (!any_set) return BlockStatus::empty;
    return BlockStatus::active;
}

int read_index(std::span<const int> block, int q) {
    int k = static_cast<int>(block.size());
    switch (block_status(block, q)) {
        case BlockStatus::full:
            throw ContractError("index-less: full block has no index");
        case BlockStatus::empty:
            throw ContractError("index-less: empty block has no index");
        case BlockStatus::active:
            break;
    }
    int start = zero_run_start(block);
    if (start == -1) {
        return (lone_open_cell(block, q) + 1) % k;
    }
    int run = 0;
    while (block[(start + run) % k] == 0) ++run;
    return (start + run) % k;
}

void block_write(std::span<int> block, int q) {
    int k = static_cast<int>(block.size());
    if (block_status(block, q) == BlockStatus::full) {
        throw ContractError("index-less: cannot write a full block");
    }
    int start = zero_run_start(block);
    if (start == -1) {
        block[lone_open_cell(block, q)] += 1;
        return;
    }
    int before = (start + k - 1) % k;
    if (block[before] < q - 1) {
        block[before] += 1;
    } else {
        block[start] = 1;
    }
}

void block_write_new(int i, std::span<int> block, int q) {
    if (block_status(block, q) != BlockStatus::empty) {
        throw ContractError("index-less: block_write_new needs an empty block");
    }
    if (i < 0 || i >= static_cast<int>(block.size())) {
        throw ContractError("index-less: bit index out of range");
    }
    (void)q;
    block[i] = 1;
}

InfoVector decode(const IndexlessConfig& cfg, const CellVector& x) {
    check_shape(cfg, x);
    InfoVector bits(cfg.internal_k, 0);
    for (int b = 0; b < cfg.block_count; ++b) {
        auto block = block_span(x, cfg, b);
        if (block_status(block, cfg.q) != BlockStatus::active) continue;
        bits[read_index(block, cfg.q)] = block_parity(block);
    }
    bits.resize(cfg.k);
    return bits;
}

WriteOutcome encode(const IndexlessConfig& cfg, const CellVector& x, int bit) {
    check_shape(cfg, x);
    if (bit < 0 || bit >= cfg.k) throw ContractError("index-less: bit index out of range");

    CellVector y = x;
    for (int b = 0; b < cfg.block_count; ++b) {
        auto block = block_span(y, cfg, b);
        if (block_status(block, cfg.q) == BlockStatus::active && read_index(block, cfg.q) == bit) {
            block_write(block, cfg.q);
            return WriteOutcome::next(std::move(y));
        }
    }
    for (int b = 0; b < cfg.block_count; ++b) {
        auto block = block_span(y, cfg, b);
        if (block_status(block, cfg.q) == BlockStatus::empty) {
            block_write_new(bit, block, cfg.q);
            return WriteOutcome::next(std::move(y));
        }
    }
    return WriteOutcome::erase();
}

long long deficiency_bound(long long k, long long q) {
    if (k < 1 || q < 2) throw ContractError("deficiency_bound: needs k >= 1 and q >= 2");
    return (k - 1) * ((k + 1) * (q - 1) - 1);
}

std::string serialize(const IndexlessConfig& cfg, const CellVector& x) {
    check_shape(cfg, x);
    std::ostringstream out;
    out << "scheme=indexless n=" << cfg.n << " k=" << cfg.k << " q=" << cfg.q << '\n'
        << to_text(x) << '\n';
    return out.str();
}

std::pair<IndexlessConfig, CellVector> parse(const std::string& text) {
    std::istringstream in(text);
    std::string header, cells;
    if (!std::getline(in, header) || !std::getline(in, cells)) {
        throw ContractError("index-less state: expected a header line and a cell line");
    }
    auto kv = traceio::parse_kv_line(header);
    if (traceio::kv_str(kv, "scheme") != "indexless") throw ContractError("not an index-less state");
    IndexlessConfig cfg(static_cast<int>(traceio::kv_int(kv, "n")),
                        static_cast<int>(traceio::kv_int(kv, "k")),
                        static_cast<int>(traceio::kv_int(kv, "q")));
    CellVector x = cell_vector_from_text(cells);
    check_shape(cfg, x);
    return {cfg, std::move(x)};
}

}  // namespace flashcodes::indexless
