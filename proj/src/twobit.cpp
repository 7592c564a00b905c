#include "flashcodes/twobit.hpp"

#include <numeric>
#include <sstream>

#include "flashcodes/traceio.hpp"

namespace flashcodes::twobit {

namespace {

void check_shape(const TwoBitConfig& cfg, const CellVector& x) {
    if (x.q != cfg.q || x.n() != cfg.n) throw ContractError("two-bit: state does not match config");
}

int prefix_parity(const CellVector& x, int last) {
    long long sum = 0;
    for (int i = 0; i <= last; ++i) sum += x.levels[i];
    return static_cast<int>(sum & 1);
}

int suffix_parity(const CellVector& x, int first) {
    long long sum = 0;
    for (int i = first; i < x.n(); ++i) sum += x.levels[i];
    return static_cast<int>(sum & 1);
}

// Level residue mod 4 that makes the lone writable cell at `pos` decode to
// (v1, v2). For even q the cell's position enters the map.
int target_residue(const TwoBitConfig& cfg, int pos, int v1, int v2) {
    if (cfg.odd_q()) return v1 + 2 * v2;
    int low = (v1 + pos) % 2;
    int high = (v2 + cfg.n - 1 - pos) % 2;
    return low + 2 * high;
}

// Once one writable cell is left, its level may still grow up to this.
int level_ceiling(const TwoBitConfig& cfg) {
    // For even q the last cell must stay below q-1 so the decoder can still
    // locate it.
    return cfg.odd_q() ? cfg.q - 1 : cfg.q - 2;
}

WriteOutcome adjust_lone_cell(const TwoBitConfig& cfg, CellVector y, int pos, int v1, int v2) {
    int level = y.levels[pos];
    int a = ((target_residue(cfg, pos, v1, v2) - level) % 4 + 4) % 4;
    if (level + a > level_ceiling(cfg)) return WriteOutcome::erase();
    y.levels[pos] = level + a;
    return WriteOutcome::next(std::move(y));
}

}  // namespace

TwoBitConfig::TwoBitConfig(int n_, int q_) : n(n_), q(q_) {
    if (n < 2) throw ContractError("two-bit: n must be at least 2");
    if (q < 3) throw ContractError("two-bit: q must be at least 3");
    if (q > kMaxLevels) throw ContractError("two-bit: q exceeds the 2^16 limit");
}

std::optional<int> frontier_left(const CellVector& x) {
    for (int i = 0; i < x.n(); ++i) {
        if (x.levels[i] < x.q - 1) return i;
    }
    return std::nullopt;
}

std::optional<int> frontier_right(const CellVector& x) {
    for (int i = x.n() - 1; i >= 0; --i) {
        if (x.levels[i] < x.q - 1) return i;
    }
    return std::nullopt;
}

InfoVector decode(const TwoBitConfig& cfg, const CellVector& x) {
    check_shape(cfg, x);
    auto fl = frontier_left(x);
    auto fr = frontier_right(x);

    if (!fl) {
        // Every cell is full. Unreachable for even q (the scheme never fills
        // the last writable cell); kept total anyway.
        if (cfg.odd_q()) return {(cfg.q - 1) % 2, ((cfg.q - 1) % 4) / 2};
        return {parity(x), parity(x)};
    }
    if (*fl == *fr) {
        int y = x.levels[*fl];
        if (cfg.odd_q()) return {y % 2, (y % 4) / 2};
        return {(*fl + y) % 2, ((cfg.n - 1 - *fl) + (y % 4) / 2) % 2};
    }
    if (cfg.odd_q()) return {x.levels[*fl] % 2, x.levels[*fr] % 2};
    return {prefix_parity(x, *fl), suffix_parity(x, *fr)};
}

WriteOutcome encode(const TwoBitConfig& cfg, const CellVector& x, int j) {
    check_shape(cfg, x);
    if (j != 1 && j != 2) throw ContractError("two-bit: bit index must be 1 or 2");

    auto fl = frontier_left(x);
    auto fr = frontier_right(x);
    if (!fl) return WriteOutcome::erase();

    InfoVector target = decode(cfg, x);
    target[j - 1] ^= 1;

    if (*fl == *fr) return adjust_lone_cell(cfg, x, *fl, target[0], target[1]);

    // Two or more writable cells: bit 1 advances the left frontier, bit 2 the
    // right one.
    int pos = (j == 1) ? *fl : *fr;
    CellVector y = x;
    y.levels[pos] += 1;
    if (y.levels[pos] == cfg.q - 1 && *fr - *fl == 1) {
        // This write consumed one of the last two writable cells; the survivor
        // must now encode both bits in its level residue.
        int survivor = (j == 1) ? *fr : *fl;
        return adjust_lone_cell(cfg, std::move(y), survivor, target[0], target[1]);
    }
    return WriteOutcome::next(std::move(y));
}

long long guaranteed_writes(long long n, long long q) {
    if (n < 1) throw ContractError("two-bit guaranteed_writes: n must be positive");
    if (q < 3 || q % 2 == 0) {
        throw ContractError("two-bit guaranteed_writes: formula only established for odd q >= 3");
    }
    return (n - 1) * (q - 1) + (q - 1) / 2;
}

std::string serialize(const TwoBitConfig& cfg, const CellVector& x) {
    check_shape(cfg, x);
    std::ostringstream out;
    out << "scheme=twobit n=" << cfg.n << " q=" << cfg.q << '\n' << to_text(x) << '\n';
    return out.str();
}

std::pair<TwoBitConfig, CellVector> parse(const std::string& text) {
    std::istringstream in(text);
    std::string header, cells;
    if (!std::getline(in, header) || !std::getline(in, cells)) {
        throw ContractError("two-bit state: expected a header line and a cell line");
    }
    auto kv = traceio::parse_kv_line(header);
    if (traceio::kv_str(kv, "scheme") != "twobit") throw ContractError("not a two-bit state");
    TwoBitConfig cfg(static_cast<int>(traceio::kv_int(kv, "n")),
                     static_cast<int>(traceio::kv_int(kv, "q")));
    CellVector x = cell_vector_from_text(cells);
    check_shape(cfg, x);
    return {cfg, std::move(x)};
}

}  // namespace flashcodes::twobit
