#include "flashcodes/buffer.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "flashcodes/traceio.hpp"
#include "intmath.hpp"

namespace flashcodes::buffer {

namespace {

int max_level(const CellVector& st) {
    return *std::max_element(st.levels.begin(), st.levels.end());
}

void check_state(const BufferConfig& cfg, const CellVector& st) {
    if (st.q != cfg.q || st.n() != cfg.n)
        throw ContractError("buffer: state shape does not match config");
}

}  // namespace

BufferConfig::BufferConfig(int n_, int q_, int r_, int ell_)
    : n(n_), q(q_), r(r_), ell(ell_) {
    if (ell != 2) throw ContractError("buffer: codec stores bit inputs only (ell=2)");
    if (r < 1) throw ContractError("buffer: window length must be positive");
    if (n < 2 * r) throw ContractError("buffer: need at least 2r cells");
    if (q < 2 || q > kMaxLevels) throw ContractError("buffer: q out of range");
}

CellVector initial_state(const BufferConfig& cfg) {
    return CellVector::zeros(cfg.q, cfg.n);
}

InfoVector decode(const BufferConfig& cfg, const CellVector& st) {
    check_state(cfg, st);
    const int n = cfg.n, r = cfg.r;
    int m = max_level(st);
    InfoVector window(r, 0);
    if (m == 0) return window;
    int nm = count_at_level(st, m);
    if (nm > n - r) throw CorruptionError("buffer: too many cells at the top level");

    // The nm cells most recently written sit at positions r+1 .. r+nm over the
    // current base m-1; anything older still carries the previous base.
    for (int i = 1; i <= r; ++i) {
        int v;
        if (i <= nm)
            v = st.levels[r + nm - i] - (m - 1);
        else
            v = st.levels[n + nm - i] - std::max(m - 2, 0);
        if (v != 0 && v != 1)
            throw CorruptionError("buffer: cell level inconsistent with write count");
        window[i - 1] = v;
    }
    return window;
}

BufferOutcome encode(const BufferConfig& cfg, const CellVector& st, int bit) {
    check_state(cfg, st);
    if (bit != 0 && bit != 1) throw ContractError("buffer: input must be a bit");
    const int n = cfg.n, r = cfg.r;
    CellVector y = st;
    int m = max_level(st);

    if (m == 0) {
        y.levels[bit ? r : 0] = 1;
        return BufferOutcome::next(std::move(y));
    }

    int nm = count_at_level(st, m);
    if (nm > n - r) throw CorruptionError("buffer: too many cells at the top level");

    if (nm == n - r) {
        // Round full: flatten the low span to m and start level m+1.
        if (m + 1 > cfg.q - 1) return BufferOutcome::erase();
        for (int c = 0; c <= n - r; ++c) y.levels[c] = m;
        y.levels[bit ? r : 0] = m + 1;
        return BufferOutcome::next(std::move(y));
    }

    if (bit == 1) {
        y.levels[r + nm] += 1;
    } else {
        // A zero is recorded by raising the first sub-top cell in the span the
        // decoder scans, keeping the top-level count in step with the write count.
        for (int c = 0; c < nm + r; ++c) {
            if (y.levels[c] == m - 1) {
                y.levels[c] = m;
                break;
            }
        }
    }
    // Retire the cell about to leave the window so older levels never read as
    // current-round data. At n == 2r this may touch the cell just written.
    if (nm <= r - 1) y.levels[n - r + nm] = std::max(y.levels[n - r + nm], m - 1);
    return BufferOutcome::next(std::move(y));
}

long long guaranteed_writes(const BufferConfig& cfg) {
    return static_cast<long long>(cfg.q - 1) * (cfg.n - cfg.r);
}

long long baseline_writes(const BufferConfig& cfg) {
    return static_cast<long long>(cfg.q - 1) * (cfg.n - 2 * cfg.r + 1) + cfg.r - 1;
}

long long euler_phi(long long n) {
    if (n < 1) throw ContractError("euler_phi: argument must be positive");
    long long result = n;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

long long cycle_count(int ell, int r) {
    if (ell < 2) throw ContractError("cycle_count: alphabet needs at least two letters");
    if (r < 1) throw ContractError("cycle_count: length must be positive");
    long long sum = 0;
    for (int d = 1; d <= r; ++d)
        if (r % d == 0) sum += euler_phi(r / d) * intmath::ipow(ell, d);
    if (sum % r != 0) throw ContractError("cycle_count: orbit sum not divisible by length");
    return sum / r;
}

long long bound_single_cell_new(long long q, int ell, int r) {
    long long full = intmath::ipow(ell, r);
    if (q < full)
        throw ContractError("bound_single_cell_new: needs q >= ell^r levels");
    return (q - full) / cycle_count(ell, r) + r;
}

long long bound_single_cell_old(long long q, int ell, int r) {
    if (q < 1) throw ContractError("bound_single_cell_old: q must be positive");
    if (ell < 2 || r < 1)
        throw ContractError("bound_single_cell_old: need ell >= 2 and r >= 1");
    long long full = intmath::ipow(ell, r);
    long long writes = (q - 1) / (full - 1) * r;
    long long rem = (q - 1) % (full - 1);
    return writes + intmath::floor_log(ell, rem + 1);
}

long long prior_single_cell_writes(long long q, int r) {
    if (q < 1 || r < 1) throw ContractError("prior_single_cell_writes: bad arguments");
    return q / intmath::ipow(2, r - 1) + r - 2;
}

std::string trace_line(long long w, std::optional<int> bit, const CellVector& cells,
                       const InfoVector& window_newest_first) {
    std::ostringstream out;
    out << "w=" << w << " b=";
    if (bit) out << *bit;
    else out << '-';
    out << " cells=" << traceio::join_csv(cells.levels);
    InfoVector oldest_first(window_newest_first.rbegin(), window_newest_first.rend());
    out << " buffer=" << traceio::join_csv(oldest_first);
    return out.str();
}

std::string serialize(const BufferConfig& cfg, const CellVector& st) {
    std::ostringstream out;
    out << "scheme=buffer n=" << cfg.n << " q=" << cfg.q << " r=" << cfg.r << '\n';
    out << to_text(st) << '\n';
    return out.str();
}

std::pair<BufferConfig, CellVector> parse(const std::string& text) {
    std::istringstream in(text);
    std::string header, cell_line;
    if (!std::getline(in, header) || !std::getline(in, cell_line))
        throw ContractError("buffer: expected header and one cell line");
    auto kv = traceio::parse_kv_line(header);
    if (traceio::kv_str(kv, "scheme") != "buffer")
        throw ContractError("buffer: wrong scheme in header");
    BufferConfig cfg(traceio::kv_int(kv, "n"), traceio::kv_int(kv, "q"), traceio::kv_int(kv, "r"));
    CellVector st = cell_vector_from_text(cell_line);
    if (st.q != cfg.q || st.n() != cfg.n)
        throw ContractError("buffer: cell line does not match header");
    return {cfg, st};
}

}  // namespace flashcodes::buffer
