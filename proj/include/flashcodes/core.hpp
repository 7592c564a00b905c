#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace flashcodes {

// Misuse of an API: broken preconditions, invalid configuration parameters,
// or a request for an unsupported variant.
struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

// A state that cannot have been produced by the owning encoder (decoders
// throw this instead of returning garbage).
struct CorruptionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A vector of n memory cells, each holding a level in [0, q-1]. Levels only
// ever increase until an erase resets the whole vector.
struct CellVector {
    int q = 2;
    std::vector<int> levels;

    CellVector() = default;
    CellVector(int q_, std::vector<int> levels_);

    static CellVector zeros(int q, std::size_t n);

    int n() const { return static_cast<int>(levels.size()); }

    bool operator==(const CellVector&) const = default;
};

constexpr int kMaxLevels = 1 << 16;  // upper limit on q

using InfoVector = std::vector<int>;  // stored bits, values 0/1

// Result of one write: either the successor state or an erase signal.
template <typename State>
class WriteResult {
  public:
    static WriteResult erase() { return WriteResult(std::nullopt); }
    static WriteResult next(State s) { return WriteResult(std::optional<State>(std::move(s))); }

    bool erased() const { return !next_.has_value(); }
    const State& state() const {
        if (!next_) throw ContractError("WriteResult: no successor state after erase");
        return *next_;
    }

  private:
    explicit WriteResult(std::optional<State> n) : next_(std::move(n)) {}
    std::optional<State> next_;
};

using WriteOutcome = WriteResult<CellVector>;

long long weight(const CellVector& x);
int parity(const CellVector& x);

// True when y is reachable from x without an erase: same shape, no cell lower.
bool is_monotone_step(const CellVector& x, const CellVector& y);

int count_at_level(const CellVector& x, int level);

// Canonical text form: "q=<int> cells=<l1>,<l2>,...,<ln>".
std::string to_text(const CellVector& x);
CellVector cell_vector_from_text(const std::string& text);

// Lenient variant used by multi-region schemes: the cell list may be empty.
std::pair<int, std::vector<int>> parse_levels_line(const std::string& text);
std::string levels_line(int q, const std::vector<int>& levels);

}  // namespace flashcodes
