#include "flashcodes/core.hpp"

#include <charconv>
#include <sstream>

namespace flashcodes {

namespace {

void check_levels(int q, const std::vector<int>& levels) {
    if (q < 2) throw ContractError("CellVector: q must be at least 2");
    if (q > kMaxLevels) throw ContractError("CellVector: q exceeds the 2^16 limit");
    for (int v : levels) {
        if (v < 0 || v >= q) throw ContractError("CellVector: cell level out of [0, q-1]");
    }
}

int parse_int(std::string_view s, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ContractError(std::string("malformed ") + what + ": '" + std::string(s) + "'");
    }
    return value;
}

}  // namespace

CellVector::CellVector(int q_, std::vector<int> levels_) : q(q_), levels(std::move(levels_)) {
    if (levels.empty()) throw ContractError("CellVector: needs at least one cell");
    check_levels(q, levels);
}

CellVector CellVector::zeros(int q, std::size_t n) {
    return CellVector(q, std::vector<int>(n, 0));
}

long long weight(const CellVector& x) {
    long long sum = 0;
    for (int v : x.levels) sum += v;
    return sum;
}

int parity(const CellVector& x) {
    return static_cast<int>(weight(x) & 1);
}

bool is_monotone_step(const CellVector& x, const CellVector& y) {
    if (x.q != y.q || x.n() != y.n()) {
        throw ContractError("is_monotone_step: shape mismatch");
    }
    for (int i = 0; i < x.n(); ++i) {
        if (y.levels[i] < x.levels[i]) return false;
    }
    return true;
}

int count_at_level(const CellVector& x, int level) {
    if (level < 0 || level >= x.q) throw ContractError("count_at_level: level out of range");
    int count = 0;
    for (int v : x.levels) {
        if (v == level) ++count;
    }
    return count;
}

std::string levels_line(int q, const std::vector<int>& levels) {
    std::ostringstream out;
    out << "q=" << q << " cells=";
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (i) out << ',';
        out << levels[i];
    }
    return out.str();
}

std::string to_text(const CellVector& x) {
    return levels_line(x.q, x.levels);
}

std::pair<int, std::vector<int>> parse_levels_line(const std::string& text) {
    const std::string q_tag = "q=";
    const std::string cells_tag = " cells=";
    if (text.rfind(q_tag, 0) != 0) throw ContractError("cell line must start with 'q='");
    auto cells_at = text.find(cells_tag);
    if (cells_at == std::string::npos) throw ContractError("cell line is missing ' cells='");
    int q = parse_int(std::string_view(text).substr(q_tag.size(), cells_at - q_tag.size()), "q");

    std::vector<int> levels;
    std::string_view rest = std::string_view(text).substr(cells_at + cells_tag.size());
    while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string_view tok = rest.substr(0, comma);
        levels.push_back(parse_int(tok, "cell level"));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    check_levels(q, levels);
    return {q, std::move(levels)};
}

CellVector cell_vector_from_text(const std::string& text) {
    auto [q, levels] = parse_levels_line(text);
    return CellVector(q, std::move(levels));
}

}  // namespace flashcodes
