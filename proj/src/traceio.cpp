#include "flashcodes/traceio.hpp"

#include <charconv>
#include <sstream>

#include "flashcodes/core.hpp"

namespace flashcodes::traceio {

std::map<std::string, std::string> parse_kv_line(const std::string& line) {
    std::map<std::string, std::string> kv;
    std::istringstream in(line);
    std::string token;
    while (in >> token) {
        auto eq = token.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw ContractError("malformed key=value token: '" + token + "'");
        }
        kv[token.substr(0, eq)] = token.substr(eq + 1);
    }
    return kv;
}

long long kv_int(const std::map<std::string, std::string>& kv, const std::string& key) {
    const std::string& raw = kv_str(kv, key);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), value);
    if (ec != std::errc() || ptr != raw.data() + raw.size()) {
        throw ContractError("field '" + key + "' is not an integer: '" + raw + "'");
    }
    return value;
}

std::string kv_str(const std::map<std::string, std::string>& kv, const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw ContractError("missing field '" + key + "'");
    return it->second;
}

std::string join_csv(std::span<const int> values) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << ',';
        out << values[i];
    }
    return out.str();
}

std::string flash_trace_line(long long w, std::optional<int> bit, std::span<const int> cells,
                             std::span<const int> bits) {
    std::ostringstream out;
    out << "w=" << w << " i=";
    if (bit) {
        out << *bit;
    } else {
        out << '-';
    }
    out << " cells=" << join_csv(cells) << " bits=" << join_csv(bits);
    return out.str();
}

std::vector<int> parse_inputs(std::istream& in) {
    std::vector<int> inputs;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        std::string tok;
        if (!(tokens >> tok)) continue;  // blank or comment-only line
        std::string extra;
        if (tokens >> extra) throw ContractError("input line holds more than one value: '" + line + "'");
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) {
            throw ContractError("malformed input line: '" + line + "'");
        }
        inputs.push_back(value);
    }
    return inputs;
}

}  // namespace flashcodes::traceio
