#pragma once

#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace flashcodes::traceio {

// Parse a line of space-separated key=value tokens, e.g. a scheme header.
std::map<std::string, std::string> parse_kv_line(const std::string& line);

long long kv_int(const std::map<std::string, std::string>& kv, const std::string& key);
std::string kv_str(const std::map<std::string, std::string>& kv, const std::string& key);

std::string join_csv(std::span<const int> values);

// One trace line of a bit-addressed scheme:
//   "w=<idx> i=<bit> cells=<l1,...,ln> bits=<v0,...,vk-1>"
// The initial row (nothing written yet) uses "i=-".
std::string flash_trace_line(long long w, std::optional<int> bit, std::span<const int> cells,
                             std::span<const int> bits);

// Input sequence file: one integer per line; '#' starts a comment; blank
// lines are skipped.
std::vector<int> parse_inputs(std::istream& in);

}  // namespace flashcodes::traceio
