#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flashcodes::cli {

// Grammar for numeric table flags: "7" | "3,5,9" | "2..10" | "2..10:4".
// Throws ContractError on anything else.
std::vector<long long> parse_range(const std::string& spec);

// The whole command-line tool, streams injected for testing. `args` excludes
// the program name. Exit codes: 0 success, 1 erase reached or verification
// failed, 2 usage error, 3 inconclusive search.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace flashcodes::cli
