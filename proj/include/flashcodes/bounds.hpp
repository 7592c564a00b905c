#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "flashcodes/core.hpp"

namespace flashcodes::bounds {

// Exact rational, always kept reduced with a positive denominator.
class Rational {
  public:
    Rational() = default;
    Rational(long long num, long long den = 1);

    long long num() const { return num_; }
    long long den() const { return den_; }
    long long floor() const;
    bool is_integer() const { return den_ == 1; }

    // "p/q", or just "p" when the value is integral.
    std::string str() const;

    bool operator==(const Rational&) const = default;
    friend bool operator<(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);

  private:
    long long num_ = 0;
    long long den_ = 1;
};

// Floor of write deficiency for any code storing k bits in n q-ary cells:
// (1/2) * (q-1) * min(n, k-1).
Rational lower_bound_deficiency(long long n, long long k, long long q);

// One axis of a parameter grid; rows are generated in lexicographic order of
// the axes as declared by the formula.
struct GridAxis {
    std::string name;
    std::vector<long long> values;
};

struct SweepTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// Evaluate one named formula over a grid. Rows whose parameter combination
// violates the formula's preconditions carry the marker "error" instead of a
// value. Unknown formula ids and missing/extra axes throw ContractError.
SweepTable sweep(std::string_view formula_id, const std::vector<GridAxis>& grid);

std::string to_csv(const SweepTable& table);

const std::vector<std::string>& formula_ids();
const std::vector<std::string>& formula_axes(std::string_view formula_id);

}  // namespace flashcodes::bounds
