#include "flashcodes/bounds.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

#include "flashcodes/buffer.hpp"
#include "flashcodes/constrate.hpp"
#include "flashcodes/indexless.hpp"
#include "flashcodes/staged.hpp"
#include "flashcodes/twobit.hpp"

namespace flashcodes::bounds {

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) throw ContractError("rational: zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

long long Rational::floor() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational lower_bound_deficiency(long long n, long long k, long long q) {
    if (n < 1 || k < 1 || q < 2)
        throw ContractError("lower_bound_deficiency: need n>=1, k>=1, q>=2");
    return Rational((q - 1) * std::min(n, k - 1), 2);
}

namespace {

int to_int(long long v) {
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        throw ContractError("sweep: value out of range");
    return static_cast<int>(v);
}

struct Formula {
    std::string id;
    std::vector<std::string> axes;
    std::function<std::string(const std::vector<long long>&)> eval;
};

std::string ll(long long v) { return std::to_string(v); }

const std::vector<Formula>& registry() {
    static const std::vector<Formula> formulas = {
        {"flash-lower", {"n", "k", "q"},
         [](const std::vector<long long>& a) {
             return lower_bound_deficiency(a[0], a[1], a[2]).str();
         }},
        {"twobit-writes", {"n", "q"},
         [](const std::vector<long long>& a) {
             return ll(twobit::guaranteed_writes(a[0], a[1]));
         }},
        {"indexless", {"k", "q"},
         [](const std::vector<long long>& a) {
             return ll(indexless::deficiency_bound(a[0], a[1]));
         }},
        {"staged-per-stage", {"k", "q"},
         [](const std::vector<long long>& a) {
             return ll(staged::bound_per_stage(a[0], a[1]));
         }},
        {"staged-stacked", {"k", "q"},
         [](const std::vector<long long>& a) {
             return ll(staged::bound_stacked(a[0], a[1]));
         }},
        {"constrate-writes", {"n", "k", "q"},
         [](const std::vector<long long>& a) {
             constrate::ConstRateConfig cfg(to_int(a[0]), to_int(a[1]), to_int(a[2]));
             return ll(constrate::guaranteed_writes(cfg));
         }},
        {"buffer-writes", {"n", "q", "r"},
         [](const std::vector<long long>& a) {
             buffer::BufferConfig cfg(to_int(a[0]), to_int(a[1]), to_int(a[2]));
             return ll(buffer::guaranteed_writes(cfg));
         }},
        {"buffer-baseline", {"n", "q", "r"},
         [](const std::vector<long long>& a) {
             buffer::BufferConfig cfg(to_int(a[0]), to_int(a[1]), to_int(a[2]));
             return ll(buffer::baseline_writes(cfg));
         }},
        {"buffer-new", {"q", "l", "r"},
         [](const std::vector<long long>& a) {
             return ll(buffer::bound_single_cell_new(a[0], to_int(a[1]), to_int(a[2])));
         }},
        {"buffer-old", {"q", "l", "r"},
         [](const std::vector<long long>& a) {
             return ll(buffer::bound_single_cell_old(a[0], to_int(a[1]), to_int(a[2])));
         }},
        {"buffer-prior", {"q", "r"},
         [](const std::vector<long long>& a) {
             return ll(buffer::prior_single_cell_writes(a[0], to_int(a[1])));
         }},
        {"cycle-count", {"l", "r"},
         [](const std::vector<long long>& a) {
             return ll(buffer::cycle_count(to_int(a[0]), to_int(a[1])));
         }},
        {"euler-phi", {"n"},
         [](const std::vector<long long>& a) { return ll(buffer::euler_phi(a[0])); }},
    };
    return formulas;
}

const Formula& find_formula(std::string_view id) {
    for (const Formula& f : registry())
        if (f.id == id) return f;
    throw ContractError("sweep: unknown formula '" + std::string(id) + "'");
}

}  // namespace

SweepTable sweep(std::string_view formula_id, const std::vector<GridAxis>& grid) {
    const Formula& f = find_formula(formula_id);

    SweepTable table;
    table.header = f.axes;
    table.header.push_back(f.id);
    if (grid.empty()) return table;

    // Reorder the provided axes into the formula's declared order.
    std::vector<const GridAxis*> axes;
    bool any_empty = false;
    for (const std::string& name : f.axes) {
        const GridAxis* found = nullptr;
        for (const GridAxis& axis : grid) {
            if (axis.name == name) {
                if (found) throw ContractError("sweep: duplicate axis '" + name + "'");
                found = &axis;
            }
        }
        if (!found) throw ContractError("sweep: missing axis '" + name + "'");
        if (found->values.empty()) any_empty = true;
        axes.push_back(found);
    }
    if (grid.size() != f.axes.size()) {
        std::string wanted;
        for (const std::string& a : f.axes) wanted += (wanted.empty() ? "" : ", ") + a;
        throw ContractError("sweep: formula takes exactly these axes: " + wanted);
    }
    if (any_empty) return table;  // empty cartesian product, zero rows

    std::vector<std::size_t> idx(axes.size(), 0);
    std::vector<long long> point(axes.size());
    for (;;) {
        std::vector<std::string> row;
        for (std::size_t i = 0; i < axes.size(); ++i) {
            point[i] = axes[i]->values[idx[i]];
            row.push_back(std::to_string(point[i]));
        }
        try {
            row.push_back(f.eval(point));
        } catch (const ContractError&) {
            row.push_back("error");
        }
        table.rows.push_back(std::move(row));

        std::size_t i = axes.size();
        while (i > 0) {
            --i;
            if (++idx[i] < axes[i]->values.size()) break;
            idx[i] = 0;
            if (i == 0) return table;
        }
    }
}

std::string to_csv(const SweepTable& table) {
    std::ostringstream out;
    for (std::size_t i = 0; i < table.header.size(); ++i)
        out << (i ? "," : "") << table.header[i];
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << '\n';
    }
    return out.str();
}

const std::vector<std::string>& formula_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const Formula& f : registry()) v.push_back(f.id);
        return v;
    }();
    return ids;
}

const std::vector<std::string>& formula_axes(std::string_view formula_id) {
    return find_formula(formula_id).axes;
}

}  // namespace flashcodes::bounds
