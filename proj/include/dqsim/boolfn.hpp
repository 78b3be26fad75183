#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dqsim/bits.hpp"

namespace dqsim {

// Total boolean function {0,1}^arity -> {0,1}, tabulated in basis-index order
// (values[x] = f of the bit string with basis index x).
struct TruthTable {
    int arity = 0;
    std::vector<std::uint8_t> values;

    friend bool operator==(const TruthTable&, const TruthTable&) = default;
};

TruthTable make_table(int arity, std::vector<std::uint8_t> values);

// f_s(x) = <s, x> mod 2.
TruthTable hidden_string_function(const BitString& s);

// 1 exactly at tau.
TruthTable point_function(const BitString& tau);

// Substitute constants for the positions in `fixed`; the remaining positions
// keep their relative order in the smaller table.
TruthTable restricted(const TruthTable& f, const std::map<int, std::uint8_t>& fixed);

// Pointwise OR of same-arity tables.
TruthTable or_combine(const std::vector<TruthTable>& parts);

// Partition of n input positions into floor(n/2) contiguous parts of width 2,
// except one part of width 3 when n is odd.  The wide part sits at the end of
// the string by default; the alternative layout puts it first.
enum class DegaLayout { TrailingWideBlock, LeadingWideBlock };

int dega_part_count(int n);
// (offset, width) of part i.
std::pair<int, int> dega_part_span(int n, int i,
                                   DegaLayout layout = DegaLayout::TrailingWideBlock);
// g_i(m) = OR over all completions of the other positions of f.
TruthTable dega_subfunction(const TruthTable& f, int i,
                            DegaLayout layout = DegaLayout::TrailingWideBlock);

// Basis indices x with f(x) = 1, ascending.
std::vector<std::uint64_t> satisfying_indices(const TruthTable& f);

// The single satisfying input, if there is exactly one.
std::optional<BitString> unique_target(const TruthTable& f);

// f(x ^ y) == f(x) ^ f(y) for all x, y.
bool is_linear(const TruthTable& f);

// Degree of the unique multilinear polynomial interpolating f over the reals
// (0 for the zero function).
int multilinear_degree(const TruthTable& f);

}  // namespace dqsim
