#include "dqsim/boolfn.hpp"

#include <bit>

namespace dqsim {

namespace {
constexpr int kMaxTableArity = 24;   // tables are dense; 2^24 entries is the cap
constexpr int kMaxDegreeArity = 16;  // Moebius transform works on int accumulators

void check_arity(int arity) {
    if (arity < 0 || arity > kMaxTableArity) throw LimitError("table arity limit");
}

std::size_t table_size(int arity) { return std::size_t{1} << arity; }
}  // namespace

TruthTable make_table(int arity, std::vector<std::uint8_t> values) {
    check_arity(arity);
    if (values.size() != table_size(arity)) throw DomainError("table size does not match arity");
    for (auto v : values) {
        if (v > 1) throw DomainError("table value must be 0 or 1");
    }
    return TruthTable{arity, std::move(values)};
}

TruthTable hidden_string_function(const BitString& s) {
    const int n = s.size();
    check_arity(n);
    const std::uint64_t mask = s.basis_index();
    std::vector<std::uint8_t> values(table_size(n));
    for (std::uint64_t x = 0; x < values.size(); ++x) {
        values[x] = static_cast<std::uint8_t>(std::popcount(x & mask) & 1);
    }
    return TruthTable{n, std::move(values)};
}

TruthTable point_function(const BitString& tau) {
    const int n = tau.size();
    check_arity(n);
    std::vector<std::uint8_t> values(table_size(n), 0);
    values[tau.basis_index()] = 1;
    return TruthTable{n, std::move(values)};
}

TruthTable restricted(const TruthTable& f, const std::map<int, std::uint8_t>& fixed) {
    const int n = f.arity;
    for (const auto& [pos, bit] : fixed) {
        if (pos < 0 || pos >= n) throw DomainError("restricted position out of range");
        if (bit > 1) throw DomainError("bit value must be 0 or 1");
    }
    std::vector<int> free_positions;
    for (int i = 0; i < n; ++i) {
        if (!fixed.contains(i)) free_positions.push_back(i);
    }
    const int m = static_cast<int>(free_positions.size());
    std::uint64_t base = 0;
    for (const auto& [pos, bit] : fixed) {
        if (bit) base |= std::uint64_t{1} << (n - 1 - pos);
    }
    std::vector<std::uint8_t> values(table_size(m));
    for (std::uint64_t y = 0; y < values.size(); ++y) {
        std::uint64_t x = base;
        for (int j = 0; j < m; ++j) {
            if ((y >> (m - 1 - j)) & 1) x |= std::uint64_t{1} << (n - 1 - free_positions[j]);
        }
        values[y] = f.values[x];
    }
    return TruthTable{m, std::move(values)};
}

TruthTable or_combine(const std::vector<TruthTable>& parts) {
    if (parts.empty()) throw DomainError("or_combine needs at least one table");
    TruthTable out = parts.front();
    for (std::size_t k = 1; k < parts.size(); ++k) {
        if (parts[k].arity != out.arity) throw DomainError("arity mismatch");
        for (std::size_t x = 0; x < out.values.size(); ++x) out.values[x] |= parts[k].values[x];
    }
    return out;
}

int dega_part_count(int n) {
    if (n < 2) throw DomainError("partition requires at least 2 bits");
    return n / 2;
}

std::pair<int, int> dega_part_span(int n, int i, DegaLayout layout) {
    const int parts = dega_part_count(n);
    if (i < 0 || i >= parts) throw DomainError("invalid part index");
    if (n % 2 == 0) return {2 * i, 2};
    if (layout == DegaLayout::TrailingWideBlock) {
        return i == parts - 1 ? std::pair{2 * i, 3} : std::pair{2 * i, 2};
    }
    return i == 0 ? std::pair{0, 3} : std::pair{2 * i + 1, 2};
}

TruthTable dega_subfunction(const TruthTable& f, int i, DegaLayout layout) {
    const auto [offset, width] = dega_part_span(f.arity, i, layout);
    const int n = f.arity;
    std::vector<std::uint8_t> values(table_size(width), 0);
    for (std::uint64_t x = 0; x < f.values.size(); ++x) {
        if (!f.values[x]) continue;
        const std::uint64_t m = (x >> (n - offset - width)) & ((std::uint64_t{1} << width) - 1);
        values[m] = 1;
    }
    return TruthTable{width, std::move(values)};
}

std::vector<std::uint64_t> satisfying_indices(const TruthTable& f) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 0; x < f.values.size(); ++x) {
        if (f.values[x]) out.push_back(x);
    }
    return out;
}

std::optional<BitString> unique_target(const TruthTable& f) {
    const auto hits = satisfying_indices(f);
    if (hits.size() != 1) return std::nullopt;
    return BitString::from_index(hits.front(), f.arity);
}

bool is_linear(const TruthTable& f) {
    // A total table is linear iff it coincides with the parity function built
    // from its values on the unit vectors (which also forces f(0) = 0).
    const int n = f.arity;
    BitString s = BitString::zeros(n);
    for (int i = 0; i < n; ++i) {
        s.set(i, f.values[std::uint64_t{1} << (n - 1 - i)]);
    }
    return f == hidden_string_function(s);
}

int multilinear_degree(const TruthTable& f) {
    if (f.arity > kMaxDegreeArity) throw LimitError("degree computation limit");
    // Moebius transform: coefficient of the monomial prod_{i in S} x_i is
    // sum_{T subset S} (-1)^{|S|-|T|} f(chi_T).
    std::vector<int> c(f.values.begin(), f.values.end());
    for (int b = 0; b < f.arity; ++b) {
        const std::size_t bit = std::size_t{1} << b;
        for (std::size_t mask = 0; mask < c.size(); ++mask) {
            if (mask & bit) c[mask] -= c[mask ^ bit];
        }
    }
    int degree = 0;
    for (std::size_t mask = 0; mask < c.size(); ++mask) {
        if (c[mask] != 0) degree = std::max(degree, std::popcount(mask));
    }
    return degree;
}

}  // namespace dqsim
