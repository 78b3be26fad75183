#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dqsim/common.hpp"

namespace dqsim {

// Fixed-width bit string b0 b1 ... b_{n-1}.  b0 is the leftmost character of
// the text form and the most significant bit of the basis index, so a string
// maps to basis index sum_i b_i * 2^(n-1-i).  Wire i of a circuit carries
// bit i under the same convention.
class BitString {
public:
    BitString() = default;
    explicit BitString(std::vector<std::uint8_t> bits);

    static BitString zeros(int n);
    static BitString parse(std::string_view text);
    static BitString from_index(std::uint64_t index, int n);

    int size() const { return static_cast<int>(bits_.size()); }
    bool empty() const { return bits_.empty(); }
    std::uint8_t operator[](int i) const { return bits_[static_cast<std::size_t>(i)]; }
    void set(int i, std::uint8_t value);

    std::uint64_t basis_index() const;
    std::string str() const;
    BitString slice(int offset, int count) const;

    auto operator<=>(const BitString&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

BitString concat(const BitString& a, const BitString& b);
int hamming_weight(const BitString& x);

}  // namespace dqsim
