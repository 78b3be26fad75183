#include "dqsim/bits.hpp"

#include <algorithm>
#include <numeric>

namespace dqsim {

namespace {
constexpr int kMaxBits = 63;  // basis indices live in a uint64_t

void check_width(int n) {
    if (n < 0 || n > kMaxBits) throw DomainError("bit string width out of range");
}
}  // namespace

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    check_width(size());
    for (auto b : bits_) {
        if (b > 1) throw DomainError("bit value must be 0 or 1");
    }
}

BitString BitString::zeros(int n) {
    check_width(n);
    BitString out;
    out.bits_.assign(static_cast<std::size_t>(n), 0);
    return out;
}

BitString BitString::parse(std::string_view text) {
    check_width(static_cast<int>(text.size()));
    BitString out;
    out.bits_.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') throw ParseError("bit string may contain only 0 and 1");
        out.bits_.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return out;
}

BitString BitString::from_index(std::uint64_t index, int n) {
    check_width(n);
    if (n < kMaxBits && index >> n) throw DomainError("basis index out of range for width");
    BitString out = zeros(n);
    for (int i = 0; i < n; ++i) out.bits_[static_cast<std::size_t>(i)] = (index >> (n - 1 - i)) & 1u;
    return out;
}

void BitString::set(int i, std::uint8_t value) {
    if (value > 1) throw DomainError("bit value must be 0 or 1");
    bits_.at(static_cast<std::size_t>(i)) = value;
}

std::uint64_t BitString::basis_index() const {
    std::uint64_t index = 0;
    for (auto b : bits_) index = (index << 1) | b;
    return index;
}

std::string BitString::str() const {
    std::string out(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) out[i] = static_cast<char>('0' + bits_[i]);
    return out;
}

BitString BitString::slice(int offset, int count) const {
    if (offset < 0 || count < 0 || offset + count > size()) throw DomainError("slice out of range");
    BitString out;
    out.bits_.assign(bits_.begin() + offset, bits_.begin() + offset + count);
    return out;
}

BitString concat(const BitString& a, const BitString& b) {
    std::vector<std::uint8_t> bits;
    bits.reserve(static_cast<std::size_t>(a.size() + b.size()));
    for (int i = 0; i < a.size(); ++i) bits.push_back(a[i]);
    for (int i = 0; i < b.size(); ++i) bits.push_back(b[i]);
    return BitString(std::move(bits));
}

int hamming_weight(const BitString& x) {
    int w = 0;
    for (int i = 0; i < x.size(); ++i) w += x[i];
    return w;
}

}  // namespace dqsim
