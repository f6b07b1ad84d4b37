#include "fanzoo/stem.hpp"

#include <algorithm>

#include "fanzoo/errors.hpp"

namespace fanzoo {

Stem::Stem(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_) {
        if (b > 1) {
            throw usage_error("stem bits must be 0 or 1");
        }
    }
}

Stem Stem::from_string(std::string_view s) {
    std::vector<std::uint8_t> bits;
    bits.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') {
            throw usage_error(std::string("invalid stem character '") + c + "'");
        }
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return Stem(std::move(bits));
}

Stem Stem::of_index(std::uint64_t value, std::uint64_t length) {
    if (length > 63) {
        throw usage_error("of_index supports lengths up to 63");
    }
    std::vector<std::uint8_t> bits(length);
    for (std::uint64_t j = 0; j < length; ++j) {
        bits[j] = static_cast<std::uint8_t>((value >> (length - 1 - j)) & 1);
    }
    return Stem(std::move(bits));
}

void Stem::push_back(int bit) {
    if (bit != 0 && bit != 1) {
        throw usage_error("stem bits must be 0 or 1");
    }
    bits_.push_back(static_cast<std::uint8_t>(bit));
}

Stem Stem::concat(const Stem& tail) const {
    std::vector<std::uint8_t> bits = bits_;
    bits.insert(bits.end(), tail.bits_.begin(), tail.bits_.end());
    return Stem(std::move(bits));
}

Stem Stem::prefix(std::uint64_t n) const {
    if (n > bits_.size()) {
        throw precondition_error("stem prefix longer than the stem");
    }
    return Stem(std::vector<std::uint8_t>(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(n)));
}

bool Stem::is_prefix_of(const Stem& longer) const {
    if (bits_.size() > longer.bits_.size()) {
        return false;
    }
    return std::equal(bits_.begin(), bits_.end(), longer.bits_.begin());
}

std::string Stem::to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) {
        s.push_back(static_cast<char>('0' + b));
    }
    return s;
}

std::size_t StemHash::operator()(const Stem& s) const noexcept {
    // FNV-1a over the bits, seeded with the length.
    std::size_t h = 1469598103934665603ull ^ s.size();
    for (auto b : s.bits()) {
        h ^= b;
        h *= 1099511628211ull;
    }
    return h;
}

}
