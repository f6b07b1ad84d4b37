#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fanzoo {

// Finite binary string; names the clopen cell of all its infinite extensions.
// Default comparison is lexicographic, with a proper prefix ordering before
// its extensions.
class Stem {
public:
    Stem() = default;
    explicit Stem(std::vector<std::uint8_t> bits);

    // Parses "0101"; empty string gives the empty stem.
    static Stem from_string(std::string_view s);
    // The `length` low bits of `value`, most significant bit first, so that
    // numeric order of `value` is lexicographic order of the stems.
    static Stem of_index(std::uint64_t value, std::uint64_t length);

    std::uint64_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    int at(std::uint64_t i) const { return bits_.at(i); }

    void push_back(int bit);
    Stem concat(const Stem& tail) const;
    Stem prefix(std::uint64_t n) const;
    bool is_prefix_of(const Stem& longer) const;

    std::string to_string() const;

    bool operator==(const Stem&) const = default;
    std::strong_ordering operator<=>(const Stem&) const = default;

    const std::vector<std::uint8_t>& bits() const { return bits_; }

private:
    std::vector<std::uint8_t> bits_;
};

struct StemHash {
    std::size_t operator()(const Stem& s) const noexcept;
};

}
