#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>

namespace fanzoo {

// Exact nonnegative dyadic rational num / 2^exp.
// Canonical form: num odd, or num == 0 with exp == 0, so structural equality
// is value equality. All measures in this library are dyadic and compared
// exactly; floating point never decides a verdict.
class Dyadic {
public:
    using Int = boost::multiprecision::cpp_int;

    Dyadic() = default;
    Dyadic(Int numerator, std::uint64_t exponent);

    static Dyadic zero() { return Dyadic(); }
    static Dyadic one() { return Dyadic(1, 0); }
    static Dyadic pow2_neg(std::uint64_t n) { return Dyadic(1, n); }

    const Int& num() const { return num_; }
    std::uint64_t exp() const { return exp_; }
    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && exp_ == 0; }

    Dyadic operator+(const Dyadic& o) const;
    Dyadic& operator+=(const Dyadic& o);
    // Exact difference; requires *this >= o.
    Dyadic operator-(const Dyadic& o) const;

    bool operator==(const Dyadic& o) const = default;
    std::strong_ordering operator<=>(const Dyadic& o) const;

    // Sign of (*this - p/q), computed exactly; requires q >= 1.
    int cmp_ratio(std::uint64_t p, std::uint64_t q) const;

    std::string to_string() const;

private:
    Int num_ = 0;
    std::uint64_t exp_ = 0;
};

}
