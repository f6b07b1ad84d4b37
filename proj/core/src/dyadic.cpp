#include "fanzoo/dyadic.hpp"

#include <algorithm>

#include "fanzoo/errors.hpp"

namespace fanzoo {

Dyadic::Dyadic(Int numerator, std::uint64_t exponent)
    : num_(std::move(numerator)), exp_(exponent) {
    if (num_ < 0) {
        throw precondition_error("dyadic numerator must be nonnegative");
    }
    if (num_ == 0) {
        exp_ = 0;
        return;
    }
    while (exp_ > 0 && (num_ & 1) == 0) {
        num_ >>= 1;
        --exp_;
    }
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
    const std::uint64_t e = std::max(exp_, o.exp_);
    Int n = (num_ << (e - exp_)) + (o.num_ << (e - o.exp_));
    return Dyadic(std::move(n), e);
}

Dyadic& Dyadic::operator+=(const Dyadic& o) {
    *this = *this + o;
    return *this;
}

Dyadic Dyadic::operator-(const Dyadic& o) const {
    const std::uint64_t e = std::max(exp_, o.exp_);
    Int lhs = num_ << (e - exp_);
    Int rhs = o.num_ << (e - o.exp_);
    if (lhs < rhs) {
        throw precondition_error("dyadic subtraction would go negative");
    }
    return Dyadic(lhs - rhs, e);
}

std::strong_ordering Dyadic::operator<=>(const Dyadic& o) const {
    const std::uint64_t e = std::max(exp_, o.exp_);
    Int lhs = num_ << (e - exp_);
    Int rhs = o.num_ << (e - o.exp_);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

int Dyadic::cmp_ratio(std::uint64_t p, std::uint64_t q) const {
    if (q == 0) {
        throw precondition_error("cmp_ratio requires a positive denominator");
    }
    Int lhs = num_ * q;
    Int rhs = Int(p) << exp_;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

std::string Dyadic::to_string() const {
    if (exp_ == 0) {
        return num_.str();
    }
    return num_.str() + "/2^" + std::to_string(exp_);
}

}
