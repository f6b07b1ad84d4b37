#include "fanzoo/bitseq.hpp"

#include <mutex>
#include <unordered_map>
#include <utility>

#include "fanzoo/errors.hpp"

namespace fanzoo {

struct BitSeq::Impl {
    virtual ~Impl() = default;
    virtual int at(std::uint64_t i) const = 0;
    virtual std::optional<EventualForm> eventual() const { return std::nullopt; }
};

namespace {

struct EventualImpl final : BitSeq::Impl {
    Stem head;
    int tail;

    EventualImpl(Stem h, int t) : head(std::move(h)), tail(t) {}

    int at(std::uint64_t i) const override {
        return i < head.size() ? head.at(i) : tail;
    }

    std::optional<BitSeq::EventualForm> eventual() const override {
        return BitSeq::EventualForm{head, tail};
    }
};

struct PrefixImpl final : BitSeq::Impl {
    Stem head;
    BitSeq rest;

    PrefixImpl(Stem h, BitSeq r) : head(std::move(h)), rest(std::move(r)) {}

    int at(std::uint64_t i) const override {
        return i < head.size() ? head.at(i) : rest.at(i - head.size());
    }

    std::optional<BitSeq::EventualForm> eventual() const override {
        if (auto e = rest.eventual_form()) {
            return BitSeq::EventualForm{head.concat(e->head), e->tail_bit};
        }
        return std::nullopt;
    }
};

struct GeneratedImpl final : BitSeq::Impl {
    std::function<int(std::uint64_t)> gen;
    mutable std::mutex mu;
    mutable std::unordered_map<std::uint64_t, int> memo;

    explicit GeneratedImpl(std::function<int(std::uint64_t)> g) : gen(std::move(g)) {}

    int at(std::uint64_t i) const override {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(i);
        if (it != memo.end()) {
            return it->second;
        }
        int bit = gen(i) != 0 ? 1 : 0;
        memo.emplace(i, bit);
        return bit;
    }
};

}

BitSeq BitSeq::zeros() {
    return eventually(Stem(), 0);
}

BitSeq BitSeq::ones() {
    return eventually(Stem(), 1);
}

BitSeq BitSeq::eventually(Stem head, int tail_bit) {
    if (tail_bit != 0 && tail_bit != 1) {
        throw usage_error("tail bit must be 0 or 1");
    }
    return BitSeq(std::make_shared<EventualImpl>(std::move(head), tail_bit));
}

BitSeq BitSeq::with_prefix(Stem head, BitSeq tail) {
    return BitSeq(std::make_shared<PrefixImpl>(std::move(head), std::move(tail)));
}

BitSeq BitSeq::from_generator(std::function<int(std::uint64_t)> gen) {
    return BitSeq(std::make_shared<GeneratedImpl>(std::move(gen)));
}

int BitSeq::at(std::uint64_t i) const {
    return impl_->at(i);
}

Stem BitSeq::prefix(std::uint64_t n) const {
    Stem s;
    for (std::uint64_t i = 0; i < n; ++i) {
        s.push_back(at(i));
    }
    return s;
}

std::optional<BitSeq::EventualForm> BitSeq::eventual_form() const {
    return impl_->eventual();
}

}
