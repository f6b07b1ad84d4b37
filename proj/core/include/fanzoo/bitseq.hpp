#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>

#include "fanzoo/stem.hpp"

namespace fanzoo {

// Total infinite binary sequence. Immutable and cheap to copy; querying the
// same index twice always returns the same bit. Generator-backed sequences
// memoize their bits, so the memo cache is the only mutable state and is
// guarded for concurrent readers.
class BitSeq {
public:
    struct EventualForm {
        Stem head;
        int tail_bit;
    };

    static BitSeq zeros();
    static BitSeq ones();
    // head followed by tail_bit forever.
    static BitSeq eventually(Stem head, int tail_bit);
    // head followed by the given sequence.
    static BitSeq with_prefix(Stem head, BitSeq tail);
    // Arbitrary generator; nonzero outputs count as 1.
    static BitSeq from_generator(std::function<int(std::uint64_t)> gen);

    int at(std::uint64_t i) const;
    Stem prefix(std::uint64_t n) const;

    // Present when the sequence is eventually constant by construction.
    std::optional<EventualForm> eventual_form() const;

    struct Impl;

private:
    explicit BitSeq(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

}
