#include "fanzoo/cantor.hpp"

#include "fanzoo/errors.hpp"

namespace fanzoo {

Stem restrict(const BitSeq& f, std::uint64_t n) {
    return f.prefix(n);
}

BitSeq pad_zero(const Stem& s) {
    return BitSeq::eventually(s, 0);
}

LexOrder lex_cmp(const BitSeq& f, const BitSeq& g, std::uint64_t depth) {
    for (std::uint64_t i = 0; i < depth; ++i) {
        int a = f.at(i);
        int b = g.at(i);
        if (a < b) return LexOrder::less;
        if (a > b) return LexOrder::greater;
    }
    return LexOrder::equal_to_depth;
}

std::optional<BitSeq> least_excluded(const CoverTrie& cover, std::uint64_t depth_bound) {
    if (depth_bound < cover.max_stem_length()) {
        throw precondition_error("depth bound below the longest stem in the cover");
    }
    auto stem = cover.least_excluded_stem();
    if (!stem) {
        return std::nullopt;
    }
    return pad_zero(*stem);
}

std::optional<BitSeq> glb_of_neighborhood(const Stem& s) {
    std::uint64_t last_one = s.size();
    for (std::uint64_t i = s.size(); i-- > 0;) {
        if (s.at(i) == 1) {
            last_one = i;
            break;
        }
    }
    if (last_one == s.size()) {
        return std::nullopt;
    }
    Stem head = s.prefix(last_one);
    head.push_back(0);
    return BitSeq::eventually(std::move(head), 1);
}

Dyadic union_measure(const std::vector<Stem>& stems) {
    CoverTrie trie;
    for (const auto& s : stems) {
        trie.insert(s);
    }
    return trie.measure();
}

}
