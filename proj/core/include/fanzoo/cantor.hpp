#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fanzoo/bitseq.hpp"
#include "fanzoo/cover_trie.hpp"
#include "fanzoo/dyadic.hpp"
#include "fanzoo/stem.hpp"

namespace fanzoo {

// First n bits of f, as a stem of length n (indices 0..n-1).
Stem restrict(const BitSeq& f, std::uint64_t n);

// The point s*0^w.
BitSeq pad_zero(const Stem& s);

enum class LexOrder { less, equal_to_depth, greater };

// Compares the first `depth` bits; equal_to_depth means agreement on all of
// them, which for eventually-constant inputs of known form may still be
// genuine inequality past the inspected depth.
LexOrder lex_cmp(const BitSeq& f, const BitSeq& g, std::uint64_t depth);

// Lexicographically least point of the form tau*0^w outside the union, or
// absent when the union covers all of Cantor space. depth_bound must be at
// least the longest stem in the cover.
std::optional<BitSeq> least_excluded(const CoverTrie& cover, std::uint64_t depth_bound);

// Greatest point strictly below every element of the cell of s: drop s's
// trailing zeros, flip the final 1 to 0, then continue with ones. Absent when
// s is all zeros, since the cell then contains the least point of the space.
std::optional<BitSeq> glb_of_neighborhood(const Stem& s);

// Exact measure of the union of the cells of the given stems.
Dyadic union_measure(const std::vector<Stem>& stems);

}
