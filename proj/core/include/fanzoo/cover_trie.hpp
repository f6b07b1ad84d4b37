#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fanzoo/bitseq.hpp"
#include "fanzoo/dyadic.hpp"
#include "fanzoo/stem.hpp"

namespace fanzoo {

// Finite union of clopen cells, kept saturated: a node's covered flag means
// its whole cell lies inside the union, so two covered siblings cover their
// parent and the root is covered exactly when the union is all of Cantor
// space. The measure is maintained incrementally and is always the exact sum
// over minimal covered cells, which are pairwise disjoint.
class CoverTrie {
public:
    static constexpr std::uint64_t default_node_budget = std::uint64_t(1) << 26;

    explicit CoverTrie(std::uint64_t node_budget = default_node_budget);

    // Adds the cell of s to the union.
    void insert(const Stem& s);

    // Is the point f inside the union?
    bool covers(const BitSeq& f) const;
    // Is the whole cell of s inside the union?
    bool covers_cell(const Stem& s) const;

    bool full() const;
    const Dyadic& measure() const { return measure_; }

    // Lexicographically least tau such that tau*0^w lies outside the union;
    // absent exactly when the union is full.
    std::optional<Stem> least_excluded_stem() const;

    std::uint64_t max_stem_length() const { return max_len_; }
    std::uint64_t node_count() const { return nodes_.size(); }

private:
    struct Node {
        std::int64_t child[2] = {-1, -1};
        bool covered = false;
    };

    std::vector<Node> nodes_;  // nodes_[0] is the root
    Dyadic measure_;
    std::uint64_t max_len_ = 0;
    std::uint64_t budget_;

    // Sum of minimal covered cells in the subtree of `idx` at depth `depth`.
    Dyadic subtree_measure(std::int64_t idx, std::uint64_t depth) const;
};

}
