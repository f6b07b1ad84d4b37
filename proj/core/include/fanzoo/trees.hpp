#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "fanzoo/dyadic.hpp"
#include "fanzoo/stem.hpp"

namespace fanzoo {

// Stems may be at most this long in any tree, matching the tree file format.
inline constexpr std::uint64_t max_tree_depth = 64;

// Prefix-closed finite set of stems with a stored depth: every level up to
// the depth is meaningful, including empty levels above the deepest node.
// Immutable and cheap to copy.
class BinTree {
public:
    std::uint64_t depth() const;
    bool contains(const Stem& s) const;
    std::uint64_t level_count(std::uint64_t n) const;  // requires n <= depth
    std::uint64_t node_count() const;
    std::uint64_t max_node_length() const;

    // All nodes, sorted by length then lexicographically.
    std::vector<Stem> sorted_nodes() const;

    struct Data;

private:
    friend struct TreeBuilder;
    explicit BinTree(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
};

struct PrefixCloseResult {
    BinTree tree;
    bool added_nodes;
    std::uint64_t added_count;
};

// Smallest prefix-closed superset of the given stems (the root is always
// included), with the stored depth defaulting to the deepest node.
PrefixCloseResult prefix_close(const std::vector<Stem>& nodes,
                               std::optional<std::uint64_t> depth = std::nullopt);

// |{s in T : |s| = n}| / 2^n, exactly. Requires n <= depth.
Dyadic level_density(const BinTree& T, std::uint64_t n);

struct DensityVerdict {
    bool holds;
    std::optional<std::uint64_t> first_fail_level;
};

// Checks level_density(T, n) >= 1/k for every n <= depth; reports the first
// level where it fails. Requires k >= 1.
DensityVerdict density_witness(const BinTree& T, std::uint64_t k);

// True when T has no node at level k. Requires k <= depth.
bool is_bar_at(const BinTree& T, std::uint64_t k);

// Lexicographically least stem of length m all of whose prefixes lie in T.
// Requires m <= depth.
std::optional<Stem> find_path(const BinTree& T, std::uint64_t m);

// Generators. Identical arguments produce identical trees.
BinTree gen_full(std::uint64_t depth);
// Barred exactly at `level`: random nodes strictly below it, none at or
// beyond it, with one random chain reaching level-1. Requires 1 <= level <= depth.
BinTree gen_bar_at(std::uint64_t level, std::uint64_t depth, std::uint64_t seed);
// Keeps each stem of length 1..depth independently with probability p, then
// closes under prefixes. p must be in [0,1] with exponent at most 32.
BinTree gen_survival(const Dyadic& p, std::uint64_t depth, std::uint64_t seed);
// All stems up to the depth avoiding w as a contiguous substring. Requires
// |w| >= 1.
BinTree gen_no_pattern(const Stem& w, std::uint64_t depth);

struct LoadResult {
    BinTree tree;
    bool closure_added;
    std::uint64_t added_count;
};

// Plain-text format: one stem per line over {0,1}, blank lines ignored, the
// root implicit, lines at most 64 characters. With auto_close the loader
// closes under prefixes and reports it; otherwise a non-closed file is a
// precondition error.
LoadResult load_tree(std::istream& in, std::optional<std::uint64_t> depth = std::nullopt,
                     bool auto_close = true);
LoadResult load_tree_file(const std::string& path,
                          std::optional<std::uint64_t> depth = std::nullopt,
                          bool auto_close = true);
void save_tree(const BinTree& T, std::ostream& out);

}
