#include "fanzoo/trees.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <utility>

#include "fanzoo/errors.hpp"

namespace fanzoo {

namespace {
// Generators draw one coin per stem and the node sets stay in memory, so cap
// the exhaustively enumerated depths.
constexpr std::uint64_t max_full_depth = 16;
constexpr std::uint64_t max_coin_depth = 22;
constexpr std::uint64_t node_budget = std::uint64_t(1) << 23;
}

struct BinTree::Data {
    std::unordered_set<Stem, StemHash> nodes;
    std::vector<std::uint64_t> level_counts;  // size depth + 1
    std::uint64_t depth = 0;
    std::uint64_t max_len = 0;
};

struct TreeBuilder {
    // nodes must already be prefix-closed and contain the root.
    static BinTree make(std::unordered_set<Stem, StemHash> nodes, std::uint64_t depth) {
        auto d = std::make_shared<BinTree::Data>();
        d->depth = depth;
        d->level_counts.assign(depth + 1, 0);
        for (const auto& s : nodes) {
            d->max_len = std::max(d->max_len, s.size());
            d->level_counts.at(s.size()) += 1;
        }
        d->nodes = std::move(nodes);
        return BinTree(std::move(d));
    }
};

std::uint64_t BinTree::depth() const { return d_->depth; }

bool BinTree::contains(const Stem& s) const {
    return d_->nodes.count(s) != 0;
}

std::uint64_t BinTree::level_count(std::uint64_t n) const {
    if (n > d_->depth) {
        throw precondition_error("level beyond the stored depth");
    }
    return d_->level_counts[n];
}

std::uint64_t BinTree::node_count() const { return d_->nodes.size(); }

std::uint64_t BinTree::max_node_length() const { return d_->max_len; }

std::vector<Stem> BinTree::sorted_nodes() const {
    std::vector<Stem> out(d_->nodes.begin(), d_->nodes.end());
    std::sort(out.begin(), out.end(), [](const Stem& a, const Stem& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

namespace {

std::uint64_t checked_depth(std::uint64_t depth) {
    if (depth > max_tree_depth) {
        throw usage_error("tree depth exceeds " + std::to_string(max_tree_depth));
    }
    return depth;
}

PrefixCloseResult close_impl(const std::vector<Stem>& nodes,
                             std::optional<std::uint64_t> depth) {
    std::unordered_set<Stem, StemHash> closed;
    std::uint64_t max_len = 0;
    closed.insert(Stem());
    for (const auto& s : nodes) {
        if (s.size() > max_tree_depth) {
            throw usage_error("tree node longer than " + std::to_string(max_tree_depth));
        }
        max_len = std::max(max_len, s.size());
        closed.insert(s);
        if (closed.size() > node_budget) {
            throw resource_limit_error("tree node budget exhausted");
        }
    }
    // Walk each node's prefixes; stop a walk as soon as a prefix is present.
    std::uint64_t added = 0;
    for (const auto& s : nodes) {
        for (std::uint64_t n = s.size(); n-- > 1;) {
            Stem p = s.prefix(n);
            if (!closed.insert(std::move(p)).second) {
                break;
            }
            ++added;
            if (closed.size() > node_budget) {
                throw resource_limit_error("tree node budget exhausted");
            }
        }
    }
    std::uint64_t d = depth ? checked_depth(*depth) : max_len;
    if (d < max_len) {
        throw usage_error("requested depth is smaller than the deepest node");
    }
    return PrefixCloseResult{TreeBuilder::make(std::move(closed), d), added > 0, added};
}

}

PrefixCloseResult prefix_close(const std::vector<Stem>& nodes,
                               std::optional<std::uint64_t> depth) {
    return close_impl(nodes, depth);
}

Dyadic level_density(const BinTree& T, std::uint64_t n) {
    return Dyadic(T.level_count(n), n);
}

DensityVerdict density_witness(const BinTree& T, std::uint64_t k) {
    if (k < 1) {
        throw precondition_error("density threshold requires k >= 1");
    }
    for (std::uint64_t n = 0; n <= T.depth(); ++n) {
        if (level_density(T, n).cmp_ratio(1, k) < 0) {
            return DensityVerdict{false, n};
        }
    }
    return DensityVerdict{true, std::nullopt};
}

bool is_bar_at(const BinTree& T, std::uint64_t k) {
    if (k > T.depth()) {
        throw precondition_error("bar level beyond the stored depth");
    }
    return T.level_count(k) == 0;
}

namespace {

bool find_path_from(const BinTree& T, const Stem& at, std::uint64_t m, Stem& out) {
    if (at.size() == m) {
        out = at;
        return true;
    }
    for (int b = 0; b <= 1; ++b) {
        Stem next = at;
        next.push_back(b);
        if (T.contains(next) && find_path_from(T, next, m, out)) {
            return true;
        }
    }
    return false;
}

}

std::optional<Stem> find_path(const BinTree& T, std::uint64_t m) {
    if (m > T.depth()) {
        throw precondition_error("path length beyond the stored depth");
    }
    Stem out;
    if (find_path_from(T, Stem(), m, out)) {
        return out;
    }
    return std::nullopt;
}

BinTree gen_full(std::uint64_t depth) {
    checked_depth(depth);
    if (depth > max_full_depth) {
        throw usage_error("full trees are limited to depth " + std::to_string(max_full_depth));
    }
    std::unordered_set<Stem, StemHash> nodes;
    for (std::uint64_t n = 0; n <= depth; ++n) {
        for (std::uint64_t v = 0; v < (std::uint64_t(1) << n); ++v) {
            nodes.insert(Stem::of_index(v, n));
        }
    }
    return TreeBuilder::make(std::move(nodes), depth);
}

namespace {

// One coin per stem, in order of length then lexicographic rank, so the coin
// stream is a function of the seed alone.
std::vector<Stem> survival_draws(const Dyadic& p, std::uint64_t depth, std::uint64_t seed) {
    if (p > Dyadic::one()) {
        throw usage_error("survival probability must be at most 1");
    }
    if (p.exp() > 32) {
        throw usage_error("survival probability must have exponent at most 32");
    }
    if (depth > max_coin_depth) {
        throw usage_error("survival trees are limited to depth " + std::to_string(max_coin_depth));
    }
    const std::uint64_t pnum = p.num().convert_to<std::uint64_t>();
    const std::uint64_t pexp = p.exp();
    std::mt19937_64 rng(seed);
    std::vector<Stem> kept;
    for (std::uint64_t n = 1; n <= depth; ++n) {
        for (std::uint64_t v = 0; v < (std::uint64_t(1) << n); ++v) {
            std::uint64_t draw = rng();
            bool keep = pexp == 0 ? pnum >= 1 : (draw >> (64 - pexp)) < pnum;
            if (keep) {
                kept.push_back(Stem::of_index(v, n));
            }
        }
    }
    return kept;
}

}

BinTree gen_bar_at(std::uint64_t level, std::uint64_t depth, std::uint64_t seed) {
    checked_depth(depth);
    if (level < 1 || level > depth) {
        throw precondition_error("bar level must satisfy 1 <= level <= depth");
    }
    if (level - 1 > max_coin_depth) {
        throw usage_error("bar trees are limited to level " + std::to_string(max_coin_depth + 1));
    }
    std::vector<Stem> kept;
    if (level >= 2) {
        kept = survival_draws(Dyadic(3, 2), level - 1, seed);
        // A random chain down to level-1 keeps the bar exactly at `level`
        // regardless of how the coins fell.
        std::mt19937_64 chain_rng(seed ^ 0x9e3779b97f4a7c15ull);
        Stem chain;
        for (std::uint64_t n = 1; n < level; ++n) {
            chain.push_back(static_cast<int>(chain_rng() & 1));
        }
        kept.push_back(std::move(chain));
    }
    auto closed = close_impl(kept, depth);
    return closed.tree;
}

BinTree gen_survival(const Dyadic& p, std::uint64_t depth, std::uint64_t seed) {
    checked_depth(depth);
    auto kept = survival_draws(p, depth, seed);
    auto closed = close_impl(kept, depth);
    return closed.tree;
}

BinTree gen_no_pattern(const Stem& w, std::uint64_t depth) {
    checked_depth(depth);
    if (w.empty()) {
        throw precondition_error("pattern must be nonempty");
    }
    std::unordered_set<Stem, StemHash> nodes;
    std::vector<Stem> level{Stem()};
    nodes.insert(Stem());
    for (std::uint64_t n = 1; n <= depth; ++n) {
        std::vector<Stem> next;
        for (const auto& s : level) {
            for (int b = 0; b <= 1; ++b) {
                Stem child = s;
                child.push_back(b);
                // s already avoids w, so a new occurrence must end at the
                // final position.
                bool hit = false;
                if (child.size() >= w.size()) {
                    hit = true;
                    std::uint64_t off = child.size() - w.size();
                    for (std::uint64_t i = 0; i < w.size(); ++i) {
                        if (child.at(off + i) != w.at(i)) {
                            hit = false;
                            break;
                        }
                    }
                }
                if (!hit) {
                    next.push_back(child);
                    nodes.insert(std::move(child));
                    if (nodes.size() > node_budget) {
                        throw resource_limit_error("tree node budget exhausted");
                    }
                }
            }
        }
        level = std::move(next);
    }
    return TreeBuilder::make(std::move(nodes), depth);
}

LoadResult load_tree(std::istream& in, std::optional<std::uint64_t> depth, bool auto_close) {
    std::vector<Stem> stems;
    std::string line;
    std::uint64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line.size() > 64) {
            throw usage_error("line " + std::to_string(lineno) + ": longer than 64 characters");
        }
        try {
            stems.push_back(Stem::from_string(line));
        } catch (const usage_error&) {
            throw usage_error("line " + std::to_string(lineno) + ": expected a string over {0,1}");
        }
        if (stems.size() > node_budget) {
            throw resource_limit_error("tree node budget exhausted");
        }
    }
    auto closed = close_impl(stems, depth);
    if (closed.added_nodes && !auto_close) {
        throw precondition_error("tree file is not prefix-closed (closure would add " +
                                 std::to_string(closed.added_count) + " nodes)");
    }
    return LoadResult{closed.tree, closed.added_nodes, closed.added_count};
}

LoadResult load_tree_file(const std::string& path, std::optional<std::uint64_t> depth,
                          bool auto_close) {
    std::ifstream in(path);
    if (!in) {
        throw usage_error("cannot open tree file: " + path);
    }
    return load_tree(in, depth, auto_close);
}

void save_tree(const BinTree& T, std::ostream& out) {
    for (const auto& s : T.sorted_nodes()) {
        if (s.empty()) {
            continue;  // the root is implicit in the format
        }
        out << s.to_string() << '\n';
    }
}

}
