#include "fanzoo/cover_trie.hpp"

#include <utility>

#include "fanzoo/errors.hpp"

namespace fanzoo {

CoverTrie::CoverTrie(std::uint64_t node_budget) : budget_(node_budget) {
    nodes_.emplace_back();
}

void CoverTrie::insert(const Stem& s) {
    // Descend, creating the path; remember it for the upward saturation pass.
    std::vector<std::int64_t> path;
    path.reserve(s.size() + 1);
    std::int64_t cur = 0;
    path.push_back(cur);
    for (std::uint64_t i = 0; i < s.size(); ++i) {
        if (nodes_[cur].covered) {
            return;  // cell already wholly covered, nothing changes
        }
        int b = s.at(i);
        std::int64_t next = nodes_[cur].child[b];
        if (next < 0) {
            if (nodes_.size() >= budget_) {
                throw resource_limit_error("cover trie node budget exhausted");
            }
            next = static_cast<std::int64_t>(nodes_.size());
            nodes_.emplace_back();
            nodes_[cur].child[b] = next;
        }
        cur = next;
        path.push_back(cur);
    }
    if (nodes_[cur].covered) {
        return;
    }

    // The newly covered area is the cell minus what was already covered
    // strictly inside it.
    Dyadic gained = Dyadic::pow2_neg(s.size()) - subtree_measure(cur, s.size());
    measure_ += gained;

    nodes_[cur].covered = true;
    // Interior structure below a covered node is irrelevant from here on.
    nodes_[cur].child[0] = nodes_[cur].child[1] = -1;

    if (s.size() > max_len_) {
        max_len_ = s.size();
    }

    // Saturate upward: a parent with two covered children is covered.
    for (std::size_t i = path.size() - 1; i-- > 0;) {
        Node& n = nodes_[path[i]];
        std::int64_t c0 = n.child[0];
        std::int64_t c1 = n.child[1];
        if (c0 >= 0 && c1 >= 0 && nodes_[c0].covered && nodes_[c1].covered) {
            n.covered = true;
            n.child[0] = n.child[1] = -1;
        } else {
            break;
        }
    }
}

bool CoverTrie::covers(const BitSeq& f) const {
    std::int64_t cur = 0;
    for (std::uint64_t i = 0;; ++i) {
        if (nodes_[cur].covered) {
            return true;
        }
        if (i > max_len_) {
            return false;
        }
        std::int64_t next = nodes_[cur].child[f.at(i)];
        if (next < 0) {
            return false;
        }
        cur = next;
    }
}

bool CoverTrie::covers_cell(const Stem& s) const {
    std::int64_t cur = 0;
    for (std::uint64_t i = 0; i < s.size(); ++i) {
        if (nodes_[cur].covered) {
            return true;
        }
        std::int64_t next = nodes_[cur].child[s.at(i)];
        if (next < 0) {
            return false;
        }
        cur = next;
    }
    return nodes_[cur].covered;
}

bool CoverTrie::full() const {
    return nodes_[0].covered;
}

std::optional<Stem> CoverTrie::least_excluded_stem() const {
    if (nodes_[0].covered) {
        return std::nullopt;
    }
    // Walk toward the leftmost escape. At an uncovered node, a missing child 0
    // means no cell reaches below the current prefix extended with zeros, so
    // the prefix itself already names an excluded point.
    Stem prefix;
    std::int64_t cur = 0;
    for (;;) {
        const Node& n = nodes_[cur];
        std::int64_t c0 = n.child[0];
        if (c0 < 0) {
            return prefix;
        }
        if (!nodes_[c0].covered) {
            prefix.push_back(0);
            cur = c0;
            continue;
        }
        // Left subtree fully covered; the escape is on the right.
        std::int64_t c1 = n.child[1];
        prefix.push_back(1);
        if (c1 < 0) {
            return prefix;
        }
        // c1 cannot be covered here, or saturation would have covered `cur`.
        cur = c1;
    }
}

Dyadic CoverTrie::subtree_measure(std::int64_t idx, std::uint64_t depth) const {
    Dyadic total;
    std::vector<std::pair<std::int64_t, std::uint64_t>> stack;
    stack.emplace_back(idx, depth);
    while (!stack.empty()) {
        auto [cur, d] = stack.back();
        stack.pop_back();
        const Node& n = nodes_[cur];
        if (n.covered) {
            total += Dyadic::pow2_neg(d);
            continue;
        }
        if (n.child[0] >= 0) stack.emplace_back(n.child[0], d + 1);
        if (n.child[1] >= 0) stack.emplace_back(n.child[1], d + 1);
    }
    return total;
}

}
