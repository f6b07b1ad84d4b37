#include "fanzoo/weak_fan.hpp"

#include <algorithm>
#include <utility>

#include "fanzoo/cantor.hpp"
#include "fanzoo/cover_trie.hpp"
#include "fanzoo/errors.hpp"

namespace fanzoo {

namespace {

void require_k(std::uint64_t k) {
    if (k < 1) {
        throw precondition_error("threshold parameter k must be at least 1");
    }
}

// measure >= 1 - 1/k, decided exactly: the uncovered remainder is at most 1/k.
bool threshold_reached(const Dyadic& measure, std::uint64_t k) {
    return (Dyadic::one() - measure).cmp_ratio(1, k) <= 0;
}

}

LambdaOutput lambda_from_theta(const Functional2& g, std::uint64_t k, const ThetaOptions& opt) {
    require_k(k);
    ThetaOutput theta = special_fan(g, opt);
    LambdaOutput out;
    out.bound = theta.bound;
    out.witnesses = std::move(theta.witnesses);
    out.witness_stems = std::move(theta.witness_stems);
    out.achieved_measure = union_measure(out.witness_stems);
    return out;
}

LambdaOutput lambda_greedy(const Functional2& g, std::uint64_t k,
                           const LambdaGreedyOptions& opt, const LambdaObserver& observer) {
    require_k(k);
    LambdaOutput out;
    CoverTrie trie;
    std::uint64_t examined = 0;
    for (std::uint64_t len = 0; !threshold_reached(trie.measure(), k); ++len) {
        if (len >= 63) {
            throw resource_limit_error("candidate budget exhausted before the threshold");
        }
        for (std::uint64_t v = 0; v < (std::uint64_t(1) << len); ++v) {
            if (threshold_reached(trie.measure(), k)) {
                break;
            }
            if (++examined > opt.candidate_budget) {
                throw resource_limit_error("candidate budget exhausted before the threshold");
            }
            BitSeq f = pad_zero(Stem::of_index(v, len));
            if (trie.covers(f)) {
                continue;
            }
            std::uint64_t value = g(f, opt.eval);
            Stem stem = restrict(f, value);
            trie.insert(stem);
            out.bound = std::max(out.bound, value);
            if (observer) {
                observer(LambdaStage{f, value, stem, trie.measure()});
            }
            out.witnesses.push_back(std::move(f));
            out.witness_stems.push_back(std::move(stem));
        }
    }
    out.achieved_measure = trie.measure();
    return out;
}

ImplicationVerdict verify_wcf(const Functional2& g, std::uint64_t k,
                              const LambdaOutput& out, const BinTree& T) {
    (void)g;  // the witness stems already carry the g-values
    require_k(k);
    if (T.depth() < out.bound) {
        throw precondition_error("tree depth below the witness bound");
    }
    ImplicationVerdict v;
    v.antecedent = true;
    for (const auto& s : out.witness_stems) {
        if (T.contains(s)) {
            v.antecedent = false;
            break;
        }
    }
    v.consequent = false;
    for (std::uint64_t n = 0; n <= out.bound; ++n) {
        if (level_density(T, n).cmp_ratio(1, k) <= 0) {
            v.consequent = true;
            break;
        }
    }
    v.holds = !v.antecedent || v.consequent;
    return v;
}

}
