#include "fanzoo/fan.hpp"

#include <algorithm>
#include <utility>

#include "fanzoo/cover_trie.hpp"
#include "fanzoo/errors.hpp"

namespace fanzoo {

std::uint64_t muc(const Functional2& Y, const MucOptions& opt) {
    // Depth-first refinement. A stem is a leaf once the evaluation on its
    // zero-padding only inspects bits inside the stem; Y is then constant on
    // the stem's whole cell, and the answer is the deepest leaf.
    std::uint64_t bound = 0;
    std::uint64_t expanded = 0;
    std::vector<Stem> stack{Stem()};
    while (!stack.empty()) {
        Stem s = std::move(stack.back());
        stack.pop_back();
        if (++expanded > opt.node_budget) {
            throw resource_limit_error("modulus sieve node budget exhausted");
        }
        EvalTrace t = eval_traced(Y, pad_zero(s), opt.eval);
        if (t.depth <= s.size()) {
            bound = std::max(bound, s.size());
            continue;
        }
        Stem s0 = s;
        s0.push_back(0);
        Stem s1 = std::move(s);
        s1.push_back(1);
        stack.push_back(std::move(s1));
        stack.push_back(std::move(s0));
    }
    return bound;
}

ThetaOutput special_fan(const Functional2& g, const ThetaOptions& opt) {
    const std::uint64_t n = muc(g, opt.muc);
    if (n >= 63 || (std::uint64_t(1) << n) > opt.witness_budget) {
        throw resource_limit_error("witness budget exhausted at the modulus level");
    }
    std::uint64_t bound = 0;
    for (std::uint64_t v = 0; v < (std::uint64_t(1) << n); ++v) {
        bound = std::max(bound, g(pad_zero(Stem::of_index(v, n)), opt.muc.eval));
    }
    if (bound >= 63 || (std::uint64_t(1) << bound) > opt.witness_budget) {
        throw resource_limit_error("witness budget exhausted at the output level");
    }
    ThetaOutput out;
    out.bound = bound;
    out.witnesses.reserve(std::size_t(1) << bound);
    out.witness_stems.reserve(std::size_t(1) << bound);
    for (std::uint64_t v = 0; v < (std::uint64_t(1) << bound); ++v) {
        BitSeq alpha = pad_zero(Stem::of_index(v, bound));
        std::uint64_t value = g(alpha, opt.muc.eval);
        out.witness_stems.push_back(restrict(alpha, value));
        out.witnesses.push_back(std::move(alpha));
    }
    return out;
}

ImplicationVerdict verify_scf(const Functional2& g, const ThetaOutput& out, const BinTree& T) {
    (void)g;  // the witness stems already carry the g-values
    if (T.depth() < out.bound) {
        throw precondition_error("tree depth below the cover bound");
    }
    ImplicationVerdict v;
    v.antecedent = true;
    for (const auto& s : out.witness_stems) {
        if (T.contains(s)) {
            v.antecedent = false;
            break;
        }
    }
    v.consequent = is_bar_at(T, out.bound);
    v.holds = !v.antecedent || v.consequent;
    return v;
}

std::uint64_t fan_ef_bound(const Functional2& g, const BinTree& T, const ThetaOptions& opt) {
    (void)T;  // the bound is uniform in the tree
    return special_fan(g, opt).bound;
}

CoverRun greedy_cover(const Functional2& F, std::uint64_t stage_budget,
                      const EvalLimits& limits, const StageObserver& observer) {
    CoverRun run;
    CoverTrie trie;
    BitSeq point = BitSeq::zeros();
    for (;;) {
        if (run.stages.size() >= stage_budget) {
            throw resource_limit_error("stage budget exhausted before the cover closed");
        }
        CoverStage stage{point, F(point, limits), Stem()};
        stage.stem = restrict(point, stage.value);
        if (observer) {
            observer(stage);
        }
        trie.insert(stage.stem);
        run.stages.push_back(std::move(stage));
        auto next = trie.least_excluded_stem();
        if (!next) {
            break;
        }
        point = pad_zero(*next);
    }

    // Backward descent: take the first stage whose cell contains the current
    // point, then jump to the greatest point below that whole cell. Each cell
    // is a lexicographic interval, so the walk reaches the bottom cell after
    // finitely many hops and the collected stems cover everything.
    BitSeq p = BitSeq::ones();
    for (std::size_t hops = 0; hops <= run.stages.size(); ++hops) {
        const CoverStage* capture = nullptr;
        for (const auto& st : run.stages) {
            if (restrict(p, st.stem.size()) == st.stem) {
                capture = &st;
                break;
            }
        }
        if (capture == nullptr) {
            throw resource_limit_error("cover descent left the covered region");
        }
        run.subcover.push_back(capture->stem);
        auto below = glb_of_neighborhood(capture->stem);
        if (!below) {
            return run;
        }
        p = *below;
    }
    throw resource_limit_error("cover descent failed to terminate");
}

std::optional<BitSeq> kappa_continuous(const Functional2& Y, const KappaOptions& opt) {
    const std::uint64_t n = muc(Y, opt.muc);
    if (n >= 63 || (std::uint64_t(1) << n) > opt.enum_budget) {
        throw resource_limit_error("enumeration budget exhausted at the modulus level");
    }
    for (std::uint64_t v = 0; v < (std::uint64_t(1) << n); ++v) {
        BitSeq f = pad_zero(Stem::of_index(v, n));
        if (Y(f, opt.muc.eval) == 0) {
            return f;
        }
    }
    return std::nullopt;
}

}
