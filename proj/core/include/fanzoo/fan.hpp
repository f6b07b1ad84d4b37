#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fanzoo/bitseq.hpp"
#include "fanzoo/cantor.hpp"
#include "fanzoo/functional.hpp"
#include "fanzoo/stem.hpp"
#include "fanzoo/trees.hpp"

namespace fanzoo {

struct MucOptions {
    EvalLimits eval;
    // Sieve nodes expanded before giving up on Y behaving continuously.
    std::uint64_t node_budget = 1'000'000;
};

// Uniform modulus: any two sequences agreeing on their first muc(Y) bits get
// equal Y-values. Computed by refining stems until every evaluation on the
// padded stem stays inside the stem; the returned bound is sound but not
// always the minimal modulus.
std::uint64_t muc(const Functional2& Y, const MucOptions& opt = {});

struct ThetaOutput {
    // Max of g over all padded stems at the modulus level.
    std::uint64_t bound = 0;
    // All points tau*0^w at level `bound`, in lexicographic order.
    std::vector<BitSeq> witnesses;
    // restrict(alpha, g(alpha)) for each witness, in the same order. Their
    // cells cover all of Cantor space.
    std::vector<Stem> witness_stems;
};

struct ThetaOptions {
    MucOptions muc;
    // Cap on 2^bound, the number of witnesses enumerated.
    std::uint64_t witness_budget = std::uint64_t(1) << 18;
};

ThetaOutput special_fan(const Functional2& g, const ThetaOptions& opt = {});

struct ImplicationVerdict {
    bool antecedent = false;
    bool consequent = false;
    bool holds = false;
};

// The covering-implication check against a tree: if every witness leaves T
// (its stem is not a node), then T must have an empty level at the bound.
// Requires T.depth >= out.bound.
ImplicationVerdict verify_scf(const Functional2& g, const ThetaOutput& out, const BinTree& T);

// Uniform-bar bound for (g, T): if restrict(alpha, g(alpha)) always leaves T,
// then T has no node at this level. The bound does not depend on T.
std::uint64_t fan_ef_bound(const Functional2& g, const BinTree& T, const ThetaOptions& opt = {});

struct CoverStage {
    BitSeq point;
    std::uint64_t value = 0;
    Stem stem;  // restrict(point, value)
};

struct CoverRun {
    std::vector<CoverStage> stages;
    // Stems of a measure-1 subcover, in the order the backward descent from
    // the top of the space found them; each appeared as some stage's stem.
    std::vector<Stem> subcover;
};

using StageObserver = std::function<void(const CoverStage&)>;

// Repeatedly evaluates F at the least point not yet covered, starting from
// 0^w, until the accumulated cells cover everything, then extracts a finite
// subcover by descending from 1^w through greatest-lower-bound points.
CoverRun greedy_cover(const Functional2& F, std::uint64_t stage_budget = 1'000'000,
                      const EvalLimits& limits = {}, const StageObserver& observer = {});

struct KappaOptions {
    MucOptions muc;
    // Cap on 2^muc, the number of stems swept.
    std::uint64_t enum_budget = std::uint64_t(1) << 21;
};

// Least zero of Y: sweeps the padded stems at the modulus level in
// lexicographic order and returns the first zero, which is then the least
// zero of Y in all of Cantor space; absent when Y has no zero.
std::optional<BitSeq> kappa_continuous(const Functional2& Y, const KappaOptions& opt = {});

}
