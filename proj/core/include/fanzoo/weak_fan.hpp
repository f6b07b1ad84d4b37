#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fanzoo/dyadic.hpp"
#include "fanzoo/fan.hpp"

namespace fanzoo {

struct LambdaOutput {
    // Max g-value over the used witnesses; every witness stem has at most
    // this length.
    std::uint64_t bound = 0;
    std::vector<BitSeq> witnesses;
    // restrict(alpha, g(alpha)) per witness, in order.
    std::vector<Stem> witness_stems;
    // Exact measure of the union of the witness stems' cells; at least
    // 1 - 1/k by construction.
    Dyadic achieved_measure;
};

// Full-cover answer: reuses the covering witness set, whose measure 1 meets
// every threshold. Requires k >= 1.
LambdaOutput lambda_from_theta(const Functional2& g, std::uint64_t k,
                               const ThetaOptions& opt = {});

struct LambdaGreedyOptions {
    EvalLimits eval;
    // Candidate points examined (including skipped ones) before giving up.
    std::uint64_t candidate_budget = 1'000'000;
};

struct LambdaStage {
    BitSeq point;
    std::uint64_t value = 0;
    Stem stem;
    Dyadic measure_after;
};

using LambdaObserver = std::function<void(const LambdaStage&)>;

// Measure-threshold answer: walks candidate points tau*0^w in order of
// length then rank, skips points already covered, accumulates each new
// point's cell, and stops as soon as the measure reaches 1 - 1/k. For k = 1
// the threshold is 0 and the witness list is empty. Requires k >= 1.
LambdaOutput lambda_greedy(const Functional2& g, std::uint64_t k,
                           const LambdaGreedyOptions& opt = {},
                           const LambdaObserver& observer = {});

// The thin-level implication check against a tree: if every witness leaves T,
// then some level up to the bound has density at most 1/k.
// Requires T.depth >= out.bound and k >= 1.
ImplicationVerdict verify_wcf(const Functional2& g, std::uint64_t k,
                              const LambdaOutput& out, const BinTree& T);

}
