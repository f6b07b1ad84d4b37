#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string>

#include "fanzoo/bitseq.hpp"

namespace fanzoo {

struct EvalLimits {
    // Bit queries allowed within one evaluation before it is declared to have
    // escaped the continuous fragment.
    std::uint64_t bit_query_budget = 1'000'000;
};

struct EvalTrace {
    std::uint64_t value = 0;
    std::set<std::uint64_t> inspected;
    // 1 + max inspected index; 0 when nothing was inspected. The value is a
    // function of the bits below this depth only.
    std::uint64_t depth = 0;
};

// The view of a sequence handed to an evaluator body: records every index
// read and enforces the query budget.
class TracedInput {
public:
    int at(std::uint64_t i);

private:
    friend EvalTrace eval_traced(const class Functional2&, const BitSeq&, const EvalLimits&);
    TracedInput(const BitSeq& f, const EvalLimits& limits);

    const BitSeq& f_;
    std::uint64_t budget_;
    std::uint64_t queries_ = 0;
    std::set<std::uint64_t> inspected_;
};

// A named total map from sequences to naturals. Bodies must be pure: the
// result may depend only on bits read through the TracedInput.
class Functional2 {
public:
    Functional2(std::string name, std::function<std::uint64_t(TracedInput&)> body);

    const std::string& name() const;
    std::uint64_t operator()(const BitSeq& f, const EvalLimits& limits = {}) const;

private:
    friend EvalTrace eval_traced(const Functional2&, const BitSeq&, const EvalLimits&);
    struct State;
    std::shared_ptr<const State> state_;
};

EvalTrace eval_traced(const Functional2& Y, const BitSeq& f, const EvalLimits& limits = {});

// Process-wide deterministic cost counters, used for reporting.
struct CostCounters {
    std::uint64_t evaluations = 0;
    std::uint64_t bit_queries = 0;
};

CostCounters cost_counters();
void reset_cost_counters();

}
