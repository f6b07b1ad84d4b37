#include "fanzoo/functional.hpp"

#include <atomic>
#include <utility>

#include "fanzoo/errors.hpp"

namespace fanzoo {

namespace {
std::atomic<std::uint64_t> g_evaluations{0};
std::atomic<std::uint64_t> g_bit_queries{0};
}

struct Functional2::State {
    std::string name;
    std::function<std::uint64_t(TracedInput&)> body;
};

TracedInput::TracedInput(const BitSeq& f, const EvalLimits& limits)
    : f_(f), budget_(limits.bit_query_budget) {}

int TracedInput::at(std::uint64_t i) {
    if (queries_ >= budget_) {
        throw resource_limit_error("bit query budget exhausted during evaluation");
    }
    ++queries_;
    g_bit_queries.fetch_add(1, std::memory_order_relaxed);
    inspected_.insert(i);
    return f_.at(i);
}

Functional2::Functional2(std::string name, std::function<std::uint64_t(TracedInput&)> body)
    : state_(std::make_shared<State>(State{std::move(name), std::move(body)})) {}

const std::string& Functional2::name() const {
    return state_->name;
}

std::uint64_t Functional2::operator()(const BitSeq& f, const EvalLimits& limits) const {
    return eval_traced(*this, f, limits).value;
}

EvalTrace eval_traced(const Functional2& Y, const BitSeq& f, const EvalLimits& limits) {
    g_evaluations.fetch_add(1, std::memory_order_relaxed);
    TracedInput input(f, limits);
    EvalTrace trace;
    trace.value = Y.state_->body(input);
    trace.inspected = std::move(input.inspected_);
    trace.depth = trace.inspected.empty() ? 0 : *trace.inspected.rbegin() + 1;
    return trace;
}

CostCounters cost_counters() {
    return CostCounters{g_evaluations.load(std::memory_order_relaxed),
                        g_bit_queries.load(std::memory_order_relaxed)};
}

void reset_cost_counters() {
    g_evaluations.store(0, std::memory_order_relaxed);
    g_bit_queries.store(0, std::memory_order_relaxed);
}

}
