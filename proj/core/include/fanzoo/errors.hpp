#pragma once

#include <stdexcept>
#include <string>

namespace fanzoo {

// Bad arguments, malformed syntax, or an unknown name. CLI exit code 1.
struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A step, stage, or node budget ran out before the computation finished.
// CLI exit code 2. Partial traces may still be available to the caller.
struct resource_limit_error : std::runtime_error {
    explicit resource_limit_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A documented precondition does not hold for the given inputs. CLI exit code 3.
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

}
