#include "fanzoo/catalog.hpp"

#include <algorithm>

#include "fanzoo/dsl.hpp"
#include "fanzoo/errors.hpp"

namespace fanzoo {

Functional2 make_const(std::uint64_t c) {
    return Functional2("const(" + std::to_string(c) + ")",
                       [c](TracedInput&) { return c; });
}

Functional2 make_coord(std::uint64_t i) {
    return Functional2("coord(" + std::to_string(i) + ")",
                       [i](TracedInput& f) { return static_cast<std::uint64_t>(f.at(i)); });
}

Functional2 make_prefix_sum(std::uint64_t n) {
    return Functional2("prefix_sum(" + std::to_string(n) + ")", [n](TracedInput& f) {
        std::uint64_t sum = 0;
        for (std::uint64_t i = 0; i < n; ++i) {
            sum += static_cast<std::uint64_t>(f.at(i));
        }
        return sum;
    });
}

Functional2 make_max_window(std::uint64_t start, std::uint64_t len) {
    if (len < 1) {
        throw usage_error("max_window needs a window of length at least 1");
    }
    return Functional2("max_window(" + std::to_string(start) + "," + std::to_string(len) + ")",
                       [start, len](TracedInput& f) {
                           std::uint64_t best = 0;
                           for (std::uint64_t i = 0; i < len; ++i) {
                               best = std::max(best, static_cast<std::uint64_t>(f.at(start + i)));
                           }
                           return best;
                       });
}

Functional2 make_nested_index(std::uint64_t i) {
    return Functional2("nested_index(" + std::to_string(i) + ")", [i](TracedInput& f) {
        std::uint64_t first = static_cast<std::uint64_t>(f.at(i));
        return static_cast<std::uint64_t>(f.at(first + i));
    });
}

Functional2 tree_bar_functional(const BinTree& T) {
    if (T.max_node_length() >= T.depth()) {
        throw precondition_error("tree has nodes at every stored level, so the search may not stop");
    }
    const std::uint64_t stop = T.max_node_length() + 1;
    return Functional2("tree_bar(bar=" + std::to_string(stop) + ")", [T, stop](TracedInput& f) {
        Stem s;
        for (std::uint64_t i = 0;; ++i) {
            if (!T.contains(s)) {
                return i;
            }
            // Every node of T has length at most stop - 1.
            if (i >= stop) {
                throw precondition_error("tree membership did not fail by the empty level");
            }
            s.push_back(f.at(i));
        }
    });
}

Functional2 make_catalog(const CatalogSpec& spec) {
    auto want = [&](std::size_t n) {
        if (spec.params.size() != n) {
            throw usage_error(spec.name + " takes " + std::to_string(n) + " parameter(s), got " +
                              std::to_string(spec.params.size()));
        }
    };
    if (spec.name == "const") {
        want(1);
        return make_const(spec.params[0]);
    }
    if (spec.name == "coord") {
        want(1);
        return make_coord(spec.params[0]);
    }
    if (spec.name == "prefix_sum") {
        want(1);
        return make_prefix_sum(spec.params[0]);
    }
    if (spec.name == "max_window") {
        want(2);
        return make_max_window(spec.params[0], spec.params[1]);
    }
    if (spec.name == "nested_index") {
        want(1);
        return make_nested_index(spec.params[0]);
    }
    if (spec.name == "tree_bar") {
        want(0);
        if (!spec.tree) {
            throw usage_error("tree_bar needs a tree");
        }
        return tree_bar_functional(*spec.tree);
    }
    if (spec.name == "dsl") {
        want(0);
        if (!spec.source) {
            throw usage_error("dsl needs source text");
        }
        return dsl::compile(dsl::parse(*spec.source));
    }
    throw usage_error("unknown functional name: " + spec.name);
}

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names{
        "const", "coord", "prefix_sum", "max_window", "nested_index", "tree_bar", "dsl"};
    return names;
}

}
