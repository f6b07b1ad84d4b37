#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fanzoo/functional.hpp"
#include "fanzoo/trees.hpp"

namespace fanzoo {

Functional2 make_const(std::uint64_t c);
Functional2 make_coord(std::uint64_t i);
// f(0) + ... + f(n-1)
Functional2 make_prefix_sum(std::uint64_t n);
// max of f over the window [start, start+len)
Functional2 make_max_window(std::uint64_t start, std::uint64_t len);
// f(f(i) + i): the second index read depends on the first bit read
Functional2 make_nested_index(std::uint64_t i);

// Least i such that the first i bits of the input form a stem outside T.
// Requires T to have an empty level within its stored depth, so the search
// always stops by that level.
Functional2 tree_bar_functional(const BinTree& T);

struct CatalogSpec {
    std::string name;  // const | coord | prefix_sum | max_window | nested_index | tree_bar | dsl
    std::vector<std::uint64_t> params;
    std::optional<BinTree> tree;       // tree_bar only
    std::optional<std::string> source; // dsl only
};

// Unknown names and wrong parameter counts are usage errors.
Functional2 make_catalog(const CatalogSpec& spec);

const std::vector<std::string>& catalog_names();

}
