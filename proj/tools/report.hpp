#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "fanzoo/bitseq.hpp"
#include "fanzoo/dyadic.hpp"
#include "fanzoo/fan.hpp"
#include "fanzoo/functional.hpp"
#include "fanzoo/stem.hpp"

namespace fanzoo::report {

// Insertion-ordered JSON keeps report bytes stable across runs.
using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

// {"num": ..., "exp": ...}; num is a JSON integer when it fits 64 bits,
// otherwise a decimal string.
Json dyadic_json(const Dyadic& d);

// {"stem": "...", "tail": "0^w" | "1^w"} with the shortest head describing
// the point. Only eventually-constant sequences are serializable.
Json bitseq_json(const BitSeq& f);

Json stem_list_json(const std::vector<Stem>& stems);

Json verdict_json(const ImplicationVerdict& v);

// Report envelope: schema version, command, echoed config, result, counters.
Json envelope(const std::string& command, Json config, Json result);

std::string dump(const Json& j);

}
