#include "report.hpp"

#include <limits>
#include <stdexcept>

namespace fanzoo::report {

Json dyadic_json(const Dyadic& d) {
    Json j;
    if (d.num() <= std::numeric_limits<std::uint64_t>::max()) {
        j["num"] = d.num().convert_to<std::uint64_t>();
    } else {
        j["num"] = d.num().str();
    }
    j["exp"] = d.exp();
    return j;
}

Json bitseq_json(const BitSeq& f) {
    auto form = f.eventual_form();
    if (!form) {
        throw std::logic_error("only eventually-constant sequences appear in reports");
    }
    // Shortest head: trailing bits equal to the tail are redundant.
    std::uint64_t n = form->head.size();
    while (n > 0 && form->head.at(n - 1) == form->tail_bit) {
        --n;
    }
    Json j;
    j["stem"] = form->head.prefix(n).to_string();
    j["tail"] = form->tail_bit == 0 ? "0^w" : "1^w";
    return j;
}

Json stem_list_json(const std::vector<Stem>& stems) {
    Json arr = Json::array();
    for (const auto& s : stems) {
        arr.push_back(s.to_string());
    }
    return arr;
}

Json verdict_json(const ImplicationVerdict& v) {
    Json j;
    j["antecedent"] = v.antecedent;
    j["consequent"] = v.consequent;
    j["holds"] = v.holds;
    return j;
}

Json envelope(const std::string& command, Json config, Json result) {
    Json j;
    j["schema_version"] = schema_version;
    j["command"] = command;
    j["config"] = std::move(config);
    j["result"] = std::move(result);
    CostCounters c = cost_counters();
    Json cost;
    cost["evaluations"] = c.evaluations;
    cost["bit_queries"] = c.bit_queries;
    j["cost"] = std::move(cost);
    return j;
}

std::string dump(const Json& j) {
    return j.dump(2) + "\n";
}

}
