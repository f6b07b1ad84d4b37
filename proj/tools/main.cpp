#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fanzoo/catalog.hpp"
#include "fanzoo/dsl.hpp"
#include "fanzoo/errors.hpp"
#include "fanzoo/weak_fan.hpp"
#include "report.hpp"

namespace {

using fanzoo::report::Json;

struct Opts {
    std::string dsl;
    std::string catalog;
    std::string tree_file;
    std::string gen;
    std::optional<std::uint64_t> depth;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> k;
    std::optional<std::uint64_t> budget;
    std::optional<std::uint64_t> level;
    std::string stems;
    bool auto_close = true;
    std::string variant = "theta";
    std::string out = "-";
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        throw fanzoo::usage_error(what + ": expected a natural number, got '" + s + "'");
    }
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        throw fanzoo::usage_error(what + ": number out of range: '" + s + "'");
    }
}

// "survival:3/4" fractions with power-of-two denominators.
fanzoo::Dyadic parse_probability(const std::string& s) {
    auto parts = split(s, '/');
    if (parts.size() == 1) {
        return fanzoo::Dyadic(parse_u64(parts[0], "probability"), 0);
    }
    if (parts.size() != 2) {
        throw fanzoo::usage_error("probability must look like N or N/D: '" + s + "'");
    }
    std::uint64_t num = parse_u64(parts[0], "probability numerator");
    std::uint64_t den = parse_u64(parts[1], "probability denominator");
    if (den == 0 || (den & (den - 1)) != 0) {
        throw fanzoo::usage_error("probability denominator must be a power of two: '" + s + "'");
    }
    std::uint64_t exp = 0;
    while ((std::uint64_t(1) << exp) != den) {
        ++exp;
    }
    return fanzoo::Dyadic(num, exp);
}

struct TreeSetup {
    fanzoo::BinTree tree;
    bool closure_added = false;
    std::uint64_t added_count = 0;
};

std::optional<TreeSetup> resolve_tree(const Opts& o, bool required) {
    if (!o.tree_file.empty() && !o.gen.empty()) {
        throw fanzoo::usage_error("give either --tree or --gen, not both");
    }
    if (!o.tree_file.empty()) {
        auto loaded = fanzoo::load_tree_file(o.tree_file, o.depth, o.auto_close);
        return TreeSetup{loaded.tree, loaded.closure_added, loaded.added_count};
    }
    if (!o.gen.empty()) {
        auto parts = split(o.gen, ':');
        const std::string& name = parts[0];
        const std::string arg = parts.size() > 1 ? parts[1] : "";
        if (parts.size() > 2) {
            throw fanzoo::usage_error("malformed generator spec: '" + o.gen + "'");
        }
        if (name == "full") {
            if (!o.depth) throw fanzoo::usage_error("full needs --depth");
            return TreeSetup{fanzoo::gen_full(*o.depth)};
        }
        if (name == "bar_at") {
            if (arg.empty()) throw fanzoo::usage_error("bar_at needs a level, e.g. bar_at:3");
            std::uint64_t level = parse_u64(arg, "bar level");
            std::uint64_t depth = o.depth.value_or(level);
            return TreeSetup{fanzoo::gen_bar_at(level, depth, o.seed)};
        }
        if (name == "survival") {
            if (!o.depth) throw fanzoo::usage_error("survival needs --depth");
            fanzoo::Dyadic p = arg.empty() ? fanzoo::Dyadic(3, 2) : parse_probability(arg);
            return TreeSetup{fanzoo::gen_survival(p, *o.depth, o.seed)};
        }
        if (name == "no_pattern") {
            if (arg.empty()) throw fanzoo::usage_error("no_pattern needs a pattern, e.g. no_pattern:11");
            if (!o.depth) throw fanzoo::usage_error("no_pattern needs --depth");
            return TreeSetup{fanzoo::gen_no_pattern(fanzoo::Stem::from_string(arg), *o.depth)};
        }
        throw fanzoo::usage_error("unknown generator: '" + name + "'");
    }
    if (required) {
        throw fanzoo::usage_error("this command needs a tree: give --tree or --gen");
    }
    return std::nullopt;
}

fanzoo::Functional2 resolve_functional(const Opts& o, const std::optional<TreeSetup>& tree) {
    if (!o.dsl.empty() && !o.catalog.empty()) {
        throw fanzoo::usage_error("give either --dsl or --catalog, not both");
    }
    if (!o.dsl.empty()) {
        return fanzoo::dsl::compile(fanzoo::dsl::parse(o.dsl));
    }
    if (o.catalog.empty()) {
        throw fanzoo::usage_error("this command needs a functional: give --dsl or --catalog");
    }
    auto parts = split(o.catalog, ':');
    if (parts.size() > 2) {
        throw fanzoo::usage_error("malformed catalog spec: '" + o.catalog + "'");
    }
    fanzoo::CatalogSpec spec;
    spec.name = parts[0];
    if (parts.size() == 2 && !parts[1].empty()) {
        for (const auto& p : split(parts[1], ',')) {
            spec.params.push_back(parse_u64(p, "catalog parameter"));
        }
    }
    if (spec.name == "tree_bar") {
        if (!tree) {
            throw fanzoo::usage_error("tree_bar needs a tree: give --tree or --gen");
        }
        spec.tree = tree->tree;
    }
    return fanzoo::make_catalog(spec);
}

std::vector<fanzoo::Stem> parse_stems(const std::string& s) {
    if (s.empty()) {
        throw fanzoo::usage_error("measure needs --stems");
    }
    std::vector<fanzoo::Stem> stems;
    for (const auto& tok : split(s, ',')) {
        // "-" names the empty stem, whose cell is the whole space.
        stems.push_back(tok == "-" ? fanzoo::Stem() : fanzoo::Stem::from_string(tok));
    }
    return stems;
}

fanzoo::EvalLimits eval_limits(const Opts& o) {
    fanzoo::EvalLimits l;
    if (o.budget) l.bit_query_budget = *o.budget;
    return l;
}

fanzoo::MucOptions muc_options(const Opts& o) {
    fanzoo::MucOptions m;
    m.eval = eval_limits(o);
    if (o.budget) m.node_budget = *o.budget;
    return m;
}

fanzoo::ThetaOptions theta_options(const Opts& o) {
    fanzoo::ThetaOptions t;
    t.muc = muc_options(o);
    if (o.budget) t.witness_budget = *o.budget;
    return t;
}

fanzoo::KappaOptions kappa_options(const Opts& o) {
    fanzoo::KappaOptions k;
    k.muc = muc_options(o);
    if (o.budget) k.enum_budget = *o.budget;
    return k;
}

Json config_json(const std::string& command, const Opts& o) {
    Json c;
    c["command"] = command;
    if (!o.dsl.empty()) c["dsl"] = o.dsl;
    if (!o.catalog.empty()) c["catalog"] = o.catalog;
    if (!o.tree_file.empty()) c["tree"] = o.tree_file;
    if (!o.gen.empty()) c["gen"] = o.gen;
    if (o.depth) c["depth"] = *o.depth;
    c["seed"] = o.seed;
    if (o.k) c["k"] = *o.k;
    if (o.level) c["level"] = *o.level;
    if (!o.stems.empty()) c["stems"] = o.stems;
    c["auto_close"] = o.auto_close;
    if (command == "verify-wcf") c["variant"] = o.variant;
    if (o.budget) c["budget"] = *o.budget;
    return c;
}

Json tree_summary(const TreeSetup& t) {
    Json j;
    j["depth"] = t.tree.depth();
    j["node_count"] = t.tree.node_count();
    j["max_node_length"] = t.tree.max_node_length();
    j["closure_added"] = t.closure_added;
    if (t.closure_added) j["closure_added_count"] = t.added_count;
    return j;
}

std::uint64_t require_k(const Opts& o) {
    if (!o.k) {
        throw fanzoo::usage_error("this command needs --k");
    }
    return *o.k;
}

std::uint64_t require_level(const Opts& o) {
    if (!o.level) {
        throw fanzoo::usage_error("this command needs --level");
    }
    return *o.level;
}

Json lambda_summary(const fanzoo::LambdaOutput& out) {
    Json j;
    j["bound"] = out.bound;
    j["witness_count"] = out.witnesses.size();
    Json ws = Json::array();
    for (const auto& w : out.witnesses) {
        ws.push_back(fanzoo::report::bitseq_json(w));
    }
    j["witnesses"] = std::move(ws);
    j["witness_stems"] = fanzoo::report::stem_list_json(out.witness_stems);
    j["achieved_measure"] = fanzoo::report::dyadic_json(out.achieved_measure);
    return j;
}

// Runs one subcommand; partial stage traces survive a resource-limit stop.
Json run_command(const std::string& command, const Opts& o, Json* partial) {
    Json result;
    if (command == "muc") {
        auto tree = resolve_tree(o, false);
        auto g = resolve_functional(o, tree);
        result["functional"] = g.name();
        result["muc"] = fanzoo::muc(g, muc_options(o));
    } else if (command == "theta") {
        auto tree = resolve_tree(o, false);
        auto g = resolve_functional(o, tree);
        auto out = fanzoo::special_fan(g, theta_options(o));
        result["functional"] = g.name();
        result["bound"] = out.bound;
        result["witness_count"] = out.witnesses.size();
        Json ws = Json::array();
        for (const auto& w : out.witnesses) {
            ws.push_back(fanzoo::report::bitseq_json(w));
        }
        result["witnesses"] = std::move(ws);
        result["cover_stems"] = fanzoo::report::stem_list_json(out.witness_stems);
        result["cover_measure"] = fanzoo::report::dyadic_json(fanzoo::union_measure(out.witness_stems));
    } else if (command == "lambda") {
        auto tree = resolve_tree(o, false);
        auto g = resolve_functional(o, tree);
        auto out = fanzoo::lambda_from_theta(g, require_k(o), theta_options(o));
        result["functional"] = g.name();
        result["k"] = *o.k;
        result.update(lambda_summary(out));
    } else if (command == "lambda-greedy") {
        auto tree = resolve_tree(o, false);
        auto g = resolve_functional(o, tree);
        fanzoo::LambdaGreedyOptions lo;
        lo.eval = eval_limits(o);
        if (o.budget) lo.candidate_budget = *o.budget;
        Json stages = Json::array();
        auto observer = [&](const fanzoo::LambdaStage& st) {
            Json s;
            s["point"] = fanzoo::report::bitseq_json(st.point);
            s["value"] = st.value;
            s["stem"] = st.stem.to_string();
            s["measure_after"] = fanzoo::report::dyadic_json(st.measure_after);
            stages.push_back(std::move(s));
            (*partial)["stages"] = stages;
        };
        auto out = fanzoo::lambda_greedy(g, require_k(o), lo, observer);
        result["functional"] = g.name();
        result["k"] = *o.k;
        result.update(lambda_summary(out));
        result["stages"] = std::move(stages);
    } else if (command == "greedy-cover") {
        auto tree = resolve_tree(o, false);
        auto g = resolve_functional(o, tree);
        std::uint64_t stage_budget = o.budget.value_or(1'000'000);
        Json stages = Json::array();
        auto observer = [&](const fanzoo::CoverStage& st) {
            Json s;
            s["point"] = fanzoo::report::bitseq_json(st.point);
            s["value"] = st.value;
            s["stem"] = st.stem.to_string();
            stages.push_back(std::move(s));
            (*partial)["stages"] = stages;
        };
        auto run = fanzoo::greedy_cover(g, stage_budget, eval_limits(o), observer);
        result["functional"] = g.name();
        result["stage_count"] = run.stages.size();
        result["stages"] = std::move(stages);
        result["subcover"] = fanzoo::report::stem_list_json(run.subcover);
        result["subcover_measure"] =
            fanzoo::report::dyadic_json(fanzoo::union_measure(run.subcover));
    } else if (command == "kappa") {
        auto tree = resolve_tree(o, false);
        auto g = resolve_functional(o, tree);
        auto zero = fanzoo::kappa_continuous(g, kappa_options(o));
        result["functional"] = g.name();
        result["found"] = zero.has_value();
        if (zero) {
            result["zero"] = fanzoo::report::bitseq_json(*zero);
        }
    } else if (command == "measure") {
        auto stems = parse_stems(o.stems);
        result["stems"] = fanzoo::report::stem_list_json(stems);
        result["measure"] = fanzoo::report::dyadic_json(fanzoo::union_measure(stems));
    } else if (command == "bar") {
        auto tree = resolve_tree(o, true);
        std::uint64_t level = require_level(o);
        result["tree"] = tree_summary(*tree);
        result["level"] = level;
        result["is_bar"] = fanzoo::is_bar_at(tree->tree, level);
    } else if (command == "path") {
        auto tree = resolve_tree(o, true);
        std::uint64_t level = require_level(o);
        auto path = fanzoo::find_path(tree->tree, level);
        result["tree"] = tree_summary(*tree);
        result["level"] = level;
        result["found"] = path.has_value();
        if (path) {
            result["path"] = path->to_string();
        }
    } else if (command == "verify-scf") {
        auto tree = resolve_tree(o, true);
        auto g = resolve_functional(o, tree);
        auto out = fanzoo::special_fan(g, theta_options(o));
        auto verdict = fanzoo::verify_scf(g, out, tree->tree);
        result["functional"] = g.name();
        result["tree"] = tree_summary(*tree);
        Json th;
        th["bound"] = out.bound;
        th["witness_count"] = out.witnesses.size();
        th["cover_measure"] =
            fanzoo::report::dyadic_json(fanzoo::union_measure(out.witness_stems));
        result["theta"] = std::move(th);
        result["verdict"] = fanzoo::report::verdict_json(verdict);
    } else if (command == "verify-wcf") {
        auto tree = resolve_tree(o, true);
        auto g = resolve_functional(o, tree);
        std::uint64_t k = require_k(o);
        fanzoo::LambdaOutput out;
        if (o.variant == "theta") {
            out = fanzoo::lambda_from_theta(g, k, theta_options(o));
        } else if (o.variant == "greedy") {
            fanzoo::LambdaGreedyOptions lo;
            lo.eval = eval_limits(o);
            if (o.budget) lo.candidate_budget = *o.budget;
            out = fanzoo::lambda_greedy(g, k, lo);
        } else {
            throw fanzoo::usage_error("--variant must be theta or greedy");
        }
        auto verdict = fanzoo::verify_wcf(g, k, out, tree->tree);
        result["functional"] = g.name();
        result["tree"] = tree_summary(*tree);
        result["k"] = k;
        result["variant"] = o.variant;
        Json lam;
        lam["bound"] = out.bound;
        lam["witness_count"] = out.witnesses.size();
        lam["achieved_measure"] = fanzoo::report::dyadic_json(out.achieved_measure);
        result["lambda"] = std::move(lam);
        result["verdict"] = fanzoo::report::verdict_json(verdict);
    } else {
        throw fanzoo::usage_error("unknown command: " + command);
    }
    return result;
}

void write_report(const Opts& o, const Json& report) {
    std::string text = fanzoo::report::dump(report);
    if (o.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
        throw fanzoo::usage_error("cannot open output file: " + o.out);
    }
    f << text;
}

void add_common_options(CLI::App* cmd, Opts& o) {
    cmd->add_option("--dsl", o.dsl, "Functional as expression source, e.g. \"f[0]+1\"");
    cmd->add_option("--catalog", o.catalog, "Functional by name, e.g. coord:3 or tree_bar");
    cmd->add_option("--tree", o.tree_file, "Tree file (one {0,1} line per stem, root implicit)");
    cmd->add_option("--gen", o.gen,
                    "Tree generator: full | bar_at:L | survival[:N/D] | no_pattern:BITS");
    cmd->add_option("--depth", o.depth, "Tree depth");
    cmd->add_option("--seed", o.seed, "Generator seed");
    cmd->add_option("--k", o.k, "Measure threshold parameter (>= 1)");
    cmd->add_option("--budget", o.budget, "Cap on every internal budget of this command");
    cmd->add_option("--level", o.level, "Level to query (bar, path)");
    cmd->add_option("--stems", o.stems, "Comma-separated stems; \"-\" is the empty stem");
    cmd->add_option("--auto-close", o.auto_close,
                    "Close tree files under prefixes instead of rejecting them");
    cmd->add_option("--variant", o.variant, "verify-wcf witness source: theta | greedy");
    cmd->add_option("--out", o.out, "Report path, or - for stdout");
}

}

int main(int argc, char** argv) {
    CLI::App app{"Fan functionals, covers, and tree measures over Cantor space"};
    app.require_subcommand(1);

    Opts opts;
    static const std::vector<std::string> commands{
        "muc",          "theta", "lambda", "lambda-greedy", "greedy-cover", "kappa",
        "measure",      "bar",   "path",   "verify-scf",    "verify-wcf"};
    for (const auto& name : commands) {
        add_common_options(app.add_subcommand(name), opts);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    fanzoo::reset_cost_counters();
    auto start = std::chrono::steady_clock::now();

    Json partial = Json::object();
    int exit_code = 0;
    Json report;
    try {
        Json result = run_command(command, opts, &partial);
        report = fanzoo::report::envelope(command, config_json(command, opts), std::move(result));
    } catch (const std::exception& e) {
        const char* type = "internal";
        if (dynamic_cast<const fanzoo::usage_error*>(&e)) {
            type = "usage";
            exit_code = 1;
        } else if (dynamic_cast<const fanzoo::resource_limit_error*>(&e)) {
            type = "resource_limit";
            exit_code = 2;
        } else if (dynamic_cast<const fanzoo::precondition_error*>(&e)) {
            type = "precondition";
            exit_code = 3;
        } else {
            exit_code = 1;
        }
        Json err;
        err["type"] = type;
        err["message"] = e.what();
        report = fanzoo::report::envelope(command, config_json(command, opts), Json::object());
        report["error"] = std::move(err);
        if (!partial.empty()) {
            report["partial"] = std::move(partial);
        }
    }

    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);

    try {
        write_report(opts, report);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    // Wall-clock stays on stderr so report bytes depend only on the config.
    std::cerr << command << (exit_code == 0 ? ": ok" : ": error") << " (" << elapsed.count()
              << " ms)\n";
    return exit_code;
}
