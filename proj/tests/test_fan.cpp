#include <doctest.h>

#include <vector>

#include <fanzoo/catalog.hpp>
#include <fanzoo/dsl.hpp>
#include <fanzoo/errors.hpp>
#include <fanzoo/fan.hpp>

#include "oracles.hpp"

using namespace fanzoo;

namespace {

std::vector<Functional2> small_corpus() {
    return {make_const(0),      make_const(3),           make_coord(0),
            make_coord(3),      make_prefix_sum(4),      make_max_window(1, 3),
            make_nested_index(0), make_nested_index(2),
            dsl::compile(dsl::parse("f[0]+1")),
            dsl::compile(dsl::parse("if0(f[2], f[0], f[3]+1)")),
            dsl::compile(dsl::parse("f[f[0]+1]"))};
}

}  // namespace

TEST_CASE("muc frozen values") {
    CHECK(muc(make_const(0)) == 0);
    CHECK(muc(make_const(9)) == 0);
    CHECK(muc(make_coord(0)) == 1);
    CHECK(muc(make_coord(1)) == 2);
    CHECK(muc(make_prefix_sum(3)) == 3);
    CHECK(muc(make_max_window(1, 3)) == 4);
    CHECK(muc(make_nested_index(0)) == 2);
    CHECK(muc(dsl::compile(dsl::parse("f[0]+1"))) == 1);
    CHECK(muc(dsl::compile(dsl::parse("f[f[0]+1]"))) == 3);
}

TEST_CASE("muc is a sound modulus and not far from minimal") {
    for (const auto& y : small_corpus()) {
        const std::uint64_t n = muc(y);
        REQUIRE(n <= 12);
        CHECK(oracles::constant_on_cells(y, n, 5));
        CHECK(oracles::minimal_modulus(y, n, 5) <= n);
        if (n > 0) CHECK(!oracles::constant_on_cells(y, oracles::minimal_modulus(y, n, 5) - 1, 5));
    }
}

TEST_CASE("muc respects its node budget") {
    MucOptions opt;
    opt.node_budget = 3;
    CHECK_THROWS_AS(muc(make_coord(5), opt), fanzoo::resource_limit_error);
}

TEST_CASE("special fan frozen outputs") {
    const auto out = special_fan(dsl::compile(dsl::parse("f[0]+1")));
    CHECK(out.bound == 2);
    REQUIRE(out.witnesses.size() == 4);
    CHECK(restrict(out.witnesses[0], 2) == Stem::from_string("00"));
    CHECK(restrict(out.witnesses[1], 2) == Stem::from_string("01"));
    CHECK(restrict(out.witnesses[2], 2) == Stem::from_string("10"));
    CHECK(restrict(out.witnesses[3], 2) == Stem::from_string("11"));
    REQUIRE(out.witness_stems.size() == 4);
    CHECK(out.witness_stems[0] == Stem::from_string("0"));
    CHECK(out.witness_stems[1] == Stem::from_string("0"));
    CHECK(out.witness_stems[2] == Stem::from_string("10"));
    CHECK(out.witness_stems[3] == Stem::from_string("11"));
    CHECK(union_measure(out.witness_stems) == Dyadic::one());

    const auto c0 = special_fan(make_const(0));
    CHECK(c0.bound == 0);
    REQUIRE(c0.witnesses.size() == 1);
    CHECK(c0.witness_stems[0] == Stem());

    const auto x1 = special_fan(make_coord(1));
    CHECK(x1.bound == 1);
    REQUIRE(x1.witnesses.size() == 2);
    CHECK(restrict(x1.witnesses[0], 1) == Stem::from_string("0"));
    CHECK(restrict(x1.witnesses[1], 1) == Stem::from_string("1"));
}

TEST_CASE("witness cells always cover the whole space") {
    for (const auto& g : small_corpus()) {
        const auto out = special_fan(g);
        CHECK(union_measure(out.witness_stems) == Dyadic::one());
        for (std::size_t i = 0; i < out.witnesses.size(); ++i) {
            CHECK(g(out.witnesses[i]) <= out.bound);
            CHECK(restrict(out.witnesses[i], out.witness_stems[i].size()) == out.witness_stems[i]);
        }
    }
}

TEST_CASE("special fan respects the witness budget") {
    ThetaOptions opt;
    opt.witness_budget = 2;
    CHECK_THROWS_AS(special_fan(make_prefix_sum(4), opt), fanzoo::resource_limit_error);
}

TEST_CASE("covering implication verdicts") {
    const Functional2 g = dsl::compile(dsl::parse("f[0]+1"));
    const auto out = special_fan(g);

    // a tree the witnesses all leave, barred within the bound
    const BinTree tiny = prefix_close({}, 2).tree;
    const auto v1 = verify_scf(g, out, tiny);
    CHECK(v1.antecedent);
    CHECK(v1.consequent);
    CHECK(v1.holds);

    // the full tree retains every witness stem, so the antecedent fails
    const BinTree full = gen_full(4);
    const auto v2 = verify_scf(g, out, full);
    CHECK(!v2.antecedent);
    CHECK(v2.holds);

    const BinTree shallow = prefix_close({}, 1).tree;
    CHECK_THROWS_AS(verify_scf(g, out, shallow), fanzoo::precondition_error);
}

TEST_CASE("covering implication holds across generated trees") {
    std::vector<BinTree> trees;
    for (std::uint64_t i = 0; i < 30; ++i) {
        trees.push_back(gen_bar_at(1 + i % 6, 12, 900 + i));
        trees.push_back(gen_survival(Dyadic(3, 2), 12, 950 + i));
    }
    for (const auto& g : small_corpus()) {
        const auto out = special_fan(g);
        for (const auto& T : trees) {
            const auto v = verify_scf(g, out, T);
            CHECK(v.holds);
        }
    }
}

TEST_CASE("uniform bar bound bars every tree") {
    const BinTree a = gen_bar_at(3, 8, 17);
    const Functional2 ga = tree_bar_functional(a);
    const std::uint64_t bound = fan_ef_bound(ga, a);
    CHECK(bound == 3);
    CHECK(is_bar_at(a, bound));

    const BinTree b = prefix_close({}, 4).tree;
    CHECK(fan_ef_bound(make_const(1), b) == 1);
    CHECK(is_bar_at(b, 1));
}

TEST_CASE("greedy cover frozen runs") {
    const auto one = greedy_cover(make_const(1));
    REQUIRE(one.stages.size() == 2);
    CHECK(one.stages[0].stem == Stem::from_string("0"));
    CHECK(one.stages[1].stem == Stem::from_string("1"));
    CHECK(one.stages[0].value == 1);
    REQUIRE(one.subcover.size() == 2);
    CHECK(one.subcover[0] == Stem::from_string("1"));  // descent finds the top cell first
    CHECK(one.subcover[1] == Stem::from_string("0"));

    const auto zero = greedy_cover(make_const(0));
    REQUIRE(zero.stages.size() == 1);
    CHECK(zero.stages[0].stem == Stem());
    CHECK(zero.subcover == std::vector<Stem>{Stem()});

    const auto step = greedy_cover(dsl::compile(dsl::parse("f[0]+1")));
    REQUIRE(step.stages.size() == 3);
    CHECK(restrict(step.stages[0].point, 2) == Stem::from_string("00"));
    CHECK(step.stages[0].value == 1);
    CHECK(step.stages[0].stem == Stem::from_string("0"));
    CHECK(restrict(step.stages[1].point, 2) == Stem::from_string("10"));
    CHECK(step.stages[1].value == 2);
    CHECK(step.stages[1].stem == Stem::from_string("10"));
    CHECK(restrict(step.stages[2].point, 2) == Stem::from_string("11"));
    CHECK(step.stages[2].stem == Stem::from_string("11"));
    CHECK(step.subcover == std::vector<Stem>{Stem::from_string("11"), Stem::from_string("10"),
                                             Stem::from_string("0")});
}

TEST_CASE("greedy cover stages move strictly up and the subcover has measure one") {
    for (const auto& f : small_corpus()) {
        const auto run = greedy_cover(f);
        REQUIRE(!run.stages.empty());
        std::uint64_t deepest = 0;
        for (const auto& st : run.stages) deepest = std::max(deepest, st.stem.size());
        for (std::size_t i = 0; i + 1 < run.stages.size(); ++i) {
            CHECK(lex_cmp(run.stages[i].point, run.stages[i + 1].point, deepest + 1) ==
                  LexOrder::less);
        }
        CHECK(union_measure(run.subcover) == Dyadic::one());
        // every subcover stem was some stage's stem
        for (const auto& s : run.subcover) {
            bool found = false;
            for (const auto& st : run.stages) found = found || st.stem == s;
            CHECK(found);
        }
    }
}

TEST_CASE("greedy cover matches the flat-array simulation") {
    for (const auto& f : small_corpus()) {
        const auto run = greedy_cover(f);
        const auto sim = oracles::simulate_greedy(f, 12, 1 << 14);
        REQUIRE(run.stages.size() == sim.size());
        for (std::size_t i = 0; i < sim.size(); ++i) {
            CHECK(run.stages[i].value == sim[i].value);
            std::uint64_t leaf = 0;
            const Stem s = restrict(run.stages[i].point, 12);
            for (std::uint64_t b = 0; b < 12; ++b) leaf = (leaf << 1) | s.at(b);
            CHECK(leaf == sim[i].leaf);
        }
    }
}

TEST_CASE("greedy cover stage budget cuts the run short") {
    StageObserver count_two = [](const CoverStage&) {};
    CHECK_THROWS_AS(greedy_cover(dsl::compile(dsl::parse("f[0]+1")), 2, {}, count_two),
                    fanzoo::resource_limit_error);

    std::vector<CoverStage> seen;
    try {
        greedy_cover(dsl::compile(dsl::parse("f[0]+1")), 2, {},
                     [&seen](const CoverStage& s) { seen.push_back(s); });
    } catch (const fanzoo::resource_limit_error&) {
    }
    CHECK(seen.size() == 2);  // both completed stages were reported before the failure
}

TEST_CASE("kappa finds the least zero of continuous inputs") {
    const auto z = kappa_continuous(make_coord(0));
    REQUIRE(z.has_value());
    CHECK(restrict(*z, 3) == Stem::from_string("000"));

    const auto gap = kappa_continuous(dsl::compile(dsl::parse("1 - f[3]")));
    REQUIRE(gap.has_value());
    CHECK(restrict(*gap, 5) == Stem::from_string("00010"));

    CHECK(!kappa_continuous(make_const(1)).has_value());
    CHECK(!kappa_continuous(dsl::compile(dsl::parse("f[0]+1"))).has_value());
}

TEST_CASE("kappa agrees with the exhaustive scan") {
    for (const auto& y : small_corpus()) {
        const std::uint64_t n = muc(y);
        const auto got = kappa_continuous(y);
        const auto expect = oracles::leftmost_zero(y, n);
        CHECK(got.has_value() == expect.has_value());
        if (got && expect) CHECK(restrict(*got, n) == *expect);
    }
}

TEST_CASE("kappa respects the enumeration budget") {
    KappaOptions opt;
    opt.enum_budget = 4;
    CHECK_THROWS_AS(kappa_continuous(make_prefix_sum(4), opt), fanzoo::resource_limit_error);
}
