#include <doctest.h>

#include <memory>

#include <fanzoo/bitseq.hpp>
#include <fanzoo/errors.hpp>
#include <fanzoo/stem.hpp>

using fanzoo::BitSeq;
using fanzoo::Stem;

TEST_CASE("stem construction and parsing") {
    CHECK(Stem::from_string("").empty());
    const Stem s = Stem::from_string("0101");
    CHECK(s.size() == 4);
    CHECK(s.at(0) == 0);
    CHECK(s.at(1) == 1);
    CHECK(s.to_string() == "0101");
    CHECK_THROWS_AS(Stem::from_string("01x"), fanzoo::usage_error);
    CHECK_THROWS_AS(Stem(std::vector<std::uint8_t>{0, 2}), fanzoo::usage_error);
}

TEST_CASE("of_index is msb-first so numeric order is lex order") {
    CHECK(Stem::of_index(5, 3) == Stem::from_string("101"));
    CHECK(Stem::of_index(0, 3) == Stem::from_string("000"));
    CHECK(Stem::of_index(7, 3) == Stem::from_string("111"));
    CHECK(Stem::of_index(0, 0) == Stem());
    for (std::uint64_t v = 0; v + 1 < 32; ++v) {
        CHECK(Stem::of_index(v, 5) < Stem::of_index(v + 1, 5));
    }
    CHECK_THROWS_AS(Stem::of_index(0, 64), fanzoo::usage_error);
}

TEST_CASE("stem ordering puts prefixes before extensions") {
    CHECK(Stem::from_string("0") < Stem::from_string("00"));
    CHECK(Stem::from_string("01") < Stem::from_string("1"));
    CHECK(Stem::from_string("10") < Stem::from_string("11"));
    CHECK(Stem() < Stem::from_string("0"));
}

TEST_CASE("stem operations") {
    const Stem s = Stem::from_string("110");
    CHECK(s.concat(Stem::from_string("01")) == Stem::from_string("11001"));
    CHECK(s.prefix(2) == Stem::from_string("11"));
    CHECK(s.prefix(0) == Stem());
    CHECK_THROWS_AS(s.prefix(4), fanzoo::precondition_error);
    CHECK(Stem::from_string("11").is_prefix_of(s));
    CHECK(s.is_prefix_of(s));
    CHECK(!Stem::from_string("10").is_prefix_of(s));
    CHECK(!Stem::from_string("1101").is_prefix_of(s));
}

TEST_CASE("constant and eventually constant sequences") {
    CHECK(BitSeq::zeros().at(0) == 0);
    CHECK(BitSeq::zeros().at(1000) == 0);
    CHECK(BitSeq::ones().at(1000) == 1);

    const BitSeq f = BitSeq::eventually(Stem::from_string("101"), 0);
    CHECK(f.at(0) == 1);
    CHECK(f.at(1) == 0);
    CHECK(f.at(2) == 1);
    CHECK(f.at(3) == 0);
    CHECK(f.at(99) == 0);
    CHECK(f.prefix(5) == Stem::from_string("10100"));

    auto form = f.eventual_form();
    REQUIRE(form.has_value());
    CHECK(form->head == Stem::from_string("101"));
    CHECK(form->tail_bit == 0);

    CHECK_THROWS_AS(BitSeq::eventually(Stem(), 2), fanzoo::usage_error);
}

TEST_CASE("with_prefix composes and keeps the eventual form") {
    const BitSeq tail = BitSeq::eventually(Stem::from_string("01"), 1);
    const BitSeq f = BitSeq::with_prefix(Stem::from_string("1"), tail);
    CHECK(f.prefix(6) == Stem::from_string("101111"));
    auto form = f.eventual_form();
    REQUIRE(form.has_value());
    CHECK(form->head == Stem::from_string("101"));
    CHECK(form->tail_bit == 1);

    const BitSeq g = BitSeq::with_prefix(Stem::from_string("0"),
                                         BitSeq::from_generator([](std::uint64_t) { return 0; }));
    CHECK(!g.eventual_form().has_value());
}

TEST_CASE("generator sequences memoize and normalize") {
    auto calls = std::make_shared<int>(0);
    const BitSeq f = BitSeq::from_generator([calls](std::uint64_t i) {
        ++*calls;
        return i == 3 ? 7 : 0;  // nonzero outputs count as 1
    });
    CHECK(f.at(3) == 1);
    CHECK(f.at(3) == 1);
    CHECK(*calls == 1);
    CHECK(f.at(0) == 0);
    CHECK(*calls == 2);
    CHECK(f.prefix(4) == Stem::from_string("0001"));
}
