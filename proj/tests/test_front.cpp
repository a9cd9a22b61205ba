#include "doctest.h"

#include <random>

#include "legann/front.hpp"

using namespace legann;

namespace {

OrientedFront parse_one(const std::string& text) { return parse_front(text).front; }

}  // namespace

TEST_CASE("word validation") {
    CHECK_NOTHROW(parse_one("l1 r1"));
    CHECK_NOTHROW(parse_one("strands 2\ns1"));
    CHECK_THROWS_AS(parse_one("strands 2\ns1 r1"), StrandMismatch);
    CHECK_THROWS_AS(parse_one("strands 2\ns2"), StrandMismatch);
    CHECK_THROWS_AS(parse_one("r1"), StrandMismatch);
    CHECK_THROWS_AS(parse_one("l1"), StrandMismatch);  // does not close up
    CHECK_THROWS_AS(parse_one("strands 2\nq1"), SyntaxError);
    CHECK_THROWS_AS(parse_one("s1 strands 2"), SyntaxError);

    OrientedFront f = parse_one("l1 r1");
    CHECK(f.word().size() == 2);
    CHECK(f.word().base_strands() == 0);
}

TEST_CASE("component tracing") {
    CHECK(basic_front(4).components() == 1);
    CHECK(parse_one("l1 r1").components() == 1);
    CHECK(parse_one("strands 2\n").components() == 2);
    CHECK(parse_one("strands 4\ns1 s3").components() == 2);
    CHECK(parse_one("l1 r1 l1 r1").components() == 2);

    auto segs = basic_front(4).component_segments();
    REQUIRE(segs.size() == 1);
    CHECK(segs[0].size() == 12);  // three slices of four strands

    auto unknot = parse_one("l1 r1").component_segments();
    REQUIRE(unknot.size() == 1);
    CHECK(unknot[0] ==
          std::vector<std::pair<int, int>>{{1, 1}, {1, 2}});
}

TEST_CASE("classical invariants of basic examples") {
    ClassicalInvariants a4 = basic_front(4).classical_invariants();
    CHECK(a4.writhe == 3);
    CHECK(a4.left_cusps + a4.right_cusps == 0);
    CHECK(a4.tb == 3);
    CHECK(a4.rotation == 0);
    CHECK(a4.component_winding == std::vector<int>{4});

    ClassicalInvariants unknot = parse_one("l1 r1").classical_invariants();
    CHECK(unknot.writhe == 0);
    CHECK(unknot.left_cusps + unknot.right_cusps == 2);
    CHECK(unknot.tb == -1);
    CHECK(unknot.rotation == 0);

    ClassicalInvariants stab = parse_one("l1 l1 r2 r1").classical_invariants();
    CHECK(stab.writhe == 0);
    CHECK(stab.left_cusps + stab.right_cusps == 4);
    CHECK(stab.tb == -2);
    CHECK(std::abs(stab.rotation) == 1);

    for (int m = 1; m <= 6; ++m) {
        OrientedFront am = basic_front(m);
        ClassicalInvariants inv = am.classical_invariants();
        CHECK(inv.writhe == m - 1);
        CHECK(inv.tb == m - 1);
        CHECK(inv.rotation == 0);
        ClassicalInvariants rev = am.reversed_all().classical_invariants();
        CHECK(rev.tb == inv.tb);
        CHECK(rev.rotation == -inv.rotation);
        CHECK(rev.component_winding == std::vector<int>{-m});
    }
}

TEST_CASE("word area") {
    for (int m = 1; m <= 6; ++m)
        CHECK(basic_front(m).word().word_area() == m * (m - 1));
    CHECK(parse_one("strands 3\n").word().word_area() == 0);
    // four letters with counts 4,4,4,2 after them
    CHECK(parse_one("strands 2\nl1 s1 s2 r1").word().word_area() == 14);
}

TEST_CASE("maslov potentials") {
    OrientedFront a2 = basic_front(2);
    MaslovAssignment m = a2.maslov({{0, 0}});
    CHECK(m.modulus == std::vector<int>{0});
    for (const auto& row : m.value)
        for (int v : row) CHECK(v == 0);

    OrientedFront unknot = parse_one("l1 r1");
    MaslovAssignment mu = unknot.maslov({{0, 0}});
    CHECK(mu.modulus == std::vector<int>{0});
    CHECK(mu.at(1, 1) == 1);  // upper arc
    CHECK(mu.at(1, 2) == 0);  // lower arc

    OrientedFront stab = parse_one("l1 l1 r2 r1");
    MaslovAssignment ms = stab.maslov({{0, 0}});
    CHECK(ms.modulus == std::vector<int>{2});

    CHECK_THROWS_AS(unknot.maslov({{0, 1}}), ParityError);
    CHECK_NOTHROW(unknot.maslov({{0, 1}}, false));
    CHECK_NOTHROW(basic_front(2, true).maslov({{0, 1}}));
}

TEST_CASE("maslov potentials step by one at every cusp") {
    std::vector<std::string> words = {"l1 r1", "l1 l1 r2 r1", "strands 2\nl1 s2 r1",
                                      "strands 2\nl2 s2 r2", "l1 s1 r1",
                                      "strands 2\nl1 r2 s1"};
    for (const auto& text : words) {
        OrientedFront f = parse_one(text);
        MaslovAssignment m = f.default_maslov();
        const FrontWord& w = f.word();
        for (int j = 0; j < w.size(); ++j) {
            const ElementaryTangle& t = w.letters()[j];
            int slice = t.kind == TangleKind::LeftCusp ? (j + 1) % w.size() : j;
            if (t.kind == TangleKind::Crossing) continue;
            int c = f.component_at(slice, t.pos);
            int mod = m.modulus[c];
            int diff = m.at(slice, t.pos) - m.at(slice, t.pos + 1) - 1;
            CHECK((mod == 0 ? diff == 0 : diff % mod == 0));
        }
    }
}

TEST_CASE("stacking") {
    OrientedFront two = stack(basic_front(1), basic_front(1));
    CHECK(two.word().base_strands() == 2);
    CHECK(two.word().size() == 0);
    CHECK(two.components() == 2);

    OrientedFront pair = stack(basic_front(2), basic_front(2, true));
    CHECK(pair.word().base_strands() == 4);
    CHECK(pair.components() == 2);
    CHECK(pair.classical_invariants().component_winding == std::vector<int>{2, -2});

    OrientedFront empty = OrientedFront::all_right(FrontWord());
    CHECK(stack(basic_front(3), empty) == basic_front(3));
    CHECK(stack(empty, basic_front(3)) == basic_front(3));
}

TEST_CASE("moves rewrite the expected patterns") {
    OrientedFront braid = parse_one("strands 3\ns1 s2 s1");
    OrientedFront braided = apply_move(braid, {Move::Kind::Braid, 0});
    CHECK(braided.word().render_word() == "s2 s1 s2");

    OrientedFront a4 = basic_front(4);
    OrientedFront rot = apply_move(a4, {Move::Kind::CyclicRotate, 1});
    CHECK(rot.word().render_word() == "s2 s3 s1");

    OrientedFront far = parse_one("strands 4\ns1 s3");
    CHECK(apply_move(far, {Move::Kind::FarCommute, 0}).word().render_word() ==
          "s3 s1");
    CHECK_THROWS_AS(apply_move(parse_one("strands 3\ns1 s2 s1"),
                               Move{Move::Kind::FarCommute, 0}),
                    PatternMismatch);

    // slide a crossing through a cusp: l1 s2 s1 <-> l2
    OrientedFront slide = parse_one("strands 2\nl1 s2 s1 r1 s1");
    OrientedFront contracted = apply_move(slide, {Move::Kind::LR2, 0});
    CHECK(contracted.word().render_word() == "l2 r1 s1");
    OrientedFront expanded = apply_move(contracted, {Move::Kind::LR2, 0, 0, 1});
    CHECK(expanded.word().render_word() == "l1 s2 s1 r1 s1");

    // swallowtail insertion and deletion are mutually inverse
    OrientedFront a2 = basic_front(2);
    OrientedFront grown = apply_move(a2, {Move::Kind::LR1, 1, 1, 0});
    CHECK(grown.word().render_word() == "s1 l1 s2 r1");
    OrientedFront shrunk = apply_move(grown, {Move::Kind::LR1, 1});
    CHECK(shrunk == a2);
}

TEST_CASE("moves preserve the classical invariants") {
    std::mt19937 rng(99);
    std::vector<std::string> seeds = {"strands 2\ns1 s1", "l1 r1",
                                      "strands 2\nl1 s2 s1 r1",
                                      "strands 3\ns1 s2 s1 s2",
                                      "strands 2\nl2 r2 s1 s1"};
    for (const auto& text : seeds) {
        OrientedFront f = parse_one(text);
        ClassicalInvariants want = f.classical_invariants();
        OrientedFront g = f;
        for (int step = 0; step < 60; ++step) {
            auto moves = applicable_moves(g, g.word().word_area() < 16);
            if (moves.empty()) break;
            std::uniform_int_distribution<size_t> pick(0, moves.size() - 1);
            g = apply_move(g, moves[pick(rng)]);
            ClassicalInvariants got = g.classical_invariants();
            CHECK(got.tb == want.tb);
            CHECK(got.rotation == want.rotation);
            CHECK(g.components() == f.components());
        }
    }
}

TEST_CASE("area behaviour of the word moves") {
    OrientedFront far = parse_one("strands 4\ns1 s3");
    CHECK(apply_move(far, {Move::Kind::FarCommute, 0}).word().word_area() ==
          far.word().word_area());
    OrientedFront braid = parse_one("strands 3\ns1 s2 s1");
    CHECK(apply_move(braid, {Move::Kind::Braid, 0}).word().word_area() ==
          braid.word().word_area());
    CHECK(apply_move(braid, {Move::Kind::CyclicRotate, 1}).word().word_area() ==
          braid.word().word_area());
    OrientedFront slide = parse_one("strands 2\nl1 s2 s1 r1 s1");
    CHECK(apply_move(slide, {Move::Kind::LR2, 0}).word().word_area() <
          slide.word().word_area());
}

TEST_CASE("file round trip") {
    std::vector<std::string> texts = {"strands 2\ns1\norient c1=-\n",
                                      "strands 0\nl1 r1\n",
                                      "strands 4\ns1 s3\norient c2=-\nmaslov c1=2\n"};
    for (const auto& t : texts) {
        FrontFile f = parse_front(t);
        FrontFile g = parse_front(render_front(f));
        CHECK(g.front == f.front);
        CHECK(g.maslov == f.maslov);
    }
}
