#include "doctest.h"

#include <algorithm>
#include <random>

#include "legann/partition.hpp"
#include "legann/rulings.hpp"

using namespace legann;

namespace {

Partition P(const std::string& s) { return Partition::parse(s); }
LaurentPoly L(const std::string& s) { return LaurentPoly::parse(s); }
OrientedFront parse_one(const std::string& text) { return parse_front(text).front; }

// stack of basic fronts given by signed windings, top to bottom
OrientedFront basic_stack(const std::vector<int>& windings) {
    std::vector<OrientedFront> parts;
    for (int m : windings) parts.push_back(basic_front(std::abs(m), m < 0));
    return stack(parts);
}

OrientedFront pair_front(const Partition& lam, const Partition& mu) {
    std::vector<int> windings;
    for (int p : lam.parts()) windings.push_back(p);
    for (int p : mu.parts()) windings.push_back(-p);
    return basic_stack(windings);
}

LaurentPoly report_poly(const OrientedFront& f, int p, const MaslovAssignment& mu) {
    LaurentPoly acc;
    for (auto& [switches, count] : ruling_count_report(f, p, mu))
        acc += LaurentPoly::monomial(count, 0, switches - f.word().right_cusps(), 0);
    return acc;
}

}  // namespace

TEST_CASE("admissible states") {
    CHECK(admissible_states(2, {1, 0}, 0).size() == 1);
    CHECK(admissible_states(2, {0, 0}, 0).empty());
    CHECK(admissible_states(4, {0, 1, 0, 1}, 1).size() == 3);
    CHECK(admissible_states(3, {0, 1, 0}, 1).empty());
    CHECK(admissible_states(0, {}, 0).size() == 1);  // the empty pairing
    // 2-graded: pairs must join opposite parities
    CHECK(admissible_states(4, {0, 0, 1, 1}, 2).size() == 2);
}

TEST_CASE("transfer relation at the elementary tangles") {
    RulingState paired(std::vector<int>{1, 0});
    CHECK(transfer(crossing(1), paired, {0, 1}, {1, 0}, 1).empty());

    RulingState nested(std::vector<int>{1, 0, 3, 2});
    auto succ = transfer(crossing(2), nested, {0, 1, 0, 1}, {0, 1, 0, 1}, 1);
    REQUIRE(succ.size() == 2);
    // pass successor re-wires the partners across the crossing
    CHECK(succ[0].first == RulingState(std::vector<int>{2, 3, 0, 1}));
    CHECK(succ[0].second == 0);
    // switch keeps the pairing; [1,2] and [3,4] are disjoint
    CHECK(succ[1].first == nested);
    CHECK(succ[1].second == 1);

    // interleaved companion intervals forbid the switch
    RulingState crossed(std::vector<int>{2, 3, 0, 1});
    auto succ2 = transfer(crossing(2), crossed, {0, 1, 1, 0}, {0, 1, 1, 0}, 1);
    REQUIRE(succ2.size() == 1);
    CHECK(succ2[0].second == 0);

    auto born = transfer(left_cusp(1), RulingState(), {}, {1, 0}, 0);
    REQUIRE(born.size() == 1);
    CHECK(born[0].first == RulingState(std::vector<int>{1, 0}));

    auto died = transfer(right_cusp(1), paired, {1, 0}, {}, 0);
    REQUIRE(died.size() == 1);
    CHECK(died[0].first == RulingState());
    CHECK(transfer(right_cusp(1), crossed, {0, 1, 1, 0}, {0, 1}, 1).empty());
}

TEST_CASE("ruling polynomials of the running examples") {
    CHECK(ruling_polynomial2(parse_one("l1 r1")) == L("z^-1"));
    CHECK(ruling_polynomial2(basic_stack({2, -2})) == L("2 + z^2"));
    CHECK(ruling_polynomial2(parse_one("l1 l1 r2 r1")).is_zero());
    CHECK(ruling_polynomial2(parse_one("l1 s1 r1")).is_zero());
    CHECK(ruling_polynomial2(basic_stack({1, -1})) == L("1"));
    // odd strand count on every slice
    CHECK_THROWS_AS(ruling_polynomial2(basic_front(3)), OddStrandCount);
    // a |r| = 1 component rejects p = 3
    OrientedFront stab = parse_one("l1 l1 r2 r1");
    CHECK_THROWS_AS(ruling_polynomial(stab, 3, stab.default_maslov()),
                    DivisibilityError);
    CHECK_THROWS_AS(ruling_polynomial(stab, 0, stab.default_maslov()),
                    DivisibilityError);
}

TEST_CASE("ruling histograms") {
    OrientedFront a3 = basic_stack({3, -3});
    auto hist = ruling_count_report(a3, 2, a3.default_maslov());
    REQUIRE(hist.size() == 3);
    CHECK(hist[0] == std::pair<int, BigInt>{0, BigInt(3)});
    CHECK(hist[1] == std::pair<int, BigInt>{2, BigInt(4)});
    CHECK(hist[2] == std::pair<int, BigInt>{4, BigInt(1)});

    OrientedFront unknot = parse_one("l1 r1");
    auto h2 = ruling_count_report(unknot, 2, unknot.default_maslov());
    REQUIRE(h2.size() == 1);
    CHECK(h2[0] == std::pair<int, BigInt>{0, BigInt(1)});

    OrientedFront a1 = basic_stack({1, -1});
    auto h3 = ruling_count_report(a1, 2, a1.default_maslov());
    REQUIRE(h3.size() == 1);
    CHECK(h3[0] == std::pair<int, BigInt>{0, BigInt(1)});
}

TEST_CASE("transfer sweep matches explicit enumeration") {
    std::vector<OrientedFront> fronts = {
        parse_one("l1 r1"),         basic_stack({2, -2}),
        basic_stack({2, -1, -1}),   parse_one("strands 2\nl1 s2 s1 r1"),
        parse_one("strands 2\nl2 r2 s1 s1"),
        parse_one("strands 2\ns1 s1\norient c1=-")};
    for (const OrientedFront& f : fronts) {
        MaslovAssignment mu = f.default_maslov();
        CHECK(ruling_polynomial(f, 2, mu) == report_poly(f, 2, mu));
        CHECK(ruling_polynomial(f, 1, mu) == report_poly(f, 1, mu));
    }
}

TEST_CASE("bracket values against the sweep") {
    for (int m = 1; m <= 4; ++m)
        CHECK(ruling_polynomial2(basic_stack({m, -m})) == bracket(m));
}

TEST_CASE("contingency formula against the sweep") {
    for (int n = 1; n <= 3; ++n)
        for (const Partition& lam : partitions_of(n))
            for (const Partition& mu : partitions_of(n))
                CHECK(ruling_polynomial2(pair_front(lam, mu)) ==
                      turaev_inner(lam, mu));
}

TEST_CASE("two-graded count ignores factor order") {
    std::vector<int> windings = {2, -1, -1};
    std::sort(windings.begin(), windings.end());
    LaurentPoly want = ruling_polynomial2(basic_stack(windings));
    do {
        CHECK(ruling_polynomial2(basic_stack(windings)) == want);
    } while (std::next_permutation(windings.begin(), windings.end()));
    CHECK(want == turaev_inner(P("2"), P("1,1")));
}

TEST_CASE("zero-graded counts distinguish factor orders") {
    // potential 1 on the doubly-winding component, 0 on the reversed circles
    OrientedFront good = basic_stack({2, -1, -1});
    MaslovAssignment mu_good = good.maslov({{0, 1}, {1, 0}, {2, 0}}, false);
    CHECK(!ruling_polynomial(good, 0, mu_good).is_zero());

    OrientedFront bad = basic_stack({-1, 2, -1});
    MaslovAssignment mu_bad = bad.maslov({{0, 0}, {1, 1}, {2, 0}}, false);
    CHECK(ruling_polynomial(bad, 0, mu_bad).is_zero());
}

TEST_CASE("two-graded count is invariant under moves") {
    std::mt19937 rng(2718);
    std::vector<std::string> seeds = {"strands 2\ns1 s1", "l1 r1",
                                      "strands 2\nl1 s2 s1 r1",
                                      "strands 2\nl2 r2 s1 s1",
                                      "strands 2\ns1 s1\norient c1=-"};
    for (const auto& text : seeds) {
        OrientedFront f = parse_one(text);
        LaurentPoly want = ruling_polynomial2(f);
        OrientedFront g = f;
        for (int step = 0; step < 25; ++step) {
            auto moves = applicable_moves(g, g.word().word_area() < 14);
            if (moves.empty()) break;
            std::uniform_int_distribution<size_t> pick(0, moves.size() - 1);
            g = apply_move(g, moves[pick(rng)]);
            CHECK(ruling_polynomial2(g) == want);
        }
    }
}

TEST_CASE("reversing every component fixes the two-graded count") {
    std::vector<OrientedFront> fronts = {basic_stack({2, -2}),
                                         basic_stack({2, -1, -1}),
                                         parse_one("strands 2\nl1 s2 s1 r1")};
    for (const OrientedFront& f : fronts)
        CHECK(ruling_polynomial2(f.reversed_all()) == ruling_polynomial2(f));
}

TEST_CASE("zero-graded equals two-graded under an adapted potential") {
    // paired basic fronts with the reversed factor one level lower
    for (int m = 1; m <= 3; ++m) {
        OrientedFront f = basic_stack({m, -m});
        MaslovAssignment mu = f.maslov({{0, 0}, {1, -1}}, false);
        CHECK(ruling_polynomial(f, 0, mu) == bracket(m));
    }
}

TEST_CASE("shifting all potentials by a constant fixes the count") {
    OrientedFront f = basic_stack({2, -1, -1});
    MaslovAssignment base = f.maslov({{0, 1}, {1, 0}, {2, 0}}, false);
    for (int shift : {2, -2, 4}) {
        MaslovAssignment shifted =
            f.maslov({{0, 1 + shift}, {1, shift}, {2, shift}}, false);
        CHECK(ruling_polynomial(f, 0, shifted) == ruling_polynomial(f, 0, base));
        CHECK(ruling_polynomial(f, 2, shifted) == ruling_polynomial(f, 2, base));
    }
}
