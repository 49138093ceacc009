#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <map>
#include <set>

#include "angulator/pairs.hpp"
#include "oracles.hpp"

using namespace angulator;

namespace {

NcCalculus calc_for(int n, int d) { return NcCalculus(HomModel::type_a(make_params(n, d))); }

ObjectSet mask_from(const NcCalculus& calc, const char* csv) {
    return calc.mask_of(parse_diagonal_set(csv, calc.model().params()));
}

// Rigidity straight from the definition: no ext between any two members,
// self-extensions included.
bool rigid_by_definition(const HomModel& model, ObjectSet s) {
    for (int i = 0; i < model.size(); ++i) {
        if (!(s & object_bit(i))) continue;
        for (int j = 0; j < model.size(); ++j)
            if ((s & object_bit(j)) && (model.ext(i, j) || model.ext(j, i))) return false;
    }
    return true;
}

} // namespace

TEST_CASE("mask conversions round trip") {
    auto calc = calc_for(2, 2);
    auto s = mask_from(calc, "1-3-5,2-4-6");
    CHECK(std::popcount(s) == 2);
    CHECK(calc.mask_of(calc.set_of(s)) == s);
    CHECK(calc.format_mask(s) == "1-3-5,2-4-6");
    CHECK(calc.format_mask(0) == "");
    CHECK(calc.labels_of(s) == std::vector<std::string>{"1-3-5", "2-4-6"});
    CHECK(calc.mask_of_labels({"2-4-6", "1-3-5"}) == s);
    CHECK(calc.universe() == (ObjectSet{1} << 7) - 1);
}

TEST_CASE("set_lex_less orders the empty set first and prefixes early") {
    CHECK(set_lex_less(0, 1));
    CHECK(set_lex_less(0b01, 0b11));
    CHECK(set_lex_less(0b11, 0b10));
    CHECK_FALSE(set_lex_less(0b10, 0b11));
    CHECK_FALSE(set_lex_less(0b101, 0b101));
}

TEST_CASE("nc on the (2,2) model matches the classification table") {
    auto calc = calc_for(2, 2);
    for (const auto& [x_text, y_text] : oracles::k22Classification) {
        CAPTURE(x_text);
        CHECK(calc.nc(mask_from(calc, x_text)) == mask_from(calc, y_text));
    }
    CHECK(calc.nc(0) == calc.universe());
    CHECK(calc.nc(calc.universe()) == 0);
}

TEST_CASE("nc on the fixture") {
    NcCalculus calc(fixture_example_3_10());
    CHECK(calc.nc(object_bit(0)) == 0); // 13 meets everything in some direction
    CHECK(calc.nc(0) == calc.universe());
    CHECK(calc.nc(calc.universe()) == 0);
}

TEST_CASE("nc is an antitone Galois polarity") {
    // exhaustively over all subsets, and all nested subset pairs
    std::vector<NcCalculus> calcs;
    calcs.push_back(calc_for(2, 2));
    calcs.emplace_back(fixture_example_3_10());
    calcs.push_back(calc_for(3, 1));
    for (const auto& calc : calcs) {
        const ObjectSet top = calc.universe();
        for (ObjectSet s = 0;; ++s) {
            CHECK((s & calc.ncnc(s)) == s);                  // extensive
            CHECK(calc.nc(calc.ncnc(s)) == calc.nc(s));      // nc of closure
            CHECK(calc.ncnc(calc.ncnc(s)) == calc.ncnc(s));  // idempotent
            // antitone on every superset t of s obtained by adding one bit
            for (int i = 0; i < calc.object_count(); ++i) {
                ObjectSet t = s | object_bit(i);
                CHECK((calc.nc(t) & ~calc.nc(s)) == 0);
            }
            if (s == top) break;
        }
    }
}

TEST_CASE("rigidity matches the definition on every subset") {
    auto calc = calc_for(2, 2);
    for (ObjectSet s = 0; s <= calc.universe(); ++s)
        CHECK(calc.is_rigid(s) == rigid_by_definition(calc.model(), s));

    NcCalculus fix(fixture_example_3_10());
    for (ObjectSet s = 0; s <= fix.universe(); ++s)
        CHECK(fix.is_rigid(s) == rigid_by_definition(fix.model(), s));
    CHECK_FALSE(fix.is_rigid(object_bit(0))); // 13 has a self-extension here
}

TEST_CASE("for d = 1 rigid means pairwise noncrossing") {
    auto calc = calc_for(3, 1);
    const auto& diags = calc.model().diagonals();
    for (ObjectSet s = 0; s <= calc.universe(); ++s) {
        bool noncrossing = true;
        for (int i = 0; i < calc.object_count() && noncrossing; ++i)
            for (int j = i + 1; j < calc.object_count() && noncrossing; ++j)
                if ((s & object_bit(i)) && (s & object_bit(j))) {
                    auto vi = diags[static_cast<std::size_t>(i)].vertices();
                    auto vj = diags[static_cast<std::size_t>(j)].vertices();
                    if (oracles::chords_cross({vi[0], vi[1]}, {vj[0], vj[1]})) noncrossing = false;
                }
        CHECK(calc.is_rigid(s) == noncrossing);
    }
}

TEST_CASE("sets fixed by nc are rigid") {
    std::vector<NcCalculus> calcs;
    calcs.push_back(calc_for(2, 2));
    calcs.emplace_back(fixture_example_3_10());
    for (const auto& calc : calcs)
        for (ObjectSet s = 0; s <= calc.universe(); ++s)
            if (calc.nc(s) == s) CHECK(calc.is_rigid(s));
}

TEST_CASE("maximum rigid cardinality against a subset scan") {
    for (auto [n, d, want] : {std::tuple{2, 2, 3}, std::tuple{2, 3, 4},
                              std::tuple{1, 1, 1}, std::tuple{3, 1, 3}}) {
        CAPTURE(n);
        CAPTURE(d);
        auto calc = calc_for(n, d);
        int best = 0;
        for (ObjectSet s = 0; s <= calc.universe(); ++s)
            if (rigid_by_definition(calc.model(), s)) best = std::max(best, std::popcount(s));
        CHECK(best == want);
        CHECK(calc.max_rigid_cardinality() == want);
    }
    // for d = 1 a maximum rigid set is a triangulation, m - 3 chords
    CHECK(calc_for(5, 1).max_rigid_cardinality() == 5);
}

TEST_CASE("self-pair classification") {
    auto c22 = calc_for(2, 2);
    CHECK(c22.classify_self_pair(mask_from(c22, "135,136,146")) == SelfPairClass::ClusterTilting);
    CHECK(c22.is_cluster_tilting(mask_from(c22, "135,136,146")));
    CHECK(c22.classify_self_pair(mask_from(c22, "135")) == SelfPairClass::NotSelfDual);
    CHECK_FALSE(c22.is_cluster_tilting(mask_from(c22, "135")));

    auto c23 = calc_for(2, 3);
    auto t = mask_from(c23, "1357,1358,1368,1468");
    auto m = mask_from(c23, "1357,1468,2479");
    CHECK(c23.classify_self_pair(t) == SelfPairClass::ClusterTilting);
    CHECK(c23.classify_self_pair(m) == SelfPairClass::MaximalRigidOnly);
    CHECK(c23.nc(m) == m);
    CHECK(c23.is_weak_cotorsion(m, m));
    CHECK(c23.is_weak_cotorsion(t, t));

    CHECK(std::string(to_string(SelfPairClass::ClusterTilting)) == "ClusterTilting");
    CHECK(std::string(to_string(SelfPairClass::MaximalRigidOnly)) == "MaximalRigidOnly");
    CHECK(std::string(to_string(SelfPairClass::NotSelfDual)) == "NotSelfDual");
}

TEST_CASE("weak cotorsion pair predicate") {
    auto calc = calc_for(2, 2);
    auto x = mask_from(calc, "135");
    auto y = mask_from(calc, "135,136,146,257,357");
    CHECK(calc.is_weak_cotorsion(x, y));
    CHECK(calc.is_weak_cotorsion(y, x)); // the relation is symmetric
    CHECK_FALSE(calc.is_weak_cotorsion(x, x));
    CHECK_FALSE(calc.is_weak_cotorsion(x, mask_from(calc, "136")));
    CHECK_FALSE(calc.is_weak_cotorsion(y, mask_from(calc, "135,136")));
    CHECK(calc.is_weak_cotorsion(0, calc.universe()));
    CHECK(calc.is_weak_cotorsion(calc.universe(), 0));
}

TEST_CASE("enumeration of the (1,1) model is fully pinned") {
    auto calc = calc_for(1, 1);
    auto pairs = calc.enumerate_weak_cotorsion_pairs(EnumerationStrategy::BruteForce);
    REQUIRE(pairs.size() == 4);
    ObjectSet a = object_bit(0), b = object_bit(1);
    CHECK(pairs[0] == WeakCotorsionPair{0, a | b, 0});
    CHECK(pairs[1] == WeakCotorsionPair{a, a, a});
    CHECK(pairs[2] == WeakCotorsionPair{a | b, 0, 0});
    CHECK(pairs[3] == WeakCotorsionPair{b, b, b});
}

TEST_CASE("the (2,2) model has exactly the 51 tabulated ordered pairs") {
    auto calc = calc_for(2, 2);
    auto pairs = calc.enumerate_weak_cotorsion_pairs(EnumerationStrategy::BruteForce);
    std::set<std::pair<ObjectSet, ObjectSet>> got;
    for (const auto& p : pairs) {
        CHECK(p.core == (p.x & p.y));
        got.insert({p.x, p.y});
    }
    REQUIRE(got.size() == pairs.size());

    std::set<std::pair<ObjectSet, ObjectSet>> want;
    for (const auto& [x_text, y_text] : oracles::k22Classification) {
        ObjectSet x = mask_from(calc, x_text), y = mask_from(calc, y_text);
        want.insert({x, y});
        want.insert({y, x});
    }
    CHECK(want.size() == 51);
    CHECK(got == want);
}

TEST_CASE("the empty model has the one empty pair") {
    NcCalculus calc(HomModel::explicit_model({}, {}, {}, 1));
    CHECK(calc.universe() == 0);
    for (auto strategy : {EnumerationStrategy::BruteForce, EnumerationStrategy::NextClosure}) {
        auto pairs = calc.enumerate_weak_cotorsion_pairs(strategy);
        REQUIRE(pairs.size() == 1);
        CHECK(pairs[0] == WeakCotorsionPair{0, 0, 0});
    }
    CHECK(calc.max_rigid_cardinality() == 0);
    CHECK(calc.is_cluster_tilting(0));
}

TEST_CASE("fixture pairs are the two trivial ones") {
    NcCalculus calc(fixture_example_3_10());
    auto pairs = calc.enumerate_weak_cotorsion_pairs(EnumerationStrategy::BruteForce);
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0] == WeakCotorsionPair{0, calc.universe(), 0});
    CHECK(pairs[1] == WeakCotorsionPair{calc.universe(), 0, 0});
}

TEST_CASE("both strategies produce identical pair lists") {
    std::vector<NcCalculus> calcs;
    for (auto [n, d] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{3, 1},
                        std::pair{2, 2}, std::pair{2, 3}})
        calcs.push_back(calc_for(n, d));
    calcs.emplace_back(fixture_example_3_10());
    for (const auto& calc : calcs) {
        auto brute = calc.enumerate_weak_cotorsion_pairs(EnumerationStrategy::BruteForce);
        auto lectic = calc.enumerate_weak_cotorsion_pairs(EnumerationStrategy::NextClosure);
        CHECK(brute == lectic);
    }
}

TEST_CASE("pair counts for small polygons") {
    // regression anchors, cross-checked by the Ptolemy equivalence below
    std::map<std::pair<int, int>, std::size_t> want = {
        {{1, 1}, 4},  {{2, 1}, 17},   {{3, 1}, 82},
        {{4, 1}, 422}, {{5, 1}, 2274}, {{2, 2}, 51}};
    for (const auto& [key, count] : want) {
        auto calc = calc_for(key.first, key.second);
        CAPTURE(key.first);
        CHECK(calc.enumerate_weak_cotorsion_pairs(EnumerationStrategy::NextClosure).size() == count);
    }
}

TEST_CASE("every core is rigid") {
    for (auto [n, d] : {std::pair{3, 1}, std::pair{2, 2}, std::pair{2, 3}}) {
        auto calc = calc_for(n, d);
        for (const auto& p : calc.enumerate_weak_cotorsion_pairs(EnumerationStrategy::NextClosure))
            CHECK(calc.is_rigid(p.core));
    }
}

TEST_CASE("exactly seven self-dual pairs in the (2,2) model, all cluster tilting") {
    auto calc = calc_for(2, 2);
    std::set<ObjectSet> self_dual;
    for (const auto& p : calc.enumerate_weak_cotorsion_pairs(EnumerationStrategy::BruteForce))
        if (p.x == p.y) self_dual.insert(p.x);
    REQUIRE(self_dual.size() == 7);
    for (ObjectSet s : self_dual)
        CHECK(calc.classify_self_pair(s) == SelfPairClass::ClusterTilting);
    // the tabulated self-dual rows are rows 22..28
    for (std::size_t row = 22; row < 29; ++row)
        CHECK(self_dual.count(mask_from(calc, oracles::k22Classification[row].first)) == 1);
}

TEST_CASE("ptolemy sets are the closed sets for d = 1") {
    for (int n = 1; n <= 4; ++n) {
        auto calc = calc_for(n, 1);
        PtolemyChecker ptolemy(calc.model());
        for (ObjectSet s = 0; s <= calc.universe(); ++s)
            CHECK(ptolemy.is_ptolemy(s) == (calc.ncnc(s) == s));
    }
}

TEST_CASE("ptolemy examples on the hexagon") {
    auto calc = calc_for(3, 1);
    PtolemyChecker ptolemy(calc.model());
    CHECK(ptolemy.is_ptolemy(0));
    CHECK(ptolemy.is_ptolemy(calc.universe()));
    CHECK(ptolemy.is_ptolemy(mask_from(calc, "1-3,1-4,1-5")));     // fan, no crossings
    CHECK_FALSE(ptolemy.is_ptolemy(mask_from(calc, "1-4,2-5")));   // missing connectors
    CHECK(ptolemy.is_ptolemy(mask_from(calc, "1-4,2-5,1-5,2-4,1-3,3-5,2-6,4-6")) ==
          (calc.ncnc(mask_from(calc, "1-4,2-5,1-5,2-4,1-3,3-5,2-6,4-6")) ==
           mask_from(calc, "1-4,2-5,1-5,2-4,1-3,3-5,2-6,4-6")));
    CHECK(is_ptolemy(calc.model(), mask_from(calc, "2-4")));
    CHECK_THROWS_AS(PtolemyChecker{HomModel::type_a(make_params(2, 2))}, DomainError);
    CHECK_THROWS_AS(PtolemyChecker{fixture_example_3_10()}, DomainError);
}

TEST_CASE("capacity guards") {
    // 65 diagonals at (10, 1) overflow the mask representation
    CHECK_THROWS_AS(NcCalculus(HomModel::type_a(make_params(10, 1))), CapacityError);
    // 27 objects fit the masks but not the brute force scan
    NcCalculus big(HomModel::type_a(make_params(6, 1)));
    CHECK_THROWS_AS(big.enumerate_weak_cotorsion_pairs(EnumerationStrategy::BruteForce),
                    CapacityError);
    CHECK_THROWS_AS(big.check_theorem_3_14(), CapacityError);
    auto pairs = big.enumerate_weak_cotorsion_pairs(EnumerationStrategy::NextClosure);
    CHECK(pairs.size() == 12665);
    CHECK(pairs.front().x == 0);
    CHECK(pairs.front().y == big.universe());
}

TEST_CASE("the equivalence of pair characterizations holds on small models") {
    auto r22 = calc_for(2, 2).check_theorem_3_14();
    CHECK(r22.passed);
    CHECK(r22.theorem == "3.14");
    CHECK(r22.instances_checked == 16384); // 4^7
    CHECK(r22.counterexample.empty());

    auto rfix = NcCalculus(fixture_example_3_10()).check_theorem_3_14();
    CHECK(rfix.passed);
    CHECK(rfix.instances_checked == 64); // 4^3

    auto r23 = calc_for(2, 3).check_theorem_3_14();
    CHECK(r23.passed);
    CHECK(r23.instances_checked == 262144); // 4^9
}
