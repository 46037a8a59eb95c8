#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypersteiner/errors.hpp"
#include "hypersteiner/finite_space.hpp"
#include "hypersteiner/rng.hpp"

using namespace hypersteiner;

namespace {

ExtendedDistance fin(long n, long d = 1) { return ExtendedDistance(Rat(n, d)); }
ExtendedDistance inf() { return ExtendedDistance::infinity(); }

/// p0 - p1 - p2 with unit steps; d(p0, p2) = 2.
FiniteSpace path3() {
    return FiniteSpace({"p0", "p1", "p2"}, {{fin(0), fin(1), fin(2)},
                                            {fin(1), fin(0), fin(1)},
                                            {fin(2), fin(1), fin(0)}});
}

/// Two clusters {a0, a1} and {b0} at infinite distance.
FiniteSpace two_clusters() {
    return FiniteSpace({"a0", "a1", "b0"}, {{fin(0), fin(1), inf()},
                                            {fin(1), fin(0), inf()},
                                            {inf(), inf(), fin(0)}});
}

/// Definitional route: sup-inf over explicit point loops, written without
/// the library's ball/candidate machinery.
ExtendedDistance hausdorff_reference(const PointSet& a, const PointSet& b) {
    const FiniteSpace& s = a.space();
    ExtendedDistance worst(0);
    for (int x : a.members()) {
        ExtendedDistance best = ExtendedDistance::infinity();
        for (int y : b.members()) best = min(best, s.dist(x, y));
        worst = max(worst, best);
    }
    for (int y : b.members()) {
        ExtendedDistance best = ExtendedDistance::infinity();
        for (int x : a.members()) best = min(best, s.dist(y, x));
        worst = max(worst, best);
    }
    return worst;
}

FiniteSpace random_repaired_space(Rng& rng, int pts) {
    std::vector<std::string> labels;
    for (int i = 0; i < pts; ++i) labels.push_back("q" + std::to_string(i));
    std::vector<std::vector<ExtendedDistance>> d(pts, std::vector<ExtendedDistance>(pts, fin(0)));
    for (int i = 0; i < pts; ++i)
        for (int j = i + 1; j < pts; ++j) {
            Rat v = rng.rat(1, 12, 4);
            d[i][j] = d[j][i] = ExtendedDistance(v);
        }
    // min-plus closure repairs the triangle inequality
    for (int k = 0; k < pts; ++k)
        for (int i = 0; i < pts; ++i)
            for (int j = 0; j < pts; ++j) d[i][j] = min(d[i][j], d[i][k] + d[k][j]);
    return FiniteSpace(std::move(labels), std::move(d));
}

}  // namespace

TEST_CASE("extended distance arithmetic saturates") {
    CHECK(fin(1) + inf() == inf());
    CHECK(inf() + inf() == inf());
    CHECK(fin(1, 2) + fin(1, 3) == fin(5, 6));
    CHECK(fin(3) < inf());
    CHECK(!(inf() < inf()));
    CHECK(ExtendedDistance::parse("inf")->is_infinite());
    CHECK(*ExtendedDistance::parse("7/2") == fin(7, 2));
    CHECK(!ExtendedDistance::parse("-1"));
    CHECK(!ExtendedDistance::parse("1/0"));
}

TEST_CASE("matrix validation names the violating triple") {
    CHECK_THROWS_AS(FiniteSpace({"a", "b"}, {{fin(0), fin(1)}, {fin(2), fin(0)}}), ValidationError);
    CHECK_THROWS_AS(FiniteSpace({"a", "b"}, {{fin(0), fin(0)}, {fin(0), fin(0)}}), ValidationError);
    // d(a,c) = 5 > 1 + 1
    try {
        FiniteSpace({"a", "b", "c"}, {{fin(0), fin(1), fin(5)},
                                      {fin(1), fin(0), fin(1)},
                                      {fin(5), fin(1), fin(0)}});
        FAIL("expected a triangle violation");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("a") != std::string::npos);
        CHECK(std::string(e.what()).find("triangle") != std::string::npos);
    }
    // infinity entries participate in the triangle check with saturation
    CHECK_THROWS_AS(FiniteSpace({"a", "b", "c"}, {{fin(0), fin(1), inf()},
                                                  {fin(1), fin(0), fin(1)},
                                                  {inf(), fin(1), fin(0)}}),
                    ValidationError);
}

TEST_CASE("dist_point_to_set") {
    FiniteSpace s = path3();
    CHECK(dist_point_to_set(s, 0, 0b001) == fin(0));                 // p in A
    CHECK(dist_point_to_set(s, 0, 0) == inf());                      // empty set
    CHECK(dist_point_to_set(s, 0, 0b110) == fin(1));                 // min over p1, p2
    CHECK(dist_point_to_set(0, std::optional<PointSet>{}) == inf());
    CHECK_THROWS_AS(dist_point_to_set(s, 7, 0b1), UsageError);
}

TEST_CASE("balls") {
    FiniteSpace s = path3();
    PointSet a(s, 0b001);  // {p0}
    CHECK(ball(a, fin(0), BallKind::Closed)->mask() == 0b001);  // B_0(A) = A
    CHECK(!ball(a, fin(0), BallKind::Open));                    // U_0 = empty
    CHECK(ball(a, fin(1), BallKind::Closed)->mask() == 0b011);  // {p0, p1}
    CHECK(ball(a, fin(1), BallKind::Open)->mask() == 0b001);
    CHECK(ball(a, fin(2), BallKind::Closed)->mask() == 0b111);
    CHECK_THROWS_AS(ball(a, inf(), BallKind::Closed), UsageError);
}

TEST_CASE("hausdorff distance on the path space") {
    FiniteSpace s = path3();
    PointSet p0(s, 0b001), p1(s, 0b010), rest(s, 0b110);
    CHECK(hausdorff_inf(p0, p0) == fin(0));
    CHECK(hausdorff_supmax(p0, p1) == fin(1));       // singletons
    CHECK(hausdorff_inf(p0, p1) == fin(1));
    CHECK(hausdorff_inf(p0, rest) == fin(2));        // sup side from p2
    CHECK(hausdorff_supmax(p0, rest) == fin(2));
}

TEST_CASE("hausdorff across clusters is infinite") {
    FiniteSpace s = two_clusters();
    PointSet a(s, 0b011), b(s, 0b100), mixed(s, 0b101);
    CHECK(hausdorff_inf(a, b) == inf());
    CHECK(hausdorff_supmax(a, b) == inf());
    CHECK(hausdorff_supmax(a, mixed) == inf());
}

TEST_CASE("definition equivalence and metric axioms, exhaustively on random spaces") {
    Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        FiniteSpace s = random_repaired_space(rng, 5);
        const uint64_t full = s.full_mask();
        for (uint64_t am = 1; am <= full; ++am)
            for (uint64_t bm = 1; bm <= full; ++bm) {
                PointSet a(s, am), b(s, bm);
                ExtendedDistance d1 = hausdorff_inf(a, b);
                ExtendedDistance d2 = hausdorff_supmax(a, b);
                ExtendedDistance ref = hausdorff_reference(a, b);
                CHECK(d1 == d2);
                CHECK(d2 == ref);
                CHECK(hausdorff_supmax(b, a) == d2);
                if (am == bm) CHECK(d2 == fin(0));
                if (d2 == fin(0)) CHECK(am == bm);
            }
        // triangle on a sample of triples
        for (int t = 0; t < 200; ++t) {
            PointSet a(s, 1 + rng.below(full)), b(s, 1 + rng.below(full)), c(s, 1 + rng.below(full));
            CHECK(hausdorff_supmax(a, c) <= hausdorff_supmax(a, b) + hausdorff_supmax(b, c));
        }
    }
}

TEST_CASE("lemma: |A B| = d_H(A, B) forces equal one-sided sups") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        FiniteSpace s = random_repaired_space(rng, 5);
        const uint64_t full = s.full_mask();
        for (uint64_t am = 1; am <= full; ++am)
            for (uint64_t bm = 1; bm <= full; ++bm) {
                PointSet a(s, am), b(s, bm);
                ExtendedDistance infd = ExtendedDistance::infinity();
                for (int x : a.members()) infd = min(infd, dist_point_to_set(s, x, bm));
                if (infd != hausdorff_supmax(a, b)) continue;
                ExtendedDistance supa(0), supb(0);
                for (int x : a.members()) supa = max(supa, dist_point_to_set(s, x, bm));
                for (int y : b.members()) supb = max(supb, dist_point_to_set(s, y, am));
                CHECK(supa == supb);
            }
    }
}

TEST_CASE("sandwich lemma over exhaustive nested quadruples") {
    Rng rng(13);
    for (int trial = 0; trial < 6; ++trial) {
        FiniteSpace s = random_repaired_space(rng, 4);
        const uint64_t full = s.full_mask();
        for (uint64_t am = 1; am <= full; ++am)
            for (uint64_t bm = 1; bm <= full; ++bm) {
                if ((am & bm) != am) continue;  // A subset of B
                for (uint64_t cm = 1; cm <= full; ++cm) {
                    if ((bm & cm) != bm) continue;
                    for (uint64_t dm = 1; dm <= full; ++dm) {
                        PointSet a(s, am), b(s, bm), c(s, cm), d(s, dm);
                        ExtendedDistance alpha = hausdorff_supmax(a, d);
                        if (hausdorff_supmax(c, d) != alpha) continue;
                        CHECK(hausdorff_supmax(b, d) <= alpha);
                    }
                }
            }
    }
}

TEST_CASE("lipschitz bounds for the point-to-set distance") {
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        FiniteSpace s = random_repaired_space(rng, 6);
        const uint64_t full = s.full_mask();
        for (int t = 0; t < 100; ++t) {
            const int x = static_cast<int>(rng.below(6)), y = static_cast<int>(rng.below(6));
            const uint64_t am = 1 + rng.below(full);
            ExtendedDistance dxa = dist_point_to_set(s, x, am);
            ExtendedDistance dya = dist_point_to_set(s, y, am);
            CHECK(dxa <= s.dist(x, y) + dya);
            CHECK(dya <= s.dist(x, y) + dxa);
        }
    }
}

TEST_CASE("iterated closed balls stay inside the summed-radius ball") {
    Rng rng(19);
    for (int trial = 0; trial < 20; ++trial) {
        FiniteSpace s = random_repaired_space(rng, 6);
        const uint64_t full = s.full_mask();
        PointSet a(s, 1 + rng.below(full));
        Rat r1 = rng.rat(0, 6, 3), r2 = rng.rat(0, 6, 3);
        auto inner = ball(a, ExtendedDistance(r1), BallKind::Closed);
        REQUIRE(inner);
        auto iterated = ball(*inner, ExtendedDistance(r2), BallKind::Closed);
        auto direct = ball(a, ExtendedDistance(r1 + r2), BallKind::Closed);
        REQUIRE(iterated);
        REQUIRE(direct);
        CHECK((iterated->mask() & ~direct->mask()) == 0);
    }
}

TEST_CASE("finiteness classes") {
    FiniteSpace one = path3();
    CHECK(finiteness_classes(one).size() == 1);

    FiniteSpace two = two_clusters();
    auto classes = finiteness_classes(two);
    REQUIRE(classes.size() == 2);
    CHECK(classes[0] == std::vector<int>{0, 1});
    CHECK(classes[1] == std::vector<int>{2});

    // hyperspace view: subsets grouped by the point classes they touch;
    // oracle below rebuilds the partition from the pairwise table
    auto hyper = hyperspace_finiteness_classes(two);
    CHECK(hyper.size() == 3);  // within a0a1, within b0, and the mixed ones
    std::map<uint64_t, int> class_of;
    for (size_t c = 0; c < hyper.size(); ++c)
        for (uint64_t m : hyper[c]) class_of[m] = static_cast<int>(c);
    for (uint64_t am = 1; am <= two.full_mask(); ++am)
        for (uint64_t bm = 1; bm <= two.full_mask(); ++bm) {
            bool same = class_of[am] == class_of[bm];
            bool finite = hausdorff_supmax(PointSet(two, am), PointSet(two, bm)).is_finite();
            CHECK(same == finite);
        }
}

TEST_CASE("metric projection") {
    FiniteSpace s = path3();
    CHECK(metric_projection(0, PointSet(s, 0b110)).mask() == 0b010);  // nearest is p1
    CHECK(metric_projection(0, PointSet(s, 0b101)).mask() == 0b001);  // x itself
    FiniteSpace sym({"a", "b", "c"}, {{fin(0), fin(1), fin(1)},
                                      {fin(1), fin(0), fin(1)},
                                      {fin(1), fin(1), fin(0)}});
    CHECK(metric_projection(0, PointSet(sym, 0b110)).mask() == 0b110);  // equidistant pair
}
