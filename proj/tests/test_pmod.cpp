#include "brute_force.hpp"
#include "support.hpp"

#include <doctest.h>

#include <functional>
#include <map>
#include <set>

using namespace permod;
using namespace permod::testing;

namespace {

PatternKey key(const char* text) { return PatternKey::parse(text); }

AugVector aug(RingSpec ring, std::initializer_list<std::pair<const char*, long>> entries)
{
    AugVector v(ring);
    for (const auto& [k, c] : entries)
        v.add(key(k), Scalar(ring, c));
    return v;
}

// Coefficient sums per class of equal order-relation tables.
std::map<std::vector<int>, Rational> omega_by_tables(const ModVector& x, const ParamSet& s)
{
    std::map<std::vector<int>, Rational> sums;
    for (const auto& [t, c] : x.terms())
        sums[order_table(t, s.points())] += c.value();
    return sums;
}

} // namespace

TEST_CASE("vectors")
{
    auto v = vec(Q, {{"1", {"0"}}, {"-1", {"1"}}});
    CHECK(v.terms().size() == 2);
    v.add_term(tup({"1"}), Scalar(Q, 1L));
    CHECK(v.terms().size() == 1);
    CHECK(v.coefficient(tup({"0"})) == Scalar::one(Q));
    CHECK(v.coefficient(tup({"5"})).is_zero());

    CHECK_THROWS_AS(v.insert_term(tup({"0"}), Scalar(Q, 2L)), InputError);
    CHECK_THROWS_AS(v.insert_term(tup({"4"}), Scalar(Q, 0L)), InputError);
    CHECK_THROWS_AS(v.add_term(tup({"4", "5"}), Scalar(Q, 1L)), InputError);
    CHECK_THROWS_AS(v += zero_vec(Q, 2), InputError);
    CHECK_THROWS_AS(v += zero_vec(Z, 1), InputError);
    CHECK_THROWS_AS(ModVector(Q, 0), InputError);

    auto w = vec(Z, {{"1", {"0"}}, {"2", {"1"}}});
    CHECK(w.converted(GF(2)) == vec(GF(2), {{"1", {"0"}}}));
    CHECK(w.scaled(Scalar(Z, 0L)).is_zero());
}

TEST_CASE("support points")
{
    CHECK(support_points(vec(Q, {{"1", {"0"}}, {"-1", {"2"}}})) == params({"0", "2"}));
    CHECK(support_points(zero_vec(Q)).empty());
    CHECK(support_points(vec(Q, {{"1", {"3", "5"}}, {"2", {"5", "3"}}})) == params({"3", "5"}));
}

TEST_CASE("omega examples")
{
    auto s = params({"0", "2"});
    CHECK(omega(vec(Q, {{"1", {"0"}}, {"-1", {"2"}}}), s) == aug(Q, {{"p0=c0<p1", 1}, {"p0<p1=c0", -1}}));
    CHECK(omega(vec(Q, {{"1", {"1"}}, {"-1", {"3/2"}}}), s).is_zero());
    CHECK(omega(zero_vec(Q), s).is_zero());
}

TEST_CASE("act")
{
    CHECK(act(vec(Q, {{"1", {"0"}}, {"-1", {"1"}}}), {{pt("0"), pt("5")}, {pt("1"), pt("7")}}) ==
          vec(Q, {{"1", {"5"}}, {"-1", {"7"}}}));
    auto x = vec(Q, {{"1", {"0", "1"}}});
    CHECK(act(x, {{pt("0"), pt("0")}, {pt("1"), pt("1")}}) == x);
    CHECK(act(vec(Q, {{"1", {"0"}}, {"1", {"1"}}}), {{pt("0"), pt("-1")}, {pt("1"), pt("1/3")}}) ==
          vec(Q, {{"1", {"-1"}}, {"1", {"1/3"}}}));

    CHECK_THROWS_AS(act(vec(Q, {{"1", {"0"}}, {"-1", {"1"}}}), {{pt("0"), pt("7")}, {pt("1"), pt("5")}}), InputError);
    CHECK_THROWS_AS(act(vec(Q, {{"1", {"0"}}, {"-1", {"1"}}}), {{pt("0"), pt("7")}}), InputError);
    CHECK(relabel(vec(Q, {{"1", {"0", "1"}}}), {{pt("0"), pt("1")}, {pt("1"), pt("0")}}) == vec(Q, {{"1", {"1", "0"}}}));
}

TEST_CASE("orbit representatives over S")
{
    auto v = vec(Q, {{"1", {"0"}}, {"-1", {"1"}}});
    auto reps = orbit_reps_over(v, params({"0"}));
    REQUIRE(reps.size() == 5);
    const char* g0 = "c0<p0";
    const char* p0 = "p0=c0";
    const char* g1 = "p0<c0";
    auto s = params({"0"});
    CHECK(omega(reps[0], s).is_zero());
    CHECK(omega(reps[1], s) == aug(Q, {{g0, 1}, {p0, -1}}));
    CHECK(omega(reps[2], s) == aug(Q, {{g0, 1}, {g1, -1}}));
    CHECK(omega(reps[3], s) == aug(Q, {{p0, 1}, {g1, -1}}));
    CHECK(omega(reps[4], s).is_zero());

    auto single = orbit_reps_over(vec(Q, {{"1", {"0"}}}), ParamSet());
    REQUIRE(single.size() == 1);
    CHECK(omega_empty(single[0]) == omega_empty(vec(Q, {{"1", {"0"}}})));

    CHECK(orbit_reps_over(v, params({"0", "2"})).size() == 13);
}

TEST_CASE("augmentation zero")
{
    CHECK(is_aug_zero(vec(Q, {{"1", {"0"}}, {"-1", {"2"}}})));
    CHECK(omega_empty(vec(Q, {{"1", {"0"}}, {"1", {"1"}}})) == aug(Q, {{"c0", 2}}));
    CHECK_FALSE(is_aug_zero(vec(Q, {{"1", {"0"}}, {"1", {"1"}}})));
    CHECK(is_aug_zero(vec(GF(2), {{"1", {"0"}}, {"1", {"1"}}})));
    CHECK(is_aug_zero(vec(Q, {{"1", {"0", "1"}}, {"-1", {"2", "5"}}})));
    CHECK_FALSE(is_aug_zero(vec(Q, {{"1", {"0", "1"}}, {"-1", {"1", "0"}}})));
}

TEST_CASE("singleton tuples")
{
    auto s = params({"0", "2"});
    CHECK(singleton_tuple(key("p0=c1<p1=c0"), s) == tup({"2", "0"}));
    CHECK_THROWS(singleton_tuple(key("p0<c0<p1"), s));
}

TEST_CASE("property: omega agrees with order-table classes")
{
    std::mt19937 rng(3);
    for (int iter = 0; iter < 500; ++iter) {
        const RingSpec ring = iter % 2 ? Q : GF(3);
        auto x = random_vector(rng, ring, 1 + rng() % 2, 6);
        std::set<Rational> pts;
        const std::size_t k = rng() % 4;
        while (pts.size() < k)
            pts.insert(q(static_cast<long>(rng() % 8), 2));
        ParamSet s(std::vector<Point>(pts.begin(), pts.end()));

        auto om = omega(x, s);
        auto expected = omega_by_tables(x, s);
        std::size_t nonzero = 0;
        for (const auto& [table, sum] : expected)
            nonzero += ! Scalar(ring, sum).is_zero();
        CHECK(om.entries().size() == nonzero);
        for (const auto& [t, c] : x.terms()) {
            auto pk = dense_linear_order().pattern_of_tuple(t, s);
            CHECK(om.at(pk) == Scalar(ring, expected[order_table(t, s.points())]));
        }
    }
}

TEST_CASE("property: linearity and stabilizer invariance")
{
    std::mt19937 rng(5);
    for (int iter = 0; iter < 500; ++iter) {
        const RingSpec ring = std::vector{Q, Z, GF(2), GF(5)}[iter % 4];
        const std::size_t arity = 1 + rng() % 2;
        auto x = random_vector(rng, ring, arity, 5);
        auto y = random_vector(rng, ring, arity, 5);
        Scalar a(ring, static_cast<long>(rng() % 7) - 3), b(ring, static_cast<long>(rng() % 7) - 3);
        auto s = ParamSet::from_unsorted({q(static_cast<long>(rng() % 8), 2)});
        CHECK(omega(x.scaled(a) + y.scaled(b), s) == omega(x, s).scaled(a) + omega(y, s).scaled(b));

        auto sigma = random_monotone_map(rng, support_points(x), s);
        CHECK(omega(act(x, sigma), s) == omega(x, s));
        CHECK(omega_empty(act(x, random_monotone_map(rng, support_points(x)))) == omega_empty(x));
    }
}

TEST_CASE("property: omega over a singleton-only support is injective")
{
    std::mt19937 rng(17);
    for (int iter = 0; iter < 300; ++iter) {
        auto x = random_vector(rng, Q, 1 + rng() % 3, 6);
        auto s = support_points(x);
        auto om = omega(x, s);
        CHECK(om.entries().size() == x.terms().size());
        for (const auto& [t, c] : x.terms()) {
            auto pk = dense_linear_order().pattern_of_tuple(t, s);
            CHECK(pk.is_singleton());
            CHECK(singleton_tuple(pk, s) == t);
            CHECK(om.at(pk) == c);
        }
    }
}

TEST_CASE("property: orbit representatives against grid enumeration")
{
    // Every G_(S)-orbit on G.v is hit by some monotone image of the support
    // chain into a grid holding S and three fresh points per gap; orbits are
    // told apart by the order table of the image chain against S.
    std::mt19937 rng(23);
    for (int iter = 0; iter < 60; ++iter) {
        auto v = random_vector(rng, Q, 1 + rng() % 2, 3, 6);
        auto chain = support_points(v).points();
        if (chain.size() > 3)
            continue;
        std::set<Rational> spts;
        const std::size_t k = rng() % 3;
        while (spts.size() < k)
            spts.insert(q(static_cast<long>(rng() % 10)));
        std::vector<Point> sv(spts.begin(), spts.end());
        ParamSet s(sv);

        std::vector<Point> grid;
        for (long i = -1; i < static_cast<long>(sv.size()); ++i) {
            Rational lo = i < 0 ? sv.empty() ? Rational(0) : sv.front() - 4 : sv[i];
            for (long j = 1; j <= 3; ++j)
                grid.push_back(lo + q(j, 4));
            if (i >= 0)
                grid.push_back(sv[i]);
        }
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

        std::set<std::vector<int>> tables;
        std::vector<std::size_t> pick(chain.size());
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t from) {
            if (i == chain.size()) {
                std::vector<Rational> image;
                for (auto g : pick)
                    image.push_back(grid[g]);
                tables.insert(order_table(image, sv));
                return;
            }
            for (std::size_t g = from; g < grid.size(); ++g) {
                pick[i] = g;
                rec(i + 1, g + 1);
            }
        };
        rec(0, 0);

        auto reps = orbit_reps_over(v, s);
        CHECK(reps.size() == tables.size());
        for (std::size_t i = 0; i < reps.size(); ++i) {
            CHECK(omega_empty(reps[i]) == omega_empty(v));
            for (std::size_t j = 0; j < i; ++j)
                CHECK_FALSE(reps[i] == reps[j]);
        }
    }
}
