#include "support.hpp"

#include <permod/json_io.hpp>

#include <doctest.h>

#include <set>

using namespace permod;
using namespace permod::testing;

namespace {

// Size of the GF(2)-span of vs, by listing every subset sum.
std::size_t gf2_span_size(const std::vector<ModVector>& vs)
{
    std::set<std::map<Tuple, Rational>> sums;
    for (std::size_t mask = 0; mask < (std::size_t{1} << vs.size()); ++mask) {
        std::map<Tuple, Rational> sum;
        for (std::size_t j = 0; j < vs.size(); ++j)
            if (mask >> j & 1)
                for (const auto& [t, c] : vs[j].terms())
                    sum[t] += c.value();
        std::map<Tuple, Rational> reduced;
        for (auto& [t, c] : sum) {
            Integer n = c.get_num() % 2;
            if (n != 0)
                reduced[t] = 1;
        }
        sums.insert(reduced);
    }
    return sums.size();
}

} // namespace

TEST_CASE("grid span examples")
{
    auto span = grid_span({vec(Q, {{"1", {"0"}}, {"-1", {"1"}}})}, default_grid(3));
    CHECK(span.images.size() == 3);
    REQUIRE(span.basis.size() == 2);
    CHECK(span.basis[0] == vec(Q, {{"1", {"1"}}, {"-1", {"2"}}}));
    CHECK(span.basis[1] == vec(Q, {{"1", {"2"}}, {"-1", {"3"}}}));

    auto points = grid_span({vec(Q, {{"1", {"0"}}})}, default_grid(2));
    REQUIRE(points.basis.size() == 2);
    CHECK(points.basis[0] == vec(Q, {{"1", {"1"}}}));
    CHECK(points.basis[1] == vec(Q, {{"1", {"2"}}}));

    CHECK(grid_span({}, default_grid(4)).basis.empty());
    CHECK_THROWS_AS(grid_span({vec(Q, {{"1", {"0"}}, {"-1", {"1"}}, {"1", {"2"}}})}, default_grid(2)), InputError);
}

TEST_CASE("grid span dimension matches subset enumeration over GF(2)")
{
    std::mt19937 rng(29);
    for (int iter = 0; iter < 40; ++iter) {
        std::vector<ModVector> gens{random_vector(rng, GF(2), 1 + rng() % 2, 3, 4)};
        auto span = grid_span(gens, default_grid(4));
        std::vector<ModVector> images;
        for (const auto& img : span.images)
            images.push_back(img.vector);
        if (images.size() > 16)
            continue;
        CHECK(gf2_span_size(images) == (std::size_t{1} << span.basis.size()));
    }
}

TEST_CASE("grid around a support")
{
    CHECK(grid_around(params({"0", "2"}), 4) == params({"-1", "0", "1", "2"}));
    CHECK(grid_around(params({}), 3) == default_grid(3));
    CHECK(grid_around(params({"0", "2"}), 2) == params({"0", "2"}));
    CHECK_THROWS_AS(grid_around(params({"0", "1", "2"}), 2), InputError);
    CHECK(grid_schedule(2, 10) == std::vector<std::size_t>{4, 6, 8, 10});
    CHECK(grid_schedule(2, 3) == std::vector<std::size_t>{3});
}

TEST_CASE("oracle membership examples")
{
    const std::vector<ModVector> gens{vec(Q, {{"1", {"0"}}, {"-1", {"1"}}})};
    auto target = vec(Q, {{"1", {"0"}}, {"-1", {"2"}}});
    auto w = oracle_membership(target, gens, 4);
    REQUIRE(w);
    CHECK(w->grid_size == 4);
    CHECK(evaluate_witness(*w, gens, Q, 1) == target);
    CHECK(w->terms.size() == 2);

    CHECK_FALSE(oracle_membership(vec(Q, {{"1", {"0"}}}), gens, 8));
    auto self = oracle_membership(gens[0], gens, 10);
    REQUIRE(self);
    CHECK(self->grid_size == 4);
    CHECK(evaluate_witness(*self, gens, Q, 1) == gens[0]);

    CHECK(oracle_membership(zero_vec(Q), {}, 4));
    CHECK_THROWS_AS(oracle_membership(vec(Z, {{"1", {"0"}}}), gens, 4), InputError);
}

TEST_CASE("random instances are deterministic")
{
    InstanceProfile profile;
    profile.arity = 2;
    profile.ring = GF(3);
    for (std::uint64_t seed : {0ull, 1ull, 2ull, 12345ull}) {
        auto a = random_instance(seed, profile);
        auto b = random_instance(seed, profile);
        CHECK(dump_canonical(to_json(a)) == dump_canonical(to_json(b)));
        CHECK(a.target.arity() == 2);
        CHECK(a.generators.size() >= 1);
        CHECK(a.generators.size() <= profile.max_generators);
        for (const auto& g : a.generators)
            CHECK(support_points(g).size() <= profile.max_support);
    }
    CHECK_FALSE(to_json(random_instance(1, profile)) == to_json(random_instance(2, profile)));

    std::size_t planted = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed)
        planted += random_instance(seed, profile).planted;
    CHECK(planted > 60);
    CHECK(planted < 140);
}

TEST_CASE("planted instances have oracle witnesses")
{
    InstanceProfile profile;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto inst = random_instance(seed, profile);
        if (! inst.planted)
            continue;
        auto w = oracle_membership(inst.target, inst.generators, 10);
        REQUIRE(w);
        CHECK(evaluate_witness(*w, inst.generators, inst.profile.ring, inst.profile.arity) == inst.target);
    }
}
