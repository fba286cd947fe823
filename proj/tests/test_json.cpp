#include "support.hpp"

#include <permod/json_io.hpp>

#include <doctest.h>

using namespace permod;
using namespace permod::testing;

namespace {

json parse(const char* text) { return json::parse(text); }

std::string error_of(const json& j)
{
    try {
        modvector_from_json(j);
    } catch (const InputError& e) {
        return e.what();
    }
    return {};
}

Decision round_trip(const Decision& d)
{
    auto back = decision_from_json(json::parse(dump_canonical(to_json(d))));
    CHECK(dump_canonical(to_json(back)) == dump_canonical(to_json(d)));
    return back;
}

} // namespace

TEST_CASE("modvector json")
{
    auto v = vec(Q, {{"-1", {"2", "1/2"}}, {"3/4", {"0", "5"}}});
    auto j = to_json(v);
    CHECK(j["ring"] == "Q");
    CHECK(j["arity"] == 2);
    CHECK(j["terms"][0]["tuple"] == json{"0", "5"});
    CHECK(j["terms"][0]["coeff"] == "3/4");
    CHECK(modvector_from_json(j) == v);

    auto g = vec(GF(5), {{"4", {"1"}}});
    CHECK(to_json(g)["terms"][0]["coeff"] == "4 mod 5");
    CHECK(modvector_from_json(to_json(g)) == g);
    CHECK(modvector_from_json(parse(R"j({"ring": "GF(5)", "arity": 1, "terms": [{"coeff": "9", "tuple": ["1"]}]})j")) == g);

    CHECK(modvector_from_json(to_json(zero_vec(Z, 3))) == zero_vec(Z, 3));
    CHECK(dump_canonical(to_json(v)).back() == '\n');

    auto many = modvectors_from_json(json::array({to_json(v), to_json(v)}));
    CHECK(many.size() == 2);
    CHECK(modvectors_from_json(to_json(v)).size() == 1);
}

TEST_CASE("modvector json errors name the term")
{
    auto bad = error_of(parse(R"j({"ring": "Q", "arity": 1, "terms": [{"coeff": "1", "tuple": ["0"]}, {"coeff": "1/0", "tuple": ["1"]}]})j"));
    CHECK(bad.find("term 1") != std::string::npos);
    CHECK(bad.find("1/0") != std::string::npos);

    auto dup = error_of(parse(R"j({"ring": "Q", "arity": 1, "terms": [{"coeff": "1", "tuple": ["0"]}, {"coeff": "2", "tuple": ["0"]}]})j"));
    CHECK(dup.find("term 1") != std::string::npos);

    auto zero = error_of(parse(R"j({"ring": "Q", "arity": 1, "terms": [{"coeff": "0", "tuple": ["0"]}]})j"));
    CHECK(zero.find("term 0") != std::string::npos);

    auto zero_mod = error_of(parse(R"j({"ring": "GF(3)", "arity": 1, "terms": [{"coeff": "6", "tuple": ["0"]}]})j"));
    CHECK(zero_mod.find("term 0") != std::string::npos);

    auto arity = error_of(parse(R"j({"ring": "Q", "arity": 2, "terms": [{"coeff": "1", "tuple": ["0"]}]})j"));
    CHECK(arity.find("term 0") != std::string::npos);

    CHECK_FALSE(error_of(parse(R"j({"ring": "Z", "arity": 1, "terms": [{"coeff": "1/2", "tuple": ["0"]}]})j")).empty());
    CHECK_FALSE(error_of(parse(R"j({"ring": "GF(4)", "arity": 1, "terms": []})j")).empty());
    CHECK_FALSE(error_of(parse(R"j({"ring": "Q", "terms": []})j")).empty());
    CHECK_FALSE(error_of(parse(R"j({"ring": "Q", "arity": 1, "terms": [{"coeff": "1", "tuple": [0]}]})j")).empty());
    CHECK_FALSE(error_of(parse(R"j([1, 2])j")).empty());
}

TEST_CASE("param lists")
{
    CHECK(parse_param_list("0,2") == params({"0", "2"}));
    CHECK(parse_param_list("2, 1/2 ,0") == params({"0", "1/2", "2"}));
    CHECK(parse_param_list("") == params({}));
    CHECK_THROWS_AS(parse_param_list("0,,1"), InputError);
    CHECK_THROWS_AS(parse_param_list("0,x"), InputError);
    CHECK_THROWS_AS(parse_param_list("1,1"), InputError);

    auto s = params({"-3/2", "0", "7"});
    CHECK(paramset_from_json(to_json(s)) == s);
    CHECK(to_json(s) == json{"-3/2", "0", "7"});
}

TEST_CASE("augvector json")
{
    auto a = omega(vec(Q, {{"1", {"0"}}, {"-1", {"1"}}, {"2", {"3"}}}), params({"1"}));
    auto j = to_json(a);
    CHECK(augvector_from_json(j, Q) == a);
    CHECK(j.is_object());
    CHECK(j.contains("p0=c0"));
    CHECK(j["p0=c0"] == "-1");
    CHECK_THROWS_AS(augvector_from_json(parse(R"j({"c0=p0": "1"})j"), Q), InputError);
    CHECK(augvector_from_json(parse(R"j({"c0<p0": "0"})j"), Q).is_zero());
}

TEST_CASE("decision json round trips every certificate")
{
    const std::vector<ModVector> difference{vec(Q, {{"1", {"0"}}, {"-1", {"1"}}})};
    const auto telescoping = vec(Q, {{"1", {"0"}}, {"-1", {"2"}}});

    SUBCASE("span witness")
    {
        auto d = membership(telescoping, difference);
        REQUIRE(std::holds_alternative<SpanCertificate>(d.certificate));
        auto j = to_json(d);
        CHECK(j["certificate"]["type"] == "span-witness");
        CHECK(j["repCount"] == 13);
        CHECK(j["structure"] == "dlo");
        CHECK(verify_certificate(round_trip(d), telescoping, difference));
    }
    SUBCASE("explicit witness")
    {
        auto d = membership(telescoping, difference, {.params = {}, .witness_budget = 4});
        auto j = to_json(d);
        CHECK(j["certificate"]["type"] == "explicit-witness");
        CHECK(j["certificate"]["witness"]["gridSize"] == 4);
        auto back = round_trip(d);
        const auto& span = std::get<SpanCertificate>(back.certificate);
        REQUIRE(span.explicit_witness);
        CHECK(evaluate_witness(*span.explicit_witness, difference, Q, 1) == telescoping);
        CHECK(verify_certificate(back, telescoping, difference));
    }
    SUBCASE("dual functional")
    {
        auto point = vec(Q, {{"1", {"0"}}});
        auto d = membership(point, difference);
        CHECK(to_json(d)["certificate"]["type"] == "dual-functional");
        CHECK_FALSE(to_json(d, false).contains("certificate"));
        CHECK(verify_certificate(round_trip(d), point, difference));
    }
    SUBCASE("character")
    {
        const std::vector<ModVector> doubled{vec(Z, {{"2", {"0"}}})};
        auto target = vec(Z, {{"1", {"0"}}, {"1", {"1"}}});
        auto d = membership(target, doubled);
        auto j = to_json(d);
        CHECK(j["certificate"]["type"] == "character");
        CHECK(j["certificate"]["denominator"] == "2");
        CHECK(verify_certificate(round_trip(d), target, doubled));
    }
    SUBCASE("malformed")
    {
        auto j = to_json(membership(telescoping, difference));
        auto unknown = j;
        unknown["certificate"]["type"] = "oracle";
        CHECK_THROWS_AS(decision_from_json(unknown), InputError);
        auto missing = j;
        missing.erase("paramSet");
        CHECK_THROWS_AS(decision_from_json(missing), InputError);
    }
}

TEST_CASE("tampered decision json fails verification")
{
    const std::vector<ModVector> difference{vec(Q, {{"1", {"0"}}, {"-1", {"1"}}})};
    auto point = vec(Q, {{"1", {"0"}}});
    auto j = to_json(membership(point, difference));
    j["member"] = true;
    j["certificate"] = json{{"type", "span-witness"}, {"terms", json::array()}};
    CHECK_FALSE(verify_certificate(decision_from_json(j), point, difference));
}

TEST_CASE("instance json")
{
    InstanceProfile profile;
    profile.arity = 2;
    profile.ring = GF(7);
    for (std::uint64_t seed : {3ull, 4ull, 99ull}) {
        auto inst = random_instance(seed, profile);
        auto text = dump_canonical(to_json(inst));
        auto back = instance_from_json(json::parse(text));
        CHECK(dump_canonical(to_json(back)) == text);
        CHECK(back.target == inst.target);
        CHECK(back.generators == inst.generators);
        CHECK(back.planted == inst.planted);
        CHECK(back.profile.ring == GF(7));
    }
}
