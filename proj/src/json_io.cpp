#include <permod/json_io.hpp>

namespace permod {

namespace {

const json& field(const json& j, const char* name, const std::string& where)
{
    if (! j.is_object() || ! j.contains(name))
        throw InputError(where + ": missing field \"" + name + "\"");
    return j.at(name);
}

std::string as_string(const json& j, const std::string& where)
{
    if (! j.is_string())
        throw InputError(where + ": expected a string, got " + j.dump());
    return j.get<std::string>();
}

std::size_t as_count(const json& j, const std::string& where)
{
    if (! j.is_number_integer() || j.get<long long>() < 0)
        throw InputError(where + ": expected a non-negative integer, got " + j.dump());
    return j.get<std::size_t>();
}

json point_map_json(const PointMap& m)
{
    json arr = json::array();
    for (const auto& [from, to] : m)
        arr.push_back(json::array({format_rational(from), format_rational(to)}));
    return arr;
}

PointMap point_map_from_json(const json& j, const std::string& where)
{
    if (! j.is_array())
        throw InputError(where + ": map must be an array of [from, to] pairs");
    PointMap m;
    for (const auto& pair : j) {
        if (! pair.is_array() || pair.size() != 2)
            throw InputError(where + ": map entries must be [from, to] pairs");
        m.emplace(parse_rational(as_string(pair[0], where)), parse_rational(as_string(pair[1], where)));
    }
    return m;
}

} // namespace

json to_json(const ModVector& v)
{
    json terms = json::array();
    for (const auto& [t, c] : v.terms()) {
        json tuple = json::array();
        for (const auto& p : t)
            tuple.push_back(format_rational(p));
        terms.push_back({{"coeff", c.to_string()}, {"tuple", tuple}});
    }
    return {{"ring", v.ring().to_string()}, {"arity", v.arity()}, {"terms", terms}};
}

ModVector modvector_from_json(const json& j)
{
    const std::string where = "vector";
    const RingSpec ring = RingSpec::parse(as_string(field(j, "ring", where), where));
    const std::size_t arity = as_count(field(j, "arity", where), where);
    if (arity == 0)
        throw InputError("vector: arity must be at least 1");
    const json& terms = field(j, "terms", where);
    if (! terms.is_array())
        throw InputError("vector: \"terms\" must be an array");

    ModVector v(ring, arity);
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string term_where = "term " + std::to_string(i);
        try {
            const json& term = terms[i];
            Scalar coeff = Scalar::parse(ring, as_string(field(term, "coeff", term_where), term_where));
            const json& tuple_json = field(term, "tuple", term_where);
            if (! tuple_json.is_array())
                throw InputError("\"tuple\" must be an array");
            Tuple tuple;
            for (const auto& p : tuple_json)
                tuple.push_back(parse_rational(as_string(p, term_where)));
            if (tuple.size() != arity)
                throw InputError("tuple has " + std::to_string(tuple.size()) + " coordinates, arity is " +
                                 std::to_string(arity));
            v.insert_term(std::move(tuple), coeff);
        }
        catch (const InputError& e) {
            std::string msg = e.what();
            if (msg.rfind(term_where, 0) == 0)
                throw;
            throw InputError(term_where + " " + terms[i].dump() + ": " + msg);
        }
    }
    return v;
}

std::vector<ModVector> modvectors_from_json(const json& j)
{
    std::vector<ModVector> out;
    if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            try {
                out.push_back(modvector_from_json(j[i]));
            }
            catch (const InputError& e) {
                throw InputError("vector " + std::to_string(i) + ": " + e.what());
            }
        }
    }
    else
        out.push_back(modvector_from_json(j));
    return out;
}

json to_json(const ParamSet& s)
{
    json arr = json::array();
    for (const auto& p : s.points())
        arr.push_back(format_rational(p));
    return arr;
}

ParamSet paramset_from_json(const json& j)
{
    if (! j.is_array())
        throw InputError("parameter set must be an array of rationals");
    std::vector<Point> points;
    for (const auto& p : j)
        points.push_back(parse_rational(as_string(p, "parameter set")));
    return ParamSet(std::move(points));
}

ParamSet parse_param_list(std::string_view text)
{
    std::vector<Point> points;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        bool blank = piece.find_first_not_of(' ') == std::string_view::npos;
        if (! blank)
            points.push_back(parse_rational(piece));
        else if (comma != std::string_view::npos || ! points.empty())
            throw InputError("empty entry in parameter list \"" + std::string(text) + "\"");
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return ParamSet::from_unsorted(std::move(points));
}

json to_json(const AugVector& v)
{
    json obj = json::object();
    for (const auto& [k, value] : v.entries())
        obj[k.str()] = value.to_string();
    return obj;
}

AugVector augvector_from_json(const json& j, RingSpec ring)
{
    if (! j.is_object())
        throw InputError("pattern vector must be an object");
    AugVector v(ring);
    for (const auto& [k, value] : j.items())
        v.add(PatternKey::parse(k), Scalar::parse(ring, as_string(value, "pattern " + k)));
    return v;
}

json to_json(const ExplicitWitness& w)
{
    json terms = json::array();
    for (const auto& t : w.terms)
        terms.push_back({{"coeff", t.coeff.to_string()}, {"generator", t.generator}, {"map", point_map_json(t.map)}});
    return {{"gridSize", w.grid_size}, {"terms", terms}};
}

ExplicitWitness witness_from_json(const json& j, RingSpec ring)
{
    const std::string where = "witness";
    ExplicitWitness w;
    w.grid_size = as_count(field(j, "gridSize", where), where);
    for (const auto& t : field(j, "terms", where))
        w.terms.push_back({Scalar::parse(ring, as_string(field(t, "coeff", where), where)),
                           as_count(field(t, "generator", where), where),
                           point_map_from_json(field(t, "map", where), where)});
    return w;
}

json to_json(const Decision& d, bool emit_certificate)
{
    json out = {
        {"member", d.member},
        {"structure", to_string(d.structure)},
        {"ring", d.ring.to_string()},
        {"paramSet", to_json(d.params)},
        {"repCount", d.rep_count},
    };
    if (! emit_certificate)
        return out;

    json cert;
    if (const auto* span = std::get_if<SpanCertificate>(&d.certificate)) {
        json terms = json::array();
        for (const auto& t : span->terms)
            terms.push_back({{"coeff", t.coeff.to_string()}, {"rep", to_json(t.rep)}});
        cert = {{"type", span->explicit_witness ? "explicit-witness" : "span-witness"}, {"terms", terms}};
        if (span->explicit_witness)
            cert["witness"] = to_json(*span->explicit_witness);
    }
    else if (const auto* f = std::get_if<FunctionalCertificate>(&d.certificate)) {
        cert = {{"type", "dual-functional"}, {"functional", to_json(f->functional)}};
    }
    else if (const auto* c = std::get_if<CharacterCertificate>(&d.certificate)) {
        json chi = json::object();
        for (const auto& [k, q] : c->character)
            chi[k.str()] = format_rational(q);
        cert = {{"type", "character"}, {"character", chi}, {"denominator", c->denominator().get_str()}};
    }
    out["certificate"] = cert;
    return out;
}

Decision decision_from_json(const json& j)
{
    const std::string where = "decision";
    Decision d;
    const json& member = field(j, "member", where);
    if (! member.is_boolean())
        throw InputError("decision: \"member\" must be a boolean");
    d.member = member.get<bool>();
    d.structure = parse_reduct(as_string(field(j, "structure", where), where));
    d.ring = RingSpec::parse(as_string(field(j, "ring", where), where));
    d.params = paramset_from_json(field(j, "paramSet", where));
    d.rep_count = as_count(field(j, "repCount", where), where);

    const json& cert = field(j, "certificate", where);
    const std::string type = as_string(field(cert, "type", "certificate"), "certificate");
    if (type == "span-witness" || type == "explicit-witness") {
        SpanCertificate span;
        for (const auto& t : field(cert, "terms", "certificate"))
            span.terms.push_back({Scalar::parse(d.ring, as_string(field(t, "coeff", "certificate"), "certificate")),
                                  modvector_from_json(field(t, "rep", "certificate"))});
        if (type == "explicit-witness")
            span.explicit_witness = witness_from_json(field(cert, "witness", "certificate"), d.ring);
        d.certificate = std::move(span);
    }
    else if (type == "dual-functional") {
        d.certificate = FunctionalCertificate{augvector_from_json(field(cert, "functional", "certificate"), d.ring)};
    }
    else if (type == "character") {
        CharacterCertificate c;
        const json& chi = field(cert, "character", "certificate");
        if (! chi.is_object())
            throw InputError("certificate: \"character\" must be an object");
        for (const auto& [k, q] : chi.items())
            c.character.emplace(PatternKey::parse(k), frac_part(parse_rational(as_string(q, "character"))));
        d.certificate = std::move(c);
    }
    else
        throw InputError("certificate: unknown type \"" + type + "\"");
    return d;
}

json to_json(const InstanceProfile& p)
{
    return {{"arity", p.arity},
            {"maxSupport", p.max_support},
            {"coefficientPool", p.coefficient_pool},
            {"ring", p.ring.to_string()},
            {"maxGenerators", p.max_generators}};
}

InstanceProfile profile_from_json(const json& j)
{
    const std::string where = "profile";
    InstanceProfile p;
    p.arity = as_count(field(j, "arity", where), where);
    p.max_support = as_count(field(j, "maxSupport", where), where);
    p.coefficient_pool = field(j, "coefficientPool", where).get<std::vector<long>>();
    p.ring = RingSpec::parse(as_string(field(j, "ring", where), where));
    p.max_generators = as_count(field(j, "maxGenerators", where), where);
    return p;
}

json to_json(const Instance& inst)
{
    json gens = json::array();
    for (const auto& g : inst.generators)
        gens.push_back(to_json(g));
    return {{"seed", inst.seed},
            {"profile", to_json(inst.profile)},
            {"target", to_json(inst.target)},
            {"generators", gens},
            {"planted", inst.planted}};
}

Instance instance_from_json(const json& j)
{
    const std::string where = "instance";
    Instance inst;
    inst.seed = field(j, "seed", where).get<std::uint64_t>();
    inst.profile = profile_from_json(field(j, "profile", where));
    inst.target = modvector_from_json(field(j, "target", where));
    inst.generators = modvectors_from_json(field(j, "generators", where));
    if (! field(j, "generators", where).is_array())
        throw InputError("instance: \"generators\" must be an array");
    inst.planted = field(j, "planted", where).get<bool>();
    return inst;
}

std::string dump_canonical(const json& j)
{
    return j.dump(2) + "\n";
}

} // namespace permod
