#include <permod/decide.hpp>
#include <permod/json_io.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace permod;

namespace {

constexpr int exit_decided = 0;
constexpr int exit_input = 2;
constexpr int exit_verification = 3;

// An input error already prefixed with the file it came from.
struct FileError : InputError {
    using InputError::InputError;
};

json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (! in)
        throw FileError(path + ": cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return json::parse(buf.str());
    }
    catch (const json::parse_error& e) {
        throw FileError(path + ": invalid JSON: " + e.what());
    }
}

template <class F>
auto from_file(const std::string& path, F&& parse)
{
    const json j = read_json(path);
    try {
        return parse(j);
    }
    catch (const FileError&) {
        throw;
    }
    catch (const InputError& e) {
        throw FileError(path + ": " + e.what());
    }
    catch (const json::exception& e) {
        throw FileError(path + ": " + e.what());
    }
}

struct Config {
    std::string structure = "dlo";
    std::string ring;
    std::string params;
    bool params_given = false;
    std::size_t k = 1;
    std::size_t max_grid = 10;
    std::uint64_t seed = 0;
    std::size_t witness_budget = 0;
    bool emit_certificate = true;
    std::size_t arity = 0;

    std::string target;
    std::vector<std::string> gens;
    std::string decision;
    std::string instance;
    std::vector<std::string> chain_files;
    std::string out_dir;

    std::size_t max_support = 4;
    std::size_t max_generators = 2;
};

std::optional<RingSpec> ring_override(const Config& c)
{
    if (c.ring.empty())
        return std::nullopt;
    return RingSpec::parse(c.ring);
}

ModVector convert(const ModVector& v, const std::optional<RingSpec>& ring, const std::string& where)
{
    if (! ring || v.ring() == *ring)
        return v;
    try {
        return v.converted(*ring);
    }
    catch (const InputError& e) {
        throw FileError(where + ": cannot convert to " + ring->to_string() + ": " + e.what());
    }
}

struct Problem {
    ModVector target{RingSpec::rationals(), 1};
    std::vector<ModVector> generators;
};

std::vector<ModVector> load_generators(const std::vector<std::string>& files, const std::optional<RingSpec>& ring)
{
    std::vector<ModVector> gens;
    for (const auto& f : files)
        for (auto& g : from_file(f, modvectors_from_json))
            gens.push_back(convert(g, ring, f));
    return gens;
}

Problem load_problem(const Config& c)
{
    const auto ring = ring_override(c);
    Problem p;
    if (! c.instance.empty()) {
        auto inst = from_file(c.instance, instance_from_json);
        p.target = convert(inst.target, ring, c.instance);
        for (const auto& g : inst.generators)
            p.generators.push_back(convert(g, ring, c.instance));
    }
    else {
        if (c.target.empty())
            throw InputError("--target or --instance is required");
        p.target = convert(from_file(c.target, modvector_from_json), ring, c.target);
        p.generators = load_generators(c.gens, ring);
    }
    for (std::size_t j = 0; j < p.generators.size(); ++j)
        if (! (p.generators[j].ring() == p.target.ring()) || p.generators[j].arity() != p.target.arity())
            throw InputError("generator " + std::to_string(j) + " is over " + p.generators[j].ring().to_string() +
                             " with arity " + std::to_string(p.generators[j].arity()) + ", target is over " +
                             p.target.ring().to_string() + " with arity " + std::to_string(p.target.arity()) +
                             " (use --ring to convert)");
    return p;
}

// Ring and arity for commands that take generators only.
std::pair<RingSpec, std::size_t> shape_of(const Config& c, const std::vector<ModVector>& gens)
{
    RingSpec ring = gens.empty() ? RingSpec::rationals() : gens.front().ring();
    if (auto r = ring_override(c))
        ring = *r;
    std::size_t arity = c.arity ? c.arity : gens.empty() ? 1 : gens.front().arity();
    for (std::size_t j = 0; j < gens.size(); ++j)
        if (! (gens[j].ring() == ring) || gens[j].arity() != arity)
            throw InputError("generator " + std::to_string(j) + " does not match ring " + ring.to_string() +
                             " and arity " + std::to_string(arity));
    return {ring, arity};
}

void print(const json& j)
{
    std::cout << dump_canonical(j);
}

MembershipOptions options_of(const Config& c)
{
    MembershipOptions opts;
    if (c.params_given)
        opts.params = parse_param_list(c.params);
    opts.witness_budget = c.witness_budget;
    return opts;
}

int cmd_decide(const Config& c)
{
    const auto p = load_problem(c);
    const ReductSpec reduct = parse_reduct(c.structure);
    const Decision d = reduct == ReductSpec::none ? membership(p.target, p.generators, options_of(c))
                                                  : reduct_membership(p.target, p.generators, reduct, options_of(c));
    print(to_json(d, c.emit_certificate));
    if (! verify_certificate(d, p.target, p.generators)) {
        std::cerr << "permod: internal verification of the certificate failed\n";
        return exit_verification;
    }
    return exit_decided;
}

int cmd_verify(const Config& c)
{
    if (c.decision.empty())
        throw InputError("--decision is required");
    const auto p = load_problem(c);
    const Decision d = from_file(c.decision, decision_from_json);
    const bool ok = verify_certificate(d, p.target, p.generators);
    print({{"verified", ok}, {"member", d.member}});
    return ok ? exit_decided : exit_verification;
}

int cmd_omega(const Config& c)
{
    if (c.target.empty())
        throw InputError("--target is required");
    const auto x = convert(from_file(c.target, modvector_from_json), ring_override(c), c.target);
    const ParamSet s = c.params_given ? parse_param_list(c.params) : support_points(x);
    print(to_json(omega(x, s)));
    return exit_decided;
}

int cmd_generates_all(const Config& c)
{
    const auto gens = load_generators(c.gens, ring_override(c));
    const auto [ring, arity] = shape_of(c, gens);
    const auto report = generates_all(gens, ring, arity);
    json reps = json::array();
    for (const auto& [w, d] : report.per_rep) {
        json tuple = json::array();
        for (const auto& x : w)
            tuple.push_back(format_rational(x));
        reps.push_back({{"tuple", tuple}, {"decision", to_json(d, c.emit_certificate)}});
    }
    print({{"all", report.all}, {"ring", ring.to_string()}, {"arity", arity}, {"reps", reps}});
    return exit_decided;
}

int cmd_min_support(const Config& c)
{
    const auto gens = load_generators(c.gens, ring_override(c));
    const auto [ring, arity] = shape_of(c, gens);
    const auto found = min_support(gens, c.k, ring, arity);
    json out = {{"k", c.k}, {"found", found.has_value()}};
    if (found)
        out["vector"] = to_json(*found);
    print(out);
    return exit_decided;
}

int cmd_cyclic(const Config& c)
{
    const auto gens = load_generators(c.gens, ring_override(c));
    try {
        const auto report = cyclic_generator(gens);
        json placed = json::array(), in_cyclic = json::array();
        for (const auto& v : report.placed)
            placed.push_back(to_json(v));
        for (const auto& d : report.generators_in_cyclic)
            in_cyclic.push_back(to_json(d, c.emit_certificate));
        print({{"generator", to_json(report.generator)},
               {"placed", placed},
               {"generatorsInCyclic", in_cyclic},
               {"cyclicInGenerators", to_json(report.cyclic_in_generators, c.emit_certificate)}});
        return exit_decided;
    }
    catch (const CyclicVerificationError& e) {
        std::cerr << "permod: " << e.what() << "\n" << dump_canonical(to_json(e.decision));
        return exit_verification;
    }
}

int cmd_oracle_check(const Config& c)
{
    const auto p = load_problem(c);
    const auto witness = oracle_membership(p.target, p.generators, c.max_grid);
    const auto d = membership(p.target, p.generators);
    const bool consistent = ! witness || d.member;
    json out = {{"maxGrid", c.max_grid},
                {"oracle", witness ? "yes" : "inconclusive"},
                {"member", d.member},
                {"consistent", consistent}};
    if (witness) {
        out["witness"] = to_json(*witness);
        if (! (evaluate_witness(*witness, p.generators, p.target.ring(), p.target.arity()) == p.target))
            out["consistent"] = false;
    }
    print(out);
    return out["consistent"].get<bool>() ? exit_decided : exit_verification;
}

int cmd_chain(const Config& c)
{
    if (c.chain_files.size() < 2)
        throw InputError("chain needs at least two generator-set files");
    const auto ring = ring_override(c);
    std::vector<std::vector<ModVector>> sets;
    std::vector<ModVector> all;
    for (const auto& f : c.chain_files) {
        sets.push_back(load_generators({f}, ring));
        all.insert(all.end(), sets.back().begin(), sets.back().end());
    }
    const auto [r, arity] = shape_of(c, all);
    const auto steps = chain(sets, r, arity);
    json out = json::array();
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto& s = steps[i];
        json step = {{"from", c.chain_files[i]},
                     {"to", c.chain_files[i + 1]},
                     {"contained", s.contained},
                     {"status", ! s.contained ? "not-contained" : s.proper ? "proper" : "equal"}};
        if (s.witness_index) {
            step["witnessIndex"] = *s.witness_index;
            step["witness"] = to_json(*s.witness, c.emit_certificate);
        }
        if (s.obstruction)
            step["obstruction"] = to_json(*s.obstruction, c.emit_certificate);
        out.push_back(step);
    }
    print({{"steps", out}});
    return exit_decided;
}

int cmd_random_instance(const Config& c)
{
    InstanceProfile profile;
    profile.arity = c.arity ? c.arity : 1;
    profile.max_support = c.max_support;
    profile.max_generators = c.max_generators;
    if (auto r = ring_override(c))
        profile.ring = *r;
    const auto inst = random_instance(c.seed, profile);
    const json j = to_json(inst);
    if (! c.out_dir.empty()) {
        std::filesystem::create_directories(c.out_dir);
        const std::filesystem::path dir(c.out_dir);
        std::ofstream(dir / "instance.json") << dump_canonical(j);
        std::ofstream(dir / "target.json") << dump_canonical(j["target"]);
        std::ofstream(dir / "gens.json") << dump_canonical(j["generators"]);
    }
    print(j);
    return exit_decided;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Membership in finitely generated submodules of permutation modules over (Q,<)"};
    app.require_subcommand(1);
    Config c;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--ring", c.ring, "Q, Z or GF(p); vectors read from files are converted");
        sub->add_option("--emit-certificate", c.emit_certificate, "include certificates in the output")
            ->default_val(true);
    };
    auto problem = [&](CLI::App* sub) {
        sub->add_option("--target", c.target, "target vector file");
        sub->add_option("--gens", c.gens, "generator file(s): one vector or an array")->expected(1, -1);
        sub->add_option("--instance", c.instance, "instance file holding target and generators");
    };
    auto params_option = [&](CLI::App* sub) {
        sub->add_option("--params", c.params, "parameter set, e.g. \"0,2\"")
            ->each([&](const std::string&) { c.params_given = true; });
    };

    std::map<CLI::App*, std::function<int(const Config&)>> handlers;

    auto* decide = app.add_subcommand("decide", "decide membership and print a certified decision");
    common(decide);
    problem(decide);
    params_option(decide);
    decide->add_option("--structure", c.structure, "dlo or pure-set")->check(CLI::IsMember({"dlo", "pure-set"}));
    decide->add_option("--witness-budget", c.witness_budget, "largest oracle grid searched for an explicit witness");
    handlers[decide] = cmd_decide;

    auto* verify = app.add_subcommand("verify", "re-check a decision file");
    common(verify);
    problem(verify);
    verify->add_option("--decision", c.decision, "decision file")->required();
    handlers[verify] = cmd_verify;

    auto* om = app.add_subcommand("omega", "orbit coefficient sums over a parameter set");
    common(om);
    om->add_option("--target", c.target, "vector file")->required();
    params_option(om);
    handlers[om] = cmd_omega;

    auto* all = app.add_subcommand("generates-all", "does the generated submodule equal the whole module");
    common(all);
    all->add_option("--gens", c.gens, "generator file(s)")->expected(1, -1);
    all->add_option("--arity", c.arity, "arity when no generators are given");
    handlers[all] = cmd_generates_all;

    auto* ms = app.add_subcommand("min-support", "a nonzero element with at most k terms");
    common(ms);
    ms->add_option("--gens", c.gens, "generator file(s)")->expected(1, -1);
    ms->add_option("--k", c.k, "support bound")->default_val(1);
    ms->add_option("--arity", c.arity, "arity when no generators are given");
    handlers[ms] = cmd_min_support;

    auto* cyc = app.add_subcommand("cyclic", "a single generator of the same submodule");
    common(cyc);
    cyc->add_option("--gens", c.gens, "generator file(s)")->required()->expected(1, -1);
    handlers[cyc] = cmd_cyclic;

    auto* oc = app.add_subcommand("oracle-check", "grid search for an explicit witness, compared with the decision");
    common(oc);
    problem(oc);
    oc->add_option("--max-grid", c.max_grid, "largest grid size")->default_val(10);
    handlers[oc] = cmd_oracle_check;

    auto* ch = app.add_subcommand("chain", "inclusions between consecutive generator sets");
    common(ch);
    ch->add_option("files", c.chain_files, "generator-set files")->required()->expected(2, -1);
    handlers[ch] = cmd_chain;

    auto* ri = app.add_subcommand("random-instance", "a seeded random instance");
    common(ri);
    ri->add_option("--seed", c.seed, "seed")->default_val(0);
    ri->add_option("--arity", c.arity, "arity")->default_val(1);
    ri->add_option("--max-support", c.max_support, "support points per generator")->default_val(4);
    ri->add_option("--max-generators", c.max_generators, "generator count bound")->default_val(2);
    ri->add_option("--out", c.out_dir, "also write instance.json, target.json and gens.json here");
    handlers[ri] = cmd_random_instance;

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    try {
        for (auto* sub : app.get_subcommands())
            return handlers.at(sub)(c);
    }
    catch (const InputError& e) {
        std::cerr << "permod: " << e.what() << "\n";
        return exit_input;
    }
    catch (const VerificationError& e) {
        std::cerr << "permod: " << e.what() << "\n";
        return exit_verification;
    }
    return exit_input;
}
