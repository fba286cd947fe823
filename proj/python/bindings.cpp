#include <permod/decide.hpp>
#include <permod/json_io.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

namespace py = pybind11;
using namespace permod;

namespace {

json load(const std::string& text) { return json::parse(text); }

std::vector<ModVector> generators_of(const std::string& text) { return modvectors_from_json(load(text)); }

std::pair<RingSpec, std::size_t> shape_of(const std::vector<ModVector>& gens, std::size_t arity)
{
    if (gens.empty())
        return {RingSpec::rationals(), arity ? arity : 1};
    return {gens.front().ring(), arity ? arity : gens.front().arity()};
}

std::string decide(const std::string& target, const std::string& gens, const std::string& params,
                   const std::string& structure, std::size_t witness_budget, bool emit_certificate)
{
    const auto x = modvector_from_json(load(target));
    const auto g = generators_of(gens);
    MembershipOptions options{.params = {}, .witness_budget = witness_budget};
    if (! params.empty())
        options.params = parse_param_list(params);
    const ReductSpec reduct = parse_reduct(structure);
    const Decision d = reduct == ReductSpec::none ? membership(x, g, options) : reduct_membership(x, g, reduct, options);
    return dump_canonical(to_json(d, emit_certificate));
}

bool verify(const std::string& decision, const std::string& target, const std::string& gens)
{
    return verify_certificate(decision_from_json(load(decision)), modvector_from_json(load(target)),
                              generators_of(gens));
}

std::string omega_of(const std::string& target, const std::string& params)
{
    return dump_canonical(to_json(omega(modvector_from_json(load(target)), parse_param_list(params))));
}

bool all_of(const std::string& gens, std::size_t arity)
{
    const auto g = generators_of(gens);
    const auto [ring, n] = shape_of(g, arity);
    return generates_all(g, ring, n).all;
}

std::optional<std::string> small_vector(const std::string& gens, std::size_t k, std::size_t arity)
{
    const auto g = generators_of(gens);
    const auto [ring, n] = shape_of(g, arity);
    auto v = min_support(g, k, ring, n);
    if (! v)
        return std::nullopt;
    return dump_canonical(to_json(*v));
}

std::string cyclic(const std::string& gens) { return dump_canonical(to_json(cyclic_generator(generators_of(gens)).generator)); }

std::optional<std::string> oracle_check(const std::string& target, const std::string& gens, std::size_t max_grid)
{
    auto w = oracle_membership(modvector_from_json(load(target)), generators_of(gens), max_grid);
    if (! w)
        return std::nullopt;
    return dump_canonical(to_json(*w));
}

std::string instance(std::uint64_t seed, std::size_t arity, const std::string& ring, std::size_t max_support,
                     std::size_t max_generators)
{
    InstanceProfile p;
    p.arity = arity;
    p.ring = RingSpec::parse(ring);
    p.max_support = max_support;
    p.max_generators = max_generators;
    return dump_canonical(to_json(random_instance(seed, p)));
}

std::size_t placement_count(const std::vector<std::string>& chain, const std::vector<std::string>& params)
{
    std::vector<Point> c, s;
    for (const auto& x : chain)
        c.push_back(parse_rational(x));
    for (const auto& x : params)
        s.push_back(parse_rational(x));
    return dense_linear_order().enumerate_placements(c, ParamSet(std::move(s))).size();
}

} // namespace

PYBIND11_MODULE(_permod, m)
{
    m.doc() = "Membership in finitely generated invariant submodules (JSON text in, JSON text out)";

    m.def("decide", &decide, py::arg("target"), py::arg("gens"), py::arg("params") = "", py::arg("structure") = "dlo",
          py::arg("witness_budget") = 0, py::arg("emit_certificate") = true);
    m.def("verify", &verify, py::arg("decision"), py::arg("target"), py::arg("gens"));
    m.def("omega", &omega_of, py::arg("target"), py::arg("params"));
    m.def("generates_all", &all_of, py::arg("gens"), py::arg("arity") = 0);
    m.def("min_support", &small_vector, py::arg("gens"), py::arg("k"), py::arg("arity") = 0);
    m.def("cyclic", &cyclic, py::arg("gens"));
    m.def("oracle_check", &oracle_check, py::arg("target"), py::arg("gens"), py::arg("max_grid") = 10);
    m.def("random_instance", &instance, py::arg("seed"), py::arg("arity") = 1, py::arg("ring") = "Q",
          py::arg("max_support") = 4, py::arg("max_generators") = 2);
    m.def("placement_count", &placement_count, py::arg("chain"), py::arg("params"));

    py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);
    py::register_local_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const json::exception& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });
}
