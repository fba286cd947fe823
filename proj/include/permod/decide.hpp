#pragma once

#include <permod/oracle.hpp>
#include <permod/pmod.hpp>

#include <map>
#include <optional>
#include <variant>
#include <vector>

namespace permod {

struct SpanTerm {
    Scalar coeff;
    ModVector rep;
};

// YES: sum coeff * omega(rep) == omega(target); optionally an explicit
// combination of acted generators equal to the target.
struct SpanCertificate {
    std::vector<SpanTerm> terms;
    std::optional<ExplicitWitness> explicit_witness;
};

// NO over a field: an orbit-constant functional (pattern -> value) that kills
// every representative and not the target.
struct FunctionalCertificate {
    AugVector functional;
};

// NO over Z: a character into Q/Z (pattern -> coefficient in [0,1)).
struct CharacterCertificate {
    std::map<PatternKey, Rational> character;

    Rational evaluate(const AugVector& v) const;
    Integer denominator() const;
};

using Certificate = std::variant<SpanCertificate, FunctionalCertificate, CharacterCertificate>;

struct Decision {
    bool member = false;
    Certificate certificate;
    ParamSet params;
    std::size_t rep_count = 0;
    RingSpec ring = RingSpec::rationals();
    ReductSpec structure = ReductSpec::none;
};

struct MembershipOptions {
    // Must contain support_points(target) when set.
    std::optional<ParamSet> params;
    // Largest oracle grid searched for an explicit YES witness; 0 disables.
    std::size_t witness_budget = 0;
};

// Union over generators of orbit_reps_over(g, params), identical vectors
// (generators sharing a G-orbit) kept once, zero vectors dropped.
std::vector<ModVector> representatives(const std::vector<ModVector>& generators, const ParamSet& params);

Decision membership(const ModVector& target, const std::vector<ModVector>& generators,
                    const MembershipOptions& options = {});

// Recomputes representatives and omega images from scratch and re-checks the
// certificate identities.
bool verify_certificate(const Decision& decision, const ModVector& target, const std::vector<ModVector>& generators);

struct GeneratesAllReport {
    bool all = false;
    std::vector<std::pair<Tuple, Decision>> per_rep;
};

// Does <generators> equal the whole module RW (W = Q^arity)?
GeneratesAllReport generates_all(const std::vector<ModVector>& generators, RingSpec ring, std::size_t arity);

// A nonzero vector of <generators> with at most k terms, or nullopt.
std::optional<ModVector> min_support(const std::vector<ModVector>& generators, std::size_t k, RingSpec ring,
                                     std::size_t arity);

// Each generator acted on by every reduct_expansion of its support points.
std::vector<ModVector> expand_reduct(const std::vector<ModVector>& generators, ReductSpec reduct);

Decision reduct_membership(const ModVector& target, const std::vector<ModVector>& generators, ReductSpec reduct,
                           const MembershipOptions& options = {});

struct CyclicReport {
    ModVector generator;
    std::vector<ModVector> placed;
    std::vector<Decision> generators_in_cyclic; // v_i in <x>
    Decision cyclic_in_generators;              // x in <v_1..v_k>
};

class CyclicVerificationError : public VerificationError {
public:
    CyclicVerificationError(const std::string& what, Decision failing) :
        VerificationError(what), decision(std::move(failing))
    {
    }
    Decision decision;
};

// Places generator i into the block (2i, 2i+1), sums, and verifies that the
// sum generates the same module. Generators must be aug-zero over a field.
CyclicReport cyclic_generator(const std::vector<ModVector>& generators);

struct ChainStep {
    bool contained = false;           // <A_i> <= <A_{i+1}>
    bool proper = false;              // contained and some generator of A_{i+1} is outside <A_i>
    std::optional<std::size_t> witness_index;
    std::optional<Decision> witness;  // the NO decision for that generator
    std::optional<Decision> obstruction; // when not contained: a generator of A_i outside <A_{i+1}>
};

std::vector<ChainStep> chain(const std::vector<std::vector<ModVector>>& sets, RingSpec ring, std::size_t arity);

} // namespace permod
