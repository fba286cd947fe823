#pragma once

#include <permod/ring.hpp>
#include <permod/structure.hpp>

#include <map>
#include <vector>

namespace permod {

// A finite formal R-linear combination of n-tuples of rationals, i.e. an
// element of the permutation module RW for W = Q^n. Zero coefficients are
// never stored; terms iterate in lexicographic tuple order.
class ModVector {
public:
    using Terms = std::map<Tuple, Scalar>;

    ModVector(RingSpec ring, std::size_t arity);

    // Adds coeff * tuple; the term disappears if its coefficient cancels.
    void add_term(Tuple tuple, const Scalar& coeff);
    // Like add_term but throws InputError on a zero coefficient or a tuple
    // already present (the file-format contract).
    void insert_term(Tuple tuple, const Scalar& coeff);

    const RingSpec& ring() const { return ring_; }
    std::size_t arity() const { return arity_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(const Tuple& t) const;

    ModVector& operator+=(const ModVector& other);
    ModVector& operator-=(const ModVector& other);
    ModVector scaled(const Scalar& s) const;
    friend ModVector operator+(ModVector a, const ModVector& b) { return a += b; }
    friend ModVector operator-(ModVector a, const ModVector& b) { return a -= b; }

    // Same tuples and coefficients reinterpreted in another ring; terms whose
    // coefficient becomes zero are dropped.
    ModVector converted(RingSpec ring) const;

    friend bool operator==(const ModVector&, const ModVector&) = default;

private:
    void check_compatible(const ModVector& other) const;

    RingSpec ring_;
    std::size_t arity_;
    Terms terms_;
};

// Image of a ModVector under Omega_S: pattern key -> coefficient sum, zero
// entries omitted.
class AugVector {
public:
    using Entries = std::map<PatternKey, Scalar>;

    explicit AugVector(RingSpec ring) : ring_(ring) {}

    void add(const PatternKey& key, const Scalar& value);
    const RingSpec& ring() const { return ring_; }
    const Entries& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    Scalar at(const PatternKey& key) const;

    AugVector& operator+=(const AugVector& other);
    AugVector scaled(const Scalar& s) const;
    friend AugVector operator+(AugVector a, const AugVector& b) { return a += b; }

    // Sum over shared keys of this[k] * other[k].
    Scalar dot(const AugVector& other) const;

    friend bool operator==(const AugVector&, const AugVector&) = default;

private:
    RingSpec ring_;
    Entries entries_;
};

// All rationals occurring as coordinates of terms of x.
ParamSet support_points(const ModVector& x);

AugVector omega(const ModVector& x, const ParamSet& params,
                const StructureOracle& oracle = dense_linear_order());

// Applies a strictly increasing partial map defined on support_points(x).
// Throws InputError if the map is not strictly increasing or misses a point.
ModVector act(const ModVector& x, const PointMap& map);

// Applies an injective partial map without the monotonicity check (used for
// reduct expansions, where the acting group is larger).
ModVector relabel(const ModVector& x, const PointMap& map);

// One vector per G_(S)-orbit on the G-orbit of v, in placement order.
std::vector<ModVector> orbit_reps_over(const ModVector& v, const ParamSet& params,
                                       const StructureOracle& oracle = dense_linear_order());

AugVector omega_empty(const ModVector& x, const StructureOracle& oracle = dense_linear_order());
bool is_aug_zero(const ModVector& x, const StructureOracle& oracle = dense_linear_order());

// G-orbit profile: omega over the empty parameter set.
inline AugVector empty_pattern_profile(const ModVector& x) { return omega_empty(x); }

// The tuple realizing a singleton pattern key over params.
Tuple singleton_tuple(const PatternKey& key, const ParamSet& params);

} // namespace permod
