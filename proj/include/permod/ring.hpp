#pragma once

#include <permod/error.hpp>

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permod {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q" or "k" (optionally signed). Rejects zero denominators and
// anything else; the result is canonical.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);

// Representative of q modulo 1 in [0, 1).
Rational frac_part(const Rational& q);

enum class RingKind { rationals, prime_field, integers };

// One of Q, GF(p), Z. The modulus is checked for primality on construction.
class RingSpec {
public:
    static RingSpec rationals() { return RingSpec(RingKind::rationals, 0); }
    static RingSpec integers() { return RingSpec(RingKind::integers, 0); }
    static RingSpec prime_field(std::uint64_t p);

    // "Q", "Z", "GF(p)".
    static RingSpec parse(std::string_view text);
    std::string to_string() const;

    RingKind kind() const { return kind_; }
    std::uint64_t modulus() const { return p_; }
    bool is_field() const { return kind_ != RingKind::integers; }

    friend bool operator==(const RingSpec&, const RingSpec&) = default;

private:
    RingSpec(RingKind kind, std::uint64_t p) : kind_(kind), p_(p) {}

    RingKind kind_;
    std::uint64_t p_;
};

// An exact element of a RingSpec. Values are canonicalized on construction
// (lowest terms, residues in [0,p)), so equality is structural.
class Scalar {
public:
    explicit Scalar(RingSpec ring) : ring_(ring) {}
    Scalar(RingSpec ring, long value);
    // Throws InputError if q has no image in the ring (non-integral for Z,
    // denominator divisible by p for GF(p)).
    Scalar(RingSpec ring, const Rational& q);

    static Scalar zero(RingSpec ring) { return Scalar(ring); }
    static Scalar one(RingSpec ring) { return Scalar(ring, 1L); }

    // Accepts "p/q", "k", and "k mod p" (the latter only for GF(p) with matching p).
    static Scalar parse(RingSpec ring, std::string_view text);
    std::string to_string() const;

    const RingSpec& ring() const { return ring_; }
    // Rational value (for GF(p) the residue in [0,p)).
    const Rational& value() const { return value_; }
    bool is_zero() const { return sgn(value_) == 0; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

    // Field inverse; throws PreconditionError on zero or over Z.
    Scalar inverse() const;

    friend bool operator==(const Scalar& a, const Scalar& b)
    {
        return a.ring_ == b.ring_ && a.value_ == b.value_;
    }

private:
    void canonicalize();
    void check_ring(const Scalar& other) const;

    RingSpec ring_;
    Rational value_;
};

using ScalarVector = std::vector<Scalar>;

ScalarVector zero_vector(RingSpec ring, std::size_t length);
Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);

// Dense grid of scalars over one ring.
class ExactMatrix {
public:
    ExactMatrix(RingSpec ring, std::size_t rows, std::size_t cols);
    static ExactMatrix from_rows(RingSpec ring, std::span<const ScalarVector> rows, std::size_t cols);

    RingSpec ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Scalar value);
    ScalarVector row(std::size_t r) const;

private:
    RingSpec ring_;
    std::size_t rows_, cols_;
    std::vector<Scalar> entries_;
};

// A character Z^l -> R/Z, x |-> sum_i coefficient_i * x_i (mod 1).
class CharacterQZ {
public:
    CharacterQZ() = default;
    // Coefficients are reduced into [0,1).
    explicit CharacterQZ(std::vector<Rational> coefficients);

    const std::vector<Rational>& coefficients() const { return coefficients_; }
    // Value in [0,1) on an integer vector of matching length.
    Rational evaluate(std::span<const Scalar> x) const;
    // Least common denominator of the coefficients.
    Integer denominator() const;

private:
    std::vector<Rational> coefficients_;
};

// Exact membership of target in the R-span of the generators. On success
// returns c with sum_j c_j * generators[j] == target. Fields use Gaussian
// elimination; Z uses a Hermite-style echelon basis and requires an integral
// solution.
std::optional<ScalarVector> span_membership(std::span<const Scalar> target,
                                            std::span<const ScalarVector> generators,
                                            const RingSpec& ring);

// For a non-member over a field: phi with phi.g == 0 for every generator and
// phi.target != 0, taken from a basis of the orthogonal complement.
ScalarVector dual_functional(std::span<const Scalar> target,
                             std::span<const ScalarVector> generators,
                             const RingSpec& ring);

// For a non-member over Z: chi vanishing mod 1 on every generator and not on
// target, built from the Smith normal form of the generator lattice.
CharacterQZ dual_character(std::span<const Scalar> target, std::span<const ScalarVector> generators);

// Echelon basis of the span (field) or lattice (Z) of the generators.
std::vector<ScalarVector> span_basis(std::span<const ScalarVector> generators, std::size_t length,
                                     const RingSpec& ring);

// A nonzero element of the span vanishing outside coords, or nullopt.
std::optional<ScalarVector> span_intersect_coords(std::span<const ScalarVector> generators,
                                                  std::span<const std::size_t> coords,
                                                  std::size_t length,
                                                  const RingSpec& ring);

} // namespace permod
