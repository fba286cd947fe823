#include <permod/ring.hpp>

#include <algorithm>
#include <charconv>
#include <numeric>

namespace permod {

namespace {

bool all_digits(std::string_view s)
{
    return ! s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string_view trim(std::string_view s)
{
    while (! s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    while (! s.empty() && s.back() == ' ')
        s.remove_suffix(1);
    return s;
}

Integer mod_floor(const Integer& a, const Integer& m)
{
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view s = trim(text);
    std::string_view body = s;
    if (! body.empty() && (body.front() == '-' || body.front() == '+'))
        body.remove_prefix(1);
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (! all_digits(num) || ! all_digits(den))
        throw InputError("invalid rational \"" + std::string(text) + "\"");

    Integer n{std::string(num)}, d{std::string(den)};
    if (d == 0)
        throw InputError("invalid rational \"" + std::string(text) + "\": zero denominator");
    if (s.front() == '-')
        n = -n;
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q)
{
    return q.get_str();
}

Rational frac_part(const Rational& q)
{
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    Rational r = q - Rational(fl);
    r.canonicalize();
    return r;
}

RingSpec RingSpec::prime_field(std::uint64_t p)
{
    Integer z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
    if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
        throw InputError("GF(p) requires a prime modulus, got " + std::to_string(p));
    return RingSpec(RingKind::prime_field, p);
}

RingSpec RingSpec::parse(std::string_view text)
{
    std::string_view s = trim(text);
    if (s == "Q")
        return rationals();
    if (s == "Z")
        return integers();
    if (s.size() > 4 && s.substr(0, 3) == "GF(" && s.back() == ')') {
        std::string_view digits = s.substr(3, s.size() - 4);
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc() && ptr == digits.data() + digits.size())
            return prime_field(p);
    }
    throw InputError("unknown ring \"" + std::string(text) + "\" (expected Q, Z or GF(p))");
}

std::string RingSpec::to_string() const
{
    switch (kind_) {
    case RingKind::rationals: return "Q";
    case RingKind::integers: return "Z";
    case RingKind::prime_field: return "GF(" + std::to_string(p_) + ")";
    }
    return "?";
}

Scalar::Scalar(RingSpec ring, long value) : ring_(ring), value_(value)
{
    canonicalize();
}

Scalar::Scalar(RingSpec ring, const Rational& q) : ring_(ring), value_(q)
{
    canonicalize();
}

void Scalar::canonicalize()
{
    value_.canonicalize();
    switch (ring_.kind()) {
    case RingKind::rationals: break;
    case RingKind::integers:
        if (value_.get_den() != 1)
            throw InputError("value " + value_.get_str() + " is not an integer");
        break;
    case RingKind::prime_field: {
        Integer p(static_cast<unsigned long>(ring_.modulus()));
        Integer num = mod_floor(value_.get_num(), p);
        Integer den = mod_floor(value_.get_den(), p);
        if (den == 0)
            throw InputError("value " + value_.get_str() + " has no image in " + ring_.to_string());
        if (den != 1) {
            Integer inv;
            mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
            num = mod_floor(num * inv, p);
        }
        value_ = Rational(num);
        break;
    }
    }
}

Scalar Scalar::parse(RingSpec ring, std::string_view text)
{
    std::string_view s = trim(text);
    auto mod = s.find(" mod ");
    if (mod != std::string_view::npos) {
        if (ring.kind() != RingKind::prime_field)
            throw InputError("scalar \"" + std::string(text) + "\" is a residue but the ring is " + ring.to_string());
        std::string_view modulus = trim(s.substr(mod + 5));
        if (! all_digits(modulus) || Integer(std::string(modulus)) != Integer(static_cast<unsigned long>(ring.modulus())))
            throw InputError("scalar \"" + std::string(text) + "\" does not match " + ring.to_string());
        s = s.substr(0, mod);
    }
    return Scalar(ring, parse_rational(s));
}

std::string Scalar::to_string() const
{
    if (ring_.kind() == RingKind::prime_field)
        return value_.get_str() + " mod " + std::to_string(ring_.modulus());
    return value_.get_str();
}

void Scalar::check_ring(const Scalar& other) const
{
    if (! (ring_ == other.ring_))
        throw InputError("ring mismatch: " + ring_.to_string() + " vs " + other.ring_.to_string());
}

Scalar Scalar::operator-() const
{
    Scalar r(ring_);
    r.value_ = -value_;
    if (ring_.kind() == RingKind::prime_field)
        r.canonicalize();
    return r;
}

Scalar& Scalar::operator+=(const Scalar& other)
{
    check_ring(other);
    value_ += other.value_;
    if (ring_.kind() == RingKind::prime_field)
        canonicalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& other)
{
    check_ring(other);
    value_ -= other.value_;
    if (ring_.kind() == RingKind::prime_field)
        canonicalize();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& other)
{
    check_ring(other);
    value_ *= other.value_;
    if (ring_.kind() == RingKind::prime_field)
        canonicalize();
    return *this;
}

Scalar Scalar::inverse() const
{
    if (! ring_.is_field())
        throw PreconditionError("inverse over Z");
    if (is_zero())
        throw PreconditionError("inverse of zero");
    return Scalar(ring_, Rational(1) / value_);
}

ScalarVector zero_vector(RingSpec ring, std::size_t length)
{
    return ScalarVector(length, Scalar::zero(ring));
}

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b)
{
    if (a.size() != b.size())
        throw InputError("length mismatch in dot product");
    if (a.empty())
        throw InputError("empty dot product has no ring");
    Scalar sum = Scalar::zero(a.front().ring());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (! a[i].is_zero() && ! b[i].is_zero())
            sum += a[i] * b[i];
    return sum;
}

ExactMatrix::ExactMatrix(RingSpec ring, std::size_t rows, std::size_t cols) :
    ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(ring))
{
}

ExactMatrix ExactMatrix::from_rows(RingSpec ring, std::span<const ScalarVector> rows, std::size_t cols)
{
    ExactMatrix m(ring, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw InputError("row " + std::to_string(r) + " has length " + std::to_string(rows[r].size()) +
                             ", expected " + std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, rows[r][c]);
    }
    return m;
}

void ExactMatrix::set(std::size_t r, std::size_t c, Scalar value)
{
    if (! (value.ring() == ring_))
        throw InputError("ring mismatch in matrix entry");
    entries_[r * cols_ + c] = std::move(value);
}

ScalarVector ExactMatrix::row(std::size_t r) const
{
    return ScalarVector(entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_);
}

CharacterQZ::CharacterQZ(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients))
{
    for (auto& c : coefficients_)
        c = frac_part(c);
}

Rational CharacterQZ::evaluate(std::span<const Scalar> x) const
{
    if (x.size() != coefficients_.size())
        throw InputError("character length mismatch");
    Rational sum = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].ring().kind() != RingKind::integers)
            throw InputError("characters evaluate integer vectors only");
        sum += coefficients_[i] * x[i].value();
    }
    return frac_part(sum);
}

Integer CharacterQZ::denominator() const
{
    Integer l = 1;
    for (auto& c : coefficients_)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
}

} // namespace permod
