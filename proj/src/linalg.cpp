#include <permod/ring.hpp>

#include <algorithm>
#include <numeric>
#include <utility>

namespace permod {

namespace {

// Element policies for the field elimination engine.

struct RationalOps {
    using Elem = Rational;
    RingSpec ring = RingSpec::rationals();

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from(const Scalar& s) const { return s.value(); }
    Scalar to(const Elem& e) const { return Scalar(ring, e); }
    static bool is_zero(const Elem& e) { return sgn(e) == 0; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem div(const Elem& a, const Elem& b) const { return a / b; }
    Elem neg(const Elem& a) const { return -a; }
};

struct PrimeOps {
    using Elem = std::uint64_t;
    RingSpec ring;
    std::uint64_t p;

    explicit PrimeOps(RingSpec r) : ring(r), p(r.modulus()) {}

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from(const Scalar& s) const { return s.value().get_num().get_ui(); }
    Scalar to(const Elem& e) const { return Scalar(ring, Rational(Integer(static_cast<unsigned long>(e)))); }
    static bool is_zero(const Elem& e) { return e == 0; }
    Elem add(Elem a, Elem b) const
    {
        unsigned __int128 s = static_cast<unsigned __int128>(a) + b;
        return static_cast<Elem>(s % p);
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const
    {
        return static_cast<Elem>(static_cast<unsigned __int128>(a) * b % p);
    }
    Elem inv(Elem a) const
    {
        // a^(p-2)
        Elem result = 1, base = a;
        std::uint64_t e = p - 2;
        while (e) {
            if (e & 1)
                result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
};

template <class V>
std::size_t first_nonzero(const std::vector<V>& v, auto is_zero)
{
    for (std::size_t i = 0; i < v.size(); ++i)
        if (! is_zero(v[i]))
            return i;
    return v.size();
}

// Row echelon basis of a span over a field, built one generator at a time.
// Every row remembers its expression in terms of the inserted generators.
template <class Ops>
class FieldBasis {
public:
    using Elem = typename Ops::Elem;

    struct Row {
        std::size_t pivot;
        std::vector<Elem> entries;
        std::vector<Elem> combo;
    };

    FieldBasis(Ops ops, std::size_t length, std::size_t generator_count) :
        ops_(std::move(ops)), length_(length), generator_count_(generator_count)
    {
    }

    void insert(std::vector<Elem> v, std::size_t generator)
    {
        std::vector<Elem> combo(generator_count_, ops_.zero());
        combo[generator] = ops_.one();
        std::size_t position = rows_.size();
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            auto f = first_nonzero(v, Ops::is_zero);
            if (f == length_)
                return;
            if (f < rows_[i].pivot) {
                position = i;
                break;
            }
            if (f == rows_[i].pivot)
                eliminate(v, combo, rows_[i]);
        }
        auto f = first_nonzero(v, Ops::is_zero);
        if (f == length_)
            return;
        if (position == rows_.size())
            position = std::upper_bound(rows_.begin(), rows_.end(), f,
                                        [](std::size_t col, const Row& r) { return col < r.pivot; }) -
                       rows_.begin();
        rows_.insert(rows_.begin() + position, Row{f, std::move(v), std::move(combo)});
    }

    // Coefficients over the generators reproducing target, if it lies in the span.
    std::optional<std::vector<Elem>> solve(std::vector<Elem> target) const
    {
        std::vector<Elem> combo(generator_count_, ops_.zero());
        for (const auto& row : rows_) {
            const Elem& lead = target[row.pivot];
            if (Ops::is_zero(lead))
                continue;
            Elem factor = ops_.div(lead, row.entries[row.pivot]);
            for (std::size_t c = row.pivot; c < length_; ++c)
                if (! Ops::is_zero(row.entries[c]))
                    target[c] = ops_.sub(target[c], ops_.mul(factor, row.entries[c]));
            for (std::size_t g = 0; g < generator_count_; ++g)
                if (! Ops::is_zero(row.combo[g]))
                    combo[g] = ops_.add(combo[g], ops_.mul(factor, row.combo[g]));
        }
        if (first_nonzero(target, Ops::is_zero) != length_)
            return std::nullopt;
        return combo;
    }

    // Basis of {phi : row . phi == 0 for every row}, one vector per free column,
    // in increasing free-column order.
    std::vector<std::vector<Elem>> orthogonal_complement() const
    {
        // Reduced row echelon form of the basis rows.
        std::vector<std::vector<Elem>> reduced;
        std::vector<std::size_t> pivots;
        for (const auto& row : rows_) {
            auto v = row.entries;
            Elem inv = ops_.div(ops_.one(), v[row.pivot]);
            for (auto& e : v)
                e = ops_.mul(e, inv);
            reduced.push_back(std::move(v));
            pivots.push_back(row.pivot);
        }
        for (std::size_t i = reduced.size(); i-- > 0;) {
            for (std::size_t j = 0; j < i; ++j) {
                Elem factor = reduced[j][pivots[i]];
                if (Ops::is_zero(factor))
                    continue;
                for (std::size_t c = pivots[i]; c < length_; ++c)
                    reduced[j][c] = ops_.sub(reduced[j][c], ops_.mul(factor, reduced[i][c]));
            }
        }

        std::vector<std::vector<Elem>> result;
        for (std::size_t free = 0; free < length_; ++free) {
            if (std::find(pivots.begin(), pivots.end(), free) != pivots.end())
                continue;
            std::vector<Elem> phi(length_, ops_.zero());
            phi[free] = ops_.one();
            for (std::size_t i = 0; i < reduced.size(); ++i)
                phi[pivots[i]] = ops_.neg(reduced[i][free]);
            result.push_back(std::move(phi));
        }
        return result;
    }

    const std::vector<Row>& rows() const { return rows_; }

private:
    void eliminate(std::vector<Elem>& v, std::vector<Elem>& combo, const Row& row) const
    {
        Elem factor = ops_.div(v[row.pivot], row.entries[row.pivot]);
        for (std::size_t c = row.pivot; c < length_; ++c)
            if (! Ops::is_zero(row.entries[c]))
                v[c] = ops_.sub(v[c], ops_.mul(factor, row.entries[c]));
        for (std::size_t g = 0; g < generator_count_; ++g)
            if (! Ops::is_zero(row.combo[g]))
                combo[g] = ops_.sub(combo[g], ops_.mul(factor, row.combo[g]));
    }

    Ops ops_;
    std::size_t length_;
    std::size_t generator_count_;
    std::vector<Row> rows_;
};

// Echelon basis of a sublattice of Z^length with positive pivots. Insertion
// merges rows sharing a pivot column by an extended-gcd step.
class IntegerBasis {
public:
    struct Row {
        std::size_t pivot;
        std::vector<Integer> entries;
        std::vector<Integer> combo;
    };

    IntegerBasis(std::size_t length, std::size_t generator_count) :
        length_(length), generator_count_(generator_count)
    {
    }

    void insert(std::vector<Integer> v, std::size_t generator)
    {
        std::vector<Integer> combo(generator_count_, 0);
        combo[generator] = 1;
        std::size_t i = 0;
        while (true) {
            auto f = first_nonzero(v, is_zero);
            if (f == length_)
                return;
            if (i == rows_.size() || f < rows_[i].pivot) {
                if (v[f] < 0) {
                    for (auto& e : v)
                        e = -e;
                    for (auto& e : combo)
                        e = -e;
                }
                rows_.insert(rows_.begin() + i, Row{f, std::move(v), std::move(combo)});
                return;
            }
            if (f == rows_[i].pivot)
                merge(rows_[i], v, combo);
            ++i;
        }
    }

    std::optional<std::vector<Integer>> solve(std::vector<Integer> target) const
    {
        std::vector<Integer> combo(generator_count_, 0);
        for (const auto& row : rows_) {
            auto f = first_nonzero(target, is_zero);
            if (f == length_)
                break;
            if (f < row.pivot)
                return std::nullopt;
            if (f > row.pivot)
                continue;
            if (! mpz_divisible_p(target[f].get_mpz_t(), row.entries[f].get_mpz_t()))
                return std::nullopt;
            Integer q = target[f] / row.entries[f];
            for (std::size_t c = f; c < length_; ++c)
                if (row.entries[c] != 0)
                    target[c] -= q * row.entries[c];
            for (std::size_t g = 0; g < generator_count_; ++g)
                if (row.combo[g] != 0)
                    combo[g] += q * row.combo[g];
        }
        if (first_nonzero(target, is_zero) != length_)
            return std::nullopt;
        return combo;
    }

    const std::vector<Row>& rows() const { return rows_; }

    static bool is_zero(const Integer& z) { return sgn(z) == 0; }

private:
    // After the call row has pivot gcd(row[p], v[p]) > 0 and v[p] == 0.
    void merge(Row& row, std::vector<Integer>& v, std::vector<Integer>& combo) const
    {
        const std::size_t p = row.pivot;
        Integer g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), row.entries[p].get_mpz_t(), v[p].get_mpz_t());
        Integer a = row.entries[p] / g, b = v[p] / g;
        for (std::size_t c = p; c < length_; ++c) {
            Integer r = row.entries[c], x = v[c];
            row.entries[c] = s * r + t * x;
            v[c] = a * x - b * r;
        }
        for (std::size_t k = 0; k < generator_count_; ++k) {
            Integer r = row.combo[k], x = combo[k];
            row.combo[k] = s * r + t * x;
            combo[k] = a * x - b * r;
        }
    }

    std::size_t length_;
    std::size_t generator_count_;
    std::vector<Row> rows_;
};

void check_shapes(std::span<const Scalar> target, std::span<const ScalarVector> generators, const RingSpec& ring)
{
    for (const auto& s : target)
        if (! (s.ring() == ring))
            throw InputError("ring mismatch: target entry over " + s.ring().to_string() + ", expected " + ring.to_string());
    for (std::size_t j = 0; j < generators.size(); ++j) {
        if (generators[j].size() != target.size())
            throw InputError("length mismatch: generator " + std::to_string(j) + " has length " +
                             std::to_string(generators[j].size()) + ", expected " + std::to_string(target.size()));
        for (const auto& s : generators[j])
            if (! (s.ring() == ring))
                throw InputError("ring mismatch: generator " + std::to_string(j) + " entry over " + s.ring().to_string());
    }
}

template <class Ops>
std::vector<typename Ops::Elem> convert(const Ops& ops, std::span<const Scalar> v)
{
    std::vector<typename Ops::Elem> out;
    out.reserve(v.size());
    for (const auto& s : v)
        out.push_back(ops.from(s));
    return out;
}

std::vector<Integer> to_integers(std::span<const Scalar> v)
{
    std::vector<Integer> out;
    out.reserve(v.size());
    for (const auto& s : v)
        out.push_back(s.value().get_num());
    return out;
}

template <class Ops>
FieldBasis<Ops> field_basis(const Ops& ops, std::span<const ScalarVector> generators, std::size_t length)
{
    FieldBasis<Ops> basis(ops, length, generators.size());
    for (std::size_t j = 0; j < generators.size(); ++j)
        basis.insert(convert(ops, generators[j]), j);
    return basis;
}

IntegerBasis integer_basis(std::span<const ScalarVector> generators, std::size_t length)
{
    IntegerBasis basis(length, generators.size());
    for (std::size_t j = 0; j < generators.size(); ++j)
        basis.insert(to_integers(generators[j]), j);
    return basis;
}

template <class Ops>
std::optional<ScalarVector> field_membership(const Ops& ops, std::span<const Scalar> target,
                                             std::span<const ScalarVector> generators)
{
    auto basis = field_basis(ops, generators, target.size());
    auto combo = basis.solve(convert(ops, target));
    if (! combo)
        return std::nullopt;
    ScalarVector out;
    for (const auto& e : *combo)
        out.push_back(ops.to(e));
    return out;
}

template <class Ops>
ScalarVector field_dual(const Ops& ops, std::span<const Scalar> target, std::span<const ScalarVector> generators)
{
    auto basis = field_basis(ops, generators, target.size());
    auto t = convert(ops, target);
    for (const auto& phi : basis.orthogonal_complement()) {
        typename Ops::Elem value = ops.zero();
        for (std::size_t i = 0; i < t.size(); ++i)
            value = ops.add(value, ops.mul(phi[i], t[i]));
        if (! Ops::is_zero(value)) {
            ScalarVector out;
            for (const auto& e : phi)
                out.push_back(ops.to(e));
            return out;
        }
    }
    throw PreconditionError("dual_functional: target lies in the span");
}

// Smith normal form D = U * A * V of a k x l integer matrix; returns the
// diagonal and V.
struct SmithForm {
    std::vector<Integer> diagonal;
    std::vector<std::vector<Integer>> column_transform; // l x l
};

SmithForm smith_form(std::vector<std::vector<Integer>> a, std::size_t cols)
{
    const std::size_t rows = a.size();
    std::vector<std::vector<Integer>> v(cols, std::vector<Integer>(cols, 0));
    for (std::size_t i = 0; i < cols; ++i)
        v[i][i] = 1;

    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (auto& row : a)
            std::swap(row[i], row[j]);
        for (auto& row : v)
            std::swap(row[i], row[j]);
    };
    // column j += q * column i
    auto add_col = [&](std::size_t j, std::size_t i, const Integer& q) {
        for (auto& row : a)
            row[j] += q * row[i];
        for (auto& row : v)
            row[j] += q * row[i];
    };
    auto add_row = [&](std::size_t j, std::size_t i, const Integer& q) {
        for (std::size_t c = 0; c < cols; ++c)
            a[j][c] += q * a[i][c];
    };

    std::vector<Integer> diagonal;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        while (true) {
            // smallest nonzero |entry| in the lower-right block, first in row-major order
            std::size_t br = rows, bc = cols;
            for (std::size_t r = t; r < rows; ++r)
                for (std::size_t c = t; c < cols; ++c)
                    if (a[r][c] != 0 && (br == rows || abs(a[r][c]) < abs(a[br][bc]))) {
                        br = r;
                        bc = c;
                    }
            if (br == rows)
                return SmithForm{std::move(diagonal), std::move(v)};
            std::swap(a[t], a[br]);
            if (bc != t)
                swap_cols(t, bc);

            bool clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (a[r][t] == 0)
                    continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[r][t].get_mpz_t(), a[t][t].get_mpz_t());
                add_row(r, t, -q);
                if (a[r][t] != 0)
                    clean = false;
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (a[t][c] == 0)
                    continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[t][c].get_mpz_t(), a[t][t].get_mpz_t());
                add_col(c, t, -q);
                if (a[t][c] != 0)
                    clean = false;
            }
            if (! clean)
                continue;
            // the pivot must divide the remaining block
            bool divides = true;
            for (std::size_t r = t + 1; r < rows && divides; ++r)
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (! mpz_divisible_p(a[r][c].get_mpz_t(), a[t][t].get_mpz_t())) {
                        add_row(t, r, 1);
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        if (a[t][t] < 0) {
            for (auto& row : v)
                row[t] = -row[t];
            a[t][t] = -a[t][t];
        }
        diagonal.push_back(a[t][t]);
    }
    return SmithForm{std::move(diagonal), std::move(v)};
}

} // namespace

std::optional<ScalarVector> span_membership(std::span<const Scalar> target,
                                            std::span<const ScalarVector> generators,
                                            const RingSpec& ring)
{
    check_shapes(target, generators, ring);
    switch (ring.kind()) {
    case RingKind::rationals: return field_membership(RationalOps{}, target, generators);
    case RingKind::prime_field: return field_membership(PrimeOps(ring), target, generators);
    case RingKind::integers: {
        auto basis = integer_basis(generators, target.size());
        auto combo = basis.solve(to_integers(target));
        if (! combo)
            return std::nullopt;
        ScalarVector out;
        for (const auto& e : *combo)
            out.emplace_back(ring, Rational(e));
        return out;
    }
    }
    return std::nullopt;
}

ScalarVector dual_functional(std::span<const Scalar> target,
                             std::span<const ScalarVector> generators,
                             const RingSpec& ring)
{
    check_shapes(target, generators, ring);
    switch (ring.kind()) {
    case RingKind::rationals: return field_dual(RationalOps{}, target, generators);
    case RingKind::prime_field: return field_dual(PrimeOps(ring), target, generators);
    case RingKind::integers: break;
    }
    throw PreconditionError("dual_functional requires a field; use dual_character over Z");
}

CharacterQZ dual_character(std::span<const Scalar> target, std::span<const ScalarVector> generators)
{
    const RingSpec ring = RingSpec::integers();
    check_shapes(target, generators, ring);
    const std::size_t length = target.size();

    auto basis = integer_basis(generators, length);
    std::vector<std::vector<Integer>> rows;
    for (const auto& row : basis.rows())
        rows.push_back(row.entries);
    auto snf = smith_form(std::move(rows), length);

    // target in the basis adapted to the lattice: t' = t V
    auto t = to_integers(target);
    std::vector<Integer> adapted(length, 0);
    for (std::size_t c = 0; c < length; ++c)
        for (std::size_t r = 0; r < length; ++r)
            if (t[r] != 0)
                adapted[c] += t[r] * snf.column_transform[r][c];

    auto character_along = [&](std::size_t index, const Rational& scale) {
        std::vector<Rational> coefficients(length);
        for (std::size_t r = 0; r < length; ++r)
            coefficients[r] = Rational(snf.column_transform[r][index]) * scale;
        return CharacterQZ(std::move(coefficients));
    };

    const std::size_t rank = snf.diagonal.size();
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < rank; ++i) {
        if (mpz_divisible_p(adapted[i].get_mpz_t(), snf.diagonal[i].get_mpz_t()))
            continue;
        if (! best || snf.diagonal[i] < snf.diagonal[*best])
            best = i;
    }
    if (best)
        return character_along(*best, Rational(1, 1) / Rational(snf.diagonal[*best]));

    for (std::size_t i = rank; i < length; ++i)
        if (adapted[i] != 0)
            return character_along(i, Rational(1) / Rational(2 * adapted[i]));

    throw PreconditionError("dual_character: target lies in the lattice");
}

std::vector<ScalarVector> span_basis(std::span<const ScalarVector> generators, std::size_t length,
                                     const RingSpec& ring)
{
    check_shapes(zero_vector(ring, length), generators, ring);
    std::vector<ScalarVector> out;
    auto from_field = [&](const auto& ops) {
        auto basis = field_basis(ops, generators, length);
        for (const auto& row : basis.rows()) {
            ScalarVector v;
            for (const auto& e : row.entries)
                v.push_back(ops.to(e));
            out.push_back(std::move(v));
        }
    };
    switch (ring.kind()) {
    case RingKind::rationals: from_field(RationalOps{}); break;
    case RingKind::prime_field: from_field(PrimeOps(ring)); break;
    case RingKind::integers: {
        auto basis = integer_basis(generators, length);
        for (const auto& row : basis.rows()) {
            ScalarVector v;
            for (const auto& e : row.entries)
                v.emplace_back(ring, Rational(e));
            out.push_back(std::move(v));
        }
        break;
    }
    }
    return out;
}

std::optional<ScalarVector> span_intersect_coords(std::span<const ScalarVector> generators,
                                                  std::span<const std::size_t> coords,
                                                  std::size_t length,
                                                  const RingSpec& ring)
{
    check_shapes(zero_vector(ring, length), generators, ring);
    std::vector<bool> inside(length, false);
    for (auto c : coords) {
        if (c >= length)
            throw InputError("coordinate " + std::to_string(c) + " out of range");
        inside[c] = true;
    }
    // Columns outside coords first: echelon rows with a pivot in the second
    // block vanish on every outside column.
    std::vector<std::size_t> order;
    for (std::size_t c = 0; c < length; ++c)
        if (! inside[c])
            order.push_back(c);
    const std::size_t outside = order.size();
    for (std::size_t c = 0; c < length; ++c)
        if (inside[c])
            order.push_back(c);

    std::vector<ScalarVector> permuted;
    for (const auto& g : generators) {
        ScalarVector p;
        for (auto c : order)
            p.push_back(g[c]);
        permuted.push_back(std::move(p));
    }

    auto unpermute = [&](auto&& entries, auto&& to_scalar) {
        ScalarVector out = zero_vector(ring, length);
        for (std::size_t i = 0; i < length; ++i)
            out[order[i]] = to_scalar(entries[i]);
        return out;
    };

    auto from_field = [&](const auto& ops) -> std::optional<ScalarVector> {
        auto basis = field_basis(ops, permuted, length);
        for (const auto& row : basis.rows())
            if (row.pivot >= outside)
                return unpermute(row.entries, [&](const auto& e) { return ops.to(e); });
        return std::nullopt;
    };

    switch (ring.kind()) {
    case RingKind::rationals: return from_field(RationalOps{});
    case RingKind::prime_field: return from_field(PrimeOps(ring));
    case RingKind::integers: {
        auto basis = integer_basis(permuted, length);
        for (const auto& row : basis.rows())
            if (row.pivot >= outside)
                return unpermute(row.entries, [&](const Integer& e) { return Scalar(ring, Rational(e)); });
        return std::nullopt;
    }
    }
    return std::nullopt;
}

} // namespace permod
