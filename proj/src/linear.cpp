#include "kernatom/linear.hpp"

#include <algorithm>
#include <set>

#include "kernatom/errors.hpp"

namespace kernatom {

namespace {

constexpr std::uint64_t kFamilyEnumerationCap = 4096;
constexpr std::uint64_t kBruteForceCap = 1ULL << 20;

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return result;
}

// p^e, or cap + 1 once it passes cap.
std::uint64_t pow_capped(std::uint64_t p, std::size_t e, std::uint64_t cap) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < e; ++i) {
        v *= p;
        if (v > cap) return cap + 1;
    }
    return v;
}

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string describe(const Vector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
    return out + ")";
}

// In-place Gauss-Jordan elimination choosing pivots only among the first
// pivot_limit columns.
std::vector<std::size_t> eliminate(ExactMatrix& m, std::size_t pivot_limit) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_limit && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m.at(pivot, c).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
        const Scalar scale = m.at(r, c).inverse();
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * scale;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            const Scalar factor = m.at(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - factor * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

bool is_zero_vector(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::vector<std::uint64_t> residues(const Vector& v) {
    std::vector<std::uint64_t> out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(s.residue());
    return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::gf(std::uint64_t p) {
    if (p >= (1ULL << 32) || !kernatom::is_prime(p))
        throw NotPrime("GF(p) requires a prime p below 2^32", {{"p", std::to_string(p)}});
    return Field(Kind::prime, p);
}

std::string Field::name() const {
    return kind_ == Kind::rationals ? "Q" : "GF(" + std::to_string(p_) + ")";
}

Scalar Scalar::zero(const Field& field) { return from_integer(field, 0); }
Scalar Scalar::one(const Field& field) { return from_integer(field, 1); }

Scalar Scalar::from_integer(const Field& field, long value) {
    if (!field.is_prime()) return Scalar(field, mpq_class(value));
    const auto p = static_cast<long long>(field.characteristic());
    long long r = static_cast<long long>(value) % p;
    if (r < 0) r += p;
    return Scalar(field, static_cast<std::uint64_t>(r));
}

Scalar Scalar::from_rational(const Field& field, const mpq_class& value) {
    mpq_class q = value;
    q.canonicalize();
    if (!field.is_prime()) return Scalar(field, q);
    const mpz_class p = static_cast<unsigned long>(field.characteristic());
    mpz_class num = q.get_num() % p;
    if (num < 0) num += p;
    mpz_class den = q.get_den() % p;
    if (den == 0) throw DivisionByZero("denominator vanishes mod p", {{"value", q.get_str()}});
    const auto n = num.get_ui();
    const auto d = den.get_ui();
    const std::uint64_t pp = field.characteristic();
    return Scalar(field, n * pow_mod(d, pp - 2, pp) % pp);
}

Scalar Scalar::parse(const Field& field, const std::string& text) {
    std::string body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.erase(body.begin());
    }
    const auto slash = body.find('/');
    const std::string num = body.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw SpecError("expected an integer or \"num/den\" with decimal digits", {{"text", text}});
    const mpz_class d(den, 10);
    if (d == 0) throw DivisionByZero("zero denominator", {{"text", text}});
    mpz_class n(num, 10);
    if (negative) n = -n;
    return from_rational(field, mpq_class(n, d));
}

bool Scalar::is_zero() const noexcept {
    if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
    return std::get<std::uint64_t>(value_) == 0;
}

const mpq_class& Scalar::rational() const {
    if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
    throw FieldMismatch("residue has no rational value");
}

std::uint64_t Scalar::residue() const {
    if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r;
    throw FieldMismatch("rational has no residue value");
}

void Scalar::require_same_field(const Scalar& other) const {
    if (!(field_ == other.field_))
        throw FieldMismatch("operands belong to different fields",
                            {{"left", field_.name()}, {"right", other.field_.name()}});
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    require_same_field(rhs);
    if (!field_.is_prime()) return Scalar(field_, mpq_class(rational() + rhs.rational()));
    return Scalar(field_, (residue() + rhs.residue()) % field_.characteristic());
}

Scalar Scalar::operator-(const Scalar& rhs) const {
    require_same_field(rhs);
    if (!field_.is_prime()) return Scalar(field_, mpq_class(rational() - rhs.rational()));
    const std::uint64_t p = field_.characteristic();
    return Scalar(field_, (residue() + p - rhs.residue()) % p);
}

Scalar Scalar::operator*(const Scalar& rhs) const {
    require_same_field(rhs);
    if (!field_.is_prime()) return Scalar(field_, mpq_class(rational() * rhs.rational()));
    return Scalar(field_, residue() * rhs.residue() % field_.characteristic());
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("zero has no inverse");
    if (!field_.is_prime()) return Scalar(field_, mpq_class(1 / rational()));
    const std::uint64_t p = field_.characteristic();
    return Scalar(field_, pow_mod(residue(), p - 2, p));
}

Scalar Scalar::operator/(const Scalar& rhs) const {
    require_same_field(rhs);
    return *this * rhs.inverse();
}

Scalar Scalar::operator-() const { return zero(field_) - *this; }

bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::to_string() const {
    if (field_.is_prime()) return std::to_string(residue());
    return rational().get_str();
}

ExactMatrix::ExactMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(field)) {
    if (rows == 0 || cols == 0)
        throw DimensionMismatch("matrix dimensions must be positive",
                                {{"rows", std::to_string(rows)}, {"cols", std::to_string(cols)}});
}

ExactMatrix ExactMatrix::from_rows(const Field& field, const std::vector<Vector>& rows) {
    if (rows.empty()) throw DimensionMismatch("matrix needs at least one row");
    ExactMatrix m(field, rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_)
            throw DimensionMismatch("ragged matrix rows", {{"row", std::to_string(r)}});
        for (std::size_t c = 0; c < m.cols_; ++c) {
            if (!(rows[r][c].field() == field))
                throw FieldMismatch("entry belongs to another field",
                                    {{"row", std::to_string(r)}, {"col", std::to_string(c)}});
            m.at(r, c) = rows[r][c];
        }
    }
    return m;
}

ExactMatrix ExactMatrix::from_integers(const Field& field, const std::vector<std::vector<long>>& rows) {
    std::vector<Vector> converted;
    for (const auto& row : rows) {
        Vector v;
        for (long x : row) v.push_back(Scalar::from_integer(field, x));
        converted.push_back(std::move(v));
    }
    return from_rows(field, converted);
}

Vector ExactMatrix::row(std::size_t r) const {
    return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector zero_vector(const Field& field, std::size_t n) { return Vector(n, Scalar::zero(field)); }

Vector multiply(const ExactMatrix& m, const Vector& v) {
    if (v.size() != m.cols())
        throw DimensionMismatch("vector length differs from column count",
                                {{"length", std::to_string(v.size())}, {"cols", std::to_string(m.cols())}});
    Vector out = zero_vector(m.field(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r] = out[r] + m.at(r, c) * v[c];
    return out;
}

ExactMatrix scaled(const ExactMatrix& m, const Scalar& factor) {
    ExactMatrix out = m;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = m.at(r, c) * factor;
    return out;
}

Rref rref(const ExactMatrix& m) {
    Rref result{m, 0, {}};
    result.pivot_cols = eliminate(result.reduced, m.cols());
    result.rank = result.pivot_cols.size();
    const std::size_t free_cols = m.cols() - result.rank;
    if (result.rank > std::min(m.rows(), m.cols()) || result.rank + free_cols != m.cols())
        throw InternalCheckFailed("rank-nullity violated");
    return result;
}

std::vector<Vector> null_space_basis(const ExactMatrix& m) {
    const Rref r = rref(m);
    const Field& field = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : r.pivot_cols) is_pivot[c] = true;

    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v = zero_vector(field, m.cols());
        v[f] = Scalar::one(field);
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) v[r.pivot_cols[i]] = -r.reduced.at(i, f);
        if (!is_zero_vector(multiply(m, v)))
            throw InternalCheckFailed("null space vector does not satisfy M k = 0", {{"k", describe(v)}});
        basis.push_back(std::move(v));
    }
    return basis;
}

Vector AffineSolutionSet::member(const Vector& coefficients) const {
    if (coefficients.size() != kernel_basis_.size())
        throw DimensionMismatch("coefficient tuple length differs from kernel dimension",
                                {{"length", std::to_string(coefficients.size())},
                                 {"dimension", std::to_string(kernel_basis_.size())}});
    Vector x = particular_;
    for (std::size_t i = 0; i < kernel_basis_.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) x[j] = x[j] + coefficients[i] * kernel_basis_[i][j];
    return x;
}

AffineSolutionSet make_solution_set(const ExactMatrix& m, const Vector& b, Vector particular,
                                    std::vector<Vector> kernel_basis) {
    if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length differs from row count");
    if (multiply(m, particular) != b)
        throw NotASolutionSet("particular solution does not satisfy M y0 = b", {{"y0", describe(particular)}});
    for (const auto& k : kernel_basis)
        if (!is_zero_vector(multiply(m, k)))
            throw NotASolutionSet("kernel vector does not satisfy M k = 0", {{"k", describe(k)}});
    if (!kernel_basis.empty()) {
        const auto basis_rank = rref(ExactMatrix::from_rows(m.field(), kernel_basis)).rank;
        if (basis_rank != kernel_basis.size())
            throw NotASolutionSet("kernel basis is linearly dependent",
                                  {{"rank", std::to_string(basis_rank)},
                                   {"vectors", std::to_string(kernel_basis.size())}});
    }
    return AffineSolutionSet(m.field(), std::move(particular), std::move(kernel_basis));
}

SolveOutcome solve_affine(const ExactMatrix& m, const Vector& b) {
    if (b.size() != m.rows())
        throw DimensionMismatch("right-hand side length differs from row count",
                                {{"length", std::to_string(b.size())}, {"rows", std::to_string(m.rows())}});
    const Field& field = m.field();
    for (const auto& s : b)
        if (!(s.field() == field)) throw FieldMismatch("right-hand side belongs to another field");

    // [M | b | I]: the identity block records the row operations so a
    // contradictory row yields its certificate directly.
    const std::size_t n = m.cols();
    ExactMatrix aug(field, m.rows(), n + 1 + m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n) = b[r];
        aug.at(r, n + 1 + r) = Scalar::one(field);
    }
    const auto pivots = eliminate(aug, n + 1);

    if (!pivots.empty() && pivots.back() == n) {
        const std::size_t row = pivots.size() - 1;
        Vector cert;
        for (std::size_t j = 0; j < m.rows(); ++j) cert.push_back(aug.at(row, n + 1 + j));
        Scalar rhs = Scalar::zero(field);
        for (std::size_t j = 0; j < m.rows(); ++j) rhs = rhs + cert[j] * b[j];
        Vector combo = zero_vector(field, n);
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t j = 0; j < m.rows(); ++j) combo[c] = combo[c] + cert[j] * m.at(j, c);
        if (!is_zero_vector(combo) || rhs.is_zero())
            throw InternalCheckFailed("inconsistency certificate does not verify", {{"c", describe(cert)}});
        return Inconsistent{std::move(cert), std::move(rhs)};
    }

    Vector particular = zero_vector(field, n);
    for (std::size_t i = 0; i < pivots.size(); ++i) particular[pivots[i]] = aug.at(i, n);
    return make_solution_set(m, b, std::move(particular), null_space_basis(m));
}

std::string FiberCardinality::to_string() const {
    if (kind == Kind::infinite) return "infinite (dimension " + std::to_string(dimension) + ")";
    return count.get_str();
}

FiberCardinality fiber_cardinality(const ExactMatrix& m) {
    const std::size_t nullity = m.cols() - rref(m).rank;
    FiberCardinality out;
    out.dimension = nullity;
    if (m.field().is_prime()) {
        mpz_ui_pow_ui(out.count.get_mpz_t(), static_cast<unsigned long>(m.field().characteristic()),
                      static_cast<unsigned long>(nullity));
    } else if (nullity > 0) {
        out.kind = FiberCardinality::Kind::infinite;
        out.count = 0;
    }
    return out;
}

bool verify_translation_family(const ExactMatrix& m, const Vector& b, const AffineSolutionSet& solutions,
                               const std::vector<Vector>& coefficient_samples) {
    const Field& field = m.field();
    if (!(solutions.field() == field)) throw FieldMismatch("solution set belongs to another field");
    if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length differs from row count");
    for (const auto& c : coefficient_samples) {
        Vector x = solutions.member(c);
        if (multiply(m, x) != b)
            throw NotASolutionSet("family member does not solve the system",
                                  {{"c", describe(c)}, {"x", describe(x)}});
    }
    if (!field.is_prime()) return true;

    const std::uint64_t p = field.characteristic();
    const std::size_t d = solutions.dimension();
    const std::size_t n = m.cols();
    const std::uint64_t family_size = pow_capped(p, d, kFamilyEnumerationCap);
    if (family_size > kFamilyEnumerationCap) return true;

    std::set<std::vector<std::uint64_t>> family;
    Vector coeffs = zero_vector(field, d);
    for (std::uint64_t t = 0; t < family_size; ++t) {
        std::uint64_t rest = t;
        for (std::size_t i = 0; i < d; ++i) {
            coeffs[i] = Scalar::from_integer(field, static_cast<long>(rest % p));
            rest /= p;
        }
        Vector x = solutions.member(coeffs);
        if (multiply(m, x) != b)
            throw NotASolutionSet("family member does not solve the system",
                                  {{"c", describe(coeffs)}, {"x", describe(x)}});
        family.insert(residues(x));
    }
    if (family.size() != family_size)
        throw NotASolutionSet("family members are not distinct",
                              {{"distinct", std::to_string(family.size())},
                               {"expected", std::to_string(family_size)}});

    const std::uint64_t space = pow_capped(p, n, kBruteForceCap);
    if (space > kBruteForceCap) return true;

    // Every x in GF(p)^n with M x = b, by direct enumeration.
    std::vector<std::vector<std::uint64_t>> rows(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows[r] = residues(m.row(r));
    const auto target = residues(b);
    std::vector<std::uint64_t> x(n, 0);
    std::size_t solved = 0;
    for (std::uint64_t t = 0; t < space; ++t) {
        bool ok = true;
        for (std::size_t r = 0; r < m.rows() && ok; ++r) {
            std::uint64_t acc = 0;
            for (std::size_t c = 0; c < n; ++c) acc = (acc + rows[r][c] * x[c]) % p;
            ok = acc == target[r];
        }
        if (ok) {
            ++solved;
            if (!family.contains(x)) {
                Vector missing;
                for (auto v : x) missing.push_back(Scalar::from_integer(field, static_cast<long>(v)));
                throw NotASolutionSet("solution outside the family", {{"x", describe(missing)}});
            }
        }
        for (std::size_t c = 0; c < n; ++c) {
            if (++x[c] < p) break;
            x[c] = 0;
        }
    }
    if (solved != family.size())
        throw NotASolutionSet("family does not exhaust the solution set",
                              {{"brute_force", std::to_string(solved)},
                               {"family", std::to_string(family.size())}});
    return true;
}

}  // namespace kernatom
