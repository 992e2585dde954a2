#pragma once

// Exact linear algebra over the rationals and prime fields GF(p): reduced
// row-echelon form, null spaces, affine solution families, and fiber
// cardinalities of linear maps.

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace kernatom {

class Field {
public:
    enum class Kind { rationals, prime };

    static Field rationals() { return Field(Kind::rationals, 0); }
    // Throws NotPrime unless 2 <= p < 2^32 and p is prime (trial division).
    static Field gf(std::uint64_t p);

    Kind kind() const noexcept { return kind_; }
    bool is_prime() const noexcept { return kind_ == Kind::prime; }
    std::uint64_t characteristic() const noexcept { return p_; }
    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    Field(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}
    Kind kind_;
    std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

// Element of a Field. Rationals are kept in lowest terms with a positive
// denominator; residues in 0..p-1. Mixing fields throws FieldMismatch.
class Scalar {
public:
    static Scalar zero(const Field& field);
    static Scalar one(const Field& field);
    static Scalar from_integer(const Field& field, long value);
    static Scalar from_rational(const Field& field, const mpq_class& value);
    // Accepts "n", "-n" or "n/d" with decimal digits only. Throws SpecError
    // on any other text and DivisionByZero for a zero denominator (or one
    // divisible by p).
    static Scalar parse(const Field& field, const std::string& text);

    const Field& field() const noexcept { return field_; }
    bool is_zero() const noexcept;
    const mpq_class& rational() const;
    std::uint64_t residue() const;

    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    // Throws DivisionByZero.
    Scalar operator/(const Scalar& rhs) const;
    Scalar operator-() const;
    Scalar inverse() const;

    friend bool operator==(const Scalar& a, const Scalar& b);

    // Integers as "n", other rationals as "n/d", residues as their value.
    std::string to_string() const;

private:
    Scalar(Field field, mpq_class q) : field_(field), value_(std::move(q)) {}
    Scalar(Field field, std::uint64_t r) : field_(field), value_(r) {}
    void require_same_field(const Scalar& other) const;

    Field field_;
    std::variant<mpq_class, std::uint64_t> value_;
};

using Vector = std::vector<Scalar>;

class ExactMatrix {
public:
    // Zero matrix. Throws DimensionMismatch for empty shapes.
    ExactMatrix(Field field, std::size_t rows, std::size_t cols);
    // Throws DimensionMismatch for ragged/empty input, FieldMismatch when an
    // entry belongs to another field.
    static ExactMatrix from_rows(const Field& field, const std::vector<Vector>& rows);
    static ExactMatrix from_integers(const Field& field, const std::vector<std::vector<long>>& rows);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const Scalar& at(std::size_t r, std::size_t c) const { return entries_.at(r * cols_ + c); }
    Scalar& at(std::size_t r, std::size_t c) { return entries_.at(r * cols_ + c); }
    Vector row(std::size_t r) const;

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> entries_;
};

Vector zero_vector(const Field& field, std::size_t n);
Vector multiply(const ExactMatrix& m, const Vector& v);
ExactMatrix scaled(const ExactMatrix& m, const Scalar& factor);

struct Rref {
    ExactMatrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

// Pivot for each column (left to right) is the first remaining row with a
// nonzero entry; pivots are scaled to 1 and cleared above and below.
Rref rref(const ExactMatrix& m);

// One vector per free column in ascending order: that free variable is 1,
// the other free variables 0, pivot variables solved. Each vector is
// checked against M k = 0.
std::vector<Vector> null_space_basis(const ExactMatrix& m);

// Solutions y0 + sum c_i k_i of M y = b. Instances only exist once
// M y0 = b, M k_i = 0 and linear independence of the k_i have been checked.
class AffineSolutionSet {
public:
    const Field& field() const noexcept { return field_; }
    const Vector& particular() const noexcept { return particular_; }
    const std::vector<Vector>& kernel_basis() const noexcept { return kernel_basis_; }
    std::size_t dimension() const noexcept { return kernel_basis_.size(); }
    // y0 + sum c_i k_i; throws DimensionMismatch if the tuple length differs
    // from dimension().
    Vector member(const Vector& coefficients) const;

private:
    AffineSolutionSet(Field field, Vector particular, std::vector<Vector> basis)
        : field_(field), particular_(std::move(particular)), kernel_basis_(std::move(basis)) {}
    Field field_;
    Vector particular_;
    std::vector<Vector> kernel_basis_;

    friend AffineSolutionSet make_solution_set(const ExactMatrix&, const Vector&, Vector, std::vector<Vector>);
};

// Throws NotASolutionSet when any of the three invariants fails.
AffineSolutionSet make_solution_set(const ExactMatrix& m, const Vector& b, Vector particular,
                                    std::vector<Vector> kernel_basis);

// No solution exists. The certificate c satisfies c^T M = 0 and c^T b != 0.
struct Inconsistent {
    Vector certificate;
    Scalar certificate_rhs;  // c^T b
};

using SolveOutcome = std::variant<AffineSolutionSet, Inconsistent>;

// Particular solution has every free variable set to 0. Throws
// DimensionMismatch when b does not have one entry per row.
SolveOutcome solve_affine(const ExactMatrix& m, const Vector& b);

struct FiberCardinality {
    enum class Kind { finite, infinite };
    Kind kind = Kind::finite;
    // p^nullity over GF(p); 1 over Q with trivial kernel.
    mpz_class count = 1;
    std::size_t dimension = 0;

    std::string to_string() const;
};

// Size of every nonempty preimage of M, which equals the size of its kernel.
FiberCardinality fiber_cardinality(const ExactMatrix& m);

// Checks M (y0 + sum c_i k_i) = b for each sampled coefficient tuple. Over
// GF(p) with p^d <= 4096 every tuple is enumerated and must give p^d
// distinct solutions; when additionally p^n <= 2^20 the family must equal
// the brute-force solution set. Returns true or throws NotASolutionSet.
bool verify_translation_family(const ExactMatrix& m, const Vector& b, const AffineSolutionSet& solutions,
                               const std::vector<Vector>& coefficient_samples);

}  // namespace kernatom
