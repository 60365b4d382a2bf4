#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lrx {

/// Error taxonomy shared by the whole library. `code()` distinguishes
/// mathematical failures (axiom_failure, not_associative) from bad input.
class Error : public std::runtime_error {
public:
    enum class Code {
        field_mismatch,
        division_by_zero,
        shape,
        parse,
        domain,
        axiom_failure,
        not_associative,
    };

    Error(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Code code() const noexcept { return code_; }

private:
    Code code_;
};

enum class FieldKind : std::uint8_t { rationals, prime_field };

bool is_prime_u64(std::uint64_t n);

/// An exact coefficient field: the rationals Q, or F_p for a prime p.
struct FieldSpec {
    FieldKind kind = FieldKind::rationals;
    std::uint64_t p = 0;  // modulus, prime_field only

    static FieldSpec rationals() { return {}; }
    static FieldSpec prime_field(std::uint64_t p);

    std::string name() const;
    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

class BigRational;  // opaque GMP-backed payload

/// Immutable exact field element. Rationals are kept canonical (reduced,
/// positive denominator, zero is 0/1) in 64-bit words while they fit and
/// promoted to arbitrary precision transparently when they do not.
/// Prime-field values are residues in [0, p).
class Scalar {
public:
    Scalar() = default;  // 0 over Q

    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar of_int(std::int64_t value, const FieldSpec& f);
    static Scalar rational(std::int64_t num, std::int64_t den);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar inverse() const;

    friend Scalar operator+(const Scalar&, const Scalar&);
    friend Scalar operator-(const Scalar&, const Scalar&);
    friend Scalar operator*(const Scalar&, const Scalar&);

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);

    friend bool operator==(const Scalar&, const Scalar&);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Canonical text form, `-?digits(/digits)?`.
    std::string str() const;

    /// True while the value lives on the arbitrary-precision path.
    bool uses_bignum() const { return big_ != nullptr; }

private:
    friend Scalar parse_scalar(std::string_view, const FieldSpec&);
    friend struct ScalarOps;  // internal arithmetic kernel

    FieldSpec field_;
    // Q small path: num_/den_ canonical. F_p: residue in num_, den_ == 1.
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const BigRational> big_;  // set iff value exceeds 64-bit words
};

enum class ScalarOp { add, sub, mul, neg, inv };

/// Uniform dispatch over the arithmetic ops; `b` must be present exactly for
/// the binary ops.
Scalar scalar_arith(ScalarOp op, const Scalar& a, const Scalar* b = nullptr);

/// Parse `-?digits(/digits)?` into a canonical Scalar of the given field.
Scalar parse_scalar(std::string_view text, const FieldSpec& field);

}  // namespace lrx
