#include "lrx/scalar.hpp"

#include <gmpxx.h>

#include <cctype>
#include <limits>

namespace lrx {

class BigRational {
public:
    explicit BigRational(mpq_class v) : value(std::move(v)) {}
    mpq_class value;
};

namespace {

using i128 = __int128;

constexpr std::int64_t kMaxSmall = std::numeric_limits<std::int64_t>::max();

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits_small(i128 v) { return v >= -(i128)kMaxSmall && v <= (i128)kMaxSmall; }

mpz_class mpz_of_i128(i128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? (unsigned __int128)(-v) : (unsigned __int128)v;
    mpz_class hi((unsigned long)(u >> 64));
    mpz_class lo((unsigned long)(u & 0xffffffffffffffffULL));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

bool mpz_fits_small(const mpz_class& z, std::int64_t* out) {
    if (!z.fits_slong_p()) return false;
    long v = z.get_si();
    if (v == std::numeric_limits<long>::min()) return false;
    *out = v;
    return true;
}

std::uint64_t mod_p(const FieldSpec& f, i128 v) {
    i128 p = (i128)f.p;
    i128 r = v % p;
    if (r < 0) r += p;
    return (std::uint64_t)r;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (std::uint64_t)(((unsigned __int128)a * b) % p);
}

// x with a*x ≡ 1 (mod p); p prime and a ≠ 0 mod p assumed
std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = (std::int64_t)p, new_r = (std::int64_t)a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += (std::int64_t)p;
    return (std::uint64_t)t;
}

void require_same_field(const Scalar& a, const Scalar& b) {
    if (a.field() != b.field())
        throw Error(Error::Code::field_mismatch,
                    "scalar operands belong to different fields (" + a.field().name() + " vs " +
                        b.field().name() + ")");
}

}  // namespace

struct ScalarOps {
    static Scalar small(const FieldSpec& f, std::int64_t num, std::int64_t den) {
        Scalar s;
        s.field_ = f;
        s.num_ = num;
        s.den_ = den;
        return s;
    }

    static Scalar big(std::shared_ptr<const BigRational> b) {
        Scalar s;
        s.big_ = std::move(b);
        return s;
    }

    // Reduce and pack an i128 fraction over Q; promotes when out of range.
    static Scalar pack_q(i128 num, i128 den) {
        if (den == 0) throw Error(Error::Code::division_by_zero, "denominator is zero");
        if (num == 0) return Scalar::zero(FieldSpec::rationals());
        if (den < 0) {
            num = -num;
            den = -den;
        }
        i128 g = gcd128(num, den);
        num /= g;
        den /= g;
        if (fits_small(num) && fits_small(den))
            return small(FieldSpec::rationals(), (std::int64_t)num, (std::int64_t)den);
        mpq_class q(mpz_of_i128(num), mpz_of_i128(den));
        q.canonicalize();
        return big(std::make_shared<const BigRational>(std::move(q)));
    }

    // Demote a canonical mpq to the small path when it fits.
    static Scalar pack_q_big(mpq_class q) {
        std::int64_t n, d;
        if (mpz_fits_small(q.get_num(), &n) && mpz_fits_small(q.get_den(), &d))
            return small(FieldSpec::rationals(), n, d);
        return big(std::make_shared<const BigRational>(std::move(q)));
    }

    static mpq_class to_mpq(const Scalar& s) {
        if (s.big_) return s.big_->value;
        mpq_class q((long)s.num_, (unsigned long)s.den_);
        q.canonicalize();
        return q;
    }
};

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    auto powmod = [](std::uint64_t b, std::uint64_t e, std::uint64_t m) {
        std::uint64_t r = 1;
        b %= m;
        while (e) {
            if (e & 1) r = mulmod(r, b, m);
            b = mulmod(b, b, m);
            e >>= 1;
        }
        return r;
    };
    // deterministic witness set for 64-bit inputs
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
    if (!is_prime_u64(p))
        throw Error(Error::Code::domain, "modulus " + std::to_string(p) + " is not prime");
    FieldSpec f;
    f.kind = FieldKind::prime_field;
    f.p = p;
    return f;
}

std::string FieldSpec::name() const {
    return kind == FieldKind::rationals ? "Q" : "F_" + std::to_string(p);
}

Scalar Scalar::zero(const FieldSpec& f) {
    Scalar s;
    s.field_ = f;
    return s;
}

Scalar Scalar::one(const FieldSpec& f) {
    Scalar s;
    s.field_ = f;
    s.num_ = 1;
    return s;
}

Scalar Scalar::of_int(std::int64_t value, const FieldSpec& f) {
    Scalar s;
    s.field_ = f;
    s.num_ = f.kind == FieldKind::prime_field ? (std::int64_t)mod_p(f, value) : value;
    return s;
}

Scalar Scalar::rational(std::int64_t num, std::int64_t den) {
    return ScalarOps::pack_q((i128)num, (i128)den);
}

bool Scalar::is_zero() const { return big_ == nullptr && num_ == 0; }

bool Scalar::is_one() const { return big_ == nullptr && num_ == 1 && den_ == 1; }

Scalar Scalar::operator-() const {
    if (field_.kind == FieldKind::prime_field) {
        Scalar r = *this;
        r.num_ = num_ == 0 ? 0 : (std::int64_t)(field_.p - (std::uint64_t)num_);
        return r;
    }
    if (big_) return ScalarOps::pack_q_big(mpq_class(-big_->value));
    Scalar r = *this;
    r.num_ = -num_;
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(Error::Code::division_by_zero, "inverse of zero");
    if (field_.kind == FieldKind::prime_field) {
        Scalar r = *this;
        r.num_ = (std::int64_t)invmod((std::uint64_t)num_, field_.p);
        return r;
    }
    if (big_) return ScalarOps::pack_q_big(mpq_class(1) / big_->value);
    return ScalarOps::pack_q((i128)(num_ < 0 ? -den_ : den_), (i128)(num_ < 0 ? -num_ : num_));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    if (a.field_.kind == FieldKind::prime_field) {
        Scalar r = a;
        std::uint64_t s = (std::uint64_t)a.num_ + (std::uint64_t)b.num_;
        if (s >= a.field_.p) s -= a.field_.p;
        r.num_ = (std::int64_t)s;
        return r;
    }
    if (!a.big_ && !b.big_) {
        i128 num = (i128)a.num_ * b.den_ + (i128)b.num_ * a.den_;
        i128 den = (i128)a.den_ * b.den_;
        return ScalarOps::pack_q(num, den);
    }
    return ScalarOps::pack_q_big(ScalarOps::to_mpq(a) + ScalarOps::to_mpq(b));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    if (a.field_.kind == FieldKind::prime_field) {
        Scalar r = a;
        r.num_ = (std::int64_t)mulmod((std::uint64_t)a.num_, (std::uint64_t)b.num_, a.field_.p);
        return r;
    }
    if (!a.big_ && !b.big_) return ScalarOps::pack_q((i128)a.num_ * b.num_, (i128)a.den_ * b.den_);
    return ScalarOps::pack_q_big(ScalarOps::to_mpq(a) * ScalarOps::to_mpq(b));
}

Scalar& Scalar::operator+=(const Scalar& o) { return *this = *this + o; }
Scalar& Scalar::operator-=(const Scalar& o) { return *this = *this - o; }
Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_) return false;
    if (a.big_ || b.big_) {
        if (!a.big_ || !b.big_) return false;  // canonical: a big value never fits small
        return a.big_->value == b.big_->value;
    }
    return a.num_ == b.num_ && a.den_ == b.den_;
}

std::string Scalar::str() const {
    if (big_) return big_->value.get_str();
    if (field_.kind == FieldKind::prime_field || den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Scalar scalar_arith(ScalarOp op, const Scalar& a, const Scalar* b) {
    const bool binary = (op == ScalarOp::add || op == ScalarOp::sub || op == ScalarOp::mul);
    if (binary && b == nullptr)
        throw Error(Error::Code::domain, "binary scalar op requires two operands");
    if (!binary && b != nullptr)
        throw Error(Error::Code::domain, "unary scalar op takes one operand");
    switch (op) {
        case ScalarOp::add: return a + *b;
        case ScalarOp::sub: return a - *b;
        case ScalarOp::mul: return a * *b;
        case ScalarOp::neg: return -a;
        case ScalarOp::inv: return a.inverse();
    }
    throw Error(Error::Code::domain, "unknown scalar op");
}

Scalar parse_scalar(std::string_view text, const FieldSpec& field) {
    auto fail = [&] {
        return Error(Error::Code::parse, "malformed scalar literal '" + std::string(text) + "'");
    };
    std::string_view rest = text;
    bool neg = false;
    if (!rest.empty() && rest.front() == '-') {
        neg = true;
        rest.remove_prefix(1);
    }
    auto slash = rest.find('/');
    std::string_view num_digits = rest.substr(0, slash);
    std::string_view den_digits =
        slash == std::string_view::npos ? std::string_view{} : rest.substr(slash + 1);
    auto all_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit((unsigned char)c)) return false;
        return true;
    };
    if (!all_digits(num_digits)) throw fail();
    if (slash != std::string_view::npos && !all_digits(den_digits)) throw fail();

    if (field.kind == FieldKind::prime_field) {
        auto digits_mod = [&](std::string_view s) {
            std::uint64_t r = 0;
            for (char c : s) r = (mulmod(r, 10, field.p) + (std::uint64_t)(c - '0')) % field.p;
            return r;
        };
        std::uint64_t n = digits_mod(num_digits);
        if (neg && n != 0) n = field.p - n;
        if (!den_digits.empty()) {
            std::uint64_t d = digits_mod(den_digits);
            if (d == 0)
                throw Error(Error::Code::division_by_zero,
                            "denominator of '" + std::string(text) + "' is not invertible in " +
                                field.name());
            n = mulmod(n, invmod(d, field.p), field.p);
        }
        return Scalar::of_int((std::int64_t)n, field);
    }

    // rationals: stay in 64-bit words when short, else go through GMP
    if (num_digits.size() <= 18 && den_digits.size() <= 18) {
        std::int64_t n = 0;
        for (char c : num_digits) n = n * 10 + (c - '0');
        std::int64_t d = 1;
        if (!den_digits.empty()) {
            d = 0;
            for (char c : den_digits) d = d * 10 + (c - '0');
        }
        if (d == 0)
            throw Error(Error::Code::division_by_zero,
                        "denominator of '" + std::string(text) + "' is zero");
        return Scalar::rational(neg ? -n : n, d);
    }
    mpz_class n(std::string(num_digits), 10);
    mpz_class d = den_digits.empty() ? mpz_class(1) : mpz_class(std::string(den_digits), 10);
    if (d == 0)
        throw Error(Error::Code::division_by_zero,
                    "denominator of '" + std::string(text) + "' is zero");
    if (neg) n = -n;
    mpq_class q(n, d);
    q.canonicalize();
    return ScalarOps::pack_q_big(std::move(q));
}

}  // namespace lrx
