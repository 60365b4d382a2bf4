#include <doctest.h>

#include "lrx/scalar.hpp"

#include <random>

using namespace lrx;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F7 = FieldSpec::prime_field(7);

Scalar q(std::int64_t n, std::int64_t d = 1) { return Scalar::rational(n, d); }

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
    CHECK(q(1, 2) + q(1, 3) == q(5, 6));
    CHECK((q(1, 2) + q(1, 3)).str() == "5/6");
    CHECK(q(1, 2) - q(1, 2) == q(0));
    CHECK(q(0).str() == "0");
    CHECK(q(-4, 6) == q(-2, 3));
    CHECK(q(-4, 6).str() == "-2/3");
    CHECK(q(4, -6).str() == "-2/3");  // sign moves to the numerator
    CHECK(q(2, 4) * q(2, 3) == q(1, 3));
    CHECK((-q(0)) == q(0));  // zero is self-negating
    CHECK(q(3, 7).inverse() == q(7, 3));
    CHECK(q(-3, 7).inverse() == q(-7, 3));
}

TEST_CASE("prime field arithmetic matches brute force") {
    // 3 * k = 1 mod 7 has a unique solution, found by enumeration
    int expected = -1;
    for (int k = 0; k < 7; ++k)
        if ((3 * k) % 7 == 1) expected = k;
    REQUIRE(expected == 5);
    CHECK(Scalar::of_int(3, F7).inverse() == Scalar::of_int(expected, F7));

    CHECK(Scalar::of_int(10, F7) == Scalar::of_int(3, F7));
    CHECK(Scalar::of_int(-1, F7).str() == "6");
    CHECK((Scalar::of_int(4, F7) + Scalar::of_int(5, F7)).str() == "2");
    CHECK((Scalar::of_int(4, F7) * Scalar::of_int(5, F7)).str() == "6");
}

TEST_CASE("scalar_arith dispatch") {
    Scalar a = q(1, 2), b = q(1, 3);
    CHECK(scalar_arith(ScalarOp::add, a, &b) == q(5, 6));
    CHECK(scalar_arith(ScalarOp::sub, a, &b) == q(1, 6));
    CHECK(scalar_arith(ScalarOp::mul, a, &b) == q(1, 6));
    CHECK(scalar_arith(ScalarOp::neg, a) == q(-1, 2));
    CHECK(scalar_arith(ScalarOp::inv, a) == q(2));
    CHECK_THROWS_AS(scalar_arith(ScalarOp::add, a), Error);
    CHECK_THROWS_AS(scalar_arith(ScalarOp::neg, a, &b), Error);
}

TEST_CASE("division by zero and field mismatch are rejected") {
    CHECK_THROWS_AS(q(0).inverse(), Error);
    CHECK_THROWS_AS(Scalar::of_int(0, F7).inverse(), Error);
    CHECK_THROWS_AS(Scalar::rational(1, 0), Error);
    CHECK_THROWS_AS(q(1) + Scalar::of_int(1, F7), Error);
    CHECK_THROWS_AS(q(1) * Scalar::of_int(1, F7), Error);
    CHECK(q(1) != Scalar::of_int(1, F7));
}

TEST_CASE("parsing follows the scalar grammar") {
    CHECK(parse_scalar("-4/6", Q) == q(-2, 3));
    CHECK(parse_scalar("10", F7) == Scalar::of_int(3, F7));
    // 1/2 over F_5: 2k = 1 mod 5 has k = 3 by enumeration
    const FieldSpec F5 = FieldSpec::prime_field(5);
    int inv2 = -1;
    for (int k = 0; k < 5; ++k)
        if ((2 * k) % 5 == 1) inv2 = k;
    REQUIRE(inv2 == 3);
    CHECK(parse_scalar("1/2", F5) == Scalar::of_int(inv2, F5));

    CHECK_THROWS_AS(parse_scalar("", Q), Error);
    CHECK_THROWS_AS(parse_scalar("1/", Q), Error);
    CHECK_THROWS_AS(parse_scalar("/2", Q), Error);
    CHECK_THROWS_AS(parse_scalar("a", Q), Error);
    CHECK_THROWS_AS(parse_scalar("1.5", Q), Error);
    CHECK_THROWS_AS(parse_scalar("+1", Q), Error);
    CHECK_THROWS_AS(parse_scalar("1/0", Q), Error);
    CHECK_THROWS_AS(parse_scalar("1/7", F7), Error);  // 7 = 0 in F_7
}

TEST_CASE("parse and format round-trip on canonical forms") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
    std::uniform_int_distribution<std::int64_t> den(1, 1000);
    for (int i = 0; i < 500; ++i) {
        Scalar s = Scalar::rational(num(rng), den(rng));
        CHECK(parse_scalar(s.str(), Q) == s);
        Scalar f = Scalar::of_int(num(rng), F7);
        CHECK(parse_scalar(f.str(), F7) == f);
    }
}

TEST_CASE("field axioms hold on randomized triples") {
    std::mt19937_64 rng(97);
    std::uniform_int_distribution<std::int64_t> num(-40, 40);
    std::uniform_int_distribution<std::int64_t> den(1, 40);
    auto rand_q = [&] { return Scalar::rational(num(rng), den(rng)); };
    auto rand_f = [&] { return Scalar::of_int(num(rng), F7); };

    for (int i = 0; i < 400; ++i) {
        Scalar a = rand_q(), b = rand_q(), c = rand_q();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Scalar::zero(Q));
        if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(Q));

        Scalar x = rand_f(), y = rand_f(), z = rand_f();
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + (-x) == Scalar::zero(F7));
        if (!x.is_zero()) CHECK(x * x.inverse() == Scalar::one(F7));
    }
}

TEST_CASE("values outside 64 bits promote and demote transparently") {
    Scalar big = q(1LL << 62) * q(1LL << 62);  // 2^124
    CHECK(big.uses_bignum());
    CHECK(big.str() == "21267647932558653966460912964485513216");
    CHECK(parse_scalar(big.str(), Q) == big);

    Scalar back = big * q(1, 1LL << 62) * q(1, 1LL << 62);
    CHECK(!back.uses_bignum());
    CHECK(back == q(1));

    Scalar mixed = q(1LL << 62, 3) * q(1LL << 62, 5);
    CHECK(mixed.uses_bignum());
    CHECK(mixed.str() == "21267647932558653966460912964485513216/15");
    CHECK(mixed * q(15) * q(1, 1LL << 62) == q(1LL << 62));

    Scalar sum = big + (-big);
    CHECK(!sum.uses_bignum());
    CHECK(sum.is_zero());

    // reduction happens before the small/big decision
    CHECK(!(q(1LL << 62, 3) * q(3, 1LL << 62)).uses_bignum());
    CHECK(q(1LL << 62, 3) * q(3, 1LL << 62) == q(1));

    // parsing long literals goes through the big path
    Scalar parsed = parse_scalar("21267647932558653966460912964485513216/2", Q);
    CHECK(parsed == q(1LL << 62) * q(1LL << 61));
}

TEST_CASE("field spec validates primality") {
    CHECK_THROWS_AS(FieldSpec::prime_field(1), Error);
    CHECK_THROWS_AS(FieldSpec::prime_field(6), Error);
    CHECK_THROWS_AS(FieldSpec::prime_field(0), Error);
    CHECK(FieldSpec::prime_field(2).p == 2);
    CHECK(FieldSpec::prime_field(1000003).name() == "F_1000003");
    CHECK(is_prime_u64((1ull << 61) - 1));   // a Mersenne prime
    CHECK(!is_prime_u64((1ull << 59) - 1));
}
