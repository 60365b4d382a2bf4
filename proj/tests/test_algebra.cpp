#include <doctest.h>

#include "lrx/algebra.hpp"

#include <random>

using namespace lrx;

namespace {

const FieldSpec Q = FieldSpec::rationals();

std::vector<std::vector<std::size_t>> cyclic_table(std::size_t n) {
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

}  // namespace

TEST_CASE("the one-dimensional algebra validates") {
    Tensor mu(Q, {1, 1, 1});
    mu.set({0, 0, 0}, Scalar::one(Q));
    Algebra a = make_algebra(std::move(mu), Tensor::basis(Q, 1, 0));
    CHECK(validate_algebra(a).ok);
}

TEST_CASE("group algebras validate and multiply by the Cayley table") {
    Algebra c2 = group_algebra(cyclic_table(2), 0, Q, {"1", "g"});
    CHECK(validate_algebra(c2).ok);
    Tensor g = Tensor::basis(Q, 2, 1);
    CHECK(tensors_equal(multiply(c2, g, g), Tensor::basis(Q, 2, 0)).equal);  // g^2 = 1

    Algebra trivial = group_algebra(cyclic_table(1), 0, Q);
    CHECK(trivial.dim == 1);
    CHECK(validate_algebra(trivial).ok);

    Algebra c3 = group_algebra(cyclic_table(3), 0, Q);
    CHECK(validate_algebra(c3).ok);

    // C_n is commutative
    Algebra c6 = group_algebra(cyclic_table(6), 0, Q);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            for (std::size_t k = 0; k < 6; ++k) CHECK(c6.mu.at({i, j, k}) == c6.mu.at({j, i, k}));
}

TEST_CASE("a corrupted structure constant is caught with a witness") {
    // in k[C_3], redefine g * g^2 as 2 (leaving g^2 * g = 1): then
    // (g g) g = g^2 g = 1 while g (g g^2)... the first lexicographic
    // failure is at (g, g, g), verified by the brute-force loop below
    Algebra c3 = group_algebra(cyclic_table(3), 0, Q, {"1", "g", "g^2"});
    Tensor mu = c3.mu;
    mu.set({1, 2, 0}, Scalar::of_int(2, Q));
    Algebra broken = make_algebra(std::move(mu), c3.unit, c3.basis_labels);

    // independent search for the first associativity failure
    std::vector<std::size_t> first;
    for (std::size_t i = 0; i < 3 && first.empty(); ++i)
        for (std::size_t j = 0; j < 3 && first.empty(); ++j)
            for (std::size_t k = 0; k < 3 && first.empty(); ++k) {
                Tensor ei = Tensor::basis(Q, 3, i), ej = Tensor::basis(Q, 3, j),
                       ek = Tensor::basis(Q, 3, k);
                Tensor lhs = multiply(broken, multiply(broken, ei, ej), ek);
                Tensor rhs = multiply(broken, ei, multiply(broken, ej, ek));
                if (!tensors_equal(lhs, rhs).equal) first = {i, j, k};
            }
    REQUIRE(first == std::vector<std::size_t>{1, 1, 1});  // (g, g, g)

    ValidationReport report = validate_algebra(broken);
    CHECK(!report.ok);
    REQUIRE(!report.failures.empty());
    CHECK(report.failures.front().law == AlgebraLaw::assoc);
    CHECK(report.failures.front().witness == first);

    // flag to report more than one witness
    ValidationReport more = validate_algebra(broken, 5);
    CHECK(more.failures.size() > 1);
}

TEST_CASE("unit law violations are caught") {
    Tensor mu(Q, {2, 2, 2});
    mu.set({0, 0, 0}, Scalar::one(Q));  // e0 e0 = e0, everything else 0
    Algebra a = make_algebra(std::move(mu), Tensor::basis(Q, 2, 0));
    ValidationReport report = validate_algebra(a);
    CHECK(!report.ok);
    bool saw_left_unit = false;
    for (const LawFailure& f : report.failures)
        if (f.law == AlgebraLaw::left_unit && f.witness == std::vector<std::size_t>{1})
            saw_left_unit = true;
    CHECK(saw_left_unit);
}

TEST_CASE("non-group Cayley tables are rejected with a witness") {
    // no identity
    std::vector<std::vector<std::size_t>> sub3(3, std::vector<std::size_t>(3));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) sub3[i][j] = (3 + i - j) % 3;
    CHECK_THROWS_WITH_AS(group_algebra(sub3, 0, Q), doctest::Contains("identity"), Error);

    // an identity-preserving, invertible but non-associative table: swap two
    // entries inside row 1 of C_5 (verified non-associative by brute force)
    auto t = cyclic_table(5);
    std::swap(t[1][1], t[1][2]);
    bool assoc = true;
    for (std::size_t i = 0; i < 5 && assoc; ++i)
        for (std::size_t j = 0; j < 5 && assoc; ++j)
            for (std::size_t k = 0; k < 5 && assoc; ++k)
                if (t[t[i][j]][k] != t[i][t[j][k]]) assoc = false;
    REQUIRE(!assoc);
    CHECK_THROWS_WITH_AS(group_algebra(t, 0, Q), doctest::Contains("associative"), Error);

    // missing inverses
    std::vector<std::vector<std::size_t>> m = {{0, 1}, {1, 1}};
    CHECK_THROWS_WITH_AS(group_algebra(m, 0, Q), doctest::Contains("inverse"), Error);

    // malformed tables
    CHECK_THROWS_AS(group_algebra({{0, 1}}, 0, Q), Error);
    CHECK_THROWS_AS(group_algebra({{0, 7}, {1, 0}}, 0, Q), Error);
    CHECK_THROWS_AS(group_algebra(cyclic_table(2), 5, Q), Error);
}

TEST_CASE("builtin catalogue") {
    for (const char* name : {"field", "dual_numbers", "mat2", "cyclic:1", "cyclic:5", "sweedler4"}) {
        Algebra a = builtin_algebra(name, Q);
        CHECK(validate_algebra(a).ok);
    }
    CHECK_THROWS_AS(builtin_algebra("no_such_thing", Q), Error);
    CHECK_THROWS_AS(builtin_algebra("cyclic:0", Q), Error);
    CHECK_THROWS_AS(builtin_algebra("cyclic:x", Q), Error);

    Algebra dual = builtin_algebra("dual_numbers", Q);
    Tensor x = Tensor::basis(Q, 2, 1);
    CHECK(multiply(dual, x, x).is_zero());  // x^2 = 0

    Algebra m2 = builtin_algebra("mat2", Q);
    Tensor e11 = Tensor::basis(Q, 4, 0), e12 = Tensor::basis(Q, 4, 1);
    CHECK(tensors_equal(multiply(m2, e11, e12), e12).equal);
    CHECK(multiply(m2, e12, e11).is_zero());  // witness of noncommutativity
    CHECK(m2.unit.at({0}) == Scalar::one(Q)); // unit is e11 + e22, not a basis vector
    CHECK(m2.unit.at({3}) == Scalar::one(Q));
}

TEST_CASE("sweedler4 satisfies its defining relations") {
    Algebra h4 = builtin_algebra("sweedler4", Q);
    CHECK(validate_algebra(h4).ok);
    Tensor one = Tensor::basis(Q, 4, 0), g = Tensor::basis(Q, 4, 1), x = Tensor::basis(Q, 4, 2),
           gx = Tensor::basis(Q, 4, 3);
    CHECK(tensors_equal(multiply(h4, g, g), one).equal);
    CHECK(multiply(h4, x, x).is_zero());
    Tensor xg = multiply(h4, x, g);
    Tensor gx_neg(Q, {4});
    gx_neg.set_flat(3, -Scalar::one(Q));
    CHECK(tensors_equal(xg, gx_neg).equal);          // xg = -gx
    CHECK(tensors_equal(multiply(h4, g, x), gx).equal);
    CHECK(multiply(h4, gx, gx).is_zero());           // (gx)^2 = 0

    CHECK_THROWS_AS(builtin_algebra("sweedler4", FieldSpec::prime_field(2)), Error);
    CHECK(validate_algebra(builtin_algebra("sweedler4", FieldSpec::prime_field(7))).ok);
    CHECK(validate_algebra(builtin_algebra("sweedler4", FieldSpec::prime_field(5))).ok);
}

TEST_CASE("tensor product of algebras") {
    Algebra c2 = builtin_algebra("cyclic:2", Q);
    Algebra k = builtin_algebra("field", Q);
    Algebra dual = builtin_algebra("dual_numbers", Q);

    // A (x) k has the same table as A
    Algebra a_k = tensor_product_algebra(c2, k);
    CHECK(a_k.dim == 2);
    CHECK(tensors_equal(reshape(a_k.mu, {2, 2, 2}), c2.mu).equal);
    CHECK(validate_algebra(a_k).ok);

    // k[C2] (x) k[C2]: every basis vector squares to the identity
    Algebra c2c2 = tensor_product_algebra(c2, c2);
    CHECK(validate_algebra(c2c2).ok);
    for (std::size_t i = 0; i < 4; ++i) {
        Tensor e = Tensor::basis(Q, 4, i);
        CHECK(tensors_equal(multiply(c2c2, e, e), c2c2.unit).equal);
    }

    // dual (x) dual: the two nilpotents commute
    Algebra dd = tensor_product_algebra(dual, dual);
    CHECK(validate_algebra(dd).ok);
    Tensor x1 = Tensor::basis(Q, 4, 2);  // x (x) 1
    Tensor x2 = Tensor::basis(Q, 4, 1);  // 1 (x) x
    Tensor xx = Tensor::basis(Q, 4, 3);  // x (x) x
    CHECK(tensors_equal(multiply(dd, x1, x2), xx).equal);
    CHECK(tensors_equal(multiply(dd, x2, x1), xx).equal);

    Algebra f5 = builtin_algebra("field", FieldSpec::prime_field(5));
    CHECK_THROWS_AS(tensor_product_algebra(c2, f5), Error);
}

TEST_CASE("multiply is bilinear and unital") {
    Algebra m2 = builtin_algebra("mat2", Q);
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::int64_t> val(-3, 3);
    auto rand_vec = [&] {
        Tensor t(Q, {4});
        for (std::size_t i = 0; i < 4; ++i) t.set_flat(i, Scalar::of_int(val(rng), Q));
        return t;
    };
    const Scalar lambda = Scalar::rational(-5, 3);
    for (int i = 0; i < 50; ++i) {
        Tensor x = rand_vec(), y = rand_vec(), z = rand_vec();
        CHECK(tensors_equal(multiply(m2, m2.unit, x), x).equal);
        CHECK(tensors_equal(multiply(m2, x, m2.unit), x).equal);
        Tensor lin(Q, {4});
        for (std::size_t k = 0; k < 4; ++k) lin.set_flat(k, y.flat(k) + lambda * z.flat(k));
        Tensor lhs = multiply(m2, x, lin);
        Tensor xy = multiply(m2, x, y), xz = multiply(m2, x, z);
        for (std::size_t k = 0; k < 4; ++k) CHECK(lhs.flat(k) == xy.flat(k) + lambda * xz.flat(k));
    }
}

TEST_CASE("format_element renders linear combinations") {
    Tensor v(Q, {3});
    v.set_flat(0, Scalar::one(Q));
    v.set_flat(2, Scalar::rational(-2, 3));
    CHECK(format_element(v, {"1", "g", "g^2"}) == "1 + -2/3*g^2");
    CHECK(format_element(Tensor(Q, {3}), {}) == "0");
}
