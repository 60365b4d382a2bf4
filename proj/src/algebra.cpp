#include "lrx/algebra.hpp"

#include <charconv>

namespace lrx {

std::string Algebra::label(std::size_t i) const {
    if (i < basis_labels.size() && !basis_labels[i].empty()) return basis_labels[i];
    return "e" + std::to_string(i);
}

Algebra make_algebra(Tensor mu, Tensor unit, std::vector<std::string> basis_labels) {
    if (unit.rank() != 1) throw Error(Error::Code::shape, "algebra unit must be a vector");
    const std::size_t dim = unit.shape()[0];
    if (mu.shape() != std::vector<std::size_t>{dim, dim, dim})
        throw Error(Error::Code::shape, "algebra mu must have shape (dim, dim, dim)");
    if (mu.field() != unit.field())
        throw Error(Error::Code::field_mismatch, "algebra mu and unit over different fields");
    if (!basis_labels.empty() && basis_labels.size() != dim)
        throw Error(Error::Code::shape, "label count does not match dim");
    Algebra a;
    a.dim = dim;
    a.field = mu.field();
    a.mu = std::move(mu);
    a.unit = std::move(unit);
    a.basis_labels = std::move(basis_labels);
    return a;
}

std::string_view law_name(AlgebraLaw law) {
    switch (law) {
        case AlgebraLaw::assoc: return "assoc";
        case AlgebraLaw::left_unit: return "left_unit";
        case AlgebraLaw::right_unit: return "right_unit";
    }
    return "?";
}

Tensor multiply(const Algebra& a, const Tensor& x, const Tensor& y) {
    if (x.shape() != std::vector<std::size_t>{a.dim} || y.shape() != std::vector<std::size_t>{a.dim})
        throw Error(Error::Code::shape, "coordinate vectors must have the algebra's dimension");
    return contract("i,j,ijk->k", {&x, &y, &a.mu});
}

ValidationReport validate_algebra(const Algebra& a, std::size_t max_witnesses_per_law) {
    ValidationReport report;
    const std::size_t n = a.dim;
    auto mu_at = [&](std::size_t i, std::size_t j, std::size_t k) -> const Scalar& {
        return a.mu.flat((i * n + j) * n + k);
    };

    std::size_t assoc_found = 0;
    for (std::size_t i = 0; i < n && assoc_found < max_witnesses_per_law; ++i)
        for (std::size_t j = 0; j < n && assoc_found < max_witnesses_per_law; ++j)
            for (std::size_t k = 0; k < n && assoc_found < max_witnesses_per_law; ++k) {
                Tensor lhs(a.field, {n}), rhs(a.field, {n});
                for (std::size_t m = 0; m < n; ++m) {
                    const Scalar& l = mu_at(i, j, m);
                    const Scalar& r = mu_at(j, k, m);
                    if (l.is_zero() && r.is_zero()) continue;
                    for (std::size_t t = 0; t < n; ++t) {
                        if (!l.is_zero()) lhs.add_flat(t, l * mu_at(m, k, t));
                        if (!r.is_zero()) rhs.add_flat(t, r * mu_at(i, m, t));
                    }
                }
                if (!tensors_equal(lhs, rhs).equal) {
                    report.failures.push_back({AlgebraLaw::assoc, {i, j, k}, lhs, rhs});
                    ++assoc_found;
                }
            }

    for (AlgebraLaw law : {AlgebraLaw::left_unit, AlgebraLaw::right_unit}) {
        std::size_t found = 0;
        for (std::size_t j = 0; j < n && found < max_witnesses_per_law; ++j) {
            Tensor ej = Tensor::basis(a.field, n, j);
            Tensor prod = law == AlgebraLaw::left_unit ? multiply(a, a.unit, ej) : multiply(a, ej, a.unit);
            if (!tensors_equal(prod, ej).equal) {
                report.failures.push_back({law, {j}, prod, ej});
                ++found;
            }
        }
    }

    report.ok = report.failures.empty();
    return report;
}

Algebra group_algebra(const std::vector<std::vector<std::size_t>>& cayley, std::size_t identity_index,
                      const FieldSpec& field, std::vector<std::string> labels) {
    const std::size_t n = cayley.size();
    if (n == 0) throw Error(Error::Code::domain, "empty Cayley table");
    for (std::size_t i = 0; i < n; ++i) {
        if (cayley[i].size() != n) throw Error(Error::Code::domain, "Cayley table is not square");
        for (std::size_t j = 0; j < n; ++j)
            if (cayley[i][j] >= n)
                throw Error(Error::Code::domain, "Cayley entry out of range at (" + std::to_string(i) +
                                                     "," + std::to_string(j) + ")");
    }
    if (identity_index >= n) throw Error(Error::Code::domain, "identity index out of range");
    for (std::size_t i = 0; i < n; ++i) {
        if (cayley[identity_index][i] != i || cayley[i][identity_index] != i)
            throw Error(Error::Code::domain,
                        "index " + std::to_string(identity_index) + " is not a two-sided identity (witness " +
                            std::to_string(i) + ")");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (cayley[cayley[i][j]][k] != cayley[i][cayley[j][k]])
                    throw Error(Error::Code::domain, "Cayley table is not associative at (" +
                                                         std::to_string(i) + "," + std::to_string(j) + "," +
                                                         std::to_string(k) + ")");
    for (std::size_t i = 0; i < n; ++i) {
        bool has_inverse = false;
        for (std::size_t j = 0; j < n; ++j)
            if (cayley[i][j] == identity_index && cayley[j][i] == identity_index) {
                has_inverse = true;
                break;
            }
        if (!has_inverse)
            throw Error(Error::Code::domain, "element " + std::to_string(i) + " has no inverse");
    }

    Tensor mu(field, {n, n, n});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mu.set({i, j, cayley[i][j]}, Scalar::one(field));
    return make_algebra(std::move(mu), Tensor::basis(field, n, identity_index), std::move(labels));
}

namespace {

Algebra cyclic_group_algebra(std::size_t n, const FieldSpec& field) {
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i)
        labels[i] = i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i));
    return group_algebra(table, 0, field, std::move(labels));
}

}  // namespace

Algebra builtin_algebra(std::string_view name, const FieldSpec& field) {
    if (name == "field") {
        Tensor mu(field, {1, 1, 1});
        mu.set({0, 0, 0}, Scalar::one(field));
        return make_algebra(std::move(mu), Tensor::basis(field, 1, 0), {"1"});
    }
    if (name == "dual_numbers") {
        // k[x]/(x^2), basis {1, x}
        Tensor mu(field, {2, 2, 2});
        mu.set({0, 0, 0}, Scalar::one(field));
        mu.set({0, 1, 1}, Scalar::one(field));
        mu.set({1, 0, 1}, Scalar::one(field));
        return make_algebra(std::move(mu), Tensor::basis(field, 2, 0), {"1", "x"});
    }
    if (name == "mat2") {
        // 2x2 matrix units, basis index (r,c) -> 2r + c
        Tensor mu(field, {4, 4, 4});
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t b = 0; b < 2; ++b)
                for (std::size_t c = 0; c < 2; ++c)
                    for (std::size_t d = 0; d < 2; ++d)
                        if (b == c) mu.set({2 * a + b, 2 * c + d, 2 * a + d}, Scalar::one(field));
        Tensor unit(field, {4});
        unit.set_flat(0, Scalar::one(field));
        unit.set_flat(3, Scalar::one(field));
        return make_algebra(std::move(mu), std::move(unit), {"e11", "e12", "e21", "e22"});
    }
    if (name == "sweedler4") {
        if (field.kind == FieldKind::prime_field && field.p == 2)
            throw Error(Error::Code::domain, "sweedler4 needs -1 != 1; not available over F_2");
        // basis {1, g, x, gx} with g^2 = 1, x^2 = 0, xg = -gx
        const Scalar one = Scalar::one(field);
        const Scalar minus_one = -one;
        Tensor mu(field, {4, 4, 4});
        auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
            mu.set({i, j, k}, c);
        };
        for (std::size_t j = 0; j < 4; ++j) {
            set(0, j, j, one);
            if (j != 0) set(j, 0, j, one);
        }
        set(1, 1, 0, one);        // g g = 1
        set(1, 2, 3, one);        // g x = gx
        set(1, 3, 2, one);        // g gx = x
        set(2, 1, 3, minus_one);  // x g = -gx
        set(3, 1, 2, minus_one);  // gx g = -x
        // x x = x gx = gx x = gx gx = 0
        return make_algebra(std::move(mu), Tensor::basis(field, 4, 0), {"1", "g", "x", "gx"});
    }
    constexpr std::string_view cyclic_prefix = "cyclic:";
    if (name.substr(0, cyclic_prefix.size()) == cyclic_prefix) {
        std::string_view digits = name.substr(cyclic_prefix.size());
        std::size_t n = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || n == 0)
            throw Error(Error::Code::domain, "bad cyclic group order '" + std::string(digits) + "'");
        return cyclic_group_algebra(n, field);
    }
    throw Error(Error::Code::domain, "unknown builtin algebra '" + std::string(name) + "'");
}

Algebra tensor_product_algebra(const Algebra& a, const Algebra& b) {
    if (a.field != b.field)
        throw Error(Error::Code::field_mismatch, "tensor product of algebras over different fields");
    const std::size_t n = a.dim, m = b.dim, nm = n * m;
    Tensor mu(a.field, {nm, nm, nm});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& ca = a.mu.at({i, j, k});
                if (ca.is_zero()) continue;
                for (std::size_t p = 0; p < m; ++p)
                    for (std::size_t q = 0; q < m; ++q)
                        for (std::size_t r = 0; r < m; ++r) {
                            const Scalar& cb = b.mu.at({p, q, r});
                            if (cb.is_zero()) continue;
                            mu.set({i * m + p, j * m + q, k * m + r}, ca * cb);
                        }
            }
    Tensor unit = reshape(tensor_product(a.unit, b.unit), {nm});
    std::vector<std::string> labels(nm);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < m; ++p) labels[i * m + p] = a.label(i) + "⊗" + b.label(p);
    return make_algebra(std::move(mu), std::move(unit), std::move(labels));
}

std::string format_element(const Tensor& coords, const std::vector<std::string>& labels) {
    if (coords.rank() != 1) throw Error(Error::Code::shape, "format_element expects a vector");
    std::string out;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const Scalar& c = coords.flat(i);
        if (c.is_zero()) continue;
        std::string lbl = i < labels.size() && !labels[i].empty() ? labels[i] : "e" + std::to_string(i);
        if (!out.empty()) out += " + ";
        out += c.is_one() ? lbl : c.str() + "*" + lbl;
    }
    return out.empty() ? "0" : out;
}

}  // namespace lrx
