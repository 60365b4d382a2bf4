#pragma once

#include "lrx/tensor.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace lrx {

/// Finite-dimensional unital associative algebra given by structure
/// constants: mu[i][j][k] is the coefficient of e_k in e_i * e_j.
struct Algebra {
    std::size_t dim = 0;
    Tensor mu;    // (dim, dim, dim)
    Tensor unit;  // (dim,)
    FieldSpec field;
    std::vector<std::string> basis_labels;  // empty means unnamed

    std::string label(std::size_t i) const;
};

/// Shape-checks the structure data; does not run the associativity oracle.
Algebra make_algebra(Tensor mu, Tensor unit, std::vector<std::string> basis_labels = {});

enum class AlgebraLaw { assoc, left_unit, right_unit };

std::string_view law_name(AlgebraLaw law);

struct LawFailure {
    AlgebraLaw law;
    std::vector<std::size_t> witness;  // basis triple for assoc, single index for unit laws
    Tensor lhs, rhs;                   // coordinate vectors of the two sides
};

struct ValidationReport {
    bool ok = true;
    std::vector<LawFailure> failures;
};

/// Brute-force oracle: associativity over all dim^3 basis triples and the
/// unit laws over all basis vectors, compared exactly.
ValidationReport validate_algebra(const Algebra& a, std::size_t max_witnesses_per_law = 1);

/// Bilinear extension of mu to coordinate vectors.
Tensor multiply(const Algebra& a, const Tensor& x, const Tensor& y);

/// Algebra of a finite group given by its Cayley table (entries are element
/// indices). Rejects tables that are not groups, naming a witness.
Algebra group_algebra(const std::vector<std::vector<std::size_t>>& cayley, std::size_t identity_index,
                      const FieldSpec& field, std::vector<std::string> labels = {});

/// Catalogue: "field", "dual_numbers", "mat2", "cyclic:n", "sweedler4".
Algebra builtin_algebra(std::string_view name, const FieldSpec& field);

Algebra tensor_product_algebra(const Algebra& a, const Algebra& b);

/// Renders a coordinate vector as a linear combination of labeled basis
/// vectors, e.g. "1 + 2*x".
std::string format_element(const Tensor& coords, const std::vector<std::string>& labels);

}  // namespace lrx
