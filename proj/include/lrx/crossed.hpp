#pragma once

#include "lrx/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lrx {

/// Vector space with a distinguished nonzero element (the unit-side anchor
/// of the construction). The distinguished element need not be a basis
/// vector.
struct PointedSpace {
    std::size_t dim = 0;
    Tensor unit_vec;  // (dim,)
    std::vector<std::string> basis_labels;

    std::string label(std::size_t i) const;
};

PointedSpace make_pointed_space(Tensor unit_vec, std::vector<std::string> basis_labels = {});

/// Input data of the construction: an algebra H, a pointed space U and the
/// four structure maps, stored as coefficient tensors
///   J : H (x) U -> U (x) H      shape (m, n, n, m)
///   T : U (x) H -> U (x) H      shape (n, m, n, m)
///   gamma : U (x) U -> U (x) U (x) H    shape (n, n, n, n, m)
///   eta   : U (x) U -> U (x) H (x) H    shape (n, n, n, m, m)
/// with input axes first and output axes in the order written above.
struct CrossedDatum {
    Algebra H;
    PointedSpace U;
    Tensor J, T, gamma, eta;

    std::size_t dim_u() const { return U.dim; }
    std::size_t dim_h() const { return H.dim; }
    std::size_t product_dim() const { return U.dim * H.dim; }
};

CrossedDatum make_crossed_datum(Algebra H, PointedSpace U, Tensor J, Tensor T, Tensor gamma,
                                Tensor eta);

/// Number of axiom identities checked by check_all. Internal ids run 1..13
/// in source order; the printed labels keep the original numbering, which
/// skips 7 and 8.
inline constexpr int axiom_count = 13;

std::string_view axiom_label(int axiom_id);

/// Comma-separated names of the enumerated inputs of one axiom part, for
/// report rendering (e.g. "h,h',u").
std::string axiom_input_names(int axiom_id, std::size_t part);

/// One character per enumerated input, 'U' or 'H'.
std::string axiom_input_spaces(int axiom_id, std::size_t part);

std::size_t axiom_part_count(int axiom_id);

struct AxiomWitness {
    std::size_t part = 0;              // sub-identity index within the axiom
    std::vector<std::size_t> inputs;   // basis tuple of the enumerated inputs
    Tensor lhs, rhs;
    std::vector<std::size_t> first_diff;
};

struct AxiomResult {
    int axiom_id = 0;
    std::string label;
    bool holds = false;
    std::vector<AxiomWitness> witnesses;  // empty iff holds; first is lexicographic-first
};

struct AxiomReport {
    std::vector<AxiomResult> results;
    bool all_hold = false;
};

/// Evaluates both sides of one axiom on every basis tuple of its input
/// space (unit axioms evaluate the distinguished elements as general
/// vectors) and compares exactly.
AxiomResult check_axiom(const CrossedDatum& d, int axiom_id, std::size_t max_witnesses = 1);

AxiomReport check_all(const CrossedDatum& d, std::size_t max_witnesses = 1);

/// Fail-fast variant: true iff every axiom holds.
bool axioms_hold(const CrossedDatum& d);

/// The product on U (x) H. Coordinate vectors use the flattening
/// (u, h) -> u*dim_h + h.
Tensor crossed_multiply(const CrossedDatum& d, const Tensor& a, const Tensor& b);

/// Materializes the structure constants of U (x) H. With require_axioms the
/// axiom suite runs first (throwing Error::Code::axiom_failure on violation)
/// and the result is re-checked by validate_algebra.
Algebra build_crossed_product(const CrossedDatum& d, bool require_axioms = true);

}  // namespace lrx
