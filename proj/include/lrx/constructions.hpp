#pragma once

#include "lrx/crossed.hpp"

#include <optional>
#include <variant>

namespace lrx {

/// Two algebras with a twisting pair: R : B (x) A -> A (x) B stored as
/// (dimB, dimA, dimA, dimB) and Q : A (x) B -> A (x) B stored as
/// (dimA, dimB, dimA, dimB).
struct LRTwistData {
    Algebra A, B;
    Tensor R, Q;
};

/// Pointed space W over an algebra B with P : B (x) W -> W (x) B and
/// nu : W (x) W -> W (x) B, shapes (dimB, dimW, dimW, dimB) and
/// (dimW, dimW, dimW, dimB).
struct MirrorBrzezinskiData {
    PointedSpace W;
    Algebra B;
    Tensor P, nu;
};

/// Data of two compatible crossed products on W and V over H:
///   P : H (x) W -> W (x) H          (dimH, dimW, dimW, dimH)
///   nu : W (x) W -> W (x) H         (dimW, dimW, dimW, dimH)
///   R : V (x) H -> V (x) H          (dimV, dimH, dimV, dimH)
///   sigma : V (x) V -> H (x) V      (dimV, dimV, dimH, dimV)
///   Q : V (x) W -> W (x) H (x) V    (dimV, dimW, dimW, dimH, dimV)
/// The combined pointed space is U = W (x) V, flattened W-major.
struct IteratedData {
    PointedSpace W, V;
    Algebra H;
    Tensor P, nu, R, sigma, Q;
};

/// An algebra H with comultiplication Delta (dimH, dimH, dimH), counit
/// (dimH,) and a reassociator pair Phi, PhiInv given as elements of
/// H (x) H (x) H.
struct QuasiBialgebraData {
    Algebra H;
    Tensor Delta, counit, Phi, PhiInv;
};

/// Commuting left and right actions of H on an algebra A:
/// left (dimH, dimA, dimA) is h . phi, right (dimA, dimH, dimA) is phi . h.
struct BimoduleAlgebraData {
    Algebra A;
    Tensor left, right;
};

enum class PhiConvention { inv, fwd };

/// Which of Phi / PhiInv feeds each of the three reassociator slots of the
/// smash structure maps. All bundled instances have trivial Phi, where the
/// choice is immaterial.
struct LRSmashConventions {
    PhiConvention x = PhiConvention::inv;
    PhiConvention y = PhiConvention::inv;
    PhiConvention z = PhiConvention::inv;
};

struct LRSmashData {
    QuasiBialgebraData qb;
    BimoduleAlgebraData bm;
    LRSmashConventions conv;
};

/// Throws Error::Code::domain when the declared invariants fail.
void validate_quasi_bialgebra(const QuasiBialgebraData& qb);
void validate_bimodule_algebra(const QuasiBialgebraData& qb, const BimoduleAlgebraData& bm);

CrossedDatum from_ordinary_tensor(const Algebra& A, const Algebra& H);
CrossedDatum from_lr_twisted(const LRTwistData& d);
CrossedDatum from_mirror_brzezinski(const MirrorBrzezinskiData& d);
CrossedDatum from_iterated(const IteratedData& d);
CrossedDatum from_lr_smash(const LRSmashData& d);

/// Closed-form products of the specializations, evaluated directly (never
/// through the general pipeline); these are the independent oracles.
Tensor direct_multiply(const LRTwistData& d, const Tensor& a, const Tensor& b);
Tensor direct_multiply(const MirrorBrzezinskiData& d, const Tensor& a, const Tensor& b);
Tensor direct_multiply(const IteratedData& d, const Tensor& a, const Tensor& b);
Tensor direct_multiply(const LRSmashData& d, const Tensor& a, const Tensor& b);

using SpecializationData =
    std::variant<LRTwistData, MirrorBrzezinskiData, IteratedData, LRSmashData>;

CrossedDatum datum_of(const SpecializationData& s);
Tensor direct_multiply(const SpecializationData& s, const Tensor& a, const Tensor& b);

/// Structure-map helpers shared by the builders.
Tensor make_flip(std::size_t dim_h, std::size_t dim_u, const FieldSpec& field);
Tensor make_identity_map(std::size_t dim_u, std::size_t dim_h, const FieldSpec& field);

struct BuiltinInstance {
    std::string name;
    CrossedDatum datum;
    std::optional<SpecializationData> source;  // absent for plain crossed data
};

/// Gallery: trivial_2x2, super_twist, complex_mirror, iterated_sign,
/// c2_smash, sweedler_lr_smash, broken_J (a deliberate negative control).
BuiltinInstance builtin_instance(std::string_view name, const FieldSpec& field);

const std::vector<std::string>& builtin_instance_names();

}  // namespace lrx
