#pragma once

#include "lrx/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace lrx {

/// Dense multi-index array of Scalars in row-major order. Rank 0 (empty
/// shape) holds a single entry. Tensors are treated as immutable once built;
/// the setters exist for construction code.
class Tensor {
public:
    Tensor() = default;  // rank-0 zero over Q

    Tensor(FieldSpec field, std::vector<std::size_t> shape);

    static Tensor basis(const FieldSpec& f, std::size_t dim, std::size_t index);
    static Tensor from_ints(FieldSpec field, std::vector<std::size_t> shape,
                            std::initializer_list<std::int64_t> entries);

    const FieldSpec& field() const { return field_; }
    const std::vector<std::size_t>& shape() const { return shape_; }
    std::size_t rank() const { return shape_.size(); }
    std::size_t size() const { return data_.size(); }

    const Scalar& at(std::span<const std::size_t> idx) const;
    const Scalar& at(std::initializer_list<std::size_t> idx) const;
    void set(std::span<const std::size_t> idx, Scalar v);
    void set(std::initializer_list<std::size_t> idx, Scalar v);

    const Scalar& flat(std::size_t i) const { return data_[i]; }
    void set_flat(std::size_t i, Scalar v);
    void add_flat(std::size_t i, const Scalar& v);

    std::size_t flat_index(std::span<const std::size_t> idx) const;
    std::vector<std::size_t> unflatten(std::size_t flat) const;

    bool is_zero() const;

private:
    FieldSpec field_;
    std::vector<std::size_t> shape_;
    std::vector<Scalar> data_ = {Scalar()};
};

/// Named-index contraction, einsum style: one letter per axis, repeated
/// letters are summed, output axes ordered by the output string.
struct ContractionSpec {
    std::vector<std::string> inputs;
    std::string output;

    static ContractionSpec parse(std::string_view text);  // e.g. "ij,jk->ik"
};

Tensor contract(const ContractionSpec& spec, std::span<const Tensor* const> operands);
Tensor contract(std::string_view spec, std::initializer_list<const Tensor*> operands);

Tensor tensor_product(const Tensor& a, const Tensor& b);

Tensor permute(const Tensor& t, std::span<const std::size_t> perm);
Tensor permute(const Tensor& t, std::initializer_list<std::size_t> perm);

/// Reinterpret entries under a new shape of equal total size.
Tensor reshape(const Tensor& t, std::vector<std::size_t> shape);

struct TensorComparison {
    bool equal = true;
    // first differing multi-index, present only when unequal with matching shapes
    std::optional<std::vector<std::size_t>> first_diff;
};

TensorComparison tensors_equal(const Tensor& a, const Tensor& b);

}  // namespace lrx
