#include "lrx/tensor.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace lrx {

namespace {

std::size_t checked_size(const std::vector<std::size_t>& shape) {
    std::size_t n = 1;
    for (std::size_t d : shape) {
        if (d == 0) throw Error(Error::Code::shape, "tensor axes must have positive length");
        n *= d;
    }
    return n;
}

std::string shape_str(std::span<const std::size_t> shape) {
    std::string s = "(";
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(shape[i]);
    }
    return s + ")";
}

}  // namespace

Tensor::Tensor(FieldSpec field, std::vector<std::size_t> shape) : field_(field), shape_(std::move(shape)) {
    data_.assign(checked_size(shape_), Scalar::zero(field_));
}

Tensor Tensor::basis(const FieldSpec& f, std::size_t dim, std::size_t index) {
    Tensor t(f, {dim});
    t.set_flat(index, Scalar::one(f));
    return t;
}

Tensor Tensor::from_ints(FieldSpec field, std::vector<std::size_t> shape,
                         std::initializer_list<std::int64_t> entries) {
    Tensor t(field, std::move(shape));
    if (entries.size() != t.size())
        throw Error(Error::Code::shape, "entry count does not match shape");
    std::size_t i = 0;
    for (std::int64_t v : entries) t.set_flat(i++, Scalar::of_int(v, field));
    return t;
}

std::size_t Tensor::flat_index(std::span<const std::size_t> idx) const {
    if (idx.size() != shape_.size())
        throw Error(Error::Code::shape, "index rank does not match tensor rank");
    std::size_t f = 0;
    for (std::size_t a = 0; a < shape_.size(); ++a) {
        if (idx[a] >= shape_[a])
            throw Error(Error::Code::shape, "index out of range on axis " + std::to_string(a));
        f = f * shape_[a] + idx[a];
    }
    return f;
}

std::vector<std::size_t> Tensor::unflatten(std::size_t flat) const {
    std::vector<std::size_t> idx(shape_.size());
    for (std::size_t a = shape_.size(); a-- > 0;) {
        idx[a] = flat % shape_[a];
        flat /= shape_[a];
    }
    return idx;
}

const Scalar& Tensor::at(std::span<const std::size_t> idx) const { return data_[flat_index(idx)]; }

const Scalar& Tensor::at(std::initializer_list<std::size_t> idx) const {
    return at(std::span<const std::size_t>(idx.begin(), idx.size()));
}

void Tensor::set(std::span<const std::size_t> idx, Scalar v) { set_flat(flat_index(idx), std::move(v)); }

void Tensor::set(std::initializer_list<std::size_t> idx, Scalar v) {
    set(std::span<const std::size_t>(idx.begin(), idx.size()), std::move(v));
}

void Tensor::set_flat(std::size_t i, Scalar v) {
    if (v.field() != field_)
        throw Error(Error::Code::field_mismatch, "entry field does not match tensor field");
    data_[i] = std::move(v);
}

void Tensor::add_flat(std::size_t i, const Scalar& v) { data_[i] += v; }

bool Tensor::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

ContractionSpec ContractionSpec::parse(std::string_view text) {
    ContractionSpec spec;
    auto arrow = text.find("->");
    if (arrow == std::string_view::npos)
        throw Error(Error::Code::parse, "contraction spec must contain '->'");
    std::string_view lhs = text.substr(0, arrow);
    spec.output = std::string(text.substr(arrow + 2));
    std::size_t start = 0;
    while (true) {
        auto comma = lhs.find(',', start);
        spec.inputs.emplace_back(lhs.substr(start, comma == std::string_view::npos ? comma : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    auto valid = [](const std::string& s) {
        return std::all_of(s.begin(), s.end(), [](char c) {
            return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
        });
    };
    for (const auto& in : spec.inputs)
        if (!valid(in)) throw Error(Error::Code::parse, "contraction indices must be letters");
    if (!valid(spec.output)) throw Error(Error::Code::parse, "contraction indices must be letters");
    return spec;
}

namespace {

constexpr std::size_t kMaxOperands = 4;

struct LetterPlan {
    std::size_t dim = 0;
    std::size_t out_stride = 0;                      // 0 when absent from output
    std::array<std::size_t, kMaxOperands> op_stride; // combined stride per operand
};

}  // namespace

Tensor contract(const ContractionSpec& spec, std::span<const Tensor* const> operands) {
    const std::size_t nops = operands.size();
    if (nops == 0 || nops != spec.inputs.size())
        throw Error(Error::Code::shape, "contraction operand count does not match spec");
    if (nops > kMaxOperands)
        throw Error(Error::Code::shape, "too many contraction operands");

    const FieldSpec field = operands[0]->field();
    for (const Tensor* t : operands)
        if (t->field() != field)
            throw Error(Error::Code::field_mismatch, "contraction operands over different fields");

    // collect letters in operand-major order of first appearance
    std::array<int, 256> slot_of;
    slot_of.fill(-1);
    std::vector<LetterPlan> letters;
    std::vector<char> letter_names;
    for (std::size_t k = 0; k < nops; ++k) {
        const std::string& in = spec.inputs[k];
        if (in.size() != operands[k]->rank())
            throw Error(Error::Code::shape, "operand " + std::to_string(k) + " has rank " +
                                                std::to_string(operands[k]->rank()) + " but spec '" + in +
                                                "' names " + std::to_string(in.size()) + " axes");
        for (std::size_t a = 0; a < in.size(); ++a) {
            unsigned char c = (unsigned char)in[a];
            std::size_t dim = operands[k]->shape()[a];
            if (slot_of[c] < 0) {
                slot_of[c] = (int)letters.size();
                LetterPlan lp;
                lp.dim = dim;
                lp.op_stride.fill(0);
                letters.push_back(lp);
                letter_names.push_back((char)c);
            } else if (letters[(std::size_t)slot_of[c]].dim != dim) {
                throw Error(Error::Code::shape, std::string("index '") + (char)c +
                                                    "' is used with mismatched axis lengths");
            }
        }
    }

    // per-operand strides, summing over repeated letters within one operand
    std::array<std::size_t, kMaxOperands> op_size{};
    std::array<int, kMaxOperands> op_complete_depth{};
    op_complete_depth.fill(-1);
    for (std::size_t k = 0; k < nops; ++k) {
        const std::string& in = spec.inputs[k];
        const auto& shape = operands[k]->shape();
        std::size_t stride = 1;
        std::vector<std::size_t> strides(shape.size());
        for (std::size_t a = shape.size(); a-- > 0;) {
            strides[a] = stride;
            stride *= shape[a];
        }
        op_size[k] = stride;
        for (std::size_t a = 0; a < in.size(); ++a) {
            int slot = slot_of[(unsigned char)in[a]];
            letters[(std::size_t)slot].op_stride[k] += strides[a];
            op_complete_depth[k] = std::max(op_complete_depth[k], slot);
        }
    }

    // output shape and strides
    std::array<int, 256> seen_out;
    seen_out.fill(0);
    std::vector<std::size_t> out_shape;
    for (char c : spec.output) {
        if (slot_of[(unsigned char)c] < 0)
            throw Error(Error::Code::shape, std::string("output index '") + c + "' not among inputs");
        if (seen_out[(unsigned char)c]++)
            throw Error(Error::Code::shape, std::string("output index '") + c + "' repeated");
        out_shape.push_back(letters[(std::size_t)slot_of[(unsigned char)c]].dim);
    }
    {
        std::size_t stride = 1;
        for (std::size_t a = spec.output.size(); a-- > 0;) {
            letters[(std::size_t)slot_of[(unsigned char)spec.output[a]]].out_stride = stride;
            stride *= out_shape[a];
        }
    }

    Tensor out(field, out_shape);

    // depth-first walk over all letter assignments; an operand's entry is
    // read as soon as its letters are all bound, pruning zero products
    const std::size_t depth_max = letters.size();
    Scalar init = Scalar::one(field);
    for (std::size_t k = 0; k < nops; ++k) {
        if (op_complete_depth[k] < 0) {  // rank-0 operand
            const Scalar& s = operands[k]->flat(0);
            if (s.is_zero()) return out;
            init = init * s;
        }
    }

    struct Frame {
        std::array<std::size_t, kMaxOperands> op_idx;
        std::size_t out_idx;
        Scalar acc;
    };

    auto walk = [&](auto&& self, std::size_t depth, const Frame& f) -> void {
        if (depth == depth_max) {
            out.add_flat(f.out_idx, f.acc);
            return;
        }
        const LetterPlan& lp = letters[depth];
        Frame g = f;
        for (std::size_t v = 0; v < lp.dim; ++v) {
            if (v > 0) {
                for (std::size_t k = 0; k < nops; ++k) g.op_idx[k] += lp.op_stride[k];
                g.out_idx += lp.out_stride;
            }
            Scalar acc = f.acc;
            bool dead = false;
            for (std::size_t k = 0; k < nops; ++k) {
                if (op_complete_depth[k] != (int)depth) continue;
                const Scalar& s = operands[k]->flat(g.op_idx[k]);
                if (s.is_zero()) {
                    dead = true;
                    break;
                }
                acc = acc * s;
            }
            if (dead) continue;
            g.acc = std::move(acc);
            self(self, depth + 1, g);
        }
    };

    Frame root;
    root.op_idx.fill(0);
    root.out_idx = 0;
    root.acc = std::move(init);
    walk(walk, 0, root);
    return out;
}

Tensor contract(std::string_view spec, std::initializer_list<const Tensor*> operands) {
    ContractionSpec s = ContractionSpec::parse(spec);
    std::vector<const Tensor*> ops(operands.begin(), operands.end());
    return contract(s, ops);
}

Tensor tensor_product(const Tensor& a, const Tensor& b) {
    if (a.field() != b.field())
        throw Error(Error::Code::field_mismatch, "tensor product over different fields");
    std::vector<std::size_t> shape = a.shape();
    shape.insert(shape.end(), b.shape().begin(), b.shape().end());
    Tensor out(a.field(), std::move(shape));
    const std::size_t nb = b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.flat(i).is_zero()) continue;
        for (std::size_t j = 0; j < nb; ++j) {
            if (b.flat(j).is_zero()) continue;
            out.set_flat(i * nb + j, a.flat(i) * b.flat(j));
        }
    }
    return out;
}

Tensor permute(const Tensor& t, std::span<const std::size_t> perm) {
    if (perm.size() != t.rank())
        throw Error(Error::Code::shape, "permutation length does not match rank");
    std::vector<bool> seen(t.rank(), false);
    for (std::size_t p : perm) {
        if (p >= t.rank() || seen[p]) throw Error(Error::Code::shape, "invalid axis permutation");
        seen[p] = true;
    }
    std::vector<std::size_t> shape(t.rank());
    for (std::size_t a = 0; a < t.rank(); ++a) shape[a] = t.shape()[perm[a]];
    Tensor out(t.field(), shape);
    std::vector<std::size_t> src(t.rank());
    for (std::size_t f = 0; f < out.size(); ++f) {
        std::vector<std::size_t> dst = out.unflatten(f);
        for (std::size_t a = 0; a < t.rank(); ++a) src[perm[a]] = dst[a];
        out.set_flat(f, t.at(src));
    }
    return out;
}

Tensor permute(const Tensor& t, std::initializer_list<std::size_t> perm) {
    return permute(t, std::span<const std::size_t>(perm.begin(), perm.size()));
}

Tensor reshape(const Tensor& t, std::vector<std::size_t> shape) {
    Tensor out(t.field(), std::move(shape));
    if (out.size() != t.size())
        throw Error(Error::Code::shape, "reshape changes total size " + shape_str(t.shape()));
    for (std::size_t i = 0; i < t.size(); ++i) out.set_flat(i, t.flat(i));
    return out;
}

TensorComparison tensors_equal(const Tensor& a, const Tensor& b) {
    TensorComparison cmp;
    if (a.shape() != b.shape()) {
        cmp.equal = false;
        return cmp;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.flat(i) != b.flat(i)) {
            cmp.equal = false;
            cmp.first_diff = a.unflatten(i);
            return cmp;
        }
    }
    return cmp;
}

}  // namespace lrx
