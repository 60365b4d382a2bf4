#include "lrx/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace lrx {

namespace {

using nlohmann::json;

constexpr const char* kFormatTag = "lrx/1";

// --- writer ---------------------------------------------------------------

std::string esc(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if ((unsigned char)c < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out + "\"";
}

std::string field_json(const FieldSpec& f) {
    if (f.kind == FieldKind::rationals) return "{\"kind\": \"Q\"}";
    return "{\"kind\": \"Fp\", \"p\": " + std::to_string(f.p) + "}";
}

std::string scalar_list(const Tensor& vec) {
    std::string out = "[";
    for (std::size_t i = 0; i < vec.size(); ++i) {
        if (i) out += ", ";
        out += esc(vec.flat(i).str());
    }
    return out + "]";
}

std::string label_list(const std::vector<std::string>& labels) {
    std::string out = "[";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += ", ";
        out += esc(labels[i]);
    }
    return out + "]";
}

// Entries in row-major flat order, which is lexicographic in the index tuple.
std::string sparse_block(const Tensor& t, const std::string& indent) {
    std::string out = "[";
    bool any = false;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const Scalar& v = t.flat(i);
        if (v.is_zero()) continue;
        out += any ? "," : "";
        out += "\n" + indent + " [";
        for (std::size_t ix : t.unflatten(i)) out += std::to_string(ix) + ", ";
        out += esc(v.str()) + "]";
        any = true;
    }
    if (any) out += "\n" + indent;
    return out + "]";
}

void write_algebra_fields(std::string& out, const Algebra& a, const std::string& indent) {
    out += indent + "\"dim\": " + std::to_string(a.dim) + ",\n";
    out += indent + "\"unit\": " + scalar_list(a.unit) + ",\n";
    out += indent + "\"mu\": " + sparse_block(a.mu, indent);
    if (!a.basis_labels.empty()) out += ",\n" + indent + "\"labels\": " + label_list(a.basis_labels);
}

std::string algebra_obj(const Algebra& a, const std::string& indent) {
    std::string out = "{\n";
    write_algebra_fields(out, a, indent + " ");
    return out + "\n" + indent + "}";
}

std::string pointed_obj(const PointedSpace& u, const std::string& indent) {
    std::string out = "{\"dim\": " + std::to_string(u.dim) + ", \"unit\": " + scalar_list(u.unit_vec);
    if (!u.basis_labels.empty()) out += ", \"labels\": " + label_list(u.basis_labels);
    (void)indent;
    return out + "}";
}

const char* conv_name(PhiConvention c) { return c == PhiConvention::inv ? "inv" : "fwd"; }

}  // namespace

std::string_view dockind_name(DocKind k) {
    switch (k) {
        case DocKind::algebra: return "algebra";
        case DocKind::crossed_datum: return "crossed_datum";
        case DocKind::lr_twist: return "lr_twist";
        case DocKind::mirror_brz: return "mirror_brz";
        case DocKind::iterated: return "iterated";
        case DocKind::lr_smash: return "lr_smash";
    }
    return "?";
}

Document document_of(Algebra a) {
    Document d;
    d.field = a.field;
    d.kind = DocKind::algebra;
    d.payload = std::move(a);
    return d;
}

Document document_of(CrossedDatum c) {
    Document d;
    d.field = c.H.field;
    d.kind = DocKind::crossed_datum;
    d.payload = std::move(c);
    return d;
}

Document document_of(SpecializationData s) {
    Document d;
    if (std::holds_alternative<LRTwistData>(s)) {
        d.field = std::get<LRTwistData>(s).B.field;
        d.kind = DocKind::lr_twist;
    } else if (std::holds_alternative<MirrorBrzezinskiData>(s)) {
        d.field = std::get<MirrorBrzezinskiData>(s).B.field;
        d.kind = DocKind::mirror_brz;
    } else if (std::holds_alternative<IteratedData>(s)) {
        d.field = std::get<IteratedData>(s).H.field;
        d.kind = DocKind::iterated;
    } else {
        d.field = std::get<LRSmashData>(s).qb.H.field;
        d.kind = DocKind::lr_smash;
    }
    std::visit([&](auto&& v) { d.payload = std::move(v); }, std::move(s));
    return d;
}

Document document_of(const BuiltinInstance& inst) {
    if (inst.source) return document_of(*inst.source);
    return document_of(inst.datum);
}

std::string serialize_document(const Document& doc) {
    std::string out = "{\n";
    out += " \"format\": " + esc(kFormatTag) + ",\n";
    out += " \"field\": " + field_json(doc.field) + ",\n";
    out += " \"kind\": " + esc(dockind_name(doc.kind));

    if (doc.kind == DocKind::algebra) {
        const Algebra& a = std::get<Algebra>(doc.payload);
        out += ",\n";
        write_algebra_fields(out, a, " ");
    } else if (doc.kind == DocKind::crossed_datum) {
        const CrossedDatum& d = std::get<CrossedDatum>(doc.payload);
        out += ",\n";
        write_algebra_fields(out, d.H, " ");
        out += ",\n \"U\": " + pointed_obj(d.U, " ") + ",\n";
        out += " \"J\": " + sparse_block(d.J, " ") + ",\n";
        out += " \"T\": " + sparse_block(d.T, " ") + ",\n";
        out += " \"gamma\": " + sparse_block(d.gamma, " ") + ",\n";
        out += " \"eta\": " + sparse_block(d.eta, " ");
    } else if (doc.kind == DocKind::lr_twist) {
        const LRTwistData& d = std::get<LRTwistData>(doc.payload);
        out += ",\n \"A\": " + algebra_obj(d.A, " ") + ",\n";
        out += " \"B\": " + algebra_obj(d.B, " ") + ",\n";
        out += " \"R\": " + sparse_block(d.R, " ") + ",\n";
        out += " \"Q\": " + sparse_block(d.Q, " ");
    } else if (doc.kind == DocKind::mirror_brz) {
        const MirrorBrzezinskiData& d = std::get<MirrorBrzezinskiData>(doc.payload);
        out += ",\n \"W\": " + pointed_obj(d.W, " ") + ",\n";
        out += " \"B\": " + algebra_obj(d.B, " ") + ",\n";
        out += " \"P\": " + sparse_block(d.P, " ") + ",\n";
        out += " \"nu\": " + sparse_block(d.nu, " ");
    } else if (doc.kind == DocKind::iterated) {
        const IteratedData& d = std::get<IteratedData>(doc.payload);
        out += ",\n \"W\": " + pointed_obj(d.W, " ") + ",\n";
        out += " \"V\": " + pointed_obj(d.V, " ") + ",\n";
        out += " \"H\": " + algebra_obj(d.H, " ") + ",\n";
        out += " \"P\": " + sparse_block(d.P, " ") + ",\n";
        out += " \"nu\": " + sparse_block(d.nu, " ") + ",\n";
        out += " \"R\": " + sparse_block(d.R, " ") + ",\n";
        out += " \"sigma\": " + sparse_block(d.sigma, " ") + ",\n";
        out += " \"Q\": " + sparse_block(d.Q, " ");
    } else {
        const LRSmashData& d = std::get<LRSmashData>(doc.payload);
        out += ",\n \"H\": " + algebra_obj(d.qb.H, " ") + ",\n";
        out += " \"Delta\": " + sparse_block(d.qb.Delta, " ") + ",\n";
        out += " \"counit\": " + scalar_list(d.qb.counit) + ",\n";
        out += " \"Phi\": " + sparse_block(d.qb.Phi, " ") + ",\n";
        out += " \"PhiInv\": " + sparse_block(d.qb.PhiInv, " ") + ",\n";
        out += " \"A\": " + algebra_obj(d.bm.A, " ") + ",\n";
        out += " \"left\": " + sparse_block(d.bm.left, " ") + ",\n";
        out += " \"right\": " + sparse_block(d.bm.right, " ") + ",\n";
        out += " \"convention\": {\"x\": " + esc(conv_name(d.conv.x)) + ", \"y\": " +
               esc(conv_name(d.conv.y)) + ", \"z\": " + esc(conv_name(d.conv.z)) + "}";
    }
    out += "\n}\n";
    return out;
}

// --- parser ---------------------------------------------------------------

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& msg) {
    throw Error(Error::Code::parse, path + ": " + msg);
}

const json& req(const json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) bad(path, std::string("missing key '") + key + "'");
    return *it;
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& path) {
    if (!obj.is_object()) bad(path, "expected an object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) {
                ok = true;
                break;
            }
        if (!ok) bad(path, "unknown key '" + it.key() + "'");
    }
}

std::size_t read_index(const json& j, const std::string& path) {
    if (!j.is_number_unsigned()) bad(path, "expected a nonnegative integer index");
    return j.get<std::size_t>();
}

Scalar read_scalar(const json& j, const FieldSpec& field, const std::string& path) {
    if (!j.is_string()) bad(path, "expected a scalar string");
    try {
        return parse_scalar(j.get<std::string>(), field);
    } catch (const Error& e) {
        bad(path, e.what());
    }
}

Tensor read_vector(const json& j, const FieldSpec& field, std::size_t dim, const std::string& path) {
    if (!j.is_array() || j.size() != dim)
        bad(path, "expected an array of " + std::to_string(dim) + " scalar strings");
    Tensor t(field, {dim});
    for (std::size_t i = 0; i < dim; ++i)
        t.set_flat(i, read_scalar(j[i], field, path + "[" + std::to_string(i) + "]"));
    return t;
}

Tensor read_sparse(const json& j, const FieldSpec& field, std::vector<std::size_t> shape,
                   const std::string& path) {
    if (!j.is_array()) bad(path, "expected an array of sparse entries");
    Tensor t(field, shape);
    std::set<std::size_t> seen;
    for (std::size_t e = 0; e < j.size(); ++e) {
        const std::string epath = path + "[" + std::to_string(e) + "]";
        const json& entry = j[e];
        if (!entry.is_array() || entry.size() != shape.size() + 1)
            bad(epath, "expected [" + std::to_string(shape.size()) + " indices, scalar]");
        std::vector<std::size_t> idx(shape.size());
        for (std::size_t a = 0; a < shape.size(); ++a) {
            idx[a] = read_index(entry[a], epath);
            if (idx[a] >= shape[a])
                bad(epath, "index " + std::to_string(idx[a]) + " out of range on axis " +
                               std::to_string(a) + " (length " + std::to_string(shape[a]) + ")");
        }
        std::size_t flat = t.flat_index(idx);
        if (!seen.insert(flat).second) bad(epath, "duplicate index tuple");
        t.set_flat(flat, read_scalar(entry[shape.size()], field, epath));
    }
    return t;
}

std::vector<std::string> read_labels(const json& obj, std::size_t dim, const std::string& path) {
    auto it = obj.find("labels");
    if (it == obj.end()) return {};
    if (!it->is_array() || it->size() != dim)
        bad(path + ".labels", "expected an array of " + std::to_string(dim) + " strings");
    std::vector<std::string> labels(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (!(*it)[i].is_string()) bad(path + ".labels", "labels must be strings");
        labels[i] = (*it)[i].get<std::string>();
    }
    return labels;
}

std::size_t read_dim(const json& obj, const std::string& path) {
    const json& d = req(obj, "dim", path);
    if (!d.is_number_unsigned() || d.get<std::size_t>() == 0)
        bad(path + ".dim", "expected a positive integer");
    return d.get<std::size_t>();
}

Algebra read_algebra(const json& obj, const FieldSpec& field, const std::string& path,
                     bool strict_keys = true) {
    if (strict_keys) check_keys(obj, {"dim", "unit", "mu", "labels"}, path);
    std::size_t dim = read_dim(obj, path);
    Tensor unit = read_vector(req(obj, "unit", path), field, dim, path + ".unit");
    Tensor mu = read_sparse(req(obj, "mu", path), field, {dim, dim, dim}, path + ".mu");
    Algebra a = make_algebra(std::move(mu), std::move(unit), read_labels(obj, dim, path));
    ValidationReport report = validate_algebra(a);
    if (!report.ok) {
        const LawFailure& f = report.failures.front();
        std::string witness;
        for (std::size_t w : f.witness) witness += (witness.empty() ? "" : ",") + std::to_string(w);
        throw Error(Error::Code::domain, path + ": algebra violates " + std::string(law_name(f.law)) +
                                             " at basis (" + witness + ")");
    }
    return a;
}

PointedSpace read_pointed(const json& obj, const FieldSpec& field, const std::string& path) {
    check_keys(obj, {"dim", "unit", "labels"}, path);
    std::size_t dim = read_dim(obj, path);
    Tensor unit = read_vector(req(obj, "unit", path), field, dim, path + ".unit");
    if (unit.is_zero()) throw Error(Error::Code::domain, path + ".unit: distinguished element is zero");
    return make_pointed_space(std::move(unit), read_labels(obj, dim, path));
}

FieldSpec read_field(const json& obj, const std::string& path) {
    if (!obj.is_object()) bad(path, "expected an object");
    const json& kind = req(obj, "kind", path);
    if (!kind.is_string()) bad(path + ".kind", "expected \"Q\" or \"Fp\"");
    std::string k = kind.get<std::string>();
    if (k == "Q") {
        check_keys(obj, {"kind"}, path);
        return FieldSpec::rationals();
    }
    if (k == "Fp") {
        check_keys(obj, {"kind", "p"}, path);
        const json& p = req(obj, "p", path);
        if (!p.is_number_unsigned()) bad(path + ".p", "expected a positive integer");
        try {
            return FieldSpec::prime_field(p.get<std::uint64_t>());
        } catch (const Error& e) {
            bad(path + ".p", e.what());
        }
    }
    bad(path + ".kind", "unknown field kind '" + k + "'");
}

PhiConvention read_convention_slot(const json& j, const std::string& path) {
    if (!j.is_string()) bad(path, "expected \"inv\" or \"fwd\"");
    std::string s = j.get<std::string>();
    if (s == "inv") return PhiConvention::inv;
    if (s == "fwd") return PhiConvention::fwd;
    bad(path, "expected \"inv\" or \"fwd\"");
}

}  // namespace

Document parse_document(std::string_view json_text, std::optional<FieldSpec> field_override) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::exception& e) {
        throw Error(Error::Code::parse, std::string("invalid JSON: ") + e.what());
    }
    const std::string path = "$";
    if (!root.is_object()) bad(path, "document must be a JSON object");

    const json& fmt = req(root, "format", path);
    if (!fmt.is_string() || fmt.get<std::string>() != kFormatTag)
        bad(path + ".format", std::string("unsupported version (expected \"") + kFormatTag + "\")");

    FieldSpec field = read_field(req(root, "field", path), path + ".field");
    if (field_override) field = *field_override;

    const json& kindj = req(root, "kind", path);
    if (!kindj.is_string()) bad(path + ".kind", "expected a string");
    const std::string kind = kindj.get<std::string>();

    Document doc;
    doc.field = field;

    if (kind == "algebra") {
        check_keys(root, {"format", "field", "kind", "dim", "unit", "mu", "labels"}, path);
        doc.kind = DocKind::algebra;
        doc.payload = read_algebra(root, field, path, /*strict_keys=*/false);
        return doc;
    }
    if (kind == "crossed_datum") {
        check_keys(root, {"format", "field", "kind", "dim", "unit", "mu", "labels", "U", "J", "T",
                          "gamma", "eta"},
                   path);
        doc.kind = DocKind::crossed_datum;
        Algebra H = read_algebra(root, field, path, /*strict_keys=*/false);
        PointedSpace U = read_pointed(req(root, "U", path), field, path + ".U");
        const std::size_t n = U.dim, m = H.dim;
        Tensor J = read_sparse(req(root, "J", path), field, {m, n, n, m}, path + ".J");
        Tensor T = read_sparse(req(root, "T", path), field, {n, m, n, m}, path + ".T");
        Tensor gamma = read_sparse(req(root, "gamma", path), field, {n, n, n, n, m}, path + ".gamma");
        Tensor eta = read_sparse(req(root, "eta", path), field, {n, n, n, m, m}, path + ".eta");
        doc.payload = make_crossed_datum(std::move(H), std::move(U), std::move(J), std::move(T),
                                         std::move(gamma), std::move(eta));
        return doc;
    }
    if (kind == "lr_twist") {
        check_keys(root, {"format", "field", "kind", "A", "B", "R", "Q"}, path);
        doc.kind = DocKind::lr_twist;
        Algebra A = read_algebra(req(root, "A", path), field, path + ".A");
        Algebra B = read_algebra(req(root, "B", path), field, path + ".B");
        const std::size_t n = A.dim, m = B.dim;
        Tensor R = read_sparse(req(root, "R", path), field, {m, n, n, m}, path + ".R");
        Tensor Q = read_sparse(req(root, "Q", path), field, {n, m, n, m}, path + ".Q");
        doc.payload = LRTwistData{std::move(A), std::move(B), std::move(R), std::move(Q)};
        return doc;
    }
    if (kind == "mirror_brz") {
        check_keys(root, {"format", "field", "kind", "W", "B", "P", "nu"}, path);
        doc.kind = DocKind::mirror_brz;
        PointedSpace W = read_pointed(req(root, "W", path), field, path + ".W");
        Algebra B = read_algebra(req(root, "B", path), field, path + ".B");
        const std::size_t n = W.dim, m = B.dim;
        Tensor P = read_sparse(req(root, "P", path), field, {m, n, n, m}, path + ".P");
        Tensor nu = read_sparse(req(root, "nu", path), field, {n, n, n, m}, path + ".nu");
        doc.payload = MirrorBrzezinskiData{std::move(W), std::move(B), std::move(P), std::move(nu)};
        return doc;
    }
    if (kind == "iterated") {
        check_keys(root, {"format", "field", "kind", "W", "V", "H", "P", "nu", "R", "sigma", "Q"},
                   path);
        doc.kind = DocKind::iterated;
        PointedSpace W = read_pointed(req(root, "W", path), field, path + ".W");
        PointedSpace V = read_pointed(req(root, "V", path), field, path + ".V");
        Algebra H = read_algebra(req(root, "H", path), field, path + ".H");
        const std::size_t wn = W.dim, vn = V.dim, m = H.dim;
        Tensor P = read_sparse(req(root, "P", path), field, {m, wn, wn, m}, path + ".P");
        Tensor nu = read_sparse(req(root, "nu", path), field, {wn, wn, wn, m}, path + ".nu");
        Tensor R = read_sparse(req(root, "R", path), field, {vn, m, vn, m}, path + ".R");
        Tensor sigma = read_sparse(req(root, "sigma", path), field, {vn, vn, m, vn}, path + ".sigma");
        Tensor Q = read_sparse(req(root, "Q", path), field, {vn, wn, wn, m, vn}, path + ".Q");
        doc.payload = IteratedData{std::move(W), std::move(V), std::move(H), std::move(P),
                                   std::move(nu), std::move(R), std::move(sigma), std::move(Q)};
        return doc;
    }
    if (kind == "lr_smash") {
        check_keys(root, {"format", "field", "kind", "H", "Delta", "counit", "Phi", "PhiInv", "A",
                          "left", "right", "convention"},
                   path);
        doc.kind = DocKind::lr_smash;
        Algebra H = read_algebra(req(root, "H", path), field, path + ".H");
        const std::size_t m = H.dim;
        Tensor Delta = read_sparse(req(root, "Delta", path), field, {m, m, m}, path + ".Delta");
        Tensor counit = read_vector(req(root, "counit", path), field, m, path + ".counit");
        Tensor Phi = read_sparse(req(root, "Phi", path), field, {m, m, m}, path + ".Phi");
        Tensor PhiInv = read_sparse(req(root, "PhiInv", path), field, {m, m, m}, path + ".PhiInv");
        Algebra A = read_algebra(req(root, "A", path), field, path + ".A");
        const std::size_t n = A.dim;
        Tensor left = read_sparse(req(root, "left", path), field, {m, n, n}, path + ".left");
        Tensor right = read_sparse(req(root, "right", path), field, {n, m, n}, path + ".right");
        LRSmashConventions conv;
        if (auto it = root.find("convention"); it != root.end()) {
            check_keys(*it, {"x", "y", "z"}, path + ".convention");
            if (auto x = it->find("x"); x != it->end())
                conv.x = read_convention_slot(*x, path + ".convention.x");
            if (auto y = it->find("y"); y != it->end())
                conv.y = read_convention_slot(*y, path + ".convention.y");
            if (auto z = it->find("z"); z != it->end())
                conv.z = read_convention_slot(*z, path + ".convention.z");
        }
        LRSmashData data{QuasiBialgebraData{std::move(H), std::move(Delta), std::move(counit),
                                            std::move(Phi), std::move(PhiInv)},
                         BimoduleAlgebraData{std::move(A), std::move(left), std::move(right)}, conv};
        validate_quasi_bialgebra(data.qb);
        validate_bimodule_algebra(data.qb, data.bm);
        doc.payload = std::move(data);
        return doc;
    }
    bad(path + ".kind", "unknown kind '" + kind + "'");
}

CrossedDatum materialize_datum(const Document& doc) {
    if (std::holds_alternative<Algebra>(doc.payload))
        throw Error(Error::Code::domain,
                    "document describes a plain algebra, not a crossed datum");
    if (std::holds_alternative<CrossedDatum>(doc.payload))
        return std::get<CrossedDatum>(doc.payload);
    if (std::holds_alternative<LRTwistData>(doc.payload))
        return from_lr_twisted(std::get<LRTwistData>(doc.payload));
    if (std::holds_alternative<MirrorBrzezinskiData>(doc.payload))
        return from_mirror_brzezinski(std::get<MirrorBrzezinskiData>(doc.payload));
    if (std::holds_alternative<IteratedData>(doc.payload))
        return from_iterated(std::get<IteratedData>(doc.payload));
    return from_lr_smash(std::get<LRSmashData>(doc.payload));
}

}  // namespace lrx
