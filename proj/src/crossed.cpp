#include "lrx/crossed.hpp"

#include <array>

namespace lrx {

std::string PointedSpace::label(std::size_t i) const {
    if (i < basis_labels.size() && !basis_labels[i].empty()) return basis_labels[i];
    return "u" + std::to_string(i);
}

PointedSpace make_pointed_space(Tensor unit_vec, std::vector<std::string> basis_labels) {
    if (unit_vec.rank() != 1) throw Error(Error::Code::shape, "distinguished element must be a vector");
    if (unit_vec.is_zero())
        throw Error(Error::Code::domain, "distinguished element of a pointed space must be nonzero");
    PointedSpace u;
    u.dim = unit_vec.shape()[0];
    if (!basis_labels.empty() && basis_labels.size() != u.dim)
        throw Error(Error::Code::shape, "label count does not match dim");
    u.unit_vec = std::move(unit_vec);
    u.basis_labels = std::move(basis_labels);
    return u;
}

CrossedDatum make_crossed_datum(Algebra H, PointedSpace U, Tensor J, Tensor T, Tensor gamma,
                                Tensor eta) {
    const std::size_t n = U.dim, m = H.dim;
    auto expect = [&](const Tensor& t, std::vector<std::size_t> shape, const char* name) {
        if (t.field() != H.field)
            throw Error(Error::Code::field_mismatch,
                        std::string(name) + " is not over the field of H");
        if (t.shape() != shape)
            throw Error(Error::Code::shape, std::string(name) + " has the wrong shape");
    };
    if (U.unit_vec.field() != H.field)
        throw Error(Error::Code::field_mismatch, "U is not over the field of H");
    expect(J, {m, n, n, m}, "J");
    expect(T, {n, m, n, m}, "T");
    expect(gamma, {n, n, n, n, m}, "gamma");
    expect(eta, {n, n, n, m, m}, "eta");
    CrossedDatum d;
    d.H = std::move(H);
    d.U = std::move(U);
    d.J = std::move(J);
    d.T = std::move(T);
    d.gamma = std::move(gamma);
    d.eta = std::move(eta);
    return d;
}

namespace {

enum class Space { U, H };

using Inputs = std::span<const Tensor* const>;
using EvalFn = Tensor (*)(const CrossedDatum&, Inputs);

// --- sides of the unit axioms (ids 1..4); distinguished elements are used
// --- as general vectors

Tensor lhs1a(const CrossedDatum& d, Inputs in) {
    return contract("g,u,guvh->vh", {in[0], &d.U.unit_vec, &d.J});
}
Tensor rhs1a(const CrossedDatum& d, Inputs in) { return tensor_product(d.U.unit_vec, *in[0]); }
Tensor lhs1b(const CrossedDatum& d, Inputs in) {
    return contract("g,u,guvh->vh", {&d.H.unit, in[0], &d.J});
}
Tensor rhs1b(const CrossedDatum& d, Inputs in) { return tensor_product(*in[0], d.H.unit); }

Tensor lhs2a(const CrossedDatum& d, Inputs in) {
    return contract("u,g,ugvh->vh", {in[0], &d.H.unit, &d.T});
}
Tensor rhs2a(const CrossedDatum& d, Inputs in) { return tensor_product(*in[0], d.H.unit); }
Tensor lhs2b(const CrossedDatum& d, Inputs in) {
    return contract("u,g,ugvh->vh", {&d.U.unit_vec, in[0], &d.T});
}
Tensor rhs2b(const CrossedDatum& d, Inputs in) { return tensor_product(d.U.unit_vec, *in[0]); }

Tensor lhs3a(const CrossedDatum& d, Inputs in) {
    return contract("u,v,uvpqh->pqh", {in[0], &d.U.unit_vec, &d.gamma});
}
Tensor rhs3a(const CrossedDatum& d, Inputs in) {
    return tensor_product(tensor_product(*in[0], d.U.unit_vec), d.H.unit);
}
Tensor lhs3b(const CrossedDatum& d, Inputs in) {
    return contract("u,v,uvpqh->pqh", {&d.U.unit_vec, in[0], &d.gamma});
}
Tensor rhs3b(const CrossedDatum& d, Inputs in) {
    return tensor_product(tensor_product(d.U.unit_vec, *in[0]), d.H.unit);
}

Tensor lhs4a(const CrossedDatum& d, Inputs in) {
    return contract("u,v,uvpgh->pgh", {in[0], &d.U.unit_vec, &d.eta});
}
Tensor lhs4b(const CrossedDatum& d, Inputs in) {
    return contract("u,v,uvpgh->pgh", {&d.U.unit_vec, in[0], &d.eta});
}
Tensor rhs4(const CrossedDatum& d, Inputs in) {
    return tensor_product(tensor_product(*in[0], d.H.unit), d.H.unit);
}

// --- id 5: J applied to a product of H versus two applications of J

Tensor lhs5(const CrossedDatum& d, Inputs in) {
    Tensor p = contract("a,b,abc->c", {in[0], in[1], &d.H.mu});
    return contract("c,u,cuvf->vf", {&p, in[2], &d.J});
}
Tensor rhs5(const CrossedDatum& d, Inputs in) {
    Tensor s1 = contract("h,u,huvf->vf", {in[1], in[2], &d.J});
    Tensor s2 = contract("vf,g,gvwx->wxf", {&s1, in[0], &d.J});
    return contract("wxf,xfe->we", {&s2, &d.H.mu});
}

// --- id 6: T applied to a product of H versus two applications of T

Tensor lhs6(const CrossedDatum& d, Inputs in) {
    Tensor p = contract("a,b,abc->c", {in[1], in[2], &d.H.mu});
    return contract("u,c,ucva->va", {in[0], &p, &d.T});
}
Tensor rhs6(const CrossedDatum& d, Inputs in) {
    Tensor s1 = contract("u,g,ugvf->vf", {in[0], in[1], &d.T});
    Tensor s2 = contract("vf,h,vhwx->wfx", {&s1, in[2], &d.T});
    return contract("wfx,fxe->we", {&s2, &d.H.mu});
}

// --- id 7 (lrc9): eta after a double J versus J after eta

Tensor lhs7(const CrossedDatum& d, Inputs in) {
    Tensor s1 = contract("g,u,guvf->vf", {in[0], in[1], &d.J});
    Tensor s2 = contract("vf,w,fwpx->vpx", {&s1, in[2], &d.J});
    Tensor s3 = contract("vpx,vpqyz->qyzx", {&s2, &d.eta});
    return contract("qyzx,yxe->qez", {&s3, &d.H.mu});
}
Tensor rhs7(const CrossedDatum& d, Inputs in) {
    Tensor r1 = contract("u,w,uwqyz->qyz", {in[1], in[2], &d.eta});
    Tensor r2 = contract("g,qyz,gqpf->pfyz", {in[0], &r1, &d.J});
    return contract("pfyz,fye->pez", {&r2, &d.H.mu});
}

// --- id 8 (lrc10): eta after a double T versus T after eta

Tensor lhs8(const CrossedDatum& d, Inputs in) {
    Tensor s1 = contract("w,g,wgpf->pf", {in[1], in[2], &d.T});
    Tensor s2 = contract("pf,u,ufvx->vpx", {&s1, in[0], &d.T});
    Tensor s3 = contract("vpx,vpqyz->qyzx", {&s2, &d.eta});
    return contract("qyzx,xze->qye", {&s3, &d.H.mu});
}
Tensor rhs8(const CrossedDatum& d, Inputs in) {
    Tensor r1 = contract("u,w,uwqyz->qyz", {in[0], in[1], &d.eta});
    Tensor r2 = contract("qyz,g,qgpf->pyzf", {&r1, in[2], &d.T});
    return contract("pyzf,zfe->pye", {&r2, &d.H.mu});
}

// --- id 9 (lrc11): the two ways of eta-composing three elements of U

Tensor lhs9(const CrossedDatum& d, Inputs in) {
    Tensor a1 = contract("u,v,uvpgh->pgh", {in[0], in[1], &d.eta});
    Tensor a2 = contract("pgh,w,gwqx->pqxh", {&a1, in[2], &d.J});
    Tensor a3 = contract("pqxh,pqryz->ryzxh", {&a2, &d.eta});
    Tensor a4 = contract("ryzxh,yxe->rezh", {&a3, &d.H.mu});
    return contract("rezh,hzf->ref", {&a4, &d.H.mu});
}
Tensor rhs9(const CrossedDatum& d, Inputs in) {
    Tensor b1 = contract("v,w,vwpgh->pgh", {in[1], in[2], &d.eta});
    Tensor b2 = contract("pgh,u,uhvx->pgvx", {&b1, in[0], &d.T});
    Tensor b3 = contract("pgvx,vpryz->rgxyz", {&b2, &d.eta});
    Tensor b4 = contract("rgxyz,yge->rexz", {&b3, &d.H.mu});
    return contract("rexz,xzf->ref", {&b4, &d.H.mu});
}

// --- id 10 (lrc12): gamma against J and T in either order

Tensor lhs10(const CrossedDatum& d, Inputs in) {
    Tensor a1 = contract("g,w,gwvx->vx", {in[1], in[2], &d.J});
    Tensor a2 = contract("vx,u,uvpqy->pqyx", {&a1, in[0], &d.gamma});
    Tensor a3 = contract("pqyx,pxrz->qyrz", {&a2, &d.T});
    return contract("qyrz,yze->rqe", {&a3, &d.H.mu});
}
Tensor rhs10(const CrossedDatum& d, Inputs in) {
    Tensor b1 = contract("u,g,ugvx->vx", {in[0], in[1], &d.T});
    Tensor b2 = contract("vx,w,vwpqy->pqyx", {&b1, in[2], &d.gamma});
    Tensor b3 = contract("pqyx,xqrz->pyrz", {&b2, &d.J});
    return contract("pyrz,zye->pre", {&b3, &d.H.mu});
}

// --- id 11 (lrc13): gamma over an eta output versus eta over nested gammas

Tensor lhs11(const CrossedDatum& d, Inputs in) {
    Tensor a1 = contract("v,w,vwpgh->pgh", {in[1], in[2], &d.eta});
    Tensor a2 = contract("pgh,u,upqry->qrygh", {&a1, in[0], &d.gamma});
    Tensor a3 = contract("qrygh,qgsz->ryshz", {&a2, &d.T});
    return contract("ryshz,yze->sreh", {&a3, &d.H.mu});
}
Tensor rhs11(const CrossedDatum& d, Inputs in) {
    Tensor b1 = contract("u,v,uvpqg->pqg", {in[0], in[1], &d.gamma});
    Tensor b2 = contract("pqg,w,pwrsh->qgrsh", {&b1, in[2], &d.gamma});
    Tensor b3 = contract("qgrsh,gstx->qrhtx", {&b2, &d.J});
    Tensor b4 = contract("qrhtx,qtmyz->rmyzhx", {&b3, &d.eta});
    Tensor b5 = contract("rmyzhx,yxe->rmzeh", {&b4, &d.H.mu});
    return contract("rmzeh,ehf->rmfz", {&b5, &d.H.mu});
}

// --- id 12 (lrc14): gamma over an eta input versus eta over nested gammas

Tensor lhs12(const CrossedDatum& d, Inputs in) {
    Tensor a1 = contract("u,v,uvpgh->pgh", {in[0], in[1], &d.eta});
    Tensor a2 = contract("pgh,w,pwqry->qrygh", {&a1, in[2], &d.gamma});
    Tensor a3 = contract("qrygh,hrsx->qygsx", {&a2, &d.J});
    return contract("qygsx,xye->qsge", {&a3, &d.H.mu});
}
Tensor rhs12(const CrossedDatum& d, Inputs in) {
    Tensor b1 = contract("v,w,vwpqg->pqg", {in[1], in[2], &d.gamma});
    Tensor b2 = contract("pqg,u,uqrsh->prsgh", {&b1, in[0], &d.gamma});
    Tensor b3 = contract("prsgh,rgtx->pshtx", {&b2, &d.T});
    Tensor b4 = contract("pshtx,tpmyz->smyzhx", {&b3, &d.eta});
    Tensor b5 = contract("smyzhx,hxe->smyze", {&b4, &d.H.mu});
    return contract("smyze,ezf->msyf", {&b5, &d.H.mu});
}

// --- id 13 (lrc15): the five-input compatibility of gamma with J and T

Tensor lhs13(const CrossedDatum& d, Inputs in) {
    Tensor a1 = contract("v,w,vwpqg->pqg", {in[1], in[2], &d.gamma});
    Tensor a2 = contract("pqg,x,pxry->qgry", {&a1, in[3], &d.T});
    Tensor a3 = contract("qgry,u,urabc->abcqgy", {&a2, in[0], &d.gamma});
    Tensor a4 = contract("abcqgy,z,zbds->adscqgy", {&a3, in[4], &d.J});
    Tensor a5 = contract("adscqgy,sce->adeqgy", {&a4, &d.H.mu});
    return contract("adeqgy,gyf->adeqf", {&a5, &d.H.mu});
}
Tensor rhs13(const CrossedDatum& d, Inputs in) {
    Tensor b1 = contract("u,v,uvabc->abc", {in[0], in[1], &d.gamma});
    Tensor b2 = contract("abc,z,zbds->acds", {&b1, in[4], &d.J});
    Tensor b3 = contract("acds,w,dwpqg->acspqg", {&b2, in[2], &d.gamma});
    Tensor b4 = contract("acspqg,x,pxry->acsqgry", {&b3, in[3], &d.T});
    Tensor b5 = contract("acsqgry,sce->aeqgry", {&b4, &d.H.mu});
    return contract("aeqgry,gyf->areqf", {&b5, &d.H.mu});
}

struct AxiomPart {
    std::vector<Space> inputs;
    const char* input_names;
    EvalFn lhs;
    EvalFn rhs;
};

struct AxiomDef {
    const char* label;
    std::vector<AxiomPart> parts;
};

const std::array<AxiomDef, axiom_count>& axiom_defs() {
    static const std::array<AxiomDef, axiom_count> defs = {{
        {"lrc1", {{{Space::H}, "h", lhs1a, rhs1a}, {{Space::U}, "u", lhs1b, rhs1b}}},
        {"lrc2", {{{Space::U}, "u", lhs2a, rhs2a}, {{Space::H}, "h", lhs2b, rhs2b}}},
        {"lrc3", {{{Space::U}, "u", lhs3a, rhs3a}, {{Space::U}, "u", lhs3b, rhs3b}}},
        {"lrc4", {{{Space::U}, "u", lhs4a, rhs4}, {{Space::U}, "u", lhs4b, rhs4}}},
        {"lrc5", {{{Space::H, Space::H, Space::U}, "h,h',u", lhs5, rhs5}}},
        {"lrc6", {{{Space::U, Space::H, Space::H}, "u,h,h'", lhs6, rhs6}}},
        {"lrc9", {{{Space::H, Space::U, Space::U}, "h,u,u'", lhs7, rhs7}}},
        {"lrc10", {{{Space::U, Space::U, Space::H}, "u,u',h", lhs8, rhs8}}},
        {"lrc11", {{{Space::U, Space::U, Space::U}, "u,u',u''", lhs9, rhs9}}},
        {"lrc12", {{{Space::U, Space::H, Space::U}, "u,h,u'", lhs10, rhs10}}},
        {"lrc13", {{{Space::U, Space::U, Space::U}, "u,u',u''", lhs11, rhs11}}},
        {"lrc14", {{{Space::U, Space::U, Space::U}, "u,u',u''", lhs12, rhs12}}},
        {"lrc15", {{{Space::U, Space::U, Space::U, Space::H, Space::H}, "u,u',u'',h,h'", lhs13, rhs13}}},
    }};
    return defs;
}

const AxiomDef& def_of(int axiom_id) {
    if (axiom_id < 1 || axiom_id > axiom_count)
        throw Error(Error::Code::domain, "axiom id " + std::to_string(axiom_id) + " out of range 1.." +
                                             std::to_string(axiom_count));
    return axiom_defs()[(std::size_t)(axiom_id - 1)];
}

}  // namespace

std::string_view axiom_label(int axiom_id) { return def_of(axiom_id).label; }

std::size_t axiom_part_count(int axiom_id) { return def_of(axiom_id).parts.size(); }

std::string axiom_input_names(int axiom_id, std::size_t part) {
    const AxiomDef& def = def_of(axiom_id);
    if (part >= def.parts.size()) throw Error(Error::Code::domain, "axiom part out of range");
    return def.parts[part].input_names;
}

std::string axiom_input_spaces(int axiom_id, std::size_t part) {
    const AxiomDef& def = def_of(axiom_id);
    if (part >= def.parts.size()) throw Error(Error::Code::domain, "axiom part out of range");
    std::string s;
    for (Space sp : def.parts[part].inputs) s += sp == Space::U ? 'U' : 'H';
    return s;
}

AxiomResult check_axiom(const CrossedDatum& d, int axiom_id, std::size_t max_witnesses) {
    const AxiomDef& def = def_of(axiom_id);
    if (max_witnesses == 0) max_witnesses = 1;

    std::vector<Tensor> basis_u, basis_h;
    basis_u.reserve(d.dim_u());
    basis_h.reserve(d.dim_h());
    for (std::size_t i = 0; i < d.dim_u(); ++i) basis_u.push_back(Tensor::basis(d.H.field, d.dim_u(), i));
    for (std::size_t i = 0; i < d.dim_h(); ++i) basis_h.push_back(Tensor::basis(d.H.field, d.dim_h(), i));

    AxiomResult result;
    result.axiom_id = axiom_id;
    result.label = def.label;

    for (std::size_t part = 0; part < def.parts.size(); ++part) {
        const AxiomPart& ap = def.parts[part];
        const std::size_t arity = ap.inputs.size();
        std::vector<std::size_t> dims(arity);
        for (std::size_t i = 0; i < arity; ++i)
            dims[i] = ap.inputs[i] == Space::U ? d.dim_u() : d.dim_h();

        std::vector<std::size_t> tuple(arity, 0);
        std::vector<const Tensor*> args(arity);
        while (true) {
            for (std::size_t i = 0; i < arity; ++i)
                args[i] = ap.inputs[i] == Space::U ? &basis_u[tuple[i]] : &basis_h[tuple[i]];
            Tensor lhs = ap.lhs(d, args);
            Tensor rhs = ap.rhs(d, args);
            TensorComparison cmp = tensors_equal(lhs, rhs);
            if (!cmp.equal) {
                AxiomWitness w;
                w.part = part;
                w.inputs = tuple;
                w.lhs = std::move(lhs);
                w.rhs = std::move(rhs);
                w.first_diff = cmp.first_diff.value_or(std::vector<std::size_t>{});
                result.witnesses.push_back(std::move(w));
                if (result.witnesses.size() >= max_witnesses) {
                    result.holds = false;
                    return result;
                }
            }
            // odometer, lexicographic
            std::size_t i = arity;
            while (i > 0) {
                --i;
                if (++tuple[i] < dims[i]) break;
                tuple[i] = 0;
                if (i == 0) goto part_done;
            }
            if (arity == 0) break;
        }
    part_done:;
    }

    result.holds = result.witnesses.empty();
    return result;
}

AxiomReport check_all(const CrossedDatum& d, std::size_t max_witnesses) {
    AxiomReport report;
    report.all_hold = true;
    for (int id = 1; id <= axiom_count; ++id) {
        report.results.push_back(check_axiom(d, id, max_witnesses));
        if (!report.results.back().holds) report.all_hold = false;
    }
    return report;
}

bool axioms_hold(const CrossedDatum& d) {
    for (int id = 1; id <= axiom_count; ++id)
        if (!check_axiom(d, id, 1).holds) return false;
    return true;
}

Tensor crossed_multiply(const CrossedDatum& d, const Tensor& a, const Tensor& b) {
    const std::size_t n = d.dim_u(), m = d.dim_h();
    if (a.shape() != std::vector<std::size_t>{n * m} || b.shape() != std::vector<std::size_t>{n * m})
        throw Error(Error::Code::shape, "crossed_multiply expects coordinate vectors on U (x) H");
    Tensor x = reshape(a, {n, m});
    Tensor y = reshape(b, {n, m});
    // gamma on the U legs, T on (gamma_1, h'), J on (h, gamma_2), eta on the
    // decorated pair, then the H factors multiplied in the written order
    Tensor p1 = contract("ug,vf,uvpqc->pqcgf", {&x, &y, &d.gamma});
    Tensor p2 = contract("pqcgf,pfrx->qcgrx", {&p1, &d.T});
    Tensor p3 = contract("qcgrx,gqsy->csrxy", {&p2, &d.J});
    Tensor p4 = contract("csrxy,rsmab->mabcxy", {&p3, &d.eta});
    Tensor q1 = contract("mabcxy,ayd->mdbcx", {&p4, &d.H.mu});  // eta_2 * h_J
    Tensor q2 = contract("mdbcx,dce->mebx", {&q1, &d.H.mu});    //       * gamma_3
    Tensor q3 = contract("mebx,exf->mfb", {&q2, &d.H.mu});      //       * h'_T
    Tensor q4 = contract("mfb,fbz->mz", {&q3, &d.H.mu});        //       * eta_3
    return reshape(q4, {n * m});
}

Algebra build_crossed_product(const CrossedDatum& d, bool require_axioms) {
    if (require_axioms) {
        AxiomReport report = check_all(d, 1);
        if (!report.all_hold) {
            std::string msg = "axioms fail:";
            for (const AxiomResult& r : report.results)
                if (!r.holds) msg += " " + r.label;
            throw Error(Error::Code::axiom_failure, msg);
        }
    }
    const std::size_t n = d.dim_u(), m = d.dim_h(), nm = n * m;
    Tensor mu(d.H.field, {nm, nm, nm});
    for (std::size_t i = 0; i < nm; ++i) {
        Tensor ei = Tensor::basis(d.H.field, nm, i);
        for (std::size_t j = 0; j < nm; ++j) {
            Tensor ej = Tensor::basis(d.H.field, nm, j);
            Tensor row = crossed_multiply(d, ei, ej);
            for (std::size_t k = 0; k < nm; ++k)
                if (!row.flat(k).is_zero()) mu.set({i, j, k}, row.flat(k));
        }
    }
    Tensor unit = reshape(tensor_product(d.U.unit_vec, d.H.unit), {nm});
    std::vector<std::string> labels(nm);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t h = 0; h < m; ++h) labels[u * m + h] = d.U.label(u) + "⊗" + d.H.label(h);
    Algebra product = make_algebra(std::move(mu), std::move(unit), std::move(labels));
    if (require_axioms) {
        ValidationReport v = validate_algebra(product);
        if (!v.ok)
            throw Error(Error::Code::not_associative,
                        "crossed product failed validation although the axioms hold");
    }
    return product;
}

}  // namespace lrx
