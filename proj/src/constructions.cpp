#include "lrx/constructions.hpp"

#include <type_traits>

namespace lrx {

namespace {

void expect_shape(const Tensor& t, std::vector<std::size_t> shape, const FieldSpec& field,
                  const char* name) {
    if (t.field() != field)
        throw Error(Error::Code::field_mismatch, std::string(name) + " is over the wrong field");
    if (t.shape() != shape)
        throw Error(Error::Code::shape, std::string(name) + " has the wrong shape");
}

// gamma of the plain specializations: u (x) u' |-> u (x) u' (x) 1_H
Tensor trivial_gamma(std::size_t n, const Algebra& H) {
    Tensor g(H.field, {n, n, n, n, H.dim});
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t c = 0; c < H.dim; ++c)
                if (!H.unit.flat(c).is_zero()) g.set({u, v, u, v, c}, H.unit.flat(c));
    return g;
}

// eta of the algebra-based specializations: u (x) u' |-> uu' (x) 1_H (x) 1_H
Tensor multiplicative_eta(const Tensor& mu_a, const Algebra& H) {
    const std::size_t n = mu_a.shape()[0];
    Tensor e(H.field, {n, n, n, H.dim, H.dim});
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t p = 0; p < n; ++p) {
                const Scalar& c = mu_a.at({u, v, p});
                if (c.is_zero()) continue;
                for (std::size_t a = 0; a < H.dim; ++a)
                    for (std::size_t b = 0; b < H.dim; ++b) {
                        Scalar s = c * H.unit.flat(a) * H.unit.flat(b);
                        if (!s.is_zero()) e.set({u, v, p, a, b}, std::move(s));
                    }
            }
    return e;
}

Tensor trivial_phi(const Algebra& H) {
    return reshape(tensor_product(tensor_product(H.unit, H.unit), H.unit), {H.dim, H.dim, H.dim});
}

}  // namespace

Tensor make_flip(std::size_t dim_h, std::size_t dim_u, const FieldSpec& field) {
    Tensor j(field, {dim_h, dim_u, dim_u, dim_h});
    for (std::size_t h = 0; h < dim_h; ++h)
        for (std::size_t u = 0; u < dim_u; ++u) j.set({h, u, u, h}, Scalar::one(field));
    return j;
}

Tensor make_identity_map(std::size_t dim_u, std::size_t dim_h, const FieldSpec& field) {
    Tensor t(field, {dim_u, dim_h, dim_u, dim_h});
    for (std::size_t u = 0; u < dim_u; ++u)
        for (std::size_t h = 0; h < dim_h; ++h) t.set({u, h, u, h}, Scalar::one(field));
    return t;
}

CrossedDatum from_ordinary_tensor(const Algebra& A, const Algebra& H) {
    if (A.field != H.field)
        throw Error(Error::Code::field_mismatch, "factors are over different fields");
    PointedSpace U = make_pointed_space(A.unit, A.basis_labels);
    return make_crossed_datum(H, std::move(U), make_flip(H.dim, A.dim, A.field),
                              make_identity_map(A.dim, H.dim, A.field), trivial_gamma(A.dim, H),
                              multiplicative_eta(A.mu, H));
}

CrossedDatum from_lr_twisted(const LRTwistData& d) {
    const std::size_t n = d.A.dim, m = d.B.dim;
    expect_shape(d.R, {m, n, n, m}, d.B.field, "R");
    expect_shape(d.Q, {n, m, n, m}, d.B.field, "Q");
    if (d.A.field != d.B.field)
        throw Error(Error::Code::field_mismatch, "factors are over different fields");
    PointedSpace U = make_pointed_space(d.A.unit, d.A.basis_labels);
    return make_crossed_datum(d.B, std::move(U), d.R, d.Q, trivial_gamma(n, d.B),
                              multiplicative_eta(d.A.mu, d.B));
}

CrossedDatum from_mirror_brzezinski(const MirrorBrzezinskiData& d) {
    const std::size_t n = d.W.dim, m = d.B.dim;
    expect_shape(d.P, {m, n, n, m}, d.B.field, "P");
    expect_shape(d.nu, {n, n, n, m}, d.B.field, "nu");
    if (d.W.unit_vec.field() != d.B.field)
        throw Error(Error::Code::field_mismatch, "W is over the wrong field");
    // eta_1 (x) eta_2 = nu, eta_3 = 1_B
    Tensor eta(d.B.field, {n, n, n, m, m});
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t a = 0; a < m; ++a) {
                    const Scalar& c = d.nu.at({u, v, p, a});
                    if (c.is_zero()) continue;
                    for (std::size_t b = 0; b < m; ++b) {
                        Scalar s = c * d.B.unit.flat(b);
                        if (!s.is_zero()) eta.set({u, v, p, a, b}, std::move(s));
                    }
                }
    return make_crossed_datum(d.B, d.W, d.P, make_identity_map(n, m, d.B.field),
                              trivial_gamma(n, d.B), std::move(eta));
}

CrossedDatum from_iterated(const IteratedData& d) {
    const std::size_t wn = d.W.dim, vn = d.V.dim, m = d.H.dim, n = wn * vn;
    expect_shape(d.P, {m, wn, wn, m}, d.H.field, "P");
    expect_shape(d.nu, {wn, wn, wn, m}, d.H.field, "nu");
    expect_shape(d.R, {vn, m, vn, m}, d.H.field, "R");
    expect_shape(d.sigma, {vn, vn, m, vn}, d.H.field, "sigma");
    expect_shape(d.Q, {vn, wn, wn, m, vn}, d.H.field, "Q");

    // U = W (x) V flattened W-major, pointed at 1_W (x) 1_V
    Tensor unit_u = reshape(tensor_product(d.W.unit_vec, d.V.unit_vec), {n});
    std::vector<std::string> labels(n);
    for (std::size_t w = 0; w < wn; ++w)
        for (std::size_t v = 0; v < vn; ++v) labels[w * vn + v] = d.W.label(w) + "⊗" + d.V.label(v);
    PointedSpace U = make_pointed_space(std::move(unit_u), std::move(labels));

    auto uu = [vn](std::size_t w, std::size_t v) { return w * vn + v; };

    // J(h (x) (w (x) v)) = (w_P (x) v) (x) h_P
    Tensor J(d.H.field, {m, n, n, m});
    for (std::size_t h = 0; h < m; ++h)
        for (std::size_t w = 0; w < wn; ++w)
            for (std::size_t w2 = 0; w2 < wn; ++w2)
                for (std::size_t h2 = 0; h2 < m; ++h2) {
                    const Scalar& c = d.P.at({h, w, w2, h2});
                    if (c.is_zero()) continue;
                    for (std::size_t v = 0; v < vn; ++v) J.set({h, uu(w, v), uu(w2, v), h2}, c);
                }

    // T((w (x) v) (x) h) = (w (x) v_R) (x) h_R
    Tensor T(d.H.field, {n, m, n, m});
    for (std::size_t v = 0; v < vn; ++v)
        for (std::size_t h = 0; h < m; ++h)
            for (std::size_t v2 = 0; v2 < vn; ++v2)
                for (std::size_t h2 = 0; h2 < m; ++h2) {
                    const Scalar& c = d.R.at({v, h, v2, h2});
                    if (c.is_zero()) continue;
                    for (std::size_t w = 0; w < wn; ++w) T.set({uu(w, v), h, uu(w, v2), h2}, c);
                }

    // gamma((w (x) v) (x) (w' (x) v')) = (w (x) Q_V) (x) (Q_W (x) v') (x) Q_H
    Tensor gamma(d.H.field, {n, n, n, n, m});
    for (std::size_t v = 0; v < vn; ++v)
        for (std::size_t w2 = 0; w2 < wn; ++w2)
            for (std::size_t qw = 0; qw < wn; ++qw)
                for (std::size_t qh = 0; qh < m; ++qh)
                    for (std::size_t qv = 0; qv < vn; ++qv) {
                        const Scalar& c = d.Q.at({v, w2, qw, qh, qv});
                        if (c.is_zero()) continue;
                        for (std::size_t w = 0; w < wn; ++w)
                            for (std::size_t v2 = 0; v2 < vn; ++v2)
                                gamma.set({uu(w, v), uu(w2, v2), uu(w, qv), uu(qw, v2), qh}, c);
                    }

    // eta((w (x) v) (x) (w' (x) v')) = (nu_1 (x) sigma_2) (x) nu_2 (x) sigma_1
    Tensor eta(d.H.field, {n, n, n, m, m});
    for (std::size_t w = 0; w < wn; ++w)
        for (std::size_t w2 = 0; w2 < wn; ++w2)
            for (std::size_t w3 = 0; w3 < wn; ++w3)
                for (std::size_t h1 = 0; h1 < m; ++h1) {
                    const Scalar& cn = d.nu.at({w, w2, w3, h1});
                    if (cn.is_zero()) continue;
                    for (std::size_t v = 0; v < vn; ++v)
                        for (std::size_t v2 = 0; v2 < vn; ++v2)
                            for (std::size_t h2 = 0; h2 < m; ++h2)
                                for (std::size_t v3 = 0; v3 < vn; ++v3) {
                                    const Scalar& cs = d.sigma.at({v, v2, h2, v3});
                                    if (cs.is_zero()) continue;
                                    eta.set({uu(w, v), uu(w2, v2), uu(w3, v3), h1, h2}, cn * cs);
                                }
                }

    return make_crossed_datum(d.H, std::move(U), std::move(J), std::move(T), std::move(gamma),
                              std::move(eta));
}

void validate_quasi_bialgebra(const QuasiBialgebraData& qb) {
    const std::size_t m = qb.H.dim;
    expect_shape(qb.Delta, {m, m, m}, qb.H.field, "Delta");
    expect_shape(qb.counit, {m}, qb.H.field, "counit");
    expect_shape(qb.Phi, {m, m, m}, qb.H.field, "Phi");
    expect_shape(qb.PhiInv, {m, m, m}, qb.H.field, "PhiInv");

    const Tensor& mu = qb.H.mu;
    // Delta is an algebra map
    Tensor lhs = contract("xyc,cde->xyde", {&mu, &qb.Delta});
    Tensor rhs = contract("xab,ypq,apd,bqe->xyde", {&qb.Delta, &qb.Delta, &mu, &mu});
    if (!tensors_equal(lhs, rhs).equal)
        throw Error(Error::Code::domain, "Delta is not multiplicative");
    Tensor d1 = contract("c,cde->de", {&qb.H.unit, &qb.Delta});
    if (!tensors_equal(d1, tensor_product(qb.H.unit, qb.H.unit)).equal)
        throw Error(Error::Code::domain, "Delta does not send the unit to 1 (x) 1");

    // counit laws
    Tensor id_m = make_flip(1, m, qb.H.field);  // (1, m, m, 1)
    Tensor idmat = reshape(id_m, {m, m});
    if (!tensors_equal(contract("hab,a->hb", {&qb.Delta, &qb.counit}), idmat).equal)
        throw Error(Error::Code::domain, "left counit law fails");
    if (!tensors_equal(contract("hab,b->ha", {&qb.Delta, &qb.counit}), idmat).equal)
        throw Error(Error::Code::domain, "right counit law fails");

    // Phi * PhiInv = 1 (x) 1 (x) 1 componentwise in H (x) H (x) H
    Tensor t1 = contract("abc,apd->bcpd", {&qb.Phi, &mu});
    Tensor t2 = contract("bcpd,pqr->bcdqr", {&t1, &qb.PhiInv});
    Tensor t3 = contract("bcdqr,bqe->cdre", {&t2, &mu});
    Tensor prod = contract("cdre,crf->def", {&t3, &mu});
    if (!tensors_equal(prod, trivial_phi(qb.H)).equal)
        throw Error(Error::Code::domain, "Phi * PhiInv != 1 (x) 1 (x) 1");
}

void validate_bimodule_algebra(const QuasiBialgebraData& qb, const BimoduleAlgebraData& bm) {
    const std::size_t m = qb.H.dim, n = bm.A.dim;
    expect_shape(bm.left, {m, n, n}, qb.H.field, "left action");
    expect_shape(bm.right, {n, m, n}, qb.H.field, "right action");
    if (bm.A.field != qb.H.field)
        throw Error(Error::Code::field_mismatch, "A is over the wrong field");

    Tensor idmat = reshape(make_flip(1, n, qb.H.field), {n, n});
    if (!tensors_equal(contract("h,hup->up", {&qb.H.unit, &bm.left}), idmat).equal)
        throw Error(Error::Code::domain, "1_H does not act as identity on the left");
    if (!tensors_equal(contract("h,uhp->up", {&qb.H.unit, &bm.right}), idmat).equal)
        throw Error(Error::Code::domain, "1_H does not act as identity on the right");

    Tensor lr = contract("hup,pgq->hugq", {&bm.left, &bm.right});
    Tensor rl = contract("ugp,hpq->hugq", {&bm.right, &bm.left});
    if (!tensors_equal(lr, rl).equal)
        throw Error(Error::Code::domain, "left and right actions do not commute");

    if (tensors_equal(qb.Phi, trivial_phi(qb.H)).equal) {
        // at trivial Phi the actions are plain module structures
        Tensor ll = contract("gup,hpq->hguq", {&bm.left, &bm.left});
        Tensor lm = contract("hgc,cuq->hguq", {&qb.H.mu, &bm.left});
        if (!tensors_equal(ll, lm).equal)
            throw Error(Error::Code::domain, "left action is not associative");
        Tensor rr = contract("uhp,pgq->uhgq", {&bm.right, &bm.right});
        Tensor rm = contract("hgc,ucq->uhgq", {&qb.H.mu, &bm.right});
        if (!tensors_equal(rr, rm).equal)
            throw Error(Error::Code::domain, "right action is not associative");
    }
}

namespace {

const Tensor& phi_slot(const QuasiBialgebraData& qb, PhiConvention c) {
    return c == PhiConvention::inv ? qb.PhiInv : qb.Phi;
}

}  // namespace

CrossedDatum from_lr_smash(const LRSmashData& d) {
    validate_quasi_bialgebra(d.qb);
    validate_bimodule_algebra(d.qb, d.bm);
    const Algebra& H = d.qb.H;
    const Algebra& A = d.bm.A;
    const Tensor& X3 = phi_slot(d.qb, d.conv.x);
    const Tensor& Y3 = phi_slot(d.qb, d.conv.y);
    const Tensor& Z3 = phi_slot(d.qb, d.conv.z);

    // J(h (x) phi) = h_1 . phi (x) h_2
    Tensor J = contract("hab,aup->hupb", {&d.qb.Delta, &d.bm.left});
    // T(phi (x) h) = phi . h_2 (x) h_1
    Tensor T = contract("hab,ubp->uhpa", {&d.qb.Delta, &d.bm.right});
    // gamma(phi (x) phi') = phi . z3 (x) z1 . phi' (x) z2
    Tensor gamma = contract("acd,udp,avq->uvpqc", {&Z3, &d.bm.right, &d.bm.left});
    // eta(phi (x) phi') = (x1 . phi . y2)(x2 . phi' . y3) (x) x3 (x) y1
    Tensor s1 = contract("abc,aup->bcup", {&X3, &d.bm.left});
    Tensor s2 = contract("bcup,pdq->bcudq", {&s1, &d.bm.right});
    Tensor s3 = contract("bcudq,bvr->cudqvr", {&s2, &d.bm.left});
    Tensor s4 = contract("cudqvr,wdf,rfs->cuqvws", {&s3, &Y3, &d.bm.right});
    Tensor eta = contract("cuqvws,qsp->uvpcw", {&s4, &A.mu});

    PointedSpace U = make_pointed_space(A.unit, A.basis_labels);
    return make_crossed_datum(H, std::move(U), std::move(J), std::move(T), std::move(gamma),
                              std::move(eta));
}

// --- closed-form products (the independent oracles) ----------------------

Tensor direct_multiply(const LRTwistData& d, const Tensor& a, const Tensor& b) {
    const std::size_t n = d.A.dim, m = d.B.dim;
    Tensor x = reshape(a, {n, m});
    Tensor y = reshape(b, {n, m});
    // (a (x) b)(a' (x) b') = a_Q a'_R (x) b_R b'_Q
    Tensor c1 = contract("ug,vf,ufpx->pxvg", {&x, &y, &d.Q});
    Tensor c2 = contract("pxvg,gvqy->pxqy", {&c1, &d.R});
    Tensor c3 = contract("pxqy,pqk->kxy", {&c2, &d.A.mu});
    Tensor c4 = contract("kxy,yxz->kz", {&c3, &d.B.mu});
    return reshape(c4, {n * m});
}

Tensor direct_multiply(const MirrorBrzezinskiData& d, const Tensor& a, const Tensor& b) {
    const std::size_t n = d.W.dim, m = d.B.dim;
    Tensor x = reshape(a, {n, m});
    Tensor y = reshape(b, {n, m});
    // (w (x) b)(w' (x) b') = nu_1(w, w'_P) (x) nu_2(w, w'_P) b_P b'
    Tensor c1 = contract("ug,vf,gvqy->uqyf", {&x, &y, &d.P});
    Tensor c2 = contract("uqyf,uqkc->kcyf", {&c1, &d.nu});
    Tensor c3 = contract("kcyf,cyd->kdf", {&c2, &d.B.mu});
    Tensor c4 = contract("kdf,dfz->kz", {&c3, &d.B.mu});
    return reshape(c4, {n * m});
}

Tensor direct_multiply(const IteratedData& d, const Tensor& a, const Tensor& b) {
    const std::size_t wn = d.W.dim, vn = d.V.dim, m = d.H.dim;
    Tensor x = reshape(a, {wn, vn, m});
    Tensor y = reshape(b, {wn, vn, m});
    const Tensor& M = d.H.mu;
    // nu_1(w, Q_W_P) (x) sigma_2(Q_V_R, v') (x) nu_2(w, Q_W_P) h_P Q_H h'_R sigma_1(Q_V_R, v')
    Tensor e1 = contract("wvg,pqf,vpabc->wgqfabc", {&x, &y, &d.Q});
    Tensor e2 = contract("wgqfabc,gaxh->wqfbcxh", {&e1, &d.P});
    Tensor e3 = contract("wqfbcxh,cfsy->wqbxhsy", {&e2, &d.R});
    Tensor e4 = contract("wqbxhsy,wxkd->qbhsykd", {&e3, &d.nu});
    Tensor e5 = contract("qbhsykd,sqez->bhykdez", {&e4, &d.sigma});
    Tensor e6 = contract("bhykdez,dht->bytkez", {&e5, &M});
    Tensor e7 = contract("bytkez,tbl->ylkez", {&e6, &M});
    Tensor e8 = contract("ylkez,lyo->koez", {&e7, &M});
    Tensor e9 = contract("koez,oef->kzf", {&e8, &M});
    return reshape(e9, {wn * vn * m});
}

Tensor direct_multiply(const LRSmashData& d, const Tensor& a, const Tensor& b) {
    const std::size_t n = d.bm.A.dim, m = d.qb.H.dim;
    Tensor x = reshape(a, {n, m});
    Tensor y = reshape(b, {n, m});
    const Tensor& M = d.qb.H.mu;
    const Tensor& muA = d.bm.A.mu;
    const Tensor& left = d.bm.left;
    const Tensor& right = d.bm.right;
    const Tensor& X3 = phi_slot(d.qb, d.conv.x);
    const Tensor& Y3 = phi_slot(d.qb, d.conv.y);
    const Tensor& Z3 = phi_slot(d.qb, d.conv.z);

    // (phi (x) h)(phi' (x) h') = (x1 . phi . z3 h'_2 y2)(x2 h_1 z1 . phi' . y3)
    //                                 (x) x3 h_2 z2 h'_1 y1
    // letters per step: a,b,c = x1,x2,x3 / d,e,f = y1,y2,y3 / i,j,l = z1,z2,z3
    Tensor rf = contract("ovt,tfy->ovfy", {&left, &right});     // o . phi' . f
    Tensor lf = contract("unt,atw->unaw", {&right, &left});     // a . phi . n
    Tensor a1 = contract("ug,gpq->upq", {&x, &d.qb.Delta});     // p = h_1, q = h_2
    Tensor a2 = contract("upq,abc,bpt->uqact", {&a1, &X3, &M});     // t = x2 h_1
    Tensor a3 = contract("uqact,cqo->uato", {&a2, &M});             // o = x3 h_2
    Tensor a4 = contract("uato,ijl,tis->uaosjl", {&a3, &Z3, &M});   // s = x2 h_1 z1
    Tensor a5 = contract("uaosjl,ojw->uaswl", {&a4, &M});           // w = x3 h_2 z2
    Tensor a6 = contract("uaswl,vk,svt->uawlkt", {&a5, &y, &left}); // t = (x2 h_1 z1) . phi'
    Tensor a7 = contract("uawlkt,krs->uawltrs", {&a6, &d.qb.Delta});  // r = h'_1, s = h'_2
    Tensor a8 = contract("uawltrs,wrx->uaxlts", {&a7, &M});         // x = x3 h_2 z2 h'_1
    Tensor a9 = contract("uaxlts,lsm->uaxtm", {&a8, &M});           // m = z3 h'_2
    Tensor a10 = contract("uaxtm,def,xdz->uatmzef", {&a9, &Y3, &M});  // z = full H output
    Tensor a11 = contract("uatmzef,men->uatznf", {&a10, &M});       // n = z3 h'_2 y2
    Tensor a12 = contract("uatznf,tfy->uazny", {&a11, &right});     // y = right A factor
    Tensor a13 = contract("uazny,unaw->zwy", {&a12, &lf});          // w = left A factor
    Tensor a14 = contract("zwy,wyq->qz", {&a13, &muA});
    return reshape(a14, {n * m});
}

CrossedDatum datum_of(const SpecializationData& s) {
    return std::visit(
        [](const auto& d) -> CrossedDatum {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, LRTwistData>) return from_lr_twisted(d);
            else if constexpr (std::is_same_v<T, MirrorBrzezinskiData>) return from_mirror_brzezinski(d);
            else if constexpr (std::is_same_v<T, IteratedData>) return from_iterated(d);
            else return from_lr_smash(d);
        },
        s);
}

Tensor direct_multiply(const SpecializationData& s, const Tensor& a, const Tensor& b) {
    return std::visit([&](const auto& d) { return direct_multiply(d, a, b); }, s);
}

// --- instance gallery -----------------------------------------------------

namespace {

// H^* as a bimodule algebra over H: convolution product, unit = counit,
// actions induced by right/left translation
BimoduleAlgebraData dual_bimodule(const QuasiBialgebraData& qb) {
    const std::size_t m = qb.H.dim;
    const FieldSpec& f = qb.H.field;
    Tensor mu(f, {m, m, m});
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                const Scalar& c = qb.Delta.at({k, i, j});
                if (!c.is_zero()) mu.set({i, j, k}, c);
            }
    std::vector<std::string> labels(m);
    for (std::size_t i = 0; i < m; ++i) labels[i] = qb.H.label(i) + "*";
    Algebra A = make_algebra(std::move(mu), qb.counit, std::move(labels));

    Tensor left(f, {m, m, m});   // (h . f_i) = sum_a mu_H[a][h][i] f_a
    Tensor right(f, {m, m, m});  // (f_i . h) = sum_a mu_H[h][a][i] f_a
    for (std::size_t h = 0; h < m; ++h)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t a = 0; a < m; ++a) {
                const Scalar& cl = qb.H.mu.at({a, h, i});
                if (!cl.is_zero()) left.set({h, i, a}, cl);
                const Scalar& cr = qb.H.mu.at({h, a, i});
                if (!cr.is_zero()) right.set({i, h, a}, cr);
            }
    return BimoduleAlgebraData{std::move(A), std::move(left), std::move(right)};
}

QuasiBialgebraData group_like_qb(Algebra H) {
    const std::size_t m = H.dim;
    const FieldSpec f = H.field;
    Tensor delta(f, {m, m, m});
    for (std::size_t k = 0; k < m; ++k) delta.set({k, k, k}, Scalar::one(f));
    Tensor counit(f, {m});
    for (std::size_t k = 0; k < m; ++k) counit.set_flat(k, Scalar::one(f));
    Tensor phi = reshape(tensor_product(tensor_product(H.unit, H.unit), H.unit), {m, m, m});
    return QuasiBialgebraData{std::move(H), std::move(delta), std::move(counit), phi, phi};
}

QuasiBialgebraData sweedler_qb(const FieldSpec& f) {
    Algebra H = builtin_algebra("sweedler4", f);
    Tensor delta(f, {4, 4, 4});
    const Scalar one = Scalar::one(f);
    delta.set({0, 0, 0}, one);  // 1   -> 1 (x) 1
    delta.set({1, 1, 1}, one);  // g   -> g (x) g
    delta.set({2, 2, 0}, one);  // x   -> x (x) 1 + g (x) x
    delta.set({2, 1, 2}, one);
    delta.set({3, 3, 1}, one);  // gx  -> gx (x) g + 1 (x) gx
    delta.set({3, 0, 3}, one);
    Tensor counit(f, {4});
    counit.set_flat(0, one);
    counit.set_flat(1, one);
    Tensor phi = reshape(tensor_product(tensor_product(H.unit, H.unit), H.unit), {4, 4, 4});
    return QuasiBialgebraData{std::move(H), std::move(delta), std::move(counit), phi, phi};
}

BuiltinInstance make_named(std::string name, SpecializationData source) {
    BuiltinInstance inst;
    inst.name = std::move(name);
    inst.datum = datum_of(source);
    inst.source = std::move(source);
    return inst;
}

}  // namespace

const std::vector<std::string>& builtin_instance_names() {
    static const std::vector<std::string> names = {
        "trivial_2x2", "super_twist", "complex_mirror", "iterated_sign",
        "c2_smash",    "sweedler_lr_smash", "broken_J",
    };
    return names;
}

BuiltinInstance builtin_instance(std::string_view name, const FieldSpec& field) {
    const Scalar one = Scalar::one(field);
    const Scalar minus_one = -one;

    if (name == "trivial_2x2") {
        BuiltinInstance inst;
        inst.name = "trivial_2x2";
        inst.datum = from_ordinary_tensor(builtin_algebra("cyclic:2", field),
                                          builtin_algebra("cyclic:2", field));
        return inst;
    }
    if (name == "super_twist") {
        // graded flip on dual numbers against k[C2], Q = id
        Algebra A = builtin_algebra("dual_numbers", field);
        Algebra B = builtin_algebra("cyclic:2", field);
        Tensor R(field, {2, 2, 2, 2});
        R.set({0, 0, 0, 0}, one);
        R.set({0, 1, 1, 0}, one);
        R.set({1, 0, 0, 1}, one);
        R.set({1, 1, 1, 1}, minus_one);  // g past x picks up the sign
        Tensor Q = make_identity_map(2, 2, field);
        return make_named("super_twist", LRTwistData{std::move(A), std::move(B), std::move(R), std::move(Q)});
    }
    if (name == "complex_mirror") {
        // W = span{1, i} over B = k, nu the multiplication of k[i]/(i^2 + 1)
        PointedSpace W = make_pointed_space(Tensor::basis(field, 2, 0), {"1", "i"});
        Algebra B = builtin_algebra("field", field);
        Tensor P(field, {1, 2, 2, 1});
        P.set({0, 0, 0, 0}, one);
        P.set({0, 1, 1, 0}, one);
        Tensor nu(field, {2, 2, 2, 1});
        nu.set({0, 0, 0, 0}, one);
        nu.set({0, 1, 1, 0}, one);
        nu.set({1, 0, 1, 0}, one);
        nu.set({1, 1, 0, 0}, minus_one);
        return make_named("complex_mirror",
                          MirrorBrzezinskiData{std::move(W), std::move(B), std::move(P), std::move(nu)});
    }
    if (name == "iterated_sign") {
        // two nilpotent lines around k[C2]; P and R are sign twists, Q the
        // plain rebracketing
        PointedSpace W = make_pointed_space(Tensor::basis(field, 2, 0), {"1", "x"});
        PointedSpace V = make_pointed_space(Tensor::basis(field, 2, 0), {"1", "y"});
        Algebra H = builtin_algebra("cyclic:2", field);
        Tensor P(field, {2, 2, 2, 2});
        P.set({0, 0, 0, 0}, one);
        P.set({0, 1, 1, 0}, one);
        P.set({1, 0, 0, 1}, one);
        P.set({1, 1, 1, 1}, minus_one);
        Tensor R(field, {2, 2, 2, 2});
        R.set({0, 0, 0, 0}, one);
        R.set({0, 1, 0, 1}, one);
        R.set({1, 0, 1, 0}, one);
        R.set({1, 1, 1, 1}, minus_one);
        Tensor nu(field, {2, 2, 2, 2});  // (w w') (x) 1_H, with x^2 = 0
        nu.set({0, 0, 0, 0}, one);
        nu.set({0, 1, 1, 0}, one);
        nu.set({1, 0, 1, 0}, one);
        Tensor sigma(field, {2, 2, 2, 2});  // 1_H (x) (v v'), with y^2 = 0
        sigma.set({0, 0, 0, 0}, one);
        sigma.set({0, 1, 0, 1}, one);
        sigma.set({1, 0, 0, 1}, one);
        Tensor Q(field, {2, 2, 2, 2, 2});  // v (x) w -> w (x) 1_H (x) v
        for (std::size_t v = 0; v < 2; ++v)
            for (std::size_t w = 0; w < 2; ++w) Q.set({v, w, w, 0, v}, one);
        return make_named("iterated_sign",
                          IteratedData{std::move(W), std::move(V), std::move(H), std::move(P),
                                       std::move(nu), std::move(R), std::move(sigma), std::move(Q)});
    }
    if (name == "c2_smash") {
        QuasiBialgebraData qb = group_like_qb(builtin_algebra("cyclic:2", field));
        BimoduleAlgebraData bm = dual_bimodule(qb);
        return make_named("c2_smash", LRSmashData{std::move(qb), std::move(bm), {}});
    }
    if (name == "sweedler_lr_smash") {
        QuasiBialgebraData qb = sweedler_qb(field);
        BimoduleAlgebraData bm = dual_bimodule(qb);
        return make_named("sweedler_lr_smash", LRSmashData{std::move(qb), std::move(bm), {}});
    }
    if (name == "broken_J") {
        // ordinary tensor datum with one J entry doubled; fails lrc5
        CrossedDatum d = from_ordinary_tensor(builtin_algebra("dual_numbers", field),
                                              builtin_algebra("cyclic:2", field));
        Tensor J = d.J;
        J.set({1, 1, 1, 1}, Scalar::of_int(2, field));
        BuiltinInstance inst;
        inst.name = "broken_J";
        inst.datum = make_crossed_datum(d.H, d.U, std::move(J), d.T, d.gamma, d.eta);
        return inst;
    }
    throw Error(Error::Code::domain, "unknown builtin instance '" + std::string(name) + "'");
}

}  // namespace lrx
