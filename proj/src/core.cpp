#include "gdua/core.hpp"

namespace gdua {

Element Element::generator(Gen g) {
    switch (g) {
    case Gen::d: return monomial({0, 0, 1}, Scalar(1));
    case Gen::u: return monomial({1, 0, 0}, Scalar(1));
    default: return monomial({0, 1, 0}, Scalar(1));
    }
}

Element Element::monomial(Monomial m, Scalar c) {
    Element e;
    e.add_term(m, c);
    return e;
}

Scalar Element::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void Element::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    if (!c.is_rational()) {
        if (field_d_ != 0 && field_d_ != c.extension_d())
            throw Error(Errc::incompatible_field, "element mixes quadratic extensions");
        field_d_ = c.extension_d();
    }
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Element operator+(const Element& x, const Element& y) {
    Element out = x;
    for (const auto& [m, c] : y.terms_) out.add_term(m, c);
    return out;
}

Element operator-(const Element& x, const Element& y) { return x + (-y); }

Element Element::operator-() const {
    Element out;
    for (const auto& [m, c] : terms_) out.add_term(m, -c);
    return out;
}

Element Element::scaled(const Scalar& c) const {
    Element out;
    if (c.is_zero()) return out;
    for (const auto& [m, q] : terms_) out.add_term(m, q * c);
    return out;
}

std::optional<long> Element::homogeneous_degree() const {
    std::optional<long> deg;
    for (const auto& [m, c] : terms_) {
        if (!deg)
            deg = m.zdegree();
        else if (*deg != m.zdegree())
            return std::nullopt;
    }
    return deg ? deg : std::optional<long>(0);
}

Presentation::Presentation(Poly f_, Scalar r_, Scalar s_, Scalar gamma_)
    : f(std::move(f_)), r(std::move(r_)), s(std::move(s_)), gamma(std::move(gamma_)) {
    noetherian = !(r * s).is_zero();
    r_not_root_of_unity = !r.is_zero() && !is_root_of_unity(r);
    for (const Scalar* x : {&r, &s, &gamma}) {
        if (!x->is_rational()) {
            if (field_d_ != 0 && field_d_ != x->extension_d())
                throw Error(Errc::incompatible_field, "presentation mixes quadratic extensions");
            field_d_ = x->extension_d();
        }
    }
    if (f.field_d() != 0) {
        if (field_d_ != 0 && field_d_ != f.field_d())
            throw Error(Errc::incompatible_field, "presentation mixes quadratic extensions");
        field_d_ = f.field_d();
    }
}

void Presentation::require_noetherian() const {
    if (!noetherian)
        throw Error(Errc::not_noetherian, "operation requires rs != 0");
}

namespace {

// 1 + r + ... + r^{a-1}
Scalar geometric_sum(const Scalar& r, long a) {
    Scalar acc(0), p(1);
    for (long i = 0; i < a; ++i) {
        acc += p;
        p = p * r;
    }
    return acc;
}

Element leftmul_gen(const Presentation& pres, Gen g, const Element& x);

// d * (u^a h^b d^c) in PBW form:
//   a = 0:  d h^b d^c = (r h - gamma)^b d^{c+1}
//   a > 0:  d u = s ud - f(h) peels one u off.
Element d_times_monomial(const Presentation& pres, const Monomial& m) {
    if (m.u == 0) {
        Poly shift({-pres.gamma, pres.r}); // r X - gamma
        Poly p = Poly::constant(Scalar(1));
        for (long i = 0; i < m.h; ++i) p = p * shift;
        Element out;
        for (int t = 0; t <= std::max(p.degree(), 0); ++t)
            out.add_term({0, t, m.d + 1}, p.coeff(t));
        return out;
    }
    Monomial rest{m.u - 1, m.h, m.d};
    Element tail = d_times_monomial(pres, rest);
    Element out = leftmul_gen(pres, Gen::u, tail).scaled(pres.s);
    Element sub = Element::monomial(rest, Scalar(1));
    for (int t : pres.f.support()) {
        Element term = sub;
        for (int i = 0; i < t; ++i) term = leftmul_gen(pres, Gen::h, term);
        out -= term.scaled(pres.f.coeff(t));
    }
    return out;
}

Element leftmul_gen(const Presentation& pres, Gen g, const Element& x) {
    Element out;
    switch (g) {
    case Gen::u:
        for (const auto& [m, c] : x.terms()) out.add_term({m.u + 1, m.h, m.d}, c);
        return out;
    case Gen::h:
        // h u^a = r^a u^a h - gamma (1 + r + ... + r^{a-1}) u^a
        for (const auto& [m, c] : x.terms()) {
            out.add_term({m.u, m.h + 1, m.d}, c * pres.r.pow(m.u));
            if (!pres.gamma.is_zero() && m.u > 0)
                out.add_term(m, -(c * pres.gamma * geometric_sum(pres.r, m.u)));
        }
        return out;
    case Gen::d:
        for (const auto& [m, c] : x.terms()) out += d_times_monomial(pres, m).scaled(c);
        return out;
    }
    return out;
}

Element leftmul_monomial(const Presentation& pres, const Monomial& m, const Element& x) {
    Element acc = x;
    for (long i = 0; i < m.d; ++i) acc = leftmul_gen(pres, Gen::d, acc);
    for (long i = 0; i < m.h; ++i) acc = leftmul_gen(pres, Gen::h, acc);
    for (long i = 0; i < m.u; ++i) acc = leftmul_gen(pres, Gen::u, acc);
    return acc;
}

} // namespace

Element mul(const Presentation& pres, const Element& x, const Element& y) {
    Element acc;
    for (const auto& [m, c] : x.terms()) acc += leftmul_monomial(pres, m, y).scaled(c);
    return acc;
}

Element pow(const Presentation& pres, const Element& x, long n) {
    Element acc = Element::one();
    for (long i = 0; i < n; ++i) acc = mul(pres, acc, x);
    return acc;
}

Element normal_form(const Presentation& pres,
                    const std::vector<std::pair<Gen, Scalar>>& word) {
    Element acc = Element::one();
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        acc = leftmul_gen(pres, it->first, acc).scaled(it->second);
    return acc;
}

Element poly_of_h(const Poly& p) {
    Element out;
    for (int t : p.support()) out.add_term({0, t, 0}, p.coeff(t));
    return out;
}

std::map<long, Element> graded_components(const Element& x) {
    std::map<long, Element> out;
    for (const auto& [m, c] : x.terms()) out[m.zdegree()].add_term(m, c);
    return out;
}

bool is_zero_divisor_probe(const Presentation& pres, const Element& x, const Element& y) {
    if (x.is_zero() || y.is_zero())
        throw Error(Errc::zero_input, "zero divisor probe requires nonzero elements");
    return mul(pres, x, y).is_zero();
}

// --- degree-zero coordinates -------------------------------------------------

DPoly DPoly::term(long he, long we, Scalar c) {
    DPoly p;
    p.add_term(he, we, c);
    return p;
}

Scalar DPoly::coeff(long he, long we) const {
    auto it = coeffs_.find({he, we});
    return it == coeffs_.end() ? Scalar(0) : it->second;
}

void DPoly::add_term(long he, long we, const Scalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(he, we);
    auto it = coeffs_.find(key);
    if (it == coeffs_.end()) {
        coeffs_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
}

DPoly operator+(const DPoly& p, const DPoly& q) {
    DPoly out = p;
    for (const auto& [k, c] : q.coeffs_) out.add_term(k.first, k.second, c);
    return out;
}

DPoly operator-(const DPoly& p, const DPoly& q) { return p + q.scaled(Scalar(-1)); }

DPoly operator*(const DPoly& p, const DPoly& q) {
    DPoly out;
    for (const auto& [k1, c1] : p.coeffs_)
        for (const auto& [k2, c2] : q.coeffs_)
            out.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return out;
}

DPoly DPoly::scaled(const Scalar& c) const {
    DPoly out;
    for (const auto& [k, q] : coeffs_) out.add_term(k.first, k.second, q * c);
    return out;
}

Element d_basis_element(const Presentation& pres, const Poly& g, long he, long we) {
    Element k = Element::monomial({1, 0, 1}, Scalar(1)) - poly_of_h(g);
    Element acc = Element::monomial({0, he, 0}, Scalar(1));
    for (long i = 0; i < we; ++i) acc = mul(pres, acc, k);
    return acc;
}

Element d_coords_to_element(const Presentation& pres, const Poly& g, const DPoly& p) {
    Element out;
    for (const auto& [k, c] : p.coeffs())
        out += d_basis_element(pres, g, k.first, k.second).scaled(c);
    return out;
}

namespace {

// Writes x = sum c_{b,m} h^b (ud - g(h))^m * tail with tail = u^grade or
// d^{-grade}, by eliminating from the top of the (min(u,d), h) order.  The
// pivot of h^b w^m * tail is the PBW monomial with u-d level m and h-power b,
// with nonzero coefficient whenever rs != 0.
DPoly express_on_tail(const Presentation& pres, const Poly& g, long grade, const Element& x) {
    pres.require_noetherian();
    for (const auto& [m, c] : x.terms())
        if (m.zdegree() != grade)
            throw Error(Errc::internal, "element is not homogeneous of the expected degree");
    Element tail = grade >= 0 ? Element::monomial({grade, 0, 0}, Scalar(1))
                              : Element::monomial({0, 0, -grade}, Scalar(1));
    DPoly out;
    Element work = x;
    while (!work.is_zero()) {
        long best_m = -1, best_b = -1;
        for (const auto& [m, c] : work.terms()) {
            long level = std::min(m.u, m.d);
            if (level > best_m || (level == best_m && m.h > best_b)) {
                best_m = level;
                best_b = m.h;
            }
        }
        Element basis = mul(pres, d_basis_element(pres, g, best_b, best_m), tail);
        Monomial pivot = grade >= 0 ? Monomial{best_m + grade, best_b, best_m}
                                    : Monomial{best_m, best_b, best_m - grade};
        Scalar e = basis.coeff(pivot);
        if (e.is_zero()) throw Error(Errc::internal, "degenerate pivot in coordinate change");
        Scalar c = work.coeff(pivot) / e;
        work -= basis.scaled(c);
        out.add_term(best_b, best_m, c);
    }
    return out;
}

} // namespace

DPoly element_to_d_coords(const Presentation& pres, const Poly& g, const Element& x) {
    return express_on_tail(pres, g, 0, x);
}

Element sigma_apply(const Presentation& pres, const Element& p, long i) {
    if (i < 0) throw Error(Errc::internal, "sigma_apply expects i >= 0");
    Element cur = p;
    for (long step = 0; step < i; ++step) {
        // d p = sigma(p) d, and sigma(p) d is PBW with every d-power >= 1.
        Element dp = leftmul_gen(pres, Gen::d, cur);
        Element next;
        for (const auto& [m, c] : dp.terms()) {
            if (m.d < 1) throw Error(Errc::internal, "sigma_apply input was not degree zero");
            next.add_term({m.u, m.h, m.d - 1}, c);
        }
        cur = next;
    }
    return cur;
}

// --- generalized Weyl algebra view --------------------------------------------

GwaView to_gwa_view(const Presentation& pres, const Element& x) {
    pres.require_noetherian();
    GwaView view{{}, pres.r, pres.s};
    for (const auto& [grade, comp] : graded_components(x)) {
        DPoly coords = express_on_tail(pres, Poly(), grade, comp);
        view.components[grade] = d_coords_to_element(pres, Poly(), coords);
    }
    return view;
}

Element from_gwa_view(const Presentation& pres, const GwaView& view) {
    Element out;
    for (const auto& [grade, p] : view.components) {
        Element tail = grade >= 0 ? Element::monomial({grade, 0, 0}, Scalar(1))
                                  : Element::monomial({0, 0, -grade}, Scalar(1));
        out += mul(pres, p, tail);
    }
    return out;
}

// --- morphisms -----------------------------------------------------------------

MorphismImages identity_images() {
    return {Element::generator(Gen::d), Element::generator(Gen::u), Element::generator(Gen::h)};
}

Element apply_morphism(const Presentation& src, const Presentation& dst,
                       const MorphismImages& images, const Element& x) {
    (void)src;
    Element out;
    for (const auto& [m, c] : x.terms()) {
        Element term = Element::one();
        term = mul(dst, term, pow(dst, images.u_img, m.u));
        term = mul(dst, term, pow(dst, images.h_img, m.h));
        term = mul(dst, term, pow(dst, images.d_img, m.d));
        out += term.scaled(c);
    }
    return out;
}

const Element* MorphismCheck::witness() const {
    for (const auto& r : residuals)
        if (!r.is_zero()) return &r;
    return nullptr;
}

MorphismCheck check_morphism(const Presentation& src, const Presentation& dst,
                             const MorphismImages& images) {
    const Element& D = images.d_img;
    const Element& U = images.u_img;
    const Element& H = images.h_img;
    Element f_of_h;
    for (int t : src.f.support())
        f_of_h += pow(dst, H, t).scaled(src.f.coeff(t));

    MorphismCheck out;
    out.residuals[0] = mul(dst, D, H) - mul(dst, H, D).scaled(src.r) + D.scaled(src.gamma);
    out.residuals[1] = mul(dst, H, U) - mul(dst, U, H).scaled(src.r) + U.scaled(src.gamma);
    out.residuals[2] = mul(dst, D, U) - mul(dst, U, D).scaled(src.s) + f_of_h;
    out.ok = out.residuals[0].is_zero() && out.residuals[1].is_zero() && out.residuals[2].is_zero();
    return out;
}

Element apply_antiauto(const Presentation& pres, const Element& x) {
    (void)pres;
    Element out;
    for (const auto& [m, c] : x.terms()) out.add_term({m.d, m.h, m.u}, c);
    return out;
}

// --- gamma reduction -------------------------------------------------------------

GammaReduction gamma_reduce(const Presentation& pres) {
    if (pres.gamma.is_zero())
        return {pres, identity_images(), identity_images()};
    if (pres.r.is_one())
        throw Error(Errc::wrong_invariant_shape, "gamma reduction requires r != 1");
    Scalar inv = (pres.r - Scalar(1)).inverse();
    Poly reduced_f = pres.f.affine_compose(inv, pres.gamma * inv);
    Presentation reduced(reduced_f, pres.r, pres.s, Scalar(0));

    MorphismImages forward = identity_images();
    forward.h_img = Element::monomial({0, 1, 0}, inv) + Element::constant(pres.gamma * inv);
    MorphismImages backward = identity_images();
    backward.h_img =
        Element::monomial({0, 1, 0}, pres.r - Scalar(1)) + Element::constant(-pres.gamma);
    return {reduced, forward, backward};
}

} // namespace gdua
