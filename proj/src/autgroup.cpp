#include "gdua/autgroup.hpp"

#include <sstream>

#include "gdua/text.hpp"

namespace gdua {

namespace {

std::string param_list(const std::vector<Scalar>& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_string(v[i]);
    os << ")";
    return os.str();
}

// A_orig = psi . A_red . phi for the gamma-reduction isomorphism pair.
MorphismImages conjugate_back(const Presentation& orig, const GammaReduction& red,
                              const MorphismImages& img_red) {
    auto lift = [&](Gen g) {
        Element in_red = apply_morphism(orig, red.reduced, red.forward, Element::generator(g));
        Element mapped = apply_morphism(red.reduced, red.reduced, img_red, in_red);
        return apply_morphism(red.reduced, orig, red.backward, mapped);
    };
    return {lift(Gen::d), lift(Gen::u), lift(Gen::h)};
}

// A_red = phi . A_orig . psi, inverse direction of conjugate_back.
MorphismImages conjugate_forward(const Presentation& orig, const GammaReduction& red,
                                 const MorphismImages& img_orig) {
    auto push = [&](Gen g) {
        Element in_orig = apply_morphism(red.reduced, orig, red.backward, Element::generator(g));
        Element mapped = apply_morphism(orig, orig, img_orig, in_orig);
        return apply_morphism(orig, red.reduced, red.forward, mapped);
    };
    return {push(Gen::d), push(Gen::u), push(Gen::h)};
}

void require_nonzero_params(const std::vector<Scalar>& params) {
    for (const auto& p : params)
        if (p.is_zero()) throw Error(Errc::zero_input, "automorphism parameters must be nonzero");
}

} // namespace

Automorphism make_automorphism(const Presentation& pres, MorphismImages images,
                               MorphismImages inverse_images, std::string label) {
    MorphismCheck fwd = check_morphism(pres, pres, images);
    if (!fwd.ok)
        throw Error(Errc::constraint_violated,
                    "images of '" + label + "' do not preserve the defining relations");
    MorphismCheck bwd = check_morphism(pres, pres, inverse_images);
    if (!bwd.ok)
        throw Error(Errc::constraint_violated,
                    "inverse images of '" + label + "' do not preserve the defining relations");
    for (Gen g : {Gen::d, Gen::u, Gen::h}) {
        Element round1 = apply_morphism(pres, pres, images, inverse_images.of(g));
        Element round2 = apply_morphism(pres, pres, inverse_images, images.of(g));
        if (round1 != Element::generator(g) || round2 != Element::generator(g))
            throw Error(Errc::constraint_violated,
                        "inverse of '" + label + "' fails the round trip");
    }
    return {pres, std::move(images), std::move(inverse_images), std::move(label)};
}

Automorphism identity_automorphism(const Presentation& pres) {
    return {pres, identity_images(), identity_images(), "id"};
}

Automorphism make_torus(const Presentation& pres, const std::vector<Scalar>& params,
                        long long bound) {
    ReducedConformal rc = reduce_and_require_conformal(pres, bound);
    const Presentation& L0 = rc.red.reduced;
    const Poly& f0 = L0.f;
    require_nonzero_params(params);

    MorphismImages img, inv;
    if (f0.is_zero()) {
        if (params.size() != 3)
            throw Error(Errc::config_error, "torus automorphism for f = 0 takes (alpha, beta, gamma)");
        const Scalar &alpha = params[0], &beta = params[1], &gamma = params[2];
        img = {Element::generator(Gen::d).scaled(beta), Element::generator(Gen::u).scaled(gamma),
               Element::generator(Gen::h).scaled(alpha)};
        inv = {Element::generator(Gen::d).scaled(beta.inverse()),
               Element::generator(Gen::u).scaled(gamma.inverse()),
               Element::generator(Gen::h).scaled(alpha.inverse())};
    } else {
        if (params.size() != 2)
            throw Error(Errc::config_error, "torus automorphism for f != 0 takes (alpha, beta)");
        const Scalar &alpha = params[0], &beta = params[1];
        long long rho0 = rho(f0);
        if (!alpha.pow(rho0).is_one())
            throw Error(Errc::constraint_violated, "alpha^rho = 1 is violated (rho = " +
                                                       std::to_string(rho0) + ")");
        long deg = f0.degree();
        Scalar y_scale = beta.inverse() * alpha.pow(deg);
        img = {Element::generator(Gen::d).scaled(beta), Element::generator(Gen::u).scaled(y_scale),
               Element::generator(Gen::h).scaled(alpha)};
        inv = {Element::generator(Gen::d).scaled(beta.inverse()),
               Element::generator(Gen::u).scaled(y_scale.inverse()),
               Element::generator(Gen::h).scaled(alpha.inverse())};
    }
    if (!pres.gamma.is_zero()) {
        img = conjugate_back(pres, rc.red, img);
        inv = conjugate_back(pres, rc.red, inv);
    }
    return make_automorphism(pres, img, inv, "phi_" + param_list(params));
}

Automorphism make_psi_plus(const Presentation& pres, const Scalar& mu, const Scalar& mu_prime,
                           const Scalar& nu, const Scalar& eta, long long bound) {
    ReducedConformal rc = reduce_and_require_conformal(pres, bound);
    const Presentation& L0 = rc.red.reduced;
    if (rc.te.tau <= 0 || rc.te.epsilon != 1 || L0.f.degree() > 0)
        throw Error(Errc::wrong_invariant_shape,
                    "psi+ needs epsilon = 1 and constant f (deg f <= 0)");
    if ((mu * mu_prime * nu).is_zero())
        throw Error(Errc::zero_input, "psi+ parameters mu, mu', nu must be nonzero");
    Scalar beta = L0.f.coeff(0);
    if (!(beta * (mu * mu_prime - Scalar(1))).is_zero())
        throw Error(Errc::constraint_violated, "beta (mu mu' - 1) = 0 is violated");

    Element ktau = pow(L0, rc.k, rc.te.tau);
    auto build = [&](const Scalar& m1, const Scalar& m2, const Scalar& n1, const Scalar& e1) {
        return MorphismImages{Element::generator(Gen::d).scaled(m1),
                              Element::generator(Gen::u).scaled(m2),
                              Element::generator(Gen::h).scaled(n1) + ktau.scaled(e1)};
    };
    MorphismImages img = build(mu, mu_prime, nu, eta);
    Scalar mm = mu * mu_prime;
    MorphismImages inv = build(mu.inverse(), mu_prime.inverse(), nu.inverse(),
                               -eta / (mm.pow(rc.te.tau) * nu));
    if (!pres.gamma.is_zero()) {
        img = conjugate_back(pres, rc.red, img);
        inv = conjugate_back(pres, rc.red, inv);
    }
    return make_automorphism(pres, img, inv, "psi+_" + param_list({mu, mu_prime, nu, eta}));
}

Automorphism make_psi_minus(const Presentation& pres, const Scalar& mu, const Scalar& nu,
                            long long bound) {
    ReducedConformal rc = reduce_and_require_conformal(pres, bound);
    const Presentation& L0 = rc.red.reduced;
    if (rc.te.tau != 1 || rc.te.epsilon != -1 || L0.f.degree() != 1)
        throw Error(Errc::wrong_invariant_shape,
                    "psi- needs tau = 1, epsilon = -1 and f = alpha X + beta with alpha != 0");
    if ((mu * nu).is_zero())
        throw Error(Errc::zero_input, "psi- parameters mu, nu must be nonzero");
    Scalar alpha = L0.f.coeff(1), beta = L0.f.coeff(0);
    const Scalar &r = pres.r, &s = pres.s;
    Scalar factor = r * alpha * nu / (s - r);
    if (!(beta * (factor - Scalar(1))).is_zero())
        throw Error(Errc::constraint_violated, "beta (r alpha nu/(s-r) - 1) = 0 is violated");

    auto build = [&](const Scalar& m1, const Scalar& n1) {
        Scalar fac = r * alpha * n1 / (s - r);
        return MorphismImages{Element::generator(Gen::u).scaled(m1),
                              Element::generator(Gen::d).scaled(fac / m1), rc.k.scaled(n1)};
    };
    MorphismImages img = build(mu, nu);
    Scalar base = (s - r) / (alpha * r);
    MorphismImages inv = build(mu * (s - r) / (r * alpha * nu), base * base * nu.inverse());
    if (!pres.gamma.is_zero()) {
        img = conjugate_back(pres, rc.red, img);
        inv = conjugate_back(pres, rc.red, inv);
    }
    return make_automorphism(pres, img, inv, "psi-_" + param_list({mu, nu}));
}

Automorphism make_cyclic_phi(const Presentation& pres, long long bound) {
    ReducedConformal rc = reduce_and_require_conformal(pres, bound);
    if (!rc.red.reduced.f.is_zero() || rc.te.tau != 1 || rc.te.epsilon != -1)
        throw Error(Errc::wrong_invariant_shape, "cyclic phi needs f = 0 and s = r^{-1}");
    MorphismImages img{Element::generator(Gen::u), Element::generator(Gen::h),
                       Element::generator(Gen::d)};
    MorphismImages inv{Element::generator(Gen::h), Element::generator(Gen::d),
                       Element::generator(Gen::u)};
    if (!pres.gamma.is_zero()) {
        img = conjugate_back(pres, rc.red, img);
        inv = conjugate_back(pres, rc.red, inv);
    }
    return make_automorphism(pres, img, inv, "cyclic_phi");
}

Element apply(const Automorphism& a, const Element& x) {
    return apply_morphism(a.pres, a.pres, a.images, x);
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
    if (!(a.pres == b.pres))
        throw Error(Errc::presentation_mismatch, "cannot compose automorphisms of different algebras");
    auto chain = [&](const MorphismImages& outer, const MorphismImages& inner) {
        return MorphismImages{apply_morphism(a.pres, a.pres, outer, inner.d_img),
                              apply_morphism(a.pres, a.pres, outer, inner.u_img),
                              apply_morphism(a.pres, a.pres, outer, inner.h_img)};
    };
    return make_automorphism(a.pres, chain(a.images, b.images),
                             chain(b.inverse_images, a.inverse_images),
                             "(" + a.label + " o " + b.label + ")");
}

Automorphism invert(const Automorphism& a) {
    return {a.pres, a.inverse_images, a.images, "inv(" + a.label + ")"};
}

bool same_automorphism(const Automorphism& a, const Automorphism& b) {
    return a.pres == b.pres && a.images == b.images;
}

const char* aut_case_name(AutCase c) {
    switch (c) {
    case AutCase::a: return "a";
    case AutCase::b: return "b";
    case AutCase::c: return "c";
    case AutCase::d: return "d";
    case AutCase::e: return "e";
    case AutCase::f: return "f";
    }
    return "?";
}

namespace {

// The subgroup H of automorphisms scaling h, described against the reduced f.
void describe_h_only(GroupDescription& out, const Poly& f0, long long field_d) {
    if (f0.is_zero()) {
        out.symbolic_group = "(K*)^3";
        out.generators.push_back({"torus", {"alpha", "beta", "gamma"},
                                  "alpha, beta, gamma in K*", {}});
        return;
    }
    long long r0 = rho(f0);
    out.rho = r0;
    GeneratorSchema torus{"torus", {"alpha", "beta"}, "", {}};
    if (r0 == 0) {
        out.symbolic_group = "(K*)^2";
        torus.constraint = "alpha, beta in K*";
    } else {
        out.symbolic_group = r0 == 1 ? "K*" : "Z/" + std::to_string(r0) + "Z x K*";
        torus.constraint = "alpha^" + std::to_string(r0) + " = 1";
        torus.alpha_roots = roots_of_unity_dividing(r0, field_d);
    }
    out.generators.push_back(std::move(torus));
}

} // namespace

GroupDescription classify_aut_group(const Presentation& pres, long long bound) {
    ReducedConformal rc = reduce_and_require_conformal(pres, bound);
    const Poly& f0 = rc.red.reduced.f;
    const TauEpsilon te = rc.te;
    bool s_is_rinv = te.tau == 1 && te.epsilon == -1;
    bool s_tau_is_r = te.tau > 0 && te.epsilon == 1;

    GroupDescription out(pres);
    out.te = te;
    if (!f0.is_zero()) out.rho = rho(f0);

    if (f0.is_zero() && s_is_rinv) {
        out.case_tag = AutCase::a;
        out.symbolic_group = "(K*)^3 x| Z/3Z";
        out.generators.push_back({"torus", {"alpha", "beta", "gamma"},
                                  "alpha, beta, gamma in K*", {}});
        out.generators.push_back({"cyclic_phi", {}, "order 3: x -> y -> h -> x", {}});
    } else if (f0.is_zero() && s_tau_is_r) {
        out.case_tag = AutCase::b;
        out.symbolic_group = "K x| (K*)^3";
        out.generators.push_back({"psi_plus", {"t"}, "t in K", {}});
        out.generators.push_back({"torus", {"alpha", "beta", "gamma"},
                                  "alpha, beta, gamma in K*", {}});
    } else if (f0.degree() == 0 && s_tau_is_r) {
        out.case_tag = AutCase::c;
        out.symbolic_group = "K x| (K*)^2";
        out.generators.push_back({"psi_plus", {"t"}, "t in K", {}});
        out.generators.push_back({"torus", {"alpha", "beta"}, "alpha, beta in K*", {}});
    } else if (f0.degree() == 1 && s_is_rinv && f0.coeff(0).is_zero()) {
        out.case_tag = AutCase::d;
        out.symbolic_group = "(K*)^2 x| Z/2Z";
        out.generators.push_back({"torus", {"alpha", "beta"}, "alpha, beta in K*", {}});
        out.generators.push_back({"psi_minus", {}, "normalized: (psi-)^2 = id", {}});
    } else if (f0.degree() == 1 && s_is_rinv) {
        out.case_tag = AutCase::e;
        out.symbolic_group = "K* x| Z/2Z";
        GeneratorSchema torus{"torus", {"alpha", "beta"}, "alpha^1 = 1", {Scalar(1)}};
        out.generators.push_back(std::move(torus));
        out.generators.push_back({"psi_minus", {}, "nu = (s-r)/(r alpha) forced by beta != 0", {}});
    } else {
        out.case_tag = AutCase::f;
        describe_h_only(out, f0, pres.field_d());
    }
    out.clause = aut_case_name(out.case_tag);
    return out;
}

GroupDescription classify_downup(const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                                 long long bound) {
    if (!alpha.is_rational() || !beta.is_rational() || !gamma.is_rational())
        throw Error(Errc::config_error, "down-up parameters must be rational");
    if (beta.is_zero()) throw Error(Errc::beta_zero, "down-up classification requires beta != 0");

    // Roots of X^2 - alpha X - beta, exactly.
    Scalar disc_root = sqrt_of_rational(alpha.a_part() * alpha.a_part() + 4 * beta.a_part());
    Scalar half(BigRat(1, 2));
    Scalar r = (alpha + disc_root) * half;
    Scalar s = (alpha - disc_root) * half;
    bool r_unity = is_root_of_unity(r), s_unity = is_root_of_unity(s);
    if (r_unity && s_unity)
        throw Error(Errc::both_roots_of_unity, "both roots of X^2 - alpha X - beta are roots of unity");
    if (r_unity) std::swap(r, s);

    auto te = mult_dependence(r, s, bound);
    if (!te) throw Error(Errc::undecided, "tau/epsilon undecided within the search bound");

    GroupDescription out(Presentation(Poly::x(), r, s, gamma));
    out.down_up = true;
    out.te = *te;
    bool g0 = gamma.is_zero();
    bool beta_m1 = beta == Scalar(-1);
    out.rho = g0 ? 0 : 1;
    out.externally_justified = (!g0 && s.is_one()) || r == s;

    if (g0 && beta_m1) {
        out.clause = "a";
        out.case_tag = AutCase::d;
        out.symbolic_group = "(K*)^2 x| Z/2Z";
        out.generators.push_back({"torus_du", {"lambda1", "lambda2"}, "diagonal on d, u", {}});
        out.generators.push_back({"swap_du", {}, "interchanges d and u", {}});
    } else if (g0) {
        out.clause = "b";
        out.case_tag = AutCase::f;
        out.symbolic_group = "(K*)^2";
        out.generators.push_back({"torus_du", {"lambda1", "lambda2"}, "diagonal on d, u", {}});
    } else if (beta_m1) {
        out.clause = "c";
        out.case_tag = AutCase::e;
        out.symbolic_group = "K* x| Z/2Z";
        out.generators.push_back({"torus_du_hyperbolic", {"mu"}, "d -> mu d, u -> mu^{-1} u", {}});
        out.generators.push_back({"swap_du", {}, "interchanges d and u", {}});
    } else {
        out.clause = "d";
        out.case_tag = AutCase::f;
        out.symbolic_group = "K*";
        out.generators.push_back({"torus_du_hyperbolic", {"mu"}, "d -> mu d, u -> mu^{-1} u", {}});
    }
    return out;
}

namespace {

// d -> lambda1 d, u -> lambda2 u, h -> lambda1 lambda2 h on L(X, r, s, gamma).
Automorphism downup_torus(const Presentation& pres, const Scalar& l1, const Scalar& l2) {
    require_nonzero_params({l1, l2});
    auto build = [&](const Scalar& a, const Scalar& b) {
        return MorphismImages{Element::generator(Gen::d).scaled(a),
                              Element::generator(Gen::u).scaled(b),
                              Element::generator(Gen::h).scaled(a * b)};
    };
    return make_automorphism(pres, build(l1, l2), build(l1.inverse(), l2.inverse()),
                             "du_torus_" + param_list({l1, l2}));
}

// d <-> u; h = s ud - du maps to s du - ud = (s^2 - 1) ud - s f(h).
Automorphism downup_swap(const Presentation& pres) {
    Element h_img = Element::monomial({1, 0, 1}, pres.s * pres.s - Scalar(1)) -
                    poly_of_h(pres.f).scaled(pres.s);
    MorphismImages img{Element::generator(Gen::u), Element::generator(Gen::d), h_img};
    return make_automorphism(pres, img, img, "du_swap");
}

} // namespace

std::vector<Automorphism> enumerate_generators(const GroupDescription& desc,
                                               const std::vector<Scalar>& sample_params,
                                               long long bound) {
    std::vector<Scalar> samples;
    for (const auto& s : sample_params)
        if (!s.is_zero()) samples.push_back(s);
    if (samples.empty()) samples.push_back(Scalar(2));
    size_t cursor = 0;
    auto next = [&] { return samples[cursor++ % samples.size()]; };

    std::vector<Automorphism> out;
    for (const auto& schema : desc.generators) {
        if (schema.kind == "torus") {
            if (schema.params.size() == 3) {
                out.push_back(make_torus(desc.pres, {next(), next(), next()}, bound));
            } else if (!schema.alpha_roots.empty()) {
                for (const auto& root : schema.alpha_roots)
                    out.push_back(make_torus(desc.pres, {root, next()}, bound));
            } else {
                out.push_back(make_torus(desc.pres, {next(), next()}, bound));
            }
        } else if (schema.kind == "psi_plus") {
            out.push_back(make_psi_plus(desc.pres, Scalar(1), Scalar(1), Scalar(1), next(), bound));
        } else if (schema.kind == "psi_minus") {
            Poly f0 = gamma_reduce(desc.pres).reduced.f;
            Scalar nu0 = (desc.pres.s - desc.pres.r) / (desc.pres.r * f0.coeff(1));
            out.push_back(make_psi_minus(desc.pres, Scalar(1), nu0, bound));
        } else if (schema.kind == "cyclic_phi") {
            out.push_back(make_cyclic_phi(desc.pres, bound));
        } else if (schema.kind == "torus_du") {
            out.push_back(downup_torus(desc.pres, next(), next()));
        } else if (schema.kind == "torus_du_hyperbolic") {
            Scalar mu = next();
            out.push_back(downup_torus(desc.pres, mu, mu.inverse()));
        } else if (schema.kind == "swap_du") {
            out.push_back(downup_swap(desc.pres));
        } else {
            throw Error(Errc::config_error, "unknown generator schema: " + schema.kind);
        }
    }
    return out;
}

std::vector<MorphismImages> search_image_shapes(const Presentation& pres, long max_degree,
                                                const std::vector<Scalar>& samples,
                                                long long bound) {
    ReducedConformal rc = reduce_and_require_conformal(pres, bound);
    const Presentation& L0 = rc.red.reduced;
    std::vector<Scalar> coefs;
    for (const auto& s : samples)
        if (!s.is_zero()) coefs.push_back(s);

    std::vector<Element> h_shapes;
    for (const auto& c : coefs) {
        h_shapes.push_back(Element::generator(Gen::h).scaled(c));
        h_shapes.push_back(rc.k.scaled(c));
        h_shapes.push_back(Element::generator(Gen::d).scaled(c));
        h_shapes.push_back(Element::generator(Gen::u).scaled(c));
    }
    if (rc.te.tau > 0) {
        Element ktau = pow(L0, rc.k, rc.te.tau);
        for (const auto& c0 : coefs)
            for (const auto& c1 : coefs)
                h_shapes.push_back(Element::generator(Gen::h).scaled(c0) + ktau.scaled(c1));
    }

    std::vector<Element> xy_shapes;
    for (long a = 0; a <= max_degree; ++a)
        for (long b = 0; a + b <= max_degree; ++b)
            for (long c = 0; a + b + c <= max_degree; ++c)
                for (const auto& q : coefs)
                    xy_shapes.push_back(Element::monomial({a, b, c}, q));

    const Scalar &r = L0.r, &s = L0.s;
    std::vector<MorphismImages> found;
    for (const Element& H : h_shapes) {
        Element f_of_H;
        for (int t : L0.f.support()) f_of_H += pow(L0, H, t).scaled(L0.f.coeff(t));
        for (const Element& D : xy_shapes) {
            if (!(mul(L0, D, H) - mul(L0, H, D).scaled(r)).is_zero()) continue;
            for (const Element& U : xy_shapes) {
                if (!(mul(L0, H, U) - mul(L0, U, H).scaled(r)).is_zero()) continue;
                if (!(mul(L0, D, U) - mul(L0, U, D).scaled(s) + f_of_H).is_zero()) continue;
                MorphismImages img{D, U, H};
                if (!pres.gamma.is_zero()) img = conjugate_back(pres, rc.red, img);
                found.push_back(std::move(img));
            }
        }
    }
    return found;
}

namespace {

// Row-reduced linear span of elements, keyed by leading PBW monomial.
class SpanBasis {
public:
    void insert(Element e) {
        e = reduce(std::move(e));
        if (e.is_zero()) return;
        Monomial lead = e.terms().rbegin()->first;
        rows_.emplace(lead, e.scaled(e.terms().rbegin()->second.inverse()));
    }
    bool contains(Element e) const { return reduce(std::move(e)).is_zero(); }

private:
    std::map<Monomial, Element> rows_;

    Element reduce(Element e) const {
        while (!e.is_zero()) {
            Monomial lead = e.terms().rbegin()->first;
            auto it = rows_.find(lead);
            if (it == rows_.end()) break;
            e -= it->second.scaled(e.terms().rbegin()->second);
        }
        return e;
    }
};

} // namespace

bool generators_in_image_span(const Presentation& pres, const MorphismImages& images,
                              int max_len) {
    SpanBasis span;
    std::vector<Element> level{Element::one()};
    span.insert(Element::one());
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Element> next;
        for (const Element& w : level)
            for (const Element* img : {&images.d_img, &images.u_img, &images.h_img}) {
                Element prod = mul(pres, w, *img);
                span.insert(prod);
                next.push_back(std::move(prod));
            }
        level = std::move(next);
    }
    return span.contains(Element::generator(Gen::d)) &&
           span.contains(Element::generator(Gen::u)) &&
           span.contains(Element::generator(Gen::h));
}

namespace {

std::optional<Scalar> scalar_multiple(const Element& e, const Monomial& m) {
    if (e.term_count() != 1) return std::nullopt;
    const auto& [mono, c] = *e.terms().begin();
    if (!(mono == m)) return std::nullopt;
    return c;
}

const Monomial kD{0, 0, 1}, kU{1, 0, 0}, kH{0, 1, 0};

// h-image as (nu, eta) against the basis {h, k^tau}; nullopt if outside it.
std::optional<std::pair<Scalar, Scalar>> h_in_span(const Presentation& L0, const Poly& g,
                                                   long long tau, const Element& e) {
    auto deg = e.homogeneous_degree();
    if (!deg || *deg != 0) return std::nullopt;
    DPoly coords = element_to_d_coords(L0, g, e);
    Scalar nu = coords.coeff(1, 0);
    Scalar eta = tau > 0 ? coords.coeff(0, tau) : Scalar(0);
    DPoly expected = DPoly::term(1, 0, nu);
    if (tau > 0) expected = expected + DPoly::term(0, tau, eta);
    if (!(coords == expected)) return std::nullopt;
    return std::make_pair(nu, eta);
}

} // namespace

bool in_classified_family(const GroupDescription& desc, const MorphismImages& images,
                          long long bound) {
    if (desc.down_up) {
        // Diagonal torus times optional swap on L(X, r, s, gamma).
        auto l1 = scalar_multiple(images.d_img, kD);
        auto l2 = scalar_multiple(images.u_img, kU);
        bool has_swap = false, hyperbolic_only = true;
        for (const auto& gen : desc.generators) {
            if (gen.kind == "swap_du") has_swap = true;
            if (gen.kind == "torus_du") hyperbolic_only = false;
        }
        if (l1 && l2) {
            if (hyperbolic_only && !(*l1 * *l2).is_one()) return false;
            return images.h_img == Element::generator(Gen::h).scaled(*l1 * *l2);
        }
        if (!has_swap) return false;
        auto m1 = scalar_multiple(images.d_img, kU);
        auto m2 = scalar_multiple(images.u_img, kD);
        if (!m1 || !m2) return false;
        Automorphism swp = downup_swap(desc.pres);
        Automorphism tor = downup_torus(desc.pres, *m2, *m1);
        return compose(tor, swp).images == images;
    }

    ReducedConformal rc = reduce_and_require_conformal(desc.pres, bound);
    const Presentation& L0 = rc.red.reduced;
    MorphismImages img = desc.pres.gamma.is_zero()
                             ? images
                             : conjugate_forward(desc.pres, rc.red, images);
    const Poly& f0 = L0.f;
    auto dd = scalar_multiple(img.d_img, kD);
    auto uu = scalar_multiple(img.u_img, kU);

    switch (desc.case_tag) {
    case AutCase::a: {
        auto ah = scalar_multiple(img.h_img, kH);
        if (dd && uu && ah) return true;
        // x -> y -> h -> x and its square
        if (scalar_multiple(img.d_img, kU) && scalar_multiple(img.u_img, kH) &&
            scalar_multiple(img.h_img, kD))
            return true;
        return scalar_multiple(img.d_img, kH).has_value() &&
               scalar_multiple(img.u_img, kD).has_value() &&
               scalar_multiple(img.h_img, kU).has_value();
    }
    case AutCase::b:
    case AutCase::c: {
        if (!dd || !uu) return false;
        auto span = h_in_span(L0, rc.g, rc.te.tau, img.h_img);
        if (!span || span->first.is_zero()) return false;
        if (desc.case_tag == AutCase::c && !(*dd * *uu).is_one()) return false;
        return true;
    }
    case AutCase::d:
    case AutCase::e: {
        Scalar alpha = f0.coeff(1), beta = f0.coeff(0);
        if (dd && uu) {
            auto ah = scalar_multiple(img.h_img, kH);
            if (!ah) return false;
            if (desc.case_tag == AutCase::e && !ah->is_one()) return false;
            return *uu == dd->inverse() * *ah;
        }
        auto m1 = scalar_multiple(img.d_img, kU);
        auto m2 = scalar_multiple(img.u_img, kD);
        if (!m1 || !m2) return false;
        auto hdeg = img.h_img.homogeneous_degree();
        if (!hdeg || *hdeg != 0) return false;
        DPoly coords = element_to_d_coords(L0, rc.g, img.h_img);
        if (coords.coeffs().size() != 1 || coords.coeffs().begin()->first != std::make_pair(0L, 1L))
            return false;
        Scalar nu = coords.coeff(0, 1);
        Scalar factor = desc.pres.r * alpha * nu / (desc.pres.s - desc.pres.r);
        if (!(beta * (factor - Scalar(1))).is_zero()) return false;
        return *m2 == factor / *m1;
    }
    case AutCase::f: {
        if (!dd || !uu) return false;
        auto ah = scalar_multiple(img.h_img, kH);
        if (!ah) return false;
        if (f0.is_zero()) return true;
        long long r0 = rho(f0);
        if (!ah->pow(r0).is_one()) return false;
        return *uu == dd->inverse() * ah->pow(f0.degree());
    }
    }
    return false;
}

} // namespace gdua
