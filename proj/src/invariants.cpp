#include "gdua/invariants.hpp"

#include <sstream>

namespace gdua {

namespace {

std::string monomial_key(const Monomial& m) {
    std::ostringstream os;
    os << "u^" << m.u << " h^" << m.h << " d^" << m.d;
    return os.str();
}

// Solve f(X) = s g(X) - g(X - gamma) for r = 1 (gamma != 0 when s = 1).
// Back-substitution from the top degree; for s = 1 the solution comes out
// normalized by g(0) = 0 since corrections enter one degree above the residual.
Poly solve_r1(const Poly& f, const Scalar& s, const Scalar& gamma) {
    Poly g;
    Poly residual = f;
    auto apply = [&](const Poly& p) { // s p(X) - p(X - gamma)
        return p.scaled(s) - p.affine_compose(Scalar(1), -gamma);
    };
    while (!residual.is_zero()) {
        int t = residual.degree();
        Scalar lead = residual.leading();
        Poly step;
        if (!(s - Scalar(1)).is_zero()) {
            step = Poly::monomial(lead / (s - Scalar(1)), t);
        } else {
            step = Poly::monomial(lead / (Scalar(t + 1) * gamma), t + 1);
        }
        g = g + step;
        residual = f - apply(g);
    }
    return g;
}

} // namespace

ConformalData conformal(const Presentation& pres) {
    pres.require_noetherian();
    ConformalData out;

    // Normalize the frame.
    Poly nf = pres.f;
    Scalar gamma = pres.gamma;
    if (!pres.gamma.is_zero() && !(pres.r - Scalar(1)).is_zero()) {
        nf = gamma_reduce(pres).reduced.f;
        gamma = Scalar(0);
        out.gamma_reduced = true;
    }
    out.normalized_f = nf;

    if (gamma.is_zero()) {
        // Diagonal test: conformal iff s != r^i on the support of f.
        Poly g;
        for (int i : nf.support()) {
            Scalar den = pres.s - pres.r.pow(i);
            if (den.is_zero()) {
                out.conformal = false;
                return out;
            }
            g = g + Poly::monomial(nf.coeff(i) / den, i);
        }
        out.conformal = true;
        out.g = g;
    } else {
        // r = 1, gamma != 0: always conformal except the s = 1, f = 0 trivial
        // case which the solver also handles (g = 0).
        out.conformal = true;
        out.g = solve_r1(nf, pres.s, gamma);
    }
    out.k_def = Element::monomial({1, 0, 1}, Scalar(1)) - poly_of_h(*out.g);
    return out;
}

std::optional<TauEpsilon> tau_epsilon(const Presentation& pres, long long bound) {
    pres.require_noetherian();
    return mult_dependence(pres.r, pres.s, bound);
}

ReducedConformal reduce_and_require_conformal(const Presentation& pres, long long bound) {
    pres.require_noetherian();
    if (!pres.r_not_root_of_unity)
        throw Error(Errc::root_of_unity_input, "r is a root of unity");
    GammaReduction red = gamma_reduce(pres);
    ConformalData cd = conformal(red.reduced);
    if (!cd.conformal)
        throw Error(Errc::not_conformal, "presentation is not conformal");
    auto te = tau_epsilon(pres, bound);
    if (!te)
        throw Error(Errc::undecided, "tau/epsilon undecided within the search bound");
    return {std::move(red), *cd.g, *cd.k_def, *te};
}

CenterDescription center(const Presentation& pres, long long bound) {
    ReducedConformal rc = reduce_and_require_conformal(pres, bound);
    CenterDescription out;
    out.te = rc.te;
    if (rc.te.tau == 0 || rc.te.epsilon > 0) {
        out.tag = CenterTag::scalars_only;
        return out;
    }
    out.tag = CenterTag::polynomial_in_generator;
    Element gen = mul(rc.red.reduced, Element::monomial({0, -rc.te.epsilon, 0}, Scalar(1)),
                      pow(rc.red.reduced, rc.k, rc.te.tau));
    out.generator = apply_morphism(rc.red.reduced, pres, rc.red.backward, gen);
    return out;
}

bool center_scan_consistent(const Presentation& pres, long degree, long long bound) {
    ReducedConformal rc = reduce_and_require_conformal(pres, bound);
    const Presentation& L0 = rc.red.reduced;
    bool has_generator = rc.te.tau > 0 && rc.te.epsilon <= 0;
    for (long i = 0; i <= degree; ++i)
        for (long j = 0; j <= degree; ++j) {
            Element m = mul(L0, Element::monomial({0, i, 0}, Scalar(1)), pow(L0, rc.k, j));
            bool commutes = true;
            for (Gen g : {Gen::d, Gen::u, Gen::h}) {
                Element gen = Element::generator(g);
                if (mul(L0, m, gen) != mul(L0, gen, m)) commutes = false;
            }
            bool in_lattice = (i == 0 && j == 0) ||
                              (has_generator && j % rc.te.tau == 0 &&
                               i == -(j / rc.te.tau) * rc.te.epsilon);
            if (commutes != in_lattice) return false;
        }
    return true;
}

namespace {

// Solve A = lambda * B exactly, term by term.
std::optional<Scalar> eigen_ratio(const Element& A, const Element& B, std::string* why) {
    if (B.is_zero() || A.is_zero()) {
        if (why) *why = "degenerate product";
        return std::nullopt;
    }
    std::optional<Scalar> lambda;
    for (const auto& [m, c] : B.terms()) {
        Scalar a = A.coeff(m);
        if (a.is_zero()) {
            if (why) *why = "term " + monomial_key(m) + " present on one side only";
            return std::nullopt;
        }
        Scalar ratio = a / c;
        if (!lambda) {
            lambda = ratio;
        } else if (*lambda != ratio) {
            if (why) *why = "term " + monomial_key(m) + " forces a second eigenvalue";
            return std::nullopt;
        }
    }
    if (A.term_count() != B.term_count()) {
        if (why) *why = "supports differ";
        return std::nullopt;
    }
    return lambda;
}

} // namespace

NormalityResult is_normal(const Presentation& pres, const Element& t, long long bound) {
    if (t.is_zero()) throw Error(Errc::zero_input, "normality is undefined for 0");
    reduce_and_require_conformal(pres, bound);

    NormalityResult out;
    if (!t.homogeneous_degree()) {
        std::ostringstream os;
        os << "grades {";
        bool first = true;
        for (const auto& [g, comp] : graded_components(t)) {
            os << (first ? "" : ", ") << g;
            first = false;
        }
        os << "}";
        out.witness_kind = "inhomogeneous";
        out.witness_detail = os.str();
        return out;
    }
    Element dgen = Element::generator(Gen::d), ugen = Element::generator(Gen::u);
    std::string why;
    auto lambda = eigen_ratio(mul(pres, t, dgen), mul(pres, dgen, t), &why);
    if (!lambda) {
        out.witness_kind = "lambda_inconsistent";
        out.witness_detail = why;
        return out;
    }
    auto mu = eigen_ratio(mul(pres, t, ugen), mul(pres, ugen, t), &why);
    if (!mu) {
        out.witness_kind = "mu_inconsistent";
        out.witness_detail = why;
        return out;
    }
    out.normal = true;
    out.lambda = lambda;
    out.mu = mu;
    return out;
}

NormalClassification classify_normal(const Presentation& pres, const Element& t,
                                      long long bound) {
    NormalityResult nr = is_normal(pres, t, bound);
    if (!nr.normal)
        throw Error(Errc::not_normal, "element is not normal: " + nr.witness_kind);
    ReducedConformal rc = reduce_and_require_conformal(pres, bound);
    const Presentation& L0 = rc.red.reduced;
    Element t0 = apply_morphism(pres, L0, rc.red.forward, t);

    NormalClassification out;
    long grade = *t0.homogeneous_degree();
    if (grade < 0) {
        out.ladder = NormalClassification::Ladder::x_power;
        out.ladder_n = -grade;
    } else if (grade > 0) {
        out.ladder = NormalClassification::Ladder::y_power;
        out.ladder_n = grade;
    }

    // Strip the ladder: t0 = p(h, k) * x^n or p(h, k) * y^n.
    DPoly p;
    if (grade == 0) {
        p = element_to_d_coords(L0, rc.g, t0);
    } else {
        GwaView view = to_gwa_view(L0, t0);
        p = element_to_d_coords(L0, rc.g, view.components.at(grade));
    }

    long amin = 0, bmin = 0;
    bool first = true;
    for (const auto& [key, c] : p.coeffs()) {
        if (first) {
            amin = key.first;
            bmin = key.second;
            first = false;
        } else {
            amin = std::min(amin, key.first);
            bmin = std::min(bmin, key.second);
        }
    }
    out.h_power = amin;
    out.k_power = bmin;
    DPoly q;
    for (const auto& [key, c] : p.coeffs()) q.add_term(key.first - amin, key.second - bmin, c);

    const auto [tau, eps] = rc.te;
    if (q.coeffs().size() == 1 && q.coeffs().begin()->first == std::make_pair(0L, 0L)) {
        out.scalar_part = q.coeff(0, 0);
        q = DPoly::one();
        out.q_shape = tau == 0 ? 'a' : (eps <= 0 ? 'b' : 'c');
    } else if (tau > 0 && eps <= 0) {
        // q central: support inside N * (-eps, tau), nonzero constant term.
        Scalar anchor = q.coeff(0, 0);
        if (anchor.is_zero())
            throw Error(Errc::internal, "central factor without constant term");
        out.scalar_part = anchor;
        q = q.scaled(anchor.inverse());
        out.q_shape = 'b';
    } else if (tau > 0 && eps > 0) {
        long l = 0;
        for (const auto& [key, c] : q.coeffs()) l = std::max(l, static_cast<long>(key.second / tau));
        Scalar anchor = q.coeff(eps * l, 0);
        if (anchor.is_zero())
            throw Error(Errc::internal, "unexpected shape for the q factor");
        out.scalar_part = anchor;
        q = q.scaled(anchor.inverse());
        out.q_shape = 'c';
    } else {
        throw Error(Errc::internal, "non-scalar q with tau = 0 on a normal element");
    }
    out.q = q;
    return out;
}

bool xn_normal_structural(const Presentation& pres, long n, long long bound) {
    if (n <= 0) return true;
    Poly f = gamma_reduce(pres).reduced.f;
    if (f.is_zero()) return true;
    auto supp = f.support();
    if (supp.size() != 1) return false;
    int m = supp[0];
    if ((pres.s - pres.r.pow(m)).is_zero()) return false; // f = mu (s - r^m) X^m needs mu != 0
    auto te = tau_epsilon(pres, bound);
    if (!te) throw Error(Errc::undecided, "tau/epsilon undecided");
    if (te->tau == 0) return false;
    return te->epsilon == te->tau * m && n % te->tau == 0;
}

} // namespace gdua
