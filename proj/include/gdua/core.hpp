#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gdua/poly.hpp"
#include "gdua/scalar.hpp"

namespace gdua {

enum class Gen { d, u, h };

// PBW word u^a h^b d^c.  Z-degree is a - c (u, h, d graded 1, 0, -1).
struct Monomial {
    long u = 0, h = 0, d = 0;

    long zdegree() const { return u - d; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend bool operator<(const Monomial& x, const Monomial& y) {
        if (x.u != y.u) return x.u < y.u;
        if (x.h != y.h) return x.h < y.h;
        return x.d < y.d;
    }
};

// Finitely supported Scalar-linear combination of PBW monomials.  No zero
// coefficients are stored; all coefficients live in one extension.
class Element {
public:
    Element() = default;
    static Element zero() { return Element(); }
    static Element one() { return monomial({0, 0, 0}, Scalar(1)); }
    static Element generator(Gen g);
    static Element monomial(Monomial m, Scalar c);
    static Element constant(Scalar c) { return monomial({0, 0, 0}, std::move(c)); }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    Scalar coeff(const Monomial& m) const;
    long long field_d() const { return field_d_; }

    void add_term(const Monomial& m, const Scalar& c);

    friend Element operator+(const Element& x, const Element& y);
    friend Element operator-(const Element& x, const Element& y);
    Element operator-() const;
    Element scaled(const Scalar& c) const;
    Element& operator+=(const Element& y) { return *this = *this + y; }
    Element& operator-=(const Element& y) { return *this = *this - y; }
    friend bool operator==(const Element& x, const Element& y) { return x.terms_ == y.terms_; }
    friend bool operator!=(const Element& x, const Element& y) { return !(x == y); }

    // Z-degree when homogeneous (zero counts as homogeneous of any degree).
    std::optional<long> homogeneous_degree() const;

private:
    std::map<Monomial, Scalar> terms_;
    long long field_d_ = 0;
};

// The tuple (f, r, s, gamma) presenting L(f, r, s, gamma):
//   dh - r hd + gamma d = 0,  hu - r uh + gamma u = 0,  du - s ud + f(h) = 0.
// Raw normal-form arithmetic is valid for any parameters; the PBW monomials
// form a basis (and L is a Noetherian domain) exactly when rs != 0.
struct Presentation {
    Poly f;
    Scalar r, s, gamma;
    bool noetherian = false;          // rs != 0
    bool r_not_root_of_unity = false; // r != 0 and not a root of unity

    Presentation(Poly f_, Scalar r_, Scalar s_, Scalar gamma_);

    long long field_d() const { return field_d_; }
    void require_noetherian() const;
    friend bool operator==(const Presentation& x, const Presentation& y) {
        return x.f == y.f && x.r == y.r && x.s == y.s && x.gamma == y.gamma;
    }

private:
    long long field_d_ = 0;
};

// Bilinear, associative product in PBW normal form.
Element mul(const Presentation& pres, const Element& x, const Element& y);
Element pow(const Presentation& pres, const Element& x, long n);

// Normal form of a word of scaled generators (the product, left to right).
Element normal_form(const Presentation& pres,
                    const std::vector<std::pair<Gen, Scalar>>& word);

// f(h) as an element, or more generally p(h).
Element poly_of_h(const Poly& p);

// Decomposition by Z-degree; summing the components recovers the element.
std::map<long, Element> graded_components(const Element& x);

// true iff x*y = 0 (a falsifiable probe of the domain property for rs != 0).
bool is_zero_divisor_probe(const Presentation& pres, const Element& x, const Element& y);

// --- degree-zero coordinates -----------------------------------------------
//
// L_0 = K[h, a] with a = ud.  Degree-zero elements are re-expressed as
// commutative polynomials in (h, w) where w = a - g(h); taking g = 0 gives
// the (h, a) coordinates of the generalized Weyl algebra view and a
// conformal g gives the (h, k) coordinates of the sigma-diagonal form.

// Sparse bivariate polynomial, exponent pair (h, w) -> coefficient.
class DPoly {
public:
    DPoly() = default;
    static DPoly one() { return term(0, 0, Scalar(1)); }
    static DPoly term(long he, long we, Scalar c);

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<std::pair<long, long>, Scalar>& coeffs() const { return coeffs_; }
    Scalar coeff(long he, long we) const;
    void add_term(long he, long we, const Scalar& c);

    friend DPoly operator+(const DPoly& p, const DPoly& q);
    friend DPoly operator-(const DPoly& p, const DPoly& q);
    friend DPoly operator*(const DPoly& p, const DPoly& q);
    DPoly scaled(const Scalar& c) const;
    friend bool operator==(const DPoly&, const DPoly&) = default;

private:
    std::map<std::pair<long, long>, Scalar> coeffs_;
};

// The element h^he * (ud - g(h))^we, in PBW form.
Element d_basis_element(const Presentation& pres, const Poly& g, long he, long we);
// Expand a DPoly in the (h, ud - g(h)) coordinates into a PBW element.
Element d_coords_to_element(const Presentation& pres, const Poly& g, const DPoly& p);
// Inverse of the above on degree-zero elements (requires rs != 0).
DPoly element_to_d_coords(const Presentation& pres, const Poly& g, const Element& x);

// sigma^i on degree-zero elements, i >= 0, where sigma(h) = r h - gamma and
// sigma(a) = s a - f(h); computed through d * p = sigma(p) * d.
Element sigma_apply(const Presentation& pres, const Element& p, long i);

// --- generalized Weyl algebra view ------------------------------------------

// Graded component i carried as a degree-zero element p_i, meaning
// p_i * u^i for i > 0 and p_i * d^{-i} for i < 0.
struct GwaView {
    std::map<long, Element> components;
    Scalar sigma_r, sigma_s;
};

GwaView to_gwa_view(const Presentation& pres, const Element& x);
Element from_gwa_view(const Presentation& pres, const GwaView& view);

// --- morphisms ---------------------------------------------------------------

// Images of the generators (d, u, h) in a target presentation.
struct MorphismImages {
    Element d_img, u_img, h_img;

    const Element& of(Gen g) const {
        switch (g) {
        case Gen::d: return d_img;
        case Gen::u: return u_img;
        default: return h_img;
        }
    }
    friend bool operator==(const MorphismImages&, const MorphismImages&) = default;
};

MorphismImages identity_images();

// Substitutes generator images into each PBW monomial of x and normalizes
// in the target presentation.
Element apply_morphism(const Presentation& src, const Presentation& dst,
                       const MorphismImages& images, const Element& x);

struct MorphismCheck {
    bool ok = false;
    // Residuals of the three defining relations under the images.
    std::array<Element, 3> residuals;
    const Element* witness() const; // first nonzero residual, or nullptr
};

// true iff the images annihilate all three defining relations of src.
MorphismCheck check_morphism(const Presentation& src, const Presentation& dst,
                             const MorphismImages& images);

// The antiautomorphism interchanging u and d and fixing h:
// omega(u^a h^b d^c) = u^c h^b d^a.
Element apply_antiauto(const Presentation& pres, const Element& x);

// --- gamma reduction (r != 1) -------------------------------------------------

// L(f, r, s, gamma) ~ L(f~, r, s, 0) with f~(X) = f((X + gamma)/(r - 1)),
// via h |-> (h + gamma)/(r - 1) forward and h |-> (r - 1) h - gamma back.
struct GammaReduction {
    Presentation reduced;
    MorphismImages forward;  // images of the original generators in `reduced`
    MorphismImages backward; // images of the reduced generators in the original
};

GammaReduction gamma_reduce(const Presentation& pres);

} // namespace gdua
