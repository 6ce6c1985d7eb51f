#pragma once

#include "gdua/invariants.hpp"

namespace gdua {

// A verified algebra automorphism: generator images together with the images
// of an exact inverse.  Construction checks that both triples preserve the
// defining relations and compose to the identity on the generators.
struct Automorphism {
    Presentation pres;
    MorphismImages images;
    MorphismImages inverse_images;
    std::string label;
};

Automorphism make_automorphism(const Presentation& pres, MorphismImages images,
                               MorphismImages inverse_images, std::string label);
Automorphism identity_automorphism(const Presentation& pres);

// phi_{(alpha, beta, gamma)} (f = 0, three parameters) or phi_{(alpha, beta)}
// (f != 0, alpha^rho = 1): h -> alpha h, x -> beta x, and y -> gamma y or
// y -> beta^{-1} alpha^{deg f} y.  For gamma != 0 presentations the map is
// conjugated through the gamma reduction.
Automorphism make_torus(const Presentation& pres, const std::vector<Scalar>& params,
                        long long bound = 64);

// psi+_{(mu, mu', nu, eta)}: x -> mu x, y -> mu' y, h -> nu h + eta k^tau.
// Needs epsilon = 1 and constant f = beta, with beta (mu mu' - 1) = 0.
Automorphism make_psi_plus(const Presentation& pres, const Scalar& mu, const Scalar& mu_prime,
                           const Scalar& nu, const Scalar& eta, long long bound = 64);

// psi-_{(mu, nu)}: x -> mu y, y -> (r alpha nu / mu(s-r)) x, h -> nu k.
// Needs tau = 1, epsilon = -1 and f = alpha X + beta with alpha != 0,
// beta (r alpha nu/(s-r) - 1) = 0.
Automorphism make_psi_minus(const Presentation& pres, const Scalar& mu, const Scalar& nu,
                            long long bound = 64);

// The order-3 map x -> y, y -> h, h -> x (f = 0, s = r^{-1}).
Automorphism make_cyclic_phi(const Presentation& pres, long long bound = 64);

Element apply(const Automorphism& a, const Element& x);
// compose(a, b).apply == a.apply after b.apply.
Automorphism compose(const Automorphism& a, const Automorphism& b);
Automorphism invert(const Automorphism& a);
bool same_automorphism(const Automorphism& a, const Automorphism& b);

// Case tags of the automorphism-group classification.
enum class AutCase { a, b, c, d, e, f };
const char* aut_case_name(AutCase c);

struct GeneratorSchema {
    std::string kind; // torus | psi_plus | psi_minus | cyclic_phi | torus_du | torus_du_hyperbolic | swap_du
    std::vector<std::string> params;
    std::string constraint;
    // Finite solution set of alpha^rho = 1 in the working field (rho > 0).
    std::vector<Scalar> alpha_roots;
};

struct GroupDescription {
    explicit GroupDescription(Presentation p) : pres(std::move(p)) {}

    AutCase case_tag = AutCase::f;
    std::string clause; // clause letter of the classification that produced this
    std::string symbolic_group;
    std::optional<long long> rho;
    TauEpsilon te;
    std::vector<GeneratorSchema> generators;
    // Down-up cases whose automorphism group rests on cited prime-ideal
    // results rather than the conformal classification.
    bool externally_justified = false;
    bool down_up = false;
    Presentation pres;
};

// Aut_K(L) for conformal Noetherian L(f, r, s, gamma) with r not a root of
// unity, by clause:
//   (a) (K*)^3 x| Z/3Z   f = 0, s = r^{-1}
//   (b) K x| (K*)^3      f = 0, s^tau = r
//   (c) K x| (K*)^2      deg f = 0, s^tau = r
//   (d) (K*)^2 x| Z/2Z   deg f = 1, s = r^{-1}, f(gamma/(r-1)) = 0
//   (e) K* x| Z/2Z       deg f = 1, s = r^{-1}, f(gamma/(r-1)) != 0
//   (f) H                otherwise, rho taken against the reduced f
GroupDescription classify_aut_group(const Presentation& pres, long long bound = 64);

// Aut_K(A(alpha, beta, gamma)) for beta != 0 with at least one root of
// X^2 - alpha X - beta not a root of unity:
//   (a) gamma = 0, beta = -1: (K*)^2 x| Z/2Z    (b) gamma = 0: (K*)^2
//   (c) gamma != 0, beta = -1: K* x| Z/2Z       (d) gamma != 0: K*
GroupDescription classify_downup(const Scalar& alpha, const Scalar& beta, const Scalar& gamma,
                                 long long bound = 64);

// Concrete verified automorphisms instantiating each generator schema at the
// given sample parameters.
std::vector<Automorphism> enumerate_generators(const GroupDescription& desc,
                                               const std::vector<Scalar>& sample_params,
                                               long long bound = 64);

// Bounded search over candidate image shapes (h -> lambda h | lambda k |
// lambda x | lambda y | d0 h + d1 k^tau; x, y -> scalar * monomial of total
// degree <= max_degree).  Returns every triple that preserves the relations.
std::vector<MorphismImages> search_image_shapes(const Presentation& pres, long max_degree,
                                                const std::vector<Scalar>& samples,
                                                long long bound = 64);

// Whether the images match one of the classified generator families of the
// description (up to the free parameters and their constraints).
bool in_classified_family(const GroupDescription& desc, const MorphismImages& images,
                          long long bound = 64);

// Exact invertibility certificate for a relation-preserving triple: do d, u
// and h all lie in the linear span of products of the images of length at
// most max_len?  If so the endomorphism is surjective, and a surjective
// endomorphism of the Noetherian algebra L is bijective.  A negative answer
// is only a bounded verdict.
bool generators_in_image_span(const Presentation& pres, const MorphismImages& images,
                              int max_len = 4);

} // namespace gdua
