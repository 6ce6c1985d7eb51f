#pragma once

#include <optional>
#include <string>

#include "gdua/core.hpp"

namespace gdua {

// Conformality data: existence of g with f(X) = s g(X) - g(rX - gamma).
// The data is reported in the normalized frame: for gamma != 0 and r != 1 the
// presentation is reduced to gamma = 0 first (normalized_f is then f-tilde),
// otherwise the frame is the original one.  When conformal, g solves the
// normalized equation and k = ud - g(h) satisfies sigma(k) = s k.
struct ConformalData {
    bool conformal = false;
    std::optional<Poly> g;
    Poly normalized_f;
    bool gamma_reduced = false;
    std::optional<Element> k_def;
};

ConformalData conformal(const Presentation& pres);

// tau = min{ i > 0 : s^i = r^j }, epsilon the matching j (r^epsilon = s^tau);
// (0, 0) when r and s are multiplicatively independent.  nullopt = undecided
// (real-quadratic unit case past the search bound).
std::optional<TauEpsilon> tau_epsilon(const Presentation& pres, long long bound = 64);

enum class CenterTag { scalars_only, polynomial_in_generator };

// Z(L) is K when tau = 0 or epsilon > 0, and K[h^{-epsilon} k^tau] when
// tau > 0 and epsilon <= 0.  The generator is materialized in the original
// presentation's coordinates.
struct CenterDescription {
    CenterTag tag = CenterTag::scalars_only;
    std::optional<Element> generator;
    TauEpsilon te;
};

CenterDescription center(const Presentation& pres, long long bound = 64);

// Exhaustive self-check for center(): scans the monomials h^i k^j with
// i, j <= degree in the reduced frame and confirms that the ones commuting
// with d, u and h are exactly the reported lattice points.
bool center_scan_consistent(const Presentation& pres, long degree, long long bound = 64);

// Common preamble of the classification operations: gamma-reduce, require
// conformality, and decide tau/epsilon.
struct ReducedConformal {
    GammaReduction red;
    Poly g;    // s g(X) - g(rX) = f~(X) in the reduced frame
    Element k; // ud - g(h), reduced frame
    TauEpsilon te;
};

ReducedConformal reduce_and_require_conformal(const Presentation& pres, long long bound = 64);

// Normality decision for t: t is normal iff it is Z-homogeneous and both
// eigenvalue systems  t d = lambda d t  and  t u = mu u t  are consistent.
// On success the exact eigenvalues are returned; on failure the witness
// describes the obstruction.
struct NormalityResult {
    bool normal = false;
    std::optional<Scalar> lambda, mu;
    std::string witness_kind;   // "inhomogeneous" | "lambda_inconsistent" | "mu_inconsistent"
    std::string witness_detail;
};

NormalityResult is_normal(const Presentation& pres, const Element& t, long long bound = 64);

// Factorization of a normal element as scalar * h^a k^b q * x^n (or y^n),
// in the gamma-reduced frame, with q not a multiple of h or k and normalized
// to anchor coefficient 1.  q_shape records which classification shape q has:
//   'a' q scalar (tau = 0), 'b' central with nonzero constant term in
//   h^{-eps} k^tau (tau > 0, eps <= 0), 'c' sum d_i (h^eps)^{l-i} (k^tau)^i.
struct NormalClassification {
    Scalar scalar_part;
    long h_power = 0, k_power = 0;
    DPoly q;
    char q_shape = 'a';
    enum class Ladder { none, x_power, y_power } ladder = Ladder::none;
    long ladder_n = 0;
};

NormalClassification classify_normal(const Presentation& pres, const Element& t,
                                      long long bound = 64);

// Structural criterion for x^n (equivalently y^n) to be normal, against the
// gamma-reduced f: f = 0, or f = mu (s - r^m) X^m with epsilon = tau m and
// tau | n.
bool xn_normal_structural(const Presentation& pres, long n, long long bound = 64);

} // namespace gdua
