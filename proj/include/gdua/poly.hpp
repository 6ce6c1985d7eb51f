#pragma once

#include <limits>
#include <vector>

#include "gdua/scalar.hpp"

namespace gdua {

// Univariate polynomial over Scalar, dense with trailing zeros trimmed.
// deg(0) is the distinguished value kNegInfinity.
class Poly {
public:
    static constexpr int kNegInfinity = std::numeric_limits<int>::min();

    Poly() = default;
    // Coefficients low-to-high; trailing zeros are trimmed.
    explicit Poly(std::vector<Scalar> coeffs);
    static Poly constant(Scalar c);
    static Poly x();
    // c * X^n
    static Poly monomial(Scalar c, int n);

    int degree() const { return coeffs_.empty() ? kNegInfinity : int(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Scalar coeff(int i) const;
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    Scalar leading() const;

    std::vector<int> support() const;

    friend Poly operator+(const Poly& p, const Poly& q);
    friend Poly operator-(const Poly& p, const Poly& q);
    friend Poly operator*(const Poly& p, const Poly& q);
    Poly operator-() const;
    Poly scaled(const Scalar& c) const;
    friend bool operator==(const Poly& p, const Poly& q) { return p.coeffs_ == q.coeffs_; }
    friend bool operator!=(const Poly& p, const Poly& q) { return !(p == q); }

    Scalar eval(const Scalar& x) const;
    // p(lam*X + mu), exact.
    Poly affine_compose(const Scalar& lam, const Scalar& mu) const;

    // Extension discriminant shared by all coefficients (0 when rational);
    // mixed extensions throw IncompatibleField at construction.
    long long field_d() const { return field_d_; }

private:
    std::vector<Scalar> coeffs_;
    long long field_d_ = 0;
    void trim_();
};

// rho = gcd{ deg(f) - i : i in supp(f) } with the convention that a set
// equal to {0} gives 0.  Undefined (ZeroPolynomial) for f = 0.
long long rho(const Poly& f);

} // namespace gdua
