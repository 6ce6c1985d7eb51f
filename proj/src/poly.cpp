#include "gdua/poly.hpp"

#include <numeric>

namespace gdua {

void Poly::trim_() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    field_d_ = 0;
    for (const auto& c : coeffs_) {
        if (!c.is_rational()) {
            if (field_d_ != 0 && field_d_ != c.extension_d())
                throw Error(Errc::incompatible_field, "polynomial mixes quadratic extensions");
            field_d_ = c.extension_d();
        }
    }
}

Poly::Poly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim_(); }

Poly Poly::constant(Scalar c) { return Poly({std::move(c)}); }

Poly Poly::x() { return Poly({Scalar(0), Scalar(1)}); }

Poly Poly::monomial(Scalar c, int n) {
    std::vector<Scalar> v(n + 1);
    v[n] = std::move(c);
    return Poly(std::move(v));
}

Scalar Poly::coeff(int i) const {
    if (i < 0 || i >= int(coeffs_.size())) return Scalar(0);
    return coeffs_[i];
}

Scalar Poly::leading() const { return coeffs_.empty() ? Scalar(0) : coeffs_.back(); }

std::vector<int> Poly::support() const {
    std::vector<int> out;
    for (int i = 0; i < int(coeffs_.size()); ++i)
        if (!coeffs_[i].is_zero()) out.push_back(i);
    return out;
}

Poly operator+(const Poly& p, const Poly& q) {
    std::vector<Scalar> v(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = p.coeff(int(i)) + q.coeff(int(i));
    return Poly(std::move(v));
}

Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }

Poly Poly::operator-() const {
    std::vector<Scalar> v = coeffs_;
    for (auto& c : v) c = -c;
    return Poly(std::move(v));
}

Poly Poly::scaled(const Scalar& c) const {
    std::vector<Scalar> v = coeffs_;
    for (auto& x : v) x = x * c;
    return Poly(std::move(v));
}

Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Poly();
    std::vector<Scalar> v(p.coeffs_.size() + q.coeffs_.size() - 1);
    for (size_t i = 0; i < p.coeffs_.size(); ++i)
        for (size_t j = 0; j < q.coeffs_.size(); ++j)
            v[i + j] += p.coeffs_[i] * q.coeffs_[j];
    return Poly(std::move(v));
}

Scalar Poly::eval(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::affine_compose(const Scalar& lam, const Scalar& mu) const {
    // Horner in the polynomial ring.
    Poly arg({mu, lam});
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * arg + Poly::constant(*it);
    return acc;
}

long long rho(const Poly& f) {
    if (f.is_zero()) throw Error(Errc::zero_polynomial, "rho is undefined for f = 0");
    long long g = 0;
    for (int i : f.support()) g = std::gcd(g, static_cast<long long>(f.degree() - i));
    return g;
}

} // namespace gdua
