#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gdua/errors.hpp"

namespace gdua {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Exact ground-field element: either a rational or a + b*sqrt(D) in a
// quadratic extension.  D == 0 marks a plain rational (then b == 0);
// otherwise D is a square-free integer, not 0 or 1, and b != 0.  A value
// whose b-part cancels to zero is demoted back to a rational, so values
// from different extensions never compare equal and never mix silently.
class Scalar {
public:
    Scalar() : a_(0) {}
    Scalar(long long n) : a_(n) {}
    explicit Scalar(BigRat q) : a_(std::move(q)) {}
    Scalar(long long num, long long den);

    static Scalar rational(BigRat q) { return Scalar(std::move(q)); }
    // Validates that d is square-free and not 0 or 1.
    static Scalar quadratic(BigRat a, BigRat b, long long d);

    bool is_rational() const { return d_ == 0; }
    // 0 for rationals, the square-free D otherwise.
    long long extension_d() const { return d_; }
    const BigRat& a_part() const { return a_; }
    const BigRat& b_part() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_one() const { return d_ == 0 && a_ == 1; }

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend Scalar operator/(const Scalar& x, const Scalar& y);
    Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
    Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
    Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

    Scalar inverse() const;
    Scalar pow(long long e) const;
    // Galois conjugate a - b*sqrt(D); identity on rationals.
    Scalar conj() const;
    // Field norm a^2 - D*b^2; for a rational x this is x^2.
    BigRat norm() const { return a_ * a_ - BigRat(d_) * b_ * b_; }
    BigRat trace() const { return 2 * a_; }

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
    // Total order for use as a map key; not a numeric order across extensions.
    friend bool operator<(const Scalar& x, const Scalar& y);

    // Effective extension for a binary operation; throws IncompatibleField
    // when both sides are quadratic over different D.
    static long long common_field(const Scalar& x, const Scalar& y);

private:
    BigRat a_, b_;
    long long d_ = 0;

    static Scalar make(BigRat a, BigRat b, long long d);
};

// Decides membership in {roots of unity} for field elements of degree <= 2:
// the minimal polynomial must be one of the cyclotomics X-1, X+1, X^2+X+1,
// X^2+1, X^2-X+1.  Throws ZeroInput on 0.
bool is_root_of_unity(const Scalar& x);
// Order of x as a root of unity (1, 2, 3, 4 or 6), or nullopt.
std::optional<int> root_of_unity_order(const Scalar& x);

struct TauEpsilon {
    long long tau = 0;
    long long epsilon = 0;
    friend bool operator==(const TauEpsilon&, const TauEpsilon&) = default;
};

// Multiplicative dependence of s on r: the minimal i > 0 with s^i = r^j
// together with the matching j, or (0, 0) when none exists.  Over Q the
// question reduces to prime-valuation lattices; over Q(sqrt(D)) the field
// norms cut the candidates down to a rank-<=1 lattice verified exactly.
// Only the real-quadratic unit case (|N(r)| = |N(s)| = 1) needs a bounded
// exhaustive search, which reports nullopt (undecided) past `bound`.
// Throws ZeroInput and RootOfUnityInput on violated preconditions.
std::optional<TauEpsilon> mult_dependence(const Scalar& r, const Scalar& s,
                                          long long bound = 64);

// Exact square root of a rational as a Scalar, e.g. sqrt(12) = 2*sqrt(3),
// sqrt(9/4) = 3/2, sqrt(-3) in Q(sqrt(-3)).
Scalar sqrt_of_rational(const BigRat& x);

// All roots of unity z in the working field (Q when field_d == 0) with
// z^n = 1.  Complete for degree <= 2: only D = -1 and D = -3 contribute
// anything beyond {1, -1}.
std::vector<Scalar> roots_of_unity_dividing(long long n, long long field_d);

} // namespace gdua
