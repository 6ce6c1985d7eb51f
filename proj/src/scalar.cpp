#include "gdua/scalar.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <map>
#include <random>

namespace gdua {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::gcd;
using boost::multiprecision::numerator;

bool is_probable_prime(const BigInt& n) {
    if (n < 2) return false;
    return boost::multiprecision::miller_rabin_test(n, 32);
}

BigInt pollard_rho(const BigInt& n) {
    // n odd composite, not a prime power of small primes.
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL + static_cast<unsigned long long>(n % 1000003));
    while (true) {
        BigInt c = BigInt(rng() % 1000) + 1;
        BigInt x = BigInt(rng() % 1000) + 2, y = x, d = 1;
        auto step = [&](const BigInt& v) { return (v * v + c) % n; };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            d = gcd(abs(x - y), n);
        }
        if (d != n) return d;
    }
}

void factor_into(BigInt n, std::map<BigInt, long long>& out, long long mult) {
    if (n <= 1) return;
    for (long long p : {2, 3, 5, 7, 11, 13}) {
        while (n % p == 0) {
            out[p] += mult;
            n /= p;
        }
    }
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out[n] += mult;
        return;
    }
    // Trial division covers everything at desk scale; rho is the fallback.
    for (BigInt p = 17; p * p <= n && p < 1000000; p += 2) {
        while (n % p == 0) {
            out[p] += mult;
            n /= p;
        }
        if (is_probable_prime(n)) break;
    }
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out[n] += mult;
        return;
    }
    BigInt d = pollard_rho(n);
    factor_into(d, out, mult);
    factor_into(n / d, out, mult);
}

// Prime -> exponent map of a positive rational (negative exponents from the
// denominator).
std::map<BigInt, long long> valuations(const BigRat& q) {
    std::map<BigInt, long long> out;
    factor_into(numerator(q), out, 1);
    factor_into(denominator(q), out, -1);
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0)
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

bool is_squarefree(long long d) {
    std::map<BigInt, long long> fac;
    factor_into(BigInt(d < 0 ? -d : d), fac, 1);
    for (const auto& [p, e] : fac)
        if (e > 1) return false;
    return true;
}

} // namespace

Scalar::Scalar(long long num, long long den) : a_(BigRat(num, den)) {
    if (den == 0) throw Error(Errc::division_by_zero, "rational with zero denominator");
}

Scalar Scalar::make(BigRat a, BigRat b, long long d) {
    Scalar s;
    s.a_ = std::move(a);
    if (b == 0 || d == 0) {
        s.b_ = 0;
        s.d_ = 0;
    } else {
        s.b_ = std::move(b);
        s.d_ = d;
    }
    return s;
}

Scalar Scalar::quadratic(BigRat a, BigRat b, long long d) {
    if (d == 0 || d == 1)
        throw Error(Errc::incompatible_field, "extension discriminant must not be 0 or 1");
    if (!is_squarefree(d))
        throw Error(Errc::incompatible_field, "extension discriminant must be square-free");
    return make(std::move(a), std::move(b), d);
}

long long Scalar::common_field(const Scalar& x, const Scalar& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0) return x.d_;
    if (x.d_ != y.d_)
        throw Error(Errc::incompatible_field,
                    "cannot mix sqrt(" + std::to_string(x.d_) + ") with sqrt(" +
                        std::to_string(y.d_) + ")");
    return x.d_;
}

Scalar Scalar::operator-() const { return make(-a_, -b_, d_); }

Scalar operator+(const Scalar& x, const Scalar& y) {
    long long d = Scalar::common_field(x, y);
    return Scalar::make(x.a_ + y.a_, x.b_ + y.b_, d);
}

Scalar operator-(const Scalar& x, const Scalar& y) {
    long long d = Scalar::common_field(x, y);
    return Scalar::make(x.a_ - y.a_, x.b_ - y.b_, d);
}

Scalar operator*(const Scalar& x, const Scalar& y) {
    long long d = Scalar::common_field(x, y);
    return Scalar::make(x.a_ * y.a_ + BigRat(d) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, d);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(Errc::division_by_zero, "division by zero");
    if (d_ == 0) return Scalar(BigRat(1) / a_);
    BigRat n = norm(); // nonzero: D square-free, so a^2 = D b^2 has no solution
    return make(a_ / n, -b_ / n, d_);
}

Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

Scalar Scalar::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar base = *this, acc = Scalar(1);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Scalar Scalar::conj() const { return make(a_, -b_, d_); }

bool operator<(const Scalar& x, const Scalar& y) {
    if (x.d_ != y.d_) return x.d_ < y.d_;
    if (x.a_ != y.a_) return x.a_ < y.a_;
    return x.b_ < y.b_;
}

std::optional<int> root_of_unity_order(const Scalar& x) {
    if (x.is_zero()) throw Error(Errc::zero_input, "0 is not a root of unity candidate");
    if (x.is_rational()) {
        if (x.a_part() == 1) return 1;
        if (x.a_part() == -1) return 2;
        return std::nullopt;
    }
    // Minimal polynomial X^2 - tX + n; cyclotomic iff (t, n) matches
    // Phi_3 = X^2+X+1, Phi_4 = X^2+1, Phi_6 = X^2-X+1.
    BigRat t = x.trace(), n = x.norm();
    if (n != 1) return std::nullopt;
    if (t == -1) return 3;
    if (t == 0) return 4;
    if (t == 1) return 6;
    return std::nullopt;
}

bool is_root_of_unity(const Scalar& x) { return root_of_unity_order(x).has_value(); }

namespace {

struct Lattice {
    enum Kind { trivial, rank_one, rank_two } kind = trivial;
    long long i0 = 0, j0 = 0; // generator when rank_one
};

// Relation lattice {(i, j) : ps^i = pr^j} of two positive rationals, via
// prime valuations.
Lattice valuation_lattice(const BigRat& ps, const BigRat& pr) {
    auto b = valuations(ps), a = valuations(pr);
    if (a.empty() && b.empty()) return {Lattice::rank_two, 0, 0};
    if (a.empty()) return {Lattice::rank_one, 0, 1};
    if (b.empty()) return {Lattice::rank_one, 1, 0};
    // Need b = (c/d) * a as integer vectors; otherwise only (0,0) solves.
    const auto& [p0, a0] = *a.begin();
    long long bp0 = b.count(p0) ? b.at(p0) : 0;
    BigInt c = bp0, d = a0;
    BigInt g = gcd(abs(c), abs(d));
    if (g != 0) {
        c /= g;
        d /= g;
    }
    if (d < 0) {
        c = -c;
        d = -d;
    }
    if (c == 0) return {Lattice::trivial, 0, 0}; // b has support outside a's or is zero
    std::map<BigInt, long long> keys = a;
    for (const auto& [p, e] : b) keys[p] += 0;
    for (const auto& [p, unused] : keys) {
        long long ap = a.count(p) ? a.at(p) : 0;
        long long bp = b.count(p) ? b.at(p) : 0;
        if (BigInt(bp) * d != c * BigInt(ap)) return {Lattice::trivial, 0, 0};
    }
    return {Lattice::rank_one, d.convert_to<long long>(), c.convert_to<long long>()};
}

} // namespace

std::optional<TauEpsilon> mult_dependence(const Scalar& r, const Scalar& s, long long bound) {
    if (r.is_zero() || s.is_zero())
        throw Error(Errc::zero_input, "mult_dependence requires nonzero inputs");
    if (is_root_of_unity(r))
        throw Error(Errc::root_of_unity_input, "r is a root of unity");
    long long d = Scalar::common_field(r, s);

    BigRat pr, ps;
    if (d == 0) {
        pr = abs(r.a_part());
        ps = abs(s.a_part());
    } else {
        pr = abs(r.norm());
        ps = abs(s.norm());
    }
    Lattice lat = valuation_lattice(ps, pr);
    switch (lat.kind) {
    case Lattice::trivial:
        return TauEpsilon{0, 0};
    case Lattice::rank_two: {
        // Both norms are +-1.  Only reachable for real quadratic units (over
        // Q and imaginary fields that would force r to be a root of unity).
        std::map<Scalar, long long> r_powers;
        Scalar rp = Scalar(1);
        r_powers[rp] = 0;
        Scalar rinv = r.inverse();
        Scalar pos = Scalar(1), neg = Scalar(1);
        for (long long j = 1; j <= bound; ++j) {
            pos = pos * r;
            neg = neg * rinv;
            r_powers.emplace(pos, j);
            r_powers.emplace(neg, -j);
        }
        Scalar sp = Scalar(1);
        for (long long i = 1; i <= bound; ++i) {
            sp = sp * s;
            auto it = r_powers.find(sp);
            if (it != r_powers.end()) return TauEpsilon{i, it->second};
        }
        return std::nullopt; // undecided beyond the search bound
    }
    case Lattice::rank_one: {
        if (lat.i0 == 0) return TauEpsilon{0, 0};
        Scalar zeta = s.pow(lat.i0) * r.pow(-lat.j0);
        auto n = root_of_unity_order(zeta);
        if (!n) return TauEpsilon{0, 0};
        return TauEpsilon{*n * lat.i0, *n * lat.j0};
    }
    }
    return std::nullopt;
}

Scalar sqrt_of_rational(const BigRat& x) {
    if (x == 0) return Scalar(0);
    // sqrt(p/q) = sqrt(p*q)/q; split p*q into square * square-free.
    BigInt m = numerator(x) * denominator(x);
    bool neg = m < 0;
    std::map<BigInt, long long> fac;
    factor_into(abs(m), fac, 1);
    BigInt square_root = 1, squarefree = neg ? -1 : 1;
    for (const auto& [p, e] : fac) {
        for (long long i = 0; i < e / 2; ++i) square_root *= p;
        if (e % 2) squarefree *= p;
    }
    BigRat coef = BigRat(square_root) / denominator(x);
    if (squarefree == 1) return Scalar(coef);
    return Scalar::quadratic(0, coef, squarefree.convert_to<long long>());
}

std::vector<Scalar> roots_of_unity_dividing(long long n, long long field_d) {
    std::vector<Scalar> out{Scalar(1)};
    if (n % 2 == 0) out.push_back(Scalar(-1));
    if (field_d == -1 && n % 4 == 0) {
        out.push_back(Scalar::quadratic(0, 1, -1));
        out.push_back(Scalar::quadratic(0, -1, -1));
    }
    if (field_d == -3) {
        if (n % 3 == 0) {
            out.push_back(Scalar::quadratic(BigRat(-1, 2), BigRat(1, 2), -3));
            out.push_back(Scalar::quadratic(BigRat(-1, 2), BigRat(-1, 2), -3));
        }
        if (n % 6 == 0) {
            out.push_back(Scalar::quadratic(BigRat(1, 2), BigRat(1, 2), -3));
            out.push_back(Scalar::quadratic(BigRat(1, 2), BigRat(-1, 2), -3));
        }
    }
    return out;
}

} // namespace gdua
