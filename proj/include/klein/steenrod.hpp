// The total Steenrod square on F2[a,b] (the ring map a -> a+a^2, b -> b+b^2),
// its graded pieces, and the Kameko maps.
//
// Graded pieces are expanded monomial-wise: Sq(a^i b^j) = a^i(1+a)^i b^j(1+b)^j,
// and the binomial coefficients mod 2 are submask tests (Lucas), so each
// monomial contributes a^(i+s) b^(j+t) exactly for s submask i, t submask j.

#pragma once

#include <atomic>

#include "klein/poly.hpp"

namespace klein {

namespace detail {

// Self-test hook: flips one bit of the expansion of Sq(a) so that negative
// controls can watch the Cartan identity fail.  Never set outside selftest.
inline std::atomic<bool> corrupt_total_sq{false};

}  // namespace detail

/// Sq of a single monomial a^i b^(n-i).
inline BiPoly total_sq_monomial(int a_exp, int degree) {
    const unsigned i = static_cast<unsigned>(a_exp), j = static_cast<unsigned>(degree - a_exp);
    if (2 * degree > kMaxDegree) detail::degree_overflow(2 * degree);
    BiPoly r;
    unsigned s = i;
    while (true) {
        unsigned t = j;
        while (true) {
            r += HomogPoly::monomial(static_cast<int>(i + s), static_cast<int>(degree + s + t));
            if (t == 0) break;
            t = (t - 1) & j;
        }
        if (s == 0) break;
        s = (s - 1) & i;
    }
    if (detail::corrupt_total_sq.load(std::memory_order_relaxed) && i == 1 && j == 0)
        r += HomogPoly::monomial(3, 3);
    return r;
}

/// Total Steenrod square; a ring homomorphism, additive over monomials.
inline BiPoly total_sq(const BiPoly& f) {
    BiPoly r;
    for (const auto& [n, p] : f.components())
        for (int i = 0; i <= n; ++i)
            if (p.bit(i)) r += total_sq_monomial(i, n);
    return r;
}

inline BiPoly total_sq(const HomogPoly& f) { return total_sq(BiPoly(f)); }

/// Sq^k: the degree-(n+k) component of the total square of a degree-n
/// element.  Sq^0 is the identity, Sq^n is squaring, Sq^k = 0 for k > n.
inline HomogPoly sq_k(const HomogPoly& f, int k) {
    if (k < 0) throw std::invalid_argument("negative Steenrod index");
    const int n = f.degree();
    if (n + k > kMaxDegree) detail::degree_overflow(n + k);
    HomogPoly r(n + k);
    for (int ii = 0; ii <= n; ++ii) {
        if (!f.bit(ii)) continue;
        const unsigned i = static_cast<unsigned>(ii), j = static_cast<unsigned>(n - ii);
        unsigned s = i;
        while (true) {
            if (s <= static_cast<unsigned>(k)) {
                const unsigned t = static_cast<unsigned>(k) - s;
                if ((t & ~j) == 0) r.flip(static_cast<int>(i + s));
            }
            if (s == 0) break;
            s = (s - 1) & i;
        }
    }
    return r;
}

/// The four components of the unique decomposition
/// x = k1^2 + ka^2 a + kb^2 b + kab^2 ab.
struct KamekoSplit {
    BiPoly k1, ka, kb, kab;
};

/// Kameko maps, computed monomial-wise by exponent parity with halved
/// exponents.  Defined on all of F2[a,b]; on a homogeneous element of even
/// degree ka and kb vanish, on odd degree k1 and kab vanish.
inline KamekoSplit kameko(const BiPoly& x) {
    KamekoSplit r;
    for (const auto& [n, p] : x.components()) {
        for (int i = 0; i <= n; ++i) {
            if (!p.bit(i)) continue;
            const int j = n - i;
            if (i % 2 == 0 && j % 2 == 0)
                r.k1 += HomogPoly::monomial(i / 2, (i + j) / 2);
            else if (i % 2 == 1 && j % 2 == 0)
                r.ka += HomogPoly::monomial((i - 1) / 2, (i - 1 + j) / 2);
            else if (i % 2 == 0 && j % 2 == 1)
                r.kb += HomogPoly::monomial(i / 2, (i + j - 1) / 2);
            else
                r.kab += HomogPoly::monomial((i - 1) / 2, (i + j - 2) / 2);
        }
    }
    return r;
}

inline BiPoly kameko_reconstruct(const KamekoSplit& s) {
    const BiPoly a(HomogPoly::var_a()), b(HomogPoly::var_b());
    return s.k1.squared() + s.ka.squared() * a + s.kb.squared() * b + s.kab.squared() * (a * b);
}

/// The parity-adapted Kameko pair of a homogeneous element together with the
/// closed form of its first Steenrod square:
///   odd degree:  v = a x^2 + b y^2,  Sq^1(v) = a^2 x^2 + b^2 y^2,
///   even degree: v = x^2 + ab y^2,   Sq^1(v) = (a^2 b + a b^2) y^2.
struct Sq1Split {
    HomogPoly x;
    HomogPoly y;
    HomogPoly sq1_closed_form;
};

inline Sq1Split sq1_split(const HomogPoly& v) {
    const KamekoSplit s = kameko(BiPoly(v));
    const int n = v.degree();
    if (n % 2 == 1) {
        const int h = (n - 1) / 2;
        const HomogPoly x = s.ka.component(h), y = s.kb.component(h);
        const HomogPoly closed =
            HomogPoly::monomial(2, 2) * x.squared() + HomogPoly::monomial(0, 2) * y.squared();
        return {x, y, closed};
    }
    const HomogPoly x = s.k1.component(n / 2);
    HomogPoly y = n >= 2 ? s.kab.component(n / 2 - 1) : HomogPoly(0);
    if (n == 0) y = HomogPoly(0);
    HomogPoly e3(3);
    e3.set(1).set(2);  // a^2 b + a b^2
    return {x, y, e3 * y.squared()};
}

}  // namespace klein
