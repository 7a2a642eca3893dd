// The order-3 ring automorphism of F2[a,b] with a -> b, b -> a+b, together
// with orbits, the orbit-sum (Reynolds) operator and degree-wise invariants.
//
// The group order 3 is invertible in F2 and equals 1, so the averaging
// operator needs no 1/3 factor: it is the plain sum over the three iterates.

#pragma once

#include <mutex>
#include <unordered_map>
#include <vector>

#include "klein/bitmatrix.hpp"
#include "klein/poly.hpp"

namespace klein {

/// Ring endomorphism of F2[a,b] given by the images of the two generators.
struct RingEndo {
    BiPoly image_a;
    BiPoly image_b;

    BiPoly apply(const BiPoly& f) const {
        int max_a = 0, max_b = 0;
        for (const auto& [n, p] : f.components())
            for (int i = 0; i <= n; ++i)
                if (p.bit(i)) {
                    max_a = std::max(max_a, i);
                    max_b = std::max(max_b, n - i);
                }
        std::vector<BiPoly> pow_a(static_cast<std::size_t>(max_a) + 1), pow_b(static_cast<std::size_t>(max_b) + 1);
        pow_a[0] = pow_b[0] = BiPoly::one();
        for (int e = 1; e <= max_a; ++e) pow_a[static_cast<std::size_t>(e)] = pow_a[static_cast<std::size_t>(e - 1)] * image_a;
        for (int e = 1; e <= max_b; ++e) pow_b[static_cast<std::size_t>(e)] = pow_b[static_cast<std::size_t>(e - 1)] * image_b;
        BiPoly r;
        for (const auto& [n, p] : f.components())
            for (int i = 0; i <= n; ++i)
                if (p.bit(i)) r += pow_a[static_cast<std::size_t>(i)] * pow_b[static_cast<std::size_t>(n - i)];
        return r;
    }
};

inline RingEndo phi_endo() { return {BiPoly(HomogPoly::var_b()), BiPoly(HomogPoly::var_a()) + BiPoly(HomogPoly::var_b())}; }

namespace detail {

// Image of the degree-d monomial basis under the automorphism:
// a^i b^j maps to b^i (a+b)^j, i.e. the sum of a^k b^(d-k) over k submask j.
inline std::vector<HomogPoly> build_phi_rows(int d) {
    std::vector<HomogPoly> rows;
    rows.reserve(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        const unsigned j = static_cast<unsigned>(d - i);
        HomogPoly img(d);
        unsigned k = j;
        while (true) {
            img.set(static_cast<int>(k));
            if (k == 0) break;
            k = (k - 1) & j;
        }
        rows.push_back(img);
    }
    return rows;
}

// Per-degree matrices are shared across threads; build-once under a lock.
inline const std::vector<HomogPoly>& phi_rows(int d) {
    static std::mutex mu;
    static std::unordered_map<int, std::vector<HomogPoly>> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, build_phi_rows(d)).first;
    return it->second;
}

}  // namespace detail

/// The fixed generator of the C3-action, specialized to a matrix action on
/// each graded piece.
inline HomogPoly phi(const HomogPoly& x) {
    const auto& rows = detail::phi_rows(x.degree());
    HomogPoly r(x.degree());
    for (int i = 0; i <= x.degree(); ++i)
        if (x.bit(i)) r += rows[static_cast<std::size_t>(i)];
    return r;
}

inline BiPoly phi(const BiPoly& f) {
    BiPoly r;
    for (const auto& [d, p] : f.components()) r += phi(p);
    return r;
}

inline HomogPoly phi_sq(const HomogPoly& x) { return phi(phi(x)); }
inline BiPoly phi_sq(const BiPoly& f) { return phi(phi(f)); }

/// The orbit {x, phi(x), phi^2(x)} of a nonzero homogeneous element,
/// deduplicated; its size is 1 (fixed point) or 3.
struct Orbit {
    HomogPoly base;
    std::vector<HomogPoly> elements;

    bool singleton() const { return elements.size() == 1; }
};

inline Orbit orbit(const HomogPoly& x) {
    if (x.is_zero()) throw std::invalid_argument("orbit of the zero polynomial");
    Orbit s{x, {x}};
    const HomogPoly y = phi(x);
    if (y != x) {
        s.elements.push_back(y);
        s.elements.push_back(phi(y));
    }
    return s;
}

inline HomogPoly orbit_sum(const HomogPoly& x) {
    const HomogPoly y = phi(x);
    return x + y + phi(y);
}

/// Sum over the three group elements; in characteristic 2 the 1/3 averaging
/// factor is 1, so this is already the projection onto invariants.
inline BiPoly reynolds(const BiPoly& f) {
    const BiPoly y = phi(f);
    return f + y + phi(y);
}

inline HomogPoly reynolds(const HomogPoly& x) { return orbit_sum(x); }

/// Reduced basis of the degree-d invariants, as the kernel of phi + id.
inline BitMatrix invariants_of_degree(int d) {
    if (d < 0) throw std::invalid_argument("negative degree");
    const auto& rows = detail::phi_rows(d);
    BitMatrix images(d + 1);
    for (int i = 0; i <= d; ++i) {
        HomogPoly r = rows[static_cast<std::size_t>(i)];
        r.flip(i);  // phi + id
        images.add_row(r);
    }
    return BitMatrix::kernel_of(std::move(images));
}

}  // namespace klein
