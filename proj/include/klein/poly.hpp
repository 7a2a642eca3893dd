// Exact arithmetic for F2[a,b], graded by total degree.
//
// A homogeneous element of degree n is a coefficient row c_0..c_n where
// bit i is the coefficient of a^i * b^(n-i).  Rows are packed into 64-bit
// words, so multiplication by b is free and multiplication by a is a shift.

#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace klein {

// Hard representation limit: one coefficient row fits in four words.
inline constexpr int kMaxDegree = 255;
// Default guard for user-facing entry points (parser, ideal generators).
inline constexpr int kDefaultDegreeCap = 64;
// Caps must leave room for degree-doubling operations (squaring, total Sq).
inline constexpr int kMaxDegreeCap = 127;

namespace detail {

using Words = std::array<std::uint64_t, 4>;

inline bool get_bit(const Words& w, int i) {
    return (w[static_cast<unsigned>(i) >> 6] >> (i & 63)) & 1u;
}

inline void set_bit(Words& w, int i) { w[static_cast<unsigned>(i) >> 6] |= std::uint64_t{1} << (i & 63); }

inline void flip_bit(Words& w, int i) { w[static_cast<unsigned>(i) >> 6] ^= std::uint64_t{1} << (i & 63); }

inline bool words_zero(const Words& w) { return (w[0] | w[1] | w[2] | w[3]) == 0; }

inline void xor_words(Words& a, const Words& b) {
    a[0] ^= b[0];
    a[1] ^= b[1];
    a[2] ^= b[2];
    a[3] ^= b[3];
}

inline Words shifted_left(const Words& w, int s) {
    Words r{};
    const int word = s >> 6, off = s & 63;
    for (int i = 3; i >= word; --i) {
        std::uint64_t v = w[i - word] << off;
        if (off != 0 && i - word - 1 >= 0) v |= w[i - word - 1] >> (64 - off);
        r[i] = v;
    }
    return r;
}

inline int lowest_bit(const Words& w) {
    for (int i = 0; i < 4; ++i)
        if (w[i] != 0) return 64 * i + std::countr_zero(w[i]);
    return -1;
}

inline int highest_bit(const Words& w) {
    for (int i = 3; i >= 0; --i)
        if (w[i] != 0) return 64 * i + 63 - std::countl_zero(w[i]);
    return -1;
}

inline int popcount(const Words& w) {
    return std::popcount(w[0]) + std::popcount(w[1]) + std::popcount(w[2]) + std::popcount(w[3]);
}

inline std::strong_ordering compare_words(const Words& a, const Words& b) {
    for (int i = 3; i >= 0; --i)
        if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
}

// Mask keeping bits 0..n.
inline Words low_mask(int n) {
    Words m{};
    for (int i = 0; i <= n >> 6; ++i)
        m[i] = (i == n >> 6 && (n & 63) != 63) ? (std::uint64_t{1} << ((n & 63) + 1)) - 1 : ~std::uint64_t{0};
    return m;
}

[[noreturn]] inline void degree_overflow(int degree) {
    throw std::out_of_range("degree " + std::to_string(degree) + " exceeds the representable maximum " +
                            std::to_string(kMaxDegree));
}

}  // namespace detail

/// Homogeneous element of F2[a,b]; the zero row of any degree is a valid value.
class HomogPoly {
public:
    HomogPoly() : degree_(0) {}

    explicit HomogPoly(int degree) : degree_(degree) {
        if (degree < 0 || degree > kMaxDegree) detail::degree_overflow(degree);
    }

    static HomogPoly monomial(int a_exp, int degree) {
        HomogPoly p(degree);
        if (a_exp < 0 || a_exp > degree) throw std::invalid_argument("monomial exponent out of range");
        detail::set_bit(p.bits_, a_exp);
        return p;
    }

    static HomogPoly one() { return monomial(0, 0); }
    static HomogPoly var_a() { return monomial(1, 1); }
    static HomogPoly var_b() { return monomial(0, 1); }

    int degree() const { return degree_; }
    bool is_zero() const { return detail::words_zero(bits_); }
    bool is_one() const { return degree_ == 0 && bit(0); }

    bool bit(int i) const { return i >= 0 && i <= degree_ && detail::get_bit(bits_, i); }

    HomogPoly& set(int i) {
        if (i < 0 || i > degree_) throw std::invalid_argument("coefficient index out of range");
        detail::set_bit(bits_, i);
        return *this;
    }

    HomogPoly& flip(int i) {
        if (i < 0 || i > degree_) throw std::invalid_argument("coefficient index out of range");
        detail::flip_bit(bits_, i);
        return *this;
    }

    // Multiplicity of the factor a (smallest a-exponent present); -1 on zero.
    int a_multiplicity() const { return detail::lowest_bit(bits_); }
    // Largest a-exponent present; -1 on zero.
    int top_a_exponent() const { return detail::highest_bit(bits_); }

    int term_count() const { return detail::popcount(bits_); }

    const detail::Words& words() const { return bits_; }

    static HomogPoly from_words(int degree, const detail::Words& w) {
        HomogPoly p(degree);
        p.bits_ = w;
        for (int i = 3; i > degree >> 6; --i) p.bits_[i] = 0;
        p.bits_[degree >> 6] &= detail::low_mask(degree)[degree >> 6];
        return p;
    }

    friend bool operator==(const HomogPoly&, const HomogPoly&) = default;

    friend std::strong_ordering operator<=>(const HomogPoly& x, const HomogPoly& y) {
        if (x.degree_ != y.degree_) return x.degree_ <=> y.degree_;
        return detail::compare_words(x.bits_, y.bits_);
    }

    HomogPoly operator+(const HomogPoly& o) const {
        if (degree_ != o.degree_) throw std::invalid_argument("adding homogeneous elements of different degrees");
        HomogPoly r(*this);
        detail::xor_words(r.bits_, o.bits_);
        return r;
    }

    HomogPoly& operator+=(const HomogPoly& o) { return *this = *this + o; }

    HomogPoly operator*(const HomogPoly& o) const {
        const int d = degree_ + o.degree_;
        if (d > kMaxDegree) detail::degree_overflow(d);
        HomogPoly r(d);
        // Carryless convolution of the two rows.
        for (int w = 0; w < 4; ++w) {
            std::uint64_t word = bits_[w];
            while (word != 0) {
                const int i = 64 * w + std::countr_zero(word);
                word &= word - 1;
                const detail::Words sh = detail::shifted_left(o.bits_, i);
                detail::xor_words(r.bits_, sh);
            }
        }
        return r;
    }

    // Frobenius square: every exponent doubles.
    HomogPoly squared() const {
        const int d = 2 * degree_;
        if (d > kMaxDegree) detail::degree_overflow(d);
        HomogPoly r(d);
        for (int w = 0; w < 4; ++w) {
            std::uint64_t word = bits_[w];
            while (word != 0) {
                const int i = 64 * w + std::countr_zero(word);
                word &= word - 1;
                detail::set_bit(r.bits_, 2 * i);
            }
        }
        return r;
    }

private:
    int degree_;
    detail::Words bits_{};
};

/// Univariate polynomial over F2; bit k is the coefficient of t^k.
/// Normal form: the zero polynomial reports degree -1, otherwise the
/// leading bit is set at degree().
class UniPoly {
public:
    UniPoly() = default;

    static UniPoly one() {
        UniPoly u;
        detail::set_bit(u.bits_, 0);
        u.degree_ = 0;
        return u;
    }

    static UniPoly t_power(int k) {
        if (k < 0 || k > kMaxDegree) detail::degree_overflow(k);
        UniPoly u;
        detail::set_bit(u.bits_, k);
        u.degree_ = k;
        return u;
    }

    int degree() const { return degree_; }
    bool is_zero() const { return degree_ < 0; }
    bool is_one() const { return degree_ == 0; }
    bool bit(int k) const { return k >= 0 && k <= degree_ && detail::get_bit(bits_, k); }

    UniPoly& set(int k) {
        if (k < 0 || k > kMaxDegree) detail::degree_overflow(k);
        detail::set_bit(bits_, k);
        if (k > degree_) degree_ = k;
        return *this;
    }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    UniPoly operator+(const UniPoly& o) const {
        UniPoly r(*this);
        detail::xor_words(r.bits_, o.bits_);
        r.degree_ = detail::highest_bit(r.bits_);
        return r;
    }

    UniPoly operator*(const UniPoly& o) const {
        if (is_zero() || o.is_zero()) return UniPoly{};
        const int d = degree_ + o.degree_;
        if (d > kMaxDegree) detail::degree_overflow(d);
        UniPoly r;
        for (int w = 0; w < 4; ++w) {
            std::uint64_t word = bits_[w];
            while (word != 0) {
                const int i = 64 * w + std::countr_zero(word);
                word &= word - 1;
                const detail::Words sh = detail::shifted_left(o.bits_, i);
                detail::xor_words(r.bits_, sh);
            }
        }
        r.degree_ = d;
        return r;
    }

    struct DivMod {
        UniPoly quotient;
        UniPoly remainder;
    };

    static DivMod divmod(const UniPoly& num, const UniPoly& den) {
        if (den.is_zero()) throw std::invalid_argument("univariate division by zero");
        UniPoly rem = num, quot;
        while (!rem.is_zero() && rem.degree() >= den.degree()) {
            const int s = rem.degree() - den.degree();
            detail::set_bit(quot.bits_, s);
            detail::Words sh = detail::shifted_left(den.bits_, s);
            detail::xor_words(rem.bits_, sh);
            rem.degree_ = detail::highest_bit(rem.bits_);
        }
        quot.degree_ = detail::highest_bit(quot.bits_);
        return {quot, rem};
    }

    friend UniPoly gcd(UniPoly x, UniPoly y) {
        if (x.is_zero() && y.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
        while (!y.is_zero()) {
            UniPoly r = divmod(x, y).remainder;
            x = y;
            y = r;
        }
        return x;
    }

private:
    int degree_ = -1;
    detail::Words bits_{};
};

/// f = a^a_multiplicity * homogenize(unit_part), where unit_part(t) = f(1,t)
/// with the factor a divided out; its leading bit is always 1.
struct AFactorization {
    int a_multiplicity;
    UniPoly unit_part;
};

inline AFactorization dehomogenize(const HomogPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("dehomogenize of the zero polynomial");
    const int n = f.degree();
    const int e = f.a_multiplicity();
    UniPoly u;
    for (int i = e; i <= n; ++i)
        if (f.bit(i)) u.set(n - i);
    return {e, u};
}

inline HomogPoly homogenize(const UniPoly& u, int a_multiplicity) {
    if (u.is_zero()) throw std::invalid_argument("homogenize of the zero polynomial");
    const int n = a_multiplicity + u.degree();
    HomogPoly f(n);
    for (int k = 0; k <= u.degree(); ++k)
        if (u.bit(k)) f.set(n - k);
    return f;
}

// Binary forms in two variables reduce exactly to the univariate case:
// split off the a-power, run Euclid on the dehomogenizations.
inline HomogPoly gcd(const HomogPoly& f, const HomogPoly& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("gcd with a zero polynomial");
    const AFactorization df = dehomogenize(f), dg = dehomogenize(g);
    const UniPoly u = gcd(df.unit_part, dg.unit_part);
    return homogenize(u, std::min(df.a_multiplicity, dg.a_multiplicity));
}

inline bool coprime(const HomogPoly& f, const HomogPoly& g) { return gcd(f, g).degree() == 0; }

/// Exact division of homogeneous elements; nullopt when d does not divide f.
inline std::optional<HomogPoly> divide_exact(const HomogPoly& f, const HomogPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (f.is_zero()) return HomogPoly(0);
    if (d.degree() > f.degree()) return std::nullopt;
    const AFactorization df = dehomogenize(f), dd = dehomogenize(d);
    if (dd.a_multiplicity > df.a_multiplicity) return std::nullopt;
    const auto [quot, rem] = UniPoly::divmod(df.unit_part, dd.unit_part);
    if (!rem.is_zero()) return std::nullopt;
    return homogenize(quot, df.a_multiplicity - dd.a_multiplicity);
}

inline std::optional<HomogPoly> sqrt(const HomogPoly& f) {
    if (f.is_zero()) return HomogPoly(f.degree() / 2);
    if (f.degree() % 2 != 0) return std::nullopt;
    HomogPoly r(f.degree() / 2);
    for (int i = 0; i <= f.degree(); ++i) {
        if (!f.bit(i)) continue;
        if (i % 2 != 0) return std::nullopt;  // odd exponent of a (and of b, since the degree is even)
        r.set(i / 2);
    }
    return r;
}

/// General element of F2[a,b]: a sum of homogeneous components in distinct
/// degrees.  Zero components are never stored.
class BiPoly {
public:
    BiPoly() = default;

    BiPoly(const HomogPoly& p) {
        if (!p.is_zero()) parts_.emplace(p.degree(), p);
    }

    static BiPoly zero() { return {}; }
    static BiPoly one() { return BiPoly(HomogPoly::one()); }

    const std::map<int, HomogPoly>& components() const { return parts_; }

    bool is_zero() const { return parts_.empty(); }
    bool is_homogeneous() const { return parts_.size() <= 1; }

    // Top degree; -1 for the zero polynomial.
    int degree() const { return parts_.empty() ? -1 : parts_.rbegin()->first; }
    int min_degree() const { return parts_.empty() ? -1 : parts_.begin()->first; }

    HomogPoly component(int d) const {
        const auto it = parts_.find(d);
        return it == parts_.end() ? HomogPoly(d) : it->second;
    }

    // The unique component of a homogeneous value.
    const HomogPoly& sole_component() const {
        if (parts_.size() != 1) throw std::logic_error("sole_component on a non-homogeneous polynomial");
        return parts_.begin()->second;
    }

    BiPoly& operator+=(const HomogPoly& p) {
        if (p.is_zero()) return *this;
        const auto [it, inserted] = parts_.emplace(p.degree(), p);
        if (!inserted) {
            it->second += p;
            if (it->second.is_zero()) parts_.erase(it);
        }
        return *this;
    }

    BiPoly& operator+=(const BiPoly& o) {
        for (const auto& [d, p] : o.parts_) *this += p;
        return *this;
    }

    friend BiPoly operator+(BiPoly x, const BiPoly& y) {
        x += y;
        return x;
    }

    friend BiPoly operator*(const BiPoly& x, const BiPoly& y) {
        BiPoly r;
        for (const auto& [dx, px] : x.parts_)
            for (const auto& [dy, py] : y.parts_) r += px * py;
        return r;
    }

    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

    BiPoly squared() const {
        BiPoly r;
        for (const auto& [d, p] : parts_) r += p.squared();
        return r;
    }

    BiPoly pow(unsigned e) const {
        BiPoly r = one(), base = *this;
        for (; e != 0; e >>= 1) {
            if (e & 1u) r *= base;
            if (e > 1u) base = base.squared();
        }
        return r;
    }

    friend bool operator==(const BiPoly&, const BiPoly&) = default;

private:
    std::map<int, HomogPoly> parts_;
};

inline std::optional<BiPoly> sqrt(const BiPoly& f) {
    BiPoly r;
    for (const auto& [d, p] : f.components()) {
        const auto root = sqrt(p);
        if (!root) return std::nullopt;
        r += *root;
    }
    return r;
}

}  // namespace klein
