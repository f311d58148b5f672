#pragma once

// Quaternion scalars over an arbitrary coefficient field T.
//
// The exact instantiation Quat<Rational> is the one every structural check
// runs on; Quat<double> exists for the benchmark kernels only. Multiplication
// follows the Hamilton rules i^2 = j^2 = k^2 = ijk = -1, so
//   ij = k,  jk = i,  ki = j,  ji = -k,  kj = -i,  ik = -j.

#include <array>
#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "qtoeplitz/rational.hpp"

namespace qtz {

template <class T>
struct Quat {
    T a0{}, a1{}, a2{}, a3{};  // coefficients of 1, i, j, k

    Quat() = default;
    Quat(T c0, T c1, T c2, T c3)
        : a0(std::move(c0)), a1(std::move(c1)), a2(std::move(c2)), a3(std::move(c3)) {}
    explicit Quat(T real) : a0(std::move(real)), a1(0), a2(0), a3(0) {}

    static Quat one() { return Quat(T(1), T(0), T(0), T(0)); }
    static Quat unit_i() { return Quat(T(0), T(1), T(0), T(0)); }
    static Quat unit_j() { return Quat(T(0), T(0), T(1), T(0)); }
    static Quat unit_k() { return Quat(T(0), T(0), T(0), T(1)); }

    friend bool operator==(const Quat& a, const Quat& b) {
        return a.a0 == b.a0 && a.a1 == b.a1 && a.a2 == b.a2 && a.a3 == b.a3;
    }
    friend bool operator!=(const Quat& a, const Quat& b) { return !(a == b); }

    friend Quat operator+(const Quat& a, const Quat& b) {
        return Quat(T(a.a0 + b.a0), T(a.a1 + b.a1), T(a.a2 + b.a2), T(a.a3 + b.a3));
    }
    friend Quat operator-(const Quat& a, const Quat& b) {
        return Quat(T(a.a0 - b.a0), T(a.a1 - b.a1), T(a.a2 - b.a2), T(a.a3 - b.a3));
    }
    friend Quat operator-(const Quat& a) {
        return Quat(T(-a.a0), T(-a.a1), T(-a.a2), T(-a.a3));
    }

    // Hamilton product; bilinear over the reals, not commutative.
    friend Quat operator*(const Quat& a, const Quat& b) {
        return Quat(T(a.a0 * b.a0 - a.a1 * b.a1 - a.a2 * b.a2 - a.a3 * b.a3),
                    T(a.a0 * b.a1 + a.a1 * b.a0 + a.a2 * b.a3 - a.a3 * b.a2),
                    T(a.a0 * b.a2 - a.a1 * b.a3 + a.a2 * b.a0 + a.a3 * b.a1),
                    T(a.a0 * b.a3 + a.a1 * b.a2 - a.a2 * b.a1 + a.a3 * b.a0));
    }

    Quat& operator+=(const Quat& b) { return *this = *this + b; }
    Quat& operator-=(const Quat& b) { return *this = *this - b; }
    Quat& operator*=(const Quat& b) { return *this = *this * b; }
};

template <class T>
bool is_zero(const Quat<T>& a) {
    return a.a0 == T(0) && a.a1 == T(0) && a.a2 == T(0) && a.a3 == T(0);
}

template <class T>
bool is_real(const Quat<T>& a) {
    return a.a1 == T(0) && a.a2 == T(0) && a.a3 == T(0);
}

template <class T>
Quat<T> conj(const Quat<T>& a) {
    return Quat<T>(a.a0, T(-a.a1), T(-a.a2), T(-a.a3));
}

template <class T>
Quat<T> pure_part(const Quat<T>& a) {
    return Quat<T>(T(0), a.a1, a.a2, a.a3);
}

template <class T>
T norm2(const Quat<T>& a) {
    return T(a.a0 * a.a0 + a.a1 * a.a1 + a.a2 * a.a2 + a.a3 * a.a3);
}

// Componentwise real scaling (the R-module action used by span arithmetic).
template <class T>
Quat<T> scale(const T& c, const Quat<T>& a) {
    return Quat<T>(T(c * a.a0), T(c * a.a1), T(c * a.a2), T(c * a.a3));
}

// Inverse via conj(a)/norm2(a); a division ring has no other zero divisors.
template <class T>
Quat<T> inv(const Quat<T>& a) {
    if (is_zero(a)) throw std::domain_error("quaternion division by zero");
    T n = norm2(a);
    Quat<T> c = conj(a);
    return Quat<T>(T(c.a0 / n), T(c.a1 / n), T(c.a2 / n), T(c.a3 / n));
}

template <class T>
bool commute(const Quat<T>& a, const Quat<T>& b) {
    return a * b == b * a;
}

// True iff a^2 = -1; exactly the pure quaternions of unit norm.
template <class T>
bool is_root_of_x2_plus_1(const Quat<T>& a) {
    return a * a == -Quat<T>::one();
}

// ---------------------------------------------------------------------------
// 2x2 complex representation
// ---------------------------------------------------------------------------

struct RComplex {
    Rational re{0}, im{0};

    friend bool operator==(const RComplex& a, const RComplex& b) = default;
    friend RComplex operator+(const RComplex& a, const RComplex& b) {
        return {Rational(a.re + b.re), Rational(a.im + b.im)};
    }
    friend RComplex operator-(const RComplex& a, const RComplex& b) {
        return {Rational(a.re - b.re), Rational(a.im - b.im)};
    }
    friend RComplex operator-(const RComplex& a) { return {Rational(-a.re), Rational(-a.im)}; }
    friend RComplex operator*(const RComplex& a, const RComplex& b) {
        return {Rational(a.re * b.re - a.im * b.im), Rational(a.re * b.im + a.im * b.re)};
    }
};

inline RComplex conj(const RComplex& a) { return {a.re, Rational(-a.im)}; }

// Entries of the image [[w, z], [-conj(z), conj(w)]]; row-major.
struct Complex2x2 {
    std::array<RComplex, 4> e;

    const RComplex& at(int r, int c) const { return e[static_cast<size_t>(2 * r + c)]; }
    friend bool operator==(const Complex2x2&, const Complex2x2&) = default;
};

// alpha -> [[a0+a1 i, a2+a3 i], [-a2+a3 i, a0-a1 i]]; an injective ring
// homomorphism into the complex 2x2 matrices.
inline Complex2x2 to_complex2(const Quat<Rational>& a) {
    return Complex2x2{{RComplex{a.a0, a.a1}, RComplex{a.a2, a.a3},
                       RComplex{Rational(-a.a2), a.a3}, RComplex{a.a0, Rational(-a.a1)}}};
}

// Inverse of to_complex2 on its image.
inline Quat<Rational> quat_from_complex2(const Complex2x2& m) {
    return Quat<Rational>(m.e[0].re, m.e[0].im, m.e[1].re, m.e[1].im);
}

// Cayley–Dickson coordinates: a = g0 + g1*j with g0 = a0 + a1 i, g1 = a2 + a3 i.
// This places a3 with the j-side because k = i*j.
inline std::pair<RComplex, RComplex> cd_split(const Quat<Rational>& a) {
    return {RComplex{a.a0, a.a1}, RComplex{a.a2, a.a3}};
}

inline Quat<Rational> cd_compose(const RComplex& g0, const RComplex& g1) {
    return Quat<Rational>(g0.re, g0.im, g1.re, g1.im);
}

// ---------------------------------------------------------------------------
// Text form: `a0 ± a1 i ± a2 j ± a3 k`, coefficients integer or num/den,
// whitespace insignificant, omitted terms mean zero.
// ---------------------------------------------------------------------------

namespace detail {

struct QuatLexer {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return s[pos];
    }
};

}  // namespace detail

inline Quat<Rational> parse_quat(std::string_view text) {
    detail::QuatLexer lx{text};
    Quat<Rational> out(Rational(0), Rational(0), Rational(0), Rational(0));
    bool any_term = false;

    while (!lx.eof()) {
        int sign = 1;
        if (lx.peek() == '+' || lx.peek() == '-') {
            if (lx.peek() == '-') sign = -1;
            ++lx.pos;
        } else if (any_term) {
            throw std::invalid_argument("expected '+' or '-' between quaternion terms: '" +
                                        std::string(text) + "'");
        }
        if (lx.eof())
            throw std::invalid_argument("dangling sign in quaternion literal: '" + std::string(text) + "'");

        std::string digits;
        auto read_int = [&]() {
            lx.skip_ws();
            std::string d;
            while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
                d.push_back(lx.s[lx.pos++]);
            return d;
        };
        std::string num = read_int();
        std::string den;
        if (!num.empty() && !lx.eof() && lx.peek() == '/') {
            ++lx.pos;
            den = read_int();
            if (den.empty())
                throw std::invalid_argument("missing denominator in quaternion literal: '" +
                                            std::string(text) + "'");
        }

        int unit = 0;  // 0 = real, 1..3 = i, j, k
        if (!lx.eof()) {
            char c = lx.peek();
            if (c == 'i' || c == 'j' || c == 'k') {
                unit = c == 'i' ? 1 : (c == 'j' ? 2 : 3);
                ++lx.pos;
            }
        }
        if (num.empty() && unit == 0)
            throw std::invalid_argument("expected coefficient or unit in quaternion literal: '" +
                                        std::string(text) + "'");

        Rational coeff = num.empty() ? Rational(1) : rat_from_string(den.empty() ? num : num + "/" + den);
        if (sign < 0) coeff = -coeff;
        switch (unit) {
            case 0: out.a0 += coeff; break;
            case 1: out.a1 += coeff; break;
            case 2: out.a2 += coeff; break;
            case 3: out.a3 += coeff; break;
        }
        any_term = true;
    }
    if (!any_term) throw std::invalid_argument("empty quaternion literal");
    return out;
}

inline std::string to_string(const Quat<Rational>& a) {
    std::string out;
    auto append = [&](const Rational& c, const char* unit) {
        if (c == 0) return;
        Rational v = c;
        if (out.empty()) {
            if (v < 0) {
                out += "-";
                v = -v;
            }
        } else {
            out += v < 0 ? "-" : "+";
            if (v < 0) v = -v;
        }
        if (unit[0] == '\0') {
            out += to_string(v);
        } else {
            if (v != 1) out += to_string(v);
            out += unit;
        }
    };
    append(a.a0, "");
    append(a.a1, "i");
    append(a.a2, "j");
    append(a.a3, "k");
    return out.empty() ? "0" : out;
}

}  // namespace qtz
