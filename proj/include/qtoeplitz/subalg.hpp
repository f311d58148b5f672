#pragma once

// Real unital subalgebras of H and commutant machinery. Up to equality the
// unital subalgebras are R, a plane span{1, v} for a pure direction v, and H
// itself; plane directions are canonicalized so equality is syntactic.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qtoeplitz/quat.hpp"
#include "qtoeplitz/rational.hpp"

namespace qtz {

class Subalg {
  public:
    enum class Kind { Reals, Plane, Full };

    static Subalg reals() { return Subalg(Kind::Reals, Quat<Rational>(Rational(0))); }
    static Subalg full() { return Subalg(Kind::Full, Quat<Rational>(Rational(0))); }

    // span{1, v}; v must be pure and nonzero. Closure under multiplication
    // follows from v^2 = -norm2(v) being real.
    static Subalg plane(const Quat<Rational>& v) {
        if (!(v.a0 == 0)) throw std::invalid_argument("plane direction must be pure");
        if (is_zero(v)) throw std::invalid_argument("plane direction must be nonzero");
        return Subalg(Kind::Plane, canonical_direction(v));
    }

    Kind kind() const { return kind_; }
    const Quat<Rational>& direction() const { return dir_; }

    friend bool operator==(const Subalg& a, const Subalg& b) {
        return a.kind_ == b.kind_ && a.dir_ == b.dir_;
    }
    friend bool operator!=(const Subalg& a, const Subalg& b) { return !(a == b); }

    size_t dim() const {
        switch (kind_) {
            case Kind::Reals: return 1;
            case Kind::Plane: return 2;
            default: return 4;
        }
    }

    std::vector<Quat<Rational>> real_basis() const {
        std::vector<Quat<Rational>> b{Quat<Rational>::one()};
        if (kind_ == Kind::Plane) b.push_back(dir_);
        if (kind_ == Kind::Full) {
            b.push_back(Quat<Rational>::unit_i());
            b.push_back(Quat<Rational>::unit_j());
            b.push_back(Quat<Rational>::unit_k());
        }
        return b;
    }

    bool contains(const Quat<Rational>& a) const {
        switch (kind_) {
            case Kind::Full: return true;
            case Kind::Reals: return is_real(a);
            default: return pure_parallel(pure_part(a), dir_);
        }
    }

    std::string to_string() const {
        switch (kind_) {
            case Kind::Reals: return "R";
            case Kind::Full: return "H";
            default: return "plane:" + qtz::to_string(dir_);
        }
    }

    // Integer coprime components, first nonzero component positive.
    static Quat<Rational> canonical_direction(const Quat<Rational>& v) {
        mpz_class l = lcm(lcm(v.a1.get_den(), v.a2.get_den()), v.a3.get_den());
        mpz_class n1 = v.a1.get_num() * (l / v.a1.get_den());
        mpz_class n2 = v.a2.get_num() * (l / v.a2.get_den());
        mpz_class n3 = v.a3.get_num() * (l / v.a3.get_den());
        mpz_class g = gcd(gcd(abs(n1), abs(n2)), abs(n3));
        n1 /= g;
        n2 /= g;
        n3 /= g;
        mpz_class lead = n1 != 0 ? n1 : (n2 != 0 ? n2 : n3);
        if (lead < 0) {
            n1 = -n1;
            n2 = -n2;
            n3 = -n3;
        }
        return Quat<Rational>(Rational(0), Rational(n1), Rational(n2), Rational(n3));
    }

    static bool pure_parallel(const Quat<Rational>& a, const Quat<Rational>& b) {
        return a.a1 * b.a2 == a.a2 * b.a1 && a.a1 * b.a3 == a.a3 * b.a1 &&
               a.a2 * b.a3 == a.a3 * b.a2;
    }

  private:
    Subalg(Kind k, Quat<Rational> d) : kind_(k), dir_(std::move(d)) {}

    Kind kind_;
    Quat<Rational> dir_;  // zero unless kind == Plane
};

// {x in H : x s = s x for every s in S}. Two quaternions commute iff their
// pure parts are parallel, so the commutant classifies by the pure parts of
// the generators: none -> H, one common direction -> span{1, v}, two
// independent directions -> R.
inline Subalg commutant_of_set(const std::vector<Quat<Rational>>& gens) {
    Quat<Rational> dir(Rational(0));
    bool have_dir = false;
    for (const auto& g : gens) {
        Quat<Rational> p = pure_part(g);
        if (is_zero(p)) continue;
        if (!have_dir) {
            dir = p;
            have_dir = true;
        } else if (!Subalg::pure_parallel(dir, p)) {
            return Subalg::reals();
        }
    }
    return have_dir ? Subalg::plane(dir) : Subalg::full();
}

// R' = H, span{1,v}' = span{1,v}, H' = R.
inline Subalg commutant_of_algebra(const Subalg& a) {
    switch (a.kind()) {
        case Subalg::Kind::Reals: return Subalg::full();
        case Subalg::Kind::Full: return Subalg::reals();
        default: return a;
    }
}

// Smallest of R / span{1,v} / H containing the set together with 1. Two
// independent pure directions already generate all of H (their product
// supplies the third direction).
inline Subalg generated_subalgebra(const std::vector<Quat<Rational>>& gens) {
    Quat<Rational> dir(Rational(0));
    bool have_dir = false;
    for (const auto& g : gens) {
        Quat<Rational> p = pure_part(g);
        if (is_zero(p)) continue;
        if (!have_dir) {
            dir = p;
            have_dir = true;
        } else if (!Subalg::pure_parallel(dir, p)) {
            return Subalg::full();
        }
    }
    return have_dir ? Subalg::plane(dir) : Subalg::reals();
}

// Text form: R | H | plane:<pure quaternion literal>
inline Subalg parse_subalg(std::string_view text) {
    size_t lo = 0, hi = text.size();
    while (lo < hi && std::isspace(static_cast<unsigned char>(text[lo]))) ++lo;
    while (hi > lo && std::isspace(static_cast<unsigned char>(text[hi - 1]))) --hi;
    std::string_view s = text.substr(lo, hi - lo);
    if (s == "R" || s == "r") return Subalg::reals();
    if (s == "H" || s == "h") return Subalg::full();
    if (s.substr(0, 6) == "plane:") return Subalg::plane(parse_quat(s.substr(6)));
    throw std::invalid_argument("bad algebra literal (want R, H or plane:<pure quaternion>): '" +
                                std::string(text) + "'");
}

}  // namespace qtz
