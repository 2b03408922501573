#include "prismforge/arith.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace prismforge {

std::optional<Rat> Rat::parse(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    try {
        if (slash == std::string::npos) {
            if (!valid_int(s)) return std::nullopt;
            return Rat(Int(s));
        }
        std::string n = s.substr(0, slash), d = s.substr(slash + 1);
        if (!valid_int(n) || !valid_int(d)) return std::nullopt;
        Int den(d);
        if (den == 0) return std::nullopt;
        return Rat(Int(n), den);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

IsqrtResult isqrt(const Int& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative input");
    IsqrtResult r;
    Int rem;
    mpz_sqrtrem(r.root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    r.exact = (rem == 0);
    return r;
}

bool is_square(const Rat& q) {
    if (q.sign() < 0) return false;
    return mpz_perfect_square_p(q.num().get_mpz_t()) &&
           mpz_perfect_square_p(q.den().get_mpz_t());
}

std::optional<Rat> rat_sqrt(const Rat& q) {
    if (!is_square(q)) return std::nullopt;
    return Rat(isqrt(q.num()).root, isqrt(q.den()).root);
}

Rat pyth_ratio(const Rat& r) {
    if (r.is_zero()) throw std::domain_error("pyth_ratio: r = 0");
    return (r * r - 1) / (2 * r);
}

std::optional<Rat> pyth_ratio_inverse(const Rat& d) {
    auto s = rat_sqrt(1 + d * d);
    if (!s) return std::nullopt;
    return d + *s;
}

CosSin half_angle(const Rat& f) {
    Rat f2 = f * f;
    Rat den = f2 + 1;
    return {(f2 - 1) / den, 2 * f / den};
}

RationalEnumerator::RationalEnumerator(const Int& height_max, const Rat& lower,
                                       std::optional<Rat> upper) {
    if (height_max < 1)
        throw std::invalid_argument("enumerate_rationals: height_max < 1");
    auto in_range = [&](const Rat& v) {
        if (v <= lower) return false;
        if (upper && v >= *upper) return false;
        return true;
    };
    for (Int h = 1; h <= height_max; ++h) {
        std::vector<Rat> layer;
        // |p| = h, q in 1..h
        for (Int q = 1; q <= h; ++q) {
            if (gcd(h, q) != 1) continue;
            Rat pos(h, q), neg(-h, q);
            if (in_range(pos)) layer.push_back(pos);
            if (in_range(neg)) layer.push_back(neg);
        }
        // q = h, |p| < h (p = 0 only at h = 1)
        for (Int p = (h == 1 ? Int(0) : Int(1 - h)); p < h; ++p) {
            if (abs(p) == h) continue;
            if (gcd(p, h) != 1 && !(p == 0 && h == 1)) continue;
            Rat v(p, h);
            if (v.height() != h) continue;  // guards p = 0, h > 1
            if (in_range(v)) layer.push_back(v);
        }
        std::sort(layer.begin(), layer.end());
        layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
        values_.insert(values_.end(), layer.begin(), layer.end());
    }
}

std::vector<Rat> enumerate_rationals(const Int& height_max, const Rat& lower,
                                     std::optional<Rat> upper) {
    return RationalEnumerator(height_max, lower, upper).values();
}

}  // namespace prismforge
