#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace prismforge {

using Int = mpz_class;

/// Reduced arbitrary-precision rational. Always canonical: gcd(|num|, den) = 1,
/// den >= 1. Equality is structural on the reduced form.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(const Int& n) : q_(n) {}
    Rat(long n) : q_(n) {}
    Rat(int n) : q_(n) {}
    Rat(const Int& n, const Int& d) : q_(n, d) {
        if (d == 0) throw std::invalid_argument("Rat: zero denominator");
        q_.canonicalize();
    }
    Rat(long n, long d) : Rat(Int(n), Int(d)) {}
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    // evaluate GMP expression templates before they pick a conversion
    template <class U>
    Rat(const __gmp_expr<mpz_t, U>& e) : q_(mpz_class(e)) {}
    template <class U>
    Rat(const __gmp_expr<mpq_t, U>& e) : q_(mpq_class(e)) {
        q_.canonicalize();
    }

    Int num() const { return q_.get_num(); }
    Int den() const { return q_.get_den(); }

    bool is_integer() const { return q_.get_den() == 1; }
    bool is_zero() const { return q_ == 0; }
    int sign() const { return sgn(q_); }

    /// Height of the reduced form: max(|num|, den). The single bound
    /// parameter used by every enumeration sweep.
    Int height() const {
        Int n = abs(q_.get_num());
        return n > q_.get_den() ? n : Int(q_.get_den());
    }

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.q_ == 0) throw std::domain_error("Rat: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    /// Serialized form: bare digits when integral, "p/q" otherwise.
    std::string str() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    /// Parses "p" or "p/q". Returns nullopt on malformed input.
    static std::optional<Rat> parse(const std::string& s);

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

}  // namespace prismforge
