#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tgraded {

// Exact rational number. Always held in canonical form (positive denominator,
// coprime numerator/denominator); the textual form is "n/d".
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    Scalar(long num, long den);
    explicit Scalar(mpq_class q);

    // Accepts "n/d" or a bare integer "n". Throws std::invalid_argument.
    static Scalar parse(std::string_view text);

    std::string str() const;

    const mpq_class& raw() const { return q_; }
    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }

    Scalar operator-() const { return Scalar(mpq_class(-q_)); }
    Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
    Scalar& operator-=(const Scalar& o) { q_ -= o.q_; return *this; }
    Scalar& operator*=(const Scalar& o) { q_ *= o.q_; return *this; }
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

inline Scalar abs(const Scalar& x) { return x.sign() < 0 ? -x : x; }
inline const Scalar& max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }
inline const Scalar& min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }

std::ostream& operator<<(std::ostream& os, const Scalar& x);

}  // namespace tgraded
