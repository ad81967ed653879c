#pragma once

// Certified-precision real scalar backed by MPFR.
//
// Every Scalar carries its own mantissa width. Binary operations produce a
// result at the wider of the two operand precisions; values created from
// literals use the ambient precision of the calling thread (see
// PrecisionScope). Tolerant comparisons use eps_cmp = 2^(-bits/2).

#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace origami {

inline constexpr int kMinPrecisionBits = 64;
inline constexpr int kDefaultPrecisionBits = 256;

/// Working precision for newly created scalars on this thread.
int ambient_precision();

/// RAII override of the thread's ambient precision.
class PrecisionScope {
public:
    explicit PrecisionScope(int bits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    int saved_;
};

class Scalar {
public:
    Scalar();
    Scalar(int v);
    Scalar(long v);
    Scalar(long long v);
    Scalar(double v);
    Scalar(const Scalar& other);
    Scalar(Scalar&& other) noexcept;
    Scalar& operator=(const Scalar& other);
    Scalar& operator=(Scalar&& other) noexcept;
    ~Scalar();

    /// Zero at an explicit precision.
    static Scalar zero(int bits);
    /// Parses a decimal literal ("-1.25e-3") at full precision.
    /// Throws Error(InvalidNumber) on malformed input.
    static Scalar parse(std::string_view text, int bits = 0);
    static Scalar pi(int bits = 0);

    int precision_bits() const { return static_cast<int>(mpfr_get_prec(v_)); }
    /// The same value rounded to another precision.
    Scalar with_precision(int bits) const;

    double to_double() const;
    /// Scientific decimal with the given number of significant digits.
    std::string to_string(int digits) const;
    /// Decimal with enough digits (bits/3) to round-trip the binary value.
    std::string to_string() const;

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);

    // Exact comparisons of the stored binary values.
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend std::partial_ordering operator<=>(const Scalar& a, const Scalar& b);

    /// Bitwise identity of value and precision.
    bool identical(const Scalar& o) const;

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

private:
    explicit Scalar(int bits, std::nullptr_t);
    mpfr_t v_;
};

Scalar abs(const Scalar& x);
Scalar sqrt(const Scalar& x);
Scalar cbrt(const Scalar& x);
Scalar sin(const Scalar& x);
Scalar cos(const Scalar& x);
Scalar tan(const Scalar& x);
Scalar acos(const Scalar& x);
Scalar atan2(const Scalar& y, const Scalar& x);
Scalar ldexp(const Scalar& x, long exp);
Scalar min(const Scalar& a, const Scalar& b);
Scalar max(const Scalar& a, const Scalar& b);
Scalar degrees_to_radians(const Scalar& deg);
Scalar radians_to_degrees(const Scalar& rad);

/// 2^(-bits/2); the module-wide comparison tolerance.
Scalar eps_cmp(int bits);
/// eps_cmp at the ambient precision.
Scalar eps_cmp();

enum class Cmp { Less, Equal, Greater };

/// Three-valued comparison: Equal when |a-b| <= tol.
Cmp compare(const Scalar& a, const Scalar& b, const Scalar& tol);
Cmp compare(const Scalar& a, const Scalar& b);
bool near(const Scalar& a, const Scalar& b, const Scalar& tol);
bool near(const Scalar& a, const Scalar& b);
bool near_zero(const Scalar& a, const Scalar& tol);
bool near_zero(const Scalar& a);

std::ostream& operator<<(std::ostream& os, const Scalar& x);

}  // namespace origami
