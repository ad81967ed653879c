#include "origami/scalar.hpp"

#include "origami/error.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace origami {

namespace {

thread_local int g_ambient_bits = kDefaultPrecisionBits;

int resolve_bits(int bits) {
    if (bits <= 0) bits = g_ambient_bits;
    return std::max(bits, kMinPrecisionBits);
}

int wider(const Scalar& a, const Scalar& b) {
    return std::max(a.precision_bits(), b.precision_bits());
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidNumber: return "InvalidNumber";
        case ErrorKind::CoincidentPoints: return "CoincidentPoints";
        case ErrorKind::ConcentricCircles: return "ConcentricCircles";
        case ErrorKind::IdenticalLines: return "IdenticalLines";
        case ErrorKind::DegenerateConfiguration: return "DegenerateConfiguration";
        case ErrorKind::NotQuadratic: return "NotQuadratic";
        case ErrorKind::NotCubic: return "NotCubic";
        case ErrorKind::NotQuartic: return "NotQuartic";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
        case ErrorKind::EmptyTrace: return "EmptyTrace";
        case ErrorKind::BranchUnavailable: return "BranchUnavailable";
        case ErrorKind::AssertionFailed: return "AssertionFailed";
        case ErrorKind::UndefinedIdentifier: return "UndefinedIdentifier";
        case ErrorKind::DuplicateName: return "DuplicateName";
        case ErrorKind::TypeMismatch: return "TypeMismatch";
        case ErrorKind::MalformedTrace: return "MalformedTrace";
    }
    return "Unknown";
}

int ambient_precision() { return g_ambient_bits; }

PrecisionScope::PrecisionScope(int bits) : saved_(g_ambient_bits) {
    g_ambient_bits = std::max(bits, kMinPrecisionBits);
}

PrecisionScope::~PrecisionScope() { g_ambient_bits = saved_; }

Scalar::Scalar(int bits, std::nullptr_t) {
    mpfr_init2(v_, resolve_bits(bits));
    mpfr_set_zero(v_, 1);
}

Scalar::Scalar() : Scalar(0, nullptr) {}

Scalar::Scalar(int v) : Scalar(0, nullptr) { mpfr_set_si(v_, v, MPFR_RNDN); }

Scalar::Scalar(long v) : Scalar(0, nullptr) { mpfr_set_si(v_, v, MPFR_RNDN); }

Scalar::Scalar(long long v) : Scalar(0, nullptr) {
    mpfr_set_si(v_, static_cast<long>(v), MPFR_RNDN);
}

Scalar::Scalar(double v) : Scalar(0, nullptr) { mpfr_set_d(v_, v, MPFR_RNDN); }

Scalar::Scalar(const Scalar& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

Scalar::Scalar(Scalar&& other) noexcept {
    // MPFR has no move; swap with a minimal placeholder.
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
}

Scalar& Scalar::operator=(const Scalar& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

Scalar& Scalar::operator=(Scalar&& other) noexcept {
    if (this != &other) mpfr_swap(v_, other.v_);
    return *this;
}

Scalar::~Scalar() { mpfr_clear(v_); }

Scalar Scalar::zero(int bits) { return Scalar(bits, nullptr); }

Scalar Scalar::parse(std::string_view text, int bits) {
    Scalar r(bits, nullptr);
    std::string s(text);
    char* end = nullptr;
    if (!s.empty()) mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
    if (s.empty() || end != s.c_str() + s.size() || !r.is_finite()) {
        throw Error(ErrorKind::InvalidNumber, "not a decimal number: '" + s + "'");
    }
    return r;
}

Scalar Scalar::pi(int bits) {
    Scalar r(bits, nullptr);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

Scalar Scalar::with_precision(int bits) const {
    Scalar r(bits, nullptr);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

double Scalar::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string Scalar::to_string(int digits) const {
    digits = std::max(digits, 2);
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

std::string Scalar::to_string() const { return to_string(precision_bits() / 3); }

Scalar Scalar::operator-() const {
    Scalar r(precision_bits(), nullptr);
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) { return *this = *this + o; }
Scalar& Scalar::operator-=(const Scalar& o) { return *this = *this - o; }
Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }
Scalar& Scalar::operator/=(const Scalar& o) { return *this = *this / o; }

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar r(wider(a, b), nullptr);
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    Scalar r(wider(a, b), nullptr);
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r(wider(a, b), nullptr);
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    Scalar r(wider(a, b), nullptr);
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

bool operator==(const Scalar& a, const Scalar& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

std::partial_ordering operator<=>(const Scalar& a, const Scalar& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.v_, b.v_);
    if (c < 0) return std::partial_ordering::less;
    if (c > 0) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
}

bool Scalar::identical(const Scalar& o) const {
    return precision_bits() == o.precision_bits() &&
           (mpfr_equal_p(v_, o.v_) || (mpfr_nan_p(v_) && mpfr_nan_p(o.v_))) &&
           mpfr_signbit(v_) == mpfr_signbit(o.v_);
}

namespace {

template <typename F>
Scalar unary(const Scalar& x, F f) {
    Scalar r = Scalar::zero(x.precision_bits());
    f(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

}  // namespace

#define ORIGAMI_UNARY(name, fn) \
    Scalar name(const Scalar& x) { \
        return unary(x, [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t m) { return fn(r, a, m); }); \
    }

ORIGAMI_UNARY(abs, mpfr_abs)
ORIGAMI_UNARY(sqrt, mpfr_sqrt)
ORIGAMI_UNARY(cbrt, mpfr_cbrt)
ORIGAMI_UNARY(sin, mpfr_sin)
ORIGAMI_UNARY(cos, mpfr_cos)
ORIGAMI_UNARY(tan, mpfr_tan)
ORIGAMI_UNARY(acos, mpfr_acos)

#undef ORIGAMI_UNARY

Scalar atan2(const Scalar& y, const Scalar& x) {
    Scalar r = Scalar::zero(wider(y, x));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Scalar ldexp(const Scalar& x, long exp) {
    Scalar r = Scalar::zero(x.precision_bits());
    mpfr_mul_2si(r.raw(), x.raw(), exp, MPFR_RNDN);
    return r;
}

Scalar min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
Scalar max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

Scalar degrees_to_radians(const Scalar& deg) {
    return deg * Scalar::pi(deg.precision_bits()) / Scalar(180);
}

Scalar radians_to_degrees(const Scalar& rad) {
    return rad * Scalar(180) / Scalar::pi(rad.precision_bits());
}

Scalar eps_cmp(int bits) {
    Scalar r = Scalar::zero(std::max(bits, kMinPrecisionBits));
    mpfr_set_ui_2exp(r.raw(), 1, -(bits / 2), MPFR_RNDN);
    return r;
}

Scalar eps_cmp() { return eps_cmp(ambient_precision()); }

Cmp compare(const Scalar& a, const Scalar& b, const Scalar& tol) {
    const Scalar d = a - b;
    if (abs(d) <= tol) return Cmp::Equal;
    return d.sign() < 0 ? Cmp::Less : Cmp::Greater;
}

Cmp compare(const Scalar& a, const Scalar& b) { return compare(a, b, eps_cmp()); }

bool near(const Scalar& a, const Scalar& b, const Scalar& tol) { return abs(a - b) <= tol; }
bool near(const Scalar& a, const Scalar& b) { return near(a, b, eps_cmp()); }
bool near_zero(const Scalar& a, const Scalar& tol) { return abs(a) <= tol; }
bool near_zero(const Scalar& a) { return near_zero(a, eps_cmp()); }

std::ostream& operator<<(std::ostream& os, const Scalar& x) {
    const auto prec = os.precision();
    return os << x.to_string(static_cast<int>(prec > 0 ? prec : 17));
}

}  // namespace origami
