#include "origami/constructibility.hpp"

#include "origami/error.hpp"
#include "origami/polysolve.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>

namespace origami {

namespace mp = boost::multiprecision;

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, b, m);
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    return r;
}

u64 pollard_rho(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_into(u64 n, std::map<u64, int>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    const u64 d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

bool is_power_of_two(u64 v) { return v != 0 && (v & (v - 1)) == 0; }

/// Strips factors of 2 and 3.
u64 smooth_remainder(u64 v) {
    while (v % 2 == 0) v /= 2;
    while (v % 3 == 0) v /= 3;
    return v;
}

std::string factorization_text(u64 n, const std::vector<std::pair<u64, int>>& f) {
    std::ostringstream os;
    os << n << " = ";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) os << "·";
        os << f[i].first;
        if (f[i].second > 1) os << "^" << f[i].second;
    }
    return os.str();
}

/// p - 1 written as 2^u·3^v (only called when it has that form).
std::string pierpont_form(u64 p) {
    u64 m = p - 1;
    int u = 0, v = 0;
    while (m % 2 == 0) m /= 2, ++u;
    while (m % 3 == 0) m /= 3, ++v;
    std::ostringstream os;
    os << p << " = ";
    auto part = [&](int base, int e) {
        os << base;
        if (e > 1) os << "^" << e;
    };
    if (u) part(2, u);
    if (u && v) os << "·";
    if (v) part(3, v);
    if (!u && !v) os << "1";
    os << "+1 Pierpont";
    return os.str();
}

void require_ngon(u64 n) {
    if (n < 3) throw Error(ErrorKind::OutOfRange, "a polygon needs n >= 3, got " + std::to_string(n));
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

Scalar to_scalar(const Rational& r) {
    return Scalar::parse(mp::numerator(r).str()) / Scalar::parse(mp::denominator(r).str());
}

Rational eval(const RationalPolynomial& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.coefficients.rbegin(); it != p.coefficients.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RationalPolynomial trimmed(RationalPolynomial p) {
    while (!p.coefficients.empty() && p.coefficients.back() == 0) p.coefficients.pop_back();
    return p;
}

}  // namespace

int RationalPolynomial::degree() const {
    int d = static_cast<int>(coefficients.size()) - 1;
    while (d >= 0 && coefficients[d] == 0) --d;
    return d;
}

std::string RationalPolynomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coefficients[i];
        if (c == 0) continue;
        Rational mag = mp::abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || i == 0) os << mag;
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::string_view to_string(Tri t) {
    switch (t) {
        case Tri::Yes: return "yes";
        case Tri::No: return "no";
        case Tri::Unknown: return "unknown";
    }
    return "unknown";
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while (d % 2 == 0) d /= 2, ++s;
    // These witnesses are deterministic below 3.3e24.
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::pair<u64, int>> factorize(u64 n) {
    std::map<u64, int> f;
    for (u64 p = 2; p < 1000 && p * p <= n; ++p) {
        while (n % p == 0) {
            ++f[p];
            n /= p;
        }
    }
    factor_into(n, f);
    return {f.begin(), f.end()};
}

bool is_fermat_prime(u64 p) {
    if (p < 2) throw Error(ErrorKind::OutOfRange, "is_fermat_prime needs p >= 2");
    // p = 2^t + 1 with t itself a power of two.
    const u64 t_pow = p - 1;
    if (!is_power_of_two(t_pow)) return false;
    const int t = std::countr_zero(t_pow);
    return is_power_of_two(static_cast<u64>(t)) && is_prime(p);
}

bool is_pierpont_prime(u64 p) {
    if (p < 2) throw Error(ErrorKind::OutOfRange, "is_pierpont_prime needs p >= 2");
    return is_prime(p) && smooth_remainder(p - 1) == 1;
}

namespace {

struct Verdict {
    bool ok = true;
    std::vector<std::string> notes;
};

Verdict zul_verdict(const std::vector<std::pair<u64, int>>& f) {
    Verdict v;
    for (const auto& [p, e] : f) {
        if (p == 2) continue;
        if (!is_fermat_prime(p)) {
            v.ok = false;
            v.notes.push_back(std::to_string(p) + " is not a Fermat prime");
        } else if (e > 1) {
            v.ok = false;
            v.notes.push_back("Fermat prime " + std::to_string(p) + " repeated");
        } else {
            v.notes.push_back("Fermat prime " + std::to_string(p));
        }
    }
    if (v.notes.empty()) v.notes.push_back("power of two");
    return v;
}

Verdict origami_verdict(const std::vector<std::pair<u64, int>>& f) {
    // Powers of 2 and 3 are free; 3 itself never counts as a Pierpont factor.
    Verdict v;
    for (const auto& [p, e] : f) {
        if (p == 2 || p == 3) continue;
        if (!is_pierpont_prime(p)) {
            v.ok = false;
            v.notes.push_back(std::to_string(p) + " is not a Pierpont prime");
        } else if (e > 1) {
            v.ok = false;
            v.notes.push_back("Pierpont prime " + std::to_string(p) + " repeated");
        } else {
            v.notes.push_back(pierpont_form(p));
        }
    }
    return v;
}

ConstructibilityReport ngon_report(u64 n, bool zul_witness) {
    require_ngon(n);
    const auto f = factorize(n);
    const Verdict z = zul_verdict(f);
    const Verdict o = origami_verdict(f);
    ConstructibilityReport rep;
    rep.n = n;
    rep.zul = z.ok ? Tri::Yes : Tri::No;
    rep.origami = o.ok ? Tri::Yes : Tri::No;
    const bool prime = f.size() == 1 && f[0].second == 1;
    const auto& notes = zul_witness ? z.notes : o.notes;
    std::vector<std::string> parts;
    if (!prime || notes.empty()) parts.push_back(factorization_text(n, f));
    parts.insert(parts.end(), notes.begin(), notes.end());
    rep.witness = join(parts, "; ");
    return rep;
}

}  // namespace

ConstructibilityReport zul_ngon_constructible(u64 n) { return ngon_report(n, true); }

ConstructibilityReport origami_ngon_constructible(u64 n) { return ngon_report(n, false); }

bool degree_tower_admissible(u64 d) {
    if (d < 1) throw Error(ErrorKind::OutOfRange, "field degree must be >= 1");
    return smooth_remainder(d) == 1;
}

std::vector<Rational> rational_roots(const RationalPolynomial& poly) {
    const RationalPolynomial p = trimmed(poly);
    if (p.degree() < 1) return {};
    // Clear denominators; a root u/v in lowest terms has v | lead, so lead * x is an integer.
    mp::cpp_int den = 1;
    for (const auto& c : p.coefficients) den = mp::lcm(den, mp::denominator(c));
    std::vector<mp::cpp_int> ints;
    for (const auto& c : p.coefficients) ints.push_back(mp::numerator(c * Rational(den)));
    const mp::cpp_int lead = ints.back();

    std::vector<Rational> out;
    if (ints.front() == 0) out.push_back(0);
    PrecisionScope scope(std::max(ambient_precision(), 512));
    Polynomial numeric;
    for (const auto& c : p.coefficients) numeric.coefficients.push_back(to_scalar(c));
    for (const Scalar& x : solve(numeric).roots) {
        const Scalar scaled = x * Scalar::parse(lead.str());
        // Round to the nearest integer through its decimal expansion.
        Scalar rounded = Scalar::zero(scaled.precision_bits());
        mpfr_round(rounded.raw(), scaled.raw());
        char* text = nullptr;
        mpfr_asprintf(&text, "%.0Rf", rounded.raw());
        const mp::cpp_int num(text);
        mpfr_free_str(text);
        const Rational cand(num, lead);
        if (eval(p, cand) == 0 && std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
    }
    std::sort(out.begin(), out.end());
    return out;
}

ConstructibilityReport classify_number(const RationalPolynomial& poly) {
    const RationalPolynomial p = trimmed(poly);
    const int deg = p.degree();
    if (deg < 1 || deg > 4) {
        throw Error(ErrorKind::UnsupportedDegree, "classify_number handles degrees 1..4, got " + std::to_string(deg));
    }
    ConstructibilityReport rep;
    rep.poly = p;
    switch (deg) {
        case 1:
            rep.rational = true;
            rep.zul = rep.origami = Tri::Yes;
            rep.witness = "rational root " + Rational(-p.coefficients[0] / p.coefficients[1]).str();
            return rep;
        case 2:
            rep.zul = rep.origami = Tri::Yes;
            rep.witness = "degree 2: one quadratic extension";
            return rep;
        case 3:
            rep.zul = Tri::No;
            rep.origami = Tri::Yes;
            rep.witness = "degree 3: not a power of two; a single cubic extension";
            return rep;
        default: break;
    }
    // Monic, then x = y - b/4: y^4 + P y^2 + Q y + R.
    const Rational lead = p.coefficients[4];
    const Rational b = p.coefficients[3] / lead, c = p.coefficients[2] / lead;
    const Rational d = p.coefficients[1] / lead, e = p.coefficients[0] / lead;
    const Rational s = b / 4;
    const Rational P = c - 6 * s * s;
    const Rational Q = d - 2 * c * s + 8 * s * s * s;
    const Rational R = e - d * s + c * s * s - 3 * s * s * s * s;
    const RationalPolynomial resolvent{{-(Q * Q - 4 * P * R), -4 * R, -P, Rational(1)}};
    const auto zs = rational_roots(resolvent);
    rep.origami = Tri::Yes;
    if (!zs.empty()) {
        rep.zul = Tri::Yes;
        rep.witness = "resolvent " + resolvent.to_string() + " has rational root " + zs.front().str() +
                      ": tower of two quadratic extensions";
    } else {
        rep.zul = Tri::Unknown;
        rep.witness = "resolvent " + resolvent.to_string() + " has no rational root; no quadratic tower certified";
    }
    return rep;
}

}  // namespace origami
