#pragma once

// Which regular polygons and which algebraic numbers are reachable with
// compass and straightedge ("zul") versus origami folds.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace origami {

using Rational = boost::multiprecision::cpp_rational;

struct RationalPolynomial {
    /// Ascending degree.
    std::vector<Rational> coefficients;

    int degree() const;
    std::string to_string() const;
};

enum class Tri { Yes, No, Unknown };
std::string_view to_string(Tri t);

struct ConstructibilityReport {
    /// "n-gon" reports carry n; number reports carry the polynomial.
    std::optional<std::uint64_t> n;
    std::optional<RationalPolynomial> poly;
    bool rational = false;
    Tri zul = Tri::Unknown;
    Tri origami = Tri::Unknown;
    std::string witness;
};

/// Deterministic for all 64-bit inputs.
bool is_prime(std::uint64_t n);
/// Prime factorization in increasing order of primes.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

/// Throws OutOfRange for p < 2.
bool is_fermat_prime(std::uint64_t p);
bool is_pierpont_prime(std::uint64_t p);

/// n = 2^s times distinct Fermat primes. Throws OutOfRange for n < 3.
ConstructibilityReport zul_ngon_constructible(std::uint64_t n);
/// n = 2^r 3^s times distinct Pierpont primes > 3. Throws OutOfRange for n < 3.
ConstructibilityReport origami_ngon_constructible(std::uint64_t n);

/// d = 2^a 3^b. Throws OutOfRange for d < 1.
bool degree_tower_admissible(std::uint64_t d);

/// Classifies a root of `poly`, which the caller asserts is irreducible over
/// the rationals. Degrees 1..4; throws UnsupportedDegree otherwise.
ConstructibilityReport classify_number(const RationalPolynomial& poly);

/// Rational roots of a polynomial with rational coefficients (exact).
std::vector<Rational> rational_roots(const RationalPolynomial& poly);

}  // namespace origami
