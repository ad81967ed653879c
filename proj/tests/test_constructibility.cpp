#include "doctest.h"

#include "origami/constructibility.hpp"
#include "origami/error.hpp"

#include <set>

using namespace origami;

namespace {

bool trial_division_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

bool zul(std::uint64_t n) { return zul_ngon_constructible(n).zul == Tri::Yes; }
bool ori(std::uint64_t n) { return origami_ngon_constructible(n).origami == Tri::Yes; }

RationalPolynomial poly(std::initializer_list<int> descending) {
    RationalPolynomial p;
    for (int c : descending) p.coefficients.insert(p.coefficients.begin(), Rational(c));
    return p;
}

}  // namespace

TEST_CASE("primality agrees with trial division") {
    for (std::uint64_t n = 0; n < 20000; ++n) CHECK(is_prime(n) == trial_division_prime(n));
    CHECK(is_prime(18446744073709551557ULL));
    CHECK_FALSE(is_prime(4294967297ULL));  // 641 * 6700417
}

TEST_CASE("factorize") {
    const auto f = factorize(4294967297ULL);
    REQUIRE(f.size() == 2);
    CHECK(f[0].first == 641);
    CHECK(f[1].first == 6700417);
    const auto g = factorize(720);
    CHECK(g == std::vector<std::pair<std::uint64_t, int>>{{2, 4}, {3, 2}, {5, 1}});
}

TEST_CASE("Fermat primes") {
    CHECK(is_fermat_prime(17));
    CHECK_FALSE(is_fermat_prime(7));
    CHECK(is_fermat_prime(65537));
    std::set<std::uint64_t> found;
    for (std::uint64_t p = 2; p < 70000; ++p) {
        if (is_fermat_prime(p)) found.insert(p);
    }
    CHECK(found == std::set<std::uint64_t>{3, 5, 17, 257, 65537});
    CHECK_FALSE(is_fermat_prime(4294967297ULL));
    CHECK_THROWS_AS(is_fermat_prime(1), Error);
}

TEST_CASE("Pierpont primes") {
    CHECK(is_pierpont_prime(7));
    CHECK_FALSE(is_pierpont_prime(11));
    CHECK(is_pierpont_prime(13));
    std::set<std::uint64_t> found;
    for (std::uint64_t p = 2; p < 100; ++p) {
        if (is_pierpont_prime(p)) found.insert(p);
    }
    CHECK(found == std::set<std::uint64_t>{2, 3, 5, 7, 13, 17, 19, 37, 73, 97});
}

TEST_CASE("n-gon criteria") {
    CHECK(zul(17));
    CHECK_FALSE(zul(7));
    CHECK(zul(15));
    CHECK(ori(7));
    CHECK_FALSE(ori(11));
    CHECK(ori(9));
    CHECK(origami_ngon_constructible(7).witness == "7 = 2·3+1 Pierpont");
    CHECK(zul_ngon_constructible(17).witness == "Fermat prime 17");
    CHECK(zul_ngon_constructible(15).witness == "15 = 3·5; Fermat prime 3; Fermat prime 5");
    CHECK(zul_ngon_constructible(9).witness == "9 = 3^2; Fermat prime 3 repeated");
    CHECK_THROWS_AS(zul_ngon_constructible(2), Error);
    // 49 = 7^2 repeats a Pierpont prime; 27 is a pure power of 3.
    CHECK_FALSE(ori(49));
    CHECK(ori(27));
}

TEST_CASE("tables for n <= 20") {
    // Factor each n by hand: odd parts 1, 3, 5, 15, 17 are products of distinct
    // Fermat primes; 7, 9 (3^2), 13, 19 need the Pierpont criterion.
    std::set<int> zul_set, ori_only;
    for (int n = 3; n <= 20; ++n) {
        if (zul(n)) zul_set.insert(n);
        else if (ori(n)) ori_only.insert(n);
    }
    CHECK(zul_set == std::set<int>{3, 4, 5, 6, 8, 10, 12, 15, 16, 17, 20});
    CHECK(ori_only == std::set<int>{7, 9, 13, 14, 18, 19});
}

TEST_CASE("property: monotonicity and closure") {
    for (std::uint64_t n = 3; n <= 10000; ++n) {
        if (zul(n)) CHECK(ori(n));
    }
    for (std::uint64_t n = 3; n <= 5000; ++n) {
        const bool z = zul(n), o = ori(n);
        if (z) CHECK(zul(2 * n));
        if (o) CHECK(ori(2 * n));
        for (std::uint64_t a = 3; a <= n; ++a) {
            if (n % a != 0) continue;
            if (z) CHECK(zul(a));
            if (o) CHECK(ori(a));
        }
    }
}

TEST_CASE("degree towers") {
    CHECK(degree_tower_admissible(1));
    CHECK(degree_tower_admissible(6));
    CHECK_FALSE(degree_tower_admissible(10));
    CHECK(degree_tower_admissible(1728));
    CHECK_THROWS_AS(degree_tower_admissible(0), Error);
}

TEST_CASE("rational roots are exact") {
    // (2x + 1)(3x - 2)(x - 5) = 6x^3 - 31x^2 + 3x + 10
    const RationalPolynomial p = poly({6, -31, 3, 10});
    const auto roots = rational_roots(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == Rational(-1, 2));
    CHECK(roots[1] == Rational(2, 3));
    CHECK(roots[2] == Rational(5));
    CHECK(rational_roots(poly({1, 0, -2})).empty());
    CHECK(rational_roots(poly({1, 0, 0})) == std::vector<Rational>{0});
}

TEST_CASE("classify_number") {
    auto rep = classify_number(poly({1, 0, 0, -2}));
    CHECK(rep.zul == Tri::No);
    CHECK(rep.origami == Tri::Yes);
    rep = classify_number(poly({1, 0, -3, -1}));
    CHECK(rep.zul == Tri::No);
    CHECK(rep.origami == Tri::Yes);
    rep = classify_number(poly({1, 0, -5}));
    CHECK(rep.zul == Tri::Yes);
    rep = classify_number(poly({3, -1}));
    CHECK(rep.rational);
    CHECK(rep.zul == Tri::Yes);
    // sqrt(2) + sqrt(3): x^4 - 10x^2 + 1, a tower of two quadratics.
    rep = classify_number(poly({1, 0, -10, 0, 1}));
    CHECK(rep.zul == Tri::Yes);
    CHECK(rep.origami == Tri::Yes);
    // Fifth roots of unity: x^4 + x^3 + x^2 + x + 1 has a cyclic group of order 4.
    rep = classify_number(poly({1, 1, 1, 1, 1}));
    CHECK(rep.zul == Tri::Yes);
    // x^4 - x - 1 has Galois group S4; its resolvent has no rational root.
    rep = classify_number(poly({1, 0, 0, -1, -1}));
    CHECK(rep.zul == Tri::Unknown);
    CHECK(rep.origami == Tri::Yes);
    CHECK_THROWS_AS(classify_number(poly({1, 0, 0, 0, 0, -2})), Error);
}

TEST_CASE("property: zul yes implies origami yes for numbers") {
    for (int a = -5; a <= 5; ++a) {
        for (int b = -5; b <= 5; ++b) {
            for (const auto& p : {poly({1, 0, a, b}), poly({1, a, 0, b, 1}), poly({2, a, b})}) {
                const auto rep = classify_number(p);
                if (rep.zul == Tri::Yes) CHECK(rep.origami == Tri::Yes);
            }
        }
    }
}
