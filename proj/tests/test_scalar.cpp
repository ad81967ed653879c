#include "doctest.h"

#include "origami/error.hpp"
#include "origami/scalar.hpp"

#include <sstream>

using namespace origami;

TEST_CASE("default and minimum precision") {
    CHECK(Scalar(1).precision_bits() == 256);
    CHECK(Scalar::zero(16).precision_bits() == kMinPrecisionBits);
    {
        PrecisionScope scope(512);
        CHECK(Scalar(3).precision_bits() == 512);
        CHECK(ambient_precision() == 512);
    }
    CHECK(ambient_precision() == 256);
}

TEST_CASE("binary operations widen to the larger precision") {
    const Scalar a = Scalar(1).with_precision(128);
    const Scalar b = Scalar(3).with_precision(300);
    CHECK((a + b).precision_bits() == 300);
    CHECK((a / b).precision_bits() == 300);
}

TEST_CASE("parse keeps full precision and rejects garbage") {
    const Scalar third = Scalar::parse("0.1");
    CHECK(third != Scalar(0.1));
    CHECK(near(third * Scalar(10), Scalar(1)));
    CHECK(Scalar::parse("-1.5e3") == Scalar(-1500));
    CHECK_THROWS_AS(Scalar::parse("1.2.3"), Error);
    CHECK_THROWS_AS(Scalar::parse(""), Error);
    CHECK_THROWS_AS(Scalar::parse("abc"), Error);
    try {
        Scalar::parse("x");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidNumber);
    }
}

TEST_CASE("decimal output round-trips the binary value") {
    for (int bits : {64, 128, 256, 512}) {
        PrecisionScope scope(bits);
        const Scalar x = sqrt(Scalar(2)) / Scalar(7);
        const Scalar back = Scalar::parse(x.to_string(), bits);
        CHECK(back.identical(x));
    }
}

TEST_CASE("three-valued comparison at eps_cmp") {
    const Scalar eps = eps_cmp();
    CHECK(eps == ldexp(Scalar(1), -128));
    CHECK(compare(Scalar(1), Scalar(1) + eps / Scalar(2)) == Cmp::Equal);
    CHECK(compare(Scalar(1), Scalar(1) + eps * Scalar(2)) == Cmp::Less);
    CHECK(compare(Scalar(2), Scalar(1)) == Cmp::Greater);
    CHECK(near_zero(eps));
    CHECK_FALSE(near_zero(eps * Scalar(3)));
}

TEST_CASE("elementary functions") {
    const Scalar pi = Scalar::pi();
    CHECK(near(cos(pi / Scalar(3)), Scalar(1) / Scalar(2)));
    CHECK(near(cbrt(Scalar(-27)), Scalar(-3)));
    CHECK(near(atan2(Scalar(1), Scalar(1)), pi / Scalar(4)));
    CHECK(near(radians_to_degrees(degrees_to_radians(Scalar(37))), Scalar(37)));
    CHECK(near(acos(Scalar(0)), ldexp(pi, -1)));
}

TEST_CASE("stream output") {
    std::ostringstream os;
    os << Scalar(2);
    CHECK(os.str().rfind("2.", 0) == 0);
}
