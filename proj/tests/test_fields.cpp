#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "qf/errors.hpp"
#include "qf/fields.hpp"
#include "qf/form.hpp"
#include "qf/oracle.hpp"

using namespace qf;

namespace {

Rational rnd_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-30, 30), den(1, 12);
    int n = 0;
    while (n == 0) n = num(rng);
    return Rational(n, den(rng));
}

}  // namespace

TEST_CASE("square_class over Q: squarefree representative") {
    FieldDesc Q = FieldDesc::rationals();
    CHECK(square_class(Rational(4), Q).rep == 1);
    CHECK(square_class(Rational(-8), Q).rep == -2);
    CHECK(square_class(Rational(18), Q).rep == 2);
    CHECK(square_class(Rational(1, 2), Q).rep == 2);  // 1/2 ~ 2
    CHECK(square_class(Rational(-75, 28), Q).rep == -21);
    CHECK_THROWS_AS(square_class(Rational(0), Q), ZeroScalar);
}

TEST_CASE("square_class over Finite(3): least nonresidue representative") {
    // oracle: squares mod 3 by enumeration
    std::set<long> squares;
    for (long x = 1; x < 3; ++x) squares.insert(x * x % 3);
    CHECK(squares == std::set<long>{1});
    FieldDesc F3 = FieldDesc::finite(3);
    CHECK(square_class(Rational(2), F3).rep == 2);  // the nonresidue
    CHECK(square_class(Rational(4), F3).rep == 1);
    CHECK(square_class(Rational(-1), F3).rep == 2);  // -1 = 2 mod 3
}

TEST_CASE("square_class over Reals and Padic") {
    CHECK(square_class(Rational(-3), FieldDesc::reals()).rep == -1);
    CHECK(square_class(Rational(5), FieldDesc::reals()).rep == 1);
    FieldDesc Q5 = FieldDesc::padic(5);
    CHECK(square_class(Rational(5), Q5).rep == 5);
    CHECK(square_class(Rational(50), Q5).rep == 2);  // 50 = 2 * 5^2: even valuation, unit 2
    CHECK(square_class(Rational(4), Q5).rep == 1);
    FieldDesc Q2 = FieldDesc::padic(2);
    CHECK(square_class(Rational(7), Q2).rep == 7);
    CHECK(square_class(Rational(8), Q2).rep == 2);   // v = 3 odd, unit 1
    CHECK(square_class(Rational(-1), Q2).rep == 7);  // -1 = 7 mod 8
}

TEST_CASE("square_class respects products and is idempotent") {
    std::mt19937 rng(7);
    for (const auto& F : {FieldDesc::rationals(), FieldDesc::reals(), FieldDesc::finite(5),
                          FieldDesc::padic(2), FieldDesc::padic(7)}) {
        for (int i = 0; i < 100; ++i) {
            Rational a = rnd_rational(rng), b = rnd_rational(rng);
            SquareClass ca = square_class(a, F), cb = square_class(b, F);
            CHECK(square_class(a * b, F) == sq_mul(ca, cb));
            CHECK(square_class(Rational(ca.rep), F) == ca);  // idempotent
            CHECK(square_class(a * b * b, F) == ca);         // squares vanish
        }
    }
}

TEST_CASE("legendre_symbol examples and exhaustive agreement for p <= 100") {
    CHECK(legendre_symbol(Int(1), Int(7)) == 1);
    CHECK(legendre_symbol(Int(10), Int(5)) == 0);
    // oracle: squares mod 5 are {0,1,4}
    std::set<long> sq5;
    for (long x = 0; x < 5; ++x) sq5.insert(x * x % 5);
    CHECK(sq5 == std::set<long>{0, 1, 4});
    CHECK(legendre_symbol(Int(2), Int(5)) == -1);

    for (long p = 3; p <= 100; p += 2) {
        if (!is_prime(Int(p))) continue;
        std::set<long> squares;
        for (long x = 1; x < p; ++x) squares.insert(x * x % p);
        for (long a = 0; a < p; ++a) {
            int expect = a == 0 ? 0 : (squares.count(a) ? 1 : -1);
            CHECK(legendre_symbol(Int(a), Int(p)) == expect);
            CHECK(legendre_symbol(Int(a - p), Int(p)) == expect);
        }
    }
    CHECK_THROWS_AS(legendre_symbol(Int(2), Int(4)), InvalidPrime);
    CHECK_THROWS_AS(legendre_symbol(Int(2), Int(2)), InvalidPrime);
}

TEST_CASE("hilbert_symbol basic values") {
    for (const auto& v : {Place::reals(), Place::padic(2), Place::padic(5)}) {
        CHECK(hilbert_symbol(Rational(1), Rational(-7), v) == 1);  // z = x, y = 0
        CHECK(hilbert_symbol(Rational(1), Rational(3), v) == 1);
    }
    CHECK(hilbert_symbol(Rational(-1), Rational(-1), Place::reals()) == -1);
    CHECK_THROWS_AS(hilbert_symbol(Rational(0), Rational(1), Place::reals()), ZeroScalar);
}

TEST_CASE("hilbert_symbol (2,5) at Q_5 pinned by the local solvability oracle") {
    // (a,b)_p = +1 iff <a, b, -1> is isotropic over Q_p
    QuadraticForm q(FieldDesc::rationals(), {Rational(2), Rational(5), Rational(-1)});
    bool solvable = oracle::bf_local_solvable(q, 5);
    int sym = hilbert_symbol(Rational(2), Rational(5), Place::padic(5));
    CHECK(sym == (solvable ? 1 : -1));
    CHECK(sym == -1);
}

TEST_CASE("hilbert_symbol agrees with the solvability oracle on random pairs") {
    std::mt19937 rng(11);
    for (long p : {2L, 3L, 5L, 7L}) {
        for (int i = 0; i < 60; ++i) {
            Rational a = rnd_rational(rng), b = rnd_rational(rng);
            QuadraticForm q(FieldDesc::rationals(), {a, b, Rational(-1)});
            bool solvable = oracle::bf_local_solvable(q, p);
            CHECK(hilbert_symbol(a, b, Place::padic(p)) == (solvable ? 1 : -1));
        }
    }
}

TEST_CASE("hilbert_symbol laws: symmetry, bimultiplicativity, (a,-a) = 1") {
    std::mt19937 rng(13);
    for (const auto& v :
         {Place::reals(), Place::padic(2), Place::padic(3), Place::padic(5), Place::padic(7)}) {
        for (int i = 0; i < 200; ++i) {
            Rational a = rnd_rational(rng), a2 = rnd_rational(rng), b = rnd_rational(rng);
            CHECK(hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v));
            CHECK(hilbert_symbol(a * a2, b, v) ==
                  hilbert_symbol(a, b, v) * hilbert_symbol(a2, b, v));
            CHECK(hilbert_symbol(a, -a, v) == 1);
        }
    }
}

TEST_CASE("hilbert product formula over all relevant places") {
    std::mt19937 rng(17);
    for (int i = 0; i < 200; ++i) {
        Rational a = rnd_rational(rng), b = rnd_rational(rng);
        std::set<long> primes{2};
        for (const auto& r : {a, b})
            for (const auto& [p, e] : factorize(Int(numerator(r) * denominator(r))))
                primes.insert(static_cast<long>(p));
        int prod = hilbert_symbol(a, b, Place::reals());
        for (long p : primes) prod *= hilbert_symbol(a, b, Place::padic(p));
        CHECK(prod == 1);
    }
}

TEST_CASE("is_local_square") {
    CHECK(is_local_square(Rational(4), Place::padic(3)));
    CHECK_FALSE(is_local_square(Rational(3), Place::padic(3)));
    CHECK(is_local_square(Rational(17), Place::padic(2)));  // 17 = 1 mod 8
    CHECK_FALSE(is_local_square(Rational(5), Place::padic(2)));
    CHECK_FALSE(is_local_square(Rational(-4), Place::reals()));
}

TEST_CASE("relevant_places") {
    FieldDesc Q = FieldDesc::rationals();
    auto places = [](const QuadraticForm& q) {
        std::set<std::string> out;
        for (const auto& v : relevant_places(q)) out.insert(v.str());
        return out;
    };
    CHECK(places(QuadraticForm(Q, {Rational(1), Rational(-1)})) == std::set<std::string>{"R", "2"});
    CHECK(places(QuadraticForm(Q, {Rational(1), Rational(3)})) ==
          std::set<std::string>{"R", "2", "3"});
    CHECK(places(QuadraticForm(Q, {Rational(5), Rational(-10)})) ==
          std::set<std::string>{"R", "2", "5"});
    // squarefree parts matter, not raw entries: 4 and 9 contribute nothing
    CHECK(places(QuadraticForm(Q, {Rational(4), Rational(9)})) == std::set<std::string>{"R", "2"});
}

TEST_CASE("FieldDesc validation") {
    CHECK_THROWS_AS(FieldDesc::finite(2), InvalidPrime);  // characteristic 2 excluded
    CHECK_THROWS_AS(FieldDesc::finite(9), InvalidPrime);
    CHECK_NOTHROW(FieldDesc::padic(2));
    CHECK_THROWS_AS(FieldDesc::padic(6), InvalidPrime);
}
