#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "chevalley/scalars.hpp"
#include "support.hpp"

using namespace chevalley;
using testing::small_rational;

namespace {

PrimeSupport primes(std::initializer_list<long> ps) {
  PrimeSupport s;
  for (long p : ps) s.insert(Integer(p));
  return s;
}

// p(1/T) computed by reversing coefficients: T^{-deg}·Σ c_k T^{deg-k}.
RationalFunction reciprocal_substitution(const Polynomial& p) {
  std::vector<Rational> reversed(p.coefficients().rbegin(), p.coefficients().rend());
  return RationalFunction(Polynomial(reversed), Polynomial::monomial(Rational(1), p.degree()));
}

// p(-T) by flipping odd coefficients.
Polynomial negated_argument(const Polynomial& p) {
  std::vector<Rational> c = p.coefficients();
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return Polynomial(c);
}

Polynomial random_polynomial(std::mt19937_64& rng, int max_degree) {
  std::vector<Rational> c;
  const int degree = static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree + 1));
  for (int k = 0; k <= degree; ++k) c.push_back(rng() % 3 == 0 ? Rational(0) : small_rational(rng));
  return Polynomial(c);
}

RationalFunction random_function(std::mt19937_64& rng) {
  Polynomial den = random_polynomial(rng, 2);
  if (den.is_zero()) den = Polynomial(Rational(1));
  return RationalFunction(random_polynomial(rng, 3), den);
}

QuadraticScalar random_quadratic(std::mt19937_64& rng, long d) {
  return {small_rational(rng), rng() % 2 ? small_rational(rng) : Rational(0), d};
}

}  // namespace

TEST_CASE("nu on examples") {
  CHECK(nu(Rational(1)).empty());
  CHECK(nu(Rational(Integer(12), Integer(5))) == primes({2, 3, 5}));
  CHECK(nu(Rational(Integer(-4), Integer(9))) == primes({2, 3}));
  CHECK_THROWS_KIND(nu(Rational(0)), ZeroArgument);
}

TEST_CASE("nu_pairwise_disjoint on examples") {
  CHECK(nu_pairwise_disjoint({Rational(2), Rational(3), Rational(Integer(5), Integer(7))}));
  CHECK_FALSE(nu_pairwise_disjoint({Rational(2), Rational(6)}));
  CHECK(nu_pairwise_disjoint({Rational(1), Rational(1)}));
  CHECK_THROWS_KIND(nu_pairwise_disjoint({Rational(2), Rational(0)}), ZeroArgument);
  CHECK_THROWS_KIND(nu_pairwise_disjoint({Rational(2), Rational(6), Rational(0)}), ZeroArgument);
}

TEST_CASE("nu of a product lies in the union; nu(p) = {p}") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const Rational x = small_rational(rng, 60);
    const Rational y = small_rational(rng, 60);
    PrimeSupport u = nu(x);
    const PrimeSupport ny = nu(y);
    u.insert(ny.begin(), ny.end());
    for (const auto& p : nu(x * y)) CHECK(u.count(p) == 1);
  }
  for (long p : {2L, 3L, 5L, 97L, 7919L}) CHECK(nu(Rational(p)) == primes({p}));
  Integer big("1000000000000000000000000000057");  // prime
  CHECK(nu(Rational(big)) == PrimeSupport{big});
}

TEST_CASE("field automorphism examples") {
  CHECK(apply_field_automorphism(FieldAutomorphism::identity(), Rational(Integer(7), Integer(3))) ==
        Rational(Integer(7), Integer(3)));
  const QuadraticScalar x{Rational(1), Rational(2), 2};
  CHECK(apply_field_automorphism(FieldAutomorphism::conjugation(), x) == QuadraticScalar{Rational(1), Rational(-2), 2});

  const auto inversion = FieldAutomorphism::mobius(Rational(0), Rational(1), Rational(1), Rational(0));
  const Polynomial p({Rational(1), Rational(0), Rational(1)});  // T^2 + 1
  const RationalFunction image = apply_field_automorphism(inversion, RationalFunction(p));
  CHECK(image == reciprocal_substitution(p));
  CHECK(image.to_string() == "(T^2+1)/(T^2)");
  CHECK(image.denominator().leading().is_one());
}

TEST_CASE("Mobius substitution matches the coefficient oracles") {
  std::mt19937_64 rng(5);
  const auto inversion = FieldAutomorphism::mobius(Rational(0), Rational(1), Rational(1), Rational(0));
  const auto negation = FieldAutomorphism::mobius(Rational(-1), Rational(0), Rational(0), Rational(1));
  for (int i = 0; i < 200; ++i) {
    const Polynomial p = random_polynomial(rng, 5);
    if (p.is_zero()) continue;
    CHECK(apply_field_automorphism(inversion, RationalFunction(p)) == reciprocal_substitution(p));
    CHECK(apply_field_automorphism(negation, RationalFunction(p)) == RationalFunction(negated_argument(p)));
  }
}

TEST_CASE("field automorphisms are ring homomorphisms") {
  std::mt19937_64 rng(17);
  const std::vector<FieldAutomorphism> mobius{
      FieldAutomorphism::mobius(Rational(-1), Rational(0), Rational(0), Rational(1)),
      FieldAutomorphism::mobius(Rational(0), Rational(1), Rational(1), Rational(0)),
      FieldAutomorphism::mobius(Rational(0), Rational(1), Rational(-1), Rational(1)),  // T -> 1/(1-T), order 3
  };
  for (int i = 0; i < 1000; ++i) {
    const auto& delta = mobius[static_cast<std::size_t>(i) % mobius.size()];
    const RationalFunction f = random_function(rng);
    const RationalFunction g = random_function(rng);
    CHECK(apply_field_automorphism(delta, f + g) == apply_field_automorphism(delta, f) + apply_field_automorphism(delta, g));
    CHECK(apply_field_automorphism(delta, f * g) == apply_field_automorphism(delta, f) * apply_field_automorphism(delta, g));

    const auto conj = FieldAutomorphism::conjugation();
    const QuadraticScalar x = random_quadratic(rng, 3);
    const QuadraticScalar y = random_quadratic(rng, 3);
    CHECK(apply_field_automorphism(conj, x + y) == apply_field_automorphism(conj, x) + apply_field_automorphism(conj, y));
    CHECK(apply_field_automorphism(conj, x * y) == apply_field_automorphism(conj, x) * apply_field_automorphism(conj, y));
  }
  CHECK(apply_field_automorphism(mobius[2], RationalFunction(Rational(1))).is_one());
}

TEST_CASE("order-many applications return the input") {
  std::mt19937_64 rng(23);
  const auto order3 = FieldAutomorphism::mobius(Rational(0), Rational(1), Rational(-1), Rational(1));
  CHECK(order3.order() == 3);
  CHECK(FieldAutomorphism::conjugation().order() == 2);
  for (int i = 0; i < 100; ++i) {
    const RationalFunction f = random_function(rng);
    RationalFunction g = f;
    for (int k = 0; k < order3.order(); ++k) g = apply_field_automorphism(order3, g);
    CHECK(g == f);
    const QuadraticScalar x = random_quadratic(rng, -5);
    CHECK(apply_field_automorphism(FieldAutomorphism::conjugation(),
                                   apply_field_automorphism(FieldAutomorphism::conjugation(), x)) == x);
  }
}

TEST_CASE("infinite-order and mismatched automorphisms are rejected") {
  CHECK_THROWS_KIND(FieldAutomorphism::mobius(Rational(1), Rational(1), Rational(0), Rational(1)), InfiniteOrderSigma);
  CHECK_THROWS_KIND(FieldAutomorphism::mobius(Rational(2), Rational(0), Rational(0), Rational(1)), InfiniteOrderSigma);
  CHECK_THROWS_KIND(FieldAutomorphism::mobius(Rational(1), Rational(2), Rational(2), Rational(4)), InfiniteOrderSigma);
  CHECK_THROWS_KIND(RationalFunctionField{}.check(FieldAutomorphism::conjugation()), FieldMismatch);
  CHECK_THROWS_KIND(RationalField{}.check(FieldAutomorphism::conjugation()), FieldMismatch);
  const QuadraticScalar a{Rational(1), Rational(1), 2};
  const QuadraticScalar b{Rational(1), Rational(1), 3};
  CHECK_THROWS_KIND(a + b, FieldMismatch);
  CHECK_THROWS_KIND(QuadraticField(4), IncompatibleField);
  CHECK_THROWS_KIND(QuadraticField(1), IncompatibleField);
}

TEST_CASE("evaluate") {
  const RationalFunction t = RationalFunction::variable();
  CHECK(evaluate(t * t, Rational(3)) == Rational(9));
  CHECK(evaluate((t + Rational(1)) / (t - Rational(1)), Rational(2)) == Rational(3));
  const RationalFunction f = (t * t - Rational(1)) / (t - Rational(1));
  CHECK(f == t + Rational(1));
  CHECK(evaluate(f, Rational(1)) == Rational(2));
  CHECK_THROWS_KIND(evaluate(Rational(1) / t, Rational(0)), PoleAtPoint);
}

TEST_CASE("distinct_value_inputs") {
  const RationalFunction t = RationalFunction::variable();
  const auto squares = distinct_value_inputs(t * t, 3);
  CHECK(squares == std::vector<Rational>{Rational(1), Rational(2), Rational(3)});
  CHECK_THROWS_KIND(distinct_value_inputs(RationalFunction(Rational(5)), 3), ConstantFunction);

  // T + 1/T: compare against an exhaustive scan of small rationals.
  const RationalFunction f = t + t.inverse();
  const auto inputs = distinct_value_inputs(f, 4);
  REQUIRE(inputs.size() == 4);
  std::set<Rational> values;
  for (const auto& x : inputs) values.insert(evaluate(f, x));
  CHECK(values.size() == 4);
  for (std::size_t i = 1; i < inputs.size(); ++i) CHECK(inputs[i - 1] < inputs[i]);
  for (long p = -12; p <= 12; ++p) {
    for (long q = 1; q <= 12; ++q) {
      const Rational x{Integer(p), Integer(q)};
      if (x.is_zero()) continue;
      // x and 1/x collide; no other pair does.
      for (const auto& y : inputs) {
        if (evaluate(f, x) == evaluate(f, y)) CHECK((x == y || x == y.inverse()));
      }
    }
  }

  // (T-2)^2 collides at 1 and 3.
  const RationalFunction g = (t - Rational(2)) * (t - Rational(2));
  CHECK(distinct_value_inputs(g, 3) == std::vector<Rational>{Rational(1), Rational(2), Rational(4)});
  // A pole at 2 is skipped.
  CHECK(distinct_value_inputs(t / (t - Rational(2)), 2) == std::vector<Rational>{Rational(1), Rational(3)});
}

TEST_CASE("canonical forms and printing round-trip") {
  std::mt19937_64 rng(29);
  const RationalFunctionField qt;
  const QuadraticField q2(2);
  const QuadraticField qm7(-7);
  const RationalField q;
  for (int i = 0; i < 300; ++i) {
    const RationalFunction f = random_function(rng);
    CHECK(RationalFunction(f.numerator(), f.denominator()) == f);
    CHECK(f.denominator().leading().is_one());
    CHECK(gcd(f.numerator(), f.denominator()).degree() <= 0);
    CHECK(qt.parse(qt.format(f)) == f);
    const QuadraticScalar x = random_quadratic(rng, 2);
    CHECK(q2.parse(q2.format(x)) == x);
    const QuadraticScalar y = random_quadratic(rng, -7);
    CHECK(qm7.parse(qm7.format(y)) == y);
    const Rational r = small_rational(rng, 1000);
    CHECK(q.parse(q.format(r)) == r);
    CHECK(Rational::parse(r.to_string()) == r);
  }
  CHECK(Rational(Integer(6), Integer(-4)).to_string() == "-3/2");
  CHECK(q2.format(QuadraticScalar{Rational(1), Rational(-2), 2}) == "1-2*sqrt(2)");
  CHECK(qt.parse("(T^2+1)/(T^2)") == qt.parse("1 + T^-2"));
  CHECK_THROWS_KIND(q.parse("1/0"), ParseError);
  CHECK_THROWS_KIND(q.parse("2 +"), ParseError);
  CHECK_THROWS_KIND(q.parse("sqrt(2)"), ParseError);
}

TEST_CASE("quadratic arithmetic") {
  const QuadraticScalar x{Rational(1), Rational(2), 2};
  CHECK(x * x.inverse() == QuadraticScalar{Rational(1), Rational(0), 2});
  CHECK(x.norm() == Rational(-7));
  CHECK(x.pow(-2) * x.pow(2) == QuadraticScalar{Rational(1), Rational(0), 2});
  CHECK_THROWS_KIND(QuadraticScalar(Rational(0), Rational(0), 2).inverse(), NonInvertibleScalar);
  CHECK(is_square_free(6));
  CHECK_FALSE(is_square_free(12));
}
