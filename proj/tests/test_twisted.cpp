#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "chevalley/twisted.hpp"
#include "support.hpp"

using namespace chevalley;
using testing::group_of;
using testing::small_rational;

namespace {

using QGroup = ChevalleyGroup<RationalField>;

template <class Field>
Automorphism<Field> graph_automorphism(const ChevalleyGroup<Field>& g, std::vector<int> rho,
                                       FieldAutomorphism delta = FieldAutomorphism::identity()) {
  AutomorphismParts<Field> parts;
  parts.rho = std::move(rho);
  parts.delta = delta;
  return make_automorphism(g, parts);
}

Automorphism<RationalField> diagonal(const QGroup& g, std::vector<Rational> chi) {
  AutomorphismParts<RationalField> parts;
  parts.chi = Character<RationalField>{std::move(chi)};
  return make_automorphism(g, parts);
}

template <class Field>
Matrix<Field> random_element(const ChevalleyGroup<Field>& g, std::mt19937_64& rng, std::size_t length = 4) {
  return g.evaluate(random_word(g, rng, length));
}

Matrix<RationalField> h_product(const QGroup& g, const std::vector<long>& t) {
  auto m = g.identity();
  for (int i = 0; i < g.rank(); ++i) {
    m = m * g.torus_product(g.roots().simple_index(i), Rational(t[static_cast<std::size_t>(i)]));
  }
  return m;
}

}  // namespace

TEST_CASE("graph matrices conjugate x_alpha(t) to x_rho(alpha)(gamma t)") {
  std::mt19937_64 rng(1);
  for (const char* name : {"A4", "D4", "E6"}) {
    CAPTURE(name);
    const QGroup g = group_of<RationalField>(name);
    const auto& rs = g.roots();
    for (const auto& sym : diagram_symmetries(rs)) {
      const auto r = graph_matrix(g, sym);
      const auto r_inv = r.inverse();
      const auto signs = graph_signs(g.basis(), sym);
      for (int a = 0; a < static_cast<int>(rs.size()); ++a) {
        const int image = sym.root_permutation[static_cast<std::size_t>(a)];
        const int gamma = signs[static_cast<std::size_t>(a)];
        CHECK(std::abs(gamma) == 1);
        if (std::abs(height(rs.root(a))) == 1) CHECK(gamma == 1);
        if (std::string(name) != "E6" && a % 4 != 0) continue;
        const Rational t = small_rational(rng);
        CHECK(r * g.root_element(a, t) * r_inv == g.root_element(image, Rational(gamma) * t));
      }
      if (std::string(name) == "A4") CHECK(testing::preserves_brackets(g.basis(), r));
    }
  }
}

TEST_CASE("make_automorphism examples") {
  std::mt19937_64 rng(2);
  const QGroup a2 = group_of<RationalField>("A2");
  const auto id = make_automorphism(a2, AutomorphismParts<RationalField>{});
  CHECK(id.q.is_identity());
  CHECK(id.sigma.is_identity());
  CHECK(id.twisting_length() == 1);

  AutomorphismParts<RationalField> inner;
  inner.inner = random_word(a2, rng, 3);
  const auto phi_g = make_automorphism(a2, inner);
  CHECK(phi_g.q == a2.evaluate(inner.inner));

  // A2 graph with conjugation over Q(sqrt 2): find the order by repeated application.
  const auto q2 = group_of<QuadraticField>("A2", QuadraticField(2));
  const auto phi = graph_automorphism(q2, {1, 0}, FieldAutomorphism::conjugation());
  CHECK(phi.sigma.order() == 2);
  CHECK(phi.twisting_length() == 2);
  const QuadraticScalar s(Rational(1), Rational(1), 2);
  std::vector<Matrix<QuadraticField>> generators;
  for (int a = 0; a < static_cast<int>(q2.roots().size()); ++a) generators.push_back(q2.root_element(a, s));
  int order = 0;
  std::vector<Matrix<QuadraticField>> images = generators;
  for (int k = 1; k <= 8 && order == 0; ++k) {
    for (auto& x : images) x = apply(phi, x);
    if (images == generators) order = k;
  }
  CHECK(order > 0);
  CHECK(4 % order == 0);

  const QGroup d4 = group_of<RationalField>("D4");
  CHECK_THROWS_KIND(graph_automorphism(d4, {1, 0, 2, 3}), NoSuchSymmetry);
  CHECK_THROWS_KIND(graph_automorphism(a2, {0, 1}, FieldAutomorphism::conjugation()), IncompatibleField);
}

TEST_CASE("apply on torus elements") {
  const auto q2 = group_of<QuadraticField>("B2", QuadraticField(2));
  const auto conj = graph_automorphism(q2, {}, FieldAutomorphism::conjugation());
  const QuadraticScalar s(Rational(3), Rational(-1), 2);
  for (int a = 0; a < static_cast<int>(q2.roots().size()); ++a) {
    CHECK(apply(conj, q2.torus_product(a, s)) == q2.torus_product(a, s.conjugate()));
  }
  const QGroup a3 = group_of<RationalField>("A3");
  const auto rho = graph_automorphism(a3, {2, 1, 0});
  const auto sym = find_symmetry(a3.roots(), {2, 1, 0});
  for (int a = 0; a < static_cast<int>(a3.roots().size()); ++a) {
    CHECK(apply(rho, a3.torus_product(a, Rational(5))) ==
          a3.torus_product(sym.root_permutation[static_cast<std::size_t>(a)], Rational(5)));
  }
  std::mt19937_64 rng(3);
  const auto x = random_element(a3, rng);
  CHECK(apply(identity_automorphism(a3), x) == x);
}

TEST_CASE("apply is a homomorphism and composition respects apply") {
  std::mt19937_64 rng(4);
  const auto q2 = group_of<QuadraticField>("A2", QuadraticField(2));
  AutomorphismParts<QuadraticField> parts;
  parts.chi = Character<QuadraticField>{{QuadraticScalar(Rational(1), Rational(1), 2), q2.field().from_rational(Rational(3))}};
  parts.inner = random_word(q2, rng, 2);
  const std::vector<Automorphism<QuadraticField>> autos{
      graph_automorphism(q2, {1, 0}),
      graph_automorphism(q2, {}, FieldAutomorphism::conjugation()),
      graph_automorphism(q2, {1, 0}, FieldAutomorphism::conjugation()),
      make_automorphism(q2, parts),
  };
  for (int trial = 0; trial < 60; ++trial) {
    const auto& p1 = autos[rng() % autos.size()];
    const auto& p2 = autos[rng() % autos.size()];
    const auto& p3 = autos[rng() % autos.size()];
    const auto x = random_element(q2, rng, 3);
    const auto y = random_element(q2, rng, 3);
    CHECK(apply(compose(p1, p2), x) == apply(p1, apply(p2, x)));
    CHECK(apply(p1, x * y) == apply(p1, x) * apply(p1, y));
    const auto left = compose(compose(p1, p2), p3);
    const auto right = compose(p1, compose(p2, p3));
    CHECK(left.q == right.q);
    CHECK(left.sigma == right.sigma);
  }
}

TEST_CASE("power agrees with repeated composition") {
  const auto q2 = group_of<QuadraticField>("A2", QuadraticField(2));
  const auto phi = graph_automorphism(q2, {1, 0}, FieldAutomorphism::conjugation());
  const auto square = power(q2, phi, 2);
  CHECK(square.q == compose(phi, phi).q);
  CHECK(square.sigma.is_identity());
  CHECK(power(q2, phi, 0).q.is_identity());
}

TEST_CASE("reduce_mod_inner") {
  std::mt19937_64 rng(5);
  const QGroup a2 = group_of<RationalField>("A2");
  AutomorphismParts<RationalField> inner;
  inner.inner = random_word(a2, rng, 3);
  const auto reduced = reduce_mod_inner(a2, make_automorphism(a2, inner));
  CHECK(reduced.q.is_identity());
  CHECK_FALSE(reduced.notes.empty());

  const QGroup e8 = group_of<RationalField>("E8");
  std::vector<Rational> chi(8, Rational(1));
  chi = e8.root_character(e8.roots().simple_index(0), Rational(2)).values;
  CHECK(reduce_mod_inner(e8, diagonal(e8, chi)).q.is_identity());

  const auto phi = diagonal(a2, {Rational(2), Rational(1)});
  const auto d = a2.decompose_torus({{Rational(2), Rational(1)}});
  const auto r = reduce_mod_inner(a2, phi);
  CHECK(r.q == d.h2.matrix);
  CHECK(d.h1.matrix * r.q == phi.q);
}

TEST_CASE("class invariant examples") {
  std::mt19937_64 rng(6);
  const QGroup a2 = group_of<RationalField>("A2");
  const auto id = identity_automorphism(a2);
  const auto g = random_element(a2, rng);
  CHECK(class_invariant(id, g) == g.trace());
  CHECK(twisted_norm(id, g).m == 1);

  const auto rho = graph_automorphism(a2, {1, 0});
  const auto norm_e = twisted_norm(rho, a2.identity());
  CHECK(class_invariant(rho, a2.identity()) == norm_e.n.trace());

  // Hand-composed: Ψ(g)·N = g·(R g R⁻¹)·R·R.
  const auto h = h_product(a2, {2, 3});
  const auto r = graph_matrix(a2, find_symmetry(a2.roots(), {1, 0}));
  CHECK(class_invariant(rho, h) == (h * r * h * r.inverse() * r * r).trace());
  const auto charpoly = class_invariant_charpoly(rho, h);
  CHECK(charpoly.size() == a2.dimension() + 1);
  CHECK(-charpoly[a2.dimension() - 1] == class_invariant(rho, h));
}

TEST_CASE("psi is invariant under twisted conjugation") {
  std::mt19937_64 rng(7);
  const QGroup a3 = group_of<RationalField>("A3");
  const QGroup b2 = group_of<RationalField>("B2");
  const auto qt = group_of<RationalFunctionField>("A2");
  const std::vector<Automorphism<RationalField>> rational{
      graph_automorphism(a3, {2, 1, 0}),
      diagonal(b2, {Rational(2), Rational(-3)}),
  };
  for (const auto& phi : rational) {
    const QGroup& g = phi.q.size() == a3.dimension() ? a3 : b2;
    const auto x = random_element(g, rng);
    const auto psi = class_invariant(phi, x);
    for (int i = 0; i < 20; ++i) CHECK(class_invariant(phi, twisted_conjugate(random_element(g, rng), x, phi)) == psi);
  }
  const auto neg = graph_automorphism(qt, {1, 0}, FieldAutomorphism::mobius(Rational(-1), Rational(0), Rational(0), Rational(1)));
  CHECK(neg.twisting_length() == 2);
  Word<RationalFunctionField> w{{'x', 5, RationalFunction::variable()}, {'h', 1, RationalFunction::variable() + Rational(1)}};
  const auto x = qt.evaluate(w);
  const auto psi = class_invariant(neg, x);
  for (int i = 0; i < 10; ++i) CHECK(class_invariant(neg, twisted_conjugate(random_element(qt, rng, 3), x, neg)) == psi);
}

TEST_CASE("triality chain") {
  std::mt19937_64 rng(8);
  const QGroup d4 = group_of<RationalField>("D4");
  const auto phi = graph_automorphism(d4, {2, 1, 3, 0});
  CHECK(phi.twisting_length() == 3);
  for (int i = 0; i < 3; ++i) {
    const auto g = random_element(d4, rng, 3);
    const auto norm = twisted_norm(phi, g);
    CHECK(norm.m == 3);
    CHECK(norm.psi == g * apply(phi, g) * apply(phi, apply(phi, g)));
    CHECK(norm.n == phi.q * phi.q * phi.q);
    CHECK(class_invariant(phi, g) == (norm.psi * norm.n).trace());
  }
}

TEST_CASE("witness certificates verify; tampering is detected") {
  const QGroup b2 = group_of<RationalField>("B2");
  const auto phi = diagonal(b2, {Rational(2), Rational(1)});
  WitnessOptions options;
  options.n = 5;
  const auto cert = r_infinity_witness(b2, phi, options);
  REQUIRE(cert.elements.size() == 5);
  std::set<std::string> values;
  for (const auto& e : cert.elements) values.insert(e.invariant);
  CHECK(values.size() == 5);
  CHECK(cert.distinct);
  CHECK(verify_certificate(cert).valid);

  auto wrong_value = cert;
  wrong_value.elements[2].invariant = "0";
  CHECK_FALSE(verify_certificate(wrong_value).valid);

  auto composite = cert;
  composite.elements[1].primes[0] = Integer(15);
  CHECK_FALSE(verify_certificate(composite).valid);

  auto duplicate = cert;
  duplicate.elements[1] = duplicate.elements[0];
  CHECK_FALSE(verify_certificate(duplicate).valid);

  auto wrong_m = cert;
  wrong_m.m = 2;
  CHECK_FALSE(verify_certificate(wrong_m).valid);

  options.strategy = 'T';
  const auto symbolic = r_infinity_witness(b2, phi, options);
  CHECK_FALSE(symbolic.symbolic.empty());
  CHECK(verify_certificate(symbolic).valid);

  options.n = 1;
  options.strategy = 'P';
  CHECK(r_infinity_witness(b2, phi, options).elements.size() == 1);

  options.n = 5;
  options.budget = 3;
  CHECK_THROWS_KIND(r_infinity_witness(b2, phi, options), ExhaustedCandidates);
}

TEST_CASE("triality witness") {
  const QGroup d4 = group_of<RationalField>("D4");
  const auto phi = graph_automorphism(d4, {2, 1, 3, 0});
  WitnessOptions options;
  options.n = 3;
  const auto cert = r_infinity_witness(d4, phi, options);
  CHECK(cert.m == 3);
  CHECK(verify_certificate(cert).valid);
}

TEST_CASE("unit class refutation") {
  const QGroup a2 = group_of<RationalField>("A2");
  const auto phi = diagonal(a2, {Rational(2), Rational(1)});
  const auto found = unit_class_refutation(a2, phi, 1000, 7);
  REQUIRE(found.has_value());
  // Independent recheck of the evidence.
  const auto x = a2.evaluate(found->z1) * apply(phi, a2.evaluate(a2.inverse(found->z1)));
  const auto y = a2.evaluate(found->z2) * apply(phi, a2.evaluate(a2.inverse(found->z2)));
  CHECK(class_invariant(phi, x * y) == found->psi_xy);
  CHECK(class_invariant(phi, a2.identity()) == found->psi_e);
  CHECK(found->psi_xy != found->psi_e);
  // Both factors lie in the class of e.
  CHECK(class_invariant(phi, x) == found->psi_e);
  CHECK(class_invariant(phi, y) == found->psi_e);

  CHECK_FALSE(unit_class_refutation(a2, identity_automorphism(a2), 200, 7).has_value());
}
