#include "chevalley/twisted.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "chevalley/error.hpp"
#include "chevalley/io.hpp"
#include "chevalley/scalars.hpp"

namespace chevalley {

namespace {

int permutation_order(const std::vector<int>& perm) {
  int order = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    int length = 1;
    for (auto j = static_cast<std::size_t>(perm[i]); j != i; j = static_cast<std::size_t>(perm[j])) ++length;
    order = std::lcm(order, length);
  }
  return order;
}

bool is_identity_permutation(const std::vector<int>& perm) {
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] != static_cast<int>(i)) return false;
  }
  return true;
}

template <class Field>
std::string format_invariant(const Field& field, const std::vector<typename Field::Element>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += field.format(values[i]);
  }
  return out + "]";
}

}  // namespace

template <class Field>
int Automorphism<Field>::graph_order() const {
  return graph.empty() ? 1 : permutation_order(graph);
}

std::vector<int> graph_signs(const ChevalleyBasis& basis, const DiagramSymmetry& rho) {
  const RootSystem& roots = basis.roots();
  const int n = static_cast<int>(roots.size());
  std::vector<int> gamma(static_cast<std::size_t>(n), 0);
  std::vector<int> positive;
  for (int k = 0; k < n; ++k) {
    if (roots.is_positive(k)) positive.push_back(k);
  }
  std::stable_sort(positive.begin(), positive.end(),
                   [&](int a, int b) { return height(roots.root(a)) < height(roots.root(b)); });
  auto image = [&](int k) { return rho.root_permutation[static_cast<std::size_t>(k)]; };
  for (int xi : positive) {
    if (height(roots.root(xi)) == 1) {
      gamma[static_cast<std::size_t>(xi)] = 1;
      continue;
    }
    for (int i = 0; i < roots.rank(); ++i) {
      const int a = roots.simple_index(i);
      const int d = roots.sum_index(xi, roots.negative_of(a));
      if (d < 0) continue;
      const int value = gamma[static_cast<std::size_t>(a)] * gamma[static_cast<std::size_t>(d)] *
                        basis.structure_constant(image(a), image(d)) / basis.structure_constant(a, d);
      gamma[static_cast<std::size_t>(xi)] = value;
      break;
    }
  }
  for (int xi : positive) gamma[static_cast<std::size_t>(roots.negative_of(xi))] = gamma[static_cast<std::size_t>(xi)];

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int c = roots.sum_index(a, b);
      if (c < 0) continue;
      const long lhs = static_cast<long>(gamma[static_cast<std::size_t>(a)]) * gamma[static_cast<std::size_t>(b)] *
                       basis.structure_constant(image(a), image(b));
      const long rhs = static_cast<long>(basis.structure_constant(a, b)) * gamma[static_cast<std::size_t>(c)];
      if (lhs != rhs || std::abs(gamma[static_cast<std::size_t>(a)]) != 1) {
        throw Error(ErrorKind::NoSuchSymmetry, "graph signs do not propagate consistently for " +
                                                   roots.type().name());
      }
    }
  }
  return gamma;
}

template <class Field>
Matrix<Field> graph_matrix(const ChevalleyGroup<Field>& group, const DiagramSymmetry& rho) {
  const auto gamma = graph_signs(group.basis(), rho);
  const std::size_t n = group.roots().size();
  Matrix<Field> r(group.field(), group.dimension());
  for (std::size_t b = 0; b < n; ++b) {
    r(static_cast<std::size_t>(rho.root_permutation[b]), b) = group.field().from_rational(Rational(gamma[b]));
  }
  for (std::size_t i = 0; i < static_cast<std::size_t>(group.rank()); ++i) {
    r(n + static_cast<std::size_t>(rho.permutation[i]), n + i) = group.field().one();
  }
  return r;
}

template <class Field>
Matrix<Field> apply_field_automorphism(const FieldAutomorphism& delta, const Matrix<Field>& x) {
  if (delta.is_identity()) return x;
  x.field().check(delta);
  return x.map([&](const typename Field::Element& e) { return apply_field_automorphism(delta, e); });
}

template <class Field>
Automorphism<Field> identity_automorphism(const ChevalleyGroup<Field>& group) {
  return make_automorphism(group, AutomorphismParts<Field>{});
}

template <class Field>
Automorphism<Field> make_automorphism(const ChevalleyGroup<Field>& group, const AutomorphismParts<Field>& parts) {
  const Field& field = group.field();
  if (!field.admits(parts.delta)) {
    throw Error(ErrorKind::IncompatibleField, parts.delta.to_string() + " is not an automorphism of " + field.name());
  }
  Automorphism<Field> phi{group.identity(), group.identity(), parts.delta, {}, parts, {}};
  Matrix<Field>& q = phi.q;
  Matrix<Field>& q_inverse = phi.q_inverse;

  if (!parts.rho.empty() && !is_identity_permutation(parts.rho)) {
    const DiagramSymmetry rho = find_symmetry(group.roots(), parts.rho);
    q = graph_matrix(group, rho);
    q_inverse = q.inverse();
    phi.graph = parts.rho;
  }
  if (parts.chi) {
    const auto h = group.torus_from_character(*parts.chi);
    const auto h_inverse = group.torus_from_character(group.inverse(*parts.chi));
    q = q * apply_field_automorphism(parts.delta, h.matrix);
    q_inverse = apply_field_automorphism(parts.delta, h_inverse.matrix) * q_inverse;
  }
  if (!parts.inner.empty()) {
    q = q * apply_field_automorphism(parts.delta, group.evaluate(parts.inner));
    q_inverse = apply_field_automorphism(parts.delta, group.evaluate(group.inverse(parts.inner))) * q_inverse;
  }
  return phi;
}

template <class Field>
Automorphism<Field> compose(const Automorphism<Field>& outer, const Automorphism<Field>& inner) {
  Automorphism<Field> out{outer.q * apply_field_automorphism(outer.sigma, inner.q),
                          apply_field_automorphism(outer.sigma, inner.q_inverse) * outer.q_inverse,
                          compose(outer.sigma, inner.sigma),
                          {},
                          std::nullopt,
                          {}};
  if (!outer.graph.empty() || !inner.graph.empty()) {
    const std::size_t l = std::max(outer.graph.size(), inner.graph.size());
    std::vector<int> g(l);
    for (std::size_t i = 0; i < l; ++i) {
      const int mid = inner.graph.empty() ? static_cast<int>(i) : inner.graph[i];
      g[i] = outer.graph.empty() ? mid : outer.graph[static_cast<std::size_t>(mid)];
    }
    if (!is_identity_permutation(g)) out.graph = g;
  }
  return out;
}

template <class Field>
Automorphism<Field> power(const ChevalleyGroup<Field>& group, const Automorphism<Field>& phi, int exponent) {
  if (exponent < 0) throw Error(ErrorKind::InvalidRank, "negative automorphism power");
  Automorphism<Field> out = identity_automorphism(group);
  out.parts.reset();
  for (int k = 0; k < exponent; ++k) out = compose(out, phi);
  return out;
}

template <class Field>
Automorphism<Field> reduce_mod_inner(const ChevalleyGroup<Field>& group, const Automorphism<Field>& phi) {
  if (!phi.parts) {
    Automorphism<Field> out = phi;
    out.notes.push_back("no normal-form parts recorded; automorphism left unchanged");
    return out;
  }
  AutomorphismParts<Field> parts = *phi.parts;
  std::vector<std::string> notes = phi.notes;
  if (!parts.inner.empty()) {
    notes.push_back("dropped inner part " + format_word(group, parts.inner));
    parts.inner.clear();
  }
  if (parts.chi) {
    const auto decomposition = group.decompose_torus(*parts.chi);
    const auto& chi2 = decomposition.h2.character;
    std::string before, after;
    for (std::size_t i = 0; i < chi2.values.size(); ++i) {
      if (i) {
        before += ",";
        after += ",";
      }
      before += group.field().format(parts.chi->values[i]);
      after += group.field().format(chi2.values[i]);
    }
    notes.push_back("torus part (" + before + ") reduced to h2 = (" + after + ")");
    const bool trivial = std::all_of(chi2.values.begin(), chi2.values.end(), [](const auto& v) { return v.is_one(); });
    if (trivial) {
      parts.chi.reset();
    } else {
      parts.chi = chi2;
    }
  }
  Automorphism<Field> out = make_automorphism(group, parts);
  out.notes = std::move(notes);
  return out;
}

template <class Field>
Matrix<Field> apply(const Automorphism<Field>& phi, const Matrix<Field>& x) {
  return phi.q * apply_field_automorphism(phi.sigma, x) * phi.q_inverse;
}

template <class Field>
Matrix<Field> twisted_conjugate(const Matrix<Field>& z, const Matrix<Field>& g, const Automorphism<Field>& phi) {
  return z * g * apply(phi, z.inverse());
}

template <class Field>
TwistedNorm<Field> twisted_norm(const Automorphism<Field>& phi, const Matrix<Field>& g) {
  const int m = phi.twisting_length();
  TwistedNorm<Field> out{m, g, phi.q};
  Matrix<Field> image = g;
  for (int k = 1; k < m; ++k) {
    image = apply(phi, image);
    out.psi = out.psi * image;
    out.n = out.n * apply_field_automorphism(phi.sigma.power(k), phi.q);
  }
  return out;
}

namespace {

template <class Field>
Matrix<Field> norm_product(const Automorphism<Field>& phi, const Matrix<Field>& g) {
  const int m = phi.twisting_length();
  const Matrix<Field> gq = g * phi.q;
  Matrix<Field> product = gq;
  for (int k = 1; k < m; ++k) product = product * apply_field_automorphism(phi.sigma.power(k), gq);
  return product;
}

}  // namespace

template <class Field>
typename Field::Element class_invariant(const Automorphism<Field>& phi, const Matrix<Field>& g) {
  return norm_product(phi, g).trace();
}

template <class Field>
std::vector<typename Field::Element> class_invariant_charpoly(const Automorphism<Field>& phi, const Matrix<Field>& g) {
  return norm_product(phi, g).characteristic_polynomial();
}

namespace {

template <class Field>
std::string invariant_string(const Automorphism<Field>& phi, const Matrix<Field>& g, InvariantKind kind) {
  if (kind == InvariantKind::trace) return g.field().format(class_invariant(phi, g));
  return format_invariant(g.field(), class_invariant_charpoly(phi, g));
}

template <class Field>
Character<Field> simple_product_character(const ChevalleyGroup<Field>& group,
                                          const std::vector<typename Field::Element>& t) {
  Character<Field> chi{std::vector<typename Field::Element>(static_cast<std::size_t>(group.rank()), group.field().one())};
  for (int j = 0; j < group.rank(); ++j) {
    chi = group.multiply(chi, group.root_character(group.roots().simple_index(j), t[static_cast<std::size_t>(j)]));
  }
  return chi;
}

template <class Field>
using Laurent = std::map<long, typename Field::Element>;

// ψ(g(T)) for g(T) = ∏ h_{α_j}(T) when Q is monomial: trace of ∏_k σ^k(g(T)·Q).
template <class Field>
Laurent<Field> symbolic_invariant(const ChevalleyGroup<Field>& group, const Automorphism<Field>& phi) {
  const std::size_t dim = group.dimension();
  std::vector<std::size_t> target(dim);
  std::vector<typename Field::Element> value(dim, group.field().zero());
  for (std::size_t c = 0; c < dim; ++c) {
    std::size_t found = dim;
    for (std::size_t r = 0; r < dim; ++r) {
      if (phi.q(r, c).is_zero()) continue;
      if (found != dim) {
        throw Error(ErrorKind::IncompatibleField, "strategy T needs a monomial twisting matrix");
      }
      found = r;
    }
    target[c] = found;
    value[c] = phi.q(found, c);
  }
  const auto degrees = torus_degrees(group.roots()).degree;
  auto degree = [&](std::size_t r) { return r < degrees.size() ? degrees[r] : 0; };
  const int m = phi.twisting_length();
  std::vector<FieldAutomorphism> powers;
  for (int k = 0; k < m; ++k) powers.push_back(phi.sigma.power(k));

  Laurent<Field> out;
  for (std::size_t j = 0; j < dim; ++j) {
    std::size_t c = j;
    long exponent = 0;
    typename Field::Element coefficient = group.field().one();
    for (int k = m - 1; k >= 0; --k) {
      coefficient *= apply_field_automorphism(powers[static_cast<std::size_t>(k)], value[c]);
      c = target[c];
      exponent += degree(c);
    }
    if (c != j) continue;
    auto [it, inserted] = out.try_emplace(exponent, coefficient);
    if (!inserted) it->second += coefficient;
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  }
  return out;
}

template <class Field>
std::string format_laurent(const Field& field, const Laurent<Field>& f) {
  if (f.empty()) return "0";
  std::string out;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + field.format(it->second) + ")";
    if (it->first != 0) out += "*T^" + std::to_string(it->first);
  }
  return out;
}

template <class Field>
typename Field::Element evaluate_laurent(const Field& field, const Laurent<Field>& f, const Rational& x) {
  typename Field::Element total = field.zero();
  for (const auto& [e, c] : f) total += c * field.from_rational(x.pow(e));
  return total;
}

}  // namespace

template <class Field>
WitnessCertificate r_infinity_witness(const ChevalleyGroup<Field>& group, const Automorphism<Field>& phi,
                                      const WitnessOptions& options) {
  if (!phi.parts) throw Error(ErrorKind::IncompatibleField, "witness search needs an automorphism built from parts");
  if (options.strategy != 'P' && options.strategy != 'T') {
    throw Error(ErrorKind::ParseError, std::string("unknown witness strategy '") + options.strategy + "'");
  }
  const Field& field = group.field();
  const Automorphism<Field> reduced = reduce_mod_inner(group, phi);
  const auto& parts = *reduced.parts;

  WitnessCertificate cert;
  cert.type = group.roots().type();
  cert.field = field.name();
  cert.rho = reduced.graph;
  cert.delta = reduced.sigma;
  if (parts.chi) {
    for (const auto& v : parts.chi->values) cert.chi.push_back(field.format(v));
  }
  cert.m = reduced.twisting_length();
  cert.strategy = options.strategy;
  cert.invariant = options.invariant;
  cert.seed = options.seed;
  cert.notes = reduced.notes;

  std::set<std::string> seen;
  const int l = group.rank();

  if (options.strategy == 'P') {
    Integer prime = 1;
    std::vector<Rational> all_primes;
    while (cert.elements.size() < options.n) {
      if (cert.candidates >= options.budget) {
        throw Error(ErrorKind::ExhaustedCandidates, "found " + std::to_string(cert.elements.size()) + " of " +
                                                        std::to_string(options.n) + " elements after " +
                                                        std::to_string(cert.candidates) + " candidates");
      }
      ++cert.candidates;
      WitnessElement element;
      std::vector<typename Field::Element> t;
      for (int j = 0; j < l; ++j) {
        mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
        element.primes.push_back(prime);
        t.push_back(field.from_rational(Rational(prime)));
      }
      const auto g = group.torus_from_character(simple_product_character(group, t)).matrix;
      element.invariant = invariant_string(reduced, g, options.invariant);
      if (!seen.insert(element.invariant).second) continue;
      for (const auto& p : element.primes) all_primes.emplace_back(p);
      cert.elements.push_back(std::move(element));
    }
    if (!nu_pairwise_disjoint(all_primes)) throw std::logic_error("prime blocks overlap");
    cert.notes.push_back("prime supports pairwise disjoint");
  } else {
    const Laurent<Field> symbolic = symbolic_invariant(group, reduced);
    cert.symbolic = format_laurent(field, symbolic);
    const bool constant = std::all_of(symbolic.begin(), symbolic.end(), [](const auto& kv) { return kv.first == 0; });
    if (constant) {
      throw Error(ErrorKind::ConstantInvariant, "ψ(g(T)) = " + cert.symbolic + " does not depend on T");
    }
    auto accept = [&](const Rational& x) {
      std::vector<typename Field::Element> t(static_cast<std::size_t>(l), field.from_rational(x));
      const auto g = group.torus_from_character(simple_product_character(group, t)).matrix;
      const auto value = class_invariant(reduced, g);
      if (!(value == evaluate_laurent(field, symbolic, x))) {
        throw std::logic_error("symbolic and matrix invariants disagree at " + x.to_string());
      }
      WitnessElement element;
      element.point = x.to_string();
      element.invariant = options.invariant == InvariantKind::trace ? field.format(value)
                                                                    : invariant_string(reduced, g, options.invariant);
      if (!seen.insert(field.format(value)).second) return;
      cert.elements.push_back(std::move(element));
    };
    if constexpr (std::is_same_v<Field, RationalField>) {
      long low = 0;
      for (const auto& [e, c] : symbolic) low = std::min(low, e);
      Polynomial numerator;
      for (const auto& [e, c] : symbolic) numerator += Polynomial::monomial(c, static_cast<int>(e - low));
      const RationalFunction f(numerator, Polynomial::monomial(Rational(1), static_cast<int>(-low)));
      const auto points = distinct_value_inputs(f, options.n);
      cert.candidates = points.empty() ? 0 : static_cast<std::size_t>(points.back().numerator().get_si());
      if (cert.candidates > options.budget) {
        throw Error(ErrorKind::ExhaustedCandidates, "distinct values need " + std::to_string(cert.candidates) +
                                                        " candidates, budget " + std::to_string(options.budget));
      }
      for (const auto& x : points) accept(x);
    } else {
      for (long x = 1; cert.elements.size() < options.n; ++x) {
        if (cert.candidates >= options.budget) {
          throw Error(ErrorKind::ExhaustedCandidates, "found " + std::to_string(cert.elements.size()) + " of " +
                                                          std::to_string(options.n) + " elements");
        }
        ++cert.candidates;
        accept(Rational(x));
      }
    }
  }
  cert.distinct = seen.size() == cert.elements.size();
  return cert;
}

namespace {

template <class Field>
void verify_with(const Field& field, const WitnessCertificate& cert, VerificationReport& report) {
  auto basis = std::make_shared<const ChevalleyBasis>(RootSystem(cert.type));
  const ChevalleyGroup<Field> group(basis, field);
  AutomorphismParts<Field> parts;
  parts.rho = cert.rho;
  parts.delta = cert.delta;
  if (!cert.chi.empty()) {
    Character<Field> chi;
    for (const auto& v : cert.chi) chi.values.push_back(field.parse(v));
    parts.chi = chi;
  }
  parts.inner = parse_word(group, cert.inner);
  const Automorphism<Field> phi = make_automorphism(group, parts);

  const int m = phi.twisting_length();
  if (m != cert.m) report.problems.push_back("m is " + std::to_string(m) + ", certificate says " + std::to_string(cert.m));
  const Automorphism<Field> phi_m = power(group, phi, m);
  if (!phi_m.sigma.is_identity()) report.problems.push_back("σ^m is not the identity");

  std::set<std::string> values;
  std::vector<Rational> primes;
  for (std::size_t i = 0; i < cert.elements.size(); ++i) {
    const auto& element = cert.elements[i];
    Matrix<Field> g = group.identity();
    for (int j = 0; j < group.rank(); ++j) {
      Rational t;
      if (cert.strategy == 'P') {
        if (element.primes.size() != static_cast<std::size_t>(group.rank())) {
          report.problems.push_back("element " + std::to_string(i) + " has the wrong number of primes");
          return;
        }
        const Integer& p = element.primes[static_cast<std::size_t>(j)];
        if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) {
          report.problems.push_back(p.get_str() + " is not prime");
        }
        t = Rational(p);
        primes.emplace_back(p);
      } else {
        t = Rational::parse(element.point);
      }
      g = g * group.torus_product(group.roots().simple_index(j), field.from_rational(t));
    }
    const TwistedNorm<Field> norm = twisted_norm(phi, g);
    const Matrix<Field> product = norm.psi * phi_m.q;
    const std::string value = cert.invariant == InvariantKind::trace
                                  ? field.format(product.trace())
                                  : format_invariant(field, product.characteristic_polynomial());
    if (value != element.invariant) {
      report.problems.push_back("element " + std::to_string(i) + ": invariant " + value + ", certificate says " +
                                element.invariant);
    }
    values.insert(value);
  }
  if (values.size() != cert.elements.size()) report.problems.push_back("invariants are not pairwise distinct");
  if (!cert.distinct) report.problems.push_back("certificate does not claim distinctness");
  if (cert.strategy == 'P' && !nu_pairwise_disjoint(primes)) report.problems.push_back("prime supports overlap");
}

}  // namespace

VerificationReport verify_certificate(const WitnessCertificate& cert) {
  VerificationReport report;
  try {
    std::visit([&](const auto& field) { verify_with(field, cert, report); }, parse_field(cert.field));
  } catch (const Error& e) {
    report.problems.push_back(e.what());
  }
  report.valid = report.problems.empty();
  return report;
}

template <class Field>
std::optional<Refutation<Field>> unit_class_refutation(const ChevalleyGroup<Field>& group,
                                                       const Automorphism<Field>& phi, std::size_t budget,
                                                       std::uint64_t seed, std::size_t word_length) {
  std::mt19937_64 rng(seed);
  const auto psi_e = class_invariant(phi, group.identity());
  for (std::size_t attempt = 1; attempt <= budget; ++attempt) {
    const Word<Field> z1 = random_word(group, rng, word_length);
    const Word<Field> z2 = random_word(group, rng, word_length);
    const auto x = group.evaluate(z1) * apply(phi, group.evaluate(group.inverse(z1)));
    const auto y = group.evaluate(z2) * apply(phi, group.evaluate(group.inverse(z2)));
    auto psi_xy = class_invariant(phi, x * y);
    if (!(psi_xy == psi_e)) return Refutation<Field>{z1, z2, std::move(psi_xy), psi_e, attempt};
  }
  return std::nullopt;
}

#define CHEVALLEY_TWISTED_INSTANTIATE(F)                                                                        \
  template struct Automorphism<F>;                                                                              \
  template Matrix<F> graph_matrix(const ChevalleyGroup<F>&, const DiagramSymmetry&);                            \
  template Matrix<F> apply_field_automorphism(const FieldAutomorphism&, const Matrix<F>&);                      \
  template Automorphism<F> make_automorphism(const ChevalleyGroup<F>&, const AutomorphismParts<F>&);            \
  template Automorphism<F> identity_automorphism(const ChevalleyGroup<F>&);                                     \
  template Automorphism<F> compose(const Automorphism<F>&, const Automorphism<F>&);                             \
  template Automorphism<F> power(const ChevalleyGroup<F>&, const Automorphism<F>&, int);                        \
  template Automorphism<F> reduce_mod_inner(const ChevalleyGroup<F>&, const Automorphism<F>&);                  \
  template Matrix<F> apply(const Automorphism<F>&, const Matrix<F>&);                                           \
  template Matrix<F> twisted_conjugate(const Matrix<F>&, const Matrix<F>&, const Automorphism<F>&);             \
  template TwistedNorm<F> twisted_norm(const Automorphism<F>&, const Matrix<F>&);                               \
  template F::Element class_invariant(const Automorphism<F>&, const Matrix<F>&);                                \
  template std::vector<F::Element> class_invariant_charpoly(const Automorphism<F>&, const Matrix<F>&);          \
  template WitnessCertificate r_infinity_witness(const ChevalleyGroup<F>&, const Automorphism<F>&,              \
                                                 const WitnessOptions&);                                        \
  template std::optional<Refutation<F>> unit_class_refutation(const ChevalleyGroup<F>&, const Automorphism<F>&, \
                                                              std::size_t, std::uint64_t, std::size_t);

CHEVALLEY_TWISTED_INSTANTIATE(RationalField)
CHEVALLEY_TWISTED_INSTANTIATE(QuadraticField)
CHEVALLEY_TWISTED_INSTANTIATE(RationalFunctionField)

#undef CHEVALLEY_TWISTED_INSTANTIATE

}  // namespace chevalley
