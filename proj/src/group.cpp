#include "chevalley/group.hpp"

#include <algorithm>
#include <cstdlib>

#include "chevalley/error.hpp"
#include "chevalley/smith.hpp"

namespace chevalley {

template <class Field>
ChevalleyGroup<Field>::ChevalleyGroup(std::shared_ptr<const ChevalleyBasis> basis, Field field)
    : basis_(std::move(basis)), field_(std::move(field)) {
  const auto& type = basis_->roots().type();
  if (type.family == Family::A && type.rank == 1) {
    throw Error(ErrorKind::InvalidRank, "the group of type A1 is excluded");
  }
}

template <class Field>
Matrix<Field> ChevalleyGroup<Field>::root_element(int alpha, const Element& t) const {
  GroupMatrix m(field_, dimension());
  std::vector<Element> powers{field_.one()};
  const auto& columns = basis_->exponential_columns(alpha);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (const auto& term : columns[j]) {
      while (powers.size() <= static_cast<std::size_t>(term.power)) powers.push_back(powers.back() * t);
      const Element& tp = powers[static_cast<std::size_t>(term.power)];
      if (tp.is_zero()) continue;
      m(static_cast<std::size_t>(term.row), j) += tp * field_.from_rational(Rational(term.coefficient));
    }
  }
  return m;
}

template <class Field>
Matrix<Field> ChevalleyGroup<Field>::root_element(const Root& alpha, const Element& t) const {
  return root_element(roots().require_index(alpha), t);
}

template <class Field>
Matrix<Field> ChevalleyGroup<Field>::weyl_element(int alpha, const Element& t) const {
  if (t.is_zero()) throw Error(ErrorKind::NonInvertibleScalar, "n_α(t) needs t ≠ 0");
  const GroupMatrix x = root_element(alpha, t);
  return x * root_element(roots().negative_of(alpha), -t.inverse()) * x;
}

template <class Field>
Matrix<Field> ChevalleyGroup<Field>::torus_product(int alpha, const Element& t) const {
  return weyl_element(alpha, t) * weyl_element(alpha, -field_.one());
}

template <class Field>
std::pair<Matrix<Field>, Matrix<Field>> ChevalleyGroup<Field>::weyl_torus_elements(const Root& alpha,
                                                                                   const Element& t) const {
  const int index = roots().require_index(alpha);
  return {weyl_element(index, t), torus_product(index, t)};
}

template <class Field>
Character<Field> ChevalleyGroup<Field>::root_character(int alpha, const Element& t) const {
  if (t.is_zero()) throw Error(ErrorKind::NonInvertibleScalar, "h_α(t) needs t ≠ 0");
  Character<Field> chi;
  for (int i = 0; i < rank(); ++i) chi.values.push_back(t.pow(roots().cartan_number(alpha, roots().simple_index(i))));
  return chi;
}

template <class Field>
typename Field::Element ChevalleyGroup<Field>::character_value(const Character<Field>& chi, const Root& beta) const {
  Element value = field_.one();
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta[i] != 0) value *= chi.values[i].pow(beta[i]);
  }
  return value;
}

template <class Field>
TorusElement<Field> ChevalleyGroup<Field>::torus_from_character(const Character<Field>& chi) const {
  if (chi.values.size() != static_cast<std::size_t>(rank())) {
    throw Error(ErrorKind::InvalidRank, "character needs " + std::to_string(rank()) + " values");
  }
  for (const auto& v : chi.values) {
    if (v.is_zero()) throw Error(ErrorKind::NonInvertibleScalar, "character value 0");
  }
  TorusElement<Field> h{identity(), chi};
  for (std::size_t k = 0; k < roots().size(); ++k) h.matrix(k, k) = character_value(chi, roots().root(static_cast<int>(k)));
  return h;
}

template <class Field>
Character<Field> ChevalleyGroup<Field>::multiply(const Character<Field>& a, const Character<Field>& b) const {
  Character<Field> out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] *= b.values[i];
  return out;
}

template <class Field>
Character<Field> ChevalleyGroup<Field>::inverse(const Character<Field>& a) const {
  Character<Field> out = a;
  for (auto& v : out.values) v = v.inverse();
  return out;
}

template <class Field>
TorusDecomposition<Field> ChevalleyGroup<Field>::decompose_torus(const Character<Field>& chi) const {
  const auto& type = roots().type();
  const int l = rank();
  for (const auto& v : chi.values) {
    if (v.is_zero()) throw Error(ErrorKind::NonInvertibleScalar, "character value 0");
  }
  // 1-based accessors.
  auto a = [&](int i) -> const Element& { return chi.values[static_cast<std::size_t>(i - 1)]; };
  std::vector<Element> t(static_cast<std::size_t>(l), field_.one());
  auto set = [&](int i, Element value) { t[static_cast<std::size_t>(i - 1)] = std::move(value); };
  auto chain = [&](int i) {
    Element value = field_.one();
    for (int j = 1; j < i; ++j) value *= a(j).pow(i - j);
    return value;
  };

  switch (type.family) {
    case Family::A:
    case Family::C:
      for (int i = 2; i <= l; ++i) set(i, chain(i).inverse());
      break;
    case Family::B:
      for (int i = 1; i <= l - 1; ++i) {
        Element value = field_.one();
        for (int j = 0; j < i; ++j) value *= a(l - j).pow(i - j);
        set(l - i, value.inverse());
      }
      break;
    case Family::D:
      for (int i = 2; i <= l - 1; ++i) set(i, chain(i).inverse());
      break;
    case Family::E:
      if (l < 8) {
        for (int i = 2; i <= l - 2; ++i) set(i, chain(i).inverse());
        set(l, chain(l - 3) / a(l - 1));
        break;
      }
      [[fallthrough]];
    case Family::F:
    case Family::G: {
      // The Cartan matrix is unimodular: t = (Aᵀ)⁻¹ a, multiplicatively, with (Aᵀ)⁻¹ = V·U.
      const IntMatrix at = IntMatrix(roots().cartan()).transpose();
      const SmithForm snf = smith_normal_form(at);
      const IntMatrix inv = snf.v * snf.u;
      for (int i = 1; i <= l; ++i) {
        Element value = field_.one();
        for (int j = 1; j <= l; ++j) {
          const long e = inv(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)).get_si();
          if (e != 0) value *= a(j).pow(e);
        }
        set(i, value);
      }
      break;
    }
  }

  Character<Field> chi1{std::vector<Element>(static_cast<std::size_t>(l), field_.one())};
  for (int i = 0; i < l; ++i) {
    chi1 = multiply(chi1, root_character(roots().simple_index(i), t[static_cast<std::size_t>(i)]));
  }
  const Character<Field> chi2 = multiply(chi, inverse(chi1));
  return {t, torus_from_character(chi1), torus_from_character(chi2)};
}

template <class Field>
Matrix<Field> ChevalleyGroup<Field>::generator(const Generator<Field>& g) const {
  switch (g.kind) {
    case 'x': return root_element(g.root, g.parameter);
    case 'n': return weyl_element(g.root, g.parameter);
    case 'h': return torus_from_character(root_character(g.root, g.parameter)).matrix;
    default: throw Error(ErrorKind::ParseError, std::string("unknown generator kind '") + g.kind + "'");
  }
}

template <class Field>
Matrix<Field> ChevalleyGroup<Field>::evaluate(const Word<Field>& word) const {
  GroupMatrix out = identity();
  for (const auto& g : word) out = out * generator(g);
  return out;
}

template <class Field>
Word<Field> ChevalleyGroup<Field>::inverse(const Word<Field>& word) const {
  Word<Field> out;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    Generator<Field> g = *it;
    switch (g.kind) {
      case 'x': g.parameter = -g.parameter; break;
      case 'h': g.parameter = g.parameter.inverse(); break;
      // n_α(t)⁻¹ = n_α(-t)
      case 'n': g.parameter = -g.parameter; break;
      default: break;
    }
    out.push_back(std::move(g));
  }
  return out;
}

template <class Field>
Word<Field> random_word(const ChevalleyGroup<Field>& group, std::mt19937_64& rng, std::size_t length, long bound) {
  Word<Field> word;
  const auto n = static_cast<std::uint64_t>(group.roots().size());
  const auto span = static_cast<std::uint64_t>(2 * bound);
  for (std::size_t k = 0; k < length; ++k) {
    const int root = static_cast<int>(rng() % n);
    long v = static_cast<long>(rng() % span) - bound;
    if (v >= 0) ++v;
    word.push_back({'x', root, group.field().from_rational(Rational(v))});
  }
  return word;
}

template class ChevalleyGroup<RationalField>;
template class ChevalleyGroup<QuadraticField>;
template class ChevalleyGroup<RationalFunctionField>;
template Word<RationalField> random_word(const ChevalleyGroup<RationalField>&, std::mt19937_64&, std::size_t, long);
template Word<QuadraticField> random_word(const ChevalleyGroup<QuadraticField>&, std::mt19937_64&, std::size_t, long);
template Word<RationalFunctionField> random_word(const ChevalleyGroup<RationalFunctionField>&, std::mt19937_64&,
                                                 std::size_t, long);

int f_degree(RootSystemType type) {
  type.validate();
  switch (type.family) {
    case Family::A: return type.rank + 1;
    case Family::B:
    case Family::C:
    case Family::D: return 2;
    case Family::E: return type.rank == 6 ? 3 : (type.rank == 7 ? 2 : 1);
    case Family::F:
    case Family::G: return 1;
  }
  return 1;
}

int count_k(const RootSystem& roots) {
  int k = 0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (!roots.supported_on_index_set(static_cast<int>(i))) ++k;
  }
  return k;
}

int k_formula(RootSystemType type) {
  type.validate();
  const int l = type.rank;
  switch (type.family) {
    case Family::A: return 2 * l;
    case Family::B: return 2 * (2 * l - 1);
    case Family::C: return l * (l + 1);
    case Family::D: return (l - 1) * (l + 2);
    case Family::E: return l == 6 ? 52 : (l == 7 ? 96 : 0);
    case Family::F:
    case Family::G: return 0;
  }
  return 0;
}

DecompositionProfile decomposition_profile(const RootSystem& roots) {
  DecompositionProfile profile;
  profile.index_set = roots.index_set();
  profile.f_degree = f_degree(roots.type());
  profile.invariant_factors = smith_normal_form(IntMatrix(roots.cartan())).d.diagonal();
  profile.k = count_k(roots);
  return profile;
}

Root listed_degree_root(RootSystemType type) {
  type.validate();
  const auto l = static_cast<std::size_t>(type.rank);
  Root r(l, 1);
  switch (type.family) {
    case Family::B: r[l - 1] = 2; break;
    case Family::C:
      std::fill(r.begin(), r.end(), 2);
      r[l - 1] = 1;
      break;
    case Family::F: r = {0, -2, -1, 0}; break;
    case Family::G: r = {-3, -1}; break;
    default: break;
  }
  return r;
}

TorusDegrees torus_degrees(const RootSystem& roots) {
  TorusDegrees out;
  const int n = static_cast<int>(roots.size());
  for (int b = 0; b < n; ++b) {
    int d = 0;
    for (int i = 0; i < roots.rank(); ++i) d += roots.cartan_number(roots.simple_index(i), b);
    out.degree.push_back(d);
    if (out.argmax < 0 || std::abs(d) > out.max_abs) {
      out.max_abs = std::abs(d);
      out.argmax = b;
    }
  }
  out.listed = listed_degree_root(roots.type());
  const int listed = roots.index_of(out.listed);
  if (listed >= 0) {
    out.listed_degree = out.degree[static_cast<std::size_t>(listed)];
    out.listed_attains_max = std::abs(out.listed_degree) == out.max_abs;
    for (int b = 0; b < n; ++b) {
      if (b != listed && b != roots.negative_of(listed) && std::abs(out.degree[static_cast<std::size_t>(b)]) == out.max_abs) {
        ++out.other_maximizers;
      }
    }
  }
  return out;
}

}  // namespace chevalley
