#pragma once

#include <memory>
#include <random>
#include <set>
#include <string>

#include "chevalley/error.hpp"
#include "chevalley/group.hpp"

// Evaluates expr and checks that it throws chevalley::Error of the given kind.
#define CHECK_THROWS_KIND(expr, expected_kind)                       \
  do {                                                               \
    bool thrown_ = false;                                            \
    try {                                                            \
      (void)(expr);                                                  \
    } catch (const chevalley::Error& e_) {                           \
      thrown_ = true;                                                \
      CHECK(e_.kind() == chevalley::ErrorKind::expected_kind);       \
    }                                                                \
    CHECK_MESSAGE(thrown_, "expected " #expected_kind);              \
  } while (0)

namespace testing {

inline std::shared_ptr<const chevalley::ChevalleyBasis> basis_of(const std::string& type) {
  return std::make_shared<const chevalley::ChevalleyBasis>(
      chevalley::RootSystem(chevalley::RootSystemType::parse(type)));
}

template <class Field>
chevalley::ChevalleyGroup<Field> group_of(const std::string& type, Field field = Field{}) {
  return chevalley::ChevalleyGroup<Field>(basis_of(type), std::move(field));
}

// Nonzero rational p/q with |p| <= bound, 1 <= q <= bound.
inline chevalley::Rational small_rational(std::mt19937_64& rng, long bound = 5) {
  long p = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound)) - bound;
  if (p >= 0) ++p;
  const long q = static_cast<long>(rng() % static_cast<std::uint64_t>(bound)) + 1;
  return chevalley::Rational(chevalley::Integer(p), chevalley::Integer(q));
}

}  // namespace testing

namespace testing {

// [u, v] over the Chevalley basis, for vectors with entries in any field.
template <class Field, class Element = typename Field::Element>
std::vector<Element> bracket(const chevalley::ChevalleyBasis& basis, const Field& field,
                             const std::vector<Element>& u, const std::vector<Element>& v) {
  std::vector<Element> out(u.size(), field.zero());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j].is_zero()) continue;
      for (const auto& [k, c] : basis.bracket(static_cast<int>(i), static_cast<int>(j))) {
        out[static_cast<std::size_t>(k)] += u[i] * v[j] * field.from_rational(chevalley::Rational(c));
      }
    }
  }
  return out;
}

template <class Field>
std::vector<typename Field::Element> column(const chevalley::Matrix<Field>& m, std::size_t c) {
  std::vector<typename Field::Element> out;
  for (std::size_t r = 0; r < m.size(); ++r) out.push_back(m(r, c));
  return out;
}

template <class Field>
std::vector<typename Field::Element> times(const chevalley::Matrix<Field>& m, const std::vector<typename Field::Element>& v) {
  std::vector<typename Field::Element> out(v.size(), m.field().zero());
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m.size(); ++c) {
      if (!v[c].is_zero()) out[r] += m(r, c) * v[c];
    }
  }
  return out;
}

// True iff m is a Lie algebra automorphism on basis pairs: m[e_i, e_j] = [m e_i, m e_j].
template <class Field>
bool preserves_brackets(const chevalley::ChevalleyBasis& basis, const chevalley::Matrix<Field>& m) {
  const std::size_t n = m.size();
  const auto zero = m.field().zero();
  std::vector<std::vector<typename Field::Element>> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(column(m, i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<typename Field::Element> eij(n, zero);
      for (const auto& [k, c] : basis.bracket(static_cast<int>(i), static_cast<int>(j))) {
        eij[static_cast<std::size_t>(k)] = m.field().from_rational(chevalley::Rational(c));
      }
      if (times(m, eij) != bracket(basis, m.field(), images[i], images[j])) return false;
    }
  }
  return true;
}

}  // namespace testing

namespace testing {

// Closure of the simple roots under simple reflections, using only the Cartan matrix.
inline std::set<chevalley::Root> reflection_closure(const std::vector<std::vector<int>>& a) {
  const std::size_t l = a.size();
  std::set<chevalley::Root> seen;
  std::vector<chevalley::Root> frontier;
  for (std::size_t i = 0; i < l; ++i) {
    chevalley::Root e(l, 0);
    e[i] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    const chevalley::Root beta = frontier.back();
    frontier.pop_back();
    for (std::size_t i = 0; i < l; ++i) {
      int pairing = 0;
      for (std::size_t j = 0; j < l; ++j) pairing += beta[j] * a[i][j];
      chevalley::Root image = beta;
      image[i] -= pairing;
      if (seen.insert(image).second) frontier.push_back(image);
    }
  }
  return seen;
}

}  // namespace testing
