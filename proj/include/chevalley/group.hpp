#pragma once

#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "chevalley/fields.hpp"
#include "chevalley/lie.hpp"
#include "chevalley/matrix.hpp"

namespace chevalley {

/// χ(α_1), ..., χ(α_l).
template <class Field>
struct Character {
  std::vector<typename Field::Element> values;
};

template <class Field>
struct TorusElement {
  Matrix<Field> matrix;
  Character<Field> character;
};

/// h = h1·h2 with h1 = ∏ h_{α_i}(t_i).
template <class Field>
struct TorusDecomposition {
  std::vector<typename Field::Element> t;
  TorusElement<Field> h1;
  TorusElement<Field> h2;
};

/// Generator token of a word: x_α(t), h_α(t) or n_α(t).
template <class Field>
struct Generator {
  char kind = 'x';
  int root = 0;
  typename Field::Element parameter;
};

template <class Field>
using Word = std::vector<Generator<Field>>;

/// Elementary adjoint Chevalley group over an exact field, with elements
/// realized as matrices in the Chevalley basis order.
template <class Field>
class ChevalleyGroup {
 public:
  using Element = typename Field::Element;
  using GroupMatrix = Matrix<Field>;

  /// Throws InvalidRank for A_1.
  ChevalleyGroup(std::shared_ptr<const ChevalleyBasis> basis, Field field);

  const ChevalleyBasis& basis() const { return *basis_; }
  std::shared_ptr<const ChevalleyBasis> basis_ptr() const { return basis_; }
  const RootSystem& roots() const { return basis_->roots(); }
  const Field& field() const { return field_; }
  std::size_t dimension() const { return basis_->dimension(); }
  int rank() const { return basis_->rank(); }

  GroupMatrix identity() const { return GroupMatrix::identity(field_, dimension()); }

  /// x_α(t) = exp(t ad x_α).
  GroupMatrix root_element(int alpha, const Element& t) const;
  /// Throws NotARoot.
  GroupMatrix root_element(const Root& alpha, const Element& t) const;
  /// n_α(t) = x_α(t) x_{-α}(-t⁻¹) x_α(t).  Throws NonInvertibleScalar.
  GroupMatrix weyl_element(int alpha, const Element& t) const;
  /// h_α(t) = n_α(t) n_α(-1), as a matrix product.
  GroupMatrix torus_product(int alpha, const Element& t) const;
  std::pair<GroupMatrix, GroupMatrix> weyl_torus_elements(const Root& alpha, const Element& t) const;

  /// Character of h_α(t): α_i ↦ t^{A_{α α_i}}.
  Character<Field> root_character(int alpha, const Element& t) const;
  /// χ(β) = ∏ χ(α_i)^{b_i}.
  Element character_value(const Character<Field>& chi, const Root& beta) const;
  /// Diagonal h(χ).  Throws NonInvertibleScalar.
  TorusElement<Field> torus_from_character(const Character<Field>& chi) const;
  Character<Field> multiply(const Character<Field>& a, const Character<Field>& b) const;
  Character<Field> inverse(const Character<Field>& a) const;

  /// Splits h(χ) as h1·h2 where h2 fixes x_{α_i} for every i in the index set.
  TorusDecomposition<Field> decompose_torus(const Character<Field>& chi) const;

  GroupMatrix generator(const Generator<Field>& g) const;
  GroupMatrix evaluate(const Word<Field>& word) const;
  Word<Field> inverse(const Word<Field>& word) const;

 private:
  std::shared_ptr<const ChevalleyBasis> basis_;
  Field field_;
};

/// Words of root elements x_α(t), α ∈ Φ, t a nonzero integer in [-bound, bound].
template <class Field>
Word<Field> random_word(const ChevalleyGroup<Field>& group, std::mt19937_64& rng, std::size_t length,
                        long bound = 3);

/// Per-type decomposition data.
struct DecompositionProfile {
  std::vector<int> index_set;                  // I, 0-based
  int f_degree = 1;                            // f = T^{f_degree}
  std::vector<Integer> invariant_factors;      // Smith form of the Cartan matrix
  int k = 0;
};

DecompositionProfile decomposition_profile(const RootSystem& roots);
int f_degree(RootSystemType type);

/// Roots with a nonzero coefficient outside the index set.
int count_k(const RootSystem& roots);
/// Closed-form k for a type.
int k_formula(RootSystemType type);

struct TorusDegrees {
  std::vector<int> degree;        // d(β) = Σ_i A_{α_i β}, indexed like the roots
  int max_abs = 0;
  int argmax = -1;                // first root attaining max |d| in root order
  Root listed;                    // root singled out per type
  int listed_degree = 0;
  bool listed_attains_max = false;
  /// Number of roots other than ±listed attaining max |d|.
  int other_maximizers = 0;
};

Root listed_degree_root(RootSystemType type);
TorusDegrees torus_degrees(const RootSystem& roots);

extern template class ChevalleyGroup<RationalField>;
extern template class ChevalleyGroup<QuadraticField>;
extern template class ChevalleyGroup<RationalFunctionField>;

}  // namespace chevalley
