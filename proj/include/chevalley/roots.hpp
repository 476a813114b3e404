#pragma once

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "chevalley/rational.hpp"

namespace chevalley {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct RootSystemType {
  Family family = Family::A;
  int rank = 1;

  /// Throws InvalidRank outside A l>=1, B l>=2, C l>=3, D l>=4, E 6..8, F 4, G 2.
  void validate() const;
  std::string name() const;
  /// Accepts "A3", "E8", "g2".
  static RootSystemType parse(std::string_view text);

  friend auto operator<=>(const RootSystemType&, const RootSystemType&) = default;
};

Family parse_family(std::string_view text);

/// Coefficients over the simple roots.
using Root = std::vector<int>;

std::string format_root(const Root& root);
Root parse_root(std::string_view text);
int height(const Root& root);

/// Cartan matrix with A[i][j] = 2(α_i,α_j)/(α_i,α_i): the exponent of t with
/// which h_{α_i}(t) scales x_{α_j}.  Numbering is Bourbaki for A-D, branch at
/// node l-3 for E_l, short roots first for F_4 and G_2, so that the torus
/// decomposition formulas index the simple roots directly.
std::vector<std::vector<int>> cartan_matrix(RootSystemType type);

/// Simple-root indices (0-based) that the torus decomposition fixes.
std::vector<int> decomposition_index_set(RootSystemType type);

/// A full irreducible root system with a fixed total order:
/// roots supported only on the decomposition index set first, then by height,
/// then lexicographically.  Basis coordinates |Φ|..|Φ|+l-1 are h_1..h_l.
class RootSystem {
 public:
  explicit RootSystem(RootSystemType type);

  const RootSystemType& type() const { return type_; }
  int rank() const { return type_.rank; }
  std::size_t size() const { return roots_.size(); }
  std::size_t dimension() const { return roots_.size() + static_cast<std::size_t>(type_.rank); }
  std::size_t positive_count() const { return roots_.size() / 2; }

  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(int index) const { return roots_[static_cast<std::size_t>(index)]; }
  /// -1 when the vector is not a root.
  int index_of(const Root& root) const;
  /// Throws NotARoot.
  int require_index(const Root& root) const;
  int simple_index(int i) const { return simple_[static_cast<std::size_t>(i)]; }
  int negative_of(int index) const { return negative_[static_cast<std::size_t>(index)]; }
  /// Index of root(a) + root(b), or -1.
  int sum_index(int a, int b) const { return sums_[static_cast<std::size_t>(a) * size() + static_cast<std::size_t>(b)]; }
  bool is_positive(int index) const { return height(root(index)) > 0; }

  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  /// Symmetric Gram matrix of the simple roots, scaled to integers.
  const std::vector<std::vector<long>>& gram() const { return gram_; }
  long inner(const Root& a, const Root& b) const;
  /// Squared length with long roots normalized to 2.
  Rational squared_length(const Root& root) const;
  std::vector<Rational> simple_squared_lengths() const;

  /// 2(α,β)/(α,α) for roots α, β; throws NotARoot.
  int cartan_number(const Root& alpha, const Root& beta) const;
  int cartan_number(int alpha, int beta) const { return cartan_numbers_[static_cast<std::size_t>(alpha) * size() + static_cast<std::size_t>(beta)]; }
  /// 2(α,β)/(α,α) for a root α and any lattice vector β.
  int pairing(const Root& beta, int alpha_index) const;

  const std::vector<int>& index_set() const { return index_set_; }
  bool supported_on_index_set(int index) const;

 private:
  RootSystemType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<long>> gram_;
  std::vector<Root> roots_;
  std::map<Root, int> lookup_;
  std::vector<int> simple_;
  std::vector<int> negative_;
  std::vector<int> sums_;
  std::vector<int> cartan_numbers_;
  std::vector<int> index_set_;
  long long_length_ = 2;
};

RootSystem enumerate_roots(RootSystemType type);

struct DiagramSymmetry {
  std::vector<int> permutation;       // ρ on simple indices (0-based)
  std::vector<int> root_permutation;  // induced permutation of root indices
  int order = 1;

  bool is_identity() const { return order == 1; }
};

/// All permutations of the simple roots preserving the Cartan matrix, identity first.
std::vector<DiagramSymmetry> diagram_symmetries(const RootSystem& roots);

/// The symmetry with the given simple-root permutation; throws NoSuchSymmetry.
DiagramSymmetry find_symmetry(const RootSystem& roots, const std::vector<int>& permutation);

}  // namespace chevalley
