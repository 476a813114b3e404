#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chevalley/roots.hpp"
#include "chevalley/smith.hpp"

namespace chevalley {

/// Sparse integer vector over the Chevalley basis: (coordinate, coefficient).
using SparseVector = std::vector<std::pair<int, long>>;

/// Chevalley basis {x_β (β ∈ Φ), h_1..h_l} of the simple Lie algebra of a
/// root system.  Coordinate k < |Φ| is x_{root(k)}; coordinate |Φ|+i is h_{i+1}.
///
/// Signs follow the extraspecial-pair convention: N_{γ,δ} = +(p+1) for every
/// extraspecial pair, N_{-α,-β} = -N_{α,β}, [x_α, x_{-α}] = h_α.
class ChevalleyBasis {
 public:
  explicit ChevalleyBasis(RootSystem roots);

  const RootSystem& roots() const { return roots_; }
  int rank() const { return roots_.rank(); }
  std::size_t dimension() const { return roots_.dimension(); }
  int cartan_coordinate(int i) const { return static_cast<int>(roots_.size()) + i; }
  bool is_root_coordinate(int k) const { return k < static_cast<int>(roots_.size()); }

  /// N_{αβ} for root indices; 0 when α+β is not a root.
  int structure_constant(int alpha, int beta) const {
    return n_[static_cast<std::size_t>(alpha) * roots_.size() + static_cast<std::size_t>(beta)];
  }
  /// h_α = Σ c_i h_i.
  const std::vector<int>& coroot(int alpha) const { return coroots_[static_cast<std::size_t>(alpha)]; }

  /// [e_a, e_b] for basis coordinates a, b.
  SparseVector bracket(int a, int b) const;
  /// Bilinear extension to dense integer vectors.
  std::vector<Integer> bracket(const std::vector<Integer>& u, const std::vector<Integer>& v) const;

  /// Columns of ad e_a: column j is [e_a, e_j].
  const std::vector<SparseVector>& ad_columns(int a) const { return ad_[static_cast<std::size_t>(a)]; }
  IntMatrix ad_matrix(int a) const;

  struct ExpTerm {
    int row;
    int power;
    long coefficient;
  };
  /// Column j of exp(t ad x_α) is Σ coefficient·t^power·e_row (divided powers of ad x_α).
  const std::vector<std::vector<ExpTerm>>& exponential_columns(int alpha) const {
    return exp_[static_cast<std::size_t>(alpha)];
  }
  IntMatrix ad_matrix(std::string_view label) const;

  /// "x[1,0]" or "h1".
  std::string label(int coordinate) const;
  /// Throws UnknownLabel.
  int coordinate(std::string_view label) const;

 private:
  void build_structure_constants();
  long signed_constant(int r, int s) const;

  RootSystem roots_;
  std::vector<int> n_;
  std::vector<std::vector<int>> coroots_;
  std::vector<std::vector<SparseVector>> ad_;
  std::vector<std::vector<std::vector<ExpTerm>>> exp_;
};

ChevalleyBasis build_chevalley_basis(const RootSystem& roots);

}  // namespace chevalley
