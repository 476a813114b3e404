#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chevalley/group.hpp"

namespace chevalley {

/// The four factors of φ = ρ̄ δ̄ φ_h φ_g.  Empty members are identities.
template <class Field>
struct AutomorphismParts {
  std::vector<int> rho;  // 0-based image of each simple index
  FieldAutomorphism delta = FieldAutomorphism::identity();
  std::optional<Character<Field>> chi;
  Word<Field> inner;
};

/// Semilinear normal form: x ↦ Q·σ(x)·Q⁻¹.
template <class Field>
struct Automorphism {
  Matrix<Field> q;
  Matrix<Field> q_inverse;
  FieldAutomorphism sigma = FieldAutomorphism::identity();
  std::vector<int> graph;  // simple-root permutation of the graph part
  /// Set when built from parts; composites carry none.
  std::optional<AutomorphismParts<Field>> parts;
  std::vector<std::string> notes;

  int graph_order() const;
  /// lcm(order of the graph part, order of σ).
  int twisting_length() const { return std::lcm(graph_order(), sigma.order()); }
};

/// R_ρ: x_β ↦ γ_β x_{ρβ}, h_i ↦ h_{ρ(i)}, with γ = 1 on ±Δ and the remaining
/// signs forced by bracket preservation.
template <class Field>
Matrix<Field> graph_matrix(const ChevalleyGroup<Field>& group, const DiagramSymmetry& rho);
/// γ_β for every root index.
std::vector<int> graph_signs(const ChevalleyBasis& basis, const DiagramSymmetry& rho);

template <class Field>
Matrix<Field> apply_field_automorphism(const FieldAutomorphism& delta, const Matrix<Field>& x);

/// Q = R_ρ·δ(h)·δ(g), σ = δ.  Throws IncompatibleField, NoSuchSymmetry.
template <class Field>
Automorphism<Field> make_automorphism(const ChevalleyGroup<Field>& group, const AutomorphismParts<Field>& parts);

template <class Field>
Automorphism<Field> identity_automorphism(const ChevalleyGroup<Field>& group);

/// (Q₁,σ₁)∘(Q₂,σ₂) = (Q₁·σ₁(Q₂), σ₁σ₂).
template <class Field>
Automorphism<Field> compose(const Automorphism<Field>& outer, const Automorphism<Field>& inner);

template <class Field>
Automorphism<Field> power(const ChevalleyGroup<Field>& group, const Automorphism<Field>& phi, int exponent);

/// Drops φ_g and replaces h by the factor h2 of its torus decomposition.
template <class Field>
Automorphism<Field> reduce_mod_inner(const ChevalleyGroup<Field>& group, const Automorphism<Field>& phi);

template <class Field>
Matrix<Field> apply(const Automorphism<Field>& phi, const Matrix<Field>& x);

/// z·g·φ(z⁻¹).
template <class Field>
Matrix<Field> twisted_conjugate(const Matrix<Field>& z, const Matrix<Field>& g, const Automorphism<Field>& phi);

/// Ψ(g) = g·φ(g)⋯φ^{m-1}(g) and N = Q·σ(Q)⋯σ^{m-1}(Q).
template <class Field>
struct TwistedNorm {
  int m = 1;
  Matrix<Field> psi;
  Matrix<Field> n;
};

template <class Field>
TwistedNorm<Field> twisted_norm(const Automorphism<Field>& phi, const Matrix<Field>& g);

/// ψ(g) = trace(Ψ(g)·N) = trace(∏_{k<m} σ^k(g·Q)).
template <class Field>
typename Field::Element class_invariant(const Automorphism<Field>& phi, const Matrix<Field>& g);

/// Characteristic polynomial of Ψ(g)·N, constant term first.
template <class Field>
std::vector<typename Field::Element> class_invariant_charpoly(const Automorphism<Field>& phi, const Matrix<Field>& g);

enum class InvariantKind { trace, charpoly };

struct WitnessOptions {
  std::size_t n = 2;
  char strategy = 'P';  // 'P' primes, 'T' evaluations of g(T)
  std::size_t budget = 1000;
  std::uint64_t seed = 0;
  InvariantKind invariant = InvariantKind::trace;
};

struct WitnessElement {
  std::vector<Integer> primes;  // strategy P: h_{α_j}(p_j)
  std::string point;            // strategy T: g(x) = ∏ h_{α_j}(x)
  std::string invariant;
};

/// Field-independent certificate; scalars are stored in their printed form.
struct WitnessCertificate {
  RootSystemType type;
  std::string field;
  std::vector<int> rho;
  FieldAutomorphism delta = FieldAutomorphism::identity();
  std::vector<std::string> chi;   // empty when there is no torus part
  std::string inner;              // generator word, empty when trivial
  int m = 1;
  char strategy = 'P';
  InvariantKind invariant = InvariantKind::trace;
  std::string symbolic;           // strategy T: ψ(g(T)) as a Laurent polynomial
  std::vector<WitnessElement> elements;
  bool distinct = false;
  std::uint64_t seed = 0;
  std::size_t candidates = 0;
  std::vector<std::string> notes;
};

/// Throws ExhaustedCandidates, ConstantInvariant.
template <class Field>
WitnessCertificate r_infinity_witness(const ChevalleyGroup<Field>& group, const Automorphism<Field>& phi,
                                      const WitnessOptions& options);

struct VerificationReport {
  bool valid = false;
  std::vector<std::string> problems;
};

/// Rebuilds φ and every g_i from the certificate alone and rechecks all invariants.
VerificationReport verify_certificate(const WitnessCertificate& certificate);

template <class Field>
struct Refutation {
  Word<Field> z1;
  Word<Field> z2;
  typename Field::Element psi_xy;
  typename Field::Element psi_e;
  std::size_t attempts = 0;
};

/// nullopt is the NoRefutation outcome.
template <class Field>
std::optional<Refutation<Field>> unit_class_refutation(const ChevalleyGroup<Field>& group,
                                                       const Automorphism<Field>& phi, std::size_t budget,
                                                       std::uint64_t seed, std::size_t word_length = 3);

}  // namespace chevalley
