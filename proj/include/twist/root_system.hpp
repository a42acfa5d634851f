#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twist/errors.hpp"

namespace twist {

/// Irreducible type, e.g. {A,2} or {D,4}. Admissible ranks: A >= 1, B >= 2,
/// C >= 2, D >= 4, E in 6..8, F = 4, G = 2.
struct RootSystemType {
  char family = 'A';
  int rank = 1;

  static RootSystemType parse(const std::string& text);  // "A2", "D4", ...
  std::string str() const { return family + std::to_string(rank); }
  bool operator==(const RootSystemType&) const = default;
};

/// A root as its integer coordinate vector in the simple root basis. Positive
/// roots have all coordinates >= 0.
struct Root {
  std::vector<int> coeffs;
  bool operator==(const Root&) const = default;
  bool operator<(const Root& o) const { return coeffs < o.coeffs; }
};

/// A Dynkin diagram symmetry: a Cartan-matrix-preserving permutation of the
/// simple roots together with the induced permutation of all positive roots.
/// Permutations are 0-based; perm[i] = j means alpha_{i+1} -> alpha_{j+1}.
struct DiagramSymmetry {
  std::vector<int> perm;          // on simple root indices 0..l-1
  std::vector<int> induced_perm;  // on positive root indices 0..N-1

  bool is_identity() const;
  bool operator==(const DiagramSymmetry&) const = default;
};

/// Which case split the extremal automorphism family follows.
enum class ExtremalBranch { TypeA, TypeC, Other };

/// An irreducible root system with the height-compatible positive root
/// ordering: roots sorted by height, and within a height by descending
/// coordinate vector. That places the simple roots first in diagram order and
/// realizes the pinned conventions for the last three roots (checked at build
/// time). Immutable after construction.
class RootSystem {
public:
  static RootSystem build(RootSystemType type);
  static RootSystem build(const std::string& type) { return build(RootSystemType::parse(type)); }

  const RootSystemType& type() const { return type_; }
  int rank() const { return type_.rank; }
  /// Number of positive roots.
  int count() const { return int(positive_.size()); }

  /// Positive roots by 1-based index: root(1) .. root(N); root(N) is the
  /// highest root.
  const Root& root(int index) const;
  const Root& simple(int i) const { return root(i); }
  const std::vector<Root>& positive_roots() const { return positive_; }
  int highest_root_index() const { return count(); }

  /// 1-based index of a positive root; NotAPositiveRoot if absent.
  int index_of(const Root& r) const;
  /// Membership in Phi (either sign).
  bool is_root(const Root& r) const;
  bool is_positive_root(const Root& r) const;

  int height(const Root& r) const;  // NotAPositiveRoot unless r is positive
  int height_of(int index) const { return height(root(index)); }

  /// Cartan pairing <beta, alpha> = 2(beta,alpha)/(alpha,alpha) for any roots.
  int pairing(const Root& beta, const Root& alpha) const;
  /// Cartan matrix entry <alpha_i, alpha_j>, 1-based.
  int cartan(int i, int j) const { return cartan_[i - 1][j - 1]; }

  /// Symmetrized inner product (beta,gamma), normalized so short roots have
  /// squared length 2.
  int inner(const Root& beta, const Root& gamma) const;

  /// alpha + beta when it is a root.
  std::optional<Root> root_sum(const Root& alpha, const Root& beta) const;

  /// The image of a root under a diagram symmetry (coordinate permutation).
  Root apply_symmetry(const DiagramSymmetry& s, const Root& r) const;

  /// The full group of diagram symmetries, identity first.
  const std::vector<DiagramSymmetry>& diagram_symmetries() const { return symmetries_; }
  const DiagramSymmetry& identity_symmetry() const { return symmetries_.front(); }
  /// Finds the symmetry with the given simple root permutation (0-based).
  const DiagramSymmetry& symmetry_from_perm(const std::vector<int>& perm) const;

  /// Case split for the extremal automorphism family. B_2 = C_2 is not
  /// covered by the source case analysis; by default it takes the C branch,
  /// and `b2_takes_c_branch = false` forces the generic branch instead.
  ExtremalBranch extremal_branch(bool b2_takes_c_branch = true) const;
  /// Simple root indices (1-based) moved by extremal automorphisms: {1, l}
  /// for type A (rank >= 2), the unique i with alpha_N - alpha_i positive
  /// otherwise; empty for A_1.
  std::vector<int> extremal_simple_indices() const;

  /// Heights present in increasing order, and the 1-based root indices at
  /// each height (blocks of the ordering).
  const std::vector<int>& heights() const { return heights_; }
  const std::vector<std::vector<int>>& height_blocks() const { return blocks_; }

  std::string format_root(const Root& r) const;  // "a1+2a2+a3+a4"

private:
  RootSystem() = default;

  RootSystemType type_;
  std::vector<Root> positive_;               // 0-based storage, index i = root i+1
  std::map<std::vector<int>, int> index_;    // positive root -> 0-based index
  std::vector<std::vector<int>> cartan_;     // <alpha_i, alpha_j>
  std::vector<int> d_;                       // symmetrizer: (alpha_i,alpha_i)/2
  std::vector<DiagramSymmetry> symmetries_;
  std::vector<int> heights_;
  std::vector<std::vector<int>> blocks_;
};

}  // namespace twist
