#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "twist/field.hpp"
#include "twist/root_system.hpp"

namespace twist {

/// One term x_{i a + j b}((-1)^{i+j} c t^i u^j) of the commutator relation
/// between x_a(t) and x_b(u), in the fixed positive root ordering.
struct TailTerm {
  int root_index;  // 1-based index of i*alpha + j*beta
  int i = 1, j = 1;
  int c = 0;  // integer constant, |c| in {1,2,3}
};

struct StructureConstantOptions {
  /// Flips every extraspecial sign; used to confirm that the decision
  /// procedures downstream do not depend on the convention.
  bool negate_extraspecial = false;
};

/// Integer structure constants of a Chevalley basis for the given root
/// system: the N_{x,y} on all pairs of (signed) roots, and the commutator
/// tail tables for ordered pairs of positive roots. Signs are generated by
/// fixing +(p+1) on the extraspecial pairs and propagating; any consistent
/// choice yields an isomorphic group. Immutable and shareable.
class StructureConstants {
public:
  using Options = StructureConstantOptions;

  static StructureConstants compute(RootSystem rs, Options opts = {});

  const RootSystem& rs() const { return rs_; }

  /// N_{x,y} for signed root indices x, y in +-1..+-N (negative index =
  /// negative root) with root(x) + root(y) in Phi.
  int n_constant(int x, int y) const;
  bool sum_is_root(int x, int y) const;

  /// Ordered tail factors of x_a(t) x_b(u) = x_b(u) x_a(t) * tail for
  /// distinct positive roots; empty when no i*alpha + j*beta lies in Phi.
  const std::vector<TailTerm>& tail(int a, int b) const;
  /// C_{ij,ab} from the tail table; throws when i alpha_a + j alpha_b is not
  /// a root.
  int c_constant(int i, int j, int a, int b) const;

private:
  explicit StructureConstants(RootSystem rs) : rs_(std::move(rs)) {}

  RootSystem rs_;
  std::map<std::pair<int, int>, int> n_;
  std::map<std::pair<int, int>, std::vector<TailTerm>> tails_;
};

/// A single canonical-form factor x_{alpha_i}(t).
struct RootFactor {
  int root_index;  // 1..N
  FieldElement scalar;
};

/// Canonical form prod_{i=1..N} x_{alpha_i}(t_i); equality is coordinate-wise.
struct UnipotentElement {
  std::vector<FieldElement> coords;
  bool operator==(const UnipotentElement&) const = default;
};

/// prod h_{alpha_i}(t_i) over the simple roots, all coordinates nonzero.
struct TorusElement {
  std::vector<FieldElement> coords;
  bool operator==(const TorusElement&) const = default;
};

/// A Borel element (h, u) = h * u with h in the torus and u unipotent.
struct BorelElement {
  TorusElement h;
  UnipotentElement u;
  bool operator==(const BorelElement&) const = default;
};

/// The maximal unipotent group over a fixed field, with the collection
/// algorithm as its multiplication. All operations are pure.
class UnipotentGroup {
public:
  UnipotentGroup(StructureConstants sc, Field field);

  const RootSystem& rs() const { return sc_.rs(); }
  const StructureConstants& constants() const { return sc_; }
  const Field& field() const { return field_; }

  UnipotentElement identity() const;
  UnipotentElement element(std::vector<FieldElement> coords) const;
  bool is_identity(const UnipotentElement& x) const;

  /// x_a(t) x_a(u) -> x_a(t+u).
  RootFactor merge_one_parameter(const RootFactor& f, const RootFactor& g) const;

  /// The ordered factors of the commutator relation for distinct positive
  /// roots a and b, zero scalars dropped.
  std::vector<RootFactor> commutator_tail(int a, int b, const FieldElement& t,
                                          const FieldElement& u) const;

  /// Canonical form of an arbitrary word of positive root factors.
  UnipotentElement collect(std::vector<RootFactor> factors) const;

  UnipotentElement multiply(const UnipotentElement& x, const UnipotentElement& y) const;
  UnipotentElement invert(const UnipotentElement& x) const;
  /// g x g^{-1}
  UnipotentElement conjugate(const UnipotentElement& g, const UnipotentElement& x) const;

  TorusElement torus_element(std::vector<FieldElement> coords) const;
  TorusElement torus_identity() const;
  TorusElement torus_multiply(const TorusElement& a, const TorusElement& b) const;
  TorusElement torus_invert(const TorusElement& h) const;
  /// h x h^{-1}: coordinate at beta scales by prod t_i^{<beta, alpha_i>}.
  UnipotentElement torus_conjugate(const TorusElement& h, const UnipotentElement& x) const;

  BorelElement borel(TorusElement h, UnipotentElement u) const { return {std::move(h), std::move(u)}; }
  BorelElement borel_multiply(const BorelElement& a, const BorelElement& b) const;
  BorelElement borel_invert(const BorelElement& a) const;

  /// The standard unitriangular representation x_{e_a - e_b}(t) -> I + t E_{ab}
  /// of type A_l as (l+1)x(l+1) matrices; WrongType otherwise.
  std::vector<std::vector<FieldElement>> matrix_representation(const UnipotentElement& x) const;

  /// Deterministic enumeration of U(F_q).
  std::uint64_t element_count() const;
  UnipotentElement element_at(std::uint64_t index) const;
  std::uint64_t index_of(const UnipotentElement& x) const;
  UnipotentElement sample(std::mt19937_64& rng) const;

  std::vector<RootFactor> factors_of(const UnipotentElement& x) const;
  std::string format(const UnipotentElement& x) const;  // "x[1](2)*x[3](4)", "e"
  UnipotentElement parse(const std::string& text) const;

private:
  StructureConstants sc_;
  Field field_;
};

}  // namespace twist
