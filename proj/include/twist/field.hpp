#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "twist/errors.hpp"

namespace twist {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A scalar in canonical form. Finite fields store the polynomial residue
/// coefficients (constant term first, length = extension degree, entries
/// reduced mod p); the rationals store a reduced fraction. Equality is
/// structural.
struct FieldElement {
  std::variant<std::vector<std::uint64_t>, Rational> rep;

  bool operator==(const FieldElement&) const = default;
};

/// Exact coefficient arithmetic for F_p, small extensions F_{p^k} given by an
/// irreducible modulus, and Q. Immutable after construction and freely
/// shareable across threads.
class Field {
public:
  enum class Kind { PrimeFinite, ExtensionFinite, Rationals };

  static Field prime(std::uint64_t p);
  /// `modulus` holds the coefficients of a monic irreducible polynomial over
  /// F_p, constant term first, leading coefficient 1; the extension degree is
  /// modulus.size() - 1.
  static Field extension(std::uint64_t p, std::vector<std::uint64_t> modulus);
  static Field rationals();

  /// Accepts "Q", "Fq:p=5" and "Fq:p=5,deg=2,mod=[2,0,1]".
  static Field parse(const std::string& spec);
  std::string spec() const;

  Kind kind() const { return kind_; }
  bool finite() const { return kind_ != Kind::Rationals; }
  std::uint64_t characteristic() const { return kind_ == Kind::Rationals ? 0 : p_; }
  unsigned degree() const { return kind_ == Kind::Rationals ? 1 : unsigned(modulus_.size() - 1); }
  std::uint64_t order() const;  // finite fields only
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  bool operator==(const Field&) const = default;

  /// Throws CharacteristicTwoOrThreeRejected; used by callers that rely on
  /// exact division by 2 and 3.
  void require_characteristic_not_2_3() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(long long v) const;
  FieldElement from_rational(const Rational& r) const;
  /// Finite fields: element with the given residue coefficients (low degree
  /// first, shorter lists are zero padded, entries reduced mod p).
  FieldElement from_coeffs(const std::vector<long long>& coeffs) const;

  bool contains(const FieldElement& x) const;
  void check(const FieldElement& x) const;  // throws SpecMismatch

  bool is_zero(const FieldElement& x) const;
  bool is_one(const FieldElement& x) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement inv(const FieldElement& a) const;  // throws DivisionByZero
  FieldElement div(const FieldElement& a, const FieldElement& b) const;
  FieldElement pow(const FieldElement& a, const BigInt& e) const;
  FieldElement frobenius(const FieldElement& a) const;  // x -> x^p, finite only

  /// Deterministic enumeration of a finite field: element_at(i) for
  /// 0 <= i < order(), with element_at(0) == zero().
  FieldElement element_at(std::uint64_t index) const;
  std::uint64_t index_of(const FieldElement& x) const;

  FieldElement sample(std::mt19937_64& rng) const;
  FieldElement sample_nonzero(std::mt19937_64& rng) const;

  std::string format(const FieldElement& x) const;
  /// Inverse of format; prime fields also accept any (possibly negative)
  /// integer literal, extensions accept "[c0,c1,...]".
  FieldElement parse_element(const std::string& text) const;

private:
  Field(Kind kind, std::uint64_t p, std::vector<std::uint64_t> modulus)
      : kind_(kind), p_(p), modulus_(std::move(modulus)) {}

  std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) const { return a * b % p_; }
  std::vector<std::uint64_t> poly_mul_mod(const std::vector<std::uint64_t>& a,
                                          const std::vector<std::uint64_t>& b) const;

  Kind kind_;
  std::uint64_t p_ = 0;                  // characteristic, 0 for Q
  std::vector<std::uint64_t> modulus_;   // size degree+1 for finite fields
};

/// An additive endomorphism of the ground field: x -> sum a_i x^{p^i} in
/// characteristic p, or x -> a_0 x over Q.
struct AdditiveEndo {
  Field field;
  std::vector<FieldElement> coeffs;  // a_0 .. a_n

  AdditiveEndo(Field f, std::vector<FieldElement> c);

  FieldElement apply(const FieldElement& x) const;
  bool is_zero() const;
};

}  // namespace twist
