#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

#include "wedgelab/cyclotomic.hpp"

namespace wedgelab {

/// Kronecker symbol (a/n), fully extended: n may be negative, zero, or even.
int kronecker(const mpz_class& a, const mpz_class& n);
int kronecker(long a, long n);

/// Dirichlet character mod N with exact root-of-unity values.
///
/// Three representations share one interface: a generator-image encoding
/// per prime-power factor of N (the workhorse), a Kronecker symbol (D/.),
/// and a lazy pointwise product of other characters.  Products are never
/// reduced to a primitive modulus; only pointwise values are contractual.
class DirichletCharacter {
 public:
  struct Component {
    long prime_power = 1;  // p^e dividing the modulus
    long generator = 1;    // fixed generator of (Z/p^e)^* (or of its factor)
    long gen_order = 1;    // multiplicative order of the generator
    long exponent = 0;     // image exponent: g -> zeta_{gen_order}^exponent
  };

  DirichletCharacter() = default;  // the principal character mod 1

  static DirichletCharacter principal(long modulus);
  /// exponents are matched against the component list of `modulus`
  /// (see components_of_modulus); values are taken mod the generator order.
  static DirichletCharacter from_generator_exponents(long modulus,
                                                     const std::vector<long>& exponents);
  /// The character n -> (D/n).  D with D = 2,3 mod 4 is promoted to 4D so
  /// that the symbol is periodic; modulus is |D| after promotion.
  static DirichletCharacter kronecker_character(const mpz_class& D);
  static DirichletCharacter product(std::vector<DirichletCharacter> factors);

  /// chi^j for any integer j (j < 0 uses chi^{order-(-j mod order)}).
  DirichletCharacter power(long j) const;

  long modulus() const { return modulus_; }

  /// Exact value at n (periodic extension to all integers; 0 off units).
  CycNumber evaluate(long long n) const;
  /// Value as an exponent: chi(n) = zeta_order^e, or nullopt when chi(n)=0.
  std::optional<long> value_exponent(long long n) const;

  /// Multiplicative order r_chi (least r >= 1 with chi^r principal).
  long order() const;
  bool is_principal() const;
  /// Parity hypothesis used by the degeneracy tests: is r_{chi^2} odd?
  bool order_of_square_is_odd() const;

  /// All phi(N) characters mod N, generator-encoded, deterministic order.
  static std::vector<DirichletCharacter> all_characters(long modulus);
  /// The generator/component layout used by from_generator_exponents.
  static std::vector<Component> components_of_modulus(long modulus);

  enum class Kind { Generators, Kronecker, Product };
  Kind kind() const { return kind_; }
  const std::vector<Component>& components() const { return comps_; }
  const mpz_class& kronecker_top() const { return kron_D_; }
  const std::vector<DirichletCharacter>& factors() const { return factors_; }

 private:
  Kind kind_ = Kind::Generators;
  long modulus_ = 1;
  std::vector<Component> comps_;             // Generators
  std::vector<std::vector<int32_t>> dlog_;   // per component: residue -> exponent, -1 off orbit
  mpz_class kron_D_;                         // Kronecker
  std::vector<DirichletCharacter> factors_;  // Product
  long order_ = 1;  // computed at construction; instances stay immutable

  void build_dlog_tables();
  long compute_order() const;
};

/// The twisted character used by the coefficient-level Shimura lift:
/// d -> chi(d) * (s/d) with s = (-1)^k * N^2 * t (the squared level enters
/// verbatim).  The _with_scale variant takes the numerator scale directly
/// (s = (-1)^k * scale * t), so the N-versus-N^2 formulation difference
/// stays testable instead of silently resolved.
DirichletCharacter shimura_twist_character(const DirichletCharacter& chi, long k, long N,
                                           long t);
DirichletCharacter shimura_twist_character_with_scale(const DirichletCharacter& chi, long k,
                                                      const mpz_class& numerator_scale, long t);

}  // namespace wedgelab
