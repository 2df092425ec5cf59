#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace mmnrel
{

/// Dense univariate polynomial with arbitrary-precision integer coefficients,
/// coefficient i multiplying p^i. Trailing zeros are always trimmed, so the
/// zero polynomial has no coefficients.
class Polynomial
{
public:
  Polynomial() = default;
  explicit Polynomial( std::vector<mpz_class> coeffs );
  Polynomial( std::initializer_list<long> coeffs );

  static Polynomial monomial( std::size_t degree, mpz_class const& c = 1 );
  static Polynomial identity() { return monomial( 1 ); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>( coeffs_.size() ) - 1; }
  std::vector<mpz_class> const& coeffs() const noexcept { return coeffs_; }
  mpz_class coeff( std::size_t i ) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class( 0 ); }
  mpz_class const& leading() const { return coeffs_.back(); }

  Polynomial& operator+=( Polynomial const& o );
  Polynomial& operator-=( Polynomial const& o );
  Polynomial& operator*=( mpz_class const& k );

  friend Polynomial operator+( Polynomial a, Polynomial const& b ) { return a += b; }
  friend Polynomial operator-( Polynomial a, Polynomial const& b ) { return a -= b; }
  friend Polynomial operator*( Polynomial const& a, Polynomial const& b );
  friend Polynomial operator*( Polynomial a, mpz_class const& k ) { return a *= k; }
  Polynomial operator-() const;

  bool operator==( Polynomial const& o ) const { return coeffs_ == o.coeffs_; }

  /// this(inner(p)).
  Polynomial compose( Polynomial const& inner ) const;
  /// this(1 - p).
  Polynomial reflect() const;
  Polynomial derivative() const;

  mpq_class evaluate( mpq_class const& x ) const;
  /// Sign of the value at x, computed without building the rational value.
  int sign_at( mpq_class const& x ) const;

  /// Divide by p^k where k is the multiplicity of the root 0.
  Polynomial strip_root_at_zero( std::size_t* multiplicity = nullptr ) const;
  /// Divide by (1-p)^k where k is the multiplicity of the root 1.
  Polynomial strip_root_at_one( std::size_t* multiplicity = nullptr ) const;

  mpz_class content() const;
  /// Divided by its content, leading coefficient positive.
  Polynomial primitive_part() const;

  std::string to_string() const;

private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// Exact quotient over Z; throws std::domain_error when the division leaves a remainder.
Polynomial exact_divide( Polynomial const& num, Polynomial const& den );

/// Primitive gcd over Z[p] with positive leading coefficient (zero if both are zero).
Polynomial gcd( Polynomial const& a, Polynomial const& b );

/// f / gcd(f, f'), primitive.
Polynomial square_free_part( Polynomial const& f );

mpz_class binomial( std::size_t n, std::size_t k );

} // namespace mmnrel
