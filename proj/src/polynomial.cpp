#include "mmnrel/polynomial.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace mmnrel
{

Polynomial::Polynomial( std::vector<mpz_class> coeffs ) : coeffs_( std::move( coeffs ) )
{
  trim();
}

Polynomial::Polynomial( std::initializer_list<long> coeffs )
{
  coeffs_.reserve( coeffs.size() );
  for ( long c : coeffs )
  {
    coeffs_.emplace_back( c );
  }
  trim();
}

Polynomial Polynomial::monomial( std::size_t degree, mpz_class const& c )
{
  std::vector<mpz_class> v( degree + 1 );
  v[degree] = c;
  return Polynomial( std::move( v ) );
}

void Polynomial::trim()
{
  while ( !coeffs_.empty() && coeffs_.back() == 0 )
  {
    coeffs_.pop_back();
  }
}

Polynomial& Polynomial::operator+=( Polynomial const& o )
{
  if ( o.coeffs_.size() > coeffs_.size() )
  {
    coeffs_.resize( o.coeffs_.size() );
  }
  for ( std::size_t i = 0; i < o.coeffs_.size(); ++i )
  {
    coeffs_[i] += o.coeffs_[i];
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=( Polynomial const& o )
{
  if ( o.coeffs_.size() > coeffs_.size() )
  {
    coeffs_.resize( o.coeffs_.size() );
  }
  for ( std::size_t i = 0; i < o.coeffs_.size(); ++i )
  {
    coeffs_[i] -= o.coeffs_[i];
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=( mpz_class const& k )
{
  if ( k == 0 )
  {
    coeffs_.clear();
    return *this;
  }
  for ( auto& c : coeffs_ )
  {
    c *= k;
  }
  return *this;
}

Polynomial operator*( Polynomial const& a, Polynomial const& b )
{
  if ( a.is_zero() || b.is_zero() )
  {
    return {};
  }
  std::vector<mpz_class> out( a.coeffs_.size() + b.coeffs_.size() - 1 );
  for ( std::size_t i = 0; i < a.coeffs_.size(); ++i )
  {
    if ( a.coeffs_[i] == 0 )
    {
      continue;
    }
    for ( std::size_t j = 0; j < b.coeffs_.size(); ++j )
    {
      mpz_addmul( out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t() );
    }
  }
  return Polynomial( std::move( out ) );
}

Polynomial Polynomial::operator-() const
{
  Polynomial out = *this;
  for ( auto& c : out.coeffs_ )
  {
    c = -c;
  }
  return out;
}

Polynomial Polynomial::compose( Polynomial const& inner ) const
{
  // Horner in the polynomial ring.
  Polynomial acc;
  for ( auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it )
  {
    acc = acc * inner;
    acc += Polynomial( std::vector<mpz_class>{ *it } );
  }
  return acc;
}

Polynomial Polynomial::reflect() const
{
  // Taylor shift to f(1+q), then q -> -p.
  std::vector<mpz_class> c = coeffs_;
  std::size_t const n = c.size();
  for ( std::size_t i = 0; i + 1 < n; ++i )
  {
    for ( std::size_t j = n - 1; j > i; --j )
    {
      c[j - 1] += c[j];
    }
  }
  // c now holds f(1+q); substitute q = -p.
  for ( std::size_t i = 1; i < n; i += 2 )
  {
    c[i] = -c[i];
  }
  return Polynomial( std::move( c ) );
}

Polynomial Polynomial::derivative() const
{
  if ( coeffs_.size() <= 1 )
  {
    return {};
  }
  std::vector<mpz_class> out( coeffs_.size() - 1 );
  for ( std::size_t i = 1; i < coeffs_.size(); ++i )
  {
    out[i - 1] = coeffs_[i] * static_cast<unsigned long>( i );
  }
  return Polynomial( std::move( out ) );
}

mpq_class Polynomial::evaluate( mpq_class const& x ) const
{
  mpq_class acc = 0;
  for ( auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it )
  {
    acc = acc * x + mpq_class( *it );
  }
  acc.canonicalize();
  return acc;
}

int Polynomial::sign_at( mpq_class const& x ) const
{
  if ( coeffs_.empty() )
  {
    return 0;
  }
  // sum c_i a^i b^(n-i) with x = a/b, b > 0.
  mpz_class const& a = x.get_num();
  mpz_class const& b = x.get_den();
  mpz_class acc = 0;
  mpz_class bpow = 1;
  for ( auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it )
  {
    acc = acc * a + *it * bpow;
    bpow *= b;
  }
  return sgn( acc );
}

Polynomial Polynomial::strip_root_at_zero( std::size_t* multiplicity ) const
{
  std::size_t k = 0;
  while ( k < coeffs_.size() && coeffs_[k] == 0 )
  {
    ++k;
  }
  if ( multiplicity )
  {
    *multiplicity = is_zero() ? 0 : k;
  }
  if ( is_zero() || k == 0 )
  {
    return *this;
  }
  return Polynomial( std::vector<mpz_class>( coeffs_.begin() + static_cast<std::ptrdiff_t>( k ), coeffs_.end() ) );
}

Polynomial Polynomial::strip_root_at_one( std::size_t* multiplicity ) const
{
  std::size_t k = 0;
  Polynomial cur = *this;
  while ( !cur.is_zero() )
  {
    mpz_class sum = 0;
    for ( auto const& c : cur.coeffs_ )
    {
      sum += c;
    }
    if ( sum != 0 )
    {
      break;
    }
    // Synthetic division by (p - 1): q_{i-1} = c_i + q_i.
    std::size_t const n = cur.coeffs_.size();
    std::vector<mpz_class> q( n - 1 );
    mpz_class carry = 0;
    for ( std::size_t i = n - 1; i >= 1; --i )
    {
      carry += cur.coeffs_[i];
      q[i - 1] = carry;
    }
    // Divide by (1 - p) = -(p - 1).
    for ( auto& c : q )
    {
      c = -c;
    }
    cur = Polynomial( std::move( q ) );
    ++k;
  }
  if ( multiplicity )
  {
    *multiplicity = k;
  }
  return cur;
}

mpz_class Polynomial::content() const
{
  mpz_class g = 0;
  for ( auto const& c : coeffs_ )
  {
    mpz_gcd( g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t() );
    if ( g == 1 )
    {
      break;
    }
  }
  return g;
}

Polynomial Polynomial::primitive_part() const
{
  if ( is_zero() )
  {
    return {};
  }
  mpz_class g = content();
  if ( leading() < 0 )
  {
    g = -g;
  }
  std::vector<mpz_class> out( coeffs_.size() );
  for ( std::size_t i = 0; i < coeffs_.size(); ++i )
  {
    mpz_divexact( out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t() );
  }
  return Polynomial( std::move( out ) );
}

std::string Polynomial::to_string() const
{
  if ( is_zero() )
  {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for ( std::size_t i = 0; i < coeffs_.size(); ++i )
  {
    mpz_class const& c = coeffs_[i];
    if ( c == 0 )
    {
      continue;
    }
    mpz_class mag = abs( c );
    if ( first )
    {
      if ( c < 0 )
      {
        os << "-";
      }
    }
    else
    {
      os << ( c < 0 ? " - " : " + " );
    }
    first = false;
    if ( i == 0 || mag != 1 )
    {
      os << mag.get_str();
    }
    if ( i >= 1 )
    {
      os << "p";
      if ( i >= 2 )
      {
        os << "^" << i;
      }
    }
  }
  return os.str();
}

Polynomial exact_divide( Polynomial const& num, Polynomial const& den )
{
  if ( den.is_zero() )
  {
    throw std::domain_error( "polynomial division by zero" );
  }
  if ( num.is_zero() )
  {
    return {};
  }
  if ( num.degree() < den.degree() )
  {
    throw std::domain_error( "inexact polynomial division" );
  }
  std::vector<mpz_class> rem = num.coeffs();
  std::size_t const dn = static_cast<std::size_t>( den.degree() );
  std::size_t const qn = static_cast<std::size_t>( num.degree() - den.degree() );
  std::vector<mpz_class> q( qn + 1 );
  mpz_class const& lc = den.leading();
  for ( std::size_t k = qn + 1; k-- > 0; )
  {
    mpz_class& top = rem[k + dn];
    if ( top == 0 )
    {
      continue;
    }
    if ( !mpz_divisible_p( top.get_mpz_t(), lc.get_mpz_t() ) )
    {
      throw std::domain_error( "inexact polynomial division" );
    }
    mpz_divexact( q[k].get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t() );
    for ( std::size_t j = 0; j <= dn; ++j )
    {
      mpz_submul( rem[k + j].get_mpz_t(), q[k].get_mpz_t(), den.coeffs()[j].get_mpz_t() );
    }
  }
  for ( auto const& r : rem )
  {
    if ( r != 0 )
    {
      throw std::domain_error( "inexact polynomial division" );
    }
  }
  return Polynomial( std::move( q ) );
}

namespace
{

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
Polynomial pseudo_remainder( Polynomial const& a, Polynomial const& b )
{
  std::vector<mpz_class> r = a.coeffs();
  std::size_t const bn = static_cast<std::size_t>( b.degree() );
  mpz_class const& lc = b.leading();
  while ( !r.empty() && r.size() - 1 >= bn )
  {
    mpz_class const top = r.back();
    std::size_t const shift = r.size() - 1 - bn;
    for ( auto& c : r )
    {
      c *= lc;
    }
    for ( std::size_t j = 0; j <= bn; ++j )
    {
      mpz_submul( r[shift + j].get_mpz_t(), top.get_mpz_t(), b.coeffs()[j].get_mpz_t() );
    }
    while ( !r.empty() && r.back() == 0 )
    {
      r.pop_back();
    }
  }
  return Polynomial( std::move( r ) );
}

// Arithmetic in F_q with q a prime below 2^62.
struct ModField
{
  std::uint64_t q;

  std::uint64_t reduce( mpz_class const& x ) const
  {
    mpz_class r;
    mpz_fdiv_r_ui( r.get_mpz_t(), x.get_mpz_t(), q );
    return r.get_ui();
  }
  std::uint64_t mul( std::uint64_t a, std::uint64_t b ) const
  {
    return static_cast<std::uint64_t>( static_cast<unsigned __int128>( a ) * b % q );
  }
  std::uint64_t sub( std::uint64_t a, std::uint64_t b ) const { return a >= b ? a - b : a + q - b; }
  std::uint64_t inv( std::uint64_t a ) const
  {
    std::uint64_t result = 1, base = a, e = q - 2;
    while ( e )
    {
      if ( e & 1 )
      {
        result = mul( result, base );
      }
      base = mul( base, base );
      e >>= 1;
    }
    return result;
  }
};

using ModPoly = std::vector<std::uint64_t>;

void trim_mod( ModPoly& p )
{
  while ( !p.empty() && p.back() == 0 )
  {
    p.pop_back();
  }
}

long gcd_degree_mod( ModField const& f, ModPoly a, ModPoly b )
{
  trim_mod( a );
  trim_mod( b );
  while ( !b.empty() )
  {
    std::uint64_t const inv_lc = f.inv( b.back() );
    while ( a.size() >= b.size() )
    {
      std::uint64_t const factor = f.mul( a.back(), inv_lc );
      std::size_t const shift = a.size() - b.size();
      for ( std::size_t j = 0; j < b.size(); ++j )
      {
        a[shift + j] = f.sub( a[shift + j], f.mul( factor, b[j] ) );
      }
      trim_mod( a );
      if ( a.empty() )
      {
        break;
      }
    }
    std::swap( a, b );
  }
  return static_cast<long>( a.size() ) - 1;
}

// Degree of gcd(a, b) modulo a prime that keeps both degrees is an upper
// bound on the degree of the integer gcd; a result of 0 proves coprimality.
bool certainly_coprime( Polynomial const& a, Polynomial const& b )
{
  static constexpr std::array<std::uint64_t, 3> primes{ 2305843009213693951ull, 4611686018427387847ull,
                                                        1000000000000000003ull };
  for ( auto const q : primes )
  {
    ModField const f{ q };
    if ( f.reduce( a.leading() ) == 0 || f.reduce( b.leading() ) == 0 )
    {
      continue;
    }
    ModPoly am( a.coeffs().size() ), bm( b.coeffs().size() );
    for ( std::size_t i = 0; i < am.size(); ++i )
    {
      am[i] = f.reduce( a.coeffs()[i] );
    }
    for ( std::size_t i = 0; i < bm.size(); ++i )
    {
      bm[i] = f.reduce( b.coeffs()[i] );
    }
    return gcd_degree_mod( f, std::move( am ), std::move( bm ) ) == 0;
  }
  return false;
}

} // namespace

Polynomial gcd( Polynomial const& a, Polynomial const& b )
{
  if ( a.is_zero() )
  {
    return b.primitive_part();
  }
  if ( b.is_zero() )
  {
    return a.primitive_part();
  }
  if ( a.degree() == 0 || b.degree() == 0 )
  {
    return Polynomial{ 1 };
  }
  if ( certainly_coprime( a, b ) )
  {
    return Polynomial{ 1 };
  }
  // Primitive PRS.
  Polynomial x = a.primitive_part();
  Polynomial y = b.primitive_part();
  if ( x.degree() < y.degree() )
  {
    std::swap( x, y );
  }
  while ( !y.is_zero() )
  {
    Polynomial r = pseudo_remainder( x, y );
    x = std::move( y );
    y = r.primitive_part();
  }
  return x.primitive_part();
}

Polynomial square_free_part( Polynomial const& f )
{
  if ( f.degree() <= 0 )
  {
    return f.primitive_part();
  }
  Polynomial const g = gcd( f, f.derivative() );
  Polynomial const pf = f.primitive_part();
  if ( g.degree() == 0 )
  {
    return pf;
  }
  return exact_divide( pf, g ).primitive_part();
}

mpz_class binomial( std::size_t n, std::size_t k )
{
  mpz_class out;
  mpz_bin_uiui( out.get_mpz_t(), n, k );
  return out;
}

} // namespace mmnrel
