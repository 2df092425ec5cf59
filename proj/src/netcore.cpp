#include "mmnrel/netcore.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace mmnrel
{

BinaryMatrix::BinaryMatrix( std::size_t rows, std::size_t cols, std::uint8_t fill )
    : rows_( rows ), cols_( cols ), bits_( rows * cols, fill )
{
}

BinaryMatrix BinaryMatrix::from_rows( std::vector<std::vector<int>> const& rows )
{
  std::size_t const cols = rows.empty() ? 0 : rows.front().size();
  BinaryMatrix m( rows.size(), cols );
  for ( std::size_t i = 0; i < rows.size(); ++i )
  {
    if ( rows[i].size() != cols )
    {
      throw std::invalid_argument( "matchstick matrix has ragged rows" );
    }
    for ( std::size_t j = 0; j < cols; ++j )
    {
      int const v = rows[i][j];
      if ( v != 0 && v != 1 )
      {
        throw std::invalid_argument( "matchstick matrix entries must be 0 or 1" );
      }
      m.bits_[i * cols + j] = static_cast<std::uint8_t>( v );
    }
  }
  return m;
}

std::vector<std::vector<int>> BinaryMatrix::to_rows() const
{
  std::vector<std::vector<int>> out( rows_, std::vector<int>( cols_ ) );
  for ( std::size_t i = 0; i < rows_; ++i )
  {
    for ( std::size_t j = 0; j < cols_; ++j )
    {
      out[i][j] = bits_[i * cols_ + j];
    }
  }
  return out;
}

BinaryMatrix BinaryMatrix::complement() const
{
  BinaryMatrix out = *this;
  for ( auto& b : out.bits_ )
  {
    b ^= 1u;
  }
  return out;
}

BinaryMatrix BinaryMatrix::transpose() const
{
  BinaryMatrix out( cols_, rows_ );
  for ( std::size_t i = 0; i < rows_; ++i )
  {
    for ( std::size_t j = 0; j < cols_; ++j )
    {
      out.bits_[j * rows_ + i] = bits_[i * cols_ + j];
    }
  }
  return out;
}

Mmn::Mmn( std::size_t width, std::size_t length ) : width_( width ), length_( length )
{
  if ( width == 0 || length == 0 )
  {
    throw std::invalid_argument( "MMN width and length must be positive" );
  }
  if ( has_matrix() )
  {
    matchsticks_ = BinaryMatrix( width - 1, length - 1 );
  }
}

Mmn::Mmn( std::size_t width, std::size_t length, BinaryMatrix matchsticks ) : Mmn( width, length )
{
  if ( !has_matrix() )
  {
    throw std::invalid_argument( "all-series and all-parallel networks carry no matchstick matrix" );
  }
  if ( matchsticks.rows() != width - 1 || matchsticks.cols() != length - 1 )
  {
    throw std::invalid_argument( "matchstick matrix must be (w-1)x(l-1)" );
  }
  matchsticks_ = std::move( matchsticks );
}

CompositionWord::CompositionWord( std::size_t m, std::uint64_t mask ) : m_( m ), mask_( mask )
{
  if ( m > max_length )
  {
    throw std::invalid_argument( "composition word too long" );
  }
  if ( m < 64 && ( mask >> m ) != 0 )
  {
    throw std::invalid_argument( "composition word mask has bits beyond its length" );
  }
}

CompositionWord CompositionWord::parse( std::string_view text )
{
  if ( text.size() > max_length )
  {
    throw std::invalid_argument( "composition word too long" );
  }
  std::uint64_t mask = 0;
  for ( std::size_t i = 0; i < text.size(); ++i )
  {
    char const c = text[i];
    if ( c == '1' )
    {
      mask |= std::uint64_t{ 1 } << i;
    }
    else if ( c != '0' )
    {
      throw std::invalid_argument( "composition word must contain only '0' and '1': '" + std::string( text ) + "'" );
    }
  }
  return CompositionWord( text.size(), mask );
}

CompositionWord CompositionWord::from_support( std::size_t m, std::vector<std::size_t> const& support )
{
  std::uint64_t mask = 0;
  for ( auto const s : support )
  {
    if ( s < 1 || s > m )
    {
      throw std::invalid_argument( "support index out of range" );
    }
    mask |= std::uint64_t{ 1 } << ( s - 1 );
  }
  return CompositionWord( m, mask );
}

std::vector<std::size_t> CompositionWord::support() const
{
  std::vector<std::size_t> out;
  for ( std::size_t i = 1; i <= m_; ++i )
  {
    if ( bit( i ) )
    {
      out.push_back( i );
    }
  }
  return out;
}

std::size_t CompositionWord::weight() const noexcept
{
  return static_cast<std::size_t>( std::popcount( mask_ ) );
}

std::size_t CompositionWord::rank() const noexcept
{
  std::size_t r = 0;
  for ( auto m = mask_; m != 0; m &= m - 1 )
  {
    r += static_cast<std::size_t>( std::countr_zero( m ) ) + 1;
  }
  return r;
}

CompositionWord CompositionWord::complement() const noexcept
{
  std::uint64_t const all = m_ == 64 ? ~std::uint64_t{ 0 } : ( std::uint64_t{ 1 } << m_ ) - 1;
  return CompositionWord( m_, ~mask_ & all );
}

std::string CompositionWord::to_string() const
{
  std::string s( m_, '0' );
  for ( std::size_t i = 1; i <= m_; ++i )
  {
    if ( bit( i ) )
    {
      s[i - 1] = '1';
    }
  }
  return s;
}

std::vector<std::vector<std::size_t>> GraphRealization::adjacency() const
{
  std::vector<std::vector<std::size_t>> adj( node_count );
  for ( std::size_t e = 0; e < edges.size(); ++e )
  {
    adj[edges[e].a].push_back( e );
    adj[edges[e].b].push_back( e );
  }
  return adj;
}

bool GraphRealization::connects( std::uint64_t working ) const
{
  // Flood fill over the working devices; graphs here are tiny.
  std::vector<std::size_t> parent( node_count );
  std::iota( parent.begin(), parent.end(), std::size_t{ 0 } );
  auto find = [&]( std::size_t x ) {
    while ( parent[x] != x )
    {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for ( auto const& e : edges )
  {
    if ( ( working >> ( e.device - 1 ) ) & 1u )
    {
      parent[find( e.a )] = find( e.b );
    }
  }
  return find( source ) == find( terminus );
}

Mmn mmn_from_matrix( std::size_t w, std::size_t l, std::optional<BinaryMatrix> const& matchsticks )
{
  if ( w == 0 || l == 0 )
  {
    throw std::invalid_argument( "MMN width and length must be positive" );
  }
  if ( w == 1 || l == 1 )
  {
    if ( matchsticks )
    {
      throw std::invalid_argument( "matrix provided for an all-series or all-parallel network" );
    }
    return Mmn( w, l );
  }
  if ( !matchsticks )
  {
    throw std::invalid_argument( "matchstick matrix required when w >= 2 and l >= 2" );
  }
  return Mmn( w, l, *matchsticks );
}

Mmn pos( std::size_t w, std::size_t l )
{
  return Mmn( w, l );
}

Mmn sop( std::size_t w, std::size_t l )
{
  Mmn const base( w, l );
  if ( !base.has_matrix() )
  {
    return base;
  }
  return Mmn( w, l, BinaryMatrix( w - 1, l - 1, 1 ) );
}

Mmn hammock( std::size_t w, std::size_t l, HammockVariant variant )
{
  if ( variant == HammockVariant::h_plus && ( w % 2 != 0 || l % 2 != 0 ) )
  {
    throw std::invalid_argument( "the H+ hammock needs even width and length" );
  }
  Mmn const base( w, l );
  if ( !base.has_matrix() )
  {
    return base;
  }
  // Brick wall: H puts matchsticks where i+j is odd, H+ where it is even.
  std::size_t const parity = variant == HammockVariant::h ? 1 : 0;
  BinaryMatrix m( w - 1, l - 1 );
  for ( std::size_t i = 1; i <= w - 1; ++i )
  {
    for ( std::size_t j = 1; j <= l - 1; ++j )
    {
      m.set( i, j, ( i + j ) % 2 == parity ? 1 : 0 );
    }
  }
  return Mmn( w, l, std::move( m ) );
}

Mmn compose( Mmn const& outer, Mmn const& inner )
{
  std::size_t const w1 = outer.width(), l1 = outer.length();
  std::size_t const w2 = inner.width(), l2 = inner.length();
  Mmn const shape( w1 * w2, l1 * l2 );
  if ( !shape.has_matrix() )
  {
    return shape;
  }

  // Rows come in w1 groups of (w2-1) inner rows, separated by one row per
  // boundary of the outer network; columns likewise with junction columns
  // between consecutive copies along an outer row.
  //   inner row, inner column    -> inner matrix
  //   inner row, junction column -> 1 (copies in series share the junction node)
  //   separator row, inner col   -> 0
  //   separator row, junction    -> outer matrix entry
  std::size_t const rows = w1 * w2 - 1;
  std::size_t const cols = l1 * l2 - 1;
  BinaryMatrix m( rows, cols );
  for ( std::size_t r = 1; r <= rows; ++r )
  {
    bool const separator = r % w2 == 0;
    for ( std::size_t c = 1; c <= cols; ++c )
    {
      bool const junction = c % l2 == 0;
      std::uint8_t v = 0;
      if ( !separator && !junction )
      {
        v = inner.matchsticks().at( r % w2, c % l2 );
      }
      else if ( !separator )
      {
        v = 1;
      }
      else if ( junction )
      {
        v = outer.matchsticks().at( r / w2, c / l2 );
      }
      m.set( r, c, v );
    }
  }
  return Mmn( shape.width(), shape.length(), std::move( m ) );
}

namespace
{

Mmn two_in_series()
{
  return Mmn( 1, 2 );
}

Mmn two_in_parallel()
{
  return Mmn( 2, 1 );
}

} // namespace

Mmn mmn_from_word( CompositionWord const& u )
{
  Mmn result( 1, 1 );
  for ( std::size_t i = 1; i <= u.length(); ++i )
  {
    result = compose( result, u.bit( i ) ? two_in_parallel() : two_in_series() );
  }
  return result;
}

Mmn dual( Mmn const& n )
{
  if ( !n.has_matrix() )
  {
    return Mmn( n.length(), n.width() );
  }
  return Mmn( n.length(), n.width(), n.matchsticks().complement().transpose() );
}

CompositionWord dual_word( CompositionWord const& u )
{
  return u.complement();
}

mpz_class count_mmns( std::size_t w, std::size_t l )
{
  if ( w == 0 || l == 0 )
  {
    throw std::invalid_argument( "MMN width and length must be positive" );
  }
  mpz_class out;
  mpz_ui_pow_ui( out.get_mpz_t(), 2, ( w - 1 ) * ( l - 1 ) );
  return out;
}

mpz_class count_mmns_of_size( std::size_t n )
{
  if ( n == 0 )
  {
    throw std::invalid_argument( "network size must be positive" );
  }
  mpz_class total = 0;
  for ( std::size_t w = 1; w <= n; ++w )
  {
    if ( n % w == 0 )
    {
      total += count_mmns( w, n / w );
    }
  }
  return total;
}

MmnEnumeration::MmnEnumeration( std::size_t w, std::size_t l, Caps const& caps ) : w_( w ), l_( l )
{
  if ( w == 0 || l == 0 )
  {
    throw std::invalid_argument( "MMN width and length must be positive" );
  }
  std::size_t const bits = ( w - 1 ) * ( l - 1 );
  check_cap( "enumerate_bits", bits, std::min<std::size_t>( caps.enumerate_bits, 62 ) );
  count_ = std::uint64_t{ 1 } << bits;
}

Mmn MmnEnumeration::at( std::uint64_t index ) const
{
  if ( w_ == 1 || l_ == 1 )
  {
    return Mmn( w_, l_ );
  }
  std::size_t const bits = ( w_ - 1 ) * ( l_ - 1 );
  BinaryMatrix m( w_ - 1, l_ - 1 );
  for ( std::size_t k = 0; k < bits; ++k )
  {
    // Entry k (row-major) is bit (bits-1-k) of the index.
    std::uint8_t const v = ( index >> ( bits - 1 - k ) ) & 1u;
    m.set( k / ( l_ - 1 ) + 1, k % ( l_ - 1 ) + 1, v );
  }
  return Mmn( w_, l_, std::move( m ) );
}

std::vector<Mmn> all_mmns_of_size( std::size_t n, Caps const& caps )
{
  std::vector<Mmn> out;
  for ( std::size_t w = 1; w <= n; ++w )
  {
    if ( n % w != 0 )
    {
      continue;
    }
    for ( auto const& net : enumerate_mmns( w, n / w, caps ) )
    {
      out.push_back( net );
    }
  }
  return out;
}

GraphRealization graph_realization( Mmn const& n )
{
  std::size_t const w = n.width(), l = n.length();
  // Skeleton node V(i,j): row i in [0,w), column j in [0,l].
  auto id = [l]( std::size_t i, std::size_t j ) { return i * ( l + 1 ) + j; };
  std::size_t const raw = w * ( l + 1 );
  std::vector<std::size_t> parent( raw );
  std::iota( parent.begin(), parent.end(), std::size_t{ 0 } );
  auto find = [&]( std::size_t x ) {
    while ( parent[x] != x )
    {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&]( std::size_t a, std::size_t b ) { parent[find( a )] = find( b ); };

  for ( std::size_t i = 1; i < w; ++i )
  {
    unite( id( i, 0 ), id( 0, 0 ) );
    unite( id( i, l ), id( 0, l ) );
  }
  if ( n.has_matrix() )
  {
    for ( std::size_t i = 1; i < w; ++i )
    {
      for ( std::size_t j = 1; j < l; ++j )
      {
        if ( n.matchstick( i, j ) )
        {
          unite( id( i - 1, j ), id( i, j ) );
        }
      }
    }
  }

  // Compact labels: S = 0, T = 1, remaining classes in skeleton order.
  GraphRealization g;
  std::vector<std::size_t> label( raw, raw );
  label[find( id( 0, 0 ) )] = 0;
  label[find( id( 0, l ) )] = 1;
  std::size_t next = 2;
  for ( std::size_t v = 0; v < raw; ++v )
  {
    auto const r = find( v );
    if ( label[r] == raw )
    {
      label[r] = next++;
    }
  }
  g.node_count = next;
  g.source = 0;
  g.terminus = 1;
  g.edges.reserve( w * l );
  for ( std::size_t i = 0; i < w; ++i )
  {
    for ( std::size_t j = 1; j <= l; ++j )
    {
      g.edges.push_back( { label[find( id( i, j - 1 ) )], label[find( id( i, j ) )], i * l + j } );
    }
  }
  return g;
}

bool leq_M( Mmn const& a, Mmn const& b )
{
  if ( a.width() != b.width() || a.length() != b.length() )
  {
    throw std::invalid_argument( "leq_M needs networks of identical width and length" );
  }
  if ( !a.has_matrix() )
  {
    throw std::invalid_argument( "leq_M needs w >= 2 and l >= 2" );
  }
  auto const& x = a.matchsticks().raw();
  auto const& y = b.matchsticks().raw();
  for ( std::size_t k = 0; k < x.size(); ++k )
  {
    if ( x[k] > y[k] )
    {
      return false;
    }
  }
  return true;
}

} // namespace mmnrel
