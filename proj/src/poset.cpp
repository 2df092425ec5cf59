#include "mmnrel/poset.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mmnrel
{

namespace
{

void require_same_length( CompositionWord const& u, CompositionWord const& v )
{
  if ( u.length() != v.length() )
  {
    throw std::invalid_argument( "composition words of different lengths" );
  }
}

// Support positions (0-based) in decreasing order; returns the count.
std::size_t descending_support( std::uint64_t mask, std::array<std::uint8_t, 64>& out )
{
  std::size_t k = 0;
  while ( mask != 0 )
  {
    int const top = 63 - std::countl_zero( mask );
    out[k++] = static_cast<std::uint8_t>( top );
    mask &= ~( std::uint64_t{ 1 } << top );
  }
  return k;
}

std::size_t total_rank( std::size_t m )
{
  return m * ( m + 1 ) / 2;
}

// Coefficients of prod_{i=1..m} (1 + q^i).
std::vector<std::uint64_t> subset_sum_counts( std::size_t m )
{
  std::vector<std::uint64_t> c( total_rank( m ) + 1, 0 );
  c[0] = 1;
  std::size_t reach = 0;
  for ( std::size_t i = 1; i <= m; ++i )
  {
    reach += i;
    for ( std::size_t s = reach; s >= i; --s )
    {
      c[s] += c[s - i];
    }
  }
  return c;
}

std::vector<ReliabilityPolynomial> all_composition_polys( std::size_t m, Caps const& caps )
{
  std::vector<ReliabilityPolynomial> polys;
  polys.reserve( std::size_t{ 1 } << m );
  for ( std::uint64_t mask = 0; mask < ( std::uint64_t{ 1 } << m ); ++mask )
  {
    polys.push_back( compose_rel( CompositionWord( m, mask ), caps ) );
  }
  return polys;
}

CompositionWord constant_word( std::size_t m, bool ones )
{
  return CompositionWord( m, ones ? ( std::uint64_t{ 1 } << m ) - 1 : 0 );
}

bool at_most( Verdict v )
{
  return v == Verdict::le || v == Verdict::eq;
}

} // namespace

bool leq_S( CompositionWord const& u, CompositionWord const& v )
{
  require_same_length( u, v );
  return ( u.mask() & ~v.mask() ) == 0;
}

bool leq_H( CompositionWord const& u, CompositionWord const& v )
{
  require_same_length( u, v );
  if ( u.weight() != v.weight() )
  {
    throw std::invalid_argument( "leq_H needs words of equal Hamming weight" );
  }
  auto const s = u.support();
  auto const t = v.support();
  for ( std::size_t i = 0; i < s.size(); ++i )
  {
    if ( s[i] > t[i] )
    {
      return false;
    }
  }
  return true;
}

bool leq_SH( CompositionWord const& u, CompositionWord const& v )
{
  require_same_length( u, v );
  std::array<std::uint8_t, 64> a{}, b{};
  std::size_t const ka = descending_support( u.mask(), a );
  std::size_t const kb = descending_support( v.mask(), b );
  if ( ka > kb )
  {
    return false;
  }
  for ( std::size_t i = 0; i < ka; ++i )
  {
    if ( a[i] > b[i] )
    {
      return false;
    }
  }
  return true;
}

std::size_t rank( CompositionWord const& u )
{
  return u.rank();
}

char const* to_string( PosetOrder order )
{
  return order == PosetOrder::sh ? "sh" : "pointwise";
}

Relation::Relation( std::size_t n ) : n_( n ), words_( ( n + 63 ) / 64 ), rows_( n * words_, 0 ) {}

std::vector<std::pair<std::size_t, std::size_t>> hasse_covers( Relation const& leq )
{
  std::size_t const n = leq.size();
  std::size_t const words = ( n + 63 ) / 64;
  auto strict = [&]( std::size_t i, std::size_t j ) { return leq.test( i, j ) && !leq.test( j, i ); };

  // Strict down-set sizes give a linear extension.
  std::vector<std::size_t> below( n, 0 );
  for ( std::size_t i = 0; i < n; ++i )
  {
    for ( std::size_t j = 0; j < n; ++j )
    {
      if ( strict( j, i ) )
      {
        ++below[i];
      }
    }
  }
  std::vector<std::size_t> order( n );
  std::iota( order.begin(), order.end(), std::size_t{ 0 } );
  std::stable_sort( order.begin(), order.end(), [&]( std::size_t a, std::size_t b ) { return below[a] < below[b]; } );

  std::vector<std::pair<std::size_t, std::size_t>> covers;
  std::vector<std::uint64_t> dominated( words );
  for ( std::size_t i = 0; i < n; ++i )
  {
    std::fill( dominated.begin(), dominated.end(), 0 );
    for ( std::size_t const j : order )
    {
      if ( !strict( i, j ) || ( ( dominated[j / 64] >> ( j % 64 ) ) & 1u ) )
      {
        continue;
      }
      covers.emplace_back( i, j );
      for ( std::size_t k = 0; k < n; ++k )
      {
        if ( leq.test( j, k ) )
        {
          dominated[k / 64] |= std::uint64_t{ 1 } << ( k % 64 );
        }
      }
    }
  }
  std::sort( covers.begin(), covers.end() );
  return covers;
}

bool covers_generate_relation( Relation const& leq, std::vector<std::pair<std::size_t, std::size_t>> const& covers )
{
  std::size_t const n = leq.size();
  std::vector<std::vector<std::size_t>> up( n );
  for ( auto const& [a, b] : covers )
  {
    up[a].push_back( b );
  }
  for ( std::size_t i = 0; i < n; ++i )
  {
    std::vector<char> seen( n, 0 );
    std::vector<std::size_t> stack{ i };
    seen[i] = 1;
    while ( !stack.empty() )
    {
      auto const x = stack.back();
      stack.pop_back();
      for ( auto const y : up[x] )
      {
        if ( !seen[y] )
        {
          seen[y] = 1;
          stack.push_back( y );
        }
      }
    }
    for ( std::size_t j = 0; j < n; ++j )
    {
      bool const strictly_above = leq.test( i, j ) && !leq.test( j, i );
      bool const reached = seen[j] && j != i;
      if ( strictly_above != reached )
      {
        return false;
      }
    }
  }
  return true;
}

Poset build_poset( std::size_t m, PosetOrder order, Caps const& caps )
{
  check_cap( order == PosetOrder::sh ? "sh_poset_m" : "pointwise_m", m,
             order == PosetOrder::sh ? caps.sh_poset_m : caps.pointwise_m );
  Poset poset;
  poset.order = order;
  poset.m = m;
  std::size_t const n = std::size_t{ 1 } << m;
  for ( std::uint64_t mask = 0; mask < n; ++mask )
  {
    poset.elements.emplace_back( m, mask );
  }
  poset.leq = Relation( n );

  if ( order == PosetOrder::sh )
  {
    for ( std::size_t i = 0; i < n; ++i )
    {
      for ( std::size_t j = 0; j < n; ++j )
      {
        if ( leq_SH( poset.elements[i], poset.elements[j] ) )
        {
          poset.leq.set( i, j );
        }
      }
    }
    poset.rank_classes.resize( total_rank( m ) + 1 );
    for ( std::size_t i = 0; i < n; ++i )
    {
      poset.rank_classes[poset.elements[i].rank()].push_back( i );
    }
  }
  else
  {
    auto const polys = all_composition_polys( m, caps );
    std::vector<std::size_t> cls( n );
    std::iota( cls.begin(), cls.end(), std::size_t{ 0 } );
    for ( std::size_t i = 0; i < n; ++i )
    {
      poset.leq.set( i, i );
      for ( std::size_t j = i + 1; j < n; ++j )
      {
        switch ( compare_on_unit_interval( polys[i], polys[j] ).verdict )
        {
        case Verdict::le:
          poset.leq.set( i, j );
          break;
        case Verdict::ge:
          poset.leq.set( j, i );
          break;
        case Verdict::eq:
          poset.leq.set( i, j );
          poset.leq.set( j, i );
          cls[j] = std::min( cls[j], cls[i] );
          break;
        case Verdict::incomparable:
          poset.incomparable.emplace_back( i, j );
          break;
        }
      }
    }
    std::vector<std::vector<std::size_t>> groups( n );
    for ( std::size_t i = 0; i < n; ++i )
    {
      groups[cls[i]].push_back( i );
    }
    for ( auto& g : groups )
    {
      if ( g.size() >= 2 )
      {
        poset.equivalence_classes.push_back( std::move( g ) );
      }
    }
  }
  poset.covers = hasse_covers( poset.leq );
  return poset;
}

std::vector<std::pair<CompositionWord, CompositionWord>> incomparable_pairs( std::size_t m, Caps const& caps )
{
  auto const poset = build_poset( m, PosetOrder::pointwise, caps );
  std::vector<std::pair<CompositionWord, CompositionWord>> out;
  for ( auto const& [i, j] : poset.incomparable )
  {
    out.emplace_back( poset.elements[i], poset.elements[j] );
  }
  return out;
}

std::vector<std::uint64_t> max_chain_integers( std::size_t m )
{
  if ( m == 0 || m > CompositionWord::max_length )
  {
    throw std::invalid_argument( "max_chain needs 1 <= m <= 63" );
  }
  std::vector<std::uint64_t> out;
  std::uint64_t k = 0;
  for ( std::size_t j = 1; j <= m; ++j )
  {
    for ( std::size_t i = 0; i <= m - j; ++i )
    {
      out.push_back( k + ( std::uint64_t{ 1 } << i ) );
    }
    k += std::uint64_t{ 1 } << ( m - j );
  }
  return out;
}

std::vector<CompositionWord> max_chain( std::size_t m )
{
  std::vector<CompositionWord> out;
  for ( auto const x : max_chain_integers( m ) )
  {
    out.emplace_back( m, x );
  }
  return out;
}

std::vector<std::size_t> middle_rank_indices( std::size_t m )
{
  std::size_t const r = total_rank( m );
  if ( r % 2 == 0 )
  {
    return { r / 2 };
  }
  return { r / 2, r / 2 + 1 };
}

CompositionWord middle_element( std::size_t m )
{
  if ( m > CompositionWord::max_length )
  {
    throw std::invalid_argument( "word too long" );
  }
  auto const middles = middle_rank_indices( m );
  auto is_middle = [&]( std::size_t r ) { return std::find( middles.begin(), middles.end(), r ) != middles.end(); };
  if ( m < 4 )
  {
    for ( std::uint64_t mask = 0; mask < ( std::uint64_t{ 1 } << m ); ++mask )
    {
      CompositionWord const u( m, mask );
      if ( is_middle( u.rank() ) && is_middle( u.complement().rank() ) )
      {
        return u;
      }
    }
    throw std::logic_error( "no middle element found" );
  }
  std::size_t const k = m / 4;
  std::string s;
  switch ( m % 4 )
  {
  case 0:
    s = std::string( k, '0' ) + std::string( 2 * k, '1' ) + std::string( k, '0' );
    break;
  case 1:
    s = std::string( k + 1, '0' ) + std::string( 2 * k, '1' ) + std::string( k, '0' );
    break;
  case 2:
    s = std::string( k, '0' ) + std::string( 2 * k, '1' ) + std::string( k + 1, '0' ) + "1";
    break;
  default:
    s = std::string( k, '0' ) + std::string( 2 * k + 2, '1' ) + std::string( k + 1, '0' );
    break;
  }
  return CompositionWord::parse( s );
}

std::vector<CompositionWord> antichain_at_rank( std::size_t m, std::size_t rho )
{
  if ( m > CompositionWord::max_length )
  {
    throw std::invalid_argument( "word too long" );
  }
  if ( rho > total_rank( m ) )
  {
    throw std::invalid_argument( "rank out of range" );
  }
  std::vector<std::uint64_t> masks;
  // Choose elements from m down to 1; prune when the remaining ones cannot reach rho.
  struct Frame
  {
    std::size_t next;
    std::size_t remaining;
    std::uint64_t mask;
  };
  std::vector<Frame> stack{ { m, rho, 0 } };
  while ( !stack.empty() )
  {
    auto const f = stack.back();
    stack.pop_back();
    if ( f.remaining == 0 )
    {
      masks.push_back( f.mask );
      continue;
    }
    if ( f.next == 0 || total_rank( f.next ) < f.remaining )
    {
      continue;
    }
    stack.push_back( { f.next - 1, f.remaining, f.mask } );
    if ( f.next <= f.remaining )
    {
      stack.push_back( { f.next - 1, f.remaining - f.next, f.mask | ( std::uint64_t{ 1 } << ( f.next - 1 ) ) } );
    }
  }
  std::sort( masks.begin(), masks.end() );
  std::vector<CompositionWord> out;
  out.reserve( masks.size() );
  for ( auto const mask : masks )
  {
    out.emplace_back( m, mask );
  }
  return out;
}

bool is_symmetric( std::vector<std::uint64_t> const& profile )
{
  return std::equal( profile.begin(), profile.end(), profile.rbegin() );
}

bool is_unimodal( std::vector<std::uint64_t> const& profile )
{
  std::size_t i = 1;
  while ( i < profile.size() && profile[i] >= profile[i - 1] )
  {
    ++i;
  }
  while ( i < profile.size() && profile[i] <= profile[i - 1] )
  {
    ++i;
  }
  return i >= profile.size();
}

std::vector<std::uint64_t> rank_profile( std::size_t m, Caps const& caps )
{
  check_cap( "rank_profile_m", m, caps.rank_profile_m );
  auto profile = subset_sum_counts( m );
  if ( !is_symmetric( profile ) || !is_unimodal( profile ) )
  {
    throw std::logic_error( "rank profile is not symmetric and unimodal for m = " + std::to_string( m ) );
  }
  return profile;
}

std::uint64_t dilworth_number( std::size_t m, Caps const& caps )
{
  auto const profile = rank_profile( m, caps );
  return *std::max_element( profile.begin(), profile.end() );
}

SquareMiddleStats square_middle_stats( std::size_t m, Caps const& caps )
{
  if ( m % 2 != 0 )
  {
    throw std::invalid_argument( "square compositions need an even m" );
  }
  auto const profile = rank_profile( m, caps );
  SquareMiddleStats stats;
  stats.m = m;
  stats.total_compositions = std::uint64_t{ 1 } << m;
  stats.square_compositions = binomial( m, m / 2 ).get_ui();
  stats.middle_ranks = middle_rank_indices( m );

  // by_size[k][s]: subsets of {1..m} with k elements summing to s.
  std::size_t const r = total_rank( m );
  std::vector<std::vector<std::uint64_t>> by_size( m / 2 + 1, std::vector<std::uint64_t>( r + 1, 0 ) );
  by_size[0][0] = 1;
  for ( std::size_t i = 1; i <= m; ++i )
  {
    for ( std::size_t k = std::min( i, m / 2 ); k >= 1; --k )
    {
      for ( std::size_t s = r; s >= i; --s )
      {
        by_size[k][s] += by_size[k - 1][s - i];
      }
    }
  }
  std::uint64_t square_middle_total = 0;
  for ( auto const rho : stats.middle_ranks )
  {
    stats.middle_counts.push_back( profile[rho] );
    stats.square_middle_counts.push_back( by_size[m / 2][rho] );
    square_middle_total += by_size[m / 2][rho];
  }
  stats.ratio = mpq_class( mpz_class( static_cast<unsigned long>( square_middle_total ) ),
                           mpz_class( static_cast<unsigned long>( stats.square_compositions ) ) );
  stats.ratio.canonicalize();
  return stats;
}

AsymptoticRatio asymptotic_middle_ratio( std::size_t m, Caps const& caps )
{
  check_cap( "asymptotic_m", m, caps.asymptotic_m );
  if ( m == 0 )
  {
    throw std::invalid_argument( "asymptotic ratio needs m >= 1" );
  }
  auto const counts = subset_sum_counts( m );
  AsymptoticRatio out;
  out.m = m;
  out.middle_count = counts[middle_rank_indices( m ).front()];
  long double const mm = static_cast<long double>( m );
  out.value = static_cast<long double>( out.middle_count ) * mm * std::sqrt( mm ) / std::ldexp( 1.0L, static_cast<int>( m ) );
  return out;
}

long double asymptotic_limit()
{
  return std::sqrt( 6.0L / std::acos( -1.0L ) );
}

Report verify_sh_implies_pointwise( std::size_t m, Caps const& caps )
{
  check_cap( "pointwise_m", m, caps.pointwise_m );
  Report report;
  report.name = "sh-implies-pointwise m=" + std::to_string( m );
  auto const polys = all_composition_polys( m, caps );
  std::size_t const n = polys.size();
  std::size_t refinements = 0;
  for ( std::size_t i = 0; i < n; ++i )
  {
    CompositionWord const u( m, i );
    for ( std::size_t j = i + 1; j < n; ++j )
    {
      CompositionWord const v( m, j );
      bool const uv = leq_SH( u, v );
      bool const vu = leq_SH( v, u );
      Verdict const verdict = compare_on_unit_interval( polys[i], polys[j] ).verdict;
      if ( uv || vu )
      {
        ++report.checked;
        Verdict const expected = uv ? Verdict::le : Verdict::ge;
        if ( verdict != expected )
        {
          report.violations.push_back( u.to_string() + " vs " + v.to_string() + ": SH-comparable but pointwise " +
                                       to_string( verdict ) );
        }
      }
      else if ( verdict != Verdict::incomparable )
      {
        ++refinements;
      }
    }
  }
  report.notes.push_back( std::to_string( refinements ) +
                          " SH-incomparable pairs are pointwise comparable" );
  return report;
}

Report verify_umr( std::size_t m, Caps const& caps )
{
  check_cap( "pointwise_m", m, caps.pointwise_m );
  Report report;
  report.name = "umr m=" + std::to_string( m );
  auto const top_word = constant_word( m, true );
  auto const top = compose_rel( top_word, caps );
  for ( std::uint64_t mask = 0; mask < ( std::uint64_t{ 1 } << m ); ++mask )
  {
    CompositionWord const u( m, mask );
    auto const verdict = compare_on_unit_interval( compose_rel( u, caps ), top ).verdict;
    ++report.checked;
    if ( !at_most( verdict ) )
    {
      report.violations.push_back( "composition " + u.to_string() + " is not below " + top_word.to_string() + " (" +
                                   to_string( verdict ) + ")" );
    }
  }
  std::size_t const n = std::size_t{ 1 } << m;
  if ( n <= caps.brute_force_n )
  {
    std::size_t nets = 0;
    for ( auto const& net : all_mmns_of_size( n, caps ) )
    {
      auto const rel = nform_to_standard( brute_force_rel( net, caps ) );
      auto const verdict = compare_on_unit_interval( rel, top ).verdict;
      ++report.checked;
      ++nets;
      if ( !at_most( verdict ) )
      {
        report.violations.push_back( "an MMN " + std::to_string( net.width() ) + "x" +
                                     std::to_string( net.length() ) + " is not below the all-parallel network" );
      }
    }
    report.notes.push_back( "compared against all " + std::to_string( nets ) + " MMNs of size " + std::to_string( n ) );
  }
  else
  {
    report.notes.push_back( "MMN sweep skipped: size " + std::to_string( n ) + " exceeds brute_force_n" );
  }
  return report;
}

Report verify_hmr_absent( std::size_t m, Caps const& caps )
{
  std::size_t const n = std::size_t{ 1 } << m;
  check_cap( "brute_force_n", n, caps.brute_force_n );
  Report report;
  report.name = "hmr-absent m=" + std::to_string( m );
  if ( m == 0 )
  {
    report.notes.push_back( "m = 0: the single device is trivially both extremes" );
    return report;
  }
  auto const series = compose_rel( constant_word( m, false ), caps );
  auto const parallel = compose_rel( constant_word( m, true ), caps );
  std::size_t others = 0;
  for ( auto const& net : all_mmns_of_size( n, caps ) )
  {
    auto const rel = nform_to_standard( brute_force_rel( net, caps ) );
    std::string const label = std::to_string( net.width() ) + "x" + std::to_string( net.length() );
    if ( !net.is_all_series() )
    {
      auto const c = compare_on_unit_interval( series, rel );
      ++report.checked;
      if ( c.verdict != Verdict::le || !c.strict() )
      {
        report.violations.push_back( "all-series is not strictly below MMN " + label );
      }
    }
    if ( !net.is_all_parallel() )
    {
      auto const c = compare_on_unit_interval( rel, parallel );
      ++report.checked;
      if ( c.verdict != Verdict::le || !c.strict() )
      {
        report.violations.push_back( "all-parallel is not strictly above MMN " + label );
      }
    }
    ++others;
  }
  // With strict extremes, the lower Heaviside condition pins the candidate to
  // the all-series network and the upper one to the all-parallel network.
  if ( report.passed() )
  {
    report.notes.push_back( "no HMR-MMN among " + std::to_string( others ) + " MMNs of size " + std::to_string( n ) +
                            ": the two Heaviside conditions single out different networks" );
  }
  return report;
}

Report verify_hammock_bounds( std::size_t m, Caps const& caps )
{
  if ( m % 2 != 0 || m == 0 )
  {
    throw std::invalid_argument( "hammock bounds are checked for even m >= 2" );
  }
  std::size_t const n = std::size_t{ 1 } << m;
  check_cap( "brute_force_n", n, caps.brute_force_n );
  Report report;
  report.name = "hammock-bounds m=" + std::to_string( m );
  auto word = []( std::string const& s ) { return CompositionWord::parse( s ); };
  for ( std::size_t i = 1; i + 1 <= m; ++i )
  {
    std::size_t const w = std::size_t{ 1 } << i, l = std::size_t{ 1 } << ( m - i );
    auto const ham = nform_to_standard( brute_force_rel( hammock( w, l ), caps ) );
    std::string const pos_word = std::string( i, '1' ) + std::string( m - i, '0' );
    std::string const sop_word = std::string( m - i, '0' ) + std::string( i, '1' );
    if ( !( mmn_from_word( word( pos_word ) ) == pos( w, l ) ) || !( mmn_from_word( word( sop_word ) ) == sop( w, l ) ) )
    {
      report.violations.push_back( "C^(" + pos_word + ") / C^(" + sop_word + ") are not the PoS / SoP of H_{" +
                                   std::to_string( w ) + "," + std::to_string( l ) + "}" );
    }
    ++report.checked;
    if ( !at_most( compare_on_unit_interval( compose_rel( word( pos_word ), caps ), ham ).verdict ) )
    {
      report.violations.push_back( "Rel(C^(" + pos_word + ")) <= Rel(H) fails for i=" + std::to_string( i ) );
    }
    ++report.checked;
    if ( !at_most( compare_on_unit_interval( ham, compose_rel( word( sop_word ), caps ) ).verdict ) )
    {
      report.violations.push_back( "Rel(H) <= Rel(C^(" + sop_word + ")) fails for i=" + std::to_string( i ) );
    }
    if ( m >= 3 && i >= 2 && i + 2 <= m )
    {
      std::string const tight = std::string( i - 1, '1' ) + std::string( m - i - 1, '0' ) + "10";
      ++report.checked;
      if ( !at_most( compare_on_unit_interval( compose_rel( word( tight ), caps ), ham ).verdict ) )
      {
        report.violations.push_back( "Rel(C^(" + tight + ")) <= Rel(H) fails for i=" + std::to_string( i ) );
      }
    }
  }
  return report;
}

} // namespace mmnrel
