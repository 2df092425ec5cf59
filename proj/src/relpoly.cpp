#include "mmnrel/relpoly.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace mmnrel
{

char const* to_string( Verdict v )
{
  switch ( v )
  {
  case Verdict::le:
    return "LE";
  case Verdict::ge:
    return "GE";
  case Verdict::eq:
    return "EQ";
  case Verdict::incomparable:
    return "INCOMPARABLE";
  }
  return "?";
}

ReliabilityPolynomial base_series()
{
  return { 2, Polynomial{ 0, 0, 1 } };
}

ReliabilityPolynomial base_parallel()
{
  return { 2, Polynomial{ 0, 2, -1 } };
}

ReliabilityPolynomial compose_rel( CompositionWord const& u, Caps const& caps )
{
  check_cap( "compose_m", u.length(), caps.compose_m );
  // Innermost factor first: q <- Rel(C^(u_i))(q) for i = m..1.
  Polynomial q = Polynomial::identity();
  for ( std::size_t i = u.length(); i >= 1; --i )
  {
    Polynomial sq = q * q;
    if ( u.bit( i ) )
    {
      q = q * mpz_class( 2 ) - sq;
    }
    else
    {
      q = std::move( sq );
    }
  }
  return { std::size_t{ 1 } << u.length(), std::move( q ) };
}

namespace
{

struct CompactGraph
{
  std::size_t nodes;
  std::size_t source;
  std::size_t terminus;
  std::vector<std::array<std::uint8_t, 2>> ends; // indexed by device - 1
};

void count_block( CompactGraph const& g, std::uint64_t begin, std::uint64_t end, std::vector<std::uint64_t>& counts )
{
  std::array<std::uint8_t, 128> parent{};
  std::size_t const n = g.ends.size();
  for ( std::uint64_t state = begin; state < end; ++state )
  {
    for ( std::size_t v = 0; v < g.nodes; ++v )
    {
      parent[v] = static_cast<std::uint8_t>( v );
    }
    auto find = [&]( std::uint8_t x ) {
      while ( parent[x] != x )
      {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    for ( std::size_t d = 0; d < n; ++d )
    {
      if ( ( state >> d ) & 1u )
      {
        parent[find( g.ends[d][0] )] = find( g.ends[d][1] );
      }
    }
    if ( find( static_cast<std::uint8_t>( g.source ) ) == find( static_cast<std::uint8_t>( g.terminus ) ) )
    {
      ++counts[static_cast<std::size_t>( std::popcount( state ) )];
    }
  }
}

} // namespace

NForm brute_force_rel( Mmn const& net, Caps const& caps )
{
  std::size_t const n = net.size();
  check_cap( "brute_force_n", n, std::min<std::size_t>( caps.brute_force_n, 40 ) );

  GraphRealization const g = graph_realization( net );
  CompactGraph cg{ g.node_count, g.source, g.terminus, std::vector<std::array<std::uint8_t, 2>>( n ) };
  for ( auto const& e : g.edges )
  {
    cg.ends[e.device - 1] = { static_cast<std::uint8_t>( e.a ), static_cast<std::uint8_t>( e.b ) };
  }

  std::uint64_t const states = std::uint64_t{ 1 } << n;
  std::size_t workers = std::max( 1u, std::thread::hardware_concurrency() );
  if ( states < ( std::uint64_t{ 1 } << 14 ) )
  {
    workers = 1;
  }
  std::vector<std::vector<std::uint64_t>> partial( workers, std::vector<std::uint64_t>( n + 1, 0 ) );
  if ( workers == 1 )
  {
    count_block( cg, 0, states, partial[0] );
  }
  else
  {
    std::vector<std::thread> pool;
    std::uint64_t const chunk = ( states + workers - 1 ) / workers;
    for ( std::size_t t = 0; t < workers; ++t )
    {
      std::uint64_t const b = std::min( states, t * chunk );
      std::uint64_t const e = std::min( states, b + chunk );
      pool.emplace_back( [&, b, e, t] { count_block( cg, b, e, partial[t] ); } );
    }
    for ( auto& th : pool )
    {
      th.join();
    }
  }

  NForm out{ n, std::vector<mpz_class>( n + 1 ) };
  for ( auto const& part : partial )
  {
    for ( std::size_t i = 0; i <= n; ++i )
    {
      out.counts[i] += mpz_class( static_cast<unsigned long>( part[i] ) );
    }
  }
  return out;
}

ReliabilityPolynomial nform_to_standard( NForm const& x )
{
  std::size_t const n = x.size;
  if ( x.counts.size() != n + 1 )
  {
    throw std::invalid_argument( "N-form needs size + 1 counts" );
  }
  // p^i (1-p)^(n-i) contributes N_i (-1)^t C(n-i, t) to the coefficient of p^(i+t).
  std::vector<mpz_class> c( n + 1 );
  for ( std::size_t i = 0; i <= n; ++i )
  {
    if ( x.counts[i] == 0 )
    {
      continue;
    }
    std::size_t const top = n - i;
    mpz_class b = 1;
    for ( std::size_t t = 0; t <= top; ++t )
    {
      if ( t % 2 == 0 )
      {
        mpz_addmul( c[i + t].get_mpz_t(), x.counts[i].get_mpz_t(), b.get_mpz_t() );
      }
      else
      {
        mpz_submul( c[i + t].get_mpz_t(), x.counts[i].get_mpz_t(), b.get_mpz_t() );
      }
      b *= static_cast<unsigned long>( top - t );
      mpz_divexact_ui( b.get_mpz_t(), b.get_mpz_t(), t + 1 );
    }
  }
  return { n, Polynomial( std::move( c ) ) };
}

NForm standard_to_nform( Polynomial const& f, std::size_t n )
{
  if ( f.degree() > static_cast<long>( n ) )
  {
    throw std::invalid_argument( "polynomial degree exceeds the declared network size" );
  }
  // With x = p/(1-p): f(p)/(1-p)^n = sum_j c_j x^j (1+x)^(n-j) = sum_i N_i x^i.
  NForm out{ n, std::vector<mpz_class>( n + 1 ) };
  for ( std::size_t j = 0; j < f.coeffs().size(); ++j )
  {
    mpz_class const& cj = f.coeffs()[j];
    if ( cj == 0 )
    {
      continue;
    }
    std::size_t const top = n - j;
    mpz_class b = 1;
    for ( std::size_t t = 0; t <= top; ++t )
    {
      mpz_addmul( out.counts[j + t].get_mpz_t(), cj.get_mpz_t(), b.get_mpz_t() );
      b *= static_cast<unsigned long>( top - t );
      mpz_divexact_ui( b.get_mpz_t(), b.get_mpz_t(), t + 1 );
    }
  }
  return out;
}

bool nform_dominates( NForm const& x, NForm const& y )
{
  if ( x.size != y.size || x.counts.size() != y.counts.size() )
  {
    throw std::invalid_argument( "N-forms of different sizes" );
  }
  for ( std::size_t i = 0; i < x.counts.size(); ++i )
  {
    if ( x.counts[i] > y.counts[i] )
    {
      return false;
    }
  }
  return true;
}

namespace
{

// (x+1)-shift in place: c(x) -> c(x+1).
void taylor_shift_one( std::vector<mpz_class>& c )
{
  std::size_t const n = c.size();
  for ( std::size_t i = 0; i + 1 < n; ++i )
  {
    for ( std::size_t j = n - 1; j > i; --j )
    {
      c[j - 1] += c[j];
    }
  }
}

// Sign variations of (x+1)^n q(1/(x+1)), an upper bound on (and equal in
// parity to) the number of roots of q in (0,1).
std::size_t descartes_bound( std::vector<mpz_class> const& q )
{
  std::vector<mpz_class> t( q.rbegin(), q.rend() );
  taylor_shift_one( t );
  std::size_t variations = 0;
  int last = 0;
  for ( auto const& c : t )
  {
    int const s = sgn( c );
    if ( s == 0 )
    {
      continue;
    }
    if ( last != 0 && s != last )
    {
      ++variations;
    }
    last = s;
  }
  return variations;
}

mpq_class dyadic( mpz_class const& num, std::size_t k )
{
  mpz_class den = 1;
  den <<= static_cast<mp_bitcnt_t>( k );
  mpq_class q( num, den );
  q.canonicalize();
  return q;
}

struct Isolated
{
  std::vector<mpq_class> points;
  std::vector<RationalInterval> open; // each holds one simple root; endpoints are not roots
};

// Collins-Akritas bisection on a square-free s with s(0), s(1) != 0. Returns
// false and the rational root in *hit when a bisection midpoint is a root.
bool bisect_roots( Polynomial const& s, Isolated& out, mpq_class* hit )
{
  struct Task
  {
    std::vector<mpz_class> q; // 2^(kn) s((x + c) / 2^k) on x in (0,1)
    mpz_class c;
    std::size_t k;
  };
  std::size_t const n = static_cast<std::size_t>( s.degree() );
  std::vector<Task> stack;
  stack.push_back( { s.coeffs(), 0, 0 } );
  while ( !stack.empty() )
  {
    Task task = std::move( stack.back() );
    stack.pop_back();
    std::size_t const v = descartes_bound( task.q );
    if ( v == 0 )
    {
      continue;
    }
    if ( v == 1 )
    {
      out.open.push_back( { dyadic( task.c, task.k ), dyadic( task.c + 1, task.k ) } );
      continue;
    }
    // Left half: 2^n q(x/2).
    std::vector<mpz_class> left( task.q.size() );
    for ( std::size_t i = 0; i <= n; ++i )
    {
      left[i] = task.q[i];
      left[i] <<= static_cast<mp_bitcnt_t>( n - i );
    }
    mpz_class at_mid = 0;
    for ( auto const& c : left )
    {
      at_mid += c;
    }
    if ( at_mid == 0 )
    {
      *hit = dyadic( 2 * task.c + 1, task.k + 1 );
      return false;
    }
    std::vector<mpz_class> right = left;
    taylor_shift_one( right );
    stack.push_back( { std::move( right ), 2 * task.c + 1, task.k + 1 } );
    stack.push_back( { std::move( left ), 2 * task.c, task.k + 1 } );
  }
  return true;
}

// Halve an open isolating interval of s; may land exactly on the root.
void refine( Polynomial const& s, RationalInterval& iv )
{
  mpq_class const mid = iv.midpoint();
  int const sm = s.sign_at( mid );
  if ( sm == 0 )
  {
    iv.lo = mid;
    iv.hi = mid;
    return;
  }
  if ( sm == s.sign_at( iv.lo ) )
  {
    iv.lo = mid;
  }
  else
  {
    iv.hi = mid;
  }
}

} // namespace

RootIsolation isolate_on_unit_interval( Polynomial const& f )
{
  if ( f.is_zero() )
  {
    throw std::invalid_argument( "cannot isolate the roots of the zero polynomial" );
  }
  Polynomial s = square_free_part( f.strip_root_at_zero().strip_root_at_one() );

  // Rational roots met at bisection midpoints are deflated and isolation restarts.
  Isolated iso;
  std::vector<mpq_class> points;
  while ( s.degree() >= 1 )
  {
    iso = Isolated{};
    mpq_class hit;
    if ( bisect_roots( s, iso, &hit ) )
    {
      break;
    }
    points.push_back( hit );
    s = exact_divide( s, Polynomial( std::vector<mpz_class>{ -hit.get_num(), hit.get_den() } ) ).primitive_part();
  }

  std::vector<RationalInterval> roots;
  for ( auto const& p : points )
  {
    roots.push_back( { p, p } );
  }
  for ( auto const& iv : iso.open )
  {
    roots.push_back( iv );
  }

  // Pull isolating intervals off the endpoints so the outer gaps have positive width.
  for ( auto& r : roots )
  {
    while ( !r.is_point() && ( r.lo == 0 || r.hi == 1 ) )
    {
      refine( s, r );
    }
  }

  // Separate the roots so every gap between neighbours has positive width.
  auto by_lo = []( RationalInterval const& a, RationalInterval const& b ) { return a.lo < b.lo; };
  for ( bool changed = true; changed; )
  {
    changed = false;
    std::sort( roots.begin(), roots.end(), by_lo );
    for ( std::size_t i = 0; i < roots.size(); ++i )
    {
      auto& r = roots[i];
      if ( r.is_point() )
      {
        continue;
      }
      for ( std::size_t j = 0; j < roots.size(); ++j )
      {
        if ( j == i || !roots[j].is_point() )
        {
          continue;
        }
        mpq_class const& pt = roots[j].lo;
        if ( pt > r.lo && pt < r.hi )
        {
          // s(pt) != 0 after deflation: keep the half with the sign change.
          if ( s.sign_at( pt ) == s.sign_at( r.lo ) )
          {
            r.lo = pt;
          }
          else
          {
            r.hi = pt;
          }
          changed = true;
        }
      }
    }
    std::sort( roots.begin(), roots.end(), by_lo );
    for ( std::size_t i = 0; i + 1 < roots.size(); ++i )
    {
      if ( roots[i].hi >= roots[i + 1].lo )
      {
        if ( !roots[i].is_point() )
        {
          refine( s, roots[i] );
        }
        if ( !roots[i + 1].is_point() )
        {
          refine( s, roots[i + 1] );
        }
        changed = true;
      }
    }
  }

  RootIsolation out;
  out.roots = roots;
  mpq_class a = 0;
  for ( std::size_t t = 0; t <= roots.size(); ++t )
  {
    mpq_class const b = t < roots.size() ? roots[t].lo : mpq_class( 1 );
    mpq_class lo = ( 3 * a + b ) / 4;
    mpq_class hi = ( a + 3 * b ) / 4;
    lo.canonicalize();
    hi.canonicalize();
    RationalInterval region{ lo, hi };
    out.region_signs.push_back( f.sign_at( region.midpoint() ) );
    out.regions.push_back( std::move( region ) );
    if ( t < roots.size() )
    {
      a = roots[t].hi;
    }
  }
  return out;
}

ComparisonResult compare_on_unit_interval( Polynomial const& f, Polynomial const& g )
{
  ComparisonResult result;
  Polynomial const d = g - f;
  if ( d.is_zero() )
  {
    result.verdict = Verdict::eq;
    return result;
  }
  RootIsolation iso = isolate_on_unit_interval( d );
  result.interior_roots = std::move( iso.roots );
  bool any_pos = false, any_neg = false;
  for ( std::size_t i = 0; i < iso.regions.size(); ++i )
  {
    if ( iso.region_signs[i] > 0 )
    {
      if ( !any_pos )
      {
        result.f_below = iso.regions[i];
      }
      any_pos = true;
    }
    else if ( iso.region_signs[i] < 0 )
    {
      if ( !any_neg )
      {
        result.f_above = iso.regions[i];
      }
      any_neg = true;
    }
  }
  if ( any_pos && any_neg )
  {
    result.verdict = Verdict::incomparable;
    return result;
  }
  result.verdict = any_pos ? Verdict::le : Verdict::ge;
  result.f_below.reset();
  result.f_above.reset();
  return result;
}

bool is_nondecreasing_on_unit_interval( Polynomial const& f )
{
  Polynomial const d = f.derivative();
  if ( d.is_zero() )
  {
    return true;
  }
  auto const iso = isolate_on_unit_interval( d );
  return std::all_of( iso.region_signs.begin(), iso.region_signs.end(), []( int s ) { return s > 0; } );
}

bool dual_reliability_check( Mmn const& net, Caps const& caps )
{
  auto const rel = nform_to_standard( brute_force_rel( net, caps ) ).poly;
  auto const rel_dual = nform_to_standard( brute_force_rel( dual( net ), caps ) ).poly;
  return rel + rel_dual.reflect() == Polynomial{ 1 };
}

} // namespace mmnrel
