#include "mmnrel/suites.hpp"

#include "mmnrel/io.hpp"
#include "mmnrel/netcore.hpp"
#include "mmnrel/relpoly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mmnrel::suites
{

namespace
{

using Support = std::vector<std::size_t>;

Report oracle( Caps const& caps )
{
  Report r{ "oracle m<=4", 0, {}, {} };
  for ( std::size_t m = 0; m <= 4; ++m )
  {
    for ( std::uint64_t mask = 0; mask < ( std::uint64_t{ 1 } << m ); ++mask )
    {
      CompositionWord const u( m, mask );
      auto const composed = compose_rel( u, caps );
      auto const brute = nform_to_standard( brute_force_rel( mmn_from_word( u ), caps ) );
      ++r.checked;
      if ( !( composed == brute ) )
      {
        r.violations.push_back( "compose_rel differs from the oracle for u=" + u.to_string() );
      }
    }
  }
  return r;
}

std::vector<Report> duality( Caps const& caps )
{
  Report words{ "dual-word m<=8", 0, {}, {} };
  for ( std::size_t m = 0; m <= 8; ++m )
  {
    for ( std::uint64_t mask = 0; mask < ( std::uint64_t{ 1 } << m ); ++mask )
    {
      CompositionWord const u( m, mask );
      ++words.checked;
      if ( !( dual( mmn_from_word( u ) ) == mmn_from_word( dual_word( u ) ) ) )
      {
        words.violations.push_back( "dual(C^u) != C^(complement u) for u=" + u.to_string() );
      }
    }
  }

  Report involution{ "dual-involution (w-1)(l-1)<=9", 0, {}, {} };
  for ( std::size_t w = 1; w <= 10; ++w )
  {
    for ( std::size_t l = 1; l <= 10; ++l )
    {
      if ( ( w - 1 ) * ( l - 1 ) > 9 )
      {
        continue;
      }
      for ( auto const& n : enumerate_mmns( w, l, caps ) )
      {
        ++involution.checked;
        auto const d = dual( n );
        if ( !( dual( d ) == n ) || d.width() != l || d.length() != w )
        {
          involution.violations.push_back( "dual is not an involution on a " + std::to_string( w ) + "x" +
                                           std::to_string( l ) + " network" );
        }
      }
    }
  }

  Report composition{ "dual-of-composition", 0, {}, {} };
  std::vector<Mmn> small;
  for ( std::size_t w = 1; w <= 3; ++w )
  {
    for ( std::size_t l = 1; l <= 3; ++l )
    {
      for ( auto const& n : enumerate_mmns( w, l, caps ) )
      {
        small.push_back( n );
      }
    }
  }
  for ( auto const& a : small )
  {
    for ( auto const& b : small )
    {
      ++composition.checked;
      if ( !( dual( compose( a, b ) ) == compose( dual( a ), dual( b ) ) ) )
      {
        composition.violations.push_back( "dual(N1.N2) != dual(N1).dual(N2)" );
      }
    }
  }

  Report identity{ "dual-reliability n<=12 and H44", 0, {}, {} };
  for ( std::size_t n = 1; n <= 12; ++n )
  {
    for ( auto const& net : all_mmns_of_size( n, caps ) )
    {
      ++identity.checked;
      if ( !dual_reliability_check( net, caps ) )
      {
        identity.violations.push_back( "Rel(N;p) + Rel(dual N;1-p) != 1 for a " + std::to_string( net.width() ) +
                                       "x" + std::to_string( net.length() ) + " network" );
      }
    }
  }
  ++identity.checked;
  if ( !dual_reliability_check( hammock( 4, 4 ), caps ) )
  {
    identity.violations.push_back( "duality identity fails for H_{4,4}" );
  }
  return { words, involution, composition, identity };
}

std::vector<Report> order( Caps const& caps )
{
  std::vector<Report> out;
  for ( std::size_t m = 1; m <= 5; ++m )
  {
    out.push_back( verify_sh_implies_pointwise( m, caps ) );
  }
  Report inc{ "incomparable-pairs m=4,5", 0, {}, {} };
  auto const four = incomparable_pairs( 4, caps );
  ++inc.checked;
  if ( !four.empty() )
  {
    inc.violations.push_back( "m=4 pointwise order is not total" );
  }
  std::set<std::pair<std::string, std::string>> got;
  for ( auto const& [a, b] : incomparable_pairs( 5, caps ) )
  {
    got.emplace( std::min( a.to_string(), b.to_string() ), std::max( a.to_string(), b.to_string() ) );
  }
  std::set<std::pair<std::string, std::string>> const expected{
      { "00001", "11000" }, { "00011", "11010" }, { "00101", "11100" } };
  ++inc.checked;
  if ( got != expected )
  {
    inc.violations.push_back( "m=5 incomparable pairs differ from {00001|11000, 00011|11010, 00101|11100}" );
  }
  for ( auto const& pr : got )
  {
    if ( !expected.count( pr ) )
    {
      auto const dual_of = [&]( std::string const& w ) {
        return CompositionWord::parse( w ).complement().to_string();
      };
      inc.notes.push_back( "extra incomparable pair " + pr.first + "|" + pr.second + " (complement pair " +
                           dual_of( pr.first ) + "|" + dual_of( pr.second ) + ")" );
    }
  }
  out.push_back( inc );
  return out;
}

std::vector<Report> table( Caps const& caps )
{
  struct Row
  {
    std::size_t m;
    std::uint64_t total, square;
    std::vector<std::uint64_t> middle, square_middle;
  };
  std::vector<Row> const rows{ { 4, 16, 6, { 2 }, { 2 } },
                               { 6, 64, 20, { 5, 5 }, { 3, 3 } },
                               { 8, 256, 70, { 14 }, { 8 } },
                               { 10, 1024, 252, { 40, 40 }, { 20, 20 } },
                               { 12, 4096, 924, { 124 }, { 58 } } };
  Report r{ "table m=4..12", 0, {}, {} };
  for ( auto const& row : rows )
  {
    auto const s = square_middle_stats( row.m, caps );
    ++r.checked;
    if ( s.total_compositions != row.total || s.square_compositions != row.square || s.middle_counts != row.middle ||
         s.square_middle_counts != row.square_middle )
    {
      r.violations.push_back( "table row m=" + std::to_string( row.m ) + " differs" );
    }
    r.notes.push_back( "m=" + std::to_string( row.m ) + " ratio " + io::truncated_decimal( s.ratio, 4 ) );
  }
  r.notes.push_back( "the published m=4 ratio is 1; the counts give 2/6" );
  return { r };
}

Report chain( Caps const& )
{
  Report r{ "max-chain m<=16", 0, {}, {} };
  for ( std::size_t m = 1; m <= 16; ++m )
  {
    auto const c = max_chain( m );
    ++r.checked;
    std::size_t const top = m * ( m + 1 ) / 2;
    if ( c.size() != top )
    {
      r.violations.push_back( "m=" + std::to_string( m ) + ": chain size " + std::to_string( c.size() ) );
      continue;
    }
    for ( std::size_t i = 0; i < c.size(); ++i )
    {
      if ( c[i].rank() != i + 1 )
      {
        r.violations.push_back( "m=" + std::to_string( m ) + ": element " + std::to_string( i ) + " has rank " +
                                std::to_string( c[i].rank() ) );
        break;
      }
      if ( i > 0 && ( !leq_SH( c[i - 1], c[i] ) || leq_SH( c[i], c[i - 1] ) ) )
      {
        r.violations.push_back( "m=" + std::to_string( m ) + ": not strictly increasing at " + std::to_string( i ) );
        break;
      }
    }
  }
  return r;
}

Report middle( Caps const& )
{
  Report r{ "middle-elements m=4..20", 0, {}, {} };
  for ( std::size_t m = 4; m <= 20; ++m )
  {
    auto const u = middle_element( m );
    auto const mids = middle_rank_indices( m );
    auto const in = [&]( std::size_t x ) { return std::find( mids.begin(), mids.end(), x ) != mids.end(); };
    ++r.checked;
    if ( !in( u.rank() ) || !in( u.complement().rank() ) )
    {
      r.violations.push_back( "m=" + std::to_string( m ) + ": " + u.to_string() + " is off the middle" );
    }
  }
  return r;
}

Report antichain( Caps const& )
{
  // Published maximum antichains, supports listed in decreasing order.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Support>> const published{
      { { 5, 7 }, { { 4, 2, 1 }, { 4, 3 }, { 5, 2 } } },
      { { 5, 8 }, { { 4, 3, 1 }, { 5, 2, 1 }, { 5, 3 } } },
      { { 6, 10 }, { { 4, 3, 2, 1 }, { 5, 3, 2 }, { 5, 4, 1 }, { 6, 3, 1 }, { 6, 4 } } },
      { { 6, 11 }, { { 5, 3, 2, 1 }, { 5, 4, 2 }, { 6, 3, 2 }, { 6, 4, 1 }, { 6, 5 } } },
      { { 7, 14 },
        { { 5, 4, 3, 2 },
          { 6, 4, 3, 1 },
          { 6, 5, 2, 1 },
          { 6, 5, 3 },
          { 7, 4, 2, 1 },
          { 7, 4, 3 },
          { 7, 5, 2 },
          { 7, 6, 1 } } },
      { { 8, 18 },
        { { 6, 5, 4, 2, 1 },
          { 6, 5, 4, 3 },
          { 7, 5, 3, 2, 1 },
          { 7, 5, 4, 2 },
          { 7, 6, 3, 2 },
          { 7, 6, 4, 1 },
          { 7, 6, 5 },
          { 8, 4, 3, 2, 1 },
          { 8, 5, 3, 2 },
          { 8, 5, 4, 1 },
          { 8, 6, 3, 1 },
          { 8, 6, 4 },
          { 8, 7, 2, 1 },
          { 8, 7, 3 } } } };
  Report r{ "antichains m=5..8", 0, {}, {} };
  for ( auto const& [key, supports] : published )
  {
    auto const [m, rho] = key;
    std::set<Support> expected;
    for ( auto s : supports )
    {
      std::sort( s.begin(), s.end() );
      expected.insert( s );
    }
    std::set<Support> got;
    auto const words = antichain_at_rank( m, rho );
    for ( auto const& w : words )
    {
      got.insert( w.support() );
    }
    ++r.checked;
    if ( got != expected )
    {
      r.violations.push_back( "P_" + std::to_string( rho ) + " for m=" + std::to_string( m ) + " differs" );
    }
    for ( std::size_t i = 0; i < words.size(); ++i )
    {
      for ( std::size_t j = 0; j < words.size(); ++j )
      {
        if ( i != j && leq_SH( words[i], words[j] ) )
        {
          r.violations.push_back( "antichain members " + words[i].to_string() + " <= " + words[j].to_string() );
        }
      }
    }
  }
  return r;
}

Report asymptotics( Caps const& caps )
{
  Report r{ "asymptotics even m=8..16", 0, {}, {} };
  long double const limit = asymptotic_limit();
  long double prev = 0;
  for ( std::size_t m = 8; m <= 16; m += 2 )
  {
    auto const a = asymptotic_middle_ratio( m, caps );
    ++r.checked;
    std::ostringstream os;
    os.precision( 6 );
    os << std::fixed << "m=" << m << " ratio " << static_cast<double>( a.value );
    r.notes.push_back( os.str() );
    if ( !( a.value > 1.0L && a.value < 1.3821L ) )
    {
      r.violations.push_back( "ratio outside (1, 1.3821) at " + os.str() );
    }
    if ( a.value < prev )
    {
      r.violations.push_back( "ratio decreases at " + os.str() );
    }
    prev = a.value;
  }
  std::ostringstream os;
  os.precision( 6 );
  os << std::fixed << "limit sqrt(6/pi) = " << static_cast<double>( limit );
  r.notes.push_back( os.str() );
  return r;
}

using Runner = std::function<std::vector<Report>( Caps const& )>;

std::map<std::string, Runner> const& registry()
{
  static std::map<std::string, Runner> const reg{
      { "oracle", []( Caps const& c ) { return std::vector<Report>{ oracle( c ) }; } },
      { "duality", duality },
      { "order", order },
      { "umr",
        []( Caps const& c ) {
          std::vector<Report> out;
          for ( std::size_t m = 1; m <= 6; ++m )
          {
            out.push_back( verify_umr( m, c ) );
          }
          return out;
        } },
      { "hmr",
        []( Caps const& c ) {
          std::vector<Report> out;
          for ( std::size_t m = 1; m <= 3; ++m )
          {
            out.push_back( verify_hmr_absent( m, c ) );
          }
          return out;
        } },
      { "hammock-bounds",
        []( Caps const& c ) {
          return std::vector<Report>{ verify_hammock_bounds( 2, c ), verify_hammock_bounds( 4, c ) };
        } },
      { "table", table },
      { "chain", []( Caps const& c ) { return std::vector<Report>{ chain( c ) }; } },
      { "middle", []( Caps const& c ) { return std::vector<Report>{ middle( c ) }; } },
      { "antichain", []( Caps const& c ) { return std::vector<Report>{ antichain( c ) }; } },
      { "asymptotics", []( Caps const& c ) { return std::vector<Report>{ asymptotics( c ) }; } },
  };
  return reg;
}

} // namespace

std::vector<std::string> const& names()
{
  static std::vector<std::string> const list{ "oracle", "duality", "order",  "umr",       "hmr",        "hammock-bounds",
                                              "table",  "chain",   "middle", "antichain", "asymptotics" };
  return list;
}

bool exists( std::string const& name )
{
  return registry().count( name ) != 0;
}

std::vector<Report> run( std::string const& name, Caps const& caps )
{
  auto const it = registry().find( name );
  if ( it == registry().end() )
  {
    throw std::invalid_argument( "unknown verification suite '" + name + "'" );
  }
  return it->second( caps );
}

} // namespace mmnrel::suites
