// Acceptance harness: one PASS/FAIL line per criterion. Run without arguments
// for all criteria, or with criterion numbers to run a subset.

#include "mmnrel/io.hpp"
#include "mmnrel/netcore.hpp"
#include "mmnrel/poset.hpp"
#include "mmnrel/relpoly.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace mmnrel;

namespace
{

struct Outcome
{
  bool passed = true;
  std::string detail;
};

struct Criterion
{
  int id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> run;
};

// Tolerances and reference values.
constexpr long double asymptotic_lower = 1.0L;
constexpr long double asymptotic_upper = 1.3821L;

bool at_most( Verdict v )
{
  return v == Verdict::le || v == Verdict::eq;
}

std::string join( std::vector<std::string> const& v, char const* sep = ", " )
{
  std::string s;
  for ( std::size_t i = 0; i < v.size(); ++i )
  {
    s += ( i ? sep : "" ) + v[i];
  }
  return s;
}

Outcome fail( std::string msg )
{
  return { false, std::move( msg ) };
}

Outcome from_reports( std::vector<Report> const& reports )
{
  Outcome o;
  std::vector<std::string> parts;
  for ( auto const& r : reports )
  {
    parts.push_back( r.name + ": " + std::to_string( r.checked ) + " checks" );
    if ( !r.passed() )
    {
      o.passed = false;
      parts.push_back( r.violations.front() );
    }
  }
  o.detail = join( parts, "; " );
  return o;
}

Outcome matrix_fixtures()
{
  auto const h = BinaryMatrix::from_rows( { { 0, 1, 0 }, { 1, 0, 1 }, { 0, 1, 0 } } );
  auto const hp = BinaryMatrix::from_rows( { { 1, 0, 1 }, { 0, 1, 0 }, { 1, 0, 1 } } );
  auto const zeros = BinaryMatrix::from_rows( { { 0, 0, 0 }, { 0, 0, 0 }, { 0, 0, 0 } } );
  auto const ones = BinaryMatrix::from_rows( { { 1, 1, 1 }, { 1, 1, 1 }, { 1, 1, 1 } } );
  if ( !( pos( 4, 4 ).matchsticks() == zeros ) )
    return fail( "PoS matrix" );
  if ( !( sop( 4, 4 ).matchsticks() == ones ) )
    return fail( "SoP matrix" );
  if ( !( hammock( 4, 4 ).matchsticks() == h ) )
    return fail( "H44 matrix" );
  if ( !( hammock( 4, 4, HammockVariant::h_plus ).matchsticks() == hp ) )
    return fail( "H44+ matrix" );
  if ( !( dual( hammock( 4, 4 ) ) == hammock( 4, 4, HammockVariant::h_plus ) ) )
    return fail( "dual(H44) != H44+" );
  return { true, "PoS, SoP, H44, H44+ exact; dual(H44) = H44+" };
}

Outcome counting()
{
  std::size_t shapes = 0;
  for ( std::size_t w = 1; w <= 13; ++w )
  {
    for ( std::size_t l = 1; l <= 13; ++l )
    {
      if ( ( w - 1 ) * ( l - 1 ) > 12 )
        continue;
      mpz_class const expected = mpz_class( 1 ) << static_cast<mp_bitcnt_t>( ( w - 1 ) * ( l - 1 ) );
      if ( count_mmns( w, l ) != expected )
        return fail( "count_mmns(" + std::to_string( w ) + "," + std::to_string( l ) + ")" );
      std::set<std::vector<std::vector<int>>> seen;
      std::uint64_t n = 0;
      for ( auto const& net : enumerate_mmns( w, l ) )
      {
        ++n;
        if ( net.has_matrix() )
          seen.insert( net.matchsticks().to_rows() );
      }
      bool const distinct = ( w == 1 || l == 1 ) ? n == 1 : seen.size() == n;
      if ( mpz_class( std::to_string( n ) ) != expected || !distinct )
        return fail( "enumeration of " + std::to_string( w ) + "x" + std::to_string( l ) );
      ++shapes;
    }
  }
  auto const c16 = count_mmns_of_size( 16 );
  auto const e16 = all_mmns_of_size( 16 ).size();
  if ( c16 != 770 || e16 != 770 )
    return fail( "size 16: count " + c16.get_str() + ", enumerated " + std::to_string( e16 ) );
  return { true, std::to_string( shapes ) + " shapes agree; count_mmns_of_size(16) = 770" };
}

Outcome oracle_equivalence()
{
  std::size_t n = 0;
  for ( std::size_t m = 0; m <= 4; ++m )
  {
    for ( std::uint64_t mask = 0; mask < ( std::uint64_t{ 1 } << m ); ++mask )
    {
      CompositionWord const u( m, mask );
      if ( !( compose_rel( u ) == nform_to_standard( brute_force_rel( mmn_from_word( u ) ) ) ) )
        return fail( "mismatch at u=" + u.to_string() );
      ++n;
    }
  }
  return { n == 31, std::to_string( n ) + " words identical" };
}

Outcome duality_identity()
{
  std::size_t n = 0;
  for ( std::size_t size = 1; size <= 12; ++size )
  {
    for ( auto const& net : all_mmns_of_size( size ) )
    {
      if ( !dual_reliability_check( net ) )
        return fail( "identity fails for a " + std::to_string( net.width() ) + "x" + std::to_string( net.length() ) );
      ++n;
    }
  }
  if ( !dual_reliability_check( hammock( 4, 4 ) ) )
    return fail( "identity fails for H44" );
  return { true, std::to_string( n ) + " networks with n <= 12 plus H44" };
}

Outcome incomparable_sets()
{
  if ( !incomparable_pairs( 4 ).empty() )
    return fail( "m=4 is not total" );
  std::set<std::pair<std::string, std::string>> got;
  std::vector<std::string> listed;
  for ( auto const& [a, b] : incomparable_pairs( 5 ) )
  {
    auto const x = std::min( a.to_string(), b.to_string() );
    auto const y = std::max( a.to_string(), b.to_string() );
    got.emplace( x, y );
    listed.push_back( x + "|" + y );
  }
  std::set<std::pair<std::string, std::string>> const expected{
      { "00001", "11000" }, { "00011", "11010" }, { "00101", "11100" } };
  std::string const detail = "m=4 total; m=5 pairs {" + join( listed ) + "}";
  if ( got != expected )
    return fail( detail + " differ from the 3 published pairs" );
  return { true, detail };
}

Outcome sh_implies_pointwise()
{
  std::vector<Report> reports;
  for ( std::size_t m = 1; m <= 6; ++m )
  {
    reports.push_back( verify_sh_implies_pointwise( m ) );
  }
  return from_reports( reports );
}

Outcome rank_structure()
{
  std::vector<std::uint64_t> const four{ 1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1 };
  if ( rank_profile( 4 ) != four )
    return fail( "m=4 profile" );
  std::vector<std::uint64_t> maxima;
  for ( std::size_t m = 1; m <= 13; ++m )
  {
    auto const prof = rank_profile( m );
    if ( !is_symmetric( prof ) || !is_unimodal( prof ) )
      return fail( "profile not symmetric/unimodal at m=" + std::to_string( m ) );
    if ( prof.size() - 1 != m * ( m + 1 ) / 2 )
      return fail( "max rank at m=" + std::to_string( m ) );
  }
  // The published list starts at the empty word (m = 0).
  std::vector<std::string> shown;
  for ( std::size_t m = 0; m <= 11; ++m )
  {
    auto const prof = rank_profile( m );
    maxima.push_back( *std::max_element( prof.begin(), prof.end() ) );
    shown.push_back( std::to_string( maxima.back() ) );
  }
  std::vector<std::uint64_t> const expected{ 1, 1, 1, 2, 2, 3, 5, 8, 14, 23, 40 };
  if ( !std::equal( expected.begin(), expected.end(), maxima.begin() ) )
    return fail( "middle maxima for m=0..11: " + join( shown, "," ) );
  return { true, "m=4 profile exact; symmetric, unimodal, max rank C(m+1,2) for m <= 13; maxima for m=0..11: " +
                     join( shown, "," ) };
}

Outcome chain_criterion()
{
  for ( std::size_t m = 1; m <= 16; ++m )
  {
    auto const c = max_chain( m );
    std::size_t const top = m * ( m + 1 ) / 2;
    if ( c.size() != top )
      return fail( "size at m=" + std::to_string( m ) );
    std::set<std::size_t> ranks;
    for ( std::size_t i = 0; i < c.size(); ++i )
    {
      ranks.insert( c[i].rank() );
      if ( i > 0 && ( !leq_SH( c[i - 1], c[i] ) || leq_SH( c[i], c[i - 1] ) ) )
        return fail( "not strict at m=" + std::to_string( m ) );
    }
    if ( ranks.size() != top || *ranks.begin() != 1 || *ranks.rbegin() != top )
      return fail( "ranks at m=" + std::to_string( m ) );
  }
  return { true, "m = 1..16" };
}

Outcome middle_elements()
{
  for ( std::size_t m = 4; m <= 20; ++m )
  {
    auto const u = middle_element( m );
    auto const mids = middle_rank_indices( m );
    auto const in = [&]( std::size_t r ) { return std::find( mids.begin(), mids.end(), r ) != mids.end(); };
    if ( !in( u.rank() ) || !in( u.complement().rank() ) )
      return fail( "m=" + std::to_string( m ) + " " + u.to_string() );
  }
  return { true, "m = 4..20, words and complements" };
}

Outcome antichains()
{
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<std::size_t>>> const published{
      { { 5, 7 }, { { 4, 2, 1 }, { 4, 3 }, { 5, 2 } } },
      { { 6, 10 }, { { 4, 3, 2, 1 }, { 5, 3, 2 }, { 5, 4, 1 }, { 6, 3, 1 }, { 6, 4 } } },
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
  for ( auto const& [key, supports] : published )
  {
    std::set<std::vector<std::size_t>> expected;
    for ( auto s : supports )
    {
      std::sort( s.begin(), s.end() );
      expected.insert( s );
    }
    std::set<std::vector<std::size_t>> got;
    for ( auto const& w : antichain_at_rank( key.first, key.second ) )
      got.insert( w.support() );
    if ( got != expected )
      return fail( "m=" + std::to_string( key.first ) );
  }
  return { true, "P_7 (m=5), P_10 (m=6), P_14 (m=7), P_18 (m=8) set-equal" };
}

Outcome table_counts()
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
  std::vector<std::string> ratios;
  for ( auto const& row : rows )
  {
    auto const s = square_middle_stats( row.m );
    if ( s.total_compositions != row.total || s.square_compositions != row.square || s.middle_counts != row.middle ||
         s.square_middle_counts != row.square_middle )
      return fail( "row m=" + std::to_string( row.m ) );
    ratios.push_back( std::to_string( row.m ) + ":" + io::truncated_decimal( s.ratio, 4 ) );
  }
  return { true, "counts exact; ratios " + join( ratios ) + " (published m=4 ratio 1 not asserted)" };
}

Outcome umr()
{
  std::vector<Report> reports;
  for ( std::size_t m = 1; m <= 6; ++m )
  {
    reports.push_back( verify_umr( m ) );
  }
  return from_reports( reports );
}

Outcome hmr()
{
  std::vector<Report> reports;
  for ( std::size_t m = 1; m <= 3; ++m )
  {
    reports.push_back( verify_hmr_absent( m ) );
  }
  return from_reports( reports );
}

Outcome hammock_bounds()
{
  return from_reports( { verify_hammock_bounds( 4 ) } );
}

Outcome m_order_monotonicity()
{
  std::vector<Mmn> nets;
  for ( auto const& n : enumerate_mmns( 3, 3 ) )
    nets.push_back( n );
  std::size_t pairs = 0;
  std::size_t equal = 0;
  for ( auto const& a : nets )
  {
    auto const na = brute_force_rel( a );
    for ( auto const& b : nets )
    {
      if ( !leq_M( a, b ) )
        continue;
      ++pairs;
      auto const nb = brute_force_rel( b );
      if ( !nform_dominates( na, nb ) )
        return fail( "N_i not monotone" );
      auto const v = compare_on_unit_interval( nform_to_standard( na ), nform_to_standard( nb ) ).verdict;
      if ( !at_most( v ) )
        return fail( std::string( "pointwise verdict " ) + to_string( v ) );
      equal += v == Verdict::eq;
    }
  }
  return { nets.size() == 16, std::to_string( pairs ) + " comparable pairs over " + std::to_string( nets.size() ) +
                                  " networks (" + std::to_string( equal ) + " EQ, all reflexive)" };
}

Outcome asymptotics()
{
  Outcome o;
  long double prev = 0;
  std::ostringstream os;
  os.precision( 6 );
  os << std::fixed;
  for ( std::size_t m = 8; m <= 16; m += 2 )
  {
    auto const a = asymptotic_middle_ratio( m );
    os << "m=" << m << ":" << static_cast<double>( a.value ) << " ";
    if ( !( a.value > asymptotic_lower && a.value < asymptotic_upper ) )
      o.passed = false;
    if ( a.value < prev )
    {
      o.passed = false;
      os << "(decrease) ";
    }
    prev = a.value;
  }
  os << "limit sqrt(6/pi)=" << static_cast<double>( asymptotic_limit() );
  o.detail = os.str();
  return o;
}

Outcome appendix_properties()
{
  // Single-bit shift: move the (t)-th support element down to any free slot
  // above its predecessor.
  std::size_t shifts = 0;
  for ( std::size_t m = 1; m <= 5; ++m )
  {
    for ( std::uint64_t mask = 0; mask < ( std::uint64_t{ 1 } << m ); ++mask )
    {
      CompositionWord const u( m, mask );
      auto const supp = u.support();
      auto const fu = compose_rel( u );
      for ( std::size_t t = 0; t < supp.size(); ++t )
      {
        std::size_t const lo = t == 0 ? 1 : supp[t - 1] + 1;
        for ( std::size_t j = lo; j < supp[t]; ++j )
        {
          auto s = supp;
          s[t] = j;
          auto const us = CompositionWord::from_support( m, s );
          if ( !leq_H( us, u ) )
            return fail( "shifted word not below in the H order: " + us.to_string() );
          if ( !at_most( compare_on_unit_interval( compose_rel( us ), fu ).verdict ) )
            return fail( "shift dominance fails: " + us.to_string() + " vs " + u.to_string() );
          ++shifts;
        }
      }
    }
  }

  // Composition monotonicity over random chains of dominated base polynomials.
  std::vector<Polynomial> bases;
  for ( std::size_t m = 0; m <= 2; ++m )
    for ( std::uint64_t mask = 0; mask < ( std::uint64_t{ 1 } << m ); ++mask )
      bases.push_back( compose_rel( CompositionWord( m, mask ) ).poly );
  std::vector<std::pair<std::size_t, std::size_t>> dominated; // (lower, upper)
  for ( std::size_t i = 0; i < bases.size(); ++i )
    for ( std::size_t j = 0; j < bases.size(); ++j )
      if ( at_most( compare_on_unit_interval( bases[i], bases[j] ).verdict ) )
        dominated.emplace_back( i, j );
  std::mt19937_64 rng( 20240517 );
  std::uniform_int_distribution<std::size_t> pick( 0, dominated.size() - 1 );
  std::uniform_int_distribution<std::size_t> len( 1, 4 );
  for ( int trial = 0; trial < 100; ++trial )
  {
    Polynomial f = Polynomial::identity();
    Polynomial fs = Polynomial::identity();
    std::size_t const s = len( rng );
    for ( std::size_t k = 0; k < s; ++k )
    {
      auto const [lower, upper] = dominated[pick( rng )];
      f = f.compose( bases[upper] );
      fs = fs.compose( bases[lower] );
    }
    if ( !at_most( compare_on_unit_interval( fs, f ).verdict ) )
      return fail( "composition monotonicity fails in trial " + std::to_string( trial ) );
  }
  return { true, std::to_string( shifts ) + " single-bit shifts (m <= 5); 100 random dominated chains" };
}

std::vector<Criterion> const& criteria()
{
  static std::vector<Criterion> const list{
      { 1, "matrix fixtures", 1, matrix_fixtures },
      { 2, "counting", 10, counting },
      { 3, "oracle equivalence m<=4", 60, oracle_equivalence },
      { 4, "duality identity", 300, duality_identity },
      { 5, "total order m=4, incomparable pairs m=5", 120, incomparable_sets },
      { 6, "SH order implies pointwise order m<=6", 900, sh_implies_pointwise },
      { 7, "rank structure", 30, rank_structure },
      { 8, "maximum chain", 10, chain_criterion },
      { 9, "middle elements", 5, middle_elements },
      { 10, "maximum antichains", 5, antichains },
      { 11, "square/middle table", 30, table_counts },
      { 12, "UMR", 1200, umr },
      { 13, "HMR non-existence", 120, hmr },
      { 14, "hammock bounds m=4", 120, hammock_bounds },
      { 15, "matchstick order monotonicity", 60, m_order_monotonicity },
      { 16, "asymptotic middle ratio trend", 5, asymptotics },
      { 17, "appendix properties", 300, appendix_properties },
  };
  return list;
}

} // namespace

int main( int argc, char** argv )
{
  std::set<int> selected;
  for ( int i = 1; i < argc; ++i )
    selected.insert( std::stoi( argv[i] ) );
  int failures = 0;
  for ( auto const& c : criteria() )
  {
    if ( !selected.empty() && !selected.count( c.id ) )
      continue;
    auto const t0 = std::chrono::steady_clock::now();
    Outcome o;
    try
    {
      o = c.run();
    }
    catch ( std::exception const& e )
    {
      o = fail( std::string( "exception: " ) + e.what() );
    }
    double const secs = std::chrono::duration<double>( std::chrono::steady_clock::now() - t0 ).count();
    bool const in_time = secs <= c.budget_seconds;
    bool const ok = o.passed && in_time;
    failures += !ok;
    char timing[64];
    std::snprintf( timing, sizeof timing, "%.2fs/%gs", secs, c.budget_seconds );
    std::cout << ( ok ? "PASS" : "FAIL" ) << " criterion " << ( c.id < 10 ? " " : "" ) << c.id << " " << c.title
              << " [" << timing << ( in_time ? "" : " over budget" ) << "] " << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
