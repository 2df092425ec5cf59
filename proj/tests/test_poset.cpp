#include "mmnrel/poset.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace mmnrel;

namespace
{

CompositionWord w( char const* s )
{
  return CompositionWord::parse( s );
}

std::set<std::vector<std::size_t>> supports( std::vector<CompositionWord> const& ws )
{
  std::set<std::vector<std::size_t>> out;
  for ( auto const& u : ws )
    out.insert( u.support() );
  return out;
}

} // namespace

TEST_SUITE( "poset" )
{
  TEST_CASE( "S, H and SH orders" )
  {
    CHECK( leq_S( w( "0100" ), w( "0110" ) ) );
    CHECK_FALSE( leq_S( w( "10" ), w( "01" ) ) );
    CHECK( leq_S( w( "0000" ), w( "1010" ) ) );
    CHECK( leq_H( CompositionWord::from_support( 4, { 1, 2, 4 } ), CompositionWord::from_support( 4, { 1, 3, 4 } ) ) );
    CHECK_THROWS_AS( leq_H( CompositionWord::from_support( 5, { 1, 2, 4 } ), CompositionWord::from_support( 5, { 2, 5 } ) ),
                     std::invalid_argument );
    CHECK_FALSE( leq_H( CompositionWord::from_support( 4, { 2, 3 } ), CompositionWord::from_support( 4, { 1, 4 } ) ) );
    CHECK( leq_SH( w( "0101" ), w( "0111" ) ) );
    CHECK( leq_SH( w( "0101" ), w( "0011" ) ) );
    CHECK_FALSE( leq_SH( w( "0101" ), w( "1110" ) ) );
    CHECK_FALSE( leq_SH( w( "1110" ), w( "0101" ) ) );
    CHECK( rank( w( "1101" ) ) == 7 );
    CHECK( rank( w( "0000" ) ) == 0 );
    CHECK( rank( w( "1111" ) ) == 10 );
  }

  TEST_CASE( "SH order is the closure of S and H" )
  {
    // Two-step closure over S and H reproduces leq_SH exactly for m = 5.
    std::size_t const m = 5, n = 32;
    std::vector<CompositionWord> all;
    for ( std::uint64_t k = 0; k < n; ++k )
      all.emplace_back( m, k );
    auto base = [&]( std::size_t a, std::size_t b ) {
      return leq_S( all[a], all[b] ) || ( all[a].weight() == all[b].weight() && leq_H( all[a], all[b] ) );
    };
    std::vector<std::vector<char>> rel( n, std::vector<char>( n ) );
    for ( std::size_t a = 0; a < n; ++a )
      for ( std::size_t b = 0; b < n; ++b )
        rel[a][b] = base( a, b );
    for ( std::size_t k = 0; k < n; ++k )
      for ( std::size_t a = 0; a < n; ++a )
        for ( std::size_t b = 0; b < n; ++b )
          rel[a][b] = rel[a][b] || ( rel[a][k] && rel[k][b] );
    for ( std::size_t a = 0; a < n; ++a )
      for ( std::size_t b = 0; b < n; ++b )
        CHECK( bool( rel[a][b] ) == leq_SH( all[a], all[b] ) );
  }

  TEST_CASE( "SH poset structure" )
  {
    auto const p4 = build_poset( 4, PosetOrder::sh );
    REQUIRE( p4.elements.size() == 16 );
    std::vector<std::size_t> sizes;
    for ( auto const& c : p4.rank_classes )
      sizes.push_back( c.size() );
    CHECK( sizes == std::vector<std::size_t>{ 1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1 } );
    for ( auto const& [lo, hi] : p4.covers )
      CHECK( p4.elements[hi].rank() == p4.elements[lo].rank() + 1 );
    CHECK( covers_generate_relation( p4.leq, p4.covers ) );

    auto const p1 = build_poset( 1, PosetOrder::sh );
    CHECK( p1.elements.size() == 2 );
    CHECK( p1.covers.size() == 1 );

    for ( std::size_t m = 2; m <= 7; ++m )
    {
      auto const p = build_poset( m, PosetOrder::sh );
      CHECK( covers_generate_relation( p.leq, p.covers ) );
      std::size_t total = 0;
      for ( auto const& c : p.rank_classes )
        total += c.size();
      CHECK( total == p.elements.size() );
    }
  }

  TEST_CASE( "pointwise poset" )
  {
    auto const p4 = build_poset( 4, PosetOrder::pointwise );
    CHECK( p4.incomparable.empty() );
    CHECK( p4.equivalence_classes.empty() );
    // Total order: the cover relation is a single path.
    CHECK( p4.covers.size() == 15 );
    CHECK( covers_generate_relation( p4.leq, p4.covers ) );
    CHECK( incomparable_pairs( 3 ).empty() );
    CHECK( incomparable_pairs( 4 ).empty() );

    auto const p5 = build_poset( 5, PosetOrder::pointwise );
    CHECK( covers_generate_relation( p5.leq, p5.covers ) );
    std::set<std::pair<std::string, std::string>> pairs;
    for ( auto const& [a, b] : p5.incomparable )
    {
      auto x = p5.elements[a].to_string(), y = p5.elements[b].to_string();
      pairs.emplace( std::min( x, y ), std::max( x, y ) );
    }
    // The published three plus four more, confirmed with an independent CAS; the
    // set is closed under complementation, as the duality identity requires.
    std::set<std::pair<std::string, std::string>> const exact{
        { "00001", "11000" }, { "00011", "11010" }, { "00011", "11100" }, { "00101", "11100" },
        { "00110", "10001" }, { "00111", "11110" }, { "01110", "11001" } };
    CHECK( pairs == exact );
    for ( auto const& [a, b] : exact )
    {
      auto const ca = CompositionWord::parse( a ).complement().to_string();
      auto const cb = CompositionWord::parse( b ).complement().to_string();
      CHECK( exact.count( { std::min( ca, cb ), std::max( ca, cb ) } ) );
    }
    for ( auto const& [a, b] : p5.incomparable )
    {
      CHECK_FALSE( leq_SH( p5.elements[a], p5.elements[b] ) );
      CHECK_FALSE( leq_SH( p5.elements[b], p5.elements[a] ) );
    }
    Caps tight;
    tight.pointwise_m = 4;
    CHECK_THROWS_AS( build_poset( 5, PosetOrder::pointwise, tight ), CapExceeded );
  }

  TEST_CASE( "maximum chain" )
  {
    CHECK( max_chain_integers( 4 ) == std::vector<std::uint64_t>{ 1, 2, 4, 8, 9, 10, 12, 13, 14, 15 } );
    CHECK( max_chain_integers( 1 ) == std::vector<std::uint64_t>{ 1 } );
    CHECK( max_chain_integers( 2 ) == std::vector<std::uint64_t>{ 1, 2, 3 } );
    auto const c = max_chain( 4 );
    for ( std::size_t i = 0; i < c.size(); ++i )
      CHECK( c[i].rank() == i + 1 );
  }

  TEST_CASE( "middle ranks and middle elements" )
  {
    CHECK( middle_rank_indices( 4 ) == std::vector<std::size_t>{ 5 } );
    CHECK( middle_rank_indices( 5 ) == std::vector<std::size_t>{ 7, 8 } );
    CHECK( middle_rank_indices( 6 ) == std::vector<std::size_t>{ 10, 11 } );
    CHECK( middle_element( 4 ) == w( "0110" ) );
    CHECK( middle_element( 5 ) == w( "00110" ) );
    CHECK( middle_element( 7 ) == w( "0111100" ) );
    CHECK( middle_element( 7 ).rank() == 14 );
    for ( std::size_t m = 1; m <= 24; ++m )
    {
      auto const mids = middle_rank_indices( m );
      auto const r = middle_element( m ).rank();
      CHECK( std::find( mids.begin(), mids.end(), r ) != mids.end() );
    }
  }

  TEST_CASE( "antichains and rank profiles" )
  {
    CHECK( supports( antichain_at_rank( 5, 7 ) ) ==
           std::set<std::vector<std::size_t>>{ { 1, 2, 4 }, { 3, 4 }, { 2, 5 } } );
    CHECK( supports( antichain_at_rank( 6, 10 ) ) ==
           std::set<std::vector<std::size_t>>{ { 1, 2, 3, 4 }, { 2, 3, 5 }, { 1, 4, 5 }, { 1, 3, 6 }, { 4, 6 } } );
    CHECK( supports( antichain_at_rank( 3, 0 ) ) == std::set<std::vector<std::size_t>>{ {} } );
    CHECK( rank_profile( 1 ) == std::vector<std::uint64_t>{ 1, 1 } );
    CHECK( rank_profile( 4 ) == std::vector<std::uint64_t>{ 1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1 } );
    CHECK( is_unimodal( { 1, 2, 2, 1 } ) );
    CHECK_FALSE( is_unimodal( { 1, 2, 1, 2, 1 } ) );
    CHECK_FALSE( is_symmetric( { 1, 2, 3 } ) );
    CHECK( dilworth_number( 5 ) == 3 );
    CHECK( dilworth_number( 8 ) == 14 );
    CHECK( dilworth_number( 12 ) == 124 );
    // Rank profile agrees with direct counting.
    for ( std::size_t m = 1; m <= 10; ++m )
    {
      auto const prof = rank_profile( m );
      std::vector<std::uint64_t> direct( prof.size(), 0 );
      for ( std::uint64_t k = 0; k < ( std::uint64_t{ 1 } << m ); ++k )
        ++direct[CompositionWord( m, k ).rank()];
      CHECK( prof == direct );
    }
  }

  TEST_CASE( "square middle statistics" )
  {
    auto const s8 = square_middle_stats( 8 );
    CHECK( s8.total_compositions == 256 );
    CHECK( s8.square_compositions == 70 );
    CHECK( s8.middle_counts == std::vector<std::uint64_t>{ 14 } );
    CHECK( s8.square_middle_counts == std::vector<std::uint64_t>{ 8 } );
    CHECK( s8.ratio == mpq_class( 4, 35 ) );
    auto const s6 = square_middle_stats( 6 );
    CHECK( s6.ratio == mpq_class( 3, 10 ) );
    CHECK_THROWS_AS( square_middle_stats( 5 ), std::invalid_argument );
    auto const a = asymptotic_middle_ratio( 12 );
    CHECK( a.middle_count == 124 );
    CHECK( double( a.value ) == doctest::Approx( 1.2584 ).epsilon( 1e-3 ) );
    CHECK( double( asymptotic_limit() ) == doctest::Approx( 1.381977 ).epsilon( 1e-6 ) );
  }

  TEST_CASE( "verification reports" )
  {
    for ( std::size_t m = 1; m <= 4; ++m )
      CHECK( verify_sh_implies_pointwise( m ).passed() );
    CHECK( verify_umr( 2 ).passed() );
    CHECK( verify_hmr_absent( 3 ).passed() );
    CHECK( verify_hammock_bounds( 2 ).passed() );
    CHECK( verify_hammock_bounds( 4 ).passed() );
  }
}
