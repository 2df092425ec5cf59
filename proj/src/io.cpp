#include "mmnrel/io.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace mmnrel::io
{

namespace
{

std::vector<std::string> decimal_strings( std::vector<mpz_class> const& v )
{
  std::vector<std::string> out;
  out.reserve( v.size() );
  for ( auto const& c : v )
  {
    out.push_back( c.get_str() );
  }
  return out;
}

std::vector<mpz_class> parse_decimals( json const& arr )
{
  std::vector<mpz_class> out;
  for ( auto const& e : arr )
  {
    mpz_class c;
    if ( e.is_string() )
    {
      if ( c.set_str( e.get<std::string>(), 10 ) != 0 )
      {
        throw std::invalid_argument( "malformed integer '" + e.get<std::string>() + "'" );
      }
    }
    else if ( e.is_number_integer() )
    {
      c = mpz_class( std::to_string( e.get<long long>() ) );
    }
    else
    {
      throw std::invalid_argument( "coefficients must be decimal strings" );
    }
    out.push_back( c );
  }
  return out;
}

std::string rational_string( mpq_class const& q )
{
  return q.get_str();
}

mpq_class parse_rational( std::string_view text )
{
  std::string s( text );
  if ( s.empty() )
  {
    throw std::invalid_argument( "empty number in grid" );
  }
  auto const slash = s.find( '/' );
  if ( slash != std::string::npos )
  {
    mpq_class q;
    if ( q.set_str( s, 10 ) != 0 || q.get_den() == 0 )
    {
      throw std::invalid_argument( "malformed rational '" + s + "'" );
    }
    q.canonicalize();
    return q;
  }
  bool negative = false;
  if ( s[0] == '-' )
  {
    negative = true;
    s = s.substr( 1 );
  }
  auto const dot = s.find( '.' );
  std::string digits = s;
  std::size_t frac = 0;
  if ( dot != std::string::npos )
  {
    digits = s.substr( 0, dot ) + s.substr( dot + 1 );
    frac = s.size() - dot - 1;
  }
  if ( digits.empty() || digits.find_first_not_of( "0123456789" ) != std::string::npos )
  {
    throw std::invalid_argument( "malformed decimal '" + std::string( text ) + "'" );
  }
  mpz_class num( digits, 10 );
  mpz_class den;
  mpz_ui_pow_ui( den.get_mpz_t(), 10, frac );
  mpq_class q( negative ? mpz_class( -num ) : num, den );
  q.canonicalize();
  return q;
}

} // namespace

json to_json( Mmn const& net )
{
  json j;
  j["w"] = net.width();
  j["l"] = net.length();
  j["matchsticks"] = net.has_matrix() ? json( net.matchsticks().to_rows() ) : json( nullptr );
  return j;
}

Mmn mmn_from_json( json const& j )
{
  if ( !j.is_object() || !j.contains( "w" ) || !j.contains( "l" ) )
  {
    throw std::invalid_argument( "network JSON needs \"w\" and \"l\"" );
  }
  auto const w = j.at( "w" ).get<long long>();
  auto const l = j.at( "l" ).get<long long>();
  if ( w < 1 || l < 1 )
  {
    throw std::invalid_argument( "network JSON: w and l must be positive" );
  }
  std::optional<BinaryMatrix> matrix;
  if ( j.contains( "matchsticks" ) && !j.at( "matchsticks" ).is_null() )
  {
    matrix = BinaryMatrix::from_rows( j.at( "matchsticks" ).get<std::vector<std::vector<int>>>() );
  }
  return mmn_from_matrix( static_cast<std::size_t>( w ), static_cast<std::size_t>( l ), matrix );
}

json to_json( ReliabilityPolynomial const& f )
{
  std::vector<mpz_class> c = f.poly.coeffs();
  c.resize( std::max<std::size_t>( c.size(), 1 ) );
  return json{ { "n", f.size }, { "coeffs", decimal_strings( c ) } };
}

ReliabilityPolynomial polynomial_from_json( json const& j )
{
  return { j.at( "n" ).get<std::size_t>(), Polynomial( parse_decimals( j.at( "coeffs" ) ) ) };
}

json to_json( NForm const& x )
{
  return json{ { "n", x.size }, { "counts", decimal_strings( x.counts ) } };
}

NForm nform_from_json( json const& j )
{
  NForm x{ j.at( "n" ).get<std::size_t>(), parse_decimals( j.at( "counts" ) ) };
  if ( x.counts.size() != x.size + 1 )
  {
    throw std::invalid_argument( "N-form JSON needs n + 1 counts" );
  }
  return x;
}

json to_json( RationalInterval const& iv )
{
  return json::array( { rational_string( iv.lo ), rational_string( iv.hi ) } );
}

json to_json( ComparisonResult const& r )
{
  json j;
  j["verdict"] = to_string( r.verdict );
  j["strict"] = r.strict();
  json roots = json::array();
  for ( auto const& iv : r.interior_roots )
  {
    roots.push_back( to_json( iv ) );
  }
  j["interior_roots"] = roots;
  if ( r.verdict == Verdict::incomparable )
  {
    j["witness"] = { { "f_below_g", to_json( *r.f_below ) }, { "f_above_g", to_json( *r.f_above ) } };
  }
  return j;
}

json to_json( Report const& r )
{
  return json{ { "name", r.name },
               { "passed", r.passed() },
               { "checked", r.checked },
               { "violations", r.violations },
               { "notes", r.notes } };
}

json to_json( SquareMiddleStats const& s )
{
  return json{ { "m", s.m },
               { "total_compositions", s.total_compositions },
               { "square_compositions", s.square_compositions },
               { "middle_ranks", s.middle_ranks },
               { "middle_counts", s.middle_counts },
               { "square_middle_counts", s.square_middle_counts },
               { "ratio", s.ratio.get_str() },
               { "ratio_decimal", truncated_decimal( s.ratio, 6 ) } };
}

json to_json( Poset const& p )
{
  json j;
  j["order"] = to_string( p.order );
  j["m"] = p.m;
  json elements = json::array();
  for ( auto const& e : p.elements )
  {
    elements.push_back( { { "word", e.to_string() }, { "rank", e.rank() } } );
  }
  j["elements"] = elements;
  json covers = json::array();
  for ( auto const& [a, b] : p.covers )
  {
    covers.push_back( { p.elements[a].to_string(), p.elements[b].to_string() } );
  }
  j["covers"] = covers;
  if ( p.order == PosetOrder::sh )
  {
    std::vector<std::size_t> profile;
    for ( auto const& cls : p.rank_classes )
    {
      profile.push_back( cls.size() );
    }
    j["rank_profile"] = profile;
  }
  else
  {
    json inc = json::array();
    for ( auto const& [a, b] : p.incomparable )
    {
      inc.push_back( { p.elements[a].to_string(), p.elements[b].to_string() } );
    }
    j["incomparable_pairs"] = inc;
    json eq = json::array();
    for ( auto const& cls : p.equivalence_classes )
    {
      json group = json::array();
      for ( auto const i : cls )
      {
        group.push_back( p.elements[i].to_string() );
      }
      eq.push_back( group );
    }
    j["equivalence_classes"] = eq;
  }
  return j;
}

std::string truncated_decimal( mpq_class const& q, std::size_t digits )
{
  mpz_class scale;
  mpz_ui_pow_ui( scale.get_mpz_t(), 10, digits );
  mpz_class scaled = q.get_num() * scale;
  mpz_class t;
  mpz_tdiv_q( t.get_mpz_t(), scaled.get_mpz_t(), q.get_den().get_mpz_t() );
  bool const negative = t < 0;
  mpz_class const mag = abs( t );
  std::string s = mag.get_str();
  if ( s.size() <= digits )
  {
    s = std::string( digits + 1 - s.size(), '0' ) + s;
  }
  std::string whole = s.substr( 0, s.size() - digits );
  std::string frac = s.substr( s.size() - digits );
  while ( !frac.empty() && frac.back() == '0' )
  {
    frac.pop_back();
  }
  std::string out = ( negative ? "-" : "" ) + whole;
  if ( !frac.empty() )
  {
    out += "." + frac;
  }
  return out;
}

std::vector<mpq_class> parse_grid( std::string_view spec )
{
  auto const c1 = spec.find( ':' );
  auto const c2 = c1 == std::string_view::npos ? c1 : spec.find( ':', c1 + 1 );
  if ( c1 == std::string_view::npos || c2 == std::string_view::npos )
  {
    throw std::invalid_argument( "grid must look like start:stop:step" );
  }
  mpq_class const start = parse_rational( spec.substr( 0, c1 ) );
  mpq_class const stop = parse_rational( spec.substr( c1 + 1, c2 - c1 - 1 ) );
  mpq_class const step = parse_rational( spec.substr( c2 + 1 ) );
  if ( step <= 0 )
  {
    throw std::invalid_argument( "grid step must be positive" );
  }
  if ( stop < start )
  {
    throw std::invalid_argument( "grid stop precedes start" );
  }
  std::vector<mpq_class> out;
  for ( std::size_t k = 0;; ++k )
  {
    mpq_class x = start + step * static_cast<unsigned long>( k );
    x.canonicalize();
    if ( x > stop )
    {
      break;
    }
    out.push_back( x );
    if ( out.size() > 10'000'000 )
    {
      throw std::invalid_argument( "grid too fine" );
    }
  }
  return out;
}

std::string curve_csv( std::vector<std::string> const& labels, std::vector<Polynomial> const& curves,
                       std::vector<mpq_class> const& grid, std::size_t digits )
{
  std::ostringstream os;
  os << "p";
  for ( auto const& l : labels )
  {
    os << "," << l;
  }
  os << "\n";
  for ( auto const& x : grid )
  {
    os << truncated_decimal( x, digits );
    for ( auto const& f : curves )
    {
      os << "," << truncated_decimal( f.evaluate( x ), digits );
    }
    os << "\n";
  }
  return os.str();
}

std::string hasse_dot( Poset const& p )
{
  std::ostringstream os;
  os << "digraph hasse_" << to_string( p.order ) << "_m" << p.m << " {\n";
  os << "  rankdir=BT;\n  node [shape=box];\n";
  for ( std::size_t i = 0; i < p.elements.size(); ++i )
  {
    auto const& e = p.elements[i];
    std::string const w = e.length() == 0 ? "()" : e.to_string();
    os << "  n" << i << " [label=\"" << w << "\\nrank " << e.rank() << "\"];\n";
  }
  if ( p.order == PosetOrder::sh )
  {
    for ( std::size_t r = 0; r < p.rank_classes.size(); ++r )
    {
      os << "  { rank=same;";
      for ( auto const i : p.rank_classes[r] )
      {
        os << " n" << i << ";";
      }
      os << " }\n";
    }
  }
  for ( auto const& [a, b] : p.covers )
  {
    os << "  n" << a << " -> n" << b << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string rank_profile_csv( std::size_t m, std::vector<std::uint64_t> const& profile )
{
  std::ostringstream os;
  os << "m,rank,count\n";
  for ( std::size_t r = 0; r < profile.size(); ++r )
  {
    os << m << "," << r << "," << profile[r] << "\n";
  }
  return os.str();
}

std::string table_csv( std::vector<SquareMiddleStats> const& rows )
{
  auto joined = []( auto const& v ) {
    std::string s;
    for ( std::size_t i = 0; i < v.size(); ++i )
    {
      s += ( i ? ";" : "" ) + std::to_string( v[i] );
    }
    return s;
  };
  std::ostringstream os;
  os << "m,compositions,square,middle,square_middle,ratio\n";
  for ( auto const& r : rows )
  {
    os << r.m << "," << r.total_compositions << "," << r.square_compositions << "," << joined( r.middle_counts ) << ","
       << joined( r.square_middle_counts ) << "," << truncated_decimal( r.ratio, 6 ) << "\n";
  }
  return os.str();
}

} // namespace mmnrel::io
