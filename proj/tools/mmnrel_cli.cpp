#include "mmnrel/caps.hpp"
#include "mmnrel/io.hpp"
#include "mmnrel/netcore.hpp"
#include "mmnrel/poset.hpp"
#include "mmnrel/relpoly.hpp"
#include "mmnrel/suites.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace mmnrel;
using json = io::json;

namespace
{

enum Exit
{
  ok = 0,
  verify_failed = 1,
  usage = 2,
  cap_exceeded = 3
};

struct UsageError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

/// Relative paths land under $MMNREL_OUTPUT_DIR when it is set.
std::filesystem::path resolve_output( std::string const& path )
{
  std::filesystem::path p( path );
  if ( p.is_relative() )
  {
    if ( char const* dir = std::getenv( "MMNREL_OUTPUT_DIR" ); dir && *dir )
    {
      p = std::filesystem::path( dir ) / p;
    }
  }
  return p;
}

void emit( std::string const& text, std::string const& path )
{
  if ( path.empty() || path == "-" )
  {
    std::cout << text;
    std::cout.flush();
    return;
  }
  auto const p = resolve_output( path );
  if ( p.has_parent_path() )
  {
    std::filesystem::create_directories( p.parent_path() );
  }
  std::ofstream out( p, std::ios::binary );
  if ( !out )
  {
    throw UsageError( "cannot open '" + p.string() + "' for writing" );
  }
  out << text;
}

std::string dump( json const& j )
{
  return j.dump( 2 ) + "\n";
}

std::string label( CompositionWord const& u )
{
  return u.length() == 0 ? "()" : u.to_string();
}

Caps apply_cap_overrides( std::vector<std::string> const& overrides, bool unsafe )
{
  Caps caps = default_caps();
  std::map<std::string, std::size_t Caps::*> const fields{ { "enumerate_bits", &Caps::enumerate_bits },
                                                          { "compose_m", &Caps::compose_m },
                                                          { "brute_force_n", &Caps::brute_force_n },
                                                          { "sh_poset_m", &Caps::sh_poset_m },
                                                          { "pointwise_m", &Caps::pointwise_m },
                                                          { "rank_profile_m", &Caps::rank_profile_m },
                                                          { "asymptotic_m", &Caps::asymptotic_m } };
  for ( auto const& o : overrides )
  {
    auto const eq = o.find( '=' );
    if ( eq == std::string::npos )
    {
      throw UsageError( "--cap expects NAME=VALUE, got '" + o + "'" );
    }
    auto const name = o.substr( 0, eq );
    auto const it = fields.find( name );
    if ( it == fields.end() )
    {
      throw UsageError( "unknown cap '" + name + "'" );
    }
    std::size_t value = 0;
    try
    {
      std::size_t used = 0;
      value = std::stoull( o.substr( eq + 1 ), &used );
      if ( used != o.size() - eq - 1 )
      {
        throw std::invalid_argument( "trailing characters" );
      }
    }
    catch ( std::exception const& )
    {
      throw UsageError( "cap '" + name + "' needs a non-negative integer" );
    }
    if ( value > default_caps().*( it->second ) && !unsafe )
    {
      throw UsageError( "raising cap '" + name + "' above its default needs --unsafe" );
    }
    caps.*( it->second ) = value;
  }
  return caps;
}

Mmn read_network( std::string const& path )
{
  std::ifstream in( path );
  if ( !in )
  {
    throw UsageError( "cannot read network file '" + path + "'" );
  }
  json j;
  try
  {
    in >> j;
  }
  catch ( json::exception const& e )
  {
    throw UsageError( "network file '" + path + "': " + e.what() );
  }
  return io::mmn_from_json( j );
}

std::string text_matrix( Mmn const& net )
{
  std::ostringstream os;
  os << net.width() << "x" << net.length();
  if ( net.is_all_series() )
  {
    os << " all-series";
  }
  else if ( net.is_all_parallel() )
  {
    os << " all-parallel";
  }
  os << "\n";
  if ( net.has_matrix() )
  {
    for ( auto const& row : net.matchsticks().to_rows() )
    {
      for ( std::size_t j = 0; j < row.size(); ++j )
      {
        os << ( j ? " " : "" ) << row[j];
      }
      os << "\n";
    }
  }
  return os.str();
}

// ---- subcommands ------------------------------------------------------------

struct MmnArgs
{
  std::string kind = "pos";
  std::size_t w = 2, l = 2;
  std::optional<std::string> word;
  bool take_dual = false;
  std::string format = "json";
  std::string out;
};

int run_mmn( MmnArgs const& a )
{
  Mmn net = a.word ? mmn_from_word( CompositionWord::parse( *a.word ) )
            : a.kind == "pos"          ? pos( a.w, a.l )
            : a.kind == "sop"          ? sop( a.w, a.l )
            : a.kind == "hammock"      ? hammock( a.w, a.l, HammockVariant::h )
                                       : hammock( a.w, a.l, HammockVariant::h_plus );
  if ( a.take_dual )
  {
    net = dual( net );
  }
  emit( a.format == "json" ? dump( io::to_json( net ) ) : text_matrix( net ), a.out );
  return ok;
}

struct RelArgs
{
  std::optional<std::string> word;
  std::optional<std::string> network;
  bool brute_force = false;
  std::string format = "json";
  std::string out;
  std::string grid;
  std::string curve_out;
  std::size_t digits = 12;
};

int run_rel( RelArgs const& a, Caps const& caps )
{
  ReliabilityPolynomial f;
  NForm x;
  std::string source;
  if ( a.network )
  {
    x = brute_force_rel( read_network( *a.network ), caps );
    f = nform_to_standard( x );
    source = "network " + *a.network;
  }
  else
  {
    auto const u = CompositionWord::parse( *a.word );
    source = "word " + label( u );
    if ( a.brute_force )
    {
      x = brute_force_rel( mmn_from_word( u ), caps );
      f = nform_to_standard( x );
    }
    else
    {
      f = compose_rel( u, caps );
      x = standard_to_nform( f );
    }
  }
  std::string method = a.network || a.brute_force ? "brute-force" : "composition";
  if ( a.format == "json" )
  {
    json j = io::to_json( f );
    j["source"] = source;
    j["method"] = method;
    j["nform"] = io::to_json( x )["counts"];
    emit( dump( j ), a.out );
  }
  else
  {
    std::ostringstream os;
    os << "n = " << f.size << "\n";
    os << "Rel(p) = " << f.poly.to_string() << "\n";
    os << "N =";
    for ( auto const& c : x.counts )
    {
      os << " " << c.get_str();
    }
    os << "\n";
    emit( os.str(), a.out );
  }
  if ( !a.grid.empty() )
  {
    auto const grid = io::parse_grid( a.grid );
    std::string const lbl = a.word ? ( a.word->empty() ? "()" : *a.word ) : "network";
    emit( io::curve_csv( { lbl }, { f.poly }, grid, a.digits ), a.curve_out.empty() ? "-" : a.curve_out );
  }
  return ok;
}

struct CompareArgs
{
  std::string first, second;
  std::string format = "text";
  std::string out;
};

int run_compare( CompareArgs const& a, Caps const& caps )
{
  auto const u = CompositionWord::parse( a.first );
  auto const v = CompositionWord::parse( a.second );
  if ( u.length() != v.length() )
  {
    throw UsageError( "words must have the same length (" + std::to_string( u.length() ) + " vs " +
                      std::to_string( v.length() ) + ")" );
  }
  check_cap( "pointwise_m", u.length(), caps.pointwise_m );
  auto const r = compare_on_unit_interval( compose_rel( u, caps ), compose_rel( v, caps ) );
  if ( a.format == "json" )
  {
    json j = io::to_json( r );
    j["f"] = label( u );
    j["g"] = label( v );
    emit( dump( j ), a.out );
    return ok;
  }
  std::ostringstream os;
  os << to_string( r.verdict ) << "\n";
  auto const iv = []( RationalInterval const& i ) {
    return i.is_point() ? i.lo.get_str() : "[" + i.lo.get_str() + ", " + i.hi.get_str() + "]";
  };
  for ( auto const& root : r.interior_roots )
  {
    os << "crossing " << iv( root ) << "\n";
  }
  if ( r.verdict == Verdict::incomparable )
  {
    os << "f < g on " << iv( *r.f_below ) << "\n";
    os << "f > g on " << iv( *r.f_above ) << "\n";
  }
  emit( os.str(), a.out );
  return ok;
}

struct PosetArgs
{
  std::size_t m = 4;
  std::string order = "sh";
  std::string format = "json";
  std::string out;
};

int run_poset( PosetArgs const& a, Caps const& caps )
{
  auto const order = a.order == "sh" ? PosetOrder::sh : PosetOrder::pointwise;
  auto const p = build_poset( a.m, order, caps );
  if ( a.format == "dot" )
  {
    emit( io::hasse_dot( p ), a.out );
  }
  else if ( a.format == "csv" )
  {
    if ( order == PosetOrder::sh )
    {
      std::vector<std::uint64_t> profile;
      for ( auto const& cls : p.rank_classes )
      {
        profile.push_back( cls.size() );
      }
      emit( io::rank_profile_csv( a.m, profile ), a.out );
    }
    else
    {
      std::string s = "lower,upper\n";
      for ( auto const& [lo, hi] : p.covers )
      {
        s += label( p.elements[lo] ) + "," + label( p.elements[hi] ) + "\n";
      }
      emit( s, a.out );
    }
  }
  else
  {
    emit( dump( io::to_json( p ) ), a.out );
  }
  return ok;
}

struct VerifyArgs
{
  std::vector<std::string> suites;
  std::string out;
};

int run_verify( VerifyArgs const& a, Caps const& caps )
{
  auto const selected = a.suites.empty() ? suites::names() : a.suites;
  for ( auto const& s : selected )
  {
    if ( !suites::exists( s ) )
    {
      throw UsageError( "unknown verification suite '" + s + "'" );
    }
  }
  json results = json::array();
  bool all = true;
  for ( auto const& s : selected )
  {
    auto const reports = suites::run( s, caps );
    bool passed = true;
    json rs = json::array();
    for ( auto const& r : reports )
    {
      passed = passed && r.passed();
      rs.push_back( io::to_json( r ) );
    }
    all = all && passed;
    results.push_back( { { "suite", s }, { "passed", passed }, { "reports", rs } } );
  }
  emit( dump( json{ { "passed", all }, { "suites", results } } ), a.out );
  return all ? ok : verify_failed;
}

struct CurveArgs
{
  std::vector<std::string> words;
  std::optional<std::size_t> m;
  bool all = false;
  std::string grid;
  std::size_t digits = 12;
  std::string out;
};

int run_curve( CurveArgs const& a, Caps const& caps )
{
  std::vector<CompositionWord> words;
  if ( a.all )
  {
    if ( !a.m )
    {
      throw UsageError( "--all needs -m" );
    }
    check_cap( "compose_m", *a.m, caps.compose_m );
    for ( std::uint64_t mask = 0; mask < ( std::uint64_t{ 1 } << *a.m ); ++mask )
    {
      words.emplace_back( *a.m, mask );
    }
  }
  else
  {
    if ( a.words.empty() )
    {
      throw UsageError( "curve needs --word or -m with --all" );
    }
    for ( auto const& w : a.words )
    {
      words.push_back( CompositionWord::parse( w ) );
    }
  }
  auto const grid = io::parse_grid( a.grid );
  std::vector<std::string> labels;
  std::vector<Polynomial> curves;
  for ( auto const& u : words )
  {
    labels.push_back( label( u ) );
    curves.push_back( compose_rel( u, caps ).poly );
  }
  emit( io::curve_csv( labels, curves, grid, a.digits ), a.out );
  return ok;
}

struct TableArgs
{
  std::vector<std::size_t> ms{ 4, 6, 8, 10, 12 };
  std::string format = "csv";
  std::string out;
};

int run_table( TableArgs const& a, Caps const& caps )
{
  std::vector<SquareMiddleStats> rows;
  for ( auto const m : a.ms )
  {
    rows.push_back( square_middle_stats( m, caps ) );
  }
  if ( a.format == "json" )
  {
    json j = json::array();
    for ( auto const& r : rows )
    {
      j.push_back( io::to_json( r ) );
    }
    emit( dump( j ), a.out );
  }
  else
  {
    emit( io::table_csv( rows ), a.out );
  }
  return ok;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "Matchstick minimal network reliability toolkit" };
  app.require_subcommand( 1, 1 );

  std::vector<std::string> cap_overrides;
  bool unsafe = false;
  app.add_option( "--cap", cap_overrides, "Override a cap, NAME=VALUE (repeatable)" );
  app.add_flag( "--unsafe", unsafe, "Allow caps above their desk-scale defaults" );

  MmnArgs mmn_args;
  auto* mmn_cmd = app.add_subcommand( "mmn", "Construct a network and print its matchstick matrix" );
  auto* kind_opt = mmn_cmd->add_option( "--kind", mmn_args.kind, "pos, sop, hammock or hammock-plus" )
                       ->check( CLI::IsMember( { "pos", "sop", "hammock", "hammock-plus" } ) );
  mmn_cmd->add_option( "-w,--width", mmn_args.w )->check( CLI::PositiveNumber );
  mmn_cmd->add_option( "-l,--length", mmn_args.l )->check( CLI::PositiveNumber );
  mmn_cmd->add_option( "--word", mmn_args.word, "Composition word instead of --kind" )->excludes( kind_opt );
  mmn_cmd->add_flag( "--dual", mmn_args.take_dual );
  mmn_cmd->add_option( "--format", mmn_args.format )->check( CLI::IsMember( { "json", "text" } ) );
  mmn_cmd->add_option( "-o,--output", mmn_args.out );

  RelArgs rel_args;
  auto* rel_cmd = app.add_subcommand( "rel", "Reliability polynomial of a word or a network file" );
  auto* word_opt = rel_cmd->add_option( "--word", rel_args.word, "Composition word, index 1 first; empty for the single device" )
                         ->expected( 0, 1 );
  auto* net_opt = rel_cmd->add_option( "--network", rel_args.network, "JSON network file" )->excludes( word_opt );
  rel_cmd->add_flag( "--brute-force", rel_args.brute_force, "Use state enumeration" );
  rel_cmd->add_option( "--format", rel_args.format )->check( CLI::IsMember( { "json", "text" } ) );
  rel_cmd->add_option( "-o,--output", rel_args.out );
  rel_cmd->add_option( "--grid", rel_args.grid, "Also emit a CSV curve over start:stop:step" );
  rel_cmd->add_option( "--curve-output", rel_args.curve_out );
  rel_cmd->add_option( "--digits", rel_args.digits );
  rel_cmd->callback( [&] {
    if ( !rel_args.word && !rel_args.network )
    {
      throw CLI::ValidationError( "rel", "needs --word or --network" );
    }
  } );
  (void)net_opt;

  CompareArgs cmp_args;
  auto* cmp_cmd = app.add_subcommand( "compare", "Exact pointwise comparison of two compositions on [0,1]" );
  cmp_cmd->add_option( "first", cmp_args.first )->required();
  cmp_cmd->add_option( "second", cmp_args.second )->required();
  cmp_cmd->add_option( "--format", cmp_args.format )->check( CLI::IsMember( { "json", "text" } ) );
  cmp_cmd->add_option( "-o,--output", cmp_args.out );

  PosetArgs poset_args;
  auto* poset_cmd = app.add_subcommand( "poset", "Hasse diagram of the compositions of length m" );
  poset_cmd->add_option( "-m", poset_args.m )->required();
  poset_cmd->add_option( "--order", poset_args.order )->check( CLI::IsMember( { "sh", "pointwise" } ) );
  poset_cmd->add_option( "--format", poset_args.format )->check( CLI::IsMember( { "json", "dot", "csv" } ) );
  poset_cmd->add_option( "-o,--output", poset_args.out );

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand( "verify", "Run verification suites (all when none named)" );
  verify_cmd->add_option( "suites", verify_args.suites );
  verify_cmd->add_option( "-o,--output", verify_args.out );

  CurveArgs curve_args;
  auto* curve_cmd = app.add_subcommand( "curve", "CSV of reliability curves over a p-grid" );
  curve_cmd->add_option( "--word", curve_args.words, "Composition word (repeatable)" )->allow_extra_args( false );
  curve_cmd->add_option( "-m", curve_args.m );
  curve_cmd->add_flag( "--all", curve_args.all );
  curve_cmd->add_option( "--grid", curve_args.grid )->required();
  curve_cmd->add_option( "--digits", curve_args.digits );
  curve_cmd->add_option( "-o,--output", curve_args.out );

  TableArgs table_args;
  auto* table_cmd = app.add_subcommand( "table", "Square and middle-rank counts per m" );
  table_cmd->add_option( "-m", table_args.ms )->delimiter( ',' );
  table_cmd->add_option( "--format", table_args.format )->check( CLI::IsMember( { "csv", "json" } ) );
  table_cmd->add_option( "-o,--output", table_args.out );

  try
  {
    app.parse( argc, argv );
  }
  catch ( CLI::CallForHelp const& e )
  {
    return app.exit( e );
  }
  catch ( CLI::CallForAllHelp const& e )
  {
    return app.exit( e );
  }
  catch ( CLI::ParseError const& e )
  {
    app.exit( e );
    return usage;
  }

  try
  {
    Caps const caps = apply_cap_overrides( cap_overrides, unsafe );
    if ( mmn_cmd->parsed() )
      return run_mmn( mmn_args );
    if ( rel_cmd->parsed() )
      return run_rel( rel_args, caps );
    if ( cmp_cmd->parsed() )
      return run_compare( cmp_args, caps );
    if ( poset_cmd->parsed() )
      return run_poset( poset_args, caps );
    if ( verify_cmd->parsed() )
      return run_verify( verify_args, caps );
    if ( curve_cmd->parsed() )
      return run_curve( curve_args, caps );
    if ( table_cmd->parsed() )
      return run_table( table_args, caps );
  }
  catch ( CapExceeded const& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return cap_exceeded;
  }
  catch ( UsageError const& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  }
  catch ( std::invalid_argument const& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  }
  catch ( std::exception const& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}
