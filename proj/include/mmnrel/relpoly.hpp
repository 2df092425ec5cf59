#pragma once

#include "caps.hpp"
#include "netcore.hpp"
#include "polynomial.hpp"

#include <optional>
#include <vector>

namespace mmnrel
{

/// Reliability polynomial in the power basis together with the size n of the
/// network it belongs to (degree <= n).
struct ReliabilityPolynomial
{
  std::size_t size = 0;
  Polynomial poly;

  mpq_class operator()( mpq_class const& p ) const { return poly.evaluate( p ); }
  bool operator==( ReliabilityPolynomial const& ) const = default;
};

/// Rel = sum N_i p^i (1-p)^(n-i); N_i counts the i-subsets of devices that connect S to T.
struct NForm
{
  std::size_t size = 0;
  std::vector<mpz_class> counts; // size + 1 entries

  bool operator==( NForm const& ) const = default;
};

/// Closed rational interval [lo, hi]; lo == hi for an exact point.
struct RationalInterval
{
  mpq_class lo;
  mpq_class hi;

  mpq_class midpoint() const
  {
    mpq_class m = ( lo + hi ) / 2;
    m.canonicalize();
    return m;
  }
  bool is_point() const { return lo == hi; }
};

/// Real roots of a polynomial inside the open interval (0,1), sorted; each is
/// either an exact rational point or an open isolating interval (lo, hi)
/// holding exactly one simple root of the square-free part.
struct RootIsolation
{
  std::vector<RationalInterval> roots;
  /// Sign regions between consecutive roots (roots.size() + 1 of them), each
  /// with a closed witness interval strictly inside the gap and the sign there.
  std::vector<RationalInterval> regions;
  std::vector<int> region_signs;
};

enum class Verdict
{
  le,
  ge,
  eq,
  incomparable
};

char const* to_string( Verdict v );

/// Outcome of comparing f and g pointwise on [0,1]. LE means f <= g everywhere.
struct ComparisonResult
{
  Verdict verdict = Verdict::eq;
  /// Interior points where f and g cross or touch.
  std::vector<RationalInterval> interior_roots;
  /// INCOMPARABLE only: intervals inside (0,1) with f < g and f > g respectively.
  std::optional<RationalInterval> f_below;
  std::optional<RationalInterval> f_above;

  /// f < g (or f > g) strictly on all of (0,1).
  bool strict() const { return verdict != Verdict::eq && verdict != Verdict::incomparable && interior_roots.empty(); }
};

ReliabilityPolynomial base_series();
ReliabilityPolynomial base_parallel();

/// Rel(C^(u_1)) o ... o Rel(C^(u_m)); the empty word gives p.
ReliabilityPolynomial compose_rel( CompositionWord const& u, Caps const& caps = default_caps() );

/// Exhaustive oracle over all 2^n device states of graph_realization(net).
NForm brute_force_rel( Mmn const& net, Caps const& caps = default_caps() );

ReliabilityPolynomial nform_to_standard( NForm const& x );
/// Throws std::invalid_argument when degree(f) > n.
NForm standard_to_nform( Polynomial const& f, std::size_t n );
inline NForm standard_to_nform( ReliabilityPolynomial const& f ) { return standard_to_nform( f.poly, f.size ); }

/// Componentwise N_i(x) <= N_i(y); implies Rel(x) <= Rel(y) pointwise.
bool nform_dominates( NForm const& x, NForm const& y );

/// Exact sign structure of f on (0,1).
RootIsolation isolate_on_unit_interval( Polynomial const& f );

ComparisonResult compare_on_unit_interval( Polynomial const& f, Polynomial const& g );
inline ComparisonResult compare_on_unit_interval( ReliabilityPolynomial const& f, ReliabilityPolynomial const& g )
{
  return compare_on_unit_interval( f.poly, g.poly );
}

/// f' >= 0 on [0,1], decided exactly.
bool is_nondecreasing_on_unit_interval( Polynomial const& f );

/// Rel(N; p) + Rel(dual(N); 1-p) == 1 as a polynomial identity, both sides from the oracle.
bool dual_reliability_check( Mmn const& net, Caps const& caps = default_caps() );

} // namespace mmnrel
