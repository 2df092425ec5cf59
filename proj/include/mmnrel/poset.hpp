#pragma once

#include "caps.hpp"
#include "netcore.hpp"
#include "relpoly.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mmnrel
{

/// supp(u) subset of supp(v).
bool leq_S( CompositionWord const& u, CompositionWord const& v );

/// Equal weights; sorted supports compared componentwise.
bool leq_H( CompositionWord const& u, CompositionWord const& v );

/// The order generated by leq_S and leq_H: with supports sorted in decreasing
/// order, u <= v iff |u| <= |v| and the i-th largest element of supp(u) is at
/// most the i-th largest of supp(v). Coincides with leq_H at equal weight and
/// contains leq_S.
bool leq_SH( CompositionWord const& u, CompositionWord const& v );

std::size_t rank( CompositionWord const& u );

enum class PosetOrder
{
  sh,
  pointwise
};

char const* to_string( PosetOrder order );

/// Dense relation matrix over element indices.
class Relation
{
public:
  Relation() = default;
  explicit Relation( std::size_t n );

  std::size_t size() const noexcept { return n_; }
  bool test( std::size_t i, std::size_t j ) const { return ( rows_[i * words_ + j / 64] >> ( j % 64 ) ) & 1u; }
  void set( std::size_t i, std::size_t j ) { rows_[i * words_ + j / 64] |= std::uint64_t{ 1 } << ( j % 64 ); }

private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

struct Poset
{
  PosetOrder order = PosetOrder::sh;
  std::size_t m = 0;
  /// All 2^m words, element i has mask i.
  std::vector<CompositionWord> elements;
  /// leq.test(i, j): element i <= element j (reflexive).
  Relation leq;
  /// Hasse edges (lower, upper) sorted lexicographically.
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  /// rank_classes[r] = indices of rank r (SH order only).
  std::vector<std::vector<std::size_t>> rank_classes;
  /// Pointwise order: groups of distinct words with identical polynomials (size >= 2 only).
  std::vector<std::vector<std::size_t>> equivalence_classes;
  /// Pointwise order: unordered pairs with an INCOMPARABLE verdict, i < j.
  std::vector<std::pair<std::size_t, std::size_t>> incomparable;
};

Poset build_poset( std::size_t m, PosetOrder order, Caps const& caps = default_caps() );

/// Transitive reduction of a reflexive, transitive relation (equal elements are
/// never cover pairs).
std::vector<std::pair<std::size_t, std::size_t>> hasse_covers( Relation const& leq );

/// True iff following cover edges upward reproduces exactly the strict part of leq.
bool covers_generate_relation( Relation const& leq, std::vector<std::pair<std::size_t, std::size_t>> const& covers );

std::vector<std::pair<CompositionWord, CompositionWord>> incomparable_pairs( std::size_t m,
                                                                            Caps const& caps = default_caps() );

/// Maximum chain: k = 0; for j = 1..m, emit k + 2^i for i = 0..m-j, then k += 2^(m-j).
/// Integer bit 2^i is u_(i+1).
std::vector<CompositionWord> max_chain( std::size_t m );
std::vector<std::uint64_t> max_chain_integers( std::size_t m );

std::vector<std::size_t> middle_rank_indices( std::size_t m );

/// Closed-form middle element for m >= 4 (case on m mod 4); smaller m fall back to search.
CompositionWord middle_element( std::size_t m );

/// All words of length m with rank rho, ascending by mask.
std::vector<CompositionWord> antichain_at_rank( std::size_t m, std::size_t rho );

/// #P_0 .. #P_r; throws std::logic_error if the profile is not symmetric and unimodal.
std::vector<std::uint64_t> rank_profile( std::size_t m, Caps const& caps = default_caps() );
bool is_symmetric( std::vector<std::uint64_t> const& profile );
bool is_unimodal( std::vector<std::uint64_t> const& profile );

std::uint64_t dilworth_number( std::size_t m, Caps const& caps = default_caps() );

struct SquareMiddleStats
{
  std::size_t m = 0;
  std::uint64_t total_compositions = 0;
  std::uint64_t square_compositions = 0;
  std::vector<std::size_t> middle_ranks;
  std::vector<std::uint64_t> middle_counts;
  std::vector<std::uint64_t> square_middle_counts;
  /// sum(square_middle_counts) / square_compositions.
  mpq_class ratio;
};

SquareMiddleStats square_middle_stats( std::size_t m, Caps const& caps = default_caps() );

struct AsymptoticRatio
{
  std::size_t m = 0;
  std::uint64_t middle_count = 0;
  long double value = 0; // middle_count * m^(3/2) / 2^m
};

AsymptoticRatio asymptotic_middle_ratio( std::size_t m, Caps const& caps = default_caps() );
long double asymptotic_limit(); // sqrt(6/pi)

struct Report
{
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> violations;
  std::vector<std::string> notes;

  bool passed() const { return violations.empty(); }
};

Report verify_sh_implies_pointwise( std::size_t m, Caps const& caps = default_caps() );
Report verify_umr( std::size_t m, Caps const& caps = default_caps() );
Report verify_hmr_absent( std::size_t m, Caps const& caps = default_caps() );
Report verify_hammock_bounds( std::size_t m, Caps const& caps = default_caps() );

} // namespace mmnrel
