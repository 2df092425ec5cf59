#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mmnrel
{

/// Desk-scale limits. Every exhaustive operation checks its cap before doing
/// any work and throws CapExceeded naming the cap.
struct Caps
{
  std::size_t enumerate_bits = 20;   // (w-1)(l-1) for enumerate_mmns
  std::size_t compose_m = 12;        // word length for compose_rel
  std::size_t brute_force_n = 24;    // device count for brute_force_rel
  std::size_t sh_poset_m = 13;       // build_poset with the SH order
  std::size_t pointwise_m = 8;       // build_poset / comparisons with the pointwise order
  std::size_t rank_profile_m = 20;   // rank_profile, dilworth_number, square_middle_stats
  std::size_t asymptotic_m = 24;     // asymptotic_middle_ratio
};

inline Caps const& default_caps()
{
  static Caps const caps{};
  return caps;
}

class CapExceeded : public std::runtime_error
{
public:
  CapExceeded( std::string cap, std::size_t requested, std::size_t limit )
      : std::runtime_error( "cap '" + cap + "' exceeded: requested " + std::to_string( requested ) +
                            ", limit " + std::to_string( limit ) ),
        cap_( std::move( cap ) )
  {
  }

  std::string const& cap() const noexcept { return cap_; }

private:
  std::string cap_;
};

inline void check_cap( char const* name, std::size_t requested, std::size_t limit )
{
  if ( requested > limit )
  {
    throw CapExceeded( name, requested, limit );
  }
}

} // namespace mmnrel
