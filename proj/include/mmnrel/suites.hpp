#pragma once

#include "caps.hpp"
#include "poset.hpp"

#include <string>
#include <vector>

namespace mmnrel::suites
{

/// oracle, duality, order, umr, hmr, hammock-bounds, table, chain, middle, antichain, asymptotics
std::vector<std::string> const& names();

bool exists( std::string const& name );

/// Runs one named suite at its default desk-scale parameters. Throws
/// std::invalid_argument for an unknown name.
std::vector<Report> run( std::string const& name, Caps const& caps = default_caps() );

} // namespace mmnrel::suites
