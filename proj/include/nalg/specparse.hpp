#pragma once

#include <string>
#include <string_view>

#include "nalg/constructors.hpp"
#include "nalg/neutro.hpp"
#include "nalg/nstruct.hpp"

namespace nalg {

// Constructor grammar:
//   Ln(n,m)  Zn(t,u;n;family)  Sn(n)  An(n)  D2n(n)
//   Zadd(n)  Zmul(n)  Zmulx(n)  Ssym(n)  C(n)  N(<spec>)
// Parse errors carry the offending position.
Magma build_from_spec(std::string_view spec);

// '+'-joined constructor specs build a multi structure.
MultiStructure build_multi_from_spec(std::string_view spec);

bool spec_is_multi(std::string_view spec);

}  // namespace nalg
