#ifndef OCTIC_VARSET_HPP
#define OCTIC_VARSET_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "octic/common.hpp"

namespace octic {

using VarId = std::uint8_t;

// Process-wide variable universe.  All ids are assigned in a fixed canonical
// order so that monomial comparisons, prints and serialized forms are stable
// across runs and thread counts.  The pre-declared names cover the parameter
// n, the coordinates x2..x8, the parity parameters t2..t9 and up to three
// levels of refinement primes (t5', t5'', ...), plus the stand-alone symbol m.
class vars {
 public:
  static VarId id(std::string_view name);           // throws on unknown name
  static bool known(std::string_view name);
  static const std::string& name(VarId id);
  static std::size_t count();

  // Convenience handles for the fixed part of the universe.
  static VarId m();
  static VarId n();
  static VarId x(int i);                 // i in 2..8
  static VarId t(int i, int primes = 0); // i in 2..9, primes in 0..3
};

}  // namespace octic

#endif
