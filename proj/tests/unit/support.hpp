#pragma once

#include <string>

#include "quiver.hpp"
#include "representation.hpp"

namespace hsg::testing {

inline QuiverPtr a2() { return Quiver::parse("vertices 2\narrow a 1 2\n"); }
inline QuiverPtr a3() { return Quiver::parse("vertices 3\narrow a 1 2\narrow b 2 3\n"); }
inline QuiverPtr d4() { return Quiver::parse("vertices 4\narrow a 1 4\narrow b 2 4\narrow c 3 4\n"); }
inline QuiverPtr kronecker() { return Quiver::parse("vertices 2\narrow a 1 2\narrow b 1 2\n"); }

inline const PrimeField& f101() {
  static const PrimeField f{101};
  return f;
}

/// Homogeneous regular Kronecker module of dimension (1,1); lambda < 0 stands for infinity.
inline Representation kronecker_regular(QuiverPtr q, int lambda) {
  const PrimeField& f = f101();
  Matrix a(1, 1, f), b(1, 1, f);
  if (lambda < 0) {
    b(0, 0) = 1;
  } else {
    a(0, 0) = 1;
    b(0, 0) = f.reduce(lambda);
  }
  return Representation(std::move(q), {1, 1}, {a, b}, f);
}

}  // namespace hsg::testing
