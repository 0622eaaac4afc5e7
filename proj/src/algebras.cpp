#include "liedeform/algebras.hpp"

#include <string>

#include "liedeform/errors.hpp"

namespace liedeform::algebras {

LieAlgebra r2() {
  LieAlgebraBuilder b("r2", {"x", "y"});
  b.set(0, 1, {{0, 1}});
  return b.build();
}

LieAlgebra r31() {
  LieAlgebraBuilder b("r31", 3);
  b.set(0, 1, {{1, 1}});
  b.set(0, 2, {{2, 1}});
  return b.build();
}

LieAlgebra heisenberg(std::size_t n) {
  if (n == 0) throw DimensionError("heisenberg algebra needs n >= 1");
  auto labels = default_labels(2 * n);
  labels.push_back("z");
  LieAlgebraBuilder b("heisenberg_" + std::to_string(2 * n + 1), labels);
  for (std::size_t i = 0; i < n; ++i) b.set(i, n + i, {{2 * n, 1}});
  return b.build();
}

LieAlgebra free2step3() {
  LieAlgebraBuilder b("free2step3", {"x1", "x2", "x3", "x12", "x13", "x23"});
  b.set(0, 1, {{3, 1}});
  b.set(0, 2, {{4, 1}});
  b.set(1, 2, {{5, 1}});
  return b.build();
}

LieAlgebra ex4dim() {
  LieAlgebraBuilder b("ex4dim", 4);
  b.set(0, 2, {{2, 1}});
  b.set(1, 3, {{3, 1}});
  return b.build();
}

LieAlgebra exndim(std::size_t n) {
  if (n < 4) throw DimensionError("exndim requires n >= 4");
  LieAlgebraBuilder b("exndim(" + std::to_string(n) + ")", n);
  for (std::size_t i = 3; i < n; ++i) b.set(0, i, {{i, 1}});
  b.set(1, 2, {{2, 1}});
  return b.build();
}

LieAlgebra sl2() {
  LieAlgebraBuilder b("sl2", {"e", "h", "f"});
  b.set(1, 0, {{0, 2}});
  b.set(1, 2, {{2, -2}});
  b.set(0, 2, {{1, 1}});
  return b.build();
}

LieAlgebra abelian(std::size_t n) {
  return LieAlgebraBuilder("abelian(" + std::to_string(n) + ")", n).build();
}

}  // namespace liedeform::algebras
