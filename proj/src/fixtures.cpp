#include "actlab/fixtures.hpp"

#include "actlab/errors.hpp"

namespace actlab {
namespace fixtures {

MonoidPtr t1() {
  static MonoidPtr m = FiniteMonoid::validate("T1", {"1"}, {{0}});
  return m;
}

MonoidPtr c2() {
  static MonoidPtr m =
      FiniteMonoid::validate("C2", {"1", "g"}, {{0, 1}, {1, 0}});
  return m;
}

MonoidPtr n2() {
  static MonoidPtr m =
      FiniteMonoid::validate("N2", {"1", "0"}, {{0, 1}, {1, 1}});
  return m;
}

MonoidPtr lz3() {
  static MonoidPtr m = FiniteMonoid::validate(
      "LZ3", {"1", "a", "b"}, {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}});
  return m;
}

MonoidPtr rz3() {
  static MonoidPtr m = FiniteMonoid::validate(
      "RZ3", {"1", "a", "b"}, {{0, 1, 2}, {1, 1, 2}, {2, 1, 2}});
  return m;
}

MonoidPtr m3() {
  static MonoidPtr m = monogenic(2, 1);
  return m;
}

MonoidPtr monogenic(int index, int period) {
  if (index < 1 || period < 1)
    throw ValidationError("monogenic: index and period must be >= 1");
  const int n = index + period;
  if (n > 12) throw SizeGuardError("monogenic: order > 12");
  auto reduce = [&](int e) {
    return e < n ? e : index + (e - index) % period;
  };
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    labels.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x" + std::to_string(i)));
  std::vector<std::vector<Idx>> table(n, std::vector<Idx>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = reduce(i + j);
  return FiniteMonoid::validate(
      "Mono_" + std::to_string(index) + "_" + std::to_string(period),
      std::move(labels), table);
}

}  // namespace fixtures
}  // namespace actlab
