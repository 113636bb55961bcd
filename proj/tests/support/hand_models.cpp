#include "support/hand_models.hpp"

namespace testsupport {

TableGroup d8_table() {
  // Symmetries of the square: r^i s^j with s r s = r^-1.
  // (r^i s^j)(r^k s^l) = r^(i + (-1)^j k) s^(j+l).
  TableGroup t;
  t.n = 8;
  t.mul.assign(8, std::vector<int>(8));
  auto idx = [](int i, int j) { return (i & 3) + 4 * (j & 1); };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 2; ++l) {
          const int rot = j == 0 ? i + k : i - k + 8;
          t.mul[static_cast<std::size_t>(idx(i, j))][static_cast<std::size_t>(idx(k, l))] =
              idx(rot, j + l);
        }
  return t;
}

TableGroup q8_table() {
  // Quaternion units; axis 0 is the real unit, axes 1..3 are i, j, k.
  TableGroup t;
  t.n = 8;
  t.mul.assign(8, std::vector<int>(8));
  // axis_mul[a][b] = {axis, sign} of the product of unit axes.
  struct AS {
    int axis;
    int sign;
  };
  const AS axis_mul[4][4] = {
      {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
      {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
      {{2, 1}, {3, -1}, {0, -1}, {1, 1}},
      {{3, 1}, {2, 1}, {1, -1}, {0, -1}},
  };
  auto idx = [](int axis, int sign) { return 2 * axis + (sign < 0 ? 1 : 0); };
  for (int a = 0; a < 4; ++a)
    for (int sa = 1; sa >= -1; sa -= 2)
      for (int b = 0; b < 4; ++b)
        for (int sb = 1; sb >= -1; sb -= 2) {
          const AS r = axis_mul[a][b];
          t.mul[static_cast<std::size_t>(idx(a, sa))][static_cast<std::size_t>(idx(b, sb))] =
              idx(r.axis, r.sign * sa * sb);
        }
  return t;
}

pgroup::GroupRef table_to_group(const TableGroup& t, const std::vector<int>& gens) {
  std::vector<std::vector<int>> actions;
  for (int g : gens) {
    std::vector<int> act(static_cast<std::size_t>(t.n));
    for (int x = 0; x < t.n; ++x)
      act[static_cast<std::size_t>(x)] = t.mul[static_cast<std::size_t>(x)][static_cast<std::size_t>(g)];
    actions.push_back(std::move(act));
  }
  return pgroup::ConcreteGroup::from_actions(2, std::move(actions), nullptr);
}

}  // namespace testsupport
