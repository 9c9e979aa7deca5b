#include "hyperq/fixtures.hpp"

namespace hyperq {

Hypergroupoid pair_hqg(int n) {
  std::vector<CarrierSubset> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      CarrierSubset c;
      c.add(x);
      c.add(y);
      table[x * n + y] = c;
    }
  return Hypergroupoid(n, std::move(table));
}

Hypergroupoid total_hqg(int n) {
  std::vector<CarrierSubset> table(static_cast<std::size_t>(n) * n,
                                   CarrierSubset::full(n));
  return Hypergroupoid(n, std::move(table));
}

Hypergroupoid zgroup_hqg(int n) {
  std::vector<CarrierSubset> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      table[x * n + y] = CarrierSubset::single((x + y) % n);
  return Hypergroupoid(n, std::move(table));
}

Hypergroupoid block4_hqg() {
  const CarrierSubset b0{0b0011}, b1{0b1100};
  std::vector<CarrierSubset> table(16);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      table[x * 4 + y] = ((x / 2 + y / 2) % 2 == 0) ? b0 : b1;
  return Hypergroupoid(4, std::move(table));
}

}  // namespace hyperq
