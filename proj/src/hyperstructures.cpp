#include "hyperq/hyperstructures.hpp"

#include <string>

namespace hyperq {

std::vector<int> CarrierSubset::elements() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string CarrierSubset::str() const {
  if (empty()) return "{}";
  std::string out;
  for (int i : elements()) {
    if (!out.empty()) out += ',';
    out += std::to_string(i);
  }
  return out;
}

Hypergroupoid::Hypergroupoid(int order, std::vector<CarrierSubset> table)
    : order_(order), table_(std::move(table)) {
  if (order_ < 1 || order_ > 31)
    throw Error("hypergroupoid order must be in [1,31]");
  if (table_.size() != static_cast<std::size_t>(order_) * order_)
    throw Error("hyperoperation table has wrong size");
  const CarrierSubset g = CarrierSubset::full(order_);
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i].empty())
      throw Error("hyperoperation cell (" + std::to_string(i / order_) + "," +
                  std::to_string(i % order_) + ") is empty");
    if (!table_[i].subset_of(g))
      throw Error("hyperoperation cell contains out-of-range element");
  }
}

CarrierSubset Hypergroupoid::product(CarrierSubset a, CarrierSubset b) const {
  CarrierSubset out;
  for (int x = 0; x < order_; ++x) {
    if (!a.contains(x)) continue;
    for (int y = 0; y < order_; ++y)
      if (b.contains(y)) out = out | cell(x, y);
  }
  return out;
}

AxiomReport check_axioms(const Hypergroupoid &h) {
  AxiomReport r;
  r.is_hypergroupoid = true;  // construction already validated cells
  const int n = h.order();
  const CarrierSubset g = h.carrier();

  r.is_hyperquasigroup = true;
  for (int x = 0; x < n && r.is_hyperquasigroup; ++x) {
    if (h.product(CarrierSubset::single(x), g) != g ||
        h.product(g, CarrierSubset::single(x)) != g) {
      r.is_hyperquasigroup = false;
      r.reproducibility_witness = x;
    }
  }

  bool assoc = true;
  for (int x = 0; x < n && assoc; ++x)
    for (int y = 0; y < n && assoc; ++y)
      for (int z = 0; z < n && assoc; ++z) {
        const CarrierSubset lhs = h.product(CarrierSubset::single(x),
                                            h.cell(y, z));
        const CarrierSubset rhs = h.product(h.cell(x, y),
                                            CarrierSubset::single(z));
        if (lhs != rhs) {
          assoc = false;
          r.associativity_witness = {x, y, z};
        }
      }
  r.is_hypergroup = r.is_hyperquasigroup && assoc;

  r.is_regular = true;
  for (int x = 0; x < n && r.is_regular; ++x)
    for (int y = 0; y < n && r.is_regular; ++y)
      for (int z = 0; z < n && r.is_regular; ++z)
        if (h.cell(y, z).contains(x) &&
            (!h.cell(x, z).contains(y) || !h.cell(y, x).contains(z))) {
          r.is_regular = false;
          r.regularity_witness = {x, y, z};
        }
  return r;
}

SubHqVerdict is_sub_hyperquasigroup(const Hypergroupoid &h, CarrierSubset k) {
  if (k.empty()) throw EmptySubset("sub-hyperquasigroup candidate is empty");
  if (!k.subset_of(h.carrier()))
    throw Error("subset contains out-of-range element");
  SubHqVerdict v;
  const int n = h.order();
  for (int x = 0; x < n; ++x) {
    if (!k.contains(x)) continue;
    for (int y = 0; y < n; ++y) {
      if (!k.contains(y)) continue;
      if (!h.cell(x, y).subset_of(k)) {
        v.closure_witness = {x, y};
        return v;
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    if (!k.contains(a)) continue;
    if (h.product(CarrierSubset::single(a), k) != k ||
        h.product(k, CarrierSubset::single(a)) != k) {
      v.reproducibility_witness = a;
      return v;
    }
  }
  v.holds = true;
  return v;
}

std::vector<CarrierSubset> enumerate_subs(const Hypergroupoid &h, int limit) {
  if (h.order() > limit)
    throw OrderLimitExceeded("order " + std::to_string(h.order()) +
                             " exceeds enumeration limit " +
                             std::to_string(limit));
  std::vector<CarrierSubset> out;
  const std::uint32_t all = CarrierSubset::full(h.order()).bits;
  for (std::uint32_t m = 1; m <= all; ++m)
    if (is_sub_hyperquasigroup(h, {m}).holds) out.push_back({m});
  return out;
}

Hypergroupoid restrict(const Hypergroupoid &h, CarrierSubset k) {
  if (!is_sub_hyperquasigroup(h, k).holds)
    throw NotASubHyperquasigroup("subset " + k.str() +
                                 " is not a sub-hyperquasigroup");
  const std::vector<int> elems = k.elements();
  const int m = static_cast<int>(elems.size());
  std::vector<int> index(h.order(), -1);
  for (int i = 0; i < m; ++i) index[elems[i]] = i;
  std::vector<CarrierSubset> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      CarrierSubset cell;
      for (int z : h.cell(elems[i], elems[j]).elements()) cell.add(index[z]);
      table[i * m + j] = cell;
    }
  return Hypergroupoid(m, std::move(table));
}

}  // namespace hyperq
