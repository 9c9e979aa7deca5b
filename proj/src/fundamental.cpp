#include "hyperq/fundamental.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hyperq {

ProductFamily finite_products(const Hypergroupoid &h) {
  std::set<std::uint32_t> seen;
  for (int x = 0; x < h.order(); ++x)
    seen.insert(CarrierSubset::single(x).bits);
  // Any parenthesized product is a product of two shorter ones, so the
  // pairwise-closure fixed point captures all of them.
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::uint32_t> snapshot(seen.begin(), seen.end());
    for (std::uint32_t u : snapshot)
      for (std::uint32_t v : snapshot) {
        const CarrierSubset p = h.product({u}, {v});
        if (seen.insert(p.bits).second) grew = true;
      }
  }
  ProductFamily fam;
  for (std::uint32_t u : seen) fam.subsets.push_back({u});
  return fam;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Partition beta_star(const Hypergroupoid &h) {
  const int n = h.order();
  UnionFind uf(n);
  for (CarrierSubset u : finite_products(h).subsets) {
    const std::vector<int> elems = u.elements();
    for (std::size_t i = 1; i < elems.size(); ++i)
      uf.unite(elems[0], elems[i]);
  }
  Partition p;
  p.class_of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    const int root = uf.find(x);
    if (p.class_of[root] == -1) {
      p.class_of[root] = static_cast<int>(p.classes.size());
      p.classes.emplace_back();
    }
    p.class_of[x] = p.class_of[root];
    p.classes[p.class_of[x]].push_back(x);
  }
  return p;
}

Quasigroup Quasigroup::from_mult(int order, std::vector<int> mult) {
  Quasigroup q;
  q.order = order;
  q.mult = std::move(mult);
  for (int x = 0; x < order; ++x) {
    std::vector<bool> row(order, false), col(order, false);
    for (int y = 0; y < order; ++y) {
      row[q.m(x, y)] = true;
      col[q.m(y, x)] = true;
    }
    for (int y = 0; y < order; ++y)
      if (!row[y] || !col[y])
        throw NotALatinSquare("row or column " + std::to_string(x) +
                              " is not a permutation");
  }
  q.ldiv.assign(order * order, 0);
  q.rdiv.assign(order * order, 0);
  for (int x = 0; x < order; ++x)
    for (int z = 0; z < order; ++z) {
      q.ldiv[x * order + q.m(x, z)] = z;   // x\(x·z) = z
      q.rdiv[q.m(z, x) * order + x] = z;   // (z·x)/x = z
    }
  return q;
}

FundamentalResult fundamental_quasigroup(const Hypergroupoid &h) {
  Partition p = beta_star(h);
  const int m = static_cast<int>(p.classes.size());
  std::vector<int> mult(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      CarrierSubset ci, cj;
      for (int x : p.classes[i]) ci.add(x);
      for (int x : p.classes[j]) cj.add(x);
      const CarrierSubset prod = h.product(ci, cj);
      const std::vector<int> elems = prod.elements();
      const int target = p.class_of[elems[0]];
      for (int z : elems)
        if (p.class_of[z] != target)
          throw IllDefinedProduct(
              i, j,
              "products of classes " + std::to_string(i) + " and " +
                  std::to_string(j) + " span multiple classes");
      mult[i * m + j] = target;
    }
  return {std::move(p), Quasigroup::from_mult(m, std::move(mult))};
}

IfshVerdict check_if_subquasigroup(const Quasigroup &q,
                                   const IntuitionisticFuzzySet &a) {
  if (a.size() != q.order) throw LengthMismatch("IFS/carrier size mismatch");
  IfshVerdict v;
  struct Op {
    const char *name;
    int (Quasigroup::*fn)(int, int) const;
  };
  const Op ops[] = {{"mult", &Quasigroup::m},
                    {"ldiv", &Quasigroup::ld},
                    {"rdiv", &Quasigroup::rd}};
  for (const Op &op : ops)
    for (int x = 0; x < q.order; ++x)
      for (int y = 0; y < q.order; ++y) {
        const int z = (q.*op.fn)(x, y);
        if (std::min(a.mu[x], a.mu[y]) > a.mu[z]) {
          v.failed_condition = 1;
          v.witness = {x, y};
          v.detail = std::string("mu fails for ") + op.name + " at x=" +
                     std::to_string(x) + " y=" + std::to_string(y);
          return v;
        }
        if (a.lambda[z] > std::max(a.lambda[x], a.lambda[y])) {
          v.failed_condition = 2;
          v.witness = {x, y};
          v.detail = std::string("lambda fails for ") + op.name + " at x=" +
                     std::to_string(x) + " y=" + std::to_string(y);
          return v;
        }
      }
  v.holds = true;
  return v;
}

std::pair<FundamentalResult, IntuitionisticFuzzySet> pushforward(
    const Hypergroupoid &h, const IntuitionisticFuzzySet &a) {
  if (a.size() != h.order()) throw LengthMismatch("IFS/carrier size mismatch");
  FundamentalResult fr = fundamental_quasigroup(h);
  const int m = fr.quasigroup.order;
  FuzzySet mu(m), lambda(m);
  for (int c = 0; c < m; ++c) {
    Grade hi = Grade::zero(), lo = Grade::one();
    for (int x : fr.partition.classes[c]) {
      hi = std::max(hi, a.mu[x]);
      lo = std::min(lo, a.lambda[x]);
    }
    mu[c] = hi;
    lambda[c] = lo;
  }
  // max mu + min lambda <= max over the class of (mu + lambda) <= 1.
  IntuitionisticFuzzySet pushed = ifs_validate(std::move(mu), std::move(lambda));
  return {std::move(fr), std::move(pushed)};
}

}  // namespace hyperq
