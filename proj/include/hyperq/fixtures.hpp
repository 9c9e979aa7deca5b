#ifndef HYPERQ_FIXTURES_HPP
#define HYPERQ_FIXTURES_HPP

#include "hyperq/hyperstructures.hpp"

namespace hyperq {

/// x∘y = {x, y}.
Hypergroupoid pair_hqg(int n);

/// x∘y = G.
Hypergroupoid total_hqg(int n);

/// x∘y = {(x+y) mod n}.
Hypergroupoid zgroup_hqg(int n);

/// Carrier {0,1,2,3}, blocks {0,1} and {2,3}; x∘y = block (b(x)+b(y)) mod 2.
Hypergroupoid block4_hqg();

}  // namespace hyperq

#endif
