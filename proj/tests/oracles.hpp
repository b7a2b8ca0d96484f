#pragma once

// Independent oracles for the test suite. These deliberately avoid the
// library's enumeration paths: chain counts come from rank-by-rank DP
// over the weak order, graphs from brute-force edge-subset filtering.

#include <cstdint>
#include <vector>

#include "tubing/graph.hpp"
#include "tubing/perm.hpp"

namespace oracle {

std::vector<tubing::Perm> all_perms(int n);

// Number of maximal chains from id to w inside the weak-order interval
// [id, w], by breadth-first DP over inversion-set containment.
std::uint64_t chain_count_dp(const tubing::Perm& w);

std::vector<tubing::SimpleGraph> all_filled_connected_graphs(int n);

}  // namespace oracle
