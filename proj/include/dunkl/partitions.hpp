#pragma once

#include <optional>
#include <vector>

namespace dunklcore {

// Weakly decreasing tuple of nonnegative integers, kept at a fixed declared
// length (trailing zeros explicit).
using Partition = std::vector<int>;

bool is_partition(const Partition& m);

// Pads (or validates) m to exactly r parts.
Partition pad_partition(const Partition& m, int r);

int partition_weight(const Partition& m);

// All partitions of n with at most max_parts parts, as length-max_parts tuples,
// in reverse-lexicographic (descending) order: (n,0,..) first.
std::vector<Partition> partitions_of(int n, int max_parts);

// All partitions of weight <= n with at most max_parts parts, weight-major order.
std::vector<Partition> partitions_up_to(int n, int max_parts);

// Dominance order on equal-weight partitions: mu <= nu iff all prefix sums of mu
// are <= those of nu. Throws if the weights differ.
bool dominance_leq(const Partition& mu, const Partition& nu);

// m with part j (0-based) decremented, if the result is still a partition.
std::optional<Partition> decrement_part(const Partition& m, int j);
// m with part j (0-based) incremented, if the result is still a partition.
std::optional<Partition> increment_part(const Partition& m, int j);

// Number of distinct permutations of m, i.e. the value of the monomial
// symmetric polynomial m_mu at (1,...,1).
long distinct_permutation_count(const Partition& m);

}  // namespace dunklcore
