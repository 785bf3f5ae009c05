#pragma once

#include <vector>

#include "vertexlab/rational.hpp"

namespace vxl {

// Weakly decreasing sequence of positive integers; the empty partition is {}.
struct Partition {
    std::vector<long> parts;

    long weight() const {
        long m = 0;
        for (long p : parts) m += p;
        return m;
    }
    long part(size_t j) const { return j < parts.size() ? parts[j] : 0; }
    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;
};

bool is_valid_partition(const Partition& k);

// All partitions of m, each once, in lexicographically descending order:
// partitions(4) = [4], [3,1], [2,2], [2,1,1], [1,1,1,1].
std::vector<Partition> partitions(long m);

// Transposed Young diagram.
Partition dual(const Partition& k);

// Frobenius coordinates xi|eta of a partition along the diagonal shifted
// by `bias` (bias 0 is the classical main-diagonal case):
//   xi_j  = k_j  - bias - j + 1  while positive,
//   eta_j = k'_j + bias - j      while nonnegative.
// xi is strictly decreasing positive, eta strictly decreasing nonnegative,
// len(eta) - len(xi) = bias, and the pair determines the partition given
// the bias.
struct FrobeniusCoords {
    std::vector<long> xi;
    std::vector<long> eta;
    long bias = 0;

    long diag_length() const { return static_cast<long>(std::min(xi.size(), eta.size())); }
    long sum() const;
    bool operator==(const FrobeniusCoords&) const = default;
};

FrobeniusCoords frobenius(const Partition& k);
FrobeniusCoords biased_frobenius(const Partition& k, long bias);

// Inverse: rebuild the partition from coordinates (bias taken from f).
Partition unfrobenius(const FrobeniusCoords& f);

// Number of squares on the diagonal {column - row = bias} of the diagram.
long diagonal_length(const Partition& k, long bias);

// Partitions encoded by part multiplicities: mult[j-1] copies of part j.
// Used for expanding exponentials of graded commuting operators.
struct MultiplicityPartition {
    std::vector<long> mult;  // mult[j-1] = number of parts equal to j
};
std::vector<MultiplicityPartition> partitions_by_multiplicity(long m);

}  // namespace vxl
