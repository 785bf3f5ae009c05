#include "vertexlab/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace vxl {

bool is_valid_partition(const Partition& k) {
    for (size_t j = 0; j < k.parts.size(); ++j) {
        if (k.parts[j] <= 0) return false;
        if (j > 0 && k.parts[j] > k.parts[j - 1]) return false;
    }
    return true;
}

static void enumerate(long remaining, long maxPart, Partition& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (long p = std::min(remaining, maxPart); p >= 1; --p) {
        cur.parts.push_back(p);
        enumerate(remaining - p, p, cur, out);
        cur.parts.pop_back();
    }
}

std::vector<Partition> partitions(long m) {
    if (m < 0) throw std::invalid_argument("partitions: negative weight");
    std::vector<Partition> out;
    Partition cur;
    enumerate(m, m == 0 ? 1 : m, cur, out);
    return out;
}

Partition dual(const Partition& k) {
    Partition d;
    if (k.parts.empty()) return d;
    long cols = k.parts[0];
    d.parts.resize(cols);
    for (long c = 1; c <= cols; ++c) {
        long cnt = 0;
        for (long p : k.parts)
            if (p >= c) ++cnt;
        d.parts[c - 1] = cnt;
    }
    return d;
}

long FrobeniusCoords::sum() const {
    long s = 0;
    for (long x : xi) s += x;
    for (long e : eta) s += e;
    return s;
}

long diagonal_length(const Partition& k, long bias) {
    long l = 0;
    for (size_t r = 1; r <= k.parts.size(); ++r) {
        long c = static_cast<long>(r) + bias;  // cell (r, c) sits on the diagonal
        if (c >= 1 && k.parts[r - 1] >= c) ++l;
    }
    return l;
}

FrobeniusCoords biased_frobenius(const Partition& k, long bias) {
    if (!is_valid_partition(k)) throw std::invalid_argument("biased_frobenius: invalid partition");
    FrobeniusCoords f;
    f.bias = bias;
    Partition kd = dual(k);
    for (long j = 1;; ++j) {
        long v = k.part(j - 1) - bias - j + 1;
        if (v <= 0) break;
        f.xi.push_back(v);
    }
    for (long j = 1;; ++j) {
        long v = kd.part(j - 1) + bias - j;
        if (v < 0) break;
        f.eta.push_back(v);
    }
    return f;
}

FrobeniusCoords frobenius(const Partition& k) { return biased_frobenius(k, 0); }

Partition unfrobenius(const FrobeniusCoords& f) {
    long bias = f.bias;
    // Row lengths from the arms, column legs filling in the remaining rows.
    std::vector<long> rows;
    for (size_t j = 1; j <= f.xi.size(); ++j)
        rows.push_back(f.xi[j - 1] + bias + static_cast<long>(j) - 1);
    // Column j (1-based, j <= len(eta)) reaches row eta_j - bias + j.
    long maxRow = static_cast<long>(rows.size());
    std::vector<long> colDepth(f.eta.size());
    for (size_t j = 1; j <= f.eta.size(); ++j) {
        colDepth[j - 1] = f.eta[j - 1] - bias + static_cast<long>(j);
        maxRow = std::max(maxRow, colDepth[j - 1]);
    }
    std::vector<long> full(maxRow, 0);
    for (size_t r = 0; r < rows.size(); ++r) full[r] = std::max(full[r], rows[r]);
    for (size_t j = 1; j <= colDepth.size(); ++j)
        for (long r = 1; r <= colDepth[j - 1]; ++r)
            full[r - 1] = std::max(full[r - 1], static_cast<long>(j));
    while (!full.empty() && full.back() == 0) full.pop_back();
    Partition k{full};
    if (!is_valid_partition(k))
        throw std::invalid_argument("unfrobenius: coordinates do not describe a partition");
    return k;
}

static void enumerate_mult(long remaining, long part, MultiplicityPartition& cur,
                           std::vector<MultiplicityPartition>& out) {
    if (part == 0) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    for (long c = 0; c * part <= remaining; ++c) {
        cur.mult[part - 1] = c;
        enumerate_mult(remaining - c * part, part - 1, cur, out);
    }
    cur.mult[part - 1] = 0;
}

std::vector<MultiplicityPartition> partitions_by_multiplicity(long m) {
    if (m < 0) throw std::invalid_argument("partitions_by_multiplicity: negative weight");
    if (m == 0) return {MultiplicityPartition{{}}};
    std::vector<MultiplicityPartition> out;
    MultiplicityPartition cur;
    cur.mult.assign(m, 0);
    enumerate_mult(m, m, cur, out);
    return out;
}

}  // namespace vxl
