#pragma once

#include <map>
#include <vector>

namespace partchain {

/// Weakly decreasing sequence of non-negative integers, stored canonically
/// (trailing zeros stripped); the empty sequence is the zero partition.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    /// Number of boxes |lambda|.
    int weight() const;
    /// Number of nonzero parts.
    int rows() const { return static_cast<int>(parts_.size()); }
    /// i-th part (0-based), zero-padded beyond the last row.
    int part(int i) const;
    bool is_zero() const { return parts_.empty(); }

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// mu_i <= lambda_i for every row (Young diagram containment).
bool contains(const Partition& mu, const Partition& lambda);

/// All mu obtained from lambda by adding one box, length(mu) <= max_rows,
/// in decreasing lexicographic order. Throws if length(lambda) > max_rows.
std::vector<Partition> covers_up(const Partition& lambda, int max_rows);

/// All mu obtained from lambda by removing one box, in decreasing
/// lexicographic order; empty for the zero partition.
std::vector<Partition> covers_down(const Partition& lambda);

/// All partitions of the given weight with at most max_rows rows,
/// decreasing lexicographic order.
std::vector<Partition> enumerate_partitions(int weight, int max_rows);

/// counts[i] = number of parts equal to i among n rows (zero rows included).
struct Frequency {
    std::map<int, int> counts;

    int at(int i) const;
    bool operator==(const Frequency&) const = default;
};

/// Frequency representation of lambda padded to n rows; throws if
/// length(lambda) > n.
Frequency frequency(const Partition& lambda, int n);

/// True when a precedes b in decreasing lexicographic order (zero-padded).
bool dec_lex_before(const Partition& a, const Partition& b);

/// Point of the integer lattice N^n; coordinate order is significant.
class LatticePoint {
public:
    LatticePoint() = default;
    explicit LatticePoint(std::vector<int> coords);

    const std::vector<int>& coords() const { return coords_; }
    int weight() const;
    int size() const { return static_cast<int>(coords_.size()); }

    bool operator==(const LatticePoint&) const = default;

private:
    std::vector<int> coords_;
};

std::vector<LatticePoint> covers_up(const LatticePoint& point);
std::vector<LatticePoint> covers_down(const LatticePoint& point);

/// All points of N^n with the given coordinate sum, decreasing lexicographic order.
std::vector<LatticePoint> enumerate_lattice(int weight, int n);

bool dec_lex_before(const LatticePoint& a, const LatticePoint& b);

}  // namespace partchain
