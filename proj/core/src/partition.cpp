#include "partchain/partition.hpp"

#include "partchain/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace partchain {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) {
            throw DomainError("partition part is negative");
        }
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
            throw DomainError("partition parts are not weakly decreasing");
        }
    }
    while (!parts_.empty() && parts_.back() == 0) {
        parts_.pop_back();
    }
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    if (i < 0) {
        throw DomainError("negative row index");
    }
    return i < rows() ? parts_[static_cast<std::size_t>(i)] : 0;
}

bool contains(const Partition& mu, const Partition& lambda) {
    for (int i = 0; i < mu.rows(); ++i) {
        if (mu.part(i) > lambda.part(i)) {
            return false;
        }
    }
    return true;
}

std::vector<Partition> covers_up(const Partition& lambda, int max_rows) {
    if (max_rows < 1) {
        throw DomainError("max_rows must be positive");
    }
    if (lambda.rows() > max_rows) {
        throw DomainError("partition has more than max_rows rows");
    }
    std::vector<Partition> out;
    const int limit = std::min(lambda.rows() + 1, max_rows);
    for (int i = 0; i < limit; ++i) {
        if (i == 0 || lambda.part(i) < lambda.part(i - 1)) {
            std::vector<int> parts(lambda.parts());
            if (i < lambda.rows()) {
                parts[static_cast<std::size_t>(i)] += 1;
            } else {
                parts.push_back(1);
            }
            out.emplace_back(std::move(parts));
        }
    }
    // adding to an earlier row is lexicographically larger, so the order is
    // already decreasing lex
    return out;
}

std::vector<Partition> covers_down(const Partition& lambda) {
    std::vector<Partition> out;
    for (int i = lambda.rows() - 1; i >= 0; --i) {
        if (lambda.part(i) > lambda.part(i + 1)) {
            std::vector<int> parts(lambda.parts());
            parts[static_cast<std::size_t>(i)] -= 1;
            out.emplace_back(std::move(parts));
        }
    }
    return out;
}

namespace {

void enumerate_rec(int weight, int max_part, int rows_left, std::vector<int>& prefix,
                   std::vector<Partition>& out) {
    if (weight == 0) {
        out.emplace_back(prefix);
        return;
    }
    if (rows_left == 0) {
        return;
    }
    // ceil(weight / rows_left) is the smallest admissible leading part
    const int low = (weight + rows_left - 1) / rows_left;
    for (int p = std::min(weight, max_part); p >= low; --p) {
        prefix.push_back(p);
        enumerate_rec(weight - p, p, rows_left - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int weight, int max_rows) {
    if (weight < 0) {
        throw DomainError("negative weight");
    }
    if (max_rows < 1) {
        throw DomainError("max_rows must be positive");
    }
    std::vector<Partition> out;
    std::vector<int> prefix;
    enumerate_rec(weight, weight, max_rows, prefix, out);
    return out;
}

int Frequency::at(int i) const {
    const auto it = counts.find(i);
    return it == counts.end() ? 0 : it->second;
}

Frequency frequency(const Partition& lambda, int n) {
    if (lambda.rows() > n) {
        throw DomainError("partition has more than n rows");
    }
    Frequency freq;
    freq.counts[0] = n - lambda.rows();
    for (int p : lambda.parts()) {
        freq.counts[p] += 1;
    }
    return freq;
}

bool dec_lex_before(const Partition& a, const Partition& b) {
    const int rows = std::max(a.rows(), b.rows());
    for (int i = 0; i < rows; ++i) {
        if (a.part(i) != b.part(i)) {
            return a.part(i) > b.part(i);
        }
    }
    return false;
}

LatticePoint::LatticePoint(std::vector<int> coords) : coords_(std::move(coords)) {
    for (int c : coords_) {
        if (c < 0) {
            throw DomainError("lattice coordinate is negative");
        }
    }
}

int LatticePoint::weight() const {
    return std::accumulate(coords_.begin(), coords_.end(), 0);
}

std::vector<LatticePoint> covers_up(const LatticePoint& point) {
    std::vector<LatticePoint> out;
    for (int i = 0; i < point.size(); ++i) {
        std::vector<int> coords(point.coords());
        coords[static_cast<std::size_t>(i)] += 1;
        out.emplace_back(std::move(coords));
    }
    return out;
}

std::vector<LatticePoint> covers_down(const LatticePoint& point) {
    std::vector<LatticePoint> out;
    for (int i = point.size() - 1; i >= 0; --i) {
        if (point.coords()[static_cast<std::size_t>(i)] > 0) {
            std::vector<int> coords(point.coords());
            coords[static_cast<std::size_t>(i)] -= 1;
            out.emplace_back(std::move(coords));
        }
    }
    return out;
}

namespace {

void enumerate_lattice_rec(int weight, int slots, std::vector<int>& prefix,
                           std::vector<LatticePoint>& out) {
    if (slots == 0) {
        if (weight == 0) {
            out.emplace_back(prefix);
        }
        return;
    }
    if (slots == 1) {
        prefix.push_back(weight);
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int c = weight; c >= 0; --c) {
        prefix.push_back(c);
        enumerate_lattice_rec(weight - c, slots - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<LatticePoint> enumerate_lattice(int weight, int n) {
    if (weight < 0) {
        throw DomainError("negative weight");
    }
    if (n < 1) {
        throw DomainError("lattice dimension must be positive");
    }
    std::vector<LatticePoint> out;
    std::vector<int> prefix;
    enumerate_lattice_rec(weight, n, prefix, out);
    return out;
}

bool dec_lex_before(const LatticePoint& a, const LatticePoint& b) {
    return a.coords() > b.coords();
}

}  // namespace partchain
