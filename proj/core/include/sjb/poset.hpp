#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sjb {

/// A point of a product of chains, stored as a mixed-radix code with
/// coordinate 1 in the least significant position. On B(n) the code is the
/// subset bitmask (element i <-> bit i-1), so code order is bitmask order
/// and, in general, colex order on coordinate tuples.
using Point = std::uint64_t;

/// The poset M(n, k_1..k_n) of n-tuples (x_1..x_n), 0 <= x_i <= k_i, ordered
/// componentwise. B(n) is the all-ones case.
class PosetSpec {
public:
    explicit PosetSpec(std::vector<int> bounds);
    static PosetSpec boolean(int n);

    int n() const { return static_cast<int>(bounds_.size()); }
    const std::vector<int>& bounds() const { return bounds_; }
    /// r(P) = k_1 + ... + k_n.
    int rank() const { return rank_; }
    /// prod (k_i + 1).
    std::uint64_t size() const { return size_; }
    bool is_boolean() const { return boolean_; }

    /// Code increment that bumps coordinate i (0-based) by one.
    std::uint64_t step(int i) const { return steps_[static_cast<std::size_t>(i)]; }
    int coord(Point p, int i) const;
    Point encode(std::span<const int> coords) const;
    std::vector<int> decode(Point p) const;
    int rank_of(Point p) const;

    /// "B(4)" or "M(3,2,2,1)".
    std::string name() const;

    bool operator==(const PosetSpec&) const = default;

private:
    std::vector<int> bounds_;
    std::vector<std::uint64_t> steps_;
    std::uint64_t size_ = 1;
    int rank_ = 0;
    bool boolean_ = false;
};

/// Points of rank i in increasing code order. Out-of-range i gives an empty
/// list rather than an error.
std::vector<Point> enumerate_rank(const PosetSpec& spec, int i);

/// |P_i| for i = 0..r(P), computed from the rank generating function
/// prod_i (1 + q + ... + q^{k_i}).
std::vector<std::uint64_t> rank_sizes(const PosetSpec& spec);

/// "{1,3}" on B(n) (empty set renders as "{}"), "(2,0)" otherwise.
std::string point_to_string(const PosetSpec& spec, Point p);

} // namespace sjb
