#include "sjb/poset.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace sjb {

PosetSpec::PosetSpec(std::vector<int> bounds) : bounds_(std::move(bounds)) {
    if (bounds_.empty())
        throw std::invalid_argument("PosetSpec: n must be positive");
    steps_.resize(bounds_.size());
    boolean_ = true;
    unsigned __int128 sz = 1;
    for (std::size_t i = 0; i < bounds_.size(); ++i) {
        if (bounds_[i] < 0)
            throw std::invalid_argument("PosetSpec: bounds must be nonnegative");
        steps_[i] = static_cast<std::uint64_t>(sz);
        sz *= static_cast<unsigned>(bounds_[i] + 1);
        if (sz > (static_cast<unsigned __int128>(1) << 63))
            throw std::invalid_argument("PosetSpec: poset too large (more than 2^63 points)");
        rank_ += bounds_[i];
        boolean_ = boolean_ && bounds_[i] == 1;
    }
    size_ = static_cast<std::uint64_t>(sz);
}

PosetSpec PosetSpec::boolean(int n) {
    if (n < 1 || n > 63)
        throw std::invalid_argument("PosetSpec::boolean: need 1 <= n <= 63");
    return PosetSpec(std::vector<int>(static_cast<std::size_t>(n), 1));
}

int PosetSpec::coord(Point p, int i) const {
    return static_cast<int>((p / steps_[static_cast<std::size_t>(i)]) %
                            static_cast<std::uint64_t>(bounds_[static_cast<std::size_t>(i)] + 1));
}

Point PosetSpec::encode(std::span<const int> coords) const {
    if (coords.size() != bounds_.size())
        throw std::invalid_argument("encode: wrong arity");
    Point p = 0;
    for (std::size_t i = 0; i < bounds_.size(); ++i) {
        if (coords[i] < 0 || coords[i] > bounds_[i])
            throw std::invalid_argument("encode: coordinate out of range");
        p += static_cast<std::uint64_t>(coords[i]) * steps_[i];
    }
    return p;
}

std::vector<int> PosetSpec::decode(Point p) const {
    std::vector<int> coords(bounds_.size());
    for (std::size_t i = 0; i < bounds_.size(); ++i)
        coords[i] = coord(p, static_cast<int>(i));
    return coords;
}

int PosetSpec::rank_of(Point p) const {
    if (boolean_)
        return std::popcount(p);
    int r = 0;
    for (std::size_t i = 0; i < bounds_.size(); ++i)
        r += coord(p, static_cast<int>(i));
    return r;
}

std::string PosetSpec::name() const {
    std::ostringstream os;
    if (boolean_) {
        os << "B(" << n() << ")";
    } else {
        os << "M(" << n();
        for (int k : bounds_) os << "," << k;
        os << ")";
    }
    return os.str();
}

std::vector<Point> enumerate_rank(const PosetSpec& spec, int i) {
    std::vector<Point> out;
    if (i < 0 || i > spec.rank())
        return out;
    for (Point p = 0; p < spec.size(); ++p)
        if (spec.rank_of(p) == i)
            out.push_back(p);
    return out;
}

std::vector<std::uint64_t> rank_sizes(const PosetSpec& spec) {
    std::vector<std::uint64_t> poly{1};
    for (int k : spec.bounds()) {
        std::vector<std::uint64_t> next(poly.size() + static_cast<std::size_t>(k), 0);
        for (std::size_t d = 0; d < poly.size(); ++d)
            for (int e = 0; e <= k; ++e)
                next[d + static_cast<std::size_t>(e)] += poly[d];
        poly = std::move(next);
    }
    return poly;
}

std::string point_to_string(const PosetSpec& spec, Point p) {
    std::ostringstream os;
    if (spec.is_boolean()) {
        os << "{";
        bool first = true;
        for (int e = 1; e <= spec.n(); ++e) {
            if ((p >> (e - 1)) & 1u) {
                if (!first) os << ",";
                os << e;
                first = false;
            }
        }
        os << "}";
    } else {
        os << "(";
        for (int i = 0; i < spec.n(); ++i) {
            if (i) os << ",";
            os << spec.coord(p, i);
        }
        os << ")";
    }
    return os.str();
}

} // namespace sjb
