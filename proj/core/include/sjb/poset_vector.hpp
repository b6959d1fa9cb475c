#pragma once

#include "sjb/poset.hpp"

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace sjb {

using Rational = mpq_class;

struct Term {
    Point point;
    Rational coeff;
};

/// Sparse exact-rational element of V(P). Terms are kept sorted by point
/// code with no zero coefficients, so equality and hashing are canonical.
class PosetVector {
public:
    PosetVector() = default;

    static PosetVector unit(Point p);
    /// Sorts, combines duplicates, and drops zeros.
    static PosetVector from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }
    /// 0 when p is not in the support.
    Rational coeff_of(Point p) const;

    PosetVector& operator+=(const PosetVector& other);
    PosetVector& operator-=(const PosetVector& other);
    PosetVector operator-() const;
    PosetVector scaled(const Rational& c) const;

    friend PosetVector operator+(PosetVector a, const PosetVector& b) { a += b; return a; }
    friend PosetVector operator-(PosetVector a, const PosetVector& b) { a -= b; return a; }

    bool operator==(const PosetVector& other) const;

    /// True when every coefficient has denominator 1.
    bool integral() const;

private:
    std::vector<Term> terms_; // sorted by point, no zeros
};

/// Standard inner product <X,Y> = delta(X,Y) extended bilinearly.
Rational inner_product(const PosetVector& v, const PosetVector& w);

/// Rank when all supporting points share it; nullopt for zero or mixed input.
std::optional<int> homogeneous_rank(const PosetSpec& spec, const PosetVector& v);

} // namespace sjb
