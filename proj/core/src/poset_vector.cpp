#include "sjb/poset_vector.hpp"

#include <algorithm>

namespace sjb {

PosetVector PosetVector::unit(Point p) {
    PosetVector v;
    v.terms_.push_back({p, Rational(1)});
    return v;
}

PosetVector PosetVector::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.point < b.point; });
    PosetVector v;
    v.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!v.terms_.empty() && v.terms_.back().point == t.point)
            v.terms_.back().coeff += t.coeff;
        else
            v.terms_.push_back(std::move(t));
        if (!v.terms_.empty() && sgn(v.terms_.back().coeff) == 0)
            v.terms_.pop_back();
    }
    return v;
}

Rational PosetVector::coeff_of(Point p) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), p,
                               [](const Term& t, Point q) { return t.point < q; });
    if (it != terms_.end() && it->point == p)
        return it->coeff;
    return Rational(0);
}

PosetVector& PosetVector::operator+=(const PosetVector& other) {
    std::vector<Term> out;
    out.reserve(terms_.size() + other.terms_.size());
    std::size_t a = 0, b = 0;
    while (a < terms_.size() || b < other.terms_.size()) {
        if (b == other.terms_.size() ||
            (a < terms_.size() && terms_[a].point < other.terms_[b].point)) {
            out.push_back(std::move(terms_[a++]));
        } else if (a == terms_.size() || other.terms_[b].point < terms_[a].point) {
            out.push_back(other.terms_[b++]);
        } else {
            Rational c = terms_[a].coeff + other.terms_[b].coeff;
            if (sgn(c) != 0)
                out.push_back({terms_[a].point, std::move(c)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

PosetVector& PosetVector::operator-=(const PosetVector& other) {
    return *this += other.operator-();
}

PosetVector PosetVector::operator-() const {
    PosetVector v;
    v.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        v.terms_.push_back({t.point, -t.coeff});
    return v;
}

PosetVector PosetVector::scaled(const Rational& c) const {
    PosetVector v;
    if (sgn(c) == 0)
        return v;
    v.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        v.terms_.push_back({t.point, t.coeff * c});
    return v;
}

bool PosetVector::operator==(const PosetVector& other) const {
    if (terms_.size() != other.terms_.size())
        return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].point != other.terms_[i].point || terms_[i].coeff != other.terms_[i].coeff)
            return false;
    return true;
}

bool PosetVector::integral() const {
    for (const auto& t : terms_)
        if (t.coeff.get_den() != 1)
            return false;
    return true;
}

Rational inner_product(const PosetVector& v, const PosetVector& w) {
    Rational acc(0);
    const auto& a = v.terms();
    const auto& b = w.terms();
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].point < b[j].point)
            ++i;
        else if (b[j].point < a[i].point)
            ++j;
        else
            acc += a[i++].coeff * b[j++].coeff;
    }
    return acc;
}

std::optional<int> homogeneous_rank(const PosetSpec& spec, const PosetVector& v) {
    if (v.is_zero())
        return std::nullopt;
    int r = spec.rank_of(v.terms().front().point);
    for (const auto& t : v.terms())
        if (spec.rank_of(t.point) != r)
            return std::nullopt;
    return r;
}

} // namespace sjb
