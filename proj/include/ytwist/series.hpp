/**
 * @file series.hpp
 * @brief Truncated formal series with NCElement coefficients. Univariate
 *        series carry one order index (a xi-power or an inverse power of a
 *        spectral variable); bivariate series carry two. Products truncate
 *        consistently: the order of a product entry is the sum of the factor
 *        orders.
 */
#pragma once

#include <functional>

#include "ncelement.hpp"

namespace ytwist {

using Normalizer = std::function<NCElement(const NCElement&)>;

class Series {
public:
    Series(int legs, int bound) : legs_(legs), bound_(bound) {}

    static Series unit(int legs, int bound) {
        Series s(legs, bound);
        s.set(0, NCElement::unit(legs));
        return s;
    }

    int legs() const { return legs_; }
    int bound() const { return bound_; }
    const std::map<int, NCElement>& entries() const { return coef_; }

    NCElement at(int k) const {
        auto it = coef_.find(k);
        return it == coef_.end() ? NCElement::zero(legs_) : it->second;
    }
    void set(int k, NCElement e) {
        if (k > bound_) return;
        if (e.is_zero()) coef_.erase(k);
        else coef_[k] = std::move(e);
    }
    void add(int k, const NCElement& e) {
        if (k > bound_) return;
        auto it = coef_.find(k);
        if (it == coef_.end()) { if (!e.is_zero()) coef_[k] = e; return; }
        it->second += e;
        if (it->second.is_zero()) coef_.erase(it);
    }
    bool is_zero() const { return coef_.empty(); }
    int min_order() const { return coef_.empty() ? bound_ + 1 : coef_.begin()->first; }

    Series operator+(const Series& o) const {
        Series r(legs_, std::min(bound_, o.bound_));
        for (const auto& [k, e] : coef_) r.add(k, e);
        for (const auto& [k, e] : o.coef_) r.add(k, e);
        return r;
    }
    Series operator-(const Series& o) const { return *this + (-o); }
    Series operator-() const {
        Series r(legs_, bound_);
        for (const auto& [k, e] : coef_) r.coef_[k] = -e;
        return r;
    }
    Series operator*(const Series& o) const {
        Series r(legs_, std::min(bound_, o.bound_));
        for (const auto& [ka, ea] : coef_) {
            if (ka > r.bound_) continue;
            for (const auto& [kb, eb] : o.coef_) {
                if (ka + kb > r.bound_) break;
                r.add(ka + kb, ea * eb);
            }
        }
        return r;
    }
    Series operator*(const Scalar& c) const {
        Series r(legs_, bound_);
        for (const auto& [k, e] : coef_) r.set(k, e * c);
        return r;
    }
    Series operator*(const NCElement& e) const {
        Series r(legs_, bound_);
        for (const auto& [k, a] : coef_) r.set(k, a * e);
        return r;
    }
    friend Series operator*(const NCElement& e, const Series& s) {
        Series r(s.legs_, s.bound_);
        for (const auto& [k, a] : s.coef_) r.set(k, e * a);
        return r;
    }

    bool operator==(const Series& o) const {
        if (legs_ != o.legs_) return false;
        int b = std::min(bound_, o.bound_);
        for (int k = 0; k <= b; ++k)
            if (at(k) != o.at(k)) return false;
        return true;
    }

    Series map_coeffs(const Normalizer& fn) const {
        Series r(legs_, bound_);
        for (const auto& [k, e] : coef_) r.set(k, fn(e));
        return r;
    }

    Series truncate(int new_bound) const {
        Series r(legs_, new_bound);
        for (const auto& [k, e] : coef_)
            if (k <= new_bound) r.coef_[k] = e;
        return r;
    }

    /// Multiply by the formal parameter to the k-th power: orders shift by k.
    Series shift_orders(int k) const {
        Series r(legs_, bound_);
        for (const auto& [j, e] : coef_)
            if (j + k <= bound_) r.coef_[j + k] = e;
        return r;
    }

    bool has_negative_orders() const { return !coef_.empty() && coef_.begin()->first < 0; }

    /// Inverse of a series with invertible order-0 entry c0 = c * unit word;
    /// computed order by order. Optional normalizer applied per product.
    Series inverse(const Normalizer& fn = nullptr) const {
        NCElement c0 = at(0);
        TensorWord unit_tw(static_cast<size_t>(legs_));
        if (c0.term_count() != 1 || c0.coeff(unit_tw).is_zero())
            throw std::domain_error("series inverse: order-0 entry is not a scalar multiple of the unit");
        Scalar c0inv = Scalar(1) / c0.coeff(unit_tw);
        Series inv(legs_, bound_);
        inv.set(0, NCElement::unit(legs_, c0inv));
        for (int n = 1; n <= bound_; ++n) {
            NCElement acc = NCElement::zero(legs_);
            for (int k = 1; k <= n; ++k) {
                NCElement a = at(k);
                if (a.is_zero()) continue;
                acc += a * inv.at(n - k);
            }
            if (fn) acc = fn(acc);
            inv.set(n, acc * (-c0inv));
        }
        return inv;
    }

    Series leg_permute(const std::vector<int>& perm) const {
        Series r(legs_, bound_);
        for (const auto& [k, e] : coef_) r.set(k, e.leg_permute(perm));
        return r;
    }
    Series flip() const { return leg_permute({1, 0}); }

private:
    int legs_;
    int bound_;
    std::map<int, NCElement> coef_;
};

/// Series in two order indices (e.g. u^-1 and v^-1, or u^-1 and xi).
/// Small negative orders are allowed (positive powers from clearing
/// denominators); truncation applies above the bounds only.
class BiSeries {
public:
    BiSeries(int legs, int bound1, int bound2) : legs_(legs), b1_(bound1), b2_(bound2) {}

    int legs() const { return legs_; }
    int bound1() const { return b1_; }
    int bound2() const { return b2_; }
    const std::map<std::pair<int, int>, NCElement>& entries() const { return coef_; }

    NCElement at(int a, int b) const {
        auto it = coef_.find({a, b});
        return it == coef_.end() ? NCElement::zero(legs_) : it->second;
    }
    void set(int a, int b, NCElement e) {
        if (a > b1_ || b > b2_) return;
        if (e.is_zero()) coef_.erase({a, b});
        else coef_[{a, b}] = std::move(e);
    }
    void add(int a, int b, const NCElement& e) {
        if (a > b1_ || b > b2_ || e.is_zero()) return;
        auto it = coef_.find({a, b});
        if (it == coef_.end()) { coef_[{a, b}] = e; return; }
        it->second += e;
        if (it->second.is_zero()) coef_.erase(it);
    }
    bool is_zero() const { return coef_.empty(); }

    static BiSeries unit(int legs, int b1, int b2) {
        BiSeries s(legs, b1, b2);
        s.set(0, 0, NCElement::unit(legs));
        return s;
    }

    BiSeries operator+(const BiSeries& o) const {
        BiSeries r(legs_, std::min(b1_, o.b1_), std::min(b2_, o.b2_));
        for (const auto& [k, e] : coef_) r.add(k.first, k.second, e);
        for (const auto& [k, e] : o.coef_) r.add(k.first, k.second, e);
        return r;
    }
    BiSeries operator-() const {
        BiSeries r(legs_, b1_, b2_);
        for (const auto& [k, e] : coef_) r.coef_[k] = -e;
        return r;
    }
    BiSeries operator-(const BiSeries& o) const { return *this + (-o); }
    BiSeries operator*(const BiSeries& o) const {
        BiSeries r(legs_, std::min(b1_, o.b1_), std::min(b2_, o.b2_));
        for (const auto& [ka, ea] : coef_)
            for (const auto& [kb, eb] : o.coef_) {
                int a = ka.first + kb.first, b = ka.second + kb.second;
                if (a > r.b1_ || b > r.b2_) continue;
                r.add(a, b, ea * eb);
            }
        return r;
    }
    BiSeries operator*(const Scalar& c) const {
        BiSeries r(legs_, b1_, b2_);
        for (const auto& [k, e] : coef_) r.set(k.first, k.second, e * c);
        return r;
    }

    /// Multiply by the first/second series variable (shifts orders down by 1).
    BiSeries shift1(int amount) const {
        BiSeries r(legs_, b1_, b2_);
        for (const auto& [k, e] : coef_) r.set(k.first - amount, k.second, e);
        return r;
    }
    BiSeries shift2(int amount) const {
        BiSeries r(legs_, b1_, b2_);
        for (const auto& [k, e] : coef_) r.set(k.first, k.second - amount, e);
        return r;
    }

    BiSeries map_coeffs(const Normalizer& fn) const {
        BiSeries r(legs_, b1_, b2_);
        for (const auto& [k, e] : coef_) r.set(k.first, k.second, fn(e));
        return r;
    }

    bool operator==(const BiSeries& o) const {
        if (legs_ != o.legs_) return false;
        for (const auto& [k, e] : coef_) {
            if (k.first > o.b1_ || k.second > o.b2_) continue;
            if (o.at(k.first, k.second) != e) return false;
        }
        for (const auto& [k, e] : o.coef_) {
            if (k.first > b1_ || k.second > b2_) continue;
            if (at(k.first, k.second) != e) return false;
        }
        return true;
    }

private:
    int legs_;
    int b1_, b2_;
    std::map<std::pair<int, int>, NCElement> coef_;
};

/// Order-0 series holding one element.
inline Series elem_series(const NCElement& e, int bound) {
    Series s(e.legs(), bound);
    s.set(0, e);
    return s;
}

/// Tensor product of two 1-leg series: orders add, legs concatenate.
inline Series tensor(const Series& a, const Series& b) {
    int legs = a.legs() + b.legs();
    Series r(legs, std::min(a.bound(), b.bound()));
    for (const auto& [ka, ea] : a.entries())
        for (const auto& [kb, eb] : b.entries()) {
            if (ka + kb > r.bound()) continue;
            NCElement t(legs);
            for (const auto& [ta, ca] : ea.terms())
                for (const auto& [tb, cb] : eb.terms()) {
                    TensorWord tw = ta;
                    for (const auto& wv : tb) tw.push_back(wv);
                    t.add_term(std::move(tw), ca * cb);
                }
            r.add(ka + kb, t);
        }
    return r;
}

/// Embed a univariate series as a bivariate one along axis 1 or 2.
inline BiSeries embed_axis(const Series& s, int axis, int other_bound) {
    BiSeries r(s.legs(), axis == 1 ? s.bound() : other_bound, axis == 2 ? s.bound() : other_bound);
    for (const auto& [k, e] : s.entries()) {
        if (axis == 1) r.set(k, 0, e);
        else r.set(0, k, e);
    }
    return r;
}

} // namespace ytwist
