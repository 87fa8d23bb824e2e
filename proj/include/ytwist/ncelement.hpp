/**
 * @file ncelement.hpp
 * @brief Linear combinations of tensor words over Scalar: the carrier of all
 *        algebra elements. Operations are pure; elements are values.
 */
#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "scalar.hpp"
#include "word.hpp"

namespace ytwist {

class NCElement {
public:
    using TermMap = std::map<TensorWord, Scalar, TensorWordLess>;

    NCElement() : legs_(1) {}
    explicit NCElement(int legs) : legs_(legs) {
        if (legs < 0) throw std::invalid_argument("negative leg count");
    }

    static NCElement zero(int legs = 1) { return NCElement(legs); }
    static NCElement unit(int legs = 1, Scalar c = Scalar(1)) {
        NCElement e(legs);
        e.add_term(TensorWord(static_cast<size_t>(legs)), c);
        return e;
    }
    static NCElement generator(GenId g, int legs = 1, int leg = 0) {
        NCElement e(legs);
        TensorWord t(static_cast<size_t>(legs));
        t[static_cast<size_t>(leg)] = Word(1, g);
        e.add_term(t, Scalar(1));
        return e;
    }
    static NCElement from_word(const Word& w) {
        NCElement e(1);
        e.add_term({w}, Scalar(1));
        return e;
    }
    static NCElement from_term(TensorWord t, Scalar c) {
        NCElement e(static_cast<int>(t.size()));
        e.add_term(std::move(t), std::move(c));
        return e;
    }

    int legs() const { return legs_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(TensorWord t, Scalar c) {
        if (c.is_zero()) return;
        if (static_cast<int>(t.size()) != legs_) throw std::invalid_argument("tensor word leg mismatch");
        auto it = terms_.find(t);
        if (it == terms_.end()) {
            terms_.emplace(std::move(t), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Scalar coeff(const TensorWord& t) const {
        auto it = terms_.find(t);
        return it == terms_.end() ? Scalar() : it->second;
    }

    /// Max over terms of the total word length across legs.
    int degree() const {
        int d = 0;
        for (const auto& [t, c] : terms_) {
            int s = 0;
            for (const auto& w : t) s += static_cast<int>(w.size());
            d = std::max(d, s);
        }
        return d;
    }

    NCElement operator-() const {
        NCElement r(legs_);
        for (const auto& [t, c] : terms_) r.terms_.emplace(t, -c);
        return r;
    }
    NCElement operator+(const NCElement& o) const {
        require_same_shape(o);
        NCElement r(*this);
        for (const auto& [t, c] : o.terms_) r.add_term(t, c);
        return r;
    }
    NCElement operator-(const NCElement& o) const { return *this + (-o); }
    NCElement& operator+=(const NCElement& o) {
        require_same_shape(o);
        for (const auto& [t, c] : o.terms_) add_term(t, c);
        return *this;
    }
    NCElement& operator-=(const NCElement& o) { return *this += (-o); }

    NCElement operator*(const Scalar& s) const {
        NCElement r(legs_);
        if (s.is_zero()) return r;
        for (const auto& [t, c] : terms_) r.terms_.emplace(t, c * s);
        return r;
    }
    NCElement& operator*=(const Scalar& s) { *this = *this * s; return *this; }

    /// Bilinear extension of leg-wise concatenation.
    NCElement operator*(const NCElement& o) const {
        require_same_shape(o);
        NCElement r(legs_);
        for (const auto& [ta, ca] : terms_)
            for (const auto& [tb, cb] : o.terms_) {
                TensorWord t(static_cast<size_t>(legs_));
                for (int i = 0; i < legs_; ++i) t[static_cast<size_t>(i)] = ta[static_cast<size_t>(i)] + tb[static_cast<size_t>(i)];
                r.add_term(std::move(t), ca * cb);
            }
        return r;
    }
    NCElement& operator*=(const NCElement& o) { *this = *this * o; return *this; }

    bool operator==(const NCElement& o) const { return legs_ == o.legs_ && terms_ == o.terms_; }
    bool operator!=(const NCElement& o) const { return !(*this == o); }

    /// Re-index legs: result leg i carries input leg perm[i].
    NCElement leg_permute(const std::vector<int>& perm) const {
        if (static_cast<int>(perm.size()) != legs_) throw std::invalid_argument("permutation arity mismatch");
        std::vector<bool> seen(static_cast<size_t>(legs_), false);
        for (int p : perm) {
            if (p < 0 || p >= legs_ || seen[static_cast<size_t>(p)]) throw std::invalid_argument("not a permutation");
            seen[static_cast<size_t>(p)] = true;
        }
        NCElement r(legs_);
        for (const auto& [t, c] : terms_) {
            TensorWord nt(static_cast<size_t>(legs_));
            for (int i = 0; i < legs_; ++i) nt[static_cast<size_t>(i)] = t[static_cast<size_t>(perm[static_cast<size_t>(i)])];
            r.add_term(std::move(nt), c);
        }
        return r;
    }

    /// Flip of a 2-leg element (the "21" operation).
    NCElement flip() const {
        if (legs_ != 2) throw std::invalid_argument("flip requires 2 legs");
        return leg_permute({1, 0});
    }

    /// Apply a homomorphism to one leg: each generator g of that leg is
    /// replaced by images(g), an element with image_legs legs (0 allowed:
    /// the leg is evaluated to a scalar and removed). Images are multiplied
    /// in word order; the image legs splice into the source leg's position.
    NCElement apply_leg_hom(int leg, int image_legs,
                            const std::function<const NCElement&(GenId)>& images) const {
        int out_legs = legs_ - 1 + image_legs;
        NCElement r(out_legs);
        for (const auto& [t, c] : terms_) {
            NCElement img = NCElement::unit(image_legs, Scalar(1));
            for (GenId g : t[static_cast<size_t>(leg)]) {
                const NCElement& gi = images(g);
                if (gi.legs() != image_legs) throw std::invalid_argument("image leg count mismatch");
                img *= gi;
            }
            for (const auto& [it, ic] : img.terms()) {
                TensorWord nt;
                nt.reserve(static_cast<size_t>(out_legs));
                for (int i = 0; i < leg; ++i) nt.push_back(t[static_cast<size_t>(i)]);
                for (const auto& wv : it) nt.push_back(wv);
                for (int i = leg + 1; i < legs_; ++i) nt.push_back(t[static_cast<size_t>(i)]);
                r.add_term(std::move(nt), c * ic);
            }
        }
        return r;
    }

    /// Concatenate leg a and leg b (a < b) into leg a, removing leg b:
    /// the multiplication map on those tensor factors.
    NCElement merge_legs(int a, int b) const {
        if (a >= b || b >= legs_) throw std::invalid_argument("merge_legs: bad legs");
        NCElement r(legs_ - 1);
        for (const auto& [t, c] : terms_) {
            TensorWord nt;
            nt.reserve(static_cast<size_t>(legs_ - 1));
            for (int i = 0; i < legs_; ++i) {
                if (i == b) continue;
                if (i == a) nt.push_back(t[static_cast<size_t>(a)] + t[static_cast<size_t>(b)]);
                else nt.push_back(t[static_cast<size_t>(i)]);
            }
            r.add_term(std::move(nt), c);
        }
        return r;
    }

    /// Insert a fresh empty leg at position `at` (tensoring with 1).
    NCElement insert_unit_leg(int at) const {
        NCElement r(legs_ + 1);
        for (const auto& [t, c] : terms_) {
            TensorWord nt;
            nt.reserve(static_cast<size_t>(legs_) + 1);
            for (int i = 0; i < at; ++i) nt.push_back(t[static_cast<size_t>(i)]);
            nt.push_back(Word());
            for (int i = at; i < legs_; ++i) nt.push_back(t[static_cast<size_t>(i)]);
            r.add_term(std::move(nt), c);
        }
        return r;
    }

    std::uint64_t hash() const {
        std::uint64_t h = 0xcbf29ce484222325ULL ^ static_cast<std::uint64_t>(legs_);
        for (const auto& [t, c] : terms_) {
            h = hash_combine(h, hash_tensor_word(t));
            h = hash_combine(h, c.hash());
        }
        return h;
    }

    std::string to_string(const std::vector<const Alphabet*>& alphabets) const {
        if (static_cast<int>(alphabets.size()) != legs_) throw std::invalid_argument("alphabet count mismatch");
        if (terms_.empty()) {
            std::string z = "0";
            for (int i = 0; i < legs_; ++i) z += " | 1";
            return z;
        }
        std::ostringstream os;
        bool first = true;
        for (const auto& [t, c] : terms_) {
            if (!first) os << "\n";
            first = false;
            os << c.to_string();
            for (int i = 0; i < legs_; ++i)
                os << " | " << word_to_string(t[static_cast<size_t>(i)], *alphabets[static_cast<size_t>(i)]);
        }
        return os.str();
    }

    /// Exchange format: one term per line, `coeff | leg1-word | leg2-word | ...`.
    static NCElement parse(const std::string& text, const std::vector<const Alphabet*>& alphabets) {
        NCElement r(static_cast<int>(alphabets.size()));
        std::istringstream is(text);
        std::string line;
        while (std::getline(is, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            std::vector<std::string> parts;
            size_t start = 0;
            while (true) {
                size_t bar = line.find('|', start);
                if (bar == std::string::npos) { parts.push_back(line.substr(start)); break; }
                parts.push_back(line.substr(start, bar - start));
                start = bar + 1;
            }
            if (parts.size() != alphabets.size() + 1)
                throw std::invalid_argument("exchange line has wrong number of legs: " + line);
            Scalar c = Scalar::parse(parts[0]);
            if (c.is_zero()) continue;
            TensorWord t;
            for (size_t i = 0; i < alphabets.size(); ++i)
                t.push_back(word_from_string(parts[i + 1], *alphabets[i]));
            r.add_term(std::move(t), c);
        }
        return r;
    }

private:
    int legs_;
    TermMap terms_;

    void require_same_shape(const NCElement& o) const {
        if (legs_ != o.legs_) throw std::invalid_argument("leg count mismatch between elements");
    }
};

inline NCElement operator*(const Scalar& s, const NCElement& e) { return e * s; }

} // namespace ytwist
