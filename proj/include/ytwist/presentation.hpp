/**
 * @file presentation.hpp
 * @brief Algebra presentations: an ordered alphabet, defining relations
 *        (1-leg elements equal to zero), and an optional oriented rewrite
 *        system. Optional generator/parameter grading supports filtered
 *        ideal spans.
 */
#pragma once

#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ncelement.hpp"

namespace ytwist {

struct RewriteRule {
    Word lhs;       // single word
    NCElement rhs;  // 1-leg combination, strictly deglex-smaller words
    int rel_index;  // index of (lhs - rhs) in the relation list
};

class Presentation {
public:
    std::string name;
    Alphabet alphabet;
    std::vector<NCElement> relations; // 1-leg, each == 0 in the presented algebra
    std::vector<RewriteRule> rules;
    bool confluent = false;

    // Optional grading: grade of a term = sum of letter grades + eta_grade *
    // deg_eta(coeff) + xi_grade * deg_xi(coeff). Empty gen_grades = ungraded.
    std::vector<int> gen_grades;
    int eta_grade = 0;
    int xi_grade = 0;

    bool graded() const { return !gen_grades.empty(); }

    int word_grade(const Word& w) const {
        int g = 0;
        for (GenId c : w) g += gen_grades.at(static_cast<size_t>(c));
        return g;
    }

    /// Grade of a single scalar-weighted tensor word, if the scalar is
    /// (eta,xi)-homogeneous; nullopt otherwise.
    std::optional<int> term_grade(const TensorWord& t, const Scalar& c) const {
        if (!graded()) return std::nullopt;
        int base = 0;
        for (const auto& w : t) base += word_grade(w);
        std::optional<int> sg;
        auto scan = [&](const Poly& p, int sign) -> bool {
            for (const auto& [m, q] : p.terms()) {
                (void)q;
                int g = sign * (eta_grade * m.exp[VAR_ETA] + xi_grade * m.exp[VAR_XI]);
                if (sg && *sg != g) return false;
                sg = g;
            }
            return true;
        };
        // grade(num) - grade(den) must be uniform
        std::optional<int> gn, gd;
        for (const auto& [m, q] : c.num().terms()) {
            (void)q;
            int g = eta_grade * m.exp[VAR_ETA] + xi_grade * m.exp[VAR_XI];
            if (gn && *gn != g) return std::nullopt;
            gn = g;
        }
        for (const auto& [m, q] : c.den().terms()) {
            (void)q;
            int g = eta_grade * m.exp[VAR_ETA] + xi_grade * m.exp[VAR_XI];
            if (gd && *gd != g) return std::nullopt;
            gd = g;
        }
        (void)scan;
        if (!gn) gn = 0;
        if (!gd) gd = 0;
        return base + *gn - *gd;
    }

    /// Homogeneous grade of an element, if all terms agree.
    std::optional<int> element_grade(const NCElement& e) const {
        if (!graded() || e.is_zero()) return std::nullopt;
        std::optional<int> g;
        for (const auto& [t, c] : e.terms()) {
            auto tg = term_grade(t, c);
            if (!tg) return std::nullopt;
            if (g && *g != *tg) return std::nullopt;
            g = tg;
        }
        return g;
    }

    /// Registers the relation lhs - rhs and a rewrite rule oriented lhs -> rhs.
    void add_rule(const Word& lhs, const NCElement& rhs) {
        for (const auto& [t, c] : rhs.terms()) {
            (void)c;
            if (!word_less(t[0], lhs))
                throw std::invalid_argument("rewrite rule right side does not precede its left word");
        }
        NCElement rel = NCElement::from_word(lhs) - rhs;
        relations.push_back(rel);
        rules.push_back({lhs, rhs, static_cast<int>(relations.size()) - 1});
    }

    void add_relation(const NCElement& rel) { relations.push_back(rel); }

    NCElement gen(const std::string& gname) const { return NCElement::generator(alphabet.require(gname)); }
};

} // namespace ytwist
