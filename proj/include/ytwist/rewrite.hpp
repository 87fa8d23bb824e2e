/**
 * @file rewrite.hpp
 * @brief Normal forms under a presentation's oriented rewrite system, with
 *        optional certificate traces, plus overlap-based confluence checking.
 */
#pragma once

#include <atomic>
#include <mutex>
#include <unordered_map>

#include "presentation.hpp"

namespace ytwist {

struct CertStep {
    Word left;
    int rel_index;
    Word right;
    Scalar coeff;
};

struct rewrite_budget_exceeded : std::runtime_error {
    rewrite_budget_exceeded() : std::runtime_error("rewrite step budget exceeded (possible nontermination)") {}
};

struct non_confluent_presentation : std::invalid_argument {
    explicit non_confluent_presentation(const std::string& name)
        : std::invalid_argument("presentation '" + name + "' is not flagged confluent") {}
};

/// Rewriting engine for one presentation. Word-level normal forms are
/// memoized; the cache is guarded for concurrent use.
class Rewriter {
public:
    explicit Rewriter(const Presentation& p, std::uint64_t step_budget = 50'000'000)
        : p_(p), budget_(step_budget) {}

    const Presentation& presentation() const { return p_; }

    /// Leftmost occurrence of any rule left side in w; returns (pos, rule) or rule = -1.
    std::pair<size_t, int> find_redex(const Word& w) const {
        for (size_t i = 0; i < w.size(); ++i)
            for (size_t r = 0; r < p_.rules.size(); ++r) {
                const Word& l = p_.rules[r].lhs;
                if (l.size() <= w.size() - i && w.compare(i, l.size(), l) == 0)
                    return {i, static_cast<int>(r)};
            }
        return {0, -1};
    }

    /// Normal form of a single word as a 1-leg element.
    NCElement nf_word(const Word& w) const {
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = cache_.find(w);
            if (it != cache_.end()) return it->second;
        }
        auto [pos, r] = find_redex(w);
        NCElement result;
        if (r < 0) {
            result = NCElement::from_word(w);
        } else {
            if (++steps_ > budget_) throw rewrite_budget_exceeded();
            const RewriteRule& rule = p_.rules[static_cast<size_t>(r)];
            Word prefix = w.substr(0, pos);
            Word suffix = w.substr(pos + rule.lhs.size());
            result = NCElement::zero(1);
            for (const auto& [t, c] : rule.rhs.terms())
                result += nf_word(prefix + t[0] + suffix) * c;
        }
        std::lock_guard<std::mutex> lk(mu_);
        cache_.emplace(w, result);
        return result;
    }

    /// Word normal form with a certificate trace:
    /// word == nf + sum coeff * (left * relation * right) in the free algebra.
    NCElement nf_word_trace(const Word& w, std::vector<CertStep>& cert, const Scalar& scale) const {
        auto [pos, r] = find_redex(w);
        if (r < 0) return NCElement::from_word(w) * scale;
        if (++steps_ > budget_) throw rewrite_budget_exceeded();
        const RewriteRule& rule = p_.rules[static_cast<size_t>(r)];
        Word prefix = w.substr(0, pos);
        Word suffix = w.substr(pos + rule.lhs.size());
        cert.push_back({prefix, rule.rel_index, suffix, scale});
        NCElement out = NCElement::zero(1);
        for (const auto& [t, c] : rule.rhs.terms())
            out += nf_word_trace(prefix + t[0] + suffix, cert, scale * c);
        return out;
    }

    /// Leg-wise normal form of a multi-leg element.
    NCElement reduce(const NCElement& e) const {
        NCElement out(e.legs());
        for (const auto& [t, c] : e.terms()) {
            std::vector<NCElement> legnf;
            legnf.reserve(t.size());
            for (const auto& w : t) legnf.push_back(nf_word(w));
            // tensor-combine the per-leg results
            std::vector<TensorWord> acc{TensorWord{}};
            std::vector<Scalar> accc{c};
            for (const auto& ln : legnf) {
                std::vector<TensorWord> nacc;
                std::vector<Scalar> naccc;
                for (size_t i = 0; i < acc.size(); ++i)
                    for (const auto& [lt, lc] : ln.terms()) {
                        TensorWord tw = acc[i];
                        tw.push_back(lt[0]);
                        nacc.push_back(std::move(tw));
                        naccc.push_back(accc[i] * lc);
                    }
                acc = std::move(nacc);
                accc = std::move(naccc);
            }
            for (size_t i = 0; i < acc.size(); ++i) out.add_term(std::move(acc[i]), accc[i]);
        }
        return out;
    }

    /// Spec-facing normal form: requires the confluent flag unless
    /// allow_partial (partial systems still give sound zero-tests).
    NCElement normal_form(const NCElement& e, bool allow_partial = false) const {
        if (!p_.confluent && !allow_partial) throw non_confluent_presentation(p_.name);
        return reduce(e);
    }

    bool is_zero_mod_rules(const NCElement& e) const { return reduce(e).is_zero(); }

    std::uint64_t steps_used() const { return steps_; }

private:
    const Presentation& p_;
    std::uint64_t budget_;
    mutable std::atomic<std::uint64_t> steps_{0};
    mutable std::mutex mu_;
    mutable std::unordered_map<Word, NCElement, decltype([](const Word& w) { return hash_word(w); })> cache_;
};

struct OverlapFailure {
    Word word;
    int rule_a, rule_b;
    NCElement difference;
};

struct ConfluenceReport {
    int overlaps_checked = 0;
    std::vector<OverlapFailure> failures;
    bool ok() const { return failures.empty(); }
};

/// All overlap ambiguities of rule left sides up to degree_bound must
/// resolve to equal normal forms.
inline ConfluenceReport check_confluence(const Presentation& p, int degree_bound) {
    Rewriter rw(p);
    ConfluenceReport rep;
    auto resolve = [&](const Word& w, size_t pos_a, int ra, size_t pos_b, int rb) {
        const auto& A = p.rules[static_cast<size_t>(ra)];
        const auto& B = p.rules[static_cast<size_t>(rb)];
        NCElement via_a = NCElement::zero(1), via_b = NCElement::zero(1);
        {
            Word pre = w.substr(0, pos_a), suf = w.substr(pos_a + A.lhs.size());
            for (const auto& [t, c] : A.rhs.terms()) via_a += rw.nf_word(pre + t[0] + suf) * c;
        }
        {
            Word pre = w.substr(0, pos_b), suf = w.substr(pos_b + B.lhs.size());
            for (const auto& [t, c] : B.rhs.terms()) via_b += rw.nf_word(pre + t[0] + suf) * c;
        }
        ++rep.overlaps_checked;
        if (via_a != via_b) rep.failures.push_back({w, ra, rb, via_a - via_b});
    };
    for (size_t a = 0; a < p.rules.size(); ++a)
        for (size_t b = 0; b < p.rules.size(); ++b) {
            const Word& la = p.rules[a].lhs;
            const Word& lb = p.rules[b].lhs;
            // proper suffix of la equals proper prefix of lb
            for (size_t k = 1; k < la.size() && k < lb.size(); ++k) {
                if (la.compare(la.size() - k, k, lb, 0, k) != 0) continue;
                Word w = la + lb.substr(k);
                if (static_cast<int>(w.size()) > degree_bound) continue;
                resolve(w, 0, static_cast<int>(a), la.size() - k, static_cast<int>(b));
            }
            // lb contained strictly inside la
            if (a != b && lb.size() < la.size()) {
                for (size_t i = 0; i + lb.size() <= la.size(); ++i) {
                    if (la.compare(i, lb.size(), lb) != 0) continue;
                    if (static_cast<int>(la.size()) > degree_bound) continue;
                    resolve(la, 0, static_cast<int>(a), i, static_cast<int>(b));
                }
            }
        }
    return rep;
}

} // namespace ytwist
