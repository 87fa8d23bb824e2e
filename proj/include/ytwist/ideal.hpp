/**
 * @file ideal.hpp
 * @brief Two-sided ideal membership at a degree bound by exact sparse
 *        elimination over the span of relation multiples. Verdicts carry
 *        replayable certificates. Graded presentations get grade-filtered
 *        spans, which keeps the multiple sets small.
 */
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "rewrite.hpp"

namespace ytwist {

enum class Verdict { InIdeal, NotInIdeal, InconclusiveAtBound };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::InIdeal: return "in-ideal";
        case Verdict::NotInIdeal: return "not-in-ideal";
        case Verdict::InconclusiveAtBound: return "inconclusive-at-bound";
    }
    return "?";
}

struct MembershipCertificate {
    Verdict verdict = Verdict::InconclusiveAtBound;
    std::vector<CertStep> combination; // valid when verdict == InIdeal
    int degree_bound = 0;

    /// Replays the combination in the free algebra.
    NCElement replay(const Presentation& p) const {
        NCElement acc = NCElement::zero(1);
        for (const auto& s : combination) {
            NCElement rel = p.relations.at(static_cast<size_t>(s.rel_index));
            NCElement piece(1);
            piece = NCElement::from_word(s.left) * rel * NCElement::from_word(s.right);
            acc += piece * s.coeff;
        }
        return acc;
    }
};

struct bound_too_small : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Degree- (and optionally grade-) bounded echelon basis of the span of
/// { w1 * rel * w2 }. Rows are fully reduced against earlier rows and keyed
/// by their leading word; provenance tracks the originating multiples.
class IdealSpan {
public:
    IdealSpan(const Presentation& p, int degree_bound, std::optional<int> grade = std::nullopt,
              bool with_provenance = true)
        : p_(p), bound_(degree_bound), grade_(grade), with_prov_(with_provenance) {
        build();
    }

    const Presentation& presentation() const { return p_; }
    int degree_bound() const { return bound_; }
    size_t rank() const { return rows_.size(); }
    size_t multiples_generated() const { return multiples_.size(); }

    /// Reduce a 1-leg element; remainder returned, certificate combination
    /// appended (target == remainder + combination).
    NCElement reduce(const NCElement& e, std::vector<CertStep>* cert = nullptr) const {
        std::map<Word, Scalar, decltype(&word_greater)> work(&word_greater);
        for (const auto& [t, c] : e.terms()) work[t[0]] = c;
        NCElement rem = NCElement::zero(1);
        while (!work.empty()) {
            auto it = work.begin();
            Word lead = it->first;
            Scalar c = it->second;
            work.erase(it);
            if (c.is_zero()) continue;
            auto rit = rows_.find(lead);
            if (rit == rows_.end()) {
                rem.add_term({lead}, c);
                continue;
            }
            const Row& row = rit->second;
            // work -= c * row  (row lead coeff is 1, cancels `lead`)
            for (size_t i = 1; i < row.terms.size(); ++i) {
                auto& slot = work[row.terms[i].first];
                slot -= c * row.terms[i].second;
                if (slot.is_zero()) work.erase(row.terms[i].first);
            }
            if (cert && with_prov_)
                for (const auto& [mi, mc] : row.prov) {
                    const Multiple& m = multiples_[static_cast<size_t>(mi)];
                    cert->push_back({m.left, m.rel_index, m.right, c * mc});
                }
        }
        return rem;
    }

private:
    struct Multiple {
        Word left;
        int rel_index;
        Word right;
    };
    struct Row {
        std::vector<std::pair<Word, Scalar>> terms; // sorted descending, lead first, lead coeff 1
        std::vector<std::pair<int, Scalar>> prov;
    };

    static bool word_greater(const Word& a, const Word& b) { return word_cmp(a, b) > 0; }

    const Presentation& p_;
    int bound_;
    std::optional<int> grade_;
    bool with_prov_;
    std::vector<Multiple> multiples_;
    std::map<Word, Row, decltype(&word_greater)> rows_{&word_greater};

    void enumerate_words(int max_len, std::optional<int> max_grade, std::vector<Word>& out) const {
        // breadth-first in length; within a length, ascending lexicographic
        out.push_back(Word());
        std::vector<Word> frontier{Word()};
        for (int len = 1; len <= max_len; ++len) {
            std::vector<Word> next;
            for (const auto& w : frontier)
                for (size_t g = 0; g < p_.alphabet.size(); ++g) {
                    Word nw = w + Word(1, static_cast<GenId>(g));
                    if (max_grade && p_.graded() && p_.word_grade(nw) > *max_grade) continue;
                    next.push_back(nw);
                }
            for (const auto& w : next) out.push_back(w);
            frontier = std::move(next);
        }
    }

    void build() {
        // Relation data: degree and (if graded) homogeneous grade.
        struct RelInfo {
            int degree;
            std::optional<int> grade;
            bool usable;
        };
        std::vector<RelInfo> info;
        bool grading_ok = p_.graded();
        for (const auto& r : p_.relations) {
            RelInfo ri{r.degree(), std::nullopt, !r.is_zero()};
            if (p_.graded()) {
                ri.grade = p_.element_grade(r);
                if (!ri.grade) grading_ok = false;
            }
            info.push_back(ri);
        }
        std::optional<int> target_grade = (grade_ && grading_ok) ? grade_ : std::nullopt;

        // Words bounded by what any relation leaves available.
        int min_rel_deg = std::numeric_limits<int>::max();
        for (size_t i = 0; i < info.size(); ++i)
            if (info[i].usable) min_rel_deg = std::min(min_rel_deg, info[i].degree);
        if (min_rel_deg == std::numeric_limits<int>::max()) return;
        int max_word_len = std::max(0, bound_ - min_rel_deg);
        std::vector<Word> words;
        enumerate_words(max_word_len, target_grade, words);

        // Generate multiples in a deterministic order: by total degree, then
        // relation index, then word pair.
        std::vector<std::tuple<int, int, Word, Word>> plan;
        for (size_t ri = 0; ri < p_.relations.size(); ++ri) {
            if (!info[ri].usable) continue;
            for (const auto& l : words) {
                int dl = static_cast<int>(l.size());
                if (dl + info[ri].degree > bound_) continue;
                for (const auto& r : words) {
                    int d = dl + info[ri].degree + static_cast<int>(r.size());
                    if (d > bound_) continue;
                    if (target_grade) {
                        int g = p_.word_grade(l) + *info[ri].grade + p_.word_grade(r);
                        if (g != *target_grade) continue;
                    }
                    plan.emplace_back(d, static_cast<int>(ri), l, r);
                }
            }
        }
        std::stable_sort(plan.begin(), plan.end(), [](const auto& a, const auto& b) {
            if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
            if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
            if (int c = word_cmp(std::get<2>(a), std::get<2>(b))) return c < 0;
            return word_cmp(std::get<3>(a), std::get<3>(b)) < 0;
        });

        for (const auto& [d, ri, l, r] : plan) {
            (void)d;
            NCElement m = NCElement::from_word(l) * p_.relations[static_cast<size_t>(ri)] *
                          NCElement::from_word(r);
            int mi = -1;
            if (with_prov_) {
                multiples_.push_back({l, ri, r});
                mi = static_cast<int>(multiples_.size()) - 1;
            }
            insert_row(m, mi);
        }
    }

    void insert_row(const NCElement& e, int multiple_index) {
        std::map<Word, Scalar, decltype(&word_greater)> work(&word_greater);
        for (const auto& [t, c] : e.terms()) work[t[0]] = c;
        std::vector<std::pair<int, Scalar>> prov;
        if (with_prov_ && multiple_index >= 0) prov.push_back({multiple_index, Scalar(1)});

        while (!work.empty()) {
            auto it = work.begin();
            if (it->second.is_zero()) { work.erase(it); continue; }
            Word lead = it->first;
            auto rit = rows_.find(lead);
            if (rit == rows_.end()) {
                // new pivot: normalize lead coefficient to 1
                Scalar lc = it->second;
                Row row;
                row.terms.reserve(work.size());
                for (const auto& [w, c] : work)
                    if (!c.is_zero()) row.terms.push_back({w, c / lc});
                if (with_prov_) {
                    std::sort(prov.begin(), prov.end(),
                              [](const auto& a, const auto& b) { return a.first < b.first; });
                    for (const auto& [i, c] : prov) {
                        if (!row.prov.empty() && row.prov.back().first == i) row.prov.back().second += c / lc;
                        else row.prov.push_back({i, c / lc});
                    }
                    std::erase_if(row.prov, [](const auto& pr) { return pr.second.is_zero(); });
                }
                rows_.emplace(std::move(lead), std::move(row));
                return;
            }
            Scalar c = it->second;
            work.erase(it);
            const Row& row = rit->second;
            for (size_t i = 1; i < row.terms.size(); ++i) {
                auto& slot = work[row.terms[i].first];
                slot -= c * row.terms[i].second;
                if (slot.is_zero()) work.erase(row.terms[i].first);
            }
            if (with_prov_)
                for (const auto& [ri2, rc] : row.prov) prov.push_back({ri2, -c * rc});
        }
        // reduced to zero: dependent multiple, drop it
    }
};

/// Shared cache of spans per (degree bound, grade) for one presentation.
class IdealContext {
public:
    explicit IdealContext(const Presentation& p, bool with_provenance = true)
        : p_(p), with_prov_(with_provenance) {}

    const Presentation& presentation() const { return p_; }

    const IdealSpan& span(int degree_bound, std::optional<int> grade = std::nullopt) {
        auto key = std::make_pair(degree_bound, grade.value_or(std::numeric_limits<int>::min()));
        auto it = spans_.find(key);
        if (it == spans_.end())
            it = spans_.emplace(key, std::make_unique<IdealSpan>(p_, degree_bound, grade, with_prov_)).first;
        return *it->second;
    }

    /// Membership of a 1-leg element in the two-sided relation ideal, using
    /// multiples of total degree <= degree_bound. For graded presentations and
    /// homogeneous targets, the span is restricted to the target's grade.
    MembershipCertificate member(const NCElement& target, int degree_bound) {
        if (target.legs() != 1) throw std::invalid_argument("ideal membership target must be 1-leg");
        MembershipCertificate out;
        out.degree_bound = degree_bound;
        if (target.is_zero()) { out.verdict = Verdict::InIdeal; return out; }
        if (target.degree() > degree_bound)
            throw bound_too_small("ideal_member: degree bound " + std::to_string(degree_bound) +
                                  " below target degree " + std::to_string(target.degree()));
        auto grade = p_.element_grade(target);
        const IdealSpan& sp = span(degree_bound, grade);
        std::vector<CertStep> cert;
        NCElement rem = sp.reduce(target, with_prov_ ? &cert : nullptr);
        if (rem.is_zero()) {
            out.verdict = Verdict::InIdeal;
            out.combination = std::move(cert);
            return out;
        }
        if (p_.confluent) {
            // For confluent systems the rewrite certificate stays within the
            // target's degree, so the span at this bound is complete.
            out.verdict = Verdict::NotInIdeal;
            return out;
        }
        out.verdict = Verdict::InconclusiveAtBound;
        return out;
    }

    /// Multi-leg membership in the sum of per-leg ideals (I (x) A + A (x) I ...):
    /// reduce each leg in turn against the span; zero remainder certifies it.
    Verdict member_tensor(const NCElement& target, int degree_bound) {
        if (target.is_zero()) return Verdict::InIdeal;
        NCElement cur = target;
        for (int leg = 0; leg < target.legs(); ++leg) {
            cur = reduce_leg(cur, leg, degree_bound);
            if (cur.is_zero()) return Verdict::InIdeal;
        }
        return p_.confluent ? Verdict::NotInIdeal : Verdict::InconclusiveAtBound;
    }

    /// Reduce one leg of a multi-leg element modulo the span.
    NCElement reduce_leg(const NCElement& e, int leg, int degree_bound) {
        NCElement out(e.legs());
        // Group terms by the words of the other legs.
        std::map<TensorWord, NCElement, TensorWordLess> groups;
        for (const auto& [t, c] : e.terms()) {
            TensorWord key = t;
            key[static_cast<size_t>(leg)] = Word();
            auto it = groups.find(key);
            if (it == groups.end()) it = groups.emplace(key, NCElement::zero(1)).first;
            it->second.add_term({t[static_cast<size_t>(leg)]}, c);
        }
        for (auto& [key, legel] : groups) {
            auto grade = p_.element_grade(legel);
            int db = std::max(degree_bound, legel.degree());
            const IdealSpan& sp = span(db, grade);
            NCElement red = sp.reduce(legel);
            for (const auto& [t, c] : red.terms()) {
                TensorWord tw = key;
                tw[static_cast<size_t>(leg)] = t[0];
                out.add_term(std::move(tw), c);
            }
        }
        return out;
    }

private:
    const Presentation& p_;
    bool with_prov_;
    std::map<std::pair<int, int>, std::unique_ptr<IdealSpan>> spans_;
};

/// One-shot convenience wrapper.
inline MembershipCertificate ideal_member(const Presentation& p, const NCElement& target, int degree_bound,
                                          bool with_certificate = true) {
    IdealContext ctx(p, with_certificate);
    return ctx.member(target, degree_bound);
}

} // namespace ytwist
