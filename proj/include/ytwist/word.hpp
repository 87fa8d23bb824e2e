/**
 * @file word.hpp
 * @brief Alphabets and words of the free algebra. A word is a sequence of
 *        generator ids; the word order is degree-then-lexicographic on the
 *        generators' sort indices.
 */
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace ytwist {

using GenId = char32_t;
using Word = std::u32string; // each element is a GenId

class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::string name) : name_(std::move(name)) {}

    GenId add(const std::string& gen) {
        if (index_.count(gen)) throw std::invalid_argument("duplicate generator name: " + gen);
        GenId id = static_cast<GenId>(names_.size());
        names_.push_back(gen);
        index_[gen] = id;
        return id;
    }
    size_t size() const { return names_.size(); }
    const std::string& name_of(GenId g) const { return names_.at(static_cast<size_t>(g)); }
    std::optional<GenId> id_of(const std::string& gen) const {
        auto it = index_.find(gen);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    GenId require(const std::string& gen) const {
        auto g = id_of(gen);
        if (!g) throw std::invalid_argument("unknown generator '" + gen + "' in alphabet " + name_);
        return *g;
    }
    const std::string& name() const { return name_; }

private:
    std::string name_;
    std::vector<std::string> names_;
    std::map<std::string, GenId> index_;
};

inline int word_cmp(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    if (a < b) return -1;
    if (b < a) return 1;
    return 0;
}
inline bool word_less(const Word& a, const Word& b) { return word_cmp(a, b) < 0; }

inline std::uint64_t hash_word(const Word& w) {
    std::uint64_t h = 1099511628211ULL;
    for (auto g : w) h = hash_combine(h, static_cast<std::uint64_t>(g));
    return h;
}

/// One term index of a multi-leg element: one word per tensor leg.
using TensorWord = std::vector<Word>;

inline int tensor_word_cmp(const TensorWord& a, const TensorWord& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i)
        if (int c = word_cmp(a[i], b[i])) return c;
    return 0;
}

struct TensorWordLess {
    bool operator()(const TensorWord& a, const TensorWord& b) const { return tensor_word_cmp(a, b) < 0; }
};

inline std::uint64_t hash_tensor_word(const TensorWord& t) {
    std::uint64_t h = 0x811c9dc5ULL;
    for (const auto& w : t) h = hash_combine(h, hash_word(w));
    return h;
}

inline std::string word_to_string(const Word& w, const Alphabet& a) {
    if (w.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += " ";
        s += a.name_of(w[i]);
    }
    return s;
}

inline Word word_from_string(const std::string& s, const Alphabet& a) {
    Word w;
    std::string tok;
    auto flush = [&] {
        if (tok.empty()) return;
        if (tok != "1") w.push_back(a.require(tok));
        tok.clear();
    };
    for (char c : s) {
        if (c == ' ' || c == '\t') flush();
        else tok += c;
    }
    flush();
    return w;
}

} // namespace ytwist
