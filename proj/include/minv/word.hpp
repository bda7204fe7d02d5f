#ifndef MINV_WORD_HPP
#define MINV_WORD_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace minv {

/// Word in the generators X1..Xm: a sequence of 1-based generator indices.
/// The empty word is the identity.
using Word = std::vector<std::uint32_t>;

/// Length-then-lexicographic order; the canonical enumeration order that
/// fingerprint layouts and kernel bases rely on.
struct WordOrder {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// "1" for the empty word, else "X1*X2*...".
std::string word_to_string(const Word& w);

inline constexpr std::size_t default_word_budget = std::size_t{1} << 20;

/// All words of length <= max_len in canonical order.
/// Throws BudgetExceeded if the count would pass `budget_cap`.
std::vector<Word> enumerate_words(std::size_t m, std::size_t max_len,
                                  std::size_t budget_cap = default_word_budget);

} // namespace minv

#endif
