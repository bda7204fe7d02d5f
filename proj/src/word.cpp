#include "minv/word.hpp"

#include "minv/error.hpp"

namespace minv {

std::string word_to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += '*';
        s += "X" + std::to_string(w[i]);
    }
    return s;
}

std::vector<Word> enumerate_words(std::size_t m, std::size_t max_len, std::size_t budget_cap) {
    if (m < 1) fail(Err::InvalidInput, "enumerate_words needs m >= 1");
    // count words of length <= max_len, watching for overflow
    std::size_t count = 1, level = 1;
    for (std::size_t len = 1; len <= max_len; ++len) {
        if (level > budget_cap / m) fail(Err::BudgetExceeded, "word enumeration past cap");
        level *= m;
        count += level;
        if (count > budget_cap) fail(Err::BudgetExceeded, "word enumeration past cap");
    }

    std::vector<Word> out;
    out.reserve(count);
    out.emplace_back(); // the identity word
    std::size_t level_begin = 0, level_end = 1;
    for (std::size_t len = 1; len <= max_len; ++len) {
        for (std::size_t k = level_begin; k < level_end; ++k)
            for (std::uint32_t g = 1; g <= m; ++g) {
                Word w = out[k];
                w.push_back(g);
                out.push_back(std::move(w));
            }
        level_begin = level_end;
        level_end = out.size();
    }
    return out;
}

} // namespace minv
