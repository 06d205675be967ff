#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace finreward {

// Set of multiple-choice option letters (A..Z), canonicalized to an
// uppercase sorted form. Multi-select answers like "ACD" compare as sets.
class OptionSet {
public:
    OptionSet() = default;

    // Parses any mix of letters, case-insensitive; separators are ignored.
    // Returns nullopt when no A..Z letter is present.
    static std::optional<OptionSet> parse(std::string_view text);

    void add(char letter);
    bool contains(char letter) const;
    bool empty() const { return bits_ == 0; }
    int size() const;

    // Canonical form: uppercase letters in alphabetical order, e.g. "ACD".
    std::string str() const;

    bool operator==(const OptionSet& other) const { return bits_ == other.bits_; }
    bool operator!=(const OptionSet& other) const { return bits_ != other.bits_; }

private:
    uint32_t bits_ = 0;
};

// Extracts the final answer set from a model completion.
//
// Extraction order:
//   1. the last "answer ... X"-style marker ("the correct answer is C",
//      "answer: ACD", "Answer is: B") followed by an uppercase letter run;
//   2. otherwise the last standalone token made solely of uppercase A..Z
//      letters (word-boundary delimited).
//
// Returns nullopt when neither pattern yields a letter; callers count that
// as an incorrect answer.
std::optional<OptionSet> extract_answer(std::string_view completion);

// answer check: extraction followed by set equality with the gold answer.
// Unextractable completions score 0.
int answer_check(std::string_view completion, const OptionSet& gold);

}  // namespace finreward
