#include "finreward/option_set.hpp"

#include <algorithm>
#include <cctype>

namespace finreward {

namespace {

bool is_upper_letter(char c) { return c >= 'A' && c <= 'Z'; }

char to_lower_ascii(char c) {
    return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

// Reads an uppercase letter run starting at or after `pos`, skipping
// punctuation commonly found between a marker and the letters (":", "*",
// "(", quotes, whitespace, and the word "is"). Letters may be separated by
// commas, spaces, or "and". Stops at the first character that cannot belong
// to the run.
std::optional<OptionSet> read_letter_run(std::string_view text, size_t pos) {
    // Skip filler between the marker and the first letter.
    while (pos < text.size()) {
        char c = text[pos];
        if (c == ' ' || c == '\t' || c == ':' || c == '*' || c == '(' ||
            c == '"' || c == '\'' || c == '=' || c == '-' || c == '\n') {
            ++pos;
            continue;
        }
        // the word "is" (any case) directly after "answer"
        if ((c == 'i' || c == 'I') && pos + 1 < text.size() &&
            (text[pos + 1] == 's' || text[pos + 1] == 'S') &&
            (pos + 2 >= text.size() || !std::isalnum(static_cast<unsigned char>(text[pos + 2])))) {
            pos += 2;
            continue;
        }
        break;
    }
    if (pos >= text.size() || !is_upper_letter(text[pos])) return std::nullopt;

    OptionSet set;
    bool pending_sep = false;
    while (pos < text.size()) {
        char c = text[pos];
        if (is_upper_letter(c)) {
            // An uppercase letter followed by lowercase is the start of a
            // word ("Clearly"), not an option letter -- unless we already
            // collected letters, in which case the run ends here.
            if (pos + 1 < text.size() &&
                std::islower(static_cast<unsigned char>(text[pos + 1]))) {
                if (set.empty()) return std::nullopt;
                break;
            }
            set.add(c);
            pending_sep = false;
            ++pos;
            continue;
        }
        if (c == ',' || c == ' ') {
            if (pending_sep) break;  // two separators in a row ends the run
            pending_sep = true;
            ++pos;
            continue;
        }
        // "and" between letters: "A, C and D"
        if ((c == 'a' || c == 'A') && pos + 2 < text.size() &&
            to_lower_ascii(text[pos + 1]) == 'n' && to_lower_ascii(text[pos + 2]) == 'd') {
            pos += 3;
            pending_sep = false;
            continue;
        }
        break;
    }
    if (set.empty()) return std::nullopt;
    return set;
}

}  // namespace

std::optional<OptionSet> OptionSet::parse(std::string_view text) {
    OptionSet set;
    for (char c : text) {
        char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        if (is_upper_letter(u)) set.add(u);
    }
    if (set.empty()) return std::nullopt;
    return set;
}

void OptionSet::add(char letter) {
    if (is_upper_letter(letter)) bits_ |= 1u << (letter - 'A');
}

bool OptionSet::contains(char letter) const {
    if (!is_upper_letter(letter)) return false;
    return (bits_ >> (letter - 'A')) & 1u;
}

int OptionSet::size() const {
    int n = 0;
    for (uint32_t b = bits_; b; b >>= 1) n += static_cast<int>(b & 1u);
    return n;
}

std::string OptionSet::str() const {
    std::string out;
    for (char c = 'A'; c <= 'Z'; ++c) {
        if (contains(c)) out.push_back(c);
    }
    return out;
}

std::optional<OptionSet> extract_answer(std::string_view completion) {
    // Pass 1: last "answer"-marker that is followed by a letter run.
    std::optional<OptionSet> best;
    static constexpr std::string_view kMarker = "answer";
    for (size_t i = 0; i + kMarker.size() <= completion.size(); ++i) {
        bool match = true;
        for (size_t k = 0; k < kMarker.size(); ++k) {
            if (to_lower_ascii(completion[i + k]) != kMarker[k]) {
                match = false;
                break;
            }
        }
        if (!match) continue;
        if (auto run = read_letter_run(completion, i + kMarker.size())) best = run;
    }
    if (best) return best;

    // Pass 2: last standalone uppercase A..Z token.
    size_t i = 0;
    while (i < completion.size()) {
        if (!std::isalnum(static_cast<unsigned char>(completion[i]))) {
            ++i;
            continue;
        }
        size_t start = i;
        while (i < completion.size() && std::isalnum(static_cast<unsigned char>(completion[i]))) ++i;
        std::string_view token = completion.substr(start, i - start);
        if (std::all_of(token.begin(), token.end(), is_upper_letter)) {
            best = OptionSet::parse(token);
        }
    }
    return best;
}

int answer_check(std::string_view completion, const OptionSet& gold) {
    auto extracted = extract_answer(completion);
    if (!extracted) return 0;
    return *extracted == gold ? 1 : 0;
}

}  // namespace finreward
