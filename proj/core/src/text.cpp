#include "fincot/text.hpp"

#include <algorithm>
#include <cctype>

namespace fincot::text {
namespace {

bool is_ascii_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// U+3000 encodes as E3 80 80.
bool is_ideographic_space_at(std::string_view s, std::size_t i) {
    return i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE3 &&
           static_cast<unsigned char>(s[i + 1]) == 0x80 &&
           static_cast<unsigned char>(s[i + 2]) == 0x80;
}

}  // namespace

std::string normalize_whitespace(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool pending_space = false;
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t advance = 1;
        bool space = false;
        if (is_ascii_space(s[i])) {
            space = true;
        } else if (is_ideographic_space_at(s, i)) {
            space = true;
            advance = 3;
        }
        if (space) {
            if (!out.empty()) pending_space = true;
        } else {
            if (pending_space) {
                out += ' ';
                pending_space = false;
            }
            out += s[i];
            if (advance > 1) out.append(s.substr(i + 1, advance - 1));
        }
        i += advance;
    }
    return out;
}

std::string to_lower_ascii(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
        return c < 0x80 ? static_cast<char>(std::tolower(c)) : static_cast<char>(c);
    });
    return out;
}

std::string normalize_key(std::string_view s) {
    return to_lower_ascii(normalize_whitespace(s));
}

bool is_blank(std::string_view s) {
    return normalize_whitespace(s).empty();
}

std::vector<uint32_t> decode_utf8(std::string_view s) {
    std::vector<uint32_t> cps;
    cps.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char b0 = static_cast<unsigned char>(s[i]);
        uint32_t cp = 0;
        std::size_t len = 0;
        if (b0 < 0x80) {
            cp = b0;
            len = 1;
        } else if ((b0 & 0xE0) == 0xC0) {
            cp = b0 & 0x1F;
            len = 2;
        } else if ((b0 & 0xF0) == 0xE0) {
            cp = b0 & 0x0F;
            len = 3;
        } else if ((b0 & 0xF8) == 0xF0) {
            cp = b0 & 0x07;
            len = 4;
        } else {
            cps.push_back(0xFFFD);
            ++i;
            continue;
        }
        if (i + len > s.size()) {
            cps.push_back(0xFFFD);
            ++i;
            continue;
        }
        bool valid = true;
        for (std::size_t k = 1; k < len; ++k) {
            unsigned char b = static_cast<unsigned char>(s[i + k]);
            if ((b & 0xC0) != 0x80) {
                valid = false;
                break;
            }
            cp = (cp << 6) | (b & 0x3F);
        }
        if (!valid) {
            cps.push_back(0xFFFD);
            ++i;
            continue;
        }
        cps.push_back(cp);
        i += len;
    }
    return cps;
}

std::size_t count_codepoints(std::string_view s) {
    return decode_utf8(s).size();
}

bool is_cjk_codepoint(uint32_t cp) {
    return (cp >= 0x4E00 && cp <= 0x9FFF) ||    // CJK Unified Ideographs
           (cp >= 0x3400 && cp <= 0x4DBF) ||    // Extension A
           (cp >= 0xF900 && cp <= 0xFAFF) ||    // Compatibility Ideographs
           (cp >= 0x20000 && cp <= 0x2A6DF) ||  // Extension B
           (cp >= 0x3040 && cp <= 0x30FF) ||    // Hiragana + Katakana
           (cp >= 0xAC00 && cp <= 0xD7AF);      // Hangul syllables
}

double cjk_ratio(std::string_view s) {
    std::size_t cjk = 0;
    std::size_t basis = 0;
    for (uint32_t cp : decode_utf8(s)) {
        if (is_cjk_codepoint(cp)) {
            ++cjk;
            ++basis;
        } else if (cp < 0x80 && std::isalnum(static_cast<int>(cp))) {
            ++basis;
        }
    }
    if (basis == 0) return 0.0;
    return static_cast<double>(cjk) / static_cast<double>(basis);
}

std::vector<std::string> split_words(std::string_view s) {
    std::vector<std::string> words;
    std::string norm = normalize_whitespace(s);
    std::size_t pos = 0;
    while (pos < norm.size()) {
        std::size_t sp = norm.find(' ', pos);
        if (sp == std::string::npos) {
            words.emplace_back(norm.substr(pos));
            break;
        }
        words.emplace_back(norm.substr(pos, sp - pos));
        pos = sp + 1;
    }
    return words;
}

std::vector<std::string> word_ngrams(std::string_view s, std::size_t n) {
    std::vector<std::string> grams;
    if (n == 0) return grams;
    std::vector<std::string> words = split_words(to_lower_ascii(s));
    if (words.size() < n) return grams;
    grams.reserve(words.size() - n + 1);
    for (std::size_t i = 0; i + n <= words.size(); ++i) {
        std::string g = words[i];
        for (std::size_t k = 1; k < n; ++k) {
            g += ' ';
            g += words[i + k];
        }
        grams.push_back(std::move(g));
    }
    return grams;
}

std::vector<std::string> char_ngrams(std::string_view s, std::size_t n) {
    std::vector<std::string> grams;
    if (n == 0) return grams;
    std::string norm = normalize_key(s);
    std::string squeezed;
    squeezed.reserve(norm.size());
    for (char c : norm) {
        if (c != ' ') squeezed += c;
    }
    // Re-encode per code point so grams do not split multibyte sequences.
    std::vector<std::pair<std::size_t, std::size_t>> spans;  // offset, length
    std::size_t i = 0;
    while (i < squeezed.size()) {
        unsigned char b = static_cast<unsigned char>(squeezed[i]);
        std::size_t len = 1;
        if ((b & 0xE0) == 0xC0) len = 2;
        else if ((b & 0xF0) == 0xE0) len = 3;
        else if ((b & 0xF8) == 0xF0) len = 4;
        if (i + len > squeezed.size()) len = 1;
        spans.emplace_back(i, len);
        i += len;
    }
    if (spans.size() < n) return grams;
    grams.reserve(spans.size() - n + 1);
    for (std::size_t k = 0; k + n <= spans.size(); ++k) {
        auto [off, _] = spans[k];
        auto [last_off, last_len] = spans[k + n - 1];
        grams.push_back(squeezed.substr(off, last_off + last_len - off));
    }
    return grams;
}

std::string normalize_answer(std::string_view s) {
    std::string norm = to_lower_ascii(normalize_whitespace(s));
    static const std::vector<std::string> trailing = {
        ".", ",", ";", ":", "!", "?", "。", "，", "！", "？", "；", "："};
    bool stripped = true;
    while (stripped && !norm.empty()) {
        stripped = false;
        for (const auto& p : trailing) {
            if (norm.size() >= p.size() && norm.compare(norm.size() - p.size(), p.size(), p) == 0) {
                norm.erase(norm.size() - p.size());
                while (!norm.empty() && norm.back() == ' ') norm.pop_back();
                stripped = true;
                break;
            }
        }
    }
    // Pure numerics drop thousands separators: "1,000" -> "1000".
    bool numeric = !norm.empty();
    bool has_digit = false;
    for (std::size_t i = 0; i < norm.size() && numeric; ++i) {
        char c = norm[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            has_digit = true;
        } else if (c == ',' || c == '.') {
            continue;
        } else if ((c == '+' || c == '-') && i == 0) {
            continue;
        } else {
            numeric = false;
        }
    }
    if (numeric && has_digit) {
        std::string digits;
        digits.reserve(norm.size());
        for (char c : norm) {
            if (c != ',') digits += c;
        }
        norm = digits;
    }
    return norm;
}

}  // namespace fincot::text
