// Copyright the nmrank authors. Licensed under the terms of the Apache 2.0 license.
// See LICENSE in the project root.
#include "nmrank/tokenizer.hpp"

#include <fstream>

#include "nmrank/error.hpp"

namespace nmrank {

namespace {

bool is_ascii_word(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

char ascii_lower(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

// Decodes one UTF-8 sequence starting at position i. Returns its byte length
// and writes the codepoint, or returns 0 for an invalid sequence.
std::size_t decode_utf8(std::string_view s, std::size_t i, std::uint32_t& cp) {
    const auto b0 = static_cast<std::uint8_t>(s[i]);
    std::size_t len;
    if (b0 < 0x80) {
        cp = b0;
        return 1;
    } else if ((b0 & 0xe0) == 0xc0) {
        len = 2;
        cp = b0 & 0x1f;
    } else if ((b0 & 0xf0) == 0xe0) {
        len = 3;
        cp = b0 & 0x0f;
    } else if ((b0 & 0xf8) == 0xf0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        return 0;
    }
    if (i + len > s.size()) return 0;
    for (std::size_t k = 1; k < len; ++k) {
        const auto b = static_cast<std::uint8_t>(s[i + k]);
        if ((b & 0xc0) != 0x80) return 0;
        cp = (cp << 6) | (b & 0x3f);
    }
    if (len == 2 && cp < 0x80) return 0;
    if (len == 3 && cp < 0x800) return 0;
    if (len == 4 && cp < 0x10000) return 0;
    if (cp > 0x10ffff || (cp >= 0xd800 && cp <= 0xdfff)) return 0;
    return len;
}

bool is_general_punct(std::uint32_t cp) {
    return cp >= 0x2000 && cp <= 0x206f;
}

} // namespace

TokenList tokenize(std::string_view text, const StopwordSet& stopwords) {
    TokenList out;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            if (stopwords.find(cur) == stopwords.end()) out.push_back(cur);
            cur.clear();
        }
    };
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (static_cast<std::uint8_t>(c) < 0x80) {
            if (is_ascii_word(c)) {
                cur.push_back(ascii_lower(c));
            } else {
                flush();
            }
            ++i;
            continue;
        }
        std::uint32_t cp = 0;
        const std::size_t len = decode_utf8(text, i, cp);
        if (len == 0) {
            ++i; // invalid byte: skipped
            continue;
        }
        if (is_general_punct(cp)) {
            flush();
        } else {
            cur.append(text.substr(i, len));
        }
        i += len;
    }
    flush();
    return out;
}

TokenList apply_lemmas(const TokenList& tokens, const LemmaMap& lemmas) {
    TokenList out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) {
        auto it = lemmas.find(t);
        out.push_back(it == lemmas.end() ? t : it->second);
    }
    return out;
}

StopwordSet load_stopwords(const std::string& path) {
    std::ifstream in(path);
    require_data(in.good(), "cannot open stopword file: " + path);
    StopwordSet set;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        set.insert(line);
    }
    return set;
}

LemmaMap load_lemma_map(const std::string& path) {
    std::ifstream in(path);
    require_data(in.good(), "cannot open lemma map file: " + path);
    LemmaMap map;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto tab = line.find('\t');
        require_data(tab != std::string::npos,
                     path + ":" + std::to_string(lineno) + ": expected `term<TAB>lemma`");
        map[line.substr(0, tab)] = line.substr(tab + 1);
    }
    return map;
}

} // namespace nmrank
