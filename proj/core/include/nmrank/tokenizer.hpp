// Copyright the nmrank authors. Licensed under the terms of the Apache 2.0 license.
// See LICENSE in the project root.
#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "nmrank/types.hpp"

namespace nmrank {

using StopwordSet = std::unordered_set<std::string>;
using LemmaMap = std::unordered_map<std::string, std::string>;

/// Splits text into lowercased word tokens, drops punctuation and stopwords,
/// and preserves the original token order (duplicates included).
///
/// Word characters are ASCII alphanumerics plus any valid non-ASCII codepoint
/// outside the general-punctuation block (U+2000..U+206F). ASCII letters are
/// lowercased; other codepoints are kept verbatim. Invalid UTF-8 byte
/// sequences are skipped.
TokenList tokenize(std::string_view text, const StopwordSet& stopwords);

/// Replaces each token that has an entry in the lemma map; unknown tokens pass through.
TokenList apply_lemmas(const TokenList& tokens, const LemmaMap& lemmas);

/// One term per line; blank lines and lines starting with '#' are ignored.
StopwordSet load_stopwords(const std::string& path);

/// TSV `term<TAB>lemma`, one mapping per line.
LemmaMap load_lemma_map(const std::string& path);

} // namespace nmrank
