// Copyright the nmrank authors. Licensed under the terms of the Apache 2.0 license.
// See LICENSE in the project root.
#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "nmrank/forward_index.hpp"
#include "nmrank/tokenizer.hpp"
#include "nmrank/types.hpp"

namespace nmrank {

enum class Split : std::uint8_t { train = 0, dev = 1, test = 2, tran = 3 };

Split parse_split(std::string_view s);
std::string_view split_name(Split s);

/// One question plus its selected best answer.
struct QaPair {
    std::string id;
    Split split = Split::train;
    std::string question;
    std::string answer;
};

/// UTF-8 TSV, one pair per line: `id<TAB>split<TAB>question<TAB>answer`.
/// Pair ids must be unique; answers must be non-empty.
std::vector<QaPair> read_corpus_tsv(const std::string& path);
void write_corpus_tsv(const std::string& path, const std::vector<QaPair>& pairs);

/// Which token stream a model scores against.
enum class Field : std::uint8_t { original = 0, lemma = 1 };

Field parse_field(std::string_view s);

/// The ingest artifact: every answer indexed under both token fields, plus the
/// id/split table mapping dense DocIds back to corpus pair ids. The lemma
/// field aliases the original one when no lemma map was supplied.
class CorpusIndex {
public:
    static CorpusIndex build(const std::vector<QaPair>& pairs, const StopwordSet& stopwords,
                             const LemmaMap* lemmas);

    const FieldIndex& field(Field f) const {
        return (f == Field::lemma && !lemma_aliased_) ? lemma_ : original_;
    }

    std::uint32_t num_docs() const { return static_cast<std::uint32_t>(doc_ids_.size()); }
    const std::string& doc_idstr(DocId d) const { return doc_ids_[d]; }
    Split doc_split(DocId d) const { return splits_[d]; }

    /// Dense DocId for a corpus pair id, or kInvalidDoc.
    DocId doc_of(std::string_view pair_id) const;

    bool lemma_aliased() const { return lemma_aliased_; }

    /// Digest of the serialized payload; derived artifacts record it and
    /// refuse to load against a different collection.
    std::uint64_t digest() const { return digest_; }

    void save(const std::string& path) const;
    static CorpusIndex load(const std::string& path);

private:
    std::string serialize_payload() const;
    void rebuild_lookup();

    std::vector<std::string> doc_ids_;
    std::unordered_map<std::string, DocId> doc_lookup_;
    std::vector<Split> splits_;
    FieldIndex original_;
    FieldIndex lemma_;
    bool lemma_aliased_ = true;
    mutable std::uint64_t digest_ = 0;
};

} // namespace nmrank
