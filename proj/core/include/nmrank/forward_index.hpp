// Copyright the nmrank authors. Licensed under the terms of the Apache 2.0 license.
// See LICENSE in the project root.
#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "nmrank/io.hpp"
#include "nmrank/types.hpp"
#include "nmrank/vocabulary.hpp"

namespace nmrank {

struct TermCount {
    TermId term;
    std::uint32_t freq;
};

/// Per-document term lists with in-document frequencies, document lengths and
/// the collection average length. Term lists are strictly sorted by TermId.
/// Immutable after build; safe for unlimited concurrent readers.
class ForwardIndex {
public:
    std::uint32_t num_docs() const { return static_cast<std::uint32_t>(lengths_.size()); }

    std::span<const TermCount> terms(DocId doc) const {
        return {entries_.data() + offsets_[doc], entries_.data() + offsets_[doc + 1]};
    }

    std::uint32_t doc_length(DocId doc) const { return lengths_[doc]; }
    double avg_doc_length() const { return avg_length_; }

    void serialize(BinaryWriter& w) const;
    static ForwardIndex deserialize(BinaryReader& r);

private:
    friend class ForwardIndexBuilder;

    std::vector<std::uint64_t> offsets_; // num_docs + 1
    std::vector<TermCount> entries_;
    std::vector<std::uint32_t> lengths_;
    double avg_length_ = 0.0;
};

/// One searchable text field: its vocabulary plus the forward index over it.
struct FieldIndex {
    Vocabulary vocab;
    ForwardIndex fwd;
};

/// Single-writer ingest. Feed tokenized documents in order; ids are assigned
/// by position (documents) and first occurrence (terms).
class ForwardIndexBuilder {
public:
    ForwardIndexBuilder() { index_.offsets_.push_back(0); }

    DocId add_document(const TokenList& tokens);

    /// Throws DataError on an empty corpus.
    FieldIndex finish();

private:
    Vocabulary vocab_;
    ForwardIndex index_;
    std::vector<TermId> scratch_;
};

/// Convenience wrapper over ForwardIndexBuilder for in-memory corpora.
FieldIndex build_forward_index(const std::vector<TokenList>& docs);

} // namespace nmrank
