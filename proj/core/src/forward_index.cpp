// Copyright the nmrank authors. Licensed under the terms of the Apache 2.0 license.
// See LICENSE in the project root.
#include "nmrank/forward_index.hpp"

#include <algorithm>

#include "nmrank/error.hpp"

namespace nmrank {

void Vocabulary::serialize(BinaryWriter& w) const {
    w.put_u32(size());
    for (std::uint32_t i = 0; i < size(); ++i) {
        w.put_string(terms_[i]);
        w.put_u64(doc_freq_[i]);
        w.put_u64(coll_freq_[i]);
    }
    w.put_u64(num_docs_);
    w.put_u64(total_tokens_);
}

Vocabulary Vocabulary::deserialize(BinaryReader& r) {
    Vocabulary v;
    const std::uint32_t n = r.get_u32();
    v.terms_.reserve(n);
    v.doc_freq_.reserve(n);
    v.coll_freq_.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        v.terms_.push_back(r.get_string());
        v.doc_freq_.push_back(r.get_u64());
        v.coll_freq_.push_back(r.get_u64());
        v.ids_.emplace(v.terms_.back(), i);
    }
    v.num_docs_ = r.get_u64();
    v.total_tokens_ = r.get_u64();
    return v;
}

void ForwardIndex::serialize(BinaryWriter& w) const {
    w.put_u32(num_docs());
    for (DocId d = 0; d < num_docs(); ++d) {
        const auto span = terms(d);
        w.put_u32(static_cast<std::uint32_t>(span.size()));
        for (const auto& tc : span) {
            w.put_u32(tc.term);
            w.put_u32(tc.freq);
        }
        w.put_u32(lengths_[d]);
    }
    w.put_f64(avg_length_);
}

ForwardIndex ForwardIndex::deserialize(BinaryReader& r) {
    ForwardIndex f;
    const std::uint32_t n = r.get_u32();
    f.offsets_.reserve(n + 1);
    f.offsets_.push_back(0);
    f.lengths_.reserve(n);
    for (std::uint32_t d = 0; d < n; ++d) {
        const std::uint32_t nt = r.get_u32();
        for (std::uint32_t i = 0; i < nt; ++i) {
            const TermId t = r.get_u32();
            const std::uint32_t freq = r.get_u32();
            f.entries_.push_back({t, freq});
        }
        f.offsets_.push_back(f.entries_.size());
        f.lengths_.push_back(r.get_u32());
    }
    f.avg_length_ = r.get_f64();
    return f;
}

DocId ForwardIndexBuilder::add_document(const TokenList& tokens) {
    scratch_.clear();
    scratch_.reserve(tokens.size());
    for (const auto& tok : tokens) {
        auto it = vocab_.ids_.find(tok);
        TermId id;
        if (it == vocab_.ids_.end()) {
            id = static_cast<TermId>(vocab_.terms_.size());
            vocab_.terms_.push_back(tok);
            vocab_.doc_freq_.push_back(0);
            vocab_.coll_freq_.push_back(0);
            vocab_.ids_.emplace(tok, id);
        } else {
            id = it->second;
        }
        scratch_.push_back(id);
        vocab_.coll_freq_[id] += 1;
    }
    std::sort(scratch_.begin(), scratch_.end());

    const auto doc = static_cast<DocId>(index_.lengths_.size());
    std::size_t i = 0;
    while (i < scratch_.size()) {
        std::size_t j = i;
        while (j < scratch_.size() && scratch_[j] == scratch_[i]) ++j;
        index_.entries_.push_back({scratch_[i], static_cast<std::uint32_t>(j - i)});
        vocab_.doc_freq_[scratch_[i]] += 1;
        i = j;
    }
    index_.offsets_.push_back(index_.entries_.size());
    index_.lengths_.push_back(static_cast<std::uint32_t>(tokens.size()));
    vocab_.num_docs_ += 1;
    vocab_.total_tokens_ += tokens.size();
    return doc;
}

FieldIndex ForwardIndexBuilder::finish() {
    require_data(!index_.lengths_.empty(), "empty corpus");
    std::uint64_t total = 0;
    for (auto len : index_.lengths_) total += len;
    index_.avg_length_ = static_cast<double>(total) / static_cast<double>(index_.lengths_.size());
    FieldIndex out{std::move(vocab_), std::move(index_)};
    vocab_ = Vocabulary{};
    index_ = ForwardIndex{};
    index_.offsets_.push_back(0);
    return out;
}

FieldIndex build_forward_index(const std::vector<TokenList>& docs) {
    ForwardIndexBuilder builder;
    for (const auto& d : docs) builder.add_document(d);
    return builder.finish();
}

} // namespace nmrank
