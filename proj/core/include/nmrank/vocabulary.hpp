// Copyright the nmrank authors. Licensed under the terms of the Apache 2.0 license.
// See LICENSE in the project root.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nmrank/io.hpp"
#include "nmrank/types.hpp"

namespace nmrank {

/// Term ids plus the collection statistics every similarity model consumes:
/// per-term document frequency, per-term collection frequency, document count
/// and total token count. Ids are assigned in first-occurrence order over the
/// ingest stream, so builds are deterministic. Immutable after build.
class Vocabulary {
public:
    TermId id_of(std::string_view term) const {
        auto it = ids_.find(std::string(term));
        return it == ids_.end() ? kInvalidTerm : it->second;
    }

    const std::string& term(TermId id) const { return terms_[id]; }
    std::uint32_t size() const { return static_cast<std::uint32_t>(terms_.size()); }

    std::uint64_t doc_freq(TermId id) const { return doc_freq_[id]; }
    std::uint64_t coll_freq(TermId id) const { return coll_freq_[id]; }
    std::uint64_t num_docs() const { return num_docs_; }
    std::uint64_t total_tokens() const { return total_tokens_; }

    void serialize(BinaryWriter& w) const;
    static Vocabulary deserialize(BinaryReader& r);

private:
    friend class ForwardIndexBuilder;

    std::vector<std::string> terms_;
    std::unordered_map<std::string, TermId> ids_;
    std::vector<std::uint64_t> doc_freq_;
    std::vector<std::uint64_t> coll_freq_;
    std::uint64_t num_docs_ = 0;
    std::uint64_t total_tokens_ = 0;
};

} // namespace nmrank
