// Copyright the nmrank authors. Licensed under the terms of the Apache 2.0 license.
// See LICENSE in the project root.
#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace nmrank {

using TermId = std::uint32_t;
using DocId = std::uint32_t;

inline constexpr TermId kInvalidTerm = std::numeric_limits<TermId>::max();
inline constexpr DocId kInvalidDoc = std::numeric_limits<DocId>::max();

/// A tokenized piece of text; the raw form of queries, pivots and documents.
using TokenList = std::vector<std::string>;

struct ScoredDoc {
    DocId id = kInvalidDoc;
    double score = 0.0;
};

/// Total order used for every ranked result in the engine:
/// descending score, ties broken by ascending document id.
inline bool ranks_before(const ScoredDoc& a, const ScoredDoc& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.id < b.id;
}

/// Ordered retrieval results. Strictly ordered under ranks_before, no duplicate ids.
struct RankedList {
    std::vector<ScoredDoc> hits;

    std::size_t size() const { return hits.size(); }
    bool empty() const { return hits.empty(); }
    const ScoredDoc& operator[](std::size_t i) const { return hits[i]; }

    /// Checks the RankedList invariants (strict order, no duplicates).
    bool well_formed() const {
        for (std::size_t i = 1; i < hits.size(); ++i) {
            if (!ranks_before(hits[i - 1], hits[i])) return false;
        }
        return true;
    }
};

/// Sorts scored docs in place and truncates to the best k (k == 0 keeps everything).
RankedList make_ranked_list(std::vector<ScoredDoc> scored, std::size_t k);

} // namespace nmrank
