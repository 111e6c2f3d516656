// Copyright the nmrank authors. Licensed under the terms of the Apache 2.0 license.
// See LICENSE in the project root.
#include "nmrank/types.hpp"

#include <algorithm>

namespace nmrank {

RankedList make_ranked_list(std::vector<ScoredDoc> scored, std::size_t k) {
    if (k > 0 && k < scored.size()) {
        std::nth_element(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(k),
                         scored.end(), ranks_before);
        scored.resize(k);
    }
    std::sort(scored.begin(), scored.end(), ranks_before);
    return RankedList{std::move(scored)};
}

} // namespace nmrank
