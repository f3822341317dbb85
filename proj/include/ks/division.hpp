#pragma once

#include <cstddef>
#include <vector>

namespace ks {

struct TaggedItem {
    double tag;
    double lo;
    double hi;
};

/// Tagged division {(tag_j, [alpha_{j-1}, alpha_j])} of [a, b]. Items are
/// contiguous and ordered; every tag lies in its interval.
struct TaggedDivision {
    std::vector<TaggedItem> items;

    std::size_t size() const { return items.size(); }
    double a() const { return items.front().lo; }
    double b() const { return items.back().hi; }
    /// Contiguity, ordering and tag placement.
    bool well_formed() const;
};

}  // namespace ks
