#pragma once

#include <vector>

namespace tsg {

// Total vertex coloring with colors 0..k-1.
struct Coloring {
    int k = 0;
    std::vector<int> color;  // indexed by vertex

    bool operator==(const Coloring& other) const = default;
};

// Preimages C_0..C_{k-1}; each class sorted ascending.
inline std::vector<std::vector<int>> color_classes(const Coloring& c) {
    std::vector<std::vector<int>> classes(c.k);
    for (int v = 0; v < static_cast<int>(c.color.size()); ++v)
        classes[c.color[v]].push_back(v);
    return classes;
}

}  // namespace tsg
