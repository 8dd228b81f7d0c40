#include "spun/perm4.hpp"

#include <algorithm>

namespace spun {

const std::array<Perm4, 24>& Perm4::all() {
    static const std::array<Perm4, 24> table = [] {
        std::array<Perm4, 24> t{};
        std::array<std::uint8_t, 4> img = {0, 1, 2, 3};
        for (std::size_t i = 0; i < 24; ++i) {
            t[i] = Perm4(img);
            std::next_permutation(img.begin(), img.end());
        }
        return t;
    }();
    return table;
}

int permutation_sign(int a, int b, int c, int d) {
    const int v[4] = {a, b, c, d};
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (v[i] > v[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

} // namespace spun
