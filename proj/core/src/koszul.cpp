#include "psilab/koszul.hpp"

#include <algorithm>

namespace psilab {

std::vector<std::uint32_t> subsets_of_size(std::size_t n, int i) {
    std::vector<std::uint32_t> out;
    if (i < 0 || static_cast<std::size_t>(i) > n) return out;
    if (n > 31) throw std::invalid_argument("subsets limited to 31 elements");
    // Gosper's hack walks the i-subsets in increasing numeric order
    if (i == 0) return {0U};
    std::uint64_t s = (std::uint64_t{1} << i) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (s < limit) {
        out.push_back(static_cast<std::uint32_t>(s));
        const std::uint64_t c = s & (~s + 1);
        const std::uint64_t r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    return out;
}

}  // namespace psilab
