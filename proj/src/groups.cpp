#include "mulab/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace mulab {

int GroupTable::identity() const {
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = op(e, a) == a && op(a, e) == a;
        if (ok) return e;
    }
    throw std::invalid_argument("group: no identity element");
}

int GroupTable::inverse(int a) const {
    const int e = identity();
    for (int b = 0; b < n; ++b)
        if (op(a, b) == e && op(b, a) == e) return b;
    throw std::invalid_argument("group: missing inverse");
}

void GroupTable::validate() const {
    if (n <= 0 || static_cast<int>(mult.size()) != n * n)
        throw std::invalid_argument("group: malformed table");
    for (int v : mult)
        if (v < 0 || v >= n) throw std::invalid_argument("group: entry out of range");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (op(op(a, b), c) != op(a, op(b, c)))
                    throw std::invalid_argument("group: not associative");
    identity();
    for (int a = 0; a < n; ++a) inverse(a);
}

GroupTable GroupTable::cyclic(int n) {
    if (n <= 0) throw std::invalid_argument("cyclic: bad order");
    GroupTable g;
    g.n = n;
    g.name = "Z" + std::to_string(n);
    g.mult.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.mult[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    return g;
}

GroupTable GroupTable::symmetric(int n) {
    if (n <= 0 || n > 5) throw std::invalid_argument("symmetric: supported for 1 <= n <= 5");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);

    GroupTable g;
    g.n = static_cast<int>(perms.size());
    g.name = "S" + std::to_string(n);
    g.mult.resize(static_cast<std::size_t>(g.n) * g.n);
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b) {
            std::vector<int> comp(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                comp[static_cast<std::size_t>(i)] =
                    perms[static_cast<std::size_t>(a)]
                         [static_cast<std::size_t>(perms[static_cast<std::size_t>(b)]
                                                        [static_cast<std::size_t>(i)])];
            g.mult[static_cast<std::size_t>(a) * g.n + b] = index.at(comp);
        }
    return g;
}

}  // namespace mulab
