#pragma once

#include <string>
#include <vector>

namespace mulab {

// Finite group multiplication table; elements are 0..n-1.
struct GroupTable {
    int n = 0;
    std::vector<int> mult;  // mult[a*n + b] = a*b
    std::string name;

    int op(int a, int b) const { return mult[static_cast<std::size_t>(a) * n + b]; }
    int identity() const;
    int inverse(int a) const;
    void validate() const;  // group axioms; throws on failure

    static GroupTable cyclic(int n);
    static GroupTable symmetric(int n);  // permutations in lexicographic order
};

}  // namespace mulab
