#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace rkato {

// A basis blade e_{i1} ^ ... ^ e_{ik} with 1 <= i1 < ... < ik <= n, stored as
// a bitmask: bit (i-1) set means index i is present. The empty mask is the
// scalar blade 1.
using Mask = std::uint32_t;

inline int blade_degree(Mask m) { return std::popcount(m); }

inline Mask blade_bit(int index1) { return Mask{1} << (index1 - 1); }

inline bool blade_contains(Mask m, int index1) { return (m & blade_bit(index1)) != 0; }

// Indices of a mask as 1-based, increasing.
std::vector<int> blade_indices(Mask m);

// Printable form, e.g. "e_{1,3}" ("1" for the scalar blade).
std::string blade_name(Mask m);

// Sign of e_i ^ e_I when i is not in I: (-1)^(#{j in I : j < i}).
// Returns 0 when i is already in I.
inline int insert_sign(int index1, Mask I) {
    Mask bit = blade_bit(index1);
    if (I & bit) return 0;
    return (std::popcount(I & (bit - 1)) & 1) ? -1 : 1;
}

// Sign of ι_{e_i} e_I for i in I (pair off the i-th factor): (-1)^(#{j in I : j < i}).
// Returns 0 when i is not in I.
inline int remove_sign(int index1, Mask I) {
    Mask bit = blade_bit(index1);
    if (!(I & bit)) return 0;
    return (std::popcount(I & (bit - 1)) & 1) ? -1 : 1;
}

// Sign s with e_A ^ e_B = s * e_{A|B}; 0 when the blades share an index.
inline int merge_sign(Mask A, Mask B) {
    if (A & B) return 0;
    int swaps = 0;
    Mask a = A >> 1;
    while (a) {  // counts pairs (j in A, i in B) with j > i
        swaps += std::popcount(a & B);
        a >>= 1;
    }
    return (swaps & 1) ? -1 : 1;
}

// All k-subsets of {1..n} in lexicographic order on the increasing index
// sequences, e.g. n=4,k=2: {1,2},{1,3},{1,4},{2,3},{2,4},{3,4}.
std::vector<Mask> enumerate_blades(int n, int k);

long binomial(int n, int k);

}  // namespace rkato
