#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tricert {

// Permutation of {0,1,2,3}. Face pairings are stored as one of these, acting
// on tetrahedron vertex labels.
class Perm4 {
public:
    Perm4() : img_{0, 1, 2, 3} {}
    Perm4(int a, int b, int c, int d) : img_{static_cast<int8_t>(a), static_cast<int8_t>(b),
                                             static_cast<int8_t>(c), static_cast<int8_t>(d)} {
        validate();
    }
    explicit Perm4(const std::array<int, 4>& im)
        : Perm4(im[0], im[1], im[2], im[3]) {}

    int operator[](int i) const { return img_[i]; }

    Perm4 inverse() const {
        Perm4 r;
        for (int i = 0; i < 4; ++i) r.img_[img_[i]] = static_cast<int8_t>(i);
        return r;
    }

    // (p * q)[i] == p[q[i]]
    Perm4 operator*(const Perm4& q) const {
        Perm4 r;
        for (int i = 0; i < 4; ++i) r.img_[i] = img_[q.img_[i]];
        return r;
    }

    bool operator==(const Perm4& o) const { return img_ == o.img_; }
    bool operator!=(const Perm4& o) const { return img_ != o.img_; }
    bool operator<(const Perm4& o) const { return img_ < o.img_; }

    bool is_identity() const { return img_[0] == 0 && img_[1] == 1 && img_[2] == 2 && img_[3] == 3; }

    // +1 for even permutations, -1 for odd.
    int sign() const {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (img_[i] > img_[j]) ++inv;
        return (inv % 2 == 0) ? 1 : -1;
    }

    std::string str() const {
        std::string s(4, '0');
        for (int i = 0; i < 4; ++i) s[i] = static_cast<char>('0' + img_[i]);
        return s;
    }

    static const std::array<Perm4, 24>& all() {
        static const std::array<Perm4, 24> table = make_all();
        return table;
    }

private:
    std::array<int8_t, 4> img_;

    void validate() const {
        int seen = 0;
        for (int i = 0; i < 4; ++i) {
            if (img_[i] < 0 || img_[i] > 3) throw std::invalid_argument("Perm4: image out of range");
            seen |= 1 << img_[i];
        }
        if (seen != 0xF) throw std::invalid_argument("Perm4: not a bijection");
    }

    static std::array<Perm4, 24> make_all() {
        std::array<Perm4, 24> out;
        int k = 0;
        std::array<int, 4> v{0, 1, 2, 3};
        do {
            out[k++] = Perm4(v[0], v[1], v[2], v[3]);
        } while (std::next_permutation(v.begin(), v.end()));
        return out;
    }
};

// Sign of the 4-tuple (s0,s1,s2,s3), a permutation of {0,1,2,3}, given as
// separate values. +1 if even.
inline int ordering_sign(int s0, int s1, int s2, int s3) {
    int a[4] = {s0, s1, s2, s3};
    int inv = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (a[i] > a[j]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

// ---- Fixed tables for the cells of a tetrahedron ----------------------------
//
// Faces are indexed 0..3 and correspond to the vertex triples 012, 013, 023,
// 123 (ascending). Face f omits vertex 3-f.
// Edges are indexed 0..5 as 01, 02, 03, 12, 13, 23.

inline constexpr int face_vertex_table[4][3] = {
    {0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};

inline constexpr int edge_vertex_table[6][2] = {
    {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

inline int face_opposite_vertex(int f) { return 3 - f; }

inline int face_index_of_vertices(int a, int b, int c) {
    int omit = 0 + 1 + 2 + 3 - a - b - c;
    return 3 - omit;
}

inline int edge_index_of(int u, int v) {
    if (u > v) std::swap(u, v);
    static constexpr int tab[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    int e = tab[u][v];
    if (e < 0) throw std::invalid_argument("edge_index_of: u == v");
    return e;
}

// The three quadrilateral types, indexed by the vertex partitions
// {01|23}, {02|13}, {03|12}.
inline int quad_partner(int quad, int v) {
    static constexpr int tab[3][4] = {{1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    return tab[quad][v];
}

// Quad type that separates vertices u and v from the rest.
inline int quad_index_of_pair(int u, int v) {
    if (u > v) std::swap(u, v);
    if (u == 0) return v - 1;
    return edge_index_of(u, v) == 3 ? 2 : (edge_index_of(u, v) == 4 ? 1 : 0);
}

}  // namespace tricert
