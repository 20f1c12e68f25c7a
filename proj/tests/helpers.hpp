#pragma once

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "tricert/triangulation.hpp"

namespace testutil {

inline std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

inline std::string data_dir() {
    const char* d = std::getenv("TRICERT_DATA_DIR");
    return d ? d : "data";
}

inline tricert::Triangulation golden_s3() {
    return tricert::parse_table(read_file(data_dir() + "/remark285.tri"));
}

// Two tetrahedra glued along all four faces by identity maps; a 2-tet,
// 4-vertex triangulation of the 3-sphere.
inline tricert::Triangulation pillow() {
    tricert::Triangulation t(2);
    for (int f = 0; f < 4; ++f) {
        t.set_gluing(0, f, 1, tricert::Perm4());
        t.set_gluing(1, f, 0, tricert::Perm4());
    }
    t.validate();
    return t;
}

// Boundary of the 4-simplex: five tetrahedra, all identifications induced by
// the identity on the five global vertices. Tetrahedron i omits global
// vertex i; its local vertex l is the l-th smallest of the remaining ones.
inline tricert::Triangulation boundary_4_simplex() {
    tricert::Triangulation t(5);
    auto global_of = [](int tet, int local) { return local < tet ? local : local + 1; };
    auto local_of = [](int tet, int global) { return global < tet ? global : global - 1; };
    for (int a = 0; a < 5; ++a) {
        for (int b = 0; b < 5; ++b) {
            if (a == b) continue;
            // face of tet a omitting local vertex local_of(a, b): shared with tet b
            int la = local_of(a, b);
            int fa = 3 - la;
            std::array<int, 4> img{};
            for (int l = 0; l < 4; ++l) {
                int g = global_of(a, l);
                img[l] = (g == b) ? local_of(b, a) : local_of(b, g);
            }
            t.set_gluing(a, fa, b, tricert::Perm4(img));
        }
    }
    t.validate();
    return t;
}

}  // namespace testutil
