#pragma once

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tricert/permutation.hpp"

namespace tricert {

struct ParseError : std::runtime_error {
    int line, column;
    ParseError(const std::string& msg, int ln, int col)
        : std::runtime_error(msg + " (line " + std::to_string(ln) + ", column " +
                             std::to_string(col) + ")"),
          line(ln),
          column(col) {}
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One side of a face pairing: target tetrahedron plus the vertex map,
// stored as a permutation of all four vertex labels (the source face's
// opposite vertex maps to the target face's opposite vertex).
struct Gluing {
    int tet = -1;
    Perm4 perm;

    bool operator==(const Gluing& o) const { return tet == o.tet && perm == o.perm; }
};

// Face-pairing data for a semi-simplicial triangulation. Face f of
// tetrahedron t is the vertex triple face_vertex_table[f]; the stored vertex
// map sends the face's vertices (in ascending order) to their images.
class Triangulation {
public:
    Triangulation() = default;
    explicit Triangulation(int tet_count)
        : n_(tet_count), gluings_(static_cast<size_t>(tet_count) * 4) {}

    int tet_count() const { return n_; }

    const std::optional<Gluing>& gluing(int tet, int face) const {
        return gluings_[static_cast<size_t>(tet) * 4 + face];
    }

    void set_gluing(int tet, int face, int target_tet, const Perm4& perm) {
        gluings_[static_cast<size_t>(tet) * 4 + face] = Gluing{target_tet, perm};
    }

    void clear_gluing(int tet, int face) {
        gluings_[static_cast<size_t>(tet) * 4 + face].reset();
    }

    bool closed() const {
        for (const auto& g : gluings_)
            if (!g) return false;
        return n_ > 0;
    }

    // Face index of the target face of a gluing at (tet, face).
    static int target_face(int face, const Perm4& perm) {
        return 3 - perm[face_opposite_vertex(face)];
    }

    // Throws ValidationError unless the pairing data is involutive, avoids
    // identity self-gluings and keeps all indices in range.
    void validate() const {
        for (int t = 0; t < n_; ++t) {
            for (int f = 0; f < 4; ++f) {
                const auto& g = gluing(t, f);
                if (!g) continue;
                if (g->tet < 0 || g->tet >= n_)
                    throw ValidationError("gluing target out of range at tetrahedron " +
                                          std::to_string(t) + " face " + face_name(f));
                if (g->tet == t && target_face(f, g->perm) == f && g->perm.is_identity())
                    throw ValidationError("face glued to itself by the identity at tetrahedron " +
                                          std::to_string(t) + " face " + face_name(f));
                int tf = target_face(f, g->perm);
                const auto& back = gluing(g->tet, tf);
                if (!back || back->tet != t || back->perm != g->perm.inverse() ||
                    target_face(tf, back->perm) != f)
                    throw ValidationError("face pairings are not an involution at tetrahedron " +
                                          std::to_string(t) + " face " + face_name(f));
            }
        }
    }

    static std::string face_name(int f) {
        const char* names[4] = {"012", "013", "023", "123"};
        return names[f];
    }

    bool operator==(const Triangulation& o) const {
        return n_ == o.n_ && gluings_ == o.gluings_;
    }

    // ---- table format -------------------------------------------------------
    //
    // One line per tetrahedron:
    //   <t>: <u0> (<abc>) <u1> (<abc>) <u2> (<abc>) <u3> (<abc>)
    // with the four entries for faces 012, 013, 023, 123, and '-' for an
    // unglued face. '#' starts a comment.

    std::string to_table() const {
        std::ostringstream os;
        for (int t = 0; t < n_; ++t) {
            os << t << ":";
            for (int f = 0; f < 4; ++f) {
                const auto& g = gluing(t, f);
                if (!g) {
                    os << " -";
                    continue;
                }
                os << ' ' << g->tet << " (";
                for (int i = 0; i < 3; ++i) os << g->perm[face_vertex_table[f][i]];
                os << ')';
            }
            os << '\n';
        }
        return os.str();
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["tetrahedra"] = n_;
        auto arr = nlohmann::ordered_json::array();
        for (int t = 0; t < n_; ++t) {
            auto row = nlohmann::ordered_json::array();
            for (int f = 0; f < 4; ++f) {
                const auto& g = gluing(t, f);
                if (!g) {
                    row.push_back(nullptr);
                } else {
                    nlohmann::ordered_json entry = nlohmann::ordered_json::array();
                    entry.push_back(g->tet);
                    auto m = nlohmann::ordered_json::array();
                    for (int i = 0; i < 3; ++i) m.push_back(g->perm[face_vertex_table[f][i]]);
                    entry.push_back(m);
                    row.push_back(entry);
                }
            }
            arr.push_back(row);
        }
        j["gluings"] = arr;
        return j;
    }

private:
    int n_ = 0;
    std::vector<std::optional<Gluing>> gluings_;
};

namespace detail {

class TableScanner {
public:
    explicit TableScanner(const std::string& text) : text_(text) {}

    // Splits into logical lines, stripping comments and blank lines.
    struct Line {
        std::string content;
        int number;
    };

    std::vector<Line> lines() {
        std::vector<Line> out;
        std::istringstream is(text_);
        std::string raw;
        int no = 0;
        while (std::getline(is, raw)) {
            ++no;
            auto hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            bool blank = true;
            for (char c : raw)
                if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
            if (!blank) out.push_back({raw, no});
        }
        return out;
    }

private:
    const std::string& text_;
};

struct TokenCursor {
    const std::string& s;
    int line;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= s.size();
    }

    int column() const { return static_cast<int>(pos) + 1; }

    char peek() {
        skip_ws();
        if (pos >= s.size()) throw ParseError("unexpected end of line", line, column());
        return s[pos];
    }

    void expect(char c) {
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "'", line, column());
        ++pos;
    }

    long read_int() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected a number", line, static_cast<int>(start) + 1);
        return std::stol(s.substr(start, pos - start));
    }
};

inline Gluing parse_table_entry(TokenCursor& cur, int face, int tet_count) {
    long target = cur.read_int();
    if (target < 0 || target >= tet_count)
        throw ParseError("target tetrahedron " + std::to_string(target) + " out of range",
                         cur.line, cur.column());
    cur.expect('(');
    int img[3];
    for (int i = 0; i < 3; ++i) {
        char c = cur.peek();
        if (c < '0' || c > '3')
            throw ParseError("vertex image must be a digit 0-3", cur.line, cur.column());
        img[i] = c - '0';
        ++cur.pos;
    }
    cur.expect(')');
    if (img[0] == img[1] || img[0] == img[2] || img[1] == img[2])
        throw ParseError("vertex map is not injective", cur.line, cur.column());
    // Extend to a Perm4: the face's opposite vertex goes to the image
    // triple's missing vertex.
    int missing = 6 - img[0] - img[1] - img[2];
    std::array<int, 4> full{};
    for (int i = 0; i < 3; ++i) full[face_vertex_table[face][i]] = img[i];
    full[face_opposite_vertex(face)] = missing;
    return Gluing{static_cast<int>(target), Perm4(full)};
}

}  // namespace detail

inline Triangulation parse_table(const std::string& text) {
    detail::TableScanner scanner(text);
    auto lines = scanner.lines();
    if (lines.empty()) throw ParseError("no tetrahedra in input", 1, 1);
    int n = static_cast<int>(lines.size());
    Triangulation tri(n);
    int expect_t = 0;
    for (const auto& ln : lines) {
        detail::TokenCursor cur{ln.content, ln.number};
        long t = cur.read_int();
        if (t != expect_t)
            throw ParseError("expected row for tetrahedron " + std::to_string(expect_t),
                             cur.line, cur.column());
        cur.expect(':');
        for (int f = 0; f < 4; ++f) {
            if (cur.peek() == '-') {
                ++cur.pos;
                continue;
            }
            Gluing g = detail::parse_table_entry(cur, f, n);
            tri.set_gluing(expect_t, f, g.tet, g.perm);
        }
        if (!cur.at_end())
            throw ParseError("trailing characters after face entries", cur.line, cur.column());
        ++expect_t;
    }
    tri.validate();
    return tri;
}

inline Triangulation parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 1, 1);
    }
    if (!j.contains("tetrahedra") || !j["tetrahedra"].is_number_integer())
        throw ParseError("missing integer field 'tetrahedra'", 1, 1);
    int n = j["tetrahedra"].get<int>();
    if (n <= 0) throw ParseError("no tetrahedra in input", 1, 1);
    if (!j.contains("gluings") || !j["gluings"].is_array() ||
        j["gluings"].size() != static_cast<size_t>(n))
        throw ParseError("'gluings' must be an array with one row per tetrahedron", 1, 1);
    Triangulation tri(n);
    for (int t = 0; t < n; ++t) {
        const auto& row = j["gluings"][t];
        if (!row.is_array() || row.size() != 4)
            throw ParseError("gluing row " + std::to_string(t) + " must have 4 entries", 1, 1);
        for (int f = 0; f < 4; ++f) {
            const auto& e = row[f];
            if (e.is_null()) continue;
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_array() ||
                e[1].size() != 3)
                throw ParseError("gluing entry must be null or [target, [p,q,r]]", 1, 1);
            int target = e[0].get<int>();
            if (target < 0 || target >= n)
                throw ParseError("target tetrahedron out of range in gluing entry", 1, 1);
            int img[3];
            for (int i = 0; i < 3; ++i) {
                img[i] = e[1][i].get<int>();
                if (img[i] < 0 || img[i] > 3)
                    throw ParseError("vertex image out of range in gluing entry", 1, 1);
            }
            if (img[0] == img[1] || img[0] == img[2] || img[1] == img[2])
                throw ParseError("vertex map is not injective in gluing entry", 1, 1);
            int missing = 6 - img[0] - img[1] - img[2];
            std::array<int, 4> full{};
            for (int i = 0; i < 3; ++i) full[face_vertex_table[f][i]] = img[i];
            full[face_opposite_vertex(f)] = missing;
            tri.set_gluing(t, f, target, Perm4(full));
        }
    }
    tri.validate();
    return tri;
}

enum class InputFormat { Table, Json };

inline Triangulation parse_triangulation(const std::string& text, InputFormat fmt) {
    return fmt == InputFormat::Table ? parse_table(text) : parse_json(text);
}

// Auto-detects the format: JSON input starts with '{'.
inline Triangulation parse_triangulation(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{' ? parse_json(text) : parse_table(text);
    }
    throw ParseError("no tetrahedra in input", 1, 1);
}

// Relabels tetrahedra by `tet_map` (new index of old tet t is tet_map[t]) and
// vertices of each old tet t by vertex_maps[t].
inline Triangulation relabel(const Triangulation& tri, const std::vector<int>& tet_map,
                             const std::vector<Perm4>& vertex_maps) {
    Triangulation out(tri.tet_count());
    for (int t = 0; t < tri.tet_count(); ++t) {
        const Perm4& pt = vertex_maps[t];
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.gluing(t, f);
            if (!g) continue;
            int nf = 3 - pt[face_opposite_vertex(f)];
            Perm4 np = vertex_maps[g->tet] * g->perm * pt.inverse();
            out.set_gluing(tet_map[t], nf, tet_map[g->tet], np);
        }
    }
    return out;
}

}  // namespace tricert
