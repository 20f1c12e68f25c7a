#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tricert/squares.hpp"

namespace tricert {

// Identification pattern of a tuple of twisted squares: which boundary slots
// share an edge (letters) and the traversal directions relative to each
// letter. Square i occupies slots 4i..4i+3 in boundary-traversal order.
struct TuplePattern {
    int square_count = 0;
    std::vector<int> letter;  // per slot
    std::vector<int> delta;   // per slot, +1 or -1

    int slots() const { return 4 * square_count; }

    bool operator==(const TuplePattern& o) const {
        return square_count == o.square_count && letter == o.letter && delta == o.delta;
    }
    bool operator<(const TuplePattern& o) const {
        if (square_count != o.square_count) return square_count < o.square_count;
        if (letter != o.letter) return letter < o.letter;
        return delta < o.delta;
    }
};

namespace detail {

// Letters renamed in first-appearance order; each letter's direction chosen
// so its first occurrence has delta +1.
inline TuplePattern normalize_letters(const TuplePattern& p) {
    TuplePattern out = p;
    std::map<int, int> rename;
    std::map<int, int> flip;
    for (int i = 0; i < p.slots(); ++i) {
        auto it = rename.find(p.letter[i]);
        if (it == rename.end()) {
            int id = static_cast<int>(rename.size());
            rename[p.letter[i]] = id;
            flip[p.letter[i]] = p.delta[i];
        }
        out.letter[i] = rename[p.letter[i]];
        out.delta[i] = p.delta[i] * flip[p.letter[i]];
    }
    return out;
}

inline void square_permutations(int k, std::vector<std::vector<int>>& out) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    do {
        out.push_back(idx);
    } while (std::next_permutation(idx.begin(), idx.end()));
}

}  // namespace detail

// Least pattern over square reorderings, the dihedral symmetries of each
// square (rotations keep traversal, reflections reverse it) and per-letter
// direction flips.
inline TuplePattern canonicalize(const TuplePattern& p) {
    int k = p.square_count;
    std::vector<std::vector<int>> perms;
    detail::square_permutations(k, perms);

    TuplePattern best;
    bool first = true;
    std::vector<int> dihedral(k);  // 0..7 per square: rot + 4*mirror
    for (const auto& sq_perm : perms) {
        std::fill(dihedral.begin(), dihedral.end(), 0);
        while (true) {
            TuplePattern cand;
            cand.square_count = k;
            cand.letter.resize(4 * k);
            cand.delta.resize(4 * k);
            for (int i = 0; i < k; ++i) {
                int src_sq = sq_perm[i];
                int rot = dihedral[i] % 4;
                bool mirror = dihedral[i] >= 4;
                for (int l = 0; l < 4; ++l) {
                    int src_slot = mirror ? ((rot - l) % 4 + 4) % 4 : (l + rot) % 4;
                    cand.letter[4 * i + l] = p.letter[4 * src_sq + src_slot];
                    cand.delta[4 * i + l] =
                        (mirror ? -1 : 1) * p.delta[4 * src_sq + src_slot];
                }
            }
            cand = detail::normalize_letters(cand);
            if (first || cand < best) {
                best = cand;
                first = false;
            }
            // advance the dihedral odometer
            int pos = 0;
            while (pos < k) {
                if (++dihedral[pos] < 8) break;
                dihedral[pos] = 0;
                ++pos;
            }
            if (pos == k) break;
        }
    }
    return best;
}

inline std::string pattern_signature(const TuplePattern& canonical) {
    std::string s;
    s.reserve(canonical.slots() * 2 + 2);
    s += static_cast<char>('0' + canonical.square_count);
    s += ':';
    for (int i = 0; i < canonical.slots(); ++i) {
        s += static_cast<char>('a' + canonical.letter[i]);
        s += canonical.delta[i] > 0 ? '+' : '-';
    }
    return s;
}

// Pattern of a tuple of squares of a skeleton: letters are the edge classes
// met by the squares' boundaries, deltas the traversal signs.
inline TuplePattern pattern_of_squares(const std::vector<const TwistedSquare*>& squares) {
    TuplePattern p;
    p.square_count = static_cast<int>(squares.size());
    p.letter.resize(p.slots());
    p.delta.resize(p.slots());
    for (int i = 0; i < p.square_count; ++i)
        for (int l = 0; l < 4; ++l) {
            p.letter[4 * i + l] = squares[i]->boundary[l].dir.edge_class;
            p.delta[4 * i + l] = squares[i]->boundary[l].dir.sign;
        }
    return p;
}

// Sorted partition-type string of a pattern's squares, computed per square.
inline std::string pattern_type_string(const TuplePattern& p) {
    std::string types;
    for (int i = 0; i < p.square_count; ++i) {
        std::array<int, 4> cls{p.letter[4 * i], p.letter[4 * i + 1], p.letter[4 * i + 2],
                               p.letter[4 * i + 3]};
        types += static_cast<char>(detail::partition_type_of(cls));
    }
    std::sort(types.begin(), types.end());
    return types;
}

// ---- catalog -----------------------------------------------------------------

struct CatalogEntry {
    std::string source;  // fig8 | fig9
    std::string id;
    TuplePattern pattern;  // canonical
    std::string distinctness = "all";
    std::vector<std::string> tags;
};

struct CatalogLoadError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class PatternCatalog {
public:
    void add(CatalogEntry entry) {
        entry.pattern = canonicalize(entry.pattern);
        index_[pattern_signature(entry.pattern)].push_back(static_cast<int>(entries_.size()));
        entries_.push_back(std::move(entry));
    }

    const std::vector<CatalogEntry>& entries() const { return entries_; }

    std::vector<int> lookup(const TuplePattern& canonical) const {
        auto it = index_.find(pattern_signature(canonical));
        if (it == index_.end()) return {};
        return it->second;
    }

    std::set<std::string> type_strings(int square_count) const {
        std::set<std::string> out;
        for (const auto& e : entries_)
            if (e.pattern.square_count == square_count) out.insert(pattern_type_string(e.pattern));
        return out;
    }

private:
    std::vector<CatalogEntry> entries_;
    std::map<std::string, std::vector<int>> index_;
};

// Line format:  <source> <id> <square-count> <slot-partition> <orientation-bits>
//               <distinctness> <tags>
// slot-partition groups slot numbers by letter, commas inside a class and
// '|' between classes, e.g. 0,4|1,5|2,6|3,7. orientation-bits is one +/- per
// slot. tags are comma-separated.
inline std::string catalog_to_text(const PatternCatalog& cat) {
    std::ostringstream os;
    os << "# two- and three-square identification patterns\n";
    for (const auto& e : cat.entries()) {
        os << e.source << ' ' << e.id << ' ' << e.pattern.square_count << ' ';
        int letters = 0;
        for (int l : e.pattern.letter) letters = std::max(letters, l + 1);
        for (int cls = 0; cls < letters; ++cls) {
            if (cls) os << '|';
            bool first = true;
            for (int i = 0; i < e.pattern.slots(); ++i)
                if (e.pattern.letter[i] == cls) {
                    if (!first) os << ',';
                    os << i;
                    first = false;
                }
        }
        os << ' ';
        for (int i = 0; i < e.pattern.slots(); ++i) os << (e.pattern.delta[i] > 0 ? '+' : '-');
        os << ' ' << e.distinctness << ' ';
        for (size_t i = 0; i < e.tags.size(); ++i) os << (i ? "," : "") << e.tags[i];
        if (e.tags.empty()) os << '-';
        os << '\n';
    }
    return os.str();
}

inline PatternCatalog catalog_from_text(const std::string& text) {
    PatternCatalog cat;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    std::set<std::string> signatures;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        CatalogEntry e;
        std::string partition, bits, tags;
        int count = 0;
        if (!(ls >> e.source >> e.id >> count >> partition >> bits >> e.distinctness >> tags))
            continue;  // blank or comment line
        if (e.source != "fig8" && e.source != "fig9")
            throw CatalogLoadError("line " + std::to_string(lineno) + ": unknown source " +
                                   e.source);
        if (count < 2 || count > 3)
            throw CatalogLoadError("line " + std::to_string(lineno) + ": bad square count");
        e.pattern.square_count = count;
        e.pattern.letter.assign(4 * count, -1);
        e.pattern.delta.assign(4 * count, 0);
        int cls = 0;
        std::istringstream ps(partition);
        std::string group;
        while (std::getline(ps, group, '|')) {
            std::istringstream gs(group);
            std::string num;
            while (std::getline(gs, num, ',')) {
                int slot = std::stoi(num);
                if (slot < 0 || slot >= 4 * count)
                    throw CatalogLoadError("line " + std::to_string(lineno) +
                                           ": slot index out of range");
                if (e.pattern.letter[slot] >= 0)
                    throw CatalogLoadError("line " + std::to_string(lineno) +
                                           ": slot listed twice");
                e.pattern.letter[slot] = cls;
            }
            ++cls;
        }
        for (int i = 0; i < 4 * count; ++i)
            if (e.pattern.letter[i] < 0)
                throw CatalogLoadError("line " + std::to_string(lineno) + ": slot " +
                                       std::to_string(i) + " not covered");
        if (static_cast<int>(bits.size()) != 4 * count)
            throw CatalogLoadError("line " + std::to_string(lineno) +
                                   ": orientation bits must cover every slot");
        for (int i = 0; i < 4 * count; ++i) {
            if (bits[i] != '+' && bits[i] != '-')
                throw CatalogLoadError("line " + std::to_string(lineno) +
                                       ": orientation bits must be + or -");
            e.pattern.delta[i] = bits[i] == '+' ? 1 : -1;
        }
        if (e.distinctness != "all")
            throw CatalogLoadError("line " + std::to_string(lineno) +
                                   ": unsupported distinctness constraint");
        if (tags != "-") {
            std::istringstream ts(tags);
            std::string tag;
            while (std::getline(ts, tag, ',')) e.tags.push_back(tag);
        }
        std::string sig = pattern_signature(canonicalize(e.pattern));
        if (!signatures.insert(sig).second)
            throw CatalogLoadError("line " + std::to_string(lineno) +
                                   ": duplicate of an earlier entry");
        cat.add(std::move(e));
    }
    return cat;
}

// ---- matching against a skeleton ---------------------------------------------

struct CatalogMatch {
    int entry = -1;
    std::vector<std::pair<int, int>> squares;  // (tet, quad_index)

    bool operator<(const CatalogMatch& o) const {
        if (entry != o.entry) return entry < o.entry;
        return squares < o.squares;
    }
};

// Reports every tuple of squares in pairwise distinct tetrahedra whose
// identification pattern equals a catalog entry.
inline std::vector<CatalogMatch> match_catalog(const Skeleton& s, const PatternCatalog& cat) {
    std::vector<TwistedSquare> squares = all_squares(s);
    int ns = static_cast<int>(squares.size());

    auto type2 = cat.type_strings(2);
    auto type3 = cat.type_strings(3);

    // squares touching each edge class
    std::vector<std::vector<int>> by_class(s.edge_count());
    for (int i = 0; i < ns; ++i) {
        std::set<int> cls;
        for (const auto& slot : squares[i].boundary) cls.insert(slot.dir.edge_class);
        for (int c : cls) by_class[c].push_back(i);
    }
    auto shares = [&](int i, int j) {
        for (const auto& a : squares[i].boundary)
            for (const auto& b : squares[j].boundary)
                if (a.dir.edge_class == b.dir.edge_class) return true;
        return false;
    };

    std::set<std::pair<int, int>> pair_set;
    for (const auto& lst : by_class)
        for (size_t x = 0; x < lst.size(); ++x)
            for (size_t y = x + 1; y < lst.size(); ++y)
                if (squares[lst[x]].tet != squares[lst[y]].tet)
                    pair_set.insert({lst[x], lst[y]});

    std::set<CatalogMatch> found;
    auto try_tuple = [&](const std::vector<int>& tuple, const std::set<std::string>& types) {
        std::string ts;
        for (int i : tuple) ts += static_cast<char>(squares[i].partition_type);
        std::sort(ts.begin(), ts.end());
        if (!types.count(ts)) return;
        std::vector<const TwistedSquare*> ptrs;
        for (int i : tuple) ptrs.push_back(&squares[i]);
        TuplePattern pat = canonicalize(pattern_of_squares(ptrs));
        for (int e : cat.lookup(pat)) {
            CatalogMatch m;
            m.entry = e;
            for (int i : tuple) m.squares.push_back({squares[i].tet, squares[i].quad_index});
            found.insert(std::move(m));
        }
    };

    for (const auto& [a, b] : pair_set) try_tuple({a, b}, type2);

    if (!type3.empty()) {
        for (const auto& [a, b] : pair_set) {
            for (int c = b + 1; c < ns; ++c) {
                if (squares[c].tet == squares[a].tet || squares[c].tet == squares[b].tet) continue;
                if (!shares(a, c) || !shares(b, c)) continue;
                try_tuple({a, b, c}, type3);
            }
        }
    }
    return std::vector<CatalogMatch>(found.begin(), found.end());
}

}  // namespace tricert
