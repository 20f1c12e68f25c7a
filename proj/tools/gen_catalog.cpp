// Derives the two- and three-square identification-pattern catalog and
// writes it as a data file:  gen-catalog [output-path]
#include <fstream>
#include <iostream>

#include "tricert/catalog_gen.hpp"

int main(int argc, char** argv) {
    std::string path = argc > 1 ? argv[1] : "data/catalog.txt";
    tricert::PatternCatalog cat = tricert::catgen::build_generated_catalog();
    std::ofstream out(path);
    out << tricert::catalog_to_text(cat);
    std::cout << "wrote " << cat.entries().size() << " entries to " << path << "\n";
    for (const auto& e : cat.entries()) {
        std::cout << e.source << "(" << e.id << ") " << tricert::pattern_signature(e.pattern)
                  << " tags:";
        for (const auto& t : e.tags) std::cout << " " << t;
        std::cout << "\n";
    }
    return 0;
}
