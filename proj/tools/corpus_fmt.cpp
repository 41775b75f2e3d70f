// Rewrites corpus family files in the canonical serialization, so that
// hand edits stay byte-stable under load/save round trips.
#include <fstream>
#include <iostream>

#include "qact/corpus.hpp"

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "corpus";
    try {
        for (int fam = 1; fam <= 7; ++fam) {
            std::string path = dir + "/family-" + std::to_string(fam) + "/cases.json";
            auto cases = qact::load_family_file(path);
            std::ifstream in(path);
            qact::Json j = qact::Json::parse(in);
            std::string text =
                qact::family_file_text(fam, j.at("d").get<std::string>(), cases);
            std::ofstream out(path);
            out << text;
            std::cout << path << ": " << cases.size() << " cases rewritten\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
