#pragma once

#include <string>
#include <vector>

#include "llk/proof.hpp"

namespace llk {

struct CorpusEntry {
    std::string file;
    System system;
    bool valid;
    std::string violation;  // expected first message when invalid
    P proof;
};

std::string read_file(const std::string& path);
// Reads manifest.json in dir and parses every listed proof.
std::vector<CorpusEntry> load_corpus(const std::string& dir);

}  // namespace llk
