#include "llk/corpus.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace llk {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<CorpusEntry> load_corpus(const std::string& dir) {
    auto m = nlohmann::json::parse(read_file(dir + "/manifest.json"));
    std::vector<CorpusEntry> out;
    for (const auto& e : m) {
        CorpusEntry c;
        c.file = e.at("file").get<std::string>();
        auto sys = system_from_name(e.at("system").get<std::string>());
        if (!sys) throw std::runtime_error("manifest: unknown system for " + c.file);
        c.system = *sys;
        c.valid = e.at("valid").get<bool>();
        c.violation = e.value("violation", "");
        c.proof = parse_proof(read_file(dir + "/" + c.file));
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace llk
