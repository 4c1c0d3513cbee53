#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lipmap::testing {

struct GoldenCase {
    std::string name;
    int exit_code = 0;
    std::vector<std::string> args; ///< still containing '@/' placeholders
};

inline std::string read_text(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline std::vector<GoldenCase> load_golden_cases(const std::string& dir)
{
    std::istringstream in(read_text(dir + "/cases.txt"));
    std::vector<GoldenCase> cases;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream words(line);
        GoldenCase c;
        words >> c.name >> c.exit_code;
        for (std::string w; words >> w;)
            c.args.push_back(w);
        cases.push_back(std::move(c));
    }
    return cases;
}

inline std::vector<std::string> expand_args(const GoldenCase& c, const std::string& dir)
{
    std::vector<std::string> out;
    for (const auto& a : c.args)
        out.push_back(a.rfind("@/", 0) == 0 ? dir + "/inputs/" + a.substr(2) : a);
    return out;
}

/// What gets compared: stdout, then stderr (if any) with the inputs
/// directory folded back to '@/'.
inline std::string golden_text(const std::string& out, std::string err, const std::string& dir)
{
    const std::string prefix = dir + "/inputs/";
    for (auto at = err.find(prefix); at != std::string::npos; at = err.find(prefix, at))
        err.replace(at, prefix.size(), "@/");
    return err.empty() ? out : out + "--- stderr\n" + err;
}

} // namespace lipmap::testing
