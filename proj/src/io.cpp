#include "mopdom/io.hpp"

#include <fstream>
#include <sstream>

namespace mopdom {

namespace {

bool is_blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

ParseResult parse_mops(std::istream& in) {
    ParseResult res;
    std::string line;
    int lineno = 0;
    bool in_record = false;
    Mop cur;
    int first_line = 0;

    auto flush = [&]() {
        if (!in_record) return;
        normalize(cur);
        res.mops.push_back(cur);
        cur = Mop{};
        in_record = false;
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '#') continue;
        if (is_blank(line)) {
            flush();
            continue;
        }
        std::istringstream ls(line);
        if (!in_record) {
            int n;
            std::string extra;
            if (!(ls >> n) || (ls >> extra)) {
                res.errors.push_back({lineno, "expected a vertex count, got: " + line});
                continue;
            }
            cur.n = n;
            in_record = true;
            first_line = lineno;
            (void)first_line;
        } else {
            int a, b;
            std::string extra;
            if (!(ls >> a >> b) || (ls >> extra)) {
                res.errors.push_back({lineno, "expected a diagonal 'a b', got: " + line});
                continue;
            }
            cur.diagonals.push_back({a, b});
        }
    }
    flush();
    return res;
}

ParseResult parse_mops_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) {
        ParseResult res;
        res.errors.push_back({0, "cannot open file: " + path});
        return res;
    }
    return parse_mops(f);
}

void write_mop(std::ostream& out, const Mop& m) {
    out << m.n << "\n";
    Mop c = m;
    normalize(c);
    for (auto [a, b] : c.diagonals) out << a << " " << b << "\n";
    out << "\n";
}

std::string to_mop_text(const Mop& m) {
    std::ostringstream os;
    write_mop(os, m);
    return os.str();
}

}  // namespace mopdom
