#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mopdom/mop.hpp"

namespace mopdom {

struct ParseError {
    int line = 0;
    std::string message;
};

struct ParseResult {
    std::vector<Mop> mops;
    std::vector<ParseError> errors;

    bool ok() const { return errors.empty(); }
};

/// MOP text format: line 1 of a record = n, each further line "a b" (one
/// diagonal, a < b, sorted), '#' starts a comment line, a blank line ends the
/// record.  A file may hold several records.
ParseResult parse_mops(std::istream& in);
ParseResult parse_mops_file(const std::string& path);

void write_mop(std::ostream& out, const Mop& m);
std::string to_mop_text(const Mop& m);

}  // namespace mopdom
