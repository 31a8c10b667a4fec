#pragma once

#include "twistrep/extparams.hpp"

#include <string>

namespace twistrep {

class ParseError : public std::invalid_argument {
public:
    ParseError(int line, int column, const std::string& message)
        : std::invalid_argument("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                                message),
          line(line),
          column(column) {}
    int line;
    int column;
};

// Datum files are a list of `key = value` entries, one per key:
//
//   rank = 3
//   simple_roots = [[1 -1 0] [0 1 -1]]
//   simple_coroots = [[1 -1 0] [0 1 -1]]
//   xi0 = [[1 0 0] [0 1 0] [0 0 1]]      # rows of the matrix on cocharacters
//   delta0 = [[1 0 0] [0 1 0] [0 0 1]]
//
// Values may span lines; `#` starts a comment. xi0 and delta0 default to the
// identity when omitted. A datum with no simple roots writes `[]`.
DatumDescription parse_datum_text(const std::string& text);
std::string format_datum(const DatumDescription& d);

// "[1 1/2 -3]" or "1 1/2 -3"
RatVec parse_ratvec(const std::string& text);
LatticeVec parse_latticevec(const std::string& text);

// "e" or "s0.s2.s1"
std::vector<int> parse_word(const std::string& text);

// one `extblock` record: "<index> w=<word> lambda=[..] tau=[..] ell=[..] t=[..] z=<..> zeta=<..> eps=<..>"
std::string format_ext_record(int index, const ExtendedParam& E);
// reads the quadruple back; the characters after `t=` are ignored
ExtendedParam parse_ext_record(const std::string& line, std::shared_ptr<const RootDatum> datum, const RatVec& gamma,
                               const RatVec& g);

}  // namespace twistrep
