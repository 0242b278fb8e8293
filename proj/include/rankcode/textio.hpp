#ifndef RANKCODE_TEXTIO_HPP
#define RANKCODE_TEXTIO_HPP

#include "rankcode/field.hpp"
#include "rankcode/gabidulin.hpp"
#include "rankcode/matrix.hpp"

#include <string>
#include <vector>

namespace rankcode {

// Canonical hex of an element: the integer sum_i c_i q^i (little-endian digits).
std::string ext_to_hex(const Field& f, const Ext& a);
Ext ext_from_hex(const Field& f, const std::string& s);

// one hex symbol per line
std::string format_codeword_hex(const Field& f, const std::vector<Ext>& v);
std::vector<Ext> parse_codeword_hex(const Field& f, const std::string& text);

// Matrix text format: header "q rows cols", then one row per line.
// Rows are contiguous digit strings for q <= 10 and space-separated otherwise.
std::string format_matq(const MatQ& x);
MatQ parse_matq(const std::string& text);

// Packet file: headerless, one packet per line of M base-q digits.
std::string format_packets(const MatQ& x);
MatQ parse_packets(const std::string& text, unsigned q, std::size_t M);

// "q=2,m=8[,poly=0x11D]": poly digits encode the monic modulus in base q
Field::Ptr parse_field_spec(const std::string& spec);

// "gab:q=2,m=8,n=8,k=4[,poly=0x11D]"
GabidulinCode parse_code_spec(const std::string& spec);

}  // namespace rankcode

#endif
