// setfile.hpp
// Line-oriented text format for candidate sets.
//
//     # smallbias set file v1
//     # n: <dimension>
//     # method: <construction tag>
//     # size: <|S|>
//     # random_bits: <bits drawn from the entropy source>
//     # <key>: <value>            (method parameters, seed, generator, ...)
//     <element 1>
//     ...
//
// Each element is ⌈n/4⌉ lowercase hex digits, most significant digit first,
// with coordinate 1 in the least-significant bit. Element order and
// multiplicity are preserved.

#pragma once

#include "smallbias/bias.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace smallbias {

class SetFileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void write_set_file(std::ostream& out, const CandidateSet& s);
std::string serialize(const CandidateSet& s);

CandidateSet read_set_file(std::istream& in);
CandidateSet parse_set_file(std::string_view text);

CandidateSet load_set_file(const std::string& path);
void save_set_file(const std::string& path, const CandidateSet& s);

}  // namespace smallbias
