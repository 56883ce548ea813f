#ifndef STS_IO_HPP
#define STS_IO_HPP

#include <iosfwd>
#include <string>

#include "sts/system.hpp"

namespace sts {

// STS text format:
//
//   # sts v1
//   # construction bose
//   n m
//   a b c        (m lines, 0-based, ascending within the line)
//
// Lines starting with '#' are comments. The `# construction <name>` comment
// is written by the constructions so that type labels can be re-derived on
// read; readers that ignore it still get the same system.
//
// Coloring text format:
//
//   colors r
//   c_0          (m lines, same order as the system's triples)
//
// Hole text format:
//
//   hole k a
//   v_1 ... v_a  (k lines, one part per line)

struct StsDocument {
  TripleSystem system;
  Construction construction = Construction::kUnknown;
};

StsDocument read_sts(std::istream& in);
StsDocument read_sts_file(const std::string& path);
void write_sts(std::ostream& out, const TripleSystem& s,
               Construction construction = Construction::kUnknown);
void write_sts(std::ostream& out, const SteinerSystem& s);
std::string to_sts_string(const TripleSystem& s,
                          Construction construction = Construction::kUnknown);

EdgeColoring read_coloring(std::istream& in, const TripleSystem& s);
void write_coloring(std::ostream& out, const EdgeColoring& c);

HoleCertificate read_hole(std::istream& in);
void write_hole(std::ostream& out, const HoleCertificate& h);

}  // namespace sts

#endif  // STS_IO_HPP
