#include <gtest/gtest.h>

#include <sstream>

#include "sts/constructions.hpp"
#include "sts/error.hpp"
#include "sts/io.hpp"

using namespace sts;

namespace {

std::string parse_error(const std::string& text) {
  std::istringstream in(text);
  try {
    read_sts(in);
  } catch (const StsError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    return e.what();
  }
  ADD_FAILURE() << "accepted: " << text;
  return {};
}

}  // namespace

TEST(Io, RoundTripKeepsSystemAndConstruction) {
  for (const SteinerSystem& s : {fano(), s9(), bose(15), skolem(19)}) {
    const std::string text = to_sts_string(s, s.construction());
    std::istringstream in(text);
    const StsDocument doc = read_sts(in);
    EXPECT_EQ(doc.system, s.system());
    EXPECT_EQ(doc.construction, s.construction());
    const SteinerSystem again = attach_labels(doc.system, doc.construction);
    EXPECT_EQ(again.labels(), s.labels());
  }
}

TEST(Io, WriterFormat) {
  std::ostringstream out;
  write_sts(out, fano());
  const std::string text = out.str();
  EXPECT_EQ(text.rfind("# sts v1\n# construction fano\n7 7\n", 0), 0u);
}

TEST(Io, StrictReader) {
  EXPECT_NE(parse_error("3 1\n0 2 1\n").find("line 2"), std::string::npos);
  parse_error("3 2\n0 1 2\n");
  parse_error("3 1\n0 1 2\n0 1 2\n");
  parse_error("3 1\n0 1 x\n");
  parse_error("3\n");
  parse_error("");
  parse_error("3 1\n0 1\n");
}

TEST(Io, CommentsAndBlankLinesAreSkipped) {
  std::istringstream in("# hello\n\n3 1\n# mid\n0 1 2\n\n");
  EXPECT_EQ(read_sts(in).system.size(), 1u);
}

TEST(Io, ColoringAndHoleRoundTrip) {
  const SteinerSystem s = s9();
  const EdgeColoring c(s, 3, {0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2});
  std::stringstream buf;
  write_coloring(buf, c);
  EXPECT_EQ(read_coloring(buf, s).colors(), c.colors());

  const HoleCertificate h = HoleCertificate::from_parts({{4, 0}, {1, 5}, {3, 7}});
  std::stringstream hb;
  write_hole(hb, h);
  const HoleCertificate back = read_hole(hb);
  EXPECT_EQ(back.k, 3);
  EXPECT_EQ(back.a, 2);
  EXPECT_EQ(back.parts, h.parts);
}

TEST(Io, ColoringSizeMismatchIsAnError) {
  std::istringstream in("colors 3\n0\n1\n");
  EXPECT_THROW(read_coloring(in, s9()), StsError);
}
