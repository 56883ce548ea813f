#include "sts/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "sts/error.hpp"

namespace sts {
namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank, non-comment line split into tokens. Comment lines are
  // handed to `on_comment`. Returns false at end of input.
  template <typename OnComment>
  bool next(std::vector<std::string_view>& tokens, OnComment&& on_comment) {
    while (std::getline(in_, line_)) {
      ++number_;
      if (!line_.empty() && line_.back() == '\r') line_.pop_back();
      const auto first = line_.find_first_not_of(" \t");
      if (first == std::string::npos) continue;
      if (line_[first] == '#') {
        on_comment(std::string_view(line_).substr(first + 1));
        continue;
      }
      tokens.clear();
      std::string_view rest(line_);
      while (!rest.empty()) {
        const auto b = rest.find_first_not_of(" \t");
        if (b == std::string_view::npos) break;
        rest.remove_prefix(b);
        const auto e = rest.find_first_of(" \t");
        tokens.push_back(rest.substr(0, e));
        if (e == std::string_view::npos) break;
        rest.remove_prefix(e);
      }
      return true;
    }
    return false;
  }

  bool next(std::vector<std::string_view>& tokens) {
    return next(tokens, [](std::string_view) {});
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw StsError(ErrorCode::kParse,
                   "line " + std::to_string(number_) + ": " + what);
  }

  int integer(std::string_view token) const {
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      fail("expected an integer, got '" + std::string(token) + "'");
    }
    return value;
  }

 private:
  std::istream& in_;
  std::string line_;
  int number_ = 0;
};

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

StsDocument read_sts(std::istream& in) {
  LineReader reader(in);
  StsDocument doc;
  auto on_comment = [&](std::string_view body) {
    body = trim(body);
    constexpr std::string_view kKey = "construction";
    if (body.substr(0, kKey.size()) == kKey) {
      if (auto c = parse_construction(trim(body.substr(kKey.size())))) {
        doc.construction = *c;
      }
    }
  };

  std::vector<std::string_view> tokens;
  if (!reader.next(tokens, on_comment)) reader.fail("missing 'n m' header");
  if (tokens.size() != 2) reader.fail("header must be 'n m'");
  const int n = reader.integer(tokens[0]);
  const int m = reader.integer(tokens[1]);
  if (n < 0 || m < 0) reader.fail("negative size in header");

  std::vector<Triple> triples;
  triples.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    if (!reader.next(tokens, on_comment)) {
      reader.fail("expected " + std::to_string(m) + " triples, got " +
                  std::to_string(i));
    }
    if (tokens.size() != 3) reader.fail("triple line must have 3 vertices");
    const Triple t{reader.integer(tokens[0]), reader.integer(tokens[1]),
                   reader.integer(tokens[2])};
    if (!(t.a < t.b && t.b < t.c)) {
      reader.fail("triple vertices must be strictly ascending");
    }
    triples.push_back(t);
  }
  if (reader.next(tokens, on_comment)) reader.fail("trailing data");
  doc.system = build_system(n, triples);
  return doc;
}

StsDocument read_sts_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StsError(ErrorCode::kParse, "cannot open " + path);
  return read_sts(in);
}

void write_sts(std::ostream& out, const TripleSystem& s,
               Construction construction) {
  out << "# sts v1\n";
  if (construction != Construction::kUnknown) {
    out << "# construction " << construction_name(construction) << '\n';
  }
  out << s.n() << ' ' << s.size() << '\n';
  for (const Triple& t : s.triples()) {
    out << t.a << ' ' << t.b << ' ' << t.c << '\n';
  }
}

void write_sts(std::ostream& out, const SteinerSystem& s) {
  write_sts(out, s.system(), s.construction());
}

std::string to_sts_string(const TripleSystem& s, Construction construction) {
  std::ostringstream out;
  write_sts(out, s, construction);
  return out.str();
}

EdgeColoring read_coloring(std::istream& in, const TripleSystem& s) {
  LineReader reader(in);
  std::vector<std::string_view> tokens;
  if (!reader.next(tokens) || tokens.size() != 2 || tokens[0] != "colors") {
    reader.fail("expected 'colors r' header");
  }
  const int r = reader.integer(tokens[1]);
  std::vector<int> colors;
  colors.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!reader.next(tokens) || tokens.size() != 1) {
      reader.fail("expected one color per triple");
    }
    colors.push_back(reader.integer(tokens[0]));
  }
  if (reader.next(tokens)) reader.fail("more colors than triples");
  return EdgeColoring(s, r, std::move(colors));
}

void write_coloring(std::ostream& out, const EdgeColoring& c) {
  out << "colors " << c.r() << '\n';
  for (int color : c.colors()) out << color << '\n';
}

HoleCertificate read_hole(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string_view> tokens;
  if (!reader.next(tokens) || tokens.size() != 3 || tokens[0] != "hole") {
    reader.fail("expected 'hole k a' header");
  }
  const int k = reader.integer(tokens[1]);
  const int a = reader.integer(tokens[2]);
  if (k < 1 || a < 0) reader.fail("bad hole header");
  std::vector<std::vector<int>> parts;
  for (int i = 0; i < k; ++i) {
    if (a == 0) {
      parts.emplace_back();
      continue;
    }
    if (!reader.next(tokens)) reader.fail("missing hole part");
    if (static_cast<int>(tokens.size()) != a) {
      reader.fail("hole part must list exactly a vertices");
    }
    std::vector<int> part;
    for (auto tok : tokens) part.push_back(reader.integer(tok));
    parts.push_back(std::move(part));
  }
  return HoleCertificate::from_parts(std::move(parts));
}

void write_hole(std::ostream& out, const HoleCertificate& h) {
  out << "hole " << h.k << ' ' << h.a << '\n';
  if (h.a == 0) return;
  for (const auto& part : h.parts) {
    for (std::size_t i = 0; i < part.size(); ++i) {
      out << (i ? " " : "") << part[i];
    }
    out << '\n';
  }
}

}  // namespace sts
