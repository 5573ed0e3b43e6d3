#include "fqdist/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "fqdist/error.hpp"

namespace fqdist {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::int64_t parse_int(std::string_view s, std::size_t line) {
  s = trim(s);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    fail(line, "expected an integer, got '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::int64_t> parse_list(std::string_view s, std::size_t line) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = s.find(',', start);
    out.push_back(parse_int(s.substr(start, comma - start), line));
    if (comma == std::string_view::npos) return out;
    start = comma + 1;
  }
}

struct Header {
  std::optional<std::int64_t> p, ell, d;
  std::optional<std::vector<std::int64_t>> mod;
};

Header parse_header(std::string_view s, std::size_t line) {
  std::istringstream in{std::string(s)};
  std::string word;
  in >> word;
  if (word != "fq") fail(line, "header must start with 'fq'");
  Header h;
  while (in >> word) {
    const auto eq = word.find('=');
    if (eq == std::string::npos) fail(line, "malformed header field '" + word + "'");
    const std::string key = word.substr(0, eq);
    const std::string_view value = std::string_view(word).substr(eq + 1);
    if (key == "p") h.p = parse_int(value, line);
    else if (key == "ell") h.ell = parse_int(value, line);
    else if (key == "d") h.d = parse_int(value, line);
    else if (key == "mod") h.mod = parse_list(value, line);
    else fail(line, "unknown header field '" + key + "'");
  }
  if (!h.p || !h.ell || !h.d || !h.mod) fail(line, "header needs p, ell, d and mod");
  return h;
}

}  // namespace

std::string format_point_set(const PointSet& a) {
  const FieldCtx& f = a.field();
  std::ostringstream out;
  out << "fq p=" << f.p() << " ell=" << f.ell() << " d=" << a.dim() << " mod=";
  const auto mod = f.modulus();
  for (std::size_t i = 0; i < mod.size(); ++i) out << (i ? "," : "") << mod[i];
  out << '\n';
  for (std::size_t i = 0; i < a.size(); ++i) {
    const VecFq v = a.point(i);
    for (std::size_t k = 0; k < v.size(); ++k) out << (k ? "," : "") << v[k].idx;
    out << '\n';
  }
  return out.str();
}

PointSet parse_point_set(std::string_view text) {
  std::optional<Header> header;
  FieldPtr field;
  std::vector<VecFq> points;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (!header) {
      header = parse_header(line, line_no);
      try {
        field = FieldCtx::make(*header->p, *header->ell);
      } catch (const Error& e) {
        fail(line_no, e.what());
      }
      if (*header->d < 1) fail(line_no, "d must be positive");
      const auto mod = field->modulus();
      if (!std::equal(mod.begin(), mod.end(), header->mod->begin(), header->mod->end())) {
        fail(line_no, "modulus differs from the canonical one for this field");
      }
      continue;
    }
    const std::vector<std::int64_t> coords = parse_list(line, line_no);
    if (static_cast<std::int64_t>(coords.size()) != *header->d) {
      fail(line_no, "expected " + std::to_string(*header->d) + " coordinates");
    }
    VecFq v;
    for (std::int64_t c : coords) {
      if (c < 0 || c >= static_cast<std::int64_t>(field->q())) {
        fail(line_no, "coordinate " + std::to_string(c) + " outside the field");
      }
      v.push_back({static_cast<std::uint32_t>(c)});
    }
    points.push_back(std::move(v));
  }
  if (!header) fail(line_no, "missing 'fq' header");
  return PointSet(field, static_cast<int>(*header->d), points);
}

PointSet read_point_set_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_point_set(buf.str());
}

void write_point_set_file(const PointSet& a, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IoError, "cannot write " + path.string());
  out << format_point_set(a);
  if (!out) throw Error(Errc::IoError, "write failed for " + path.string());
}

}  // namespace fqdist
