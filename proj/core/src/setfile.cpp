#include "hindlab/setfile.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "hindlab/error.hpp"

namespace hindlab {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::int64_t parse_int(std::string_view tok, std::size_t line) {
  tok = trim(tok);
  std::int64_t v = 0;
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc{} || ptr != end || tok.empty()) {
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  }
  return v;
}

struct Range {
  std::int64_t a;
  std::int64_t b;
  std::size_t line;
};

}  // namespace

ParsedSet parse_set_text(std::string_view text) {
  std::optional<std::pair<std::int64_t, std::int64_t>> window;
  std::vector<Range> ranges;
  std::vector<std::string> comments;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      comments.emplace_back(trim(line.substr(1)));
      continue;
    }
    if (line.starts_with("window")) {
      if (window) throw ParseError(line_no, "duplicate window header");
      std::istringstream in{std::string(line.substr(6))};
      std::string lo;
      std::string hi;
      std::string extra;
      if (!(in >> lo >> hi) || (in >> extra)) throw ParseError(line_no, "expected 'window <lo> <hi>'");
      window.emplace(parse_int(lo, line_no), parse_int(hi, line_no));
      if (window->first > window->second) throw ParseError(line_no, "window has lo > hi");
      continue;
    }
    const auto dots = line.find("..");
    if (dots == std::string_view::npos) {
      const std::int64_t n = parse_int(line, line_no);
      ranges.push_back({n, n, line_no});
    } else {
      const std::int64_t a = parse_int(line.substr(0, dots), line_no);
      const std::int64_t b = parse_int(line.substr(dots + 2), line_no);
      if (a > b) throw ParseError(line_no, "range with a > b");
      ranges.push_back({a, b, line_no});
    }
  }
  if (!window) throw ParseError(line_no == 0 ? 1 : line_no, "missing 'window <lo> <hi>' header");
  const auto [lo, hi] = *window;
  for (const Range& r : ranges) {
    if (r.a < lo || r.b > hi) throw ParseError(r.line, "member outside the window");
  }
  const WindowedSet empty(lo, hi);
  std::vector<WindowedSet::word_type> words(empty.words().begin(), empty.words().end());
  for (const Range& r : ranges) {
    for (std::int64_t n = r.a; n <= r.b; ++n) {
      const auto i = static_cast<std::uint64_t>(n - lo);
      words[i / 64] |= WindowedSet::word_type{1} << (i % 64);
    }
  }
  return {WindowedSet::from_words(lo, hi, std::move(words)), std::move(comments)};
}

ParsedSet read_set_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_set_text(buf.str());
}

std::string serialize_set(const WindowedSet& s, const std::vector<std::string>& header) {
  std::ostringstream out;
  for (const auto& h : header) out << "# " << h << '\n';
  out << "window " << s.lo() << ' ' << s.hi() << '\n';
  std::optional<std::int64_t> start;
  std::int64_t prev = 0;
  auto flush = [&] {
    if (!start) return;
    if (*start == prev) {
      out << prev << '\n';
    } else {
      out << *start << ".." << prev << '\n';
    }
  };
  s.for_each_member([&](std::int64_t n) {
    if (start && n == prev + 1) {
      prev = n;
      return;
    }
    flush();
    start = n;
    prev = n;
  });
  flush();
  return out.str();
}

}  // namespace hindlab
