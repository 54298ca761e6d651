#include "gsb/code_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_map>

#include "gsb/errors.hpp"

namespace gsb {
namespace {

std::vector<std::uint64_t> split_uints(const std::string& line, std::size_t lineno) {
  std::vector<std::uint64_t> out;
  const char* p = line.data();
  const char* end = p + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    if (p == end) break;
    std::uint64_t v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc() || (next < end && *next != ' ' && *next != '\t' && *next != '\r')) {
      throw ParseError(lineno, "expected non-negative integers");
    }
    out.push_back(v);
    p = next;
  }
  return out;
}

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

void read_meta_comment(const std::string& line, CodeMetadata& meta, std::size_t lineno) {
  auto body = line.substr(1);
  auto colon = body.find(':');
  if (colon == std::string::npos) return;
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  std::string key = trim(body.substr(0, colon));
  std::string value = trim(body.substr(colon + 1));
  if (key == "seed") {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || ptr != value.data() + value.size()) throw ParseError(lineno, "bad seed comment");
    meta.seed = v;
  } else if (key == "construction") {
    meta.construction = value;
  }
}

}  // namespace

Code read_code_text(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  CodeMetadata meta;
  bool have_header = false;
  std::uint64_t q = 0, n = 0, m = 0;
  std::vector<Word> words;
  std::unordered_map<Word, std::size_t, WordHash> first_line;

  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line)) continue;
    auto first = line.find_first_not_of(" \t");
    if (line[first] == '#') {
      read_meta_comment(line.substr(first), meta, lineno);
      continue;
    }
    auto values = split_uints(line, lineno);
    if (!have_header) {
      if (values.size() != 3) throw ParseError(lineno, "header must be \"q n M\"");
      q = values[0];
      n = values[1];
      m = values[2];
      if (q < 2 || q > 0xffffffffULL) throw ParseError(lineno, "alphabet size must be in [2, 2^32)");
      if (n < 1) throw ParseError(lineno, "block length must be at least 1");
      have_header = true;
      words.reserve(m);
      continue;
    }
    if (words.size() == m) throw ParseError(lineno, "more rows than the header's M = " + std::to_string(m));
    if (values.size() != n) {
      throw ParseError(lineno, "row has " + std::to_string(values.size()) + " symbols, expected " + std::to_string(n));
    }
    std::vector<Symbol> syms;
    syms.reserve(n);
    for (auto v : values) {
      if (v >= q) throw ParseError(lineno, "symbol " + std::to_string(v) + " >= q = " + std::to_string(q));
      syms.push_back(static_cast<Symbol>(v));
    }
    Word w(std::move(syms));
    if (auto [it, inserted] = first_line.emplace(w, lineno); !inserted) {
      throw ParseError(lineno, "duplicate word (first seen on line " + std::to_string(it->second) + ")");
    }
    words.push_back(std::move(w));
  }
  if (!have_header) throw ParseError(lineno + 1, "missing header");
  if (words.size() != m) {
    throw ParseError(lineno + 1, "expected " + std::to_string(m) + " rows, found " + std::to_string(words.size()));
  }
  return Code(static_cast<std::uint32_t>(q), n, std::move(words), std::move(meta));
}

void write_code_text(std::ostream& out, const Code& c) {
  if (!c.meta().construction.empty()) out << "# construction: " << c.meta().construction << '\n';
  if (c.meta().seed) out << "# seed: " << *c.meta().seed << '\n';
  out << c.q() << ' ' << c.n() << ' ' << c.size() << '\n';
  for (const auto& w : c.words()) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out << ' ';
      out << w[i];
    }
    out << '\n';
  }
}

nlohmann::json code_to_json(const Code& c) {
  nlohmann::json j;
  j["q"] = c.q();
  j["n"] = c.n();
  auto rows = nlohmann::json::array();
  for (const auto& w : c.words()) rows.push_back(std::vector<Symbol>(w.begin(), w.end()));
  j["words"] = std::move(rows);
  nlohmann::json meta = nlohmann::json::object();
  if (c.meta().seed) meta["seed"] = *c.meta().seed;
  if (!c.meta().construction.empty()) meta["construction"] = c.meta().construction;
  j["meta"] = std::move(meta);
  return j;
}

Code code_from_json(const nlohmann::json& j) {
  try {
    auto q = j.at("q").get<std::uint32_t>();
    auto n = j.at("n").get<std::size_t>();
    std::vector<Word> words;
    for (const auto& row : j.at("words")) words.emplace_back(row.get<std::vector<Symbol>>());
    CodeMetadata meta;
    if (j.contains("meta")) {
      const auto& m = j.at("meta");
      if (m.contains("seed")) meta.seed = m.at("seed").get<std::uint64_t>();
      if (m.contains("construction")) meta.construction = m.at("construction").get<std::string>();
    }
    return Code(q, n, std::move(words), std::move(meta));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, std::string("structured code: ") + e.what());
  } catch (const InputError& e) {
    throw ParseError(1, std::string("structured code: ") + e.what());
  }
}

Code load_code(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open code file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(1, e.what());
    }
    return code_from_json(j);
  }
  std::istringstream is(text);
  return read_code_text(is);
}

void save_code(const Code& c, const std::filesystem::path& path, CodeFormat format) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write code file '" + path.string() + "'");
  if (format == CodeFormat::json) {
    out << code_to_json(c).dump(2) << '\n';
  } else {
    write_code_text(out, c);
  }
}

}  // namespace gsb
