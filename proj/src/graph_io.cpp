#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "error.hpp"
#include "graph.hpp"

namespace indexcode {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Splits a line into whitespace-separated integers; nullopt on any junk.
std::optional<std::vector<long long>> parse_integers(std::string_view line) {
  std::vector<long long> values;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos == line.size()) break;
    long long value = 0;
    const char* begin = line.data() + pos;
    const char* end = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || (ptr != end && *ptr != ' ' && *ptr != '\t')) return std::nullopt;
    values.push_back(value);
    pos += static_cast<std::size_t>(ptr - begin);
  }
  return values;
}

[[noreturn]] void syntax_error(std::size_t line, const std::string& what) {
  throw Error(Errc::Parse, "line " + std::to_string(line) + ": " + what);
}

constexpr long long kMaxVertices = 1'000'000;

FlowGraph parse_edge_list(std::string_view text) {
  std::optional<int> n;
  std::vector<Arc> arcs;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view line = text.substr(start, stop - start);
    start = stop + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    auto values = parse_integers(line);
    if (!values) syntax_error(line_no, "expected decimal integers, got '" + std::string(line) + "'");
    if (!n) {
      if (values->size() != 1) syntax_error(line_no, "first line must hold the vertex count n");
      if ((*values)[0] < 1 || (*values)[0] > kMaxVertices) {
        syntax_error(line_no, "vertex count must be in 1.." + std::to_string(kMaxVertices));
      }
      n = static_cast<int>((*values)[0]);
      continue;
    }
    if (values->size() != 2) syntax_error(line_no, "expected 'tail head'");
    const long long tail = (*values)[0];
    const long long head = (*values)[1];
    if (tail < 1 || tail > *n || head < 1 || head > *n) {
      syntax_error(line_no, "vertex out of range 1.." + std::to_string(*n));
    }
    arcs.push_back({static_cast<Vertex>(tail), static_cast<Vertex>(head)});
  }
  if (!n) throw Error(Errc::Parse, "empty input: missing vertex count");
  return FlowGraph(*n, std::move(arcs));
}

FlowGraph parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::Parse, "byte " + std::to_string(e.byte) + ": malformed JSON");
  }
  if (!doc.is_object()) throw Error(Errc::Parse, "expected a JSON object with fields 'n' and 'arcs'");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw Error(Errc::Parse, "field 'n' must be an integer");
  }
  const auto n = doc["n"].get<long long>();
  if (n < 1 || n > kMaxVertices) {
    throw Error(Errc::Parse, "field 'n' must be in 1.." + std::to_string(kMaxVertices));
  }
  if (!doc.contains("arcs") || !doc["arcs"].is_array()) {
    throw Error(Errc::Parse, "field 'arcs' must be an array");
  }
  std::vector<Arc> arcs;
  std::size_t index = 0;
  for (const auto& item : doc["arcs"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer()) {
      throw Error(Errc::Parse, "arcs[" + std::to_string(index) + "] must be a pair of integers");
    }
    const auto tail = item[0].get<long long>();
    const auto head = item[1].get<long long>();
    if (tail < 1 || tail > n || head < 1 || head > n) {
      throw Error(Errc::Parse, "arcs[" + std::to_string(index) + "]: vertex out of range 1.." +
                                   std::to_string(n));
    }
    arcs.push_back({static_cast<Vertex>(tail), static_cast<Vertex>(head)});
    ++index;
  }
  return FlowGraph(static_cast<int>(n), std::move(arcs));
}

}  // namespace

FlowGraph parse_raw_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::Json ? parse_json(text) : parse_edge_list(text);
}

PreprocessedGraph parse_graph(std::string_view text, GraphFormat format) {
  return preprocess(parse_raw_graph(text, format));
}

GraphFormat format_for_path(const std::filesystem::path& path) {
  return path.extension() == ".json" ? GraphFormat::Json : GraphFormat::EdgeList;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

PreprocessedGraph load_graph(const std::filesystem::path& path) {
  return parse_graph(read_text_file(path), format_for_path(path));
}

std::string to_edge_list(const FlowGraph& g) {
  std::string out = std::to_string(g.vertex_count()) + "\n";
  for (const Arc& a : g.arcs()) {
    out += std::to_string(a.tail) + " " + std::to_string(a.head) + "\n";
  }
  return out;
}

}  // namespace indexcode
