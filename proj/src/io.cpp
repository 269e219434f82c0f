#include "sdg/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "sdg/error.hpp"

namespace sdg {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == ',')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != ',') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

bool to_int(std::string_view tok, long long& out) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

}  // namespace

Sidigraph parse_sidigraph(std::string_view text) {
  int order = -1;
  std::vector<Arc> arcs;
  std::vector<std::size_t> arc_lines;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = split_ws(line);
    if (tok.empty()) continue;

    if (order < 0) {
      long long n = 0;
      if (tok.size() != 2 || tok[0] != "sidigraph" || !to_int(tok[1], n) || n < 0 || n > 1'000'000) {
        throw ParseError(line_no, "expected header 'sidigraph <n>'");
      }
      order = static_cast<int>(n);
      continue;
    }
    if (tok.size() != 3) throw ParseError(line_no, "expected '<tail> <head> <+|->'");
    long long t = 0, h = 0;
    if (!to_int(tok[0], t) || !to_int(tok[1], h)) throw ParseError(line_no, "vertex index is not an integer");
    if (t < 1 || t > order || h < 1 || h > order) {
      throw ParseError(line_no, "vertex index out of range 1.." + std::to_string(order));
    }
    if (t == h) throw ParseError(line_no, "self-loop at vertex " + std::to_string(t));
    int sign = 0;
    if (tok[2] == "+" || tok[2] == "+1") {
      sign = 1;
    } else if (tok[2] == "-" || tok[2] == "-1") {
      sign = -1;
    } else {
      throw ParseError(line_no, "bad sign token '" + std::string(tok[2]) + "'");
    }
    const Arc arc{static_cast<int>(t - 1), static_cast<int>(h - 1), sign};
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      if (arcs[k].tail == arc.tail && arcs[k].head == arc.head) {
        throw ParseError(line_no, "duplicate arc " + std::to_string(t) + " " + std::to_string(h) +
                                      " (first on line " + std::to_string(arc_lines[k]) + ")");
      }
    }
    arcs.push_back(arc);
    arc_lines.push_back(line_no);
  }
  if (order < 0) throw ParseError(line_no == 0 ? 1 : line_no, "missing 'sidigraph <n>' header");
  return Sidigraph(order, std::move(arcs));
}

std::string format_sidigraph(const Sidigraph& s, std::string_view comment) {
  std::ostringstream out;
  std::size_t pos = 0;
  while (pos < comment.size()) {
    const std::size_t nl = comment.find('\n', pos);
    const std::string_view line = comment.substr(pos, nl == std::string_view::npos ? comment.size() - pos : nl - pos);
    out << "# " << line << '\n';
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  out << "sidigraph " << s.order() << '\n';
  for (const Arc& a : s.arcs()) out << a.tail + 1 << ' ' << a.head + 1 << ' ' << (a.sign > 0 ? '+' : '-') << '\n';
  return out.str();
}

Sidigraph read_sidigraph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sidigraph(buf.str());
}

void write_sidigraph_file(const std::filesystem::path& path, const Sidigraph& s, std::string_view comment) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << format_sidigraph(s, comment);
  if (!out) throw InvalidArgument("write failed for " + path.string());
}

IntPolynomial parse_polynomial(std::string_view text) {
  std::vector<BigInt> coeffs;
  for (std::string_view tok : split_ws(text)) {
    std::string digits(tok);
    if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
    const std::size_t start = !digits.empty() && digits.front() == '-' ? 1 : 0;
    if (digits.size() == start || digits.find_first_not_of("0123456789", start) != std::string::npos) {
      throw ParseError(1, "bad polynomial coefficient '" + std::string(tok) + "'");
    }
    coeffs.emplace_back(digits);
  }
  if (coeffs.empty()) throw ParseError(1, "empty polynomial");
  return IntPolynomial::from_leading_first(coeffs);
}

std::string format_polynomial_list(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const BigInt& c : p.leading_first()) {
    if (!out.empty()) out += ' ';
    out += c.str();
  }
  return out;
}

}  // namespace sdg
