#include "kemeny/io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "kemeny/errors.hpp"

namespace kemeny {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank, non-comment line; false at end of input.
  bool next(Line& out) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++number_;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      std::istringstream words(raw);
      std::vector<std::string> tokens;
      for (std::string w; words >> w;) tokens.push_back(w);
      if (tokens.empty() || tokens.front().front() == '#') continue;
      out = {number_, std::move(tokens)};
      return true;
    }
    return false;
  }

  std::size_t last_line() const { return number_; }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

long long parse_int(const std::string& token, std::size_t line) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected an integer, got '" + token + "'");
  }
  return value;
}

double parse_real(const std::string& token, std::size_t line) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected a number, got '" + token + "'");
  }
  return value;
}

PreferenceProfile read_profile_body(LineReader& reader, const Line& header) {
  const long long k = parse_int(header.tokens[0], header.number);
  const long long n = parse_int(header.tokens[1], header.number);
  if (k < 1 || n < 1) throw ParseError(header.number, "k and n must be positive");

  std::vector<Ranking> voters;
  voters.reserve(static_cast<std::size_t>(n));
  Line line;
  for (long long v = 0; v < n; ++v) {
    if (!reader.next(line)) throw ParseError(reader.last_line(), "expected " + std::to_string(n) + " voter lines");
    if (static_cast<long long>(line.tokens.size()) != k) {
      throw ParseError(line.number, "voter line must list " + std::to_string(k) + " arms");
    }
    std::vector<Arm> order;
    for (const auto& t : line.tokens) order.push_back(static_cast<Arm>(parse_int(t, line.number)));
    try {
      voters.emplace_back(std::move(order));
    } catch (const InvalidInput&) {
      throw ParseError(line.number, "voter line is not a permutation of 0..k-1");
    }
  }
  if (reader.next(line)) throw ParseError(line.number, "unexpected trailing content");
  return PreferenceProfile(std::move(voters));
}

SquareMatrix read_matrix_body(LineReader& reader, const Line& header) {
  const long long k = parse_int(header.tokens[0], header.number);
  if (k < 1) throw ParseError(header.number, "k must be positive");
  SquareMatrix q(static_cast<int>(k));
  Line line;
  for (int i = 0; i < k; ++i) {
    if (!reader.next(line)) throw ParseError(reader.last_line(), "expected " + std::to_string(k) + " matrix rows");
    if (static_cast<long long>(line.tokens.size()) != k) {
      throw ParseError(line.number, "matrix row must have " + std::to_string(k) + " entries");
    }
    for (int j = 0; j < k; ++j) q(i, j) = parse_real(line.tokens[static_cast<std::size_t>(j)], line.number);
  }
  if (reader.next(line)) throw ParseError(line.number, "unexpected trailing content");
  return q;
}

Line read_header(LineReader& reader) {
  Line header;
  if (!reader.next(header)) throw ParseError(0, "empty input");
  return header;
}

}  // namespace

PreferenceProfile read_profile(std::istream& in) {
  LineReader reader(in);
  const Line header = read_header(reader);
  if (header.tokens.size() != 2) throw ParseError(header.number, "profile header must be 'k n'");
  return read_profile_body(reader, header);
}

SquareMatrix read_matrix(std::istream& in) {
  LineReader reader(in);
  const Line header = read_header(reader);
  if (header.tokens.size() != 1) throw ParseError(header.number, "matrix header must be 'k'");
  return read_matrix_body(reader, header);
}

std::variant<SquareMatrix, PreferenceProfile> read_matrix_or_profile(std::istream& in) {
  LineReader reader(in);
  const Line header = read_header(reader);
  if (header.tokens.size() == 1) return read_matrix_body(reader, header);
  if (header.tokens.size() == 2) return read_profile_body(reader, header);
  throw ParseError(header.number, "header must be 'k' (matrix) or 'k n' (profile)");
}

void write_profile(std::ostream& out, const PreferenceProfile& p) {
  out << p.arms() << ' ' << p.voters() << '\n';
  for (const auto& voter : p.rankings()) {
    for (int pos = 0; pos < voter.size(); ++pos) out << (pos ? " " : "") << voter[pos];
    out << '\n';
  }
}

void write_matrix(std::ostream& out, const SquareMatrix& q) {
  out << q.size() << '\n';
  const auto old = out.precision(17);
  for (int i = 0; i < q.size(); ++i) {
    for (int j = 0; j < q.size(); ++j) out << (j ? " " : "") << q(i, j);
    out << '\n';
  }
  out.precision(old);
}

std::variant<SquareMatrix, PreferenceProfile> load_matrix_or_profile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_matrix_or_profile(in);
}

}  // namespace kemeny
