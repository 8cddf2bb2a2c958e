#include "slpz/slpz_format.hpp"

#include <charconv>
#include <sstream>

#include <json.hpp>

namespace slpz {

namespace {

constexpr std::size_t kHeaderLines = 5;

class LineReader {
public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Next LF-terminated line, or throws "truncated".
  std::string_view next() {
    ++line_;
    const std::size_t lf = text_.find('\n', offset_);
    if (lf == std::string_view::npos) {
      throw FormatError(line_, "truncated");
    }
    std::string_view line = text_.substr(offset_, lf - offset_);
    offset_ = lf + 1;
    return line;
  }

  [[nodiscard]] bool at_end() const { return offset_ == text_.size(); }
  [[nodiscard]] std::size_t line() const { return line_; }

private:
  std::string_view text_;
  std::size_t offset_ = 0;
  std::size_t line_ = 0;
};

std::uint64_t parse_number(std::string_view token, std::size_t line,
                           const char* what) {
  std::uint64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last ||
      (token.size() > 1 && token.front() == '0')) {
    throw FormatError(line, std::string("malformed ") + what + " '" +
                                std::string(token) + "'");
  }
  return value;
}

std::uint64_t keyed_value(std::string_view line, std::string_view key,
                          std::size_t line_no) {
  if (line.size() <= key.size() || line.substr(0, key.size()) != key ||
      line[key.size()] != ' ') {
    throw FormatError(line_no, "expected '" + std::string(key) + " <n>'");
  }
  return parse_number(line.substr(key.size() + 1), line_no, key.data());
}

std::vector<std::string_view> split_spaces(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= line.size()) {
    const std::size_t space = line.find(' ', start);
    const std::size_t stop = space == std::string_view::npos ? line.size() : space;
    out.push_back(line.substr(start, stop - start));
    if (space == std::string_view::npos) {
      break;
    }
    start = space + 1;
  }
  return out;
}

}  // namespace

std::string write_slpz(const Slp& slp) {
  validate_slp(slp);
  std::ostringstream out;
  out << "SLPZ 1\n"
      << "alphabet " << slp.alphabet_size << '\n'
      << "length " << expanded_length(slp) << '\n'
      << "start " << slp.start << '\n'
      << "rules " << slp.rules.size() << '\n';
  for (const Rule& r : slp.rules) {
    out << r.lhs << ' ' << r.left << ' ' << r.right << '\n';
  }
  return out.str();
}

SlpzFile parse_slpz(std::string_view text) {
  LineReader reader(text);
  SlpzFile file;

  const std::string_view magic = reader.next();
  if (magic.substr(0, 5) != "SLPZ ") {
    throw FormatError(1, "bad magic");
  }
  if (magic != "SLPZ 1") {
    throw FormatError(1, "unsupported version '" + std::string(magic.substr(5)) + "'");
  }

  const std::uint64_t alphabet = keyed_value(reader.next(), "alphabet", 2);
  if (alphabet == 0 || alphabet > 256) {
    throw FormatError(2, "alphabet must be in 1..256");
  }
  file.slp.alphabet_size = static_cast<Symbol>(alphabet);
  file.length = keyed_value(reader.next(), "length", 3);
  const std::uint64_t start = keyed_value(reader.next(), "start", 4);
  const std::uint64_t count = keyed_value(reader.next(), "rules", 5);
  if (count > kMaxInputLength) {
    throw FormatError(5, "too many rules");
  }

  file.slp.rules.reserve(std::min<std::uint64_t>(count, text.size() / 6 + 1));
  for (std::uint64_t k = 0; k < count; ++k) {
    const std::string_view line = reader.next();
    const std::size_t line_no = reader.line();
    const auto tokens = split_spaces(line);
    if (tokens.size() != 3) {
      throw FormatError(line_no, "expected '<lhs> <left> <right>'");
    }
    const std::uint64_t lhs = parse_number(tokens[0], line_no, "rule id");
    const std::uint64_t left = parse_number(tokens[1], line_no, "rule id");
    const std::uint64_t right = parse_number(tokens[2], line_no, "rule id");
    const std::uint64_t expected = alphabet + k;
    if (lhs != expected) {
      throw FormatError(line_no, "id gap: rule defines " + std::to_string(lhs) +
                                     ", expected " + std::to_string(expected));
    }
    if (left >= lhs || right >= lhs) {
      throw FormatError(line_no, "forward reference to " +
                                     std::to_string(left >= lhs ? left : right));
    }
    file.slp.rules.push_back({static_cast<Symbol>(lhs), static_cast<Symbol>(left),
                              static_cast<Symbol>(right)});
  }
  if (!reader.at_end()) {
    throw FormatError(reader.line() + 1, "trailing data");
  }
  if (start >= alphabet + count) {
    throw FormatError(4, "forward reference: start symbol " + std::to_string(start) +
                             " is not defined");
  }
  file.slp.start = static_cast<Symbol>(start);

  std::uint64_t actual = 0;
  try {
    actual = expanded_length(file.slp);
  } catch (const SlpError& e) {
    throw FormatError(e.rule() == SlpError::npos ? 3 : kHeaderLines + 1 + e.rule(),
                      e.what());
  }
  if (actual != file.length) {
    throw FormatError(3, "length mismatch: header says " + std::to_string(file.length) +
                             ", grammar generates " + std::to_string(actual));
  }
  return file;
}

std::string phase_to_json(const PhaseStats& s) {
  nlohmann::ordered_json j;
  j["phase"] = s.phase;
  j["len_before"] = s.len_before;
  j["len_after"] = s.len_after;
  j["factors_before"] = s.factors_before;
  j["factors_after"] = s.factors_after;
  j["free_before"] = s.free_before;
  j["free_after"] = s.free_after;
  j["free_created_by_pairing"] = s.free_created_by_pairing;
  j["fresh_letters"] = s.fresh_letters;
  return j.dump();
}

std::string trace_to_jsonl(const std::vector<PhaseStats>& stats) {
  std::string out;
  for (const PhaseStats& s : stats) {
    out += phase_to_json(s);
    out += '\n';
  }
  return out;
}

std::string report_to_json(const GrammarReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["lz_phrases"] = r.lz_phrases;
  j["phases"] = r.phases;
  j["rules"] = r.rules;
  j["distinct_terminals"] = r.distinct_terminals;
  j["cnf_nonterminals"] = r.cnf_nonterminals;
  j["free_letters_created"] = r.free_letters_created;
  j["max_free_per_factor"] = r.max_free_per_factor;
  j["ratio"] = r.ratio;
  j["rule_bound"] = r.rule_bound;
  j["phase_bound"] = r.phase_bound;
  return j.dump();
}

}  // namespace slpz
