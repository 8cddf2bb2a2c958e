// slpz: command-line front end over the libslpz C API.
//
//   slpz compress <in> <out> [--dedup] [--trace <path>] [--stats]
//   slpz decompress <in> <out>
//   slpz selftest [--limit N] [--seed S]
//
// Exit codes: 0 ok, 1 domain error, 2 I/O error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "slpz/slpz.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitIo = 2;

struct GrammarDeleter {
  void operator()(slpz_grammar* g) const { slpz_grammar_free(g); }
};
using GrammarPtr = std::unique_ptr<slpz_grammar, GrammarDeleter>;

struct BufferDeleter {
  void operator()(void* p) const { slpz_free(p); }
};
template <typename T>
using Buffer = std::unique_ptr<T, BufferDeleter>;

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return std::nullopt;
  }
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) {
    return std::nullopt;
  }
  return data;
}

bool write_file(const std::string& path, const void* data, std::size_t size) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return false;
  }
  out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
  out.close();
  return static_cast<bool>(out);
}

int io_error(const std::string& what, const std::string& path) {
  std::cerr << "slpz: cannot " << what << " '" << path << "'\n";
  return kExitIo;
}

int domain_error(slpz_status status) {
  std::cerr << "slpz: " << slpz_last_error() << '\n';
  return status == SLPZ_ERROR_OUT_OF_MEMORY ? kExitIo : kExitDomain;
}

int cmd_compress(const std::string& input, const std::string& output, bool dedup,
                 const std::string& trace_path, bool stats) {
  const auto data = read_file(input);
  if (!data) {
    return io_error("read", input);
  }
  if (data->empty()) {
    std::cerr << "slpz: empty input\n";
    return kExitDomain;
  }

  slpz_options options;
  slpz_options_init(&options);
  options.dedup = dedup ? 1 : 0;
  slpz_grammar* raw = nullptr;
  const slpz_status status = slpz_compress(
      reinterpret_cast<const std::uint8_t*>(data->data()), data->size(), &options, &raw);
  if (status != SLPZ_OK) {
    return domain_error(status);
  }
  const GrammarPtr grammar(raw);

  char* text = nullptr;
  std::size_t size = 0;
  if (const auto s = slpz_serialize(grammar.get(), &text, &size); s != SLPZ_OK) {
    return domain_error(s);
  }
  const Buffer<char> serialized(text);
  if (!write_file(output, text, size)) {
    return io_error("write", output);
  }

  if (!trace_path.empty()) {
    char* trace = nullptr;
    if (const auto s = slpz_trace_jsonl(grammar.get(), &trace, &size); s != SLPZ_OK) {
      return domain_error(s);
    }
    const Buffer<char> owned(trace);
    if (!write_file(trace_path, trace, size)) {
      return io_error("write", trace_path);
    }
  }

  if (stats) {
    char* report = nullptr;
    if (const auto s = slpz_report_json(grammar.get(), &report, &size); s != SLPZ_OK) {
      return domain_error(s);
    }
    const Buffer<char> owned(report);
    std::cout << report << '\n';
  }
  return kExitOk;
}

int cmd_decompress(const std::string& input, const std::string& output) {
  const auto text = read_file(input);
  if (!text) {
    return io_error("read", input);
  }
  slpz_grammar* raw = nullptr;
  if (const auto s = slpz_parse(text->data(), text->size(), &raw); s != SLPZ_OK) {
    std::cerr << "slpz: " << input << ": " << slpz_last_error() << '\n';
    return kExitDomain;
  }
  const GrammarPtr grammar(raw);
  std::uint8_t* bytes = nullptr;
  std::size_t size = 0;
  if (const auto s = slpz_expand(grammar.get(), &bytes, &size); s != SLPZ_OK) {
    return domain_error(s);
  }
  const Buffer<std::uint8_t> owned(bytes);
  if (!write_file(output, bytes, size)) {
    return io_error("write", output);
  }
  return kExitOk;
}

int cmd_selftest(std::size_t limit, std::uint64_t seed, bool inject_fault) {
  char* summary = nullptr;
  std::size_t size = 0;
  const slpz_status status = slpz_selftest(limit, seed, inject_fault ? 1 : 0, &summary, &size);
  const Buffer<char> owned(summary);
  if (summary != nullptr) {
    std::cout << summary;
  }
  if (status == SLPZ_OK) {
    return kExitOk;
  }
  std::cerr << "slpz: selftest failed: " << slpz_last_error() << '\n';
  return status == SLPZ_ERROR_INVARIANT ? kExitDomain : kExitIo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grammar-based compression into straight-line programs"};
  app.require_subcommand(1);

  std::string input, output, trace_path;
  bool dedup = false;
  bool stats = false;
  auto* compress = app.add_subcommand("compress", "Compress a file into SLPZ text");
  compress->add_option("input", input, "Input file")->required();
  compress->add_option("output", output, "Output SLPZ file")->required();
  compress->add_flag("--dedup", dedup, "Reuse fresh letters for repeated free pairs");
  compress->add_option("--trace", trace_path, "Write per-phase statistics as JSON Lines");
  compress->add_flag("--stats", stats, "Print a grammar report as JSON");

  auto* decompress = app.add_subcommand("decompress", "Expand an SLPZ file");
  decompress->add_option("input", input, "Input SLPZ file")->required();
  decompress->add_option("output", output, "Output file")->required();

  std::size_t limit = 12;
  std::uint64_t seed = 42;
  bool inject_fault = false;
  auto* selftest = app.add_subcommand("selftest", "Run the built-in oracle suite");
  selftest->add_option("--limit", limit, "Exhaustive binary words up to this length");
  selftest->add_option("--seed", seed, "Seed for the random corpus");
  selftest->add_flag("--inject-fault", inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitDomain;
  }

  if (*compress) {
    return cmd_compress(input, output, dedup, trace_path, stats);
  }
  if (*decompress) {
    return cmd_decompress(input, output);
  }
  return cmd_selftest(limit, seed, inject_fault);
}
