#include "slpz/slpz.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include "slpz/grammar.hpp"
#include "slpz/selftest.hpp"
#include "slpz/slpz_format.hpp"

struct slpz_grammar {
  slpz::Slp slp;
  std::uint64_t length = 0;
  std::vector<slpz::PhaseStats> stats;
  std::optional<std::size_t> lz_phrases;
};

namespace {

thread_local std::string last_error;

slpz_status fail(slpz_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Maps the exception in flight to a status code.
slpz_status translate_exception() {
  try {
    throw;
  } catch (const slpz::EmptyInputError& e) {
    return fail(SLPZ_ERROR_EMPTY_INPUT, e.what());
  } catch (const slpz::FormatError& e) {
    return fail(SLPZ_ERROR_MALFORMED, e.what());
  } catch (const slpz::SlpError& e) {
    return fail(SLPZ_ERROR_MALFORMED, e.what());
  } catch (const slpz::InvariantViolation& e) {
    return fail(SLPZ_ERROR_INVARIANT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SLPZ_ERROR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::invalid_argument& e) {
    return fail(SLPZ_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::length_error& e) {
    return fail(SLPZ_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(SLPZ_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(SLPZ_ERROR_INTERNAL, "unknown error");
  }
}

template <typename T>
slpz_status copy_out(const T* data, std::size_t count, bool terminate, T** out,
                     std::size_t* size) {
  auto* buffer = static_cast<T*>(std::malloc((count + (terminate ? 1 : 0)) * sizeof(T) + 1));
  if (buffer == nullptr) {
    return fail(SLPZ_ERROR_OUT_OF_MEMORY, "out of memory");
  }
  if (count != 0) {
    std::memcpy(buffer, data, count * sizeof(T));
  }
  if (terminate) {
    buffer[count] = T{};
  }
  *out = buffer;
  *size = count;
  return SLPZ_OK;
}

slpz_status copy_text(const std::string& text, char** out, std::size_t* size) {
  return copy_out(text.data(), text.size(), true, out, size);
}

}  // namespace

extern "C" {

const char* slpz_version(void) { return "1.0.0"; }

const char* slpz_status_string(slpz_status status) {
  switch (status) {
    case SLPZ_OK: return "ok";
    case SLPZ_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case SLPZ_ERROR_EMPTY_INPUT: return "empty input";
    case SLPZ_ERROR_MALFORMED: return "malformed grammar";
    case SLPZ_ERROR_INVARIANT: return "invariant violated";
    case SLPZ_ERROR_OUT_OF_MEMORY: return "out of memory";
    case SLPZ_ERROR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* slpz_last_error(void) { return last_error.c_str(); }

void slpz_options_init(slpz_options* options) {
  if (options != nullptr) {
    options->dedup = 0;
    options->verify = 1;
  }
}

slpz_status slpz_compress(const uint8_t* data, size_t size,
                          const slpz_options* options, slpz_grammar** out) {
  if (out == nullptr || (data == nullptr && size != 0)) {
    return fail(SLPZ_ERROR_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  if (size == 0) {
    return fail(SLPZ_ERROR_EMPTY_INPUT, "empty input");
  }
  try {
    slpz::CompressOptions opts;
    if (options != nullptr) {
      opts.dedup = options->dedup != 0;
      opts.verify = options->verify != 0;
    }
    slpz::CompressResult result = slpz::compress({data, size}, opts);
    auto grammar = std::make_unique<slpz_grammar>();
    grammar->slp = std::move(result.slp);
    grammar->length = size;
    grammar->stats = std::move(result.stats);
    grammar->lz_phrases = result.lz_phrases;
    *out = grammar.release();
    return SLPZ_OK;
  } catch (...) {
    return translate_exception();
  }
}

slpz_status slpz_parse(const char* text, size_t size, slpz_grammar** out) {
  if (out == nullptr || (text == nullptr && size != 0)) {
    return fail(SLPZ_ERROR_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  try {
    slpz::SlpzFile file = slpz::parse_slpz({text, size});
    auto grammar = std::make_unique<slpz_grammar>();
    grammar->slp = std::move(file.slp);
    grammar->length = file.length;
    *out = grammar.release();
    return SLPZ_OK;
  } catch (...) {
    return translate_exception();
  }
}

void slpz_grammar_free(slpz_grammar* grammar) { delete grammar; }

uint64_t slpz_grammar_length(const slpz_grammar* grammar) {
  return grammar != nullptr ? grammar->length : 0;
}

size_t slpz_grammar_rule_count(const slpz_grammar* grammar) {
  return grammar != nullptr ? grammar->slp.rules.size() : 0;
}

uint32_t slpz_grammar_start(const slpz_grammar* grammar) {
  return grammar != nullptr ? grammar->slp.start : 0;
}

slpz_status slpz_grammar_rule(const slpz_grammar* grammar, size_t index,
                              uint32_t* lhs, uint32_t* left, uint32_t* right) {
  if (grammar == nullptr || lhs == nullptr || left == nullptr || right == nullptr) {
    return fail(SLPZ_ERROR_INVALID_ARGUMENT, "null argument");
  }
  if (index >= grammar->slp.rules.size()) {
    return fail(SLPZ_ERROR_INVALID_ARGUMENT, "rule index out of range");
  }
  const slpz::Rule& r = grammar->slp.rules[index];
  *lhs = r.lhs;
  *left = r.left;
  *right = r.right;
  return SLPZ_OK;
}

size_t slpz_grammar_phase_count(const slpz_grammar* grammar) {
  return grammar != nullptr ? grammar->stats.size() : 0;
}

slpz_status slpz_grammar_phase(const slpz_grammar* grammar, size_t index,
                               slpz_phase_stats* out) {
  if (grammar == nullptr || out == nullptr) {
    return fail(SLPZ_ERROR_INVALID_ARGUMENT, "null argument");
  }
  if (index >= grammar->stats.size()) {
    return fail(SLPZ_ERROR_INVALID_ARGUMENT, "phase index out of range");
  }
  const slpz::PhaseStats& s = grammar->stats[index];
  out->phase = s.phase;
  out->len_before = s.len_before;
  out->len_after = s.len_after;
  out->factors_before = s.factors_before;
  out->factors_after = s.factors_after;
  out->free_before = s.free_before;
  out->free_after = s.free_after;
  out->free_created_by_pairing = s.free_created_by_pairing;
  out->fresh_letters = s.fresh_letters;
  return SLPZ_OK;
}

slpz_status slpz_serialize(const slpz_grammar* grammar, char** out, size_t* size) {
  if (grammar == nullptr || out == nullptr || size == nullptr) {
    return fail(SLPZ_ERROR_INVALID_ARGUMENT, "null argument");
  }
  try {
    return copy_text(slpz::write_slpz(grammar->slp), out, size);
  } catch (...) {
    return translate_exception();
  }
}

slpz_status slpz_expand(const slpz_grammar* grammar, uint8_t** out, size_t* size) {
  if (grammar == nullptr || out == nullptr || size == nullptr) {
    return fail(SLPZ_ERROR_INVALID_ARGUMENT, "null argument");
  }
  try {
    const std::vector<std::uint8_t> bytes = slpz::expand(grammar->slp);
    return copy_out(bytes.data(), bytes.size(), false, out, size);
  } catch (...) {
    return translate_exception();
  }
}

slpz_status slpz_trace_jsonl(const slpz_grammar* grammar, char** out, size_t* size) {
  if (grammar == nullptr || out == nullptr || size == nullptr) {
    return fail(SLPZ_ERROR_INVALID_ARGUMENT, "null argument");
  }
  try {
    return copy_text(slpz::trace_to_jsonl(grammar->stats), out, size);
  } catch (...) {
    return translate_exception();
  }
}

slpz_status slpz_report_json(const slpz_grammar* grammar, char** out, size_t* size) {
  if (grammar == nullptr || out == nullptr || size == nullptr) {
    return fail(SLPZ_ERROR_INVALID_ARGUMENT, "null argument");
  }
  if (!grammar->lz_phrases) {
    return fail(SLPZ_ERROR_INVALID_ARGUMENT,
                "grammar carries no compression statistics");
  }
  try {
    const auto report = slpz::grammar_report(grammar->slp, grammar->stats,
                                             *grammar->lz_phrases, grammar->length);
    return copy_text(slpz::report_to_json(report), out, size);
  } catch (...) {
    return translate_exception();
  }
}

slpz_status slpz_selftest(size_t limit, uint64_t seed, int inject_fault,
                          char** summary, size_t* size) {
  if (summary == nullptr || size == nullptr) {
    return fail(SLPZ_ERROR_INVALID_ARGUMENT, "null argument");
  }
  try {
    slpz::SelftestOptions options;
    options.limit = limit;
    options.seed = seed;
    options.inject_fault = inject_fault != 0;
    const slpz::SelftestReport report = slpz::run_selftest(options);
    const slpz_status copied = copy_text(report.summary(), summary, size);
    if (copied != SLPZ_OK) {
      return copied;
    }
    if (!report.passed()) {
      const auto& f = *report.first_failure;
      return fail(SLPZ_ERROR_INVARIANT, "word \"" + f.word + "\" phase " + f.phase +
                                            ": " + f.invariant);
    }
    return SLPZ_OK;
  } catch (...) {
    return translate_exception();
  }
}

void slpz_free(void* buffer) { std::free(buffer); }

}  // extern "C"
