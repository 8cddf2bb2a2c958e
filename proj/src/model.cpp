#include "slpz/model.hpp"

#include <sstream>

namespace slpz {

Factorization Factorization::from_factors(std::size_t length,
                                          const std::vector<Factor>& factors) {
  Factorization fact(length);
  for (const Factor& f : factors) {
    if (f.begin > f.end || f.end >= length) {
      throw std::invalid_argument("factor span out of range");
    }
    fact.add_factor(f.begin, f.end, f.definition);
  }
  return fact;
}

std::vector<Factor> Factorization::factors() const {
  std::vector<Factor> out;
  Factor current;
  bool open = false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (is_begin(i)) {
      current.begin = static_cast<Pos>(i);
      current.definition = begin_[i];
      open = true;
    }
    if (is_end(i) && open) {
      current.end = static_cast<Pos>(i);
      out.push_back(current);
      open = false;
    }
  }
  return out;
}

std::size_t Factorization::factor_count() const {
  std::size_t count = 0;
  for (Pos d : begin_) {
    count += d != kNoPos;
  }
  return count;
}

std::size_t Factorization::free_count() const {
  std::size_t covered = 0;
  bool open = false;
  for (std::size_t i = 0; i < size(); ++i) {
    open = open || is_begin(i);
    covered += open;
    if (is_end(i)) {
      open = false;
    }
  }
  return size() - covered;
}

char mark_char(Mark m) {
  switch (m) {
    case Mark::First: return 'F';
    case Mark::Second: return 'S';
    case Mark::Unpaired: return 'U';
    case Mark::Unset: break;
  }
  return '?';
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::DefinitionNotLeft: return "definition not strictly left";
    case ViolationKind::DefinitionMismatch: return "definition mismatch";
    case ViolationKind::NestedBegin: return "factor begins inside another factor";
    case ViolationKind::EndWithoutBegin: return "factor end without begin";
    case ViolationKind::UnterminatedFactor: return "unterminated factor";
    case ViolationKind::UnsetMark: return "unset pairing mark";
    case ViolationKind::FirstWithoutSecond: return "first of pair without second";
    case ViolationKind::SecondWithoutFirst: return "second of pair without first";
    case ViolationKind::AdjacentUnpaired: return "P1: two adjacent unpaired letters";
    case ViolationKind::FactorStartNotPaired: return "P2: factor does not start with a pair";
    case ViolationKind::FactorEndNotPaired: return "P2: factor does not end with a pair";
    case ViolationKind::PairingDiffersFromDefinition:
      return "P3: factor paired differently from its definition";
  }
  return "unknown violation";
}

std::string describe(const std::vector<Violation>& violations) {
  std::ostringstream out;
  for (std::size_t k = 0; k < violations.size(); ++k) {
    if (k != 0) {
      out << "; ";
    }
    out << to_string(violations[k].kind) << " at " << violations[k].position;
  }
  return out.str();
}

std::vector<Violation> validate_factorization(const Word& word,
                                              const Factorization& fact) {
  if (word.size() != fact.size()) {
    throw std::invalid_argument("word and factorisation differ in length");
  }
  std::vector<Violation> out;
  bool open = false;
  bool definition_ok = false;
  std::size_t begin = 0;
  std::size_t definition = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (fact.is_begin(i)) {
      if (open) {
        out.push_back({i, ViolationKind::NestedBegin});
      }
      open = true;
      begin = i;
      definition = fact.definition(i);
      definition_ok = definition < i;
      if (!definition_ok) {
        out.push_back({i, ViolationKind::DefinitionNotLeft});
      }
    }
    if (!fact.is_end(i)) {
      continue;
    }
    if (!open) {
      out.push_back({i, ViolationKind::EndWithoutBegin});
      continue;
    }
    open = false;
    if (!definition_ok) {
      continue;
    }
    // definition < begin, so definition + k stays below i.
    for (std::size_t k = 0; begin + k <= i; ++k) {
      if (word[definition + k] != word[begin + k]) {
        out.push_back({begin + k, ViolationKind::DefinitionMismatch});
        break;
      }
    }
  }
  if (open) {
    out.push_back({begin, ViolationKind::UnterminatedFactor});
  }
  return out;
}

std::vector<Violation> validate_pairing(const Word& word,
                                        const Factorization& fact,
                                        const Pairing& pairing) {
  std::vector<Violation> out = validate_factorization(word, fact);
  if (pairing.size() != word.size()) {
    throw std::invalid_argument("word and pairing differ in length");
  }
  const std::size_t n = pairing.size();
  for (std::size_t i = 0; i < n; ++i) {
    switch (pairing[i]) {
      case Mark::Unset:
        out.push_back({i, ViolationKind::UnsetMark});
        break;
      case Mark::First:
        if (i + 1 >= n || pairing[i + 1] != Mark::Second) {
          out.push_back({i, ViolationKind::FirstWithoutSecond});
        }
        break;
      case Mark::Second:
        if (i == 0 || pairing[i - 1] != Mark::First) {
          out.push_back({i, ViolationKind::SecondWithoutFirst});
        }
        break;
      case Mark::Unpaired:
        if (i + 1 < n && pairing[i + 1] == Mark::Unpaired) {
          out.push_back({i, ViolationKind::AdjacentUnpaired});
        }
        break;
    }
  }

  bool structural_error = false;
  for (const Violation& v : out) {
    structural_error = structural_error ||
                       v.kind == ViolationKind::NestedBegin ||
                       v.kind == ViolationKind::EndWithoutBegin ||
                       v.kind == ViolationKind::UnterminatedFactor ||
                       v.kind == ViolationKind::DefinitionNotLeft;
  }
  if (structural_error) {
    return out;
  }

  for (const Factor& f : fact.factors()) {
    const bool multi = f.end > f.begin;
    if (!multi || pairing[f.begin] != Mark::First ||
        pairing[f.begin + 1] != Mark::Second) {
      out.push_back({f.begin, ViolationKind::FactorStartNotPaired});
    }
    if (!multi || pairing[f.end] != Mark::Second ||
        pairing[f.end - 1] != Mark::First) {
      out.push_back({f.end, ViolationKind::FactorEndNotPaired});
    }
    for (Pos k = 0; k < f.length(); ++k) {
      if (pairing[f.begin + k] != pairing[f.definition + k]) {
        out.push_back({std::size_t{f.begin} + k,
                       ViolationKind::PairingDiffersFromDefinition});
        break;
      }
    }
  }
  return out;
}

std::vector<Pos> adjacent_definitions(const Factorization& fact) {
  std::vector<Pos> out;
  for (const Factor& f : fact.factors()) {
    if (f.end > f.begin && f.definition + 1 == f.begin) {
      out.push_back(f.begin);
    }
  }
  return out;
}

}  // namespace slpz
