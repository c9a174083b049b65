#ifndef HYPERSURF_CORPUS_HPP
#define HYPERSURF_CORPUS_HPP

#include <optional>
#include <span>
#include <string>

#include "hypersurf/curvature.hpp"
#include "hypersurf/parser.hpp"

namespace hypersurf {

/// Facts a corpus entry is known to satisfy; unset fields are not checked.
struct ExpectedFacts {
  std::optional<std::string> quadric_kind;    // QuadricClass::Kind name
  std::optional<CmcVerdict> cmc_verdict;
  std::optional<Rational> c;                  // signed constant, when CMC
  std::optional<std::string> regularity;      // RegularityResult::Status name
  std::optional<std::string> leading_form;    // SignKind name
};

struct CorpusEntry {
  std::string name;
  std::string text;
  std::size_t dim = 3;
  VarConvention::Mode vars = VarConvention::Mode::Named;
  std::string description;
  ExpectedFacts expected;

  VarConvention convention() const { return {vars, dim}; }
  Polynomial polynomial() const { return parse(text, convention()); }
};

std::span<const CorpusEntry> builtin_corpus();
/// nullptr when no entry has this name.
const CorpusEntry* find_corpus_entry(std::string_view name);

}  // namespace hypersurf

#endif  // HYPERSURF_CORPUS_HPP
