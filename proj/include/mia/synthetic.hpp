#pragma once

#include <cstdint>

#include "mia/corpus.hpp"

namespace mia {

/// Parameters of the bundled synthetic corpus. Documents come from a set of
/// topics that differ in vocabulary size, word length, transition entropy and
/// document length, so per-document difficulty varies widely and is partly
/// predictable from surface features of the text.
struct SyntheticCorpusOptions {
  std::size_t n_docs = 5000;
  std::size_t n_topics = 12;
  std::size_t min_topic_vocab = 12;
  std::size_t max_topic_vocab = 300;
  std::size_t min_words = 8;
  std::size_t max_words = 48;
  std::uint64_t seed = 20240611;
};

Corpus generate_synthetic_corpus(const SyntheticCorpusOptions& options);

}  // namespace mia
