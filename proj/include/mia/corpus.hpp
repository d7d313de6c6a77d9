#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace mia {

struct Document {
  std::string id;
  std::string text;
  std::size_t char_len = 0;  // UTF-8 code units (bytes)

  Document() = default;
  Document(std::string id_, std::string text_)
      : id(std::move(id_)), text(std::move(text_)), char_len(text.size()) {}
};

using Corpus = std::vector<Document>;

enum class CorpusFormat { plain_lines, jsonl };

CorpusFormat parse_corpus_format(std::string_view name);
std::string_view to_string(CorpusFormat f);

/// One document per line (plain_lines) or per JSON record with a required
/// "text" and optional "id" field. Records without an id get the zero-padded
/// record index. Throws DataError naming the line on malformed input.
Corpus load_corpus(const std::filesystem::path& path, CorpusFormat format);

void write_corpus_jsonl(const Corpus& corpus, const std::filesystem::path& path);

/// Keeps documents with char_len >= min_chars, in order.
Corpus filter_short(const Corpus& corpus, std::size_t min_chars = 25);

/// Seeded uniform subsample of floor(frac * n) documents, original order kept.
Corpus subsample(const Corpus& corpus, double frac, std::uint64_t seed);

enum class Split { private_, public_train, public_test };

std::string_view to_string(Split s);
Split parse_split(std::string_view name);

struct SplitFractions {
  double private_frac = 0.50;
  double public_train_frac = 0.41;
  double public_test_frac = 0.09;

  /// Throws DataError unless every fraction is in (0, 1] and they sum to 1.
  void validate() const;
};

struct SplitAssignment {
  std::string doc_id;
  Split split = Split::private_;
  std::uint64_t seed = 0;
};

/// Assignments are returned in corpus order. The corpus is permuted with a
/// seeded shuffle and cut at floor(cumulative fraction * n); whatever is left
/// after the private and public_train cuts goes to public_test.
std::vector<SplitAssignment> assign_splits(const Corpus& corpus,
                                           const SplitFractions& fractions,
                                           std::uint64_t seed);

void write_manifest(const std::vector<SplitAssignment>& assignments,
                    const std::filesystem::path& path);

/// Reads a manifest back; the seed field is not stored and comes back as 0.
std::vector<SplitAssignment> read_manifest(const std::filesystem::path& path);

/// Document lookup by split.
class SplitView {
 public:
  SplitView(const Corpus& corpus, const std::vector<SplitAssignment>& assignments);

  const std::vector<const Document*>& docs(Split s) const;
  Split split_of(std::string_view doc_id) const;
  bool contains(std::string_view doc_id) const;
  const Document& doc(std::string_view doc_id) const;

 private:
  std::vector<const Document*> by_split_[3];
  std::map<std::string, std::pair<const Document*, Split>, std::less<>> index_;
};

}  // namespace mia
