#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mia/corpus.hpp"

namespace mia {

using TokenId = std::int32_t;

/// Whitespace-delimited chunks, with every ASCII punctuation character split
/// off as its own token. Case is preserved.
std::vector<std::string> tokenize(std::string_view text);

class Vocabulary {
 public:
  static constexpr TokenId kBos = 0;
  static constexpr TokenId kEos = 1;
  static constexpr TokenId kUnk = 2;
  static constexpr std::size_t kSpecials = 3;

  Vocabulary();

  /// Regular tokens are given in descending frequency order; they receive ids
  /// kSpecials, kSpecials + 1, ... in that order.
  explicit Vocabulary(std::vector<std::string> regular_tokens);

  std::size_t size() const { return tokens_.size(); }
  TokenId id(std::string_view token) const;
  const std::string& token(TokenId id) const { return tokens_.at(static_cast<std::size_t>(id)); }
  bool contains(std::string_view token) const { return index_.contains(token); }

  std::vector<TokenId> encode(std::string_view text) const;

  nlohmann::json to_json() const;
  static Vocabulary from_json(const nlohmann::json& j);

  bool operator==(const Vocabulary& other) const { return tokens_ == other.tokens_; }

 private:
  std::vector<std::string> tokens_;
  std::map<std::string, TokenId, std::less<>> index_;
};

/// Keeps the max_size - 3 most frequent tokens; frequency ties go to the
/// lexicographically smaller token. Everything else maps to UNK.
Vocabulary build_vocab(std::span<const Document* const> docs, std::size_t max_size);
Vocabulary build_vocab(const Corpus& corpus, std::size_t max_size);

}  // namespace mia
