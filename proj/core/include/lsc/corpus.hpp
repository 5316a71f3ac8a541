#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "lsc/tokenizer.hpp"
#include "lsc/types.hpp"

namespace lsc {

// Reads one domain from a JSON Lines file. Each line is an object with a
// "text" field and exactly one of "rating" (number) or "label"
// ("pos"/"neg"); "id" is optional and autogenerated when missing.
// Ratings map to labels as rating > 3 -> Positive, rating < 3 -> Negative;
// rating == 3 records are dropped. Malformed lines raise CorpusError with
// file:line in the message.
DomainDataset load_domain(const std::filesystem::path& path,
                          const std::string& name,
                          const TokenizerOptions& tokenizer = {});

// Loads every *.jsonl file in a directory; the domain name is the stem.
std::vector<DomainDataset> load_corpus_dir(const std::filesystem::path& dir,
                                           const TokenizerOptions& tokenizer = {});

// Stratified k-fold split, deterministic in (dataset order, k, seed).
// Per-class fold counts differ by at most one, and so do totals.
FoldAssignment make_folds(const DomainDataset& dataset, int k,
                          std::uint64_t seed);

// Uniform subsample without replacement of n_per_class documents of each
// polarity, deterministic per seed. Input order is preserved among the
// selected documents.
DomainDataset balance(const DomainDataset& dataset, int n_per_class,
                      std::uint64_t seed);

std::vector<Document> fold_train_split(const DomainDataset& dataset,
                                       const FoldAssignment& folds, int fold);
std::vector<Document> fold_test_split(const DomainDataset& dataset,
                                      const FoldAssignment& folds, int fold);

}  // namespace lsc
