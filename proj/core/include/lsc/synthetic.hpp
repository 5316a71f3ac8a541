#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "lsc/types.hpp"

namespace lsc {

// Multi-domain review generator used by the acceptance checks and the
// `synth` CLI command. All domains share one sentiment lexicon. A volatile
// slice of it flips polarity in roughly half the domains (flip_fraction of
// the lexicon is flipped in an average domain), a sparse slice is demoted
// per domain to a single carrier document so fold splits lose those words
// from the training side, and per-domain usage rates are skewed so each
// domain leans on its own head words. Sparse-word carrier documents take
// most of their signal from that one word.
struct SyntheticSpec {
  int domains = 20;
  int docs_per_domain = 200;
  int lexicon_size = 50;         // half globally positive, half negative
  double flip_fraction = 0.10;   // average per-domain flipped share
  double sparse_fraction = 0.30; // per-domain train/test vocabulary mismatch
  double positive_fraction_lo = 0.65;  // per-domain skew drawn from this range
  double positive_fraction_hi = 0.85;
  int neutral_words_per_domain = 20;
  int carriers_per_sparse_word = 1;
  std::uint64_t seed = 1;
};

struct SyntheticRecord {
  std::string id;
  std::string text;
  int rating;  // 4-5 positive, 1-2 negative
};

struct SyntheticCorpus {
  std::vector<DomainDataset> datasets;
  std::vector<std::vector<SyntheticRecord>> records;  // parallel to datasets
};

SyntheticCorpus make_synthetic_corpus(const SyntheticSpec& spec);

// One <domain>.jsonl per domain, records as {"id","text","rating"}.
// Loading them back through load_domain reproduces the in-memory bags.
void write_synthetic_jsonl(const SyntheticCorpus& corpus,
                           const std::filesystem::path& dir);

}  // namespace lsc
