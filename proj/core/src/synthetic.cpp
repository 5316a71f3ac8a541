#include "lsc/synthetic.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lsc/rng.hpp"

namespace lsc {

namespace {

std::string join(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

// Weighted draw over a fixed pool via a cumulative table.
struct WeightedPool {
  std::vector<int> items;
  std::vector<double> cumulative;

  void add(int item, double weight) {
    items.push_back(item);
    cumulative.push_back((cumulative.empty() ? 0.0 : cumulative.back()) + weight);
  }

  bool empty() const { return items.empty(); }

  int draw(Rng& rng) const {
    double u = rng.unit() * cumulative.back();
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    std::size_t idx = static_cast<std::size_t>(it - cumulative.begin());
    if (idx >= items.size()) idx = items.size() - 1;
    return items[idx];
  }
};

}  // namespace

SyntheticCorpus make_synthetic_corpus(const SyntheticSpec& spec) {
  if (spec.domains < 1 || spec.docs_per_domain < 1 || spec.lexicon_size < 4) {
    throw CorpusError("make_synthetic_corpus: degenerate spec");
  }

  // Global sentiment lexicon: first half positive, second half negative.
  std::vector<std::string> lexicon;
  std::vector<Polarity> global_polarity;
  int n_pos_words = spec.lexicon_size / 2;
  for (int i = 0; i < spec.lexicon_size; ++i) {
    bool positive = i < n_pos_words;
    lexicon.push_back((positive ? "pos" : "neg") +
                      std::to_string(positive ? i : i - n_pos_words));
    global_polarity.push_back(positive ? Polarity::Positive
                                       : Polarity::Negative);
  }

  // Volatile words carry domain-dependent polarity: each domain flips each
  // of them with probability 1/2, so on average flip_fraction of the
  // lexicon is flipped per domain and the cross-domain record of these
  // words is genuinely mixed. They are also boosted in frequency: a
  // domain's characteristic polarity words tend to be common ones.
  int n_volatile = std::min(
      spec.lexicon_size,
      static_cast<int>(2.0 * spec.flip_fraction * spec.lexicon_size + 0.5));
  Rng global_rng(derive_seed(spec.seed, "volatile"));
  std::vector<int> all_idx(lexicon.size());
  for (std::size_t i = 0; i < all_idx.size(); ++i) all_idx[i] = static_cast<int>(i);
  std::vector<int> volatile_idx = global_rng.sample(all_idx, n_volatile);
  std::vector<char> is_volatile(lexicon.size(), 0);
  for (int w : volatile_idx) is_volatile[w] = 1;

  SyntheticCorpus corpus;
  for (int d = 0; d < spec.domains; ++d) {
    Rng rng(derive_seed(spec.seed, "domain:" + std::to_string(d)));
    std::string domain_name =
        "domain" + std::string(d < 10 ? "0" : "") + std::to_string(d);

    std::vector<char> flipped(lexicon.size(), 0);
    for (int w : volatile_idx) {
      if (rng.unit() < 0.5) flipped[w] = 1;
    }

    // Sparse words have one carrier document in this domain, so a fold
    // split can leave them entirely on the test side; elsewhere they are
    // ordinary common words.
    int n_sparse =
        static_cast<int>(spec.sparse_fraction * spec.lexicon_size + 0.5);
    std::vector<int> stable_idx;
    for (std::size_t w = 0; w < lexicon.size(); ++w) {
      if (!is_volatile[w]) stable_idx.push_back(static_cast<int>(w));
    }
    std::vector<int> sparse_words = rng.sample(stable_idx, n_sparse);
    std::vector<char> sparse(lexicon.size(), 0);
    for (int w : sparse_words) sparse[w] = 1;

    auto domain_polarity = [&](int w) {
      return flipped[w] ? opposite(global_polarity[w]) : global_polarity[w];
    };

    // Domain-specific usage rates: a handful of head words dominate, the
    // tail is thin, volatile words run hot.
    WeightedPool common_pos, common_neg;
    for (std::size_t w = 0; w < lexicon.size(); ++w) {
      if (sparse[w]) continue;
      double u = rng.unit();
      double weight = 0.02 + u * u * u * u;
      if (is_volatile[w]) weight *= 2.5;
      auto& pool = domain_polarity(static_cast<int>(w)) == Polarity::Positive
                       ? common_pos
                       : common_neg;
      pool.add(static_cast<int>(w), weight);
    }
    if (common_pos.empty() || common_neg.empty()) {
      throw CorpusError("make_synthetic_corpus: a polarity has no common words");
    }

    std::vector<std::string> domain_neutral;
    for (int i = 0; i < spec.neutral_words_per_domain; ++i) {
      domain_neutral.push_back("d" + std::to_string(d) + "w" + std::to_string(i));
    }

    double pos_frac = spec.positive_fraction_lo +
                      (spec.positive_fraction_hi - spec.positive_fraction_lo) *
                          rng.unit();

    auto draw_common = [&](Polarity want) -> const std::string& {
      const auto& pool =
          want == Polarity::Positive ? common_pos : common_neg;
      return lexicon[pool.draw(rng)];
    };

    struct DraftDoc {
      std::vector<std::string> sentiment;
      std::vector<std::string> neutral;
      Polarity label;
    };
    std::vector<DraftDoc> drafts;
    drafts.reserve(spec.docs_per_domain);
    for (int i = 0; i < spec.docs_per_domain; ++i) {
      DraftDoc doc;
      doc.label =
          rng.unit() < pos_frac ? Polarity::Positive : Polarity::Negative;
      int n_sent = 2 + static_cast<int>(rng.below(4));
      for (int t = 0; t < n_sent; ++t) {
        bool noise = rng.unit() < 0.05;
        doc.sentiment.push_back(
            draw_common(noise ? opposite(doc.label) : doc.label));
      }
      int n_neut = 2 + static_cast<int>(rng.below(4));
      for (int t = 0; t < n_neut; ++t) {
        doc.neutral.push_back(
            domain_neutral[rng.below(domain_neutral.size())]);
      }
      drafts.push_back(std::move(doc));
    }

    // Sparse carriers lean on their word: most of the sentiment signal is
    // the sparse word itself plus a token either way.
    for (int w : sparse_words) {
      Polarity p = domain_polarity(w);
      std::vector<int> candidates;
      for (std::size_t i = 0; i < drafts.size(); ++i) {
        if (drafts[i].label == p) candidates.push_back(static_cast<int>(i));
      }
      auto carriers = rng.sample(
          candidates,
          static_cast<std::size_t>(std::max(0, spec.carriers_per_sparse_word)));
      for (int ci : carriers) {
        DraftDoc& doc = drafts[ci];
        doc.sentiment.clear();
        for (int t = 0; t < 4; ++t) doc.sentiment.push_back(lexicon[w]);
        doc.sentiment.push_back(draw_common(opposite(p)));
      }
    }

    std::vector<Document> docs;
    std::vector<SyntheticRecord> records;
    for (std::size_t i = 0; i < drafts.size(); ++i) {
      const DraftDoc& draft = drafts[i];
      std::vector<std::string> tokens = draft.sentiment;
      tokens.insert(tokens.end(), draft.neutral.begin(), draft.neutral.end());
      rng.shuffle(tokens);

      SyntheticRecord rec;
      rec.id = domain_name + "r" + std::to_string(i);
      rec.text = join(tokens);
      rec.rating = draft.label == Polarity::Positive
                       ? 4 + static_cast<int>(rng.below(2))
                       : 1 + static_cast<int>(rng.below(2));
      records.push_back(rec);

      Document doc;
      doc.id = rec.id;
      doc.label = draft.label;
      for (const auto& tok : tokens) doc.counts[tok] += 1;
      docs.push_back(std::move(doc));
    }

    corpus.datasets.push_back(make_dataset(domain_name, std::move(docs)));
    corpus.records.push_back(std::move(records));
  }
  return corpus;
}

void write_synthetic_jsonl(const SyntheticCorpus& corpus,
                           const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (std::size_t d = 0; d < corpus.datasets.size(); ++d) {
    std::filesystem::path path = dir / (corpus.datasets[d].name + ".jsonl");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CorpusError("cannot write " + path.string());
    for (const auto& rec : corpus.records[d]) {
      nlohmann::json j;
      j["id"] = rec.id;
      j["rating"] = rec.rating;
      j["text"] = rec.text;
      out << j.dump() << "\n";
    }
    if (!out) throw CorpusError("I/O error writing " + path.string());
  }
}

}  // namespace lsc
