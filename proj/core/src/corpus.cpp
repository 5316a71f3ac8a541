#include "lsc/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lsc/rng.hpp"

namespace lsc {

namespace {

using nlohmann::json;

[[noreturn]] void fail_line(const std::filesystem::path& path, int line,
                            const std::string& what) {
  std::ostringstream os;
  os << path.string() << ":" << line << ": " << what;
  throw CorpusError(os.str());
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

DomainDataset load_domain(const std::filesystem::path& path,
                          const std::string& name,
                          const TokenizerOptions& tokenizer) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open corpus file: " + path.string());

  std::vector<Document> docs;
  std::set<std::string> seen_ids;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;

    json rec;
    try {
      rec = json::parse(line);
    } catch (const json::exception& e) {
      fail_line(path, line_no, std::string("malformed JSON: ") + e.what());
    }
    if (!rec.is_object()) fail_line(path, line_no, "record is not an object");
    if (!rec.contains("text") || !rec["text"].is_string()) {
      fail_line(path, line_no, "missing string field 'text'");
    }

    bool has_rating = rec.contains("rating");
    bool has_label = rec.contains("label");
    if (has_rating && has_label) {
      fail_line(path, line_no, "record has both 'rating' and 'label'");
    }
    if (!has_rating && !has_label) {
      fail_line(path, line_no, "record needs 'rating' or 'label'");
    }

    Polarity label;
    if (has_rating) {
      if (!rec["rating"].is_number()) {
        fail_line(path, line_no, "'rating' is not a number");
      }
      double rating = rec["rating"].get<double>();
      if (rating > 3) {
        label = Polarity::Positive;
      } else if (rating < 3) {
        label = Polarity::Negative;
      } else {
        continue;  // neutral rating, record dropped
      }
    } else {
      if (!rec["label"].is_string()) {
        fail_line(path, line_no, "'label' is not a string");
      }
      std::string s = rec["label"].get<std::string>();
      if (s == "pos") {
        label = Polarity::Positive;
      } else if (s == "neg") {
        label = Polarity::Negative;
      } else {
        fail_line(path, line_no, "'label' must be \"pos\" or \"neg\"");
      }
    }

    Document doc;
    if (rec.contains("id")) {
      if (!rec["id"].is_string()) fail_line(path, line_no, "'id' is not a string");
      doc.id = rec["id"].get<std::string>();
    } else {
      doc.id = "L" + std::to_string(line_no);
    }
    if (!seen_ids.insert(doc.id).second) {
      fail_line(path, line_no, "duplicate document id '" + doc.id + "'");
    }

    doc.label = label;
    for (auto& tok : tokenize(rec["text"].get<std::string>(), tokenizer)) {
      doc.counts[tok] += 1;
    }
    docs.push_back(std::move(doc));
  }
  if (in.bad()) throw CorpusError("I/O error reading " + path.string());

  return make_dataset(name, std::move(docs));
}

std::vector<DomainDataset> load_corpus_dir(const std::filesystem::path& dir,
                                           const TokenizerOptions& tokenizer) {
  if (!std::filesystem::is_directory(dir)) {
    throw CorpusError("not a directory: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".jsonl") {
      files.push_back(entry.path());
    }
  }
  if (files.empty()) {
    throw CorpusError("no .jsonl files in " + dir.string());
  }
  std::sort(files.begin(), files.end());

  std::vector<DomainDataset> corpora;
  corpora.reserve(files.size());
  for (const auto& f : files) {
    corpora.push_back(load_domain(f, f.stem().string(), tokenizer));
  }
  return corpora;
}

FoldAssignment make_folds(const DomainDataset& dataset, int k,
                          std::uint64_t seed) {
  if (k < 2) throw CorpusError("make_folds: k must be >= 2");
  if (dataset.documents.empty()) throw CorpusError("make_folds: empty dataset");

  std::vector<std::size_t> pos_idx, neg_idx;
  for (std::size_t i = 0; i < dataset.documents.size(); ++i) {
    (dataset.documents[i].label == Polarity::Positive ? pos_idx : neg_idx)
        .push_back(i);
  }
  if (static_cast<int>(pos_idx.size()) < k ||
      static_cast<int>(neg_idx.size()) < k) {
    throw CorpusError("make_folds: k=" + std::to_string(k) +
                      " exceeds documents in a class (" +
                      std::to_string(pos_idx.size()) + " pos, " +
                      std::to_string(neg_idx.size()) + " neg)");
  }

  Rng rng(seed);
  rng.shuffle(pos_idx);
  rng.shuffle(neg_idx);

  FoldAssignment folds;
  folds.k = k;
  // Round-robin continues across classes so overall fold sizes stay within
  // one of each other while each class splits into floor/ceil parts.
  std::size_t cursor = 0;
  for (const auto* idx_list : {&pos_idx, &neg_idx}) {
    for (std::size_t i : *idx_list) {
      folds.assignment[dataset.documents[i].id] =
          static_cast<int>(cursor % static_cast<std::size_t>(k));
      ++cursor;
    }
  }
  return folds;
}

DomainDataset balance(const DomainDataset& dataset, int n_per_class,
                      std::uint64_t seed) {
  if (n_per_class <= 0) throw CorpusError("balance: n_per_class must be > 0");

  std::vector<std::size_t> pos_idx, neg_idx;
  for (std::size_t i = 0; i < dataset.documents.size(); ++i) {
    (dataset.documents[i].label == Polarity::Positive ? pos_idx : neg_idx)
        .push_back(i);
  }
  auto need = static_cast<std::size_t>(n_per_class);
  if (pos_idx.size() < need || neg_idx.size() < need) {
    throw CorpusError("balance: dataset '" + dataset.name + "' has " +
                      std::to_string(pos_idx.size()) + " pos / " +
                      std::to_string(neg_idx.size()) + " neg, need " +
                      std::to_string(need) + " of each");
  }

  Rng rng(seed);
  std::vector<std::size_t> keep = rng.sample(pos_idx, need);
  std::vector<std::size_t> keep_neg = rng.sample(neg_idx, need);
  keep.insert(keep.end(), keep_neg.begin(), keep_neg.end());
  std::sort(keep.begin(), keep.end());

  std::vector<Document> docs;
  docs.reserve(keep.size());
  for (std::size_t i : keep) docs.push_back(dataset.documents[i]);
  return make_dataset(dataset.name, std::move(docs));
}

std::vector<Document> fold_train_split(const DomainDataset& dataset,
                                       const FoldAssignment& folds, int fold) {
  std::vector<Document> out;
  for (const auto& doc : dataset.documents) {
    auto it = folds.assignment.find(doc.id);
    if (it == folds.assignment.end()) {
      throw CorpusError("fold split: document '" + doc.id +
                        "' missing from fold assignment");
    }
    if (it->second != fold) out.push_back(doc);
  }
  return out;
}

std::vector<Document> fold_test_split(const DomainDataset& dataset,
                                      const FoldAssignment& folds, int fold) {
  std::vector<Document> out;
  for (const auto& doc : dataset.documents) {
    auto it = folds.assignment.find(doc.id);
    if (it == folds.assignment.end()) {
      throw CorpusError("fold split: document '" + doc.id +
                        "' missing from fold assignment");
    }
    if (it->second == fold) out.push_back(doc);
  }
  return out;
}

}  // namespace lsc
