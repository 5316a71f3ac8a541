#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lsc {

enum class Polarity { Positive, Negative };

inline Polarity opposite(Polarity p) {
  return p == Polarity::Positive ? Polarity::Negative : Polarity::Positive;
}

const char* to_string(Polarity p);

// Base error for everything raised by this library. Subclasses exist so
// callers can tell data problems from numerical ones.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CorpusError : public Error {
 public:
  using Error::Error;
};

class ModelError : public Error {
 public:
  using Error::Error;
};

class KnowledgeError : public Error {
 public:
  using Error::Error;
};

class OptimError : public Error {
 public:
  using Error::Error;
};

// SGD halted because the objective kept falling below its starting value.
// Carries the per-epoch objective trace for diagnosis.
class DivergenceError : public OptimError {
 public:
  DivergenceError(const std::string& msg, std::vector<double> trace)
      : OptimError(msg), trace_(std::move(trace)) {}

  const std::vector<double>& objective_trace() const { return trace_; }

 private:
  std::vector<double> trace_;
};

class ProtocolError : public Error {
 public:
  using Error::Error;
};

// A bag of words. Counts hold strictly positive term frequencies; a word
// with zero occurrences is simply absent.
struct Document {
  std::string id;
  std::map<std::string, int> counts;
  Polarity label = Polarity::Positive;
};

// Document length is defined as the total number of token occurrences.
// An alternative using the number of distinct words exists behind
// LengthMode in the optimizer config; both are computed here so there is
// one definition in the codebase.
int total_tokens(const Document& doc);
int distinct_words(const Document& doc);

struct DomainDataset {
  std::string name;
  std::vector<Document> documents;
  std::set<std::string> vocabulary;  // exactly the union of document words
};

// Builds a dataset and derives its vocabulary from the documents.
DomainDataset make_dataset(std::string name, std::vector<Document> documents);

// (#Positive, #Negative)
std::pair<int, int> class_counts(const std::vector<Document>& documents);

struct FoldAssignment {
  int k = 0;
  std::map<std::string, int> assignment;  // document id -> fold in [0, k)
};

}  // namespace lsc
