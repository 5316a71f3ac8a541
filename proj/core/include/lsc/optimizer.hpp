#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lsc/knowledge.hpp"
#include "lsc/nb.hpp"
#include "lsc/types.hpp"

namespace lsc {

// Which document length |d| enters the totals term of the per-document
// objective. TotalTokens makes the optimized score identical to the real
// NB posterior and is the default; DistinctWords is kept as a switch for
// comparison. Classification is standard NB either way.
enum class LengthMode { TotalTokens, DistinctWords };

int doc_length(const Document& doc, LengthMode mode);

struct LscConfig {
  double sigma = 6.0;       // target-distinguishable ratio threshold, >= 1
  int tau = 6;              // domain-frequency threshold, >= 1
  double alpha = 0.1;       // penalty coefficient, >= 0
  double learn_rate = 0.1;  // gamma, > 0
  double lambda = 1.0;      // smoothing, in [0, 1]
  double epsilon = 1e-3;    // convergence threshold on the epoch objective
  int max_epochs = 100;
  LengthMode length_mode = LengthMode::TotalTokens;
  bool shuffle_docs = false;  // fixed corpus order by default
  std::uint64_t shuffle_seed = 0;
};

void validate(const LscConfig& config);

// The optimization variables: per-word virtual counts standing in for the
// empirical counts in the NB conditional. Both maps cover the target
// vocabulary exactly and every entry stays >= 0.
struct VirtualCounts {
  std::map<std::string, double> x_pos;
  std::map<std::string, double> x_neg;
  std::set<std::string> vocabulary;
};

struct Priors {
  double pos = 0.5;
  double neg = 0.5;
};

// Anchors for the two penalty terms.
//   v_t: words the target training data already separates well; anchored
//        to the target empirical counts.
//   v_s: words with reliable cross-domain knowledge; anchored to an
//        R_w-weighted split of the initialization values.
struct PenaltySpec {
  std::set<std::string> v_t;
  std::set<std::string> v_s;
  std::map<std::string, double> ratio;  // R_w in [0,1], defined exactly on v_s
  std::map<std::string, std::pair<double, double>> anchors_t;  // (N+, N-)
  std::map<std::string, std::pair<double, double>> anchors_s;  // (X0+, X0-)
};

// X0 = target empirical counts + knowledge-base counts, per word of the
// target vocabulary; knowledge about words outside the vocabulary is
// ignored and missing knowledge counts as zero.
VirtualCounts init_virtual_counts(const std::map<std::string, double>& target_pos,
                                  const std::map<std::string, double>& target_neg,
                                  const KnowledgeBase& kb,
                                  const std::set<std::string>& vocabulary);

// Words whose smoothed conditional ratio P(w|+)/P(w|-) exceeds sigma in
// either direction on the target model.
std::set<std::string> select_vt(const NbModel& target_model, double sigma);

// Words of the vocabulary whose domain frequency reaches tau for either
// class, with R_w = M+/(M+ + M-).
std::pair<std::set<std::string>, std::map<std::string, double>> select_vs(
    const KnowledgeBase& kb, int tau, const std::set<std::string>& vocabulary);

// Sum over documents of P(labeled class | d) - P(other class | d), with
// posteriors computed from the virtual counts. Bounded by +-|docs|; larger
// is better.
double objective(const VirtualCounts& x, const std::vector<Document>& docs,
                 Priors priors, double lambda);

// Ratio of smoothed class totals raised to the document length:
//   g(X) = ((lambda*|V| + sum X+) / (lambda*|V| + sum X-)) ^ len.
// Evaluated as exp of a clamped log expression.
double g_factor(const VirtualCounts& x, int doc_len, double lambda,
                int vocab_size);

struct GradPair {
  double d_pos = 0.0;
  double d_neg = 0.0;
};

// Analytic gradient of the per-document objective F = P(y|d) - P(y'|d)
// with respect to the virtual counts of the document's words.
//
// Writing q for the posterior odds of the wrong class,
//
//   q = (P(y')/P(y)) * prod_w ((lambda+X_{y',w})/(lambda+X_{y,w}))^{n_w}
//       * g(X)^{s},   s = +1 for positive documents, -1 for negative,
//
// we have F = (1-q)/(1+q) and, for a word u with frequency n_u,
//
//   dF/dX_{y,u}  = 2q/(1+q)^2 * ( n_u/(lambda+X_{y,u})  - |d|/T_y  )
//   dF/dX_{y',u} = 2q/(1+q)^2 * ( |d|/T_{y'} - n_u/(lambda+X_{y',u}) )
//
// where T_c = lambda*|V| + sum_v X_{c,v}. The |d|/T terms are the
// dg/dX pieces ( dg/dX_{+,u} = |d| g/T+ and dg/dX_{-,u} = -|d| g/T- )
// folded through the quotient rule, and 2q/(1+q)^2 = 2 P(y|d) P(y'|d)
// is evaluated in log space. Verified against central finite differences
// by run_gradcheck.
std::map<std::string, GradPair> grad_doc(const VirtualCounts& x,
                                         const Document& doc, Priors priors,
                                         double lambda,
                                         const LscConfig& config);

// Value and gradient of the two quadratic penalties
//   (alpha/2) sum_{w in v_t} (X+ - N+)^2 + (X- - N-)^2
//   (alpha/2) sum_{w in v_s} (X+ - R X0+)^2 + (X- - (1-R) X0-)^2
// A word in both sets contributes both terms.
std::pair<double, std::map<std::string, GradPair>> penalty_value_and_grad(
    const VirtualCounts& x, const PenaltySpec& spec, double alpha);

// Assembles v_t / v_s and their anchors for a target model and start point.
PenaltySpec build_penalty_spec(const NbModel& target_model,
                               const VirtualCounts& x0,
                               const KnowledgeBase& kb,
                               const LscConfig& config);

struct SgdResult {
  VirtualCounts counts;
  Priors priors;                       // target empirical class priors
  std::vector<double> objective_trace;  // index 0 is the starting objective
  int epochs_run = 0;
  bool converged = false;
};

// Knowledge-based learner. The optimization vocabulary is the training
// vocabulary plus the knowledge base's reliable words (domain frequency
// >= tau), so polarity knowledge about words the target training split
// never saw still reaches classification; with an empty knowledge base it
// is exactly the training vocabulary. Starts at X0, then runs per-document
// SGD steps that ascend the per-document objective and descend the
// penalties, clamping counts at zero. Stops when the full-train objective
// moves less than epsilon between epochs, or at max_epochs. Throws
// DivergenceError if the objective stays more than 10% below its starting
// value for three consecutive epochs.
SgdResult sgd_train(const std::vector<Document>& target_train,
                    const KnowledgeBase& kb, const LscConfig& config);

// NB argmax with virtual counts in place of empirical ones; ties go to
// Positive, matching predict().
Polarity classify(const VirtualCounts& x, Priors priors, const Document& doc,
                  double lambda);

// Same flat format as the NB model, with a header recording the config,
// the priors and how training ended.
void save_virtual_counts(const SgdResult& result, const LscConfig& config,
                         const std::filesystem::path& path);
SgdResult load_virtual_counts(const std::filesystem::path& path,
                              LscConfig* config_out = nullptr);

}  // namespace lsc
