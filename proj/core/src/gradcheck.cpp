#include "lsc/gradcheck.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "lsc/optimizer.hpp"
#include "lsc/rng.hpp"

namespace lsc {

namespace {

// Reference evaluation of the per-document objective in plain probability
// arithmetic: unnormalized class masses prior * prod (lambda+x)^n / T^len,
// then F = P(label|d) - P(other|d). Instances are small enough that
// nothing over- or underflows, and none of the log-space production code
// is involved.
double direct_doc_objective(const VirtualCounts& x, const Document& doc,
                            Priors priors, double lambda, LengthMode mode) {
  double t_pos = lambda * static_cast<double>(x.vocabulary.size());
  double t_neg = t_pos;
  for (const auto& [w, v] : x.x_pos) t_pos += v;
  for (const auto& [w, v] : x.x_neg) t_neg += v;

  double num_pos = priors.pos;
  double num_neg = priors.neg;
  int length = 0;
  for (const auto& [word, n] : doc.counts) {
    num_pos *= std::pow(lambda + x.x_pos.at(word), n);
    num_neg *= std::pow(lambda + x.x_neg.at(word), n);
    length += mode == LengthMode::TotalTokens ? n : 1;
  }
  num_pos /= std::pow(t_pos, length);
  num_neg /= std::pow(t_neg, length);

  double p_pos = num_pos / (num_pos + num_neg);
  double p_neg = num_neg / (num_pos + num_neg);
  return doc.label == Polarity::Positive ? p_pos - p_neg : p_neg - p_pos;
}

double direct_penalty_value(const VirtualCounts& x, const PenaltySpec& spec,
                            double alpha) {
  double value = 0.0;
  for (const auto& word : spec.v_t) {
    double dp = x.x_pos.at(word) - spec.anchors_t.at(word).first;
    double dn = x.x_neg.at(word) - spec.anchors_t.at(word).second;
    value += 0.5 * alpha * (dp * dp + dn * dn);
  }
  for (const auto& word : spec.v_s) {
    double r = spec.ratio.at(word);
    double dp = x.x_pos.at(word) - r * spec.anchors_s.at(word).first;
    double dn = x.x_neg.at(word) - (1.0 - r) * spec.anchors_s.at(word).second;
    value += 0.5 * alpha * (dp * dp + dn * dn);
  }
  return value;
}

struct Checker {
  const GradCheckOptions& opt;
  GradCheckResult& result;

  // true if the analytic value sits within tolerance of the central
  // difference.
  void check(double analytic, double fd, const std::string& context) {
    result.checks++;
    double err = std::abs(analytic - fd);
    double scale = std::max(std::abs(analytic), std::abs(fd));
    double rel = scale > 0 ? err / scale : 0.0;
    if (rel > result.max_rel_err && err > opt.abs_floor) {
      result.max_rel_err = rel;
    }
    if (err <= std::max(opt.abs_floor, opt.rel_tol * scale)) return;
    result.failures++;
    if (result.failure_notes.size() < 10) {
      std::ostringstream os;
      os << context << ": analytic " << analytic << " vs fd " << fd;
      result.failure_notes.push_back(os.str());
    }
  }
};

}  // namespace

GradCheckResult run_gradcheck(const GradCheckOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  GradCheckResult result;
  Checker checker{opt, result};
  Rng rng(opt.seed);

  for (int inst = 0; inst < opt.instances; ++inst) {
    int vocab_size = 2 + static_cast<int>(rng.below(opt.max_vocab - 1));
    VirtualCounts x;
    std::vector<std::string> words;
    for (int i = 0; i < vocab_size; ++i) {
      words.push_back("w" + std::to_string(i));
      x.vocabulary.insert(words.back());
    }
    for (const auto& w : words) {
      // a slice of exact zeros keeps the clamp boundary covered
      x.x_pos[w] = rng.unit() < 0.1 ? 0.0 : rng.unit() * opt.max_count;
      x.x_neg[w] = rng.unit() < 0.1 ? 0.0 : rng.unit() * opt.max_count;
    }

    double lambda = inst % 2 == 0 ? 1.0 : 0.1 + 0.9 * rng.unit();
    Priors priors;
    priors.pos = 0.1 + 0.8 * rng.unit();
    priors.neg = 1.0 - priors.pos;

    LscConfig config;
    config.lambda = lambda;
    config.length_mode =
        inst % 5 == 4 ? LengthMode::DistinctWords : LengthMode::TotalTokens;

    Document doc;
    doc.id = "inst" + std::to_string(inst);
    doc.label = inst % 2 == 0 ? Polarity::Positive : Polarity::Negative;
    int distinct = 1 + static_cast<int>(rng.below(std::min(vocab_size, 4)));
    int budget = opt.max_doc_tokens;
    std::vector<std::string> pool = words;
    rng.shuffle(pool);
    for (int i = 0; i < distinct && budget > 0; ++i) {
      int n = 1 + static_cast<int>(rng.below(std::min(budget, 3)));
      doc.counts[pool[i]] = n;
      budget -= n;
    }

    auto grads = grad_doc(x, doc, priors, lambda, config);
    for (const auto& [word, analytic] : grads) {
      auto fd_of = [&](std::map<std::string, double> VirtualCounts::*side) {
        double v = (x.*side).at(word);
        double h = 1e-5 * std::max(1.0, std::abs(v));
        VirtualCounts xp = x;
        (xp.*side)[word] = v + h;
        VirtualCounts xm = x;
        (xm.*side)[word] = v - h;
        double fp = direct_doc_objective(xp, doc, priors, lambda, config.length_mode);
        double fm = direct_doc_objective(xm, doc, priors, lambda, config.length_mode);
        return (fp - fm) / (2.0 * h);
      };
      std::string ctx = "inst " + std::to_string(inst) + " word " + word;
      checker.check(analytic.d_pos, fd_of(&VirtualCounts::x_pos), ctx + " d_pos");
      checker.check(analytic.d_neg, fd_of(&VirtualCounts::x_neg), ctx + " d_neg");
    }

    if (opt.include_penalties && inst % 2 == 1) {
      PenaltySpec spec;
      double alpha = 0.05 + 0.45 * rng.unit();
      for (const auto& w : words) {
        if (rng.unit() < 0.3) {
          spec.v_t.insert(w);
          spec.anchors_t[w] = {rng.unit() * opt.max_count,
                               rng.unit() * opt.max_count};
        }
        if (rng.unit() < 0.3) {
          spec.v_s.insert(w);
          spec.ratio[w] = rng.unit();
          spec.anchors_s[w] = {rng.unit() * opt.max_count,
                               rng.unit() * opt.max_count};
        }
      }
      auto [value, pgrads] = penalty_value_and_grad(x, spec, alpha);
      (void)value;
      for (const auto& [word, analytic] : pgrads) {
        auto fd_of = [&](std::map<std::string, double> VirtualCounts::*side) {
          double v = (x.*side).at(word);
          double h = 1e-5 * std::max(1.0, std::abs(v));
          VirtualCounts xp = x;
          (xp.*side)[word] = v + h;
          VirtualCounts xm = x;
          (xm.*side)[word] = v - h;
          return (direct_penalty_value(xp, spec, alpha) -
                  direct_penalty_value(xm, spec, alpha)) /
                 (2.0 * h);
        };
        std::string ctx = "inst " + std::to_string(inst) + " penalty " + word;
        checker.check(analytic.d_pos, fd_of(&VirtualCounts::x_pos), ctx + " d_pos");
        checker.check(analytic.d_neg, fd_of(&VirtualCounts::x_neg), ctx + " d_neg");
      }
    }
    result.instances++;
  }

  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

}  // namespace lsc
