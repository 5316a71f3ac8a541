#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "lsc/nb.hpp"
#include "lsc/numeric.hpp"
#include "oracles.hpp"

using lsc::Polarity;

TEST_CASE("train_nb computes smoothed conditionals") {
  // one positive "good good" plus an empty negative doc, V = {good, bad}
  std::vector<lsc::Document> docs = {
      oracle::make_doc("p", {{"good", 2}}, Polarity::Positive),
      oracle::make_doc("n", {}, Polarity::Negative),
  };
  auto model = lsc::train_nb(docs, 1.0, {"good", "bad"});
  CHECK(lsc::word_conditional(model, "good", Polarity::Positive) ==
        doctest::Approx(3.0 / 4.0).epsilon(1e-12));
  // a class with all-zero counts smooths to uniform 1/|V|
  CHECK(lsc::word_conditional(model, "good", Polarity::Negative) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(lsc::word_conditional(model, "bad", Polarity::Negative) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("priors are document fractions") {
  std::vector<lsc::Document> docs;
  for (int i = 0; i < 3; ++i) {
    docs.push_back(oracle::make_doc("p" + std::to_string(i), {{"a", 1}},
                                    Polarity::Positive));
  }
  docs.push_back(oracle::make_doc("n", {{"a", 1}}, Polarity::Negative));
  auto model = lsc::train_nb(docs, 1.0, {"a"});
  CHECK(model.prior_pos == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(model.prior_neg == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("train_nb validates its inputs") {
  std::vector<lsc::Document> docs = {
      oracle::make_doc("p", {{"a", 1}}, Polarity::Positive)};
  CHECK_THROWS_AS(lsc::train_nb(docs, 1.0, {"a"}), lsc::ModelError);  // one class
  docs.push_back(oracle::make_doc("n", {{"b", 1}}, Polarity::Negative));
  CHECK_THROWS_AS(lsc::train_nb(docs, 1.5, {"a", "b"}), lsc::ModelError);
  CHECK_THROWS_AS(lsc::train_nb(docs, -0.1, {"a", "b"}), lsc::ModelError);
  CHECK_THROWS_AS(lsc::train_nb(docs, 1.0, {"a"}), lsc::ModelError);  // b missing
  CHECK_THROWS_AS(lsc::train_nb({}, 1.0, {}), lsc::ModelError);
}

TEST_CASE("word_conditional on a hand instance") {
  std::vector<lsc::Document> docs = {
      oracle::make_doc("p", {{"a", 3}, {"b", 1}}, Polarity::Positive),
      oracle::make_doc("n", {{"b", 1}}, Polarity::Negative),
  };
  auto model = lsc::train_nb(docs, 1.0, {"a", "b"});
  // (1+3)/(1*2 + 4) = 2/3
  CHECK(lsc::word_conditional(model, "a", Polarity::Positive) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK_THROWS_AS(lsc::word_conditional(model, "zzz", Polarity::Positive),
                  lsc::ModelError);
}

TEST_CASE("unsmoothed zero count gives zero probability") {
  std::vector<lsc::Document> docs = {
      oracle::make_doc("p", {{"b", 2}}, Polarity::Positive),
      oracle::make_doc("n", {{"a", 1}}, Polarity::Negative),
  };
  auto model = lsc::train_nb(docs, 0.0, {"a", "b"});
  CHECK(lsc::word_conditional(model, "a", Polarity::Positive) == 0.0);
}

TEST_CASE("conditionals sum to one per class") {
  lsc::Rng rng(41);
  for (int iter = 0; iter < 50; ++iter) {
    auto inst = oracle::random_instance(rng);
    auto model = lsc::train_nb(inst.docs, inst.lambda, inst.vocabulary);
    double sum_pos = 0.0, sum_neg = 0.0;
    for (const auto& w : model.vocabulary) {
      sum_pos += lsc::word_conditional(model, w, Polarity::Positive);
      sum_neg += lsc::word_conditional(model, w, Polarity::Negative);
    }
    CHECK(std::abs(sum_pos - 1.0) < 1e-9);
    CHECK(std::abs(sum_neg - 1.0) < 1e-9);
  }
}

TEST_CASE("empty document posterior equals the priors") {
  std::vector<lsc::Document> docs;
  for (int i = 0; i < 3; ++i) {
    docs.push_back(oracle::make_doc("p" + std::to_string(i), {{"a", 1}},
                                    Polarity::Positive));
  }
  docs.push_back(oracle::make_doc("n", {{"b", 2}}, Polarity::Negative));
  auto model = lsc::train_nb(docs, 1.0, {"a", "b"});
  auto [p_pos, p_neg] = lsc::posterior(model, oracle::make_doc("e", {}, Polarity::Positive));
  CHECK(p_pos == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(p_neg == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("symmetric model gives an even posterior and Positive tie-break") {
  std::vector<lsc::Document> docs = {
      oracle::make_doc("p", {{"a", 2}, {"b", 1}}, Polarity::Positive),
      oracle::make_doc("n", {{"a", 2}, {"b", 1}}, Polarity::Negative),
  };
  auto model = lsc::train_nb(docs, 1.0, {"a", "b"});
  auto doc = oracle::make_doc("t", {{"a", 1}, {"b", 3}}, Polarity::Positive);
  auto [p_pos, p_neg] = lsc::posterior(model, doc);
  CHECK(p_pos == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(p_neg == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(lsc::predict(model, doc) == Polarity::Positive);
}

TEST_CASE("log posterior matches the probability-space oracle") {
  lsc::Rng rng(42);
  for (int iter = 0; iter < 100; ++iter) {
    auto inst = oracle::random_instance(rng);
    auto model = lsc::train_nb(inst.docs, inst.lambda, inst.vocabulary);
    for (const auto& doc : inst.docs) {
      auto [p_pos, p_neg] = lsc::posterior(model, doc);
      auto [o_pos, o_neg] = oracle::posterior(model, doc);
      CHECK(std::abs(p_pos - o_pos) <= 1e-9 * std::max(p_pos, o_pos));
      CHECK(std::abs(p_neg - o_neg) <= 1e-9 * std::max(p_neg, o_neg));
      CHECK(lsc::predict(model, doc) == oracle::predict(model, doc));
    }
  }
}

TEST_CASE("out-of-vocabulary test words are skipped") {
  std::vector<lsc::Document> docs = {
      oracle::make_doc("p", {{"a", 1}}, Polarity::Positive),
      oracle::make_doc("n", {{"b", 1}}, Polarity::Negative),
  };
  auto model = lsc::train_nb(docs, 1.0, {"a", "b"});
  auto with_oov = oracle::make_doc("t", {{"a", 1}, {"mystery", 4}}, Polarity::Positive);
  auto without = oracle::make_doc("t", {{"a", 1}}, Polarity::Positive);
  CHECK(lsc::log_posterior(model, with_oov) == lsc::log_posterior(model, without));
}

TEST_CASE("posterior ignores word order (bag of words)") {
  std::vector<lsc::Document> docs = {
      oracle::make_doc("p", {{"a", 2}, {"b", 1}}, Polarity::Positive),
      oracle::make_doc("n", {{"c", 1}}, Polarity::Negative),
  };
  auto model = lsc::train_nb(docs, 1.0, {"a", "b", "c"});
  auto d1 = oracle::make_doc("x", {{"a", 1}, {"b", 1}, {"c", 1}}, Polarity::Positive);
  auto d2 = oracle::make_doc("x", {{"c", 1}, {"b", 1}, {"a", 1}}, Polarity::Positive);
  CHECK(lsc::log_posterior(model, d1) == lsc::log_posterior(model, d2));
}

TEST_CASE("dominant evidence wins") {
  std::vector<lsc::Document> docs = {
      oracle::make_doc("p", {{"great", 9}}, Polarity::Positive),
      oracle::make_doc("n", {{"awful", 9}}, Polarity::Negative),
  };
  auto model = lsc::train_nb(docs, 1.0, {"great", "awful"});
  CHECK(lsc::predict(model, oracle::make_doc("t", {{"great", 1}},
                                             Polarity::Positive)) ==
        Polarity::Positive);
  CHECK(lsc::predict(model, oracle::make_doc("t", {{"awful", 1}},
                                             Polarity::Positive)) ==
        Polarity::Negative);
}

TEST_CASE("unsmoothed counts are exactly scale invariant") {
  // With lambda = 0 the conditionals are plain ratios, so scaling both
  // classes' counts cancels. (With lambda > 0 smoothing weights shift
  // under scaling, so no such identity is claimed.) Exact score ties are
  // excluded: there the argmax sits on a rounding knife edge.
  lsc::Rng rng(77);
  for (int iter = 0; iter < 30; ++iter) {
    auto inst = oracle::random_instance(rng);
    auto model = lsc::train_nb(inst.docs, 0.0, inst.vocabulary);
    auto scaled = model;
    for (auto& [w, v] : scaled.counts_pos) v *= 2.5;
    for (auto& [w, v] : scaled.counts_neg) v *= 2.5;
    lsc::refresh_totals(scaled);
    for (const auto& doc : inst.docs) {
      auto [s_pos, s_neg] = lsc::log_posterior(model, doc);
      if (std::abs(s_pos - s_neg) < 1e-9) continue;
      CHECK(lsc::predict(model, doc) == lsc::predict(scaled, doc));
    }
  }
}

TEST_CASE("model serialization round-trips exactly") {
  lsc::Rng rng(43);
  auto inst = oracle::random_instance(rng);
  auto model = lsc::train_nb(inst.docs, 0.37, inst.vocabulary);

  auto path = std::filesystem::temp_directory_path() / "lsc_model_rt.nb";
  lsc::save_nb_model(model, path);
  auto loaded = lsc::load_nb_model(path);
  CHECK(model == loaded);

  // byte-identical re-save
  auto path2 = std::filesystem::temp_directory_path() / "lsc_model_rt2.nb";
  lsc::save_nb_model(loaded, path2);
  std::ifstream a(path, std::ios::binary), b(path2, std::ios::binary);
  std::string sa((std::istreambuf_iterator<char>(a)), {});
  std::string sb((std::istreambuf_iterator<char>(b)), {});
  CHECK(sa == sb);
}

TEST_CASE("model loader rejects garbage") {
  auto path = std::filesystem::temp_directory_path() / "lsc_model_bad.nb";
  std::ofstream(path) << "something else\n";
  CHECK_THROWS_AS(lsc::load_nb_model(path), lsc::ModelError);
  CHECK_THROWS_AS(lsc::load_nb_model("/nonexistent/x.nb"), lsc::ModelError);
}
