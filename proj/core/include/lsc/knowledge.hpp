#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "lsc/nb.hpp"
#include "lsc/types.hpp"

namespace lsc {

// What survives of a finished task: its smoothed conditionals and the raw
// class-word counts behind them. The original documents are not kept.
struct TaskRecord {
  std::string task_name;
  std::map<std::string, double> cond_pos;   // P(w|+) over the task vocabulary
  std::map<std::string, double> cond_neg;   // P(w|-) over the task vocabulary
  std::map<std::string, double> count_pos;  // empirical N_{+,w}, sparse
  std::map<std::string, double> count_neg;  // empirical N_{-,w}, sparse
};

// Aggregated cross-task knowledge.
//   n_*: summed word-class counts over all recorded tasks.
//   m_*: number of tasks whose classifier leaned the word positive
//        (P(w|+) > P(w|-)) resp. negative. Exact ties count for neither,
//        so m_pos[w] + m_neg[w] <= task_count.
struct KnowledgeBase {
  std::map<std::string, double> n_pos;
  std::map<std::string, double> n_neg;
  std::map<std::string, int> m_pos;
  std::map<std::string, int> m_neg;
  int task_count = 0;
  std::vector<std::string> task_names;  // insertion order
};

TaskRecord record_task(const NbModel& model, std::string task_name);

// Batch aggregation. Duplicate task names are an error: a task must not be
// counted twice.
KnowledgeBase mine_kb(const std::vector<TaskRecord>& records);

// Incremental form; folding add_task over a record list gives the same
// knowledge base as mine_kb on that list.
KnowledgeBase add_task(const KnowledgeBase& kb, const TaskRecord& record);

// Union of two knowledge bases with disjoint task sets.
KnowledgeBase merge_kb(const KnowledgeBase& a, const KnowledgeBase& b);

// Content equality ignoring task-name order.
bool same_content(const KnowledgeBase& a, const KnowledgeBase& b);

// Versioned snapshot: header (version, task_count, task names) followed by
// one word / N+ / N- / M+ / M- row per word. load(save(kb)) == kb, and
// save(load(save(kb))) is byte-identical to save(kb).
void save_kb(const KnowledgeBase& kb, const std::filesystem::path& path);
KnowledgeBase load_kb(const std::filesystem::path& path);

}  // namespace lsc
