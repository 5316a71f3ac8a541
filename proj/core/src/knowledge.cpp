#include "lsc/knowledge.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "lsc/numeric.hpp"
#include "score_util.hpp"

namespace lsc {

TaskRecord record_task(const NbModel& model, std::string task_name) {
  TaskRecord rec;
  rec.task_name = std::move(task_name);
  for (const auto& word : model.vocabulary) {
    rec.cond_pos[word] = word_conditional(model, word, Polarity::Positive);
    rec.cond_neg[word] = word_conditional(model, word, Polarity::Negative);
  }
  rec.count_pos = model.counts_pos;
  rec.count_neg = model.counts_neg;
  return rec;
}

KnowledgeBase add_task(const KnowledgeBase& kb, const TaskRecord& record) {
  if (std::find(kb.task_names.begin(), kb.task_names.end(),
                record.task_name) != kb.task_names.end()) {
    throw KnowledgeError("task '" + record.task_name + "' already recorded");
  }

  KnowledgeBase out = kb;
  for (const auto& [word, n] : record.count_pos) out.n_pos[word] += n;
  for (const auto& [word, n] : record.count_neg) out.n_neg[word] += n;

  // Domain-level lean is judged on the task's smoothed conditionals over
  // its own vocabulary; a word the task never saw counts for neither side,
  // and exact ties count for neither.
  for (const auto& [word, p_pos] : record.cond_pos) {
    auto it = record.cond_neg.find(word);
    double p_neg = it == record.cond_neg.end() ? 0.0 : it->second;
    if (p_pos > p_neg) {
      out.m_pos[word] += 1;
    } else if (p_pos < p_neg) {
      out.m_neg[word] += 1;
    }
  }

  out.task_count += 1;
  out.task_names.push_back(record.task_name);
  return out;
}

KnowledgeBase mine_kb(const std::vector<TaskRecord>& records) {
  KnowledgeBase kb;
  for (const auto& rec : records) kb = add_task(kb, rec);
  return kb;
}

KnowledgeBase merge_kb(const KnowledgeBase& a, const KnowledgeBase& b) {
  KnowledgeBase out = a;
  for (const auto& name : b.task_names) {
    if (std::find(a.task_names.begin(), a.task_names.end(), name) !=
        a.task_names.end()) {
      throw KnowledgeError("merge_kb: task '" + name + "' on both sides");
    }
    out.task_names.push_back(name);
  }
  out.task_count += b.task_count;
  for (const auto& [word, n] : b.n_pos) out.n_pos[word] += n;
  for (const auto& [word, n] : b.n_neg) out.n_neg[word] += n;
  for (const auto& [word, m] : b.m_pos) out.m_pos[word] += m;
  for (const auto& [word, m] : b.m_neg) out.m_neg[word] += m;
  return out;
}

bool same_content(const KnowledgeBase& a, const KnowledgeBase& b) {
  auto sorted = [](std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  return a.task_count == b.task_count && a.n_pos == b.n_pos &&
         a.n_neg == b.n_neg && a.m_pos == b.m_pos && a.m_neg == b.m_neg &&
         sorted(a.task_names) == sorted(b.task_names);
}

namespace {

void check_name_serializable(const std::string& s, const char* what) {
  if (s.find_first_of("\t\n\r") != std::string::npos) {
    throw KnowledgeError(std::string("cannot serialize ") + what +
                         " with tab/newline: '" + s + "'");
  }
}

std::string expect_line(std::istream& in, const std::string& context) {
  std::string line;
  if (!std::getline(in, line)) {
    throw KnowledgeError("truncated snapshot while reading " + context);
  }
  return line;
}

std::string header_value(const std::string& line, const std::string& key) {
  if (line.rfind(key + " ", 0) != 0) {
    throw KnowledgeError("expected header '" + key + "', got '" + line + "'");
  }
  return line.substr(key.size() + 1);
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      parts.push_back(line.substr(start));
      return parts;
    }
    parts.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

}  // namespace

void save_kb(const KnowledgeBase& kb, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw KnowledgeError("cannot write snapshot: " + path.string());

  out << "lsc-kb-snapshot 1\n";
  out << "task_count " << kb.task_count << "\n";
  for (const auto& name : kb.task_names) {
    check_name_serializable(name, "task name");
    out << "task " << name << "\n";
  }

  std::set<std::string> words;
  for (const auto& [word, v] : kb.n_pos) words.insert(word);
  for (const auto& [word, v] : kb.n_neg) words.insert(word);
  for (const auto& [word, v] : kb.m_pos) words.insert(word);
  for (const auto& [word, v] : kb.m_neg) words.insert(word);

  out << "words " << words.size() << "\n";
  for (const auto& word : words) {
    check_name_serializable(word, "word");
    auto m_of = [](const std::map<std::string, int>& m, const std::string& w) {
      auto it = m.find(w);
      return it == m.end() ? 0 : it->second;
    };
    out << word << "\t" << format_double(detail::count_of(kb.n_pos, word))
        << "\t" << format_double(detail::count_of(kb.n_neg, word)) << "\t"
        << m_of(kb.m_pos, word) << "\t" << m_of(kb.m_neg, word) << "\n";
  }
  if (!out) throw KnowledgeError("I/O error writing " + path.string());
}

KnowledgeBase load_kb(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw KnowledgeError("cannot open snapshot: " + path.string());

  if (expect_line(in, "magic") != "lsc-kb-snapshot 1") {
    throw KnowledgeError(path.string() + ": not an lsc-kb-snapshot file");
  }
  KnowledgeBase kb;
  kb.task_count = static_cast<int>(
      parse_int(header_value(expect_line(in, "task_count"), "task_count")));

  std::string line = expect_line(in, "task list");
  while (line.rfind("task ", 0) == 0) {
    kb.task_names.push_back(line.substr(5));
    line = expect_line(in, "task list");
  }
  if (static_cast<int>(kb.task_names.size()) != kb.task_count) {
    throw KnowledgeError(path.string() + ": task_count does not match task list");
  }

  long long words = parse_int(header_value(line, "words"));
  for (long long i = 0; i < words; ++i) {
    auto parts = split_tabs(expect_line(in, "word row"));
    if (parts.size() != 5) {
      throw KnowledgeError(path.string() + ": bad word row");
    }
    const std::string& word = parts[0];
    double n_pos = parse_double(parts[1]);
    double n_neg = parse_double(parts[2]);
    int m_pos = static_cast<int>(parse_int(parts[3]));
    int m_neg = static_cast<int>(parse_int(parts[4]));
    if (n_pos != 0.0) kb.n_pos[word] = n_pos;
    if (n_neg != 0.0) kb.n_neg[word] = n_neg;
    if (m_pos != 0) kb.m_pos[word] = m_pos;
    if (m_neg != 0) kb.m_neg[word] = m_neg;
  }
  return kb;
}

}  // namespace lsc
