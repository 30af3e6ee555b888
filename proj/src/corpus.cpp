#include "tltt/corpus.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tltt {

std::vector<CorpusFile> corpus_manifest(const std::string& dir) {
  std::ifstream in(dir + "/manifest.txt");
  if (!in) throw std::runtime_error("cannot open " + dir + "/manifest.txt");
  std::vector<CorpusFile> out;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string file, mode, verdict;
    if (!(ls >> file) || file[0] == '#') continue;
    if (!(ls >> mode >> verdict))
      throw std::runtime_error("malformed manifest line: " + line);
    CorpusFile f;
    f.name = file;
    f.path = dir + "/" + file;
    if (mode == "any") f.mode = CorpusMode::Any;
    else if (mode == "default") f.mode = CorpusMode::Default;
    else if (mode == "strong") f.mode = CorpusMode::Strong;
    else if (mode == "quarantine") f.mode = CorpusMode::Quarantine;
    else throw std::runtime_error("unknown corpus mode: " + mode);
    if (verdict != "ok" && verdict != "fail" && verdict != "all-fail")
      throw std::runtime_error("unknown corpus verdict: " + verdict);
    f.expect_ok = verdict != "fail";
    f.all_fail = verdict == "all-fail";
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<std::string> default_run_files(const std::vector<CorpusFile>& m) {
  std::vector<std::string> out;
  for (const auto& f : m)
    if (f.mode == CorpusMode::Any || f.mode == CorpusMode::Default)
      out.push_back(f.path);
  return out;
}

std::vector<std::string> strong_run_files(const std::vector<CorpusFile>& m) {
  std::vector<std::string> out;
  for (const auto& f : m)
    if (f.mode == CorpusMode::Any || f.mode == CorpusMode::Strong)
      out.push_back(f.path);
  return out;
}

}  // namespace tltt
