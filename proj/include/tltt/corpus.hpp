#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tltt {

enum class CorpusMode : std::uint8_t { Any, Default, Strong, Quarantine };

struct CorpusFile {
  std::string path;  // absolute
  std::string name;  // as listed in the manifest
  CorpusMode mode = CorpusMode::Any;
  bool expect_ok = true;
  bool all_fail = false;  // every item is a #fail pragma
};

/// Reads `manifest.txt` from the corpus directory. Each non-comment line is
/// `FILE MODE VERDICT` with MODE in {any, default, strong, quarantine} and
/// VERDICT in {ok, fail, all-fail}; all-fail means the file checks and
/// consists of #fail items only. Order is the checking order.
std::vector<CorpusFile> corpus_manifest(const std::string& dir = TLTT_CORPUS_DIR);

/// Files that make up the default-mode run, in order.
std::vector<std::string> default_run_files(const std::vector<CorpusFile>& m);

/// Files checked together under --strong: the `any` files, then the
/// strong-only ones.
std::vector<std::string> strong_run_files(const std::vector<CorpusFile>& m);

}  // namespace tltt
