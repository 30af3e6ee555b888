#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tltt/diagnostic.hpp"

namespace tltt {

enum class OutputFormat : std::uint8_t { Human, Lines };

struct RunConfig {
  std::vector<std::string> files;
  bool strong_mode = false;
  bool strict_proof_irrelevance = false;
  bool trace = false;
  OutputFormat format = OutputFormat::Human;
  std::optional<std::size_t> unfold_budget;
};

enum class FileStatus : std::uint8_t { Ok, Failed, Unreadable };

struct FileReport {
  std::string path;
  FileStatus status = FileStatus::Ok;
  std::size_t declarations = 0;
  std::size_t pragmas = 0;
};

struct PragmaResult {
  std::string file;
  int line = 0;
  std::string kind;    // check, infer, normalize, conv, fail
  std::string output;  // printed term for infer / normalize
};

struct RunReport {
  std::vector<FileReport> files;
  std::vector<Diagnostic> diagnostics;
  std::vector<PragmaResult> pragmas;
  std::vector<std::string> trace;
  std::size_t declarations = 0;
  std::size_t pragma_count = 0;
  bool io_error = false;

  bool ok() const { return !io_error && diagnostics.empty(); }
  int exit_code() const { return io_error ? 2 : (diagnostics.empty() ? 0 : 1); }
};

/// Parses and checks the files in order against one shared signature.
/// A file that fails to parse contributes one diagnostic and is skipped.
RunReport run(const RunConfig& config);

/// Writes the report and returns the process exit code.
int emit_report(const RunReport& report, OutputFormat format, std::ostream& out,
                std::ostream& err);

}  // namespace tltt
