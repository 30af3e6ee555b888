#include "tltt/driver.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "tltt/parser.hpp"
#include "tltt/typechecker.hpp"

namespace tltt {

namespace {

const char* pragma_word(PragmaKind k) {
  switch (k) {
    case PragmaKind::Check: return "check";
    case PragmaKind::Infer: return "infer";
    case PragmaKind::Normalize: return "normalize";
    case PragmaKind::Conv: return "conv";
    case PragmaKind::Fail: return "fail";
  }
  return "?";
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return ss.str();
}

std::string flatten(std::string s) {
  for (char& c : s)
    if (c == '\n' || c == '\t' || c == '\r') c = ' ';
  return s;
}

std::string location(const Diagnostic& d) {
  std::string f = d.span.file_name();
  return (f.empty() ? std::string("<input>") : f) + ":" +
         std::to_string(d.span.line) + ":" + std::to_string(d.span.col);
}

}  // namespace

RunReport run(const RunConfig& config) {
  RunReport report;
  CheckMode mode;
  mode.strong = config.strong_mode;
  mode.strict_proof_irrelevance = config.strict_proof_irrelevance;
  mode.unfold_budget = config.unfold_budget;
  TypingContext ctx(nullptr, mode);

  for (const std::string& path : config.files) {
    FileReport fr;
    fr.path = path;
    std::optional<std::string> text = read_file(path);
    if (!text) {
      fr.status = FileStatus::Unreadable;
      report.io_error = true;
      Diagnostic d;
      d.code = DiagCode::SyntaxError;
      d.span.file = std::make_shared<const std::string>(path);
      d.message = "cannot read file";
      report.diagnostics.push_back(std::move(d));
      report.files.push_back(std::move(fr));
      continue;
    }

    NameSet globals(ctx.signature().order().begin(), ctx.signature().order().end());
    Module mod;
    try {
      mod = parse_module(*text, path, globals);
    } catch (const CheckError& e) {
      fr.status = FileStatus::Failed;
      report.diagnostics.push_back(e.diagnostic());
      report.files.push_back(std::move(fr));
      continue;
    }

    for (const Declaration& d : mod.decls) {
      bool is_pragma = d.tag == Declaration::Tag::Pragma;
      if (config.trace)
        report.trace.push_back(path + ":" + std::to_string(d.span.line) + ": " +
                               (is_pragma ? std::string("#") + pragma_word(d.pragma.kind)
                                          : d.name));
      DeclResult res;
      try {
        check_declaration(ctx, d, &res);
      } catch (const CheckError& e) {
        fr.status = FileStatus::Failed;
        report.diagnostics.push_back(e.diagnostic());
        continue;
      }
      if (is_pragma) {
        ++fr.pragmas;
        PragmaResult pr;
        pr.file = path;
        pr.line = d.span.line;
        pr.kind = pragma_word(d.pragma.kind);
        if (res.output) pr.output = *res.output;
        report.pragmas.push_back(std::move(pr));
      } else {
        ++fr.declarations;
      }
    }
    report.declarations += fr.declarations;
    report.pragma_count += fr.pragmas;
    report.files.push_back(std::move(fr));
  }
  return report;
}

int emit_report(const RunReport& report, OutputFormat format, std::ostream& out,
                std::ostream& err) {
  for (const std::string& t : report.trace) err << "trace: " << t << '\n';

  for (const PragmaResult& p : report.pragmas)
    if ((p.kind == "normalize" || p.kind == "infer") && format == OutputFormat::Human)
      out << p.output << '\n';

  if (format == OutputFormat::Lines) {
    for (const Diagnostic& d : report.diagnostics) {
      out << flatten(d.span.file_name()) << '\t' << d.span.line << '\t'
          << d.span.col << '\t' << code_name(d.code) << '\t' << flatten(d.message)
          << '\n';
    }
    return report.exit_code();
  }

  for (const Diagnostic& d : report.diagnostics) {
    out << "error[" << code_name(d.code) << "]: " << location(d) << '\n';
    out << "  " << d.message << '\n';
    if (d.expected) out << "  expected: " << *d.expected << '\n';
    if (d.actual) out << "  actual:   " << *d.actual << '\n';
  }
  if (report.ok()) {
    out << "OK: " << report.declarations << " declarations, "
        << report.pragma_count << " pragmas\n";
  } else {
    out << "FAILED: " << report.diagnostics.size() << " error"
        << (report.diagnostics.size() == 1 ? "" : "s") << '\n';
  }
  return report.exit_code();
}

}  // namespace tltt
