#pragma once

#include <cstdint>
#include <exception>
#include <fstream>
#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "electra/election.hpp"
#include "electra/parallel.hpp"
#include "json.hpp"

namespace cli {

using nlohmann::json;

struct GlobalOptions {
  std::uint64_t seed = 0;
  bool json = false;
  bool csv = false;
  std::string out;
  int jobs = 1;
  bool break_ties = false;
  int exit_code = 0;  // set by commands that report per-file failures and continue
};

/// Failure tied to one input file; reported as a JSON record on stderr.
class FileError : public std::runtime_error {
 public:
  FileError(std::string file, const std::exception& cause);
  const std::string& file() const { return file_; }
  const std::string& kind() const { return kind_; }
  int line() const { return line_; }

 private:
  std::string file_;
  std::string kind_;
  int line_ = 0;
};

/// Short machine-readable name of an exception's type.
std::string error_kind(const std::exception& error);

/// Error record printed on stderr.
json error_record(const std::exception& error);

struct InputFile {
  std::string path;
  std::string id;   // file name without extension
  std::string tag;  // parent directory name
};

/// Files named on the command line; directories contribute their
/// .soc/.soi/.toc/.toi files. The result is sorted by path.
std::vector<InputFile> expand_inputs(const std::vector<std::string>& args);

electra::Election load(const InputFile& file, const GlobalOptions& options);

template <typename Fn>
auto with_file(const std::string& path, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const FileError&) {
    throw;
  } catch (const std::exception& error) {
    throw FileError(path, error);
  }
}

/// Runs fn(i) for every input on `jobs` threads and keeps results in input
/// order. If any item fails, the error of the lowest index is rethrown.
template <typename T, typename Fn>
std::vector<T> map_inputs(std::size_t count, int jobs, Fn&& fn) {
  std::vector<std::optional<T>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  electra::parallel_for(count, jobs, [&](std::size_t i) {
    try {
      slots[i].emplace(fn(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  });
  std::vector<T> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

/// stdout, or the --out file (truncated, binary so lines end in LF).
class Output {
 public:
  explicit Output(const std::string& path);
  std::ostream& stream() { return *stream_; }
  void finish();

 private:
  std::string path_;
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

/// Shortest decimal that round-trips, the same form the JSON output uses.
std::string number(double x);

std::string csv_field(const std::string& text);

/// Zero-padded 1-based file counter, at least four digits.
std::string counter(std::size_t index, std::size_t count);

void register_data_commands(CLI::App& app, GlobalOptions& options);
void register_analysis_commands(CLI::App& app, GlobalOptions& options);

}  // namespace cli
