#include "common.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>

#include "electra/io.hpp"

namespace cli {

namespace fs = std::filesystem;

std::string error_kind(const std::exception& error) {
  if (dynamic_cast<const electra::ParseError*>(&error)) return "parse_error";
  if (dynamic_cast<const electra::IncompleteElection*>(&error)) return "incomplete_election";
  if (dynamic_cast<const electra::InvalidElection*>(&error)) return "invalid_election";
  if (dynamic_cast<const electra::InstanceTooLarge*>(&error)) return "instance_too_large";
  if (dynamic_cast<const electra::UndefinedCorrelation*>(&error)) return "undefined_correlation";
  if (dynamic_cast<const electra::ShapeMismatch*>(&error)) return "shape_mismatch";
  if (dynamic_cast<const CLI::Error*>(&error)) return "usage";
  if (dynamic_cast<const fs::filesystem_error*>(&error)) return "io_error";
  if (dynamic_cast<const electra::Error*>(&error)) return "error";
  return "internal";
}

FileError::FileError(std::string file, const std::exception& cause)
    : std::runtime_error(cause.what()), file_(std::move(file)), kind_(error_kind(cause)) {
  if (const auto* parse = dynamic_cast<const electra::ParseError*>(&cause)) line_ = parse->line();
}

json error_record(const std::exception& error) {
  json record;
  if (const auto* f = dynamic_cast<const FileError*>(&error)) {
    record["error"] = f->kind();
    record["file"] = f->file();
    if (f->line() > 0) record["line"] = f->line();
  } else {
    record["error"] = error_kind(error);
  }
  record["message"] = error.what();
  return record;
}

std::vector<InputFile> expand_inputs(const std::vector<std::string>& args) {
  static const std::vector<std::string> extensions{".soc", ".soi", ".toc", ".toi"};
  std::vector<fs::path> paths;
  for (const std::string& arg : args) {
    const fs::path p(arg);
    if (fs::is_directory(p)) {
      for (const auto& entry : fs::directory_iterator(p)) {
        const std::string ext = entry.path().extension().string();
        if (entry.is_regular_file() && std::find(extensions.begin(), extensions.end(), ext) != extensions.end()) {
          paths.push_back(entry.path());
        }
      }
    } else if (fs::exists(p)) {
      paths.push_back(p);
    } else {
      throw FileError(arg, electra::Error("no such file or directory"));
    }
  }
  std::sort(paths.begin(), paths.end());
  paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
  if (paths.empty()) throw electra::Error("no input election files");

  std::vector<InputFile> files;
  for (const fs::path& p : paths) {
    const fs::path parent = p.has_parent_path() ? p.parent_path() : fs::current_path();
    std::string tag = fs::absolute(parent).lexically_normal().filename().string();
    if (tag.empty()) tag = fs::absolute(parent).lexically_normal().parent_path().filename().string();
    files.push_back({p.string(), p.stem().string(), tag});
  }
  return files;
}

electra::Election load(const InputFile& file, const GlobalOptions& options) {
  return with_file(file.path, [&] {
    electra::ParseOptions parse;
    parse.break_ties = options.break_ties;
    return electra::read_election_file(file.path, parse);
  });
}

Output::Output(const std::string& path) : path_(path), stream_(&std::cout) {
  if (path.empty()) return;
  file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
  if (!*file_) throw FileError(path, electra::Error("cannot open for writing"));
  stream_ = file_.get();
}

void Output::finish() {
  stream_->flush();
  if (!*stream_) throw FileError(path_.empty() ? "<stdout>" : path_, electra::Error("write failed"));
}

std::string number(double x) { return json(x).dump(); }

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string counter(std::size_t index, std::size_t count) {
  const std::size_t width = std::max<std::size_t>(4, std::to_string(count).size());
  std::string digits = std::to_string(index + 1);
  return std::string(width - std::min(width, digits.size()), '0') + digits;
}

}  // namespace cli
