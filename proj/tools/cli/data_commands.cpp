#include <filesystem>
#include <iostream>

#include "common.hpp"
#include "electra/cultures.hpp"
#include "electra/io.hpp"
#include "electra/metrics.hpp"
#include "electra/preprocess.hpp"
#include "electra/rng.hpp"

namespace cli {

namespace fs = std::filesystem;
using electra::Election;

namespace {

json magnitude_json(const electra::Magnitude& m) { return {{"log10", m.log10}, {"decimal", m.decimal}}; }

std::string part_name(electra::VotePart part) {
  switch (part) {
    case electra::VotePart::top: return "top";
    case electra::VotePart::middle: return "middle";
    case electra::VotePart::bottom: return "bottom";
  }
  return "unknown";
}

void validate(const std::vector<std::string>& args, GlobalOptions& g) {
  Output out(g.out);
  if (g.csv) out.stream() << "file,m,n,kind\n";
  for (const InputFile& file : expand_inputs(args)) {
    try {
      const Election e = load(file, g);
      const std::string kind = e.is_complete() ? "complete" : "incomplete";
      if (g.csv) {
        out.stream() << csv_field(file.path) << ',' << e.m() << ',' << e.n() << ',' << kind << '\n';
      } else {
        out.stream() << json{{"file", file.path}, {"m", e.m()}, {"n", e.n()}, {"kind", kind}}.dump() << '\n';
      }
    } catch (const FileError& error) {
      std::cerr << error_record(error).dump() << '\n';
      g.exit_code = 1;
    }
  }
  out.finish();
}

struct CompleteArgs {
  std::string input;
  std::string output;
  int effort = 64;
};

void complete(const CompleteArgs& a, const GlobalOptions& g) {
  const InputFile file{a.input, fs::path(a.input).stem().string(), ""};
  const Election e = load(file, g);
  const Election c = with_file(a.input, [&] { return electra::complete_election(e, a.effort, g.seed); });
  with_file(a.output, [&] { electra::write_election_file(a.output, c); });
  Output out(g.out);
  out.stream() << json{{"file", a.input}, {"out", a.output}, {"m_in", e.m()}, {"n_in", e.n()},
                       {"m", c.m()},      {"n", c.n()},        {"edges", static_cast<long long>(c.m()) * c.n()}}
                      .dump()
               << '\n';
  out.finish();
}

struct NormalizeArgs {
  std::vector<std::string> inputs;
  int m = 15;
  int n = 30;
  int count = 500;
};

void normalize(const NormalizeArgs& a, const GlobalOptions& g) {
  if (g.out.empty()) throw electra::Error("normalize needs --out <directory>");
  const std::vector<InputFile> files = expand_inputs(a.inputs);
  const std::vector<Election> elections =
      map_inputs<Election>(files.size(), g.jobs, [&](std::size_t i) { return load(files[i], g); });
  std::vector<std::size_t> relevant;
  for (std::size_t i = 0; i < elections.size(); ++i) {
    if (elections[i].is_complete() && electra::is_relevant(elections[i], a.m)) relevant.push_back(i);
  }
  if (relevant.empty()) throw electra::Error("no complete input election has at least " + std::to_string(a.m) + " candidates");

  fs::create_directories(g.out);
  const auto count = static_cast<std::size_t>(std::max(a.count, 0));
  const std::vector<std::string> sources = map_inputs<std::string>(count, g.jobs, [&](std::size_t k) {
    electra::Rng rng(electra::derive_seed(g.seed, k));
    const std::size_t source = relevant[rng.below(relevant.size())];
    const Election sample = electra::normalize_sample(elections[source], a.m, a.n, rng.next());
    const std::string path = (fs::path(g.out) / ("normalized_" + counter(k, count) + ".soc")).string();
    with_file(path, [&] { electra::write_election_file(path, sample); });
    return files[source].path;
  });

  Output manifest((fs::path(g.out) / "manifest.csv").string());
  manifest.stream() << "file,source\n";
  for (std::size_t k = 0; k < count; ++k) {
    manifest.stream() << "normalized_" << counter(k, count) << ".soc," << csv_field(sources[k]) << '\n';
  }
  manifest.finish();
  std::cout << json{{"inputs", files.size()}, {"relevant", relevant.size()}, {"written", count}}.dump() << '\n';
}

struct SampleArgs {
  std::string culture;
  int m = 15;
  int n = 30;
  int count = 1;
};

void sample(const SampleArgs& a, const GlobalOptions& g) {
  const auto culture = electra::parse_culture(a.culture);
  if (!culture) throw electra::Error("unknown culture '" + a.culture + "'");
  if (g.out.empty()) throw electra::Error("sample needs --out <directory>");
  fs::create_directories(g.out);
  const auto count = static_cast<std::size_t>(std::max(a.count, 0));
  map_inputs<int>(count, g.jobs, [&](std::size_t k) {
    const Election e = electra::sample_culture(*culture, a.m, a.n, electra::derive_seed(g.seed, k));
    const std::string path = (fs::path(g.out) / (a.culture + "_" + counter(k, count) + ".soc")).string();
    with_file(path, [&] { electra::write_election_file(path, e); });
    return 0;
  });
  std::cout << json{{"culture", a.culture}, {"written", count}}.dump() << '\n';
}

json stats_record(const InputFile& file, const Election& e) {
  const electra::SimilaritySummary s = electra::similarity_summary(e);
  const electra::ParameterBudget b = electra::parameter_budget(e.m(), s.kemeny_score, s.avg_kt);
  json parts = json::array();
  const electra::PartReport report = electra::part_intersections(e);
  for (const electra::PartIntersection& p : report.parts) {
    parts.push_back({{"part", part_name(p.part)},
                     {"first_position", p.first_position},
                     {"last_position", p.last_position},
                     {"pairwise", p.pairwise},
                     {"total", p.total},
                     {"restricted_avg_kt", p.restricted_avg_kt}});
  }
  return {{"file", file.path},
          {"id", file.id},
          {"m", e.m()},
          {"n", e.n()},
          {"max_kt", s.max_kt},
          {"avg_kt", s.avg_kt},
          {"disagreeing_pairs", s.disagreeing_pairs},
          {"kemeny_score", s.kemeny_score},
          {"parameter_budget",
           {{"two_pow_m", magnitude_json(b.two_pow_m)},
            {"pow153_k", magnitude_json(b.pow153_k)},
            {"pow16_d", magnitude_json(b.pow16_d)}}},
          {"parts_canonical", report.canonical},
          {"parts", parts}};
}

void stats(const std::vector<std::string>& args, const GlobalOptions& g) {
  const std::vector<InputFile> files = expand_inputs(args);
  const std::vector<json> records = map_inputs<json>(files.size(), g.jobs, [&](std::size_t i) {
    const Election e = load(files[i], g);
    return with_file(files[i].path, [&] { return stats_record(files[i], e); });
  });
  Output out(g.out);
  if (g.csv) {
    out.stream() << "file,m,n,max_kt,avg_kt,disagreeing_pairs,kemeny_score,two_pow_m,pow153_k,pow16_d\n";
    for (const json& r : records) {
      out.stream() << csv_field(r["file"]) << ',' << r["m"] << ',' << r["n"] << ',' << r["max_kt"] << ','
                   << number(r["avg_kt"]) << ',' << r["disagreeing_pairs"] << ',' << r["kemeny_score"] << ','
                   << csv_field(r["parameter_budget"]["two_pow_m"]["decimal"]) << ','
                   << csv_field(r["parameter_budget"]["pow153_k"]["decimal"]) << ','
                   << csv_field(r["parameter_budget"]["pow16_d"]["decimal"]) << '\n';
    }
  } else {
    for (const json& r : records) out.stream() << r.dump() << '\n';
  }
  out.finish();
}

struct TimeseriesArgs {
  std::vector<std::string> inputs;
  bool shuffle_baseline = false;
};

void timeseries(const TimeseriesArgs& a, const GlobalOptions& g) {
  const std::vector<InputFile> files = expand_inputs(a.inputs);
  struct Row {
    std::string series;
    electra::TemporalProfile profile;
  };
  const auto rows = map_inputs<std::vector<Row>>(files.size(), g.jobs, [&](std::size_t i) {
    const Election e = load(files[i], g);
    return with_file(files[i].path, [&] {
      std::vector<Row> r{{"original", electra::temporal_profile(e)}};
      if (a.shuffle_baseline) r.push_back({"shuffled", electra::temporal_profile(e, true, electra::derive_seed(g.seed, i))});
      return r;
    });
  });
  Output out(g.out);
  if (!g.json) {
    out.stream() << "file,series,avg_ordering_change,max_ordering_change,avg_fluctuation,kt_temporal_pcc,fluctuation\n";
  }
  for (std::size_t i = 0; i < files.size(); ++i) {
    for (const Row& row : rows[i]) {
      const electra::TemporalProfile& t = row.profile;
      if (g.json) {
        out.stream() << json{{"file", files[i].path},
                             {"series", row.series},
                             {"avg_ordering_change", t.avg_ordering_change},
                             {"max_ordering_change", t.max_ordering_change},
                             {"avg_fluctuation", t.avg_fluctuation},
                             {"kt_temporal_pcc", t.kt_temporal_pcc ? json(*t.kt_temporal_pcc) : json(nullptr)},
                             {"fluctuation_per_position", t.fluctuation_per_position}}
                            .dump()
                     << '\n';
        continue;
      }
      std::string fluctuation;
      for (std::size_t p = 0; p < t.fluctuation_per_position.size(); ++p) {
        if (p) fluctuation += ';';
        fluctuation += std::to_string(t.fluctuation_per_position[p]);
      }
      out.stream() << csv_field(files[i].path) << ',' << row.series << ',' << number(t.avg_ordering_change) << ','
                   << t.max_ordering_change << ',' << number(t.avg_fluctuation) << ','
                   << (t.kt_temporal_pcc ? number(*t.kt_temporal_pcc) : "") << ',' << fluctuation << '\n';
    }
  }
  out.finish();
}

}  // namespace

void register_data_commands(CLI::App& app, GlobalOptions& g) {
  static std::vector<std::string> validate_inputs;
  auto* v = app.add_subcommand("validate", "Parse election files and report their shape");
  v->add_option("inputs", validate_inputs, "Files or directories")->required();
  v->callback([&g] { validate(validate_inputs, g); });

  static CompleteArgs complete_args;
  auto* c = app.add_subcommand("complete", "Reduce an incomplete election to a complete one (maximum-edge biclique)");
  c->add_option("input", complete_args.input, "Input election")->required();
  c->add_option("output", complete_args.output, "Output election")->required();
  c->add_option("--effort", complete_args.effort, "Number of heuristic starts")->check(CLI::PositiveNumber);
  c->callback([&g] { complete(complete_args, g); });

  static NormalizeArgs normalize_args;
  auto* n = app.add_subcommand("normalize", "Draw fixed-size samples from relevant complete elections");
  n->add_option("inputs", normalize_args.inputs, "Files or directories")->required();
  n->add_option("--m", normalize_args.m, "Candidates per sample")->check(CLI::PositiveNumber);
  n->add_option("--n", normalize_args.n, "Voters per sample")->check(CLI::PositiveNumber);
  n->add_option("--count", normalize_args.count, "Number of samples")->check(CLI::NonNegativeNumber);
  n->callback([&g] { normalize(normalize_args, g); });

  static SampleArgs sample_args;
  auto* s = app.add_subcommand("sample", "Write synthetic elections from a culture");
  s->add_option("--culture", sample_args.culture, "impartial, walsh_sp, conitzer_sp, identity or antagonism")->required();
  s->add_option("--m", sample_args.m, "Candidates")->check(CLI::PositiveNumber);
  s->add_option("--n", sample_args.n, "Voters")->check(CLI::PositiveNumber);
  s->add_option("--count", sample_args.count, "Number of elections")->check(CLI::NonNegativeNumber);
  s->callback([&g] { sample(sample_args, g); });

  static std::vector<std::string> stats_inputs;
  auto* st = app.add_subcommand("stats", "Similarity measures, parameter budgets and part intersections per file");
  st->add_option("inputs", stats_inputs, "Files or directories")->required();
  st->callback([&g] { stats(stats_inputs, g); });

  static TimeseriesArgs timeseries_args;
  auto* t = app.add_subcommand("timeseries", "Temporal change measures along the vote order");
  t->add_option("inputs", timeseries_args.inputs, "Files or directories")->required();
  t->add_flag("--shuffle-baseline", timeseries_args.shuffle_baseline, "Also report a randomly reordered baseline");
  t->callback([&g] { timeseries(timeseries_args, g); });
}

}  // namespace cli
