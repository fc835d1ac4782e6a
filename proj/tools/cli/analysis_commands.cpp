#include <filesystem>
#include <iostream>
#include <map>
#include <set>

#include "common.hpp"
#include "electra/domains.hpp"
#include "electra/mapel.hpp"
#include "electra/rules.hpp"

namespace cli {

using electra::Election;

namespace {

std::vector<Election> load_all(const std::vector<InputFile>& files, const GlobalOptions& g) {
  return map_inputs<Election>(files.size(), g.jobs, [&](std::size_t i) {
    Election e = load(files[i], g);
    with_file(files[i].path, [&] { e.require_complete(); });
    return e;
  });
}

// File stems, or full paths when two inputs share a stem.
std::vector<std::string> point_ids(const std::vector<InputFile>& files) {
  std::set<std::string> seen;
  bool clash = false;
  for (const InputFile& f : files) clash = clash || !seen.insert(f.id).second;
  std::vector<std::string> ids;
  for (const InputFile& f : files) ids.push_back(clash ? f.path : f.id);
  return ids;
}

electra::DistanceMatrix distances_of(const std::vector<InputFile>& files, bool compass, const GlobalOptions& g) {
  const std::vector<Election> elections = load_all(files, g);
  const std::vector<std::string> ids = point_ids(files);
  std::vector<electra::MapPoint> points;
  for (std::size_t i = 0; i < files.size(); ++i) {
    points.push_back({ids[i], files[i].tag, electra::frequency_matrix(elections[i])});
  }
  return electra::distance_matrix(std::move(points), compass, g.jobs);
}

struct MapArgs {
  std::vector<std::string> inputs;
  bool compass = false;
  int iterations = 1000;
};

void map(const MapArgs& a, const GlobalOptions& g) {
  const electra::DistanceMatrix d = distances_of(expand_inputs(a.inputs), a.compass, g);
  const electra::EmbeddedMap layout = electra::embed_map(d, {a.iterations, g.seed});
  Output out(g.out);
  if (g.json) {
    json points = json::array();
    for (int i = 0; i < d.size; ++i) {
      const auto& [x, y] = layout.points[static_cast<std::size_t>(i)];
      points.push_back({{"id", d.labels[static_cast<std::size_t>(i)]}, {"x", x}, {"y", y},
                        {"dataset_tag", d.tags[static_cast<std::size_t>(i)]}});
    }
    out.stream() << json{{"stress", layout.stress}, {"points", points}}.dump() << '\n';
  } else {
    out.stream() << "id,x,y,dataset_tag\n";
    for (int i = 0; i < d.size; ++i) {
      const auto& [x, y] = layout.points[static_cast<std::size_t>(i)];
      out.stream() << csv_field(d.labels[static_cast<std::size_t>(i)]) << ',' << number(x) << ',' << number(y) << ','
                   << csv_field(d.tags[static_cast<std::size_t>(i)]) << '\n';
    }
  }
  out.finish();
}

struct DistancesArgs {
  std::vector<std::string> inputs;
  bool compass = false;
  std::string groups;
};

void distances(const DistancesArgs& a, const GlobalOptions& g) {
  const electra::DistanceMatrix d = distances_of(expand_inputs(a.inputs), a.compass, g);
  const auto averages = d.group_averages();
  Output out(g.out);
  if (g.json) {
    json rows = json::array();
    for (int i = 0; i < d.size; ++i) {
      json row = json::array();
      for (int j = 0; j < d.size; ++j) row.push_back(d(i, j));
      rows.push_back(row);
    }
    json groups = json::array();
    for (const auto& [key, value] : averages) groups.push_back({{"a", key.first}, {"b", key.second}, {"average", value}});
    out.stream() << json{{"labels", d.labels}, {"tags", d.tags}, {"d", rows}, {"group_averages", groups}}.dump() << '\n';
  } else {
    out.stream() << "id";
    for (const std::string& label : d.labels) out.stream() << ',' << csv_field(label);
    out.stream() << '\n';
    for (int i = 0; i < d.size; ++i) {
      out.stream() << csv_field(d.labels[static_cast<std::size_t>(i)]);
      for (int j = 0; j < d.size; ++j) out.stream() << ',' << number(d(i, j));
      out.stream() << '\n';
    }
  }
  out.finish();
  if (!a.groups.empty()) {
    Output groups(a.groups);
    groups.stream() << "tag_a,tag_b,average\n";
    for (const auto& [key, value] : averages) {
      groups.stream() << csv_field(key.first) << ',' << csv_field(key.second) << ',' << number(value) << '\n';
    }
    groups.finish();
  }
}

json tree_json(const electra::PartitionTree& tree) {
  json children = json::array();
  for (const auto& child : tree.children) children.push_back(tree_json(child));
  return {{"candidates", tree.candidates}, {"children", children}};
}

json certificate_json(const electra::Certificate& cert) {
  if (const auto* axis = std::get_if<electra::Axis>(&cert)) return {{"axis", axis->order}};
  if (const auto* order = std::get_if<electra::VoterOrder>(&cert)) return {{"voter_order", order->voters}};
  if (const auto* tree = std::get_if<electra::PartitionTree>(&cert)) return {{"partition_tree", tree_json(*tree)}};
  return json::object();
}

json axis_statistics_json(const Election& e, const electra::Axis& axis) {
  const electra::AxisStatistics s = electra::axis_statistics(e, axis);
  return {{"top_choice_rank_histogram", s.top_choice_rank_histogram}, {"distinct_top_choices", s.distinct_top_choices}};
}

// Residual election of a deletion together with its certificate in residual indices.
std::pair<Election, electra::Certificate> residual(const Election& e, const electra::DeletionResult& r) {
  const bool voters = r.mode == electra::DeletionMode::voters;
  const int universe = voters ? e.n() : e.m();
  std::vector<int> kept;
  std::vector<int> index_in_residual(static_cast<std::size_t>(universe), -1);
  for (int x = 0; x < universe; ++x) {
    if (std::find(r.deleted.begin(), r.deleted.end(), x) != r.deleted.end()) continue;
    index_in_residual[static_cast<std::size_t>(x)] = static_cast<int>(kept.size());
    kept.push_back(x);
  }
  Election sub = voters ? electra::restrict(e, std::nullopt, kept) : electra::restrict(e, kept, std::nullopt);
  electra::Certificate cert = r.certificate;
  auto remap = [&](int& x) { x = index_in_residual[static_cast<std::size_t>(x)]; };
  if (auto* axis = std::get_if<electra::Axis>(&cert); axis && !voters) std::for_each(axis->order.begin(), axis->order.end(), remap);
  if (auto* order = std::get_if<electra::VoterOrder>(&cert); order && voters) {
    std::for_each(order->voters.begin(), order->voters.end(), remap);
  }
  return {std::move(sub), std::move(cert)};
}

struct DomainsArgs {
  std::vector<std::string> inputs;
  bool distances = false;
  std::optional<int> budget;
};

json domains_record(const InputFile& file, const Election& e, const DomainsArgs& a) {
  json record{{"file", file.path}, {"id", file.id}, {"m", e.m()}, {"n", e.n()}};
  json domains = json::object();
  for (electra::Domain d : electra::kAllDomains) {
    const auto cert = electra::recognize(e, d);
    json entry{{"member", cert.has_value()}};
    if (cert) entry.update(certificate_json(*cert));
    if (cert && d == electra::Domain::single_peaked) entry["axis_statistics"] = axis_statistics_json(e, std::get<electra::Axis>(*cert));
    if (cert && d == electra::Domain::single_crossing) {
      entry["changing_pairs_fraction"] = electra::changing_pairs_fraction(e, std::get<electra::VoterOrder>(*cert));
    }
    if (a.distances) {
      for (electra::DeletionMode mode : {electra::DeletionMode::voters, electra::DeletionMode::candidates}) {
        const electra::DeletionResult r = electra::deletion_distance(e, d, mode, a.budget);
        json dist{{"k", r.k}, {"exceeds_budget", r.exceeds_budget}};
        if (!r.exceeds_budget) {
          dist["deleted"] = r.deleted;
          dist.update(certificate_json(r.certificate));
          const auto [sub, sub_cert] = residual(e, r);
          if (d == electra::Domain::single_peaked) dist["residual_axis_statistics"] = axis_statistics_json(sub, std::get<electra::Axis>(sub_cert));
          if (d == electra::Domain::single_crossing) {
            dist["residual_changing_pairs_fraction"] =
                electra::changing_pairs_fraction(sub, std::get<electra::VoterOrder>(sub_cert));
          }
        }
        entry[electra::to_string(mode) + "_deletion"] = dist;
      }
    }
    domains[electra::to_string(d)] = entry;
  }
  record["domains"] = domains;
  return record;
}

void domains(const DomainsArgs& a, const GlobalOptions& g) {
  const std::vector<InputFile> files = expand_inputs(a.inputs);
  const std::vector<json> records = map_inputs<json>(files.size(), g.jobs, [&](std::size_t i) {
    const Election e = load(files[i], g);
    return with_file(files[i].path, [&] { return domains_record(files[i], e, a); });
  });
  Output out(g.out);
  if (g.csv) {
    out.stream() << "file,domain,member,voter_distance,candidate_distance\n";
    for (const json& r : records) {
      for (electra::Domain d : electra::kAllDomains) {
        const json& entry = r["domains"][electra::to_string(d)];
        auto distance = [&](const std::string& key) -> std::string {
          if (!entry.contains(key) || entry[key]["exceeds_budget"].get<bool>()) return "";
          return std::to_string(entry[key]["k"].get<int>());
        };
        out.stream() << csv_field(r["file"]) << ',' << electra::to_string(d) << ','
                     << (entry["member"].get<bool>() ? "true" : "false") << ',' << distance("voters_deletion") << ','
                     << distance("candidates_deletion") << '\n';
      }
    }
  } else {
    for (const json& r : records) out.stream() << r.dump() << '\n';
  }
  out.finish();
}

struct VennArgs {
  std::vector<std::string> inputs;
  std::optional<int> budget;
};

json optional_json(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }
json optional_json(const std::optional<int>& x) { return x ? json(*x) : json(nullptr); }

void venn(const VennArgs& a, const GlobalOptions& g) {
  const std::vector<InputFile> files = expand_inputs(a.inputs);
  const std::vector<Election> elections = load_all(files, g);
  std::vector<std::pair<std::string, Election>> named;
  for (std::size_t i = 0; i < files.size(); ++i) named.emplace_back(files[i].path, elections[i]);
  const electra::DomainReport report = electra::domain_report(named, a.budget, g.jobs);

  Output out(g.out);
  if (g.json) {
    static constexpr std::array<const char*, 3> kNames{"single_peaked", "single_crossing", "group_separable"};
    static constexpr std::array<const char*, 3> kPairs{"single_peaked/single_crossing", "single_peaked/group_separable",
                                                       "single_crossing/group_separable"};
    json rows = json::array();
    for (const electra::DomainRow& row : report.rows) {
      json member = json::object();
      for (std::size_t d = 0; d < electra::kAllDomains.size(); ++d) member[electra::to_string(electra::kAllDomains[d])] = row.member[d];
      json cand = json::object(), vot = json::object();
      for (std::size_t d = 0; d < 3; ++d) {
        cand[kNames[d]] = optional_json(row.candidate_distance[d]);
        vot[kNames[d]] = optional_json(row.voter_distance[d]);
      }
      rows.push_back({{"id", row.id}, {"member", member}, {"candidate_distance", cand}, {"voter_distance", vot}});
    }
    json venn = json::array();
    for (const electra::VennTable& t : report.venn) {
      venn.push_back({{"mode", electra::to_string(t.mode)}, {"threshold", t.threshold}, {"regions", t.regions}});
    }
    json cand_pcc = json::object(), vot_pcc = json::object();
    for (std::size_t p = 0; p < 3; ++p) {
      cand_pcc[kPairs[p]] = optional_json(report.candidate_distance_pcc[p]);
      vot_pcc[kPairs[p]] = optional_json(report.voter_distance_pcc[p]);
    }
    out.stream() << json{{"rows", rows}, {"venn", venn}, {"candidate_distance_pcc", cand_pcc}, {"voter_distance_pcc", vot_pcc}}.dump()
                 << '\n';
  } else {
    out.stream() << "mode,threshold,single_peaked,single_crossing,group_separable,count\n";
    for (const electra::VennTable& t : report.venn) {
      for (int region = 0; region < 8; ++region) {
        out.stream() << electra::to_string(t.mode) << ',' << t.threshold << ',' << (region & 1) << ',' << (region >> 1 & 1)
                     << ',' << (region >> 2 & 1) << ',' << t.regions[static_cast<std::size_t>(region)] << '\n';
      }
    }
  }
  out.finish();
}

struct RulesArgs {
  std::vector<std::string> inputs;
  std::vector<std::string> rules;
  bool pairwise = false;
};

struct Cell {
  std::string table, row, col;
  std::optional<double> value;
};

void rules(const RulesArgs& a, const GlobalOptions& g) {
  std::vector<electra::Rule> chosen;
  for (const std::string& name : a.rules) {
    const auto r = electra::parse_rule(name);
    if (!r) throw electra::Error("unknown rule '" + name + "'");
    chosen.push_back(*r);
  }
  if (chosen.empty()) chosen.assign(electra::kAllRules.begin(), electra::kAllRules.end());

  const std::vector<InputFile> files = expand_inputs(a.inputs);
  struct PerElection {
    std::vector<electra::RuleOutcome> outcomes;
    electra::CondorcetWinners condorcet;
    int m = 0;
  };
  const auto results = map_inputs<PerElection>(files.size(), g.jobs, [&](std::size_t i) {
    const Election e = load(files[i], g);
    return with_file(files[i].path, [&] {
      PerElection p;
      for (electra::Rule r : chosen) p.outcomes.push_back(electra::apply_rule(e, r));
      p.condorcet = electra::condorcet_winners(e);
      p.m = e.m();
      return p;
    });
  });

  const double total = static_cast<double>(results.size());
  std::vector<Cell> cells;
  long long strong = 0, weak = 0;
  for (const PerElection& p : results) {
    strong += p.condorcet.strong.has_value();
    weak += !p.condorcet.weak.empty();
  }
  cells.push_back({"condorcet", "strong", "fraction", strong / total});
  cells.push_back({"condorcet", "weak", "fraction", weak / total});

  for (std::size_t r = 0; r < chosen.size(); ++r) {
    for (bool is_strong : {true, false}) {
      long long admitting = 0, selected = 0;
      for (const PerElection& p : results) {
        std::vector<electra::Candidate> targets = p.condorcet.weak;
        if (is_strong) targets = p.condorcet.strong ? std::vector<electra::Candidate>{*p.condorcet.strong} : std::vector<electra::Candidate>{};
        if (targets.empty()) continue;
        ++admitting;
        const auto& w = p.outcomes[r].winners;
        selected += std::any_of(targets.begin(), targets.end(), [&](int c) { return std::binary_search(w.begin(), w.end(), c); });
      }
      cells.push_back({is_strong ? "efficiency_strong" : "efficiency_weak", electra::to_string(chosen[r]), "efficiency",
                       admitting ? std::optional<double>(static_cast<double>(selected) / admitting) : std::nullopt});
    }
  }

  long long without = 0;
  for (const PerElection& p : results) without += !p.condorcet.strong.has_value();
  for (std::size_t r = 0; r < chosen.size(); ++r) {
    long long tied = 0, tied_without = 0;
    for (const PerElection& p : results) {
      if (p.outcomes[r].winners.size() < 2) continue;
      ++tied;
      tied_without += !p.condorcet.strong.has_value();
    }
    cells.push_back({"ties", electra::to_string(chosen[r]), "overall", tied / total});
    cells.push_back({"ties", electra::to_string(chosen[r]), "no_strong_condorcet",
                     without ? std::optional<double>(static_cast<double>(tied_without) / without) : std::nullopt});
  }

  if (a.pairwise) {
    for (electra::WinnerMeasure measure : {electra::WinnerMeasure::lexicographic, electra::WinnerMeasure::nonempty_overlap,
                                           electra::WinnerMeasure::normalized_overlap}) {
      for (std::size_t x = 0; x < chosen.size(); ++x) {
        for (std::size_t y = 0; y < chosen.size(); ++y) {
          double sum = 0.0;
          for (const PerElection& p : results) sum += x == y ? 1.0 : electra::winner_agreement(p.outcomes[x], p.outcomes[y], measure);
          cells.push_back({"consensus_" + electra::to_string(measure), electra::to_string(chosen[x]),
                           electra::to_string(chosen[y]), sum / total});
        }
      }
    }
    for (std::size_t x = 0; x < chosen.size(); ++x) {
      for (std::size_t y = 0; y < chosen.size(); ++y) {
        double sum = 0.0;
        long long defined = 0;
        for (const PerElection& p : results) {
          const auto rho = electra::ranking_correlation(p.outcomes[x].ranking, p.outcomes[y].ranking, p.m);
          if (!rho) continue;
          sum += *rho;
          ++defined;
        }
        cells.push_back({"consensus_spearman", electra::to_string(chosen[x]), electra::to_string(chosen[y]),
                         defined ? std::optional<double>(sum / defined) : std::nullopt});
      }
    }
  }

  Output out(g.out);
  if (g.json) {
    json doc{{"elections", results.size()}};
    for (const Cell& c : cells) doc["tables"][c.table][c.row][c.col] = optional_json(c.value);
    out.stream() << doc.dump() << '\n';
  } else {
    out.stream() << "table,row,col,value\n";
    for (const Cell& c : cells) {
      out.stream() << c.table << ',' << c.row << ',' << c.col << ',' << (c.value ? number(*c.value) : "") << '\n';
    }
  }
  out.finish();
}

}  // namespace

void register_analysis_commands(CLI::App& app, GlobalOptions& g) {
  static MapArgs map_args;
  auto* m = app.add_subcommand("map", "Embed elections in the plane by positionwise distance");
  m->add_option("inputs", map_args.inputs, "Files or directories")->required();
  m->add_flag("--compass", map_args.compass, "Add compass elections and paths");
  m->add_option("--iterations", map_args.iterations, "Layout iterations")->check(CLI::PositiveNumber);
  m->callback([&g] { map(map_args, g); });

  static DistancesArgs distances_args;
  auto* d = app.add_subcommand("distances", "Pairwise positionwise distance matrix");
  d->add_option("inputs", distances_args.inputs, "Files or directories")->required();
  d->add_flag("--compass", distances_args.compass, "Add compass elections and paths");
  d->add_option("--groups", distances_args.groups, "Also write average distances between dataset tags to this CSV");
  d->callback([&g] { distances(distances_args, g); });

  static DomainsArgs domains_args;
  auto* dm = app.add_subcommand("domains", "Restricted-domain membership, certificates and deletion distances");
  dm->add_option("inputs", domains_args.inputs, "Files or directories")->required();
  dm->add_flag("--distances", domains_args.distances, "Compute voter and candidate deletion distances");
  dm->add_option("--max-budget", domains_args.budget, "Stop deletion searches beyond this many deletions")
      ->check(CLI::NonNegativeNumber);
  dm->callback([&g] { domains(domains_args, g); });

  static VennArgs venn_args;
  auto* v = app.add_subcommand("venn", "Counts of elections near each combination of domains");
  v->add_option("inputs", venn_args.inputs, "Files or directories")->required();
  v->add_option("--max-budget", venn_args.budget, "Stop deletion searches beyond this many deletions")
      ->check(CLI::NonNegativeNumber);
  v->callback([&g] { venn(venn_args, g); });

  static RulesArgs rules_args;
  auto* r = app.add_subcommand("rules", "Voting-rule winners, Condorcet statistics, ties and consensus");
  r->add_option("inputs", rules_args.inputs, "Files or directories")->required();
  r->add_option("--rules", rules_args.rules, "Subset of plurality, plurality_runoff, borda, copeland, hare, kemeny")
      ->delimiter(',');
  r->add_flag("--pairwise", rules_args.pairwise, "Add consensus matrices between rules");
  r->callback([&g] { rules(rules_args, g); });
}

}  // namespace cli
