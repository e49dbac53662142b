#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "inose/curve.hpp"
#include "inose/errors.hpp"
#include "inose/lattice.hpp"
#include "inose/serialize.hpp"
#include "inose/zerocycle.hpp"

namespace inose {

enum class JobKind { Section, Curve, Sweep, Lattice, Zerocycle, Battery };

inline const char* job_kind_name(JobKind k) {
  switch (k) {
    case JobKind::Section: return "section";
    case JobKind::Curve: return "curve";
    case JobKind::Sweep: return "sweep";
    case JobKind::Lattice: return "lattice";
    case JobKind::Zerocycle: return "zerocycle";
    case JobKind::Battery: return "battery";
  }
  return "unknown";
}

struct JobSpec {
  JobKind kind;
  json params;  // canonical parameter object
};

namespace detail {

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::InvalidSpec, "cannot write " + path.string());
  out << content;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::InvalidSpec, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Run tasks 0..count-1 on `jobs` threads; each task writes only its own
// slot, so the merged output is independent of the schedule.
template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const int workers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), count));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace detail

// Stable id: the kind plus a 64-bit digest of the canonical parameter dump.
inline std::string job_id(const JobSpec& spec) {
  return std::string(job_kind_name(spec.kind)) + "-" +
         detail::hex64(detail::fnv1a64(spec.params.dump()));
}

// --- sweep -----------------------------------------------------------------

struct SweepRow {
  Rational a, b;
  Quadruple quad;
  long long n = 0;
  bool ok = false;
  long long genus = 0;      // valid when ok
  bool anomaly = false;     // ok && genus < 4n - 2
  std::string error;        // error name when !ok
};

struct SweepReport {
  std::vector<SweepRow> rows;
  long long anomaly_count = 0;
  long long error_count = 0;
  std::string csv;
  std::string text;
};

// Every quadruple with 1 <= n <= n_max, each exactly once, ordered by
// (n, p, q, r, s).
inline std::vector<Quadruple> quadruples_up_to(long long n_max) {
  const long long bound = enumeration_bound(n_max);
  std::vector<std::pair<long long, Quadruple>> found;
  for (long long p = -bound; p <= bound; ++p)
    for (long long q = -bound; q <= bound; ++q)
      for (long long r = -bound; r <= bound; ++r)
        for (long long s = -bound; s <= bound; ++s) {
          const Quadruple quad{p, q, r, s};
          const long long n = n_invariant(quad);
          if (n >= 1 && n <= n_max) found.emplace_back(n, quad);
        }
  std::stable_sort(found.begin(), found.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Quadruple> out;
  out.reserve(found.size());
  for (auto& [n, quad] : found) out.push_back(quad);
  return out;
}

inline SweepReport sweep(const std::vector<PencilConfig>& configs, long long n_max, int jobs) {
  if (n_max < 1) fail(ErrorCode::InvalidSpec, "sweep needs n_max >= 1");
  if (configs.empty()) fail(ErrorCode::InvalidSpec, "sweep needs at least one config");
  const std::vector<Quadruple> quads = quadruples_up_to(n_max);

  SweepReport report;
  report.rows.resize(configs.size() * quads.size());
  detail::parallel_for(report.rows.size(), jobs, [&](std::size_t idx) {
    const PencilConfig& cfg = configs[idx / quads.size()];
    const Quadruple& quad = quads[idx % quads.size()];
    SweepRow row;
    row.a = cfg.a();
    row.b = cfg.b();
    row.quad = quad;
    row.n = n_invariant(quad);
    try {
      const HyperellipticModel model = build_model(cfg, quad);
      row.ok = true;
      row.genus = model.genus;
      row.anomaly = !model.genus_is_expected;
    } catch (const Error& e) {
      row.ok = false;
      row.error = error_name(e.code());
    }
    report.rows[idx] = std::move(row);
  });

  std::ostringstream csv, text;
  csv << "a,b,p,q,r,s,n,genus,expected,anomaly\n";
  text << "a\tb\tp\tq\tr\ts\tn\tgenus\texpected\tanomaly\n";
  for (const SweepRow& row : report.rows) {
    const long long expected = 4 * row.n - 2;
    const std::string genus_cell = row.ok ? std::to_string(row.genus) : "?";
    std::string anomaly_cell;
    if (!row.ok) {
      anomaly_cell = "error:" + row.error;
      ++report.error_count;
    } else {
      anomaly_cell = row.anomaly ? "1" : "0";
      if (row.anomaly) ++report.anomaly_count;
    }
    csv << row.a << "," << row.b << "," << row.quad.p << "," << row.quad.q << "," << row.quad.r
        << "," << row.quad.s << "," << row.n << "," << genus_cell << "," << expected << ","
        << anomaly_cell << "\n";
    text << row.a << "\t" << row.b << "\t" << row.quad.p << "\t" << row.quad.q << "\t"
         << row.quad.r << "\t" << row.quad.s << "\t" << row.n << "\t" << genus_cell << "\t"
         << expected << "\t" << anomaly_cell << "\n";
  }
  report.csv = csv.str();
  report.text = text.str();
  return report;
}

inline json to_json(const SweepReport& report) {
  json rows = json::array();
  for (const SweepRow& row : report.rows) {
    json r{{"a", to_json(row.a)}, {"b", to_json(row.b)},     {"quad", to_json(row.quad)},
           {"n", row.n},          {"expected", 4 * row.n - 2}};
    if (row.ok) {
      r["genus"] = row.genus;
      r["anomaly"] = row.anomaly;
    } else {
      r["error"] = row.error;
    }
    rows.push_back(std::move(r));
  }
  return json{{"rows", std::move(rows)},
              {"anomaly_count", report.anomaly_count},
              {"error_count", report.error_count}};
}

// --- job runner ------------------------------------------------------------

struct JobOutcome {
  std::string id;
  json record;
  std::vector<std::string> files;  // persisted file names, relative to out_dir
  int exit_code = 0;               // 3 when a zerocycle target stayed undecided
};

namespace detail {

inline void update_index(const std::filesystem::path& out_dir, const std::string& id,
                         const std::vector<std::string>& files, JobKind kind) {
  const std::filesystem::path index_path = out_dir / "index.json";
  json index = json::object();
  if (std::filesystem::exists(index_path)) {
    try {
      index = json::parse(read_file(index_path));
      if (!index.is_object()) index = json::object();
    } catch (...) {
      index = json::object();
    }
  }
  index[id] = json{{"kind", job_kind_name(kind)}, {"files", files}};
  write_file(index_path, index.dump(2) + "\n");
}

}  // namespace detail

inline JobOutcome run_job(const JobSpec& spec, const std::string& out_dir, int jobs = 1) {
  JobOutcome outcome;
  outcome.id = job_id(spec);
  std::vector<std::pair<std::string, std::string>> extra_files;

  switch (spec.kind) {
    case JobKind::Section: {
      const PencilConfig cfg = config_from_json(spec.params);
      const Quadruple quad = quadruple_from_json(spec.params.at("quad"));
      const PencilPoint point = section_from_quadruple(cfg, quad);
      outcome.record = json{{"config", to_json(cfg)},
                            {"quad", to_json(quad)},
                            {"n", n_invariant(quad)},
                            {"section", to_json(point)}};
      break;
    }
    case JobKind::Curve: {
      const PencilConfig cfg = config_from_json(spec.params);
      const Quadruple quad = quadruple_from_json(spec.params.at("quad"));
      const HyperellipticModel model = build_model(cfg, quad);
      std::vector<WitnessRecord> harvest;
      if (spec.params.contains("harvest_bound"))
        harvest = harvest_witnesses(model, spec.params.at("harvest_bound").get<long long>());
      outcome.record = to_json(make_record(model, std::move(harvest)));
      break;
    }
    case JobKind::Lattice: {
      const std::string op = spec.params.at("op").get<std::string>();
      const long long n = spec.params.at("n").get<long long>();
      if (op == "count") {
        const RepresentationCount counts = count_representations(n);
        outcome.record = json{{"n", n}, {"brute", counts.brute}, {"formula", counts.formula}};
      } else if (op == "find") {
        const RepresentationCount counts = count_representations(n);
        outcome.record = json{{"n", n},
                              {"quad", to_json(find_representation(n))},
                              {"brute", counts.brute},
                              {"formula", counts.formula}};
      } else {
        fail(ErrorCode::InvalidSpec, "lattice op must be count or find");
      }
      break;
    }
    case JobKind::Zerocycle: {
      const std::string file = spec.params.at("file").get<std::string>();
      json parsed;
      try {
        parsed = json::parse(detail::read_file(file));
      } catch (const json::exception& e) {
        fail(ErrorCode::InvalidSpec, std::string("bad witness file: ") + e.what());
      }
      const ZerocycleJob job = zerocycle_job_from_json(parsed);
      json targets = json::array();
      long long undecided = 0;
      for (const auto& [c, d] : job.targets) {
        json c_json = json::array(), d_json = json::array();
        for (const auto& r : c) c_json.push_back(to_json(r));
        for (const auto& r : d) d_json.push_back(to_json(r));
        json entry{{"c", std::move(c_json)}, {"d", std::move(d_json)}};
        const auto cert = certify_vanishing(job.witnesses, c, d);
        if (cert) {
          entry["status"] = "certified";
          entry["certificate"] = to_json(*cert);
        } else {
          entry["status"] = "undecided";
          ++undecided;
        }
        targets.push_back(std::move(entry));
      }
      outcome.record = json{{"m", job.witnesses.m},
                            {"file", file},
                            {"targets", std::move(targets)},
                            {"undecided_count", undecided},
                            {"span_rank", span_rank(job.witnesses)}};
      if (undecided > 0) outcome.exit_code = 3;
      break;
    }
    case JobKind::Sweep: {
      std::vector<PencilConfig> configs;
      for (const auto& c : spec.params.at("configs")) configs.push_back(config_from_json(c));
      const long long n_max = spec.params.at("n_max").get<long long>();
      const SweepReport report = sweep(configs, n_max, jobs);
      outcome.record = to_json(report);
      extra_files.emplace_back(outcome.id + ".csv", report.csv);
      extra_files.emplace_back(outcome.id + ".txt", report.text);
      break;
    }
    case JobKind::Battery:
      fail(ErrorCode::InvalidSpec, "battery jobs run through run_battery_job");
  }

  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  const std::string main_file = outcome.id + ".json";
  detail::write_file(dir / main_file, outcome.record.dump(2) + "\n");
  outcome.files.push_back(main_file);
  for (const auto& [name, content] : extra_files) {
    detail::write_file(dir / name, content);
    outcome.files.push_back(name);
  }
  detail::update_index(dir, outcome.id, outcome.files, spec.kind);
  return outcome;
}

}  // namespace inose
