#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "jetbound/morse.hpp"
#include "jetbound/report.hpp"

namespace jetbound {

enum class OutputFormat { text, json, csv };
std::optional<OutputFormat> parse_format(std::string_view text);

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 2,
  kExitNoThreshold = 3,
  kExitInternal = 4,
};

struct RunConfig {
  int n = 2;
  int k = 2;
  GeometryKind geometry = GeometryKind::logarithmic_pair;
  std::optional<WeightVector> weights;
  OutputFormat format = OutputFormat::text;
  std::optional<std::filesystem::path> cache_dir;  // nullopt disables the cache
  std::size_t sweep_budget = 32;
  unsigned threads = 1;
  int table_max = 5;

  WeightVector effective_weights() const { return weights ? *weights : default_weights(k); }
};

// Runs fn(0..count-1) on up to `threads` workers; results are stored by index
// so the output never depends on scheduling.
template <class T>
std::vector<T> parallel_map(std::size_t count, unsigned threads, const std::function<T(std::size_t)>& fn);

// Report for cfg, served from the cache when possible.
MorseReport cached_report(const RunConfig& cfg, int n, int k, const WeightVector& a);

struct CommandResult {
  int exit_code = kExitOk;
};

CommandResult run_bound(const RunConfig& cfg, std::ostream& out);
CommandResult run_poly(const RunConfig& cfg, std::ostream& out);

struct TableCell {
  int n;
  int k;
  std::optional<Integer> threshold;
};
std::vector<TableCell> compute_table(const RunConfig& cfg);
CommandResult run_table(const RunConfig& cfg, std::ostream& out);

// Admissible weight vectors of length k in sweep order (|a|, then
// lexicographic), at most `limit` of them.
std::vector<WeightVector> enumerate_weights(int k, std::size_t limit);

struct SweepResult {
  std::size_t evaluated = 0;
  std::optional<MorseReport> best;
};
SweepResult sweep(const RunConfig& cfg);
CommandResult run_sweep(const RunConfig& cfg, std::ostream& out);

struct CheckResult {
  std::string name;
  int n = 0;
  bool passed = false;
  std::string detail;
};
// Intersection checks for n <= max_n: first Chern class identity, vanishing of the
// top coefficient for k < n, the u_1^n...u_n^n intersection, and positivity of
// the Morse leading coefficient at k = n.
std::vector<CheckResult> verification_suite(int max_n = 3);
CommandResult run_verify(const RunConfig& cfg, std::ostream& out);

template <class T>
std::vector<T> parallel_map(std::size_t count, unsigned threads, const std::function<T(std::size_t)>& fn) {
  std::vector<std::optional<T>> slots(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<T> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace jetbound
