#pragma once

#include <atomic>
#include <filesystem>
#include <functional>
#include <thread>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace knotmeta::cli {

enum class Command { kDet, kMetaCount, kMetaEnum, kMetaVerify, kTbRiley, kTbVerify, kTbCrosscheck, kApolyAnalyze, kSweep };
enum class Format { kTable, kJson, kCsv };

/// Exit codes of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInputError = 2;

struct RunConfig {
  Command command = Command::kDet;
  std::optional<std::filesystem::path> input_path;
  std::optional<long> p;
  std::optional<long> q;
  std::optional<long> p_max;
  std::optional<long> det;  // apoly-analyze: determinant for the multiplicity probe
  Format format = Format::kTable;
  bool general_t = false;
  bool small_flag = false;
  bool roots = false;  // tb-riley: approximate roots for display
};

std::optional<Command> parse_command(const std::string& name);
std::string command_name(Command c);
std::optional<Format> parse_format(const std::string& name);

/// Throws std::invalid_argument when a command-specific flag is missing.
void validate(const RunConfig& cfg);

/// Runs one command; the report goes to `out`, diagnostics to `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// One sweep row per valid (p, q) with 0 < q < p, p <= p_max, in (p, q) order.
struct SweepRow {
  long p = 0;
  long q = 0;
  long det = 0;
  long meta_count = 0;
  long riley_deg = 0;
  bool squarefree = false;
  bool relator_ok = false;
  bool longitude_ok = false;
  bool crosscheck_ok = false;
  std::string error;

  bool ok() const { return squarefree && relator_ok && longitude_ok && crosscheck_ok && error.empty(); }
  std::string name() const;
};

std::vector<std::pair<long, long>> sweep_pairs(long p_max);
SweepRow sweep_row(long p, long q);
std::vector<SweepRow> sweep(long p_max, unsigned threads);

inline constexpr const char* kSweepCsvHeader = "name,p,q,det,meta_count,riley_deg,squarefree,relator_ok,longitude_ok";

/// KNOTMETA_THREADS when set and positive, else the hardware concurrency.
unsigned thread_count();

/// Runs f(i) for i in [0, n) on `threads` workers; results keep index order.
template <class T>
std::vector<T> parallel_map(std::size_t n, unsigned threads, const std::function<T(std::size_t)>& f) {
  std::vector<T> out(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) out[i] = f(i);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads && t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace knotmeta::cli
