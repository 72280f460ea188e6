#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "klc/field.hpp"
#include "klc/serialize.hpp"

namespace klc::cli {

enum class Output { Json, Csv };

struct RunConfig {
  int r = 1;
  std::optional<Poly3> modulus;
  Output output = Output::Json;
  std::optional<std::uint64_t> truncate;
  bool oracle = false;
  int hmax = 4;
  std::uint64_t seed = 0;
};

// Rows plus the verdict that decides the exit code.
struct RunResult {
  std::vector<json::Json> rows;
  bool ok = true;

  void add(json::Json row, bool passed = true) {
    rows.push_back(std::move(row));
    ok = ok && passed;
  }
  void append(RunResult other) {
    for (auto& r : other.rows) rows.push_back(std::move(r));
    ok = ok && other.ok;
  }
};

// Parallelism cap from KLC_THREADS (>= 1); defaults to the hardware thread count.
unsigned thread_cap();

// Runs every acceptance check for r = 1, 2 with full spectra and r = 3 with
// spectra truncated at the recursion order.
RunResult verify_all(const RunConfig& cfg);

}  // namespace klc::cli
