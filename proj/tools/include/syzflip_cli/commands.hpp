#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "syzflip/corpus.hpp"

namespace syzflip::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitResource = 3;

struct CommandOptions {
  std::uint64_t seed = 0;
  int degree_cap = 40;
  std::size_t trials = 100;
  Field field = Field::rationals();
  /// Ideal and point names; empty selects the first declared.
  std::string ideal;
  std::string point;
  /// check-kd and vanish-scan: generator degree (default: the common degree).
  std::optional<int> degree;
  /// check-n2: normality bound (negative selects 2d + 2).
  int normality_bound = -1;
  std::vector<int> powers{1, 2};
  long window = 3;
  std::string variant = "little";
  long twist_low = -3;
  long twist_high = 3;
  std::string order = "grevlex";
  /// thresholds: parameters overriding those read from the ideal.
  std::optional<long> n, r, e, d;
  /// corpus: family and integer parameters.
  std::string family;
  std::vector<int> params;
  /// report-all over the built-in corpus instead of an input model.
  bool corpus = false;
  bool timing = false;
};

struct Outcome {
  nlohmann::json report;
  int exit_code = kExitOk;
};

const std::vector<std::string>& command_names();

/// Commands that run without an input model.
bool needs_input(const std::string& command, const CommandOptions& options);

/// Never throws for library errors: they become error reports with exit
/// codes 2 (input) or 3 (resource cap).
Outcome run_command(const std::string& command, const std::string& input_text,
                    const CommandOptions& options);

/// `json`: sorted keys, two-space indent. `text`: one `path: value` line per leaf.
std::string render(const Outcome& outcome, const std::string& format);

/// The corpus used by report-all: rational normal curves of degree 3 and 4,
/// v2(P2), P1 x P2 and a seeded complete intersection of two quadrics.
std::vector<CorpusEntry> default_corpus(const Field& field, std::uint64_t seed);

/// Input-grammar text for a corpus entry (ring R, ideal X).
std::string corpus_model(const CorpusEntry& entry);

std::uint64_t fnv1a(const std::string& text);

}  // namespace syzflip::cli
